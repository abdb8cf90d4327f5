#pragma once

#include "mdisc/core/frequency_set.hpp"
#include "mdisc/core/norms.hpp"
#include "mdisc/core/orthonormal_system.hpp"
#include "mdisc/core/point_set.hpp"
#include "mdisc/core/quadrature.hpp"
#include "mdisc/core/random.hpp"
#include "mdisc/core/trig_polynomial.hpp"
#include "mdisc/dictionaries/builders.hpp"
#include "mdisc/dictionaries/continuous.hpp"
#include "mdisc/dictionaries/delta_net.hpp"
#include "mdisc/dictionaries/dictionary.hpp"
#include "mdisc/greedy/greedy_run.hpp"
#include "mdisc/greedy/incremental.hpp"
#include "mdisc/greedy/oga.hpp"
#include "mdisc/greedy/rga.hpp"
#include "mdisc/greedy/sigma_curve.hpp"
#include "mdisc/greedy/sparsify.hpp"
#include "mdisc/entropy/covering.hpp"
#include "mdisc/entropy/entropy_curve.hpp"
#include "mdisc/io/csv.hpp"
#include "mdisc/io/json_io.hpp"
#include "mdisc/l1/certify.hpp"
#include "mdisc/l1/chaining.hpp"
#include "mdisc/l1/discrepancy.hpp"
#include "mdisc/l1/nikolskii.hpp"
#include "mdisc/l1/random_l1.hpp"
#include "mdisc/l2/bss.hpp"
#include "mdisc/l2/concentration.hpp"
#include "mdisc/l2/frobenius_rga.hpp"
#include "mdisc/l2/random_sampling.hpp"
#include "mdisc/l2/spectral.hpp"
