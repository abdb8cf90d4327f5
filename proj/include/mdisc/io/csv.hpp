#pragma once

#include <cstdio>
#include <ostream>
#include <sstream>
#include <type_traits>
#include <string>
#include <vector>

namespace mdisc {

/// Shortest round-trip decimal text for a double ("%.17g" trimmed by "%.15g"
/// when that already round-trips), so CSV output is stable and lossless.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  double back = 0.0;
  std::sscanf(buf, "%lf", &back);
  if (back != v) std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class CsvWriter {
public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void header(const std::vector<std::string>& cols) { row(cols); }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os_ << ',';
      os_ << cells[i];
    }
    os_ << '\n';
  }

  void comment(const std::string& text) { os_ << "# " << text << '\n'; }

private:
  std::ostream& os_;
};

template <class T>
std::string cell(const T& v) {
  if constexpr (std::is_floating_point_v<T>) {
    return format_double(static_cast<double>(v));
  } else if constexpr (std::is_same_v<T, bool>) {
    return v ? "1" : "0";
  } else if constexpr (std::is_arithmetic_v<T>) {
    return std::to_string(v);
  } else {
    return std::string(v);
  }
}

}  // namespace mdisc
