#pragma once

// Minimal CSV emitter: header row, comma separated, LF endings, floats with 17
// significant digits so every value round-trips.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace zreg::csv {

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Writer {
 public:
  Writer(std::ostream& out, const std::vector<std::string>& header) : out_(out) { row(header); }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
    ++rows_;
  }

  // Data rows written so far, header excluded.
  std::size_t data_rows() const { return rows_ - 1; }

 private:
  std::ostream& out_;
  std::size_t rows_ = 0;
};

}  // namespace zreg::csv
