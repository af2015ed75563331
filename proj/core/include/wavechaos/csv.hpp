#ifndef WAVECHAOS_CSV_HPP
#define WAVECHAOS_CSV_HPP

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavechaos {

/// Round-trip decimal formatting for doubles (shortest %.17g form is not
/// needed; 17 significant digits always round-trips and is locale-free).
inline std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

/// Minimal CSV emitter: header row first, then uniform-width rows.
class csv_writer {
public:
  explicit csv_writer(const std::string& path) : out_(path) {
    if (!out_) throw std::runtime_error("cannot open for writing: " + path);
  }

  void header(const std::vector<std::string>& names) {
    width_ = names.size();
    write_row(names);
  }

  void row(const std::vector<std::string>& cells) {
    if (width_ != 0 && cells.size() != width_)
      throw std::logic_error("csv row width mismatch");
    write_row(cells);
  }

private:
  void write_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  std::ofstream out_;
  std::size_t width_ = 0;
};

}  // namespace wavechaos

#endif
