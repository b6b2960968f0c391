#pragma once

#include <array>
#include <string>

namespace shiftforge::robinson_detail {

struct CellMarks {
  enum class Kind { kCross, kArm };
  Kind kind = Kind::kArm;
  std::array<bool, 4> out{};  // principal arrow leaves through N, E, S, W
  char arrow = '+';
  bool vertical_border = false;
  bool horizontal_border = false;
  std::array<std::string, 4> side_label;  // N, E, S, W edge colors
  std::string role;
};

// Markings of cell (x, y), x, y >= 1, in the ideal configuration.
CellMarks cell_marks(long x, long y);

}  // namespace shiftforge::robinson_detail
