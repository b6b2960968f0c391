// Ideal Robinson configuration on the positive quadrant.
//
// Cell (x, y) with x, y >= 1 and v = 2-adic valuation:
//   v(x) == v(y)  cross; principal arrows leave through all four sides.
//   v(x) >  v(y)  arm with a vertical principal arrow, pointing away from the
//                 cross at the midpoint of its 2^(v(x)+1)-aligned interval;
//                 both horizontal half-lines point into the arm.
//   v(x) <  v(y)  the same, rotated.
// Level-k squares (k >= 1) have their center cross at v = k and corner
// crosses at distance 2^(k-1); their borders run through the cells of the
// ring, offset toward the center, with arrows pointing from the corners
// toward the middle of each side. Colors also carry (x mod 2, y mod 2) of
// the cell below or to the left of the edge.

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "robinson_internal.hpp"

namespace shiftforge::robinson_detail {

namespace {

int v2(long n) { return std::countr_zero(static_cast<unsigned long>(n)); }

// Border of the level-(v2(c)+1) square that runs along line `c` (a column
// for vertical borders, a row for horizontal ones), seen from the
// perpendicular coordinate `t`.
struct BorderInfo {
  bool present = false;
  long center = 0;      // coordinate of the square center across the line
  long middle = 0;      // coordinate of the side's midpoint along the line
  long half = 0;        // half side length, 2^(level-1)
};

BorderInfo border_at(long line, long t) {
  BorderInfo b;
  const int a = v2(line);
  const long half = 1L << a;
  const long up = line + half;
  const long down = line - half;
  b.center = (v2(up) == a + 1) ? up : down;
  b.half = half;
  // Midpoints along the line are coordinates with valuation exactly a + 1.
  const long period = 1L << (a + 2);
  const long offset = 1L << (a + 1);
  long k = (t - offset) / period;
  for (long cand = k - 1; cand <= k + 1; ++cand) {
    const long mid = cand * period + offset;
    if (t >= mid - half && t <= mid + half) {
      b.present = true;
      b.middle = mid;
      return b;
    }
  }
  return b;
}

// Marking on one side of a cell, for the edge shared with the neighbor.
// Principal arrow and border line are expressed in absolute directions.
struct EdgeMark {
  char axis;           // 'H' for north/south edges, 'V' for east/west edges
  int px, py;          // parity of the lower/left cell of the edge
  char principal;      // '^','v' on H edges, '>','<' on V edges
  char side_offset;    // '-', or 'E'/'W' on H edges, 'N'/'S' on V edges
  char side_dir;       // '-', or arrow direction along the border

  std::string label() const {
    std::ostringstream out;
    out << axis << px << py << principal << side_offset << side_dir;
    return out.str();
  }
};

long mod2(long n) { return ((n % 2) + 2) % 2; }

}  // namespace

CellMarks cell_marks(long x, long y) {
  const int a = v2(x), b = v2(y);
  CellMarks m;
  // Principal arrows: out[d] says whether the arrow leaves through side d.
  if (a == b) {
    m.kind = CellMarks::Kind::kCross;
    m.out = {true, true, true, true};
  } else if (a > b) {
    m.kind = CellMarks::Kind::kArm;
    const long period = 1L << (a + 1);
    const long base = (y >= 0 ? y / period : (y - period + 1) / period) * period;
    const long mid = base + (1L << a);
    const bool up = y > mid;
    m.out = {up, false, !up, false};
    m.arrow = up ? '^' : 'v';
  } else {
    m.kind = CellMarks::Kind::kArm;
    const long period = 1L << (b + 1);
    const long base = (x >= 0 ? x / period : (x - period + 1) / period) * period;
    const long mid = base + (1L << b);
    const bool right = x > mid;
    m.out = {false, right, false, !right};
    m.arrow = right ? '>' : '<';
  }

  // Vertical border in column x, horizontal border in row y.
  const BorderInfo vb = border_at(x, y);
  const BorderInfo hb = border_at(y, x);
  m.vertical_border = vb.present;
  m.horizontal_border = hb.present;

  const int parity_x = static_cast<int>(mod2(x)), parity_y = static_cast<int>(mod2(y));

  auto horizontal_edge = [&](long lower_y, bool out_up) {
    EdgeMark e{'H', parity_x, static_cast<int>(mod2(lower_y)), out_up ? '^' : 'v', '-', '-'};
    if (vb.present && lower_y >= vb.middle - vb.half && lower_y + 1 <= vb.middle + vb.half) {
      e.side_offset = vb.center > x ? 'E' : 'W';
      e.side_dir = lower_y < vb.middle ? '^' : 'v';
    }
    return e.label();
  };
  auto vertical_edge = [&](long left_x, bool out_right) {
    EdgeMark e{'V', static_cast<int>(mod2(left_x)), parity_y, out_right ? '>' : '<', '-', '-'};
    if (hb.present && left_x >= hb.middle - hb.half && left_x + 1 <= hb.middle + hb.half) {
      e.side_offset = hb.center > y ? 'N' : 'S';
      e.side_dir = left_x < hb.middle ? '>' : '<';
    }
    return e.label();
  };

  // North side: arrow points up iff it leaves through north.
  m.side_label[0] = horizontal_edge(y, m.out[0]);
  m.side_label[1] = vertical_edge(x, m.out[1]);
  m.side_label[2] = horizontal_edge(y - 1, !m.out[2]);
  m.side_label[3] = vertical_edge(x - 1, !m.out[3]);

  std::ostringstream role;
  if (m.kind == CellMarks::Kind::kCross) {
    const BorderInfo& h = hb;
    const BorderInfo& v = vb;
    role << "cross facing " << (h.center > y ? 'N' : 'S') << (v.center > x ? 'E' : 'W');
  } else {
    role << "arm " << m.arrow;
    if (vb.present) role << " vborder";
    if (hb.present) role << " hborder";
  }
  role << " parity " << parity_x << parity_y;
  m.role = role.str();
  return m;
}

}  // namespace shiftforge::robinson_detail
