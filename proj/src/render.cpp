#include "lexspec/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <sstream>

namespace lexspec {

namespace {

constexpr int kCols = 60;
constexpr int kRows = 24;
constexpr double kPlot = 480.0;
constexpr double kMargin = 40.0;

void require_plane(const StepResolution& f) {
  if (f.dim() != 2) throw Error("rendering needs a two-dimensional resolution, got n = " + std::to_string(f.dim()));
}

char level_char(int level) {
  if (level < 10) return static_cast<char>('0' + level);
  if (level < 36) return static_cast<char>('a' + level - 10);
  return '#';
}

// Block id per cell: 0 for T_0, otherwise 1 + position in a level-major list.
std::vector<std::size_t> block_ids(const StepResolution& f, const BlockReport& report) {
  std::vector<std::size_t> ids(f.cell_count(), 0);
  std::size_t next = 1;
  for (const auto& level : report.blocks)
    for (const auto& b : level) {
      for (const auto& c : b.cells) ids[f.flat(c)] = next;
      ++next;
    }
  return ids;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string point_label(const ExtPoint& p) { return to_string(p); }

const std::array<const char*, 8> kFills = {"#f2f2f2", "#c6dbef", "#9ecae1", "#6baed6",
                                           "#4292c6", "#2171b5", "#08519c", "#08306b"};
const std::array<int, 8> kAnsi = {47, 46, 44, 42, 43, 45, 41, 40};

const char* fill_of(int level) { return kFills[static_cast<std::size_t>(level) % kFills.size()]; }

}  // namespace

Viewport viewport_of(const StepResolution& f) {
  require_plane(f);
  auto span = [&](std::size_t axis) {
    const auto& b = f.breakpoints(axis);
    if (b.empty()) return std::pair<Rational, Rational>(-1, 1);
    return std::pair<Rational, Rational>(b.front() - 1, b.back() + 1);
  };
  auto [xl, xh] = span(0);
  auto [yl, yh] = span(1);
  return {xl, xh, yl, yh};
}

std::string render_ascii(const StepResolution& f, const BlockReport& report, bool color) {
  Viewport v = viewport_of(f);
  const Rational dx = (v.x_hi - v.x_lo) / kCols, dy = (v.y_hi - v.y_lo) / kRows;
  std::vector<std::string> grid(kRows, std::string(kCols, ' '));
  std::vector<std::vector<int>> levels(kRows, std::vector<int>(kCols, 0));
  for (int r = 0; r < kRows; ++r)
    for (int c = 0; c < kCols; ++c) {
      Point s{v.x_lo + dx * c + dx / 2, v.y_hi - dy * r - dy / 2};
      int level = height_class(eval_F(f, s));
      levels[r][c] = level;
      grid[r][c] = level_char(level);
    }
  for (const auto& p : report.char_points()) {
    auto clamp_col = [&](const Endpoint& e) {
      if (!e.finite()) return 0;
      Rational pos = (e.value() - v.x_lo) / dx;
      return std::clamp(static_cast<int>(static_cast<double>(pos)), 0, kCols - 1);
    };
    auto clamp_row = [&](const Endpoint& e) {
      if (!e.finite()) return kRows - 1;
      Rational pos = (v.y_hi - e.value()) / dy;
      return std::clamp(static_cast<int>(static_cast<double>(pos)), 0, kRows - 1);
    };
    grid[clamp_row(p[1])][clamp_col(p[0])] = '*';
  }

  std::ostringstream out;
  out << "y " << to_string(v.y_hi) << "\n";
  for (int r = 0; r < kRows; ++r) {
    out << "|";
    for (int c = 0; c < kCols; ++c) {
      if (color)
        out << "\x1b[" << kAnsi[static_cast<std::size_t>(levels[r][c]) % kAnsi.size()] << ";30m" << grid[r][c]
            << "\x1b[0m";
      else
        out << grid[r][c];
    }
    out << "\n";
  }
  out << "+" << std::string(kCols, '-') << "\n";
  out << "y " << to_string(v.y_lo) << ", x from " << to_string(v.x_lo) << " to " << to_string(v.x_hi) << "\n";
  out << "digits are levels i of T_i; * marks a characteristic point\n";
  for (const auto& p : report.char_points()) out << "  * " << point_label(p) << "\n";
  return out.str();
}

std::string render_svg(const StepResolution& f, const BlockReport& report) {
  Viewport v = viewport_of(f);
  const double x0 = static_cast<double>(v.x_lo), x1 = static_cast<double>(v.x_hi);
  const double y0 = static_cast<double>(v.y_lo), y1 = static_cast<double>(v.y_hi);
  auto sx = [&](double x) { return kMargin + (std::clamp(x, x0, x1) - x0) / (x1 - x0) * kPlot; };
  auto sy = [&](double y) { return kMargin + (y1 - std::clamp(y, y0, y1)) / (y1 - y0) * kPlot; };
  auto coord = [](const Endpoint& e, double lo, double hi) {
    if (e.kind() == Endpoint::Kind::NegInf) return lo;
    if (e.kind() == Endpoint::Kind::PosInf) return hi;
    return static_cast<double>(e.value());
  };

  const int k = f.signature().k;
  std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
  const double legend_h = 20.0 * (k + 1) + 20.0;
  const double width = kPlot + 2 * kMargin + 160.0;
  const double height = std::max(kPlot + 2 * kMargin, legend_h + kMargin);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  out << "<g id=\"levels\" stroke=\"none\">\n";
  for (std::size_t i = 0; i < f.cell_count(); ++i) {
    CellIndex c = f.unflat(i);
    Box b = f.cell_box(c);
    int level = f.level(c);
    used[static_cast<std::size_t>(level)] = true;
    double l = sx(coord(b.dims()[0].lo(), x0, x1)), r = sx(coord(b.dims()[0].hi(), x0, x1));
    double t = sy(coord(b.dims()[1].hi(), y0, y1)), bot = sy(coord(b.dims()[1].lo(), y0, y1));
    out << "<rect x=\"" << fmt(l) << "\" y=\"" << fmt(t) << "\" width=\"" << fmt(r - l) << "\" height=\""
        << fmt(bot - t) << "\" fill=\"" << fill_of(level) << "\"/>\n";
  }
  out << "</g>\n";

  std::vector<std::size_t> ids = block_ids(f, report);
  out << "<g id=\"blocks\" stroke=\"#000000\" stroke-width=\"1.5\">\n";
  for (std::size_t i = 0; i < f.cell_count(); ++i) {
    CellIndex c = f.unflat(i);
    for (std::size_t axis = 0; axis < 2; ++axis) {
      if (c[axis] + 1 >= f.extent(axis)) continue;
      CellIndex nb = c;
      ++nb[axis];
      if (ids[i] == ids[f.flat(nb)]) continue;
      // Shared edge sits at breakpoint c[axis] of `axis`.
      double at = static_cast<double>(f.breakpoints(axis)[c[axis]]);
      Box b = f.cell_box(c);
      const Interval& other = b.dims()[1 - axis];
      if (axis == 0) {
        double lo = coord(other.lo(), y0, y1), hi = coord(other.hi(), y0, y1);
        out << "<line x1=\"" << fmt(sx(at)) << "\" y1=\"" << fmt(sy(lo)) << "\" x2=\"" << fmt(sx(at)) << "\" y2=\""
            << fmt(sy(hi)) << "\"/>\n";
      } else {
        double lo = coord(other.lo(), x0, x1), hi = coord(other.hi(), x0, x1);
        out << "<line x1=\"" << fmt(sx(lo)) << "\" y1=\"" << fmt(sy(at)) << "\" x2=\"" << fmt(sx(hi)) << "\" y2=\""
            << fmt(sy(at)) << "\"/>\n";
      }
    }
  }
  out << "</g>\n";

  out << "<rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin) << "\" width=\"" << fmt(kPlot) << "\" height=\""
      << fmt(kPlot) << "\" fill=\"none\" stroke=\"#555555\"/>\n";

  out << "<g id=\"points\" font-family=\"monospace\" font-size=\"11\">\n";
  for (const auto& p : report.char_points()) {
    double px = sx(coord(p[0], x0, x1)), py = sy(coord(p[1], y0, y1));
    out << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py) << "\" r=\"3.5\" fill=\"#d62728\"/>\n";
    out << "<text x=\"" << fmt(px + 5) << "\" y=\"" << fmt(py - 5) << "\">" << point_label(p) << "</text>\n";
  }
  out << "</g>\n";

  out << "<g id=\"legend\" font-family=\"monospace\" font-size=\"12\">\n";
  double ly = kMargin;
  const double lx = kPlot + 2 * kMargin;
  for (int i = 0; i <= k; ++i) {
    if (!used[static_cast<std::size_t>(i)]) continue;
    out << "<rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly) << "\" width=\"14\" height=\"14\" fill=\"" << fill_of(i)
        << "\" stroke=\"#000000\"/>\n";
    out << "<text x=\"" << fmt(lx + 20) << "\" y=\"" << fmt(ly + 11) << "\">T_" << i << "</text>\n";
    ly += 20;
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace lexspec
