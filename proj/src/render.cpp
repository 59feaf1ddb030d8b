#include "catconv/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string_view>
#include <vector>

#include "catconv/bijections.hpp"
#include "catconv/triangle.hpp"

namespace catconv {
namespace {

constexpr int kStep = 30;
constexpr int kMargin = 40;
constexpr int kTextLine = 18;

constexpr std::array<std::string_view, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
};
constexpr std::string_view kWrapperColour = "#999999";

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string item_label(const SignedDyckPath& item) { return item.str(); }

struct Segment {
  std::size_t start;
  std::size_t end;
  std::size_t colour;
  std::string label;
};

class Svg {
 public:
  void line(int x1, int y1, int x2, int y2, std::string_view stroke, int width, std::string_view extra = {}) {
    body_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\""
          << stroke << "\" stroke-width=\"" << width << "\"";
    if (!extra.empty()) body_ << ' ' << extra;
    body_ << "/>\n";
  }
  void circle(int cx, int cy, int r, std::string_view fill, std::string_view stroke = "none") {
    body_ << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"" << fill << "\" stroke=\""
          << stroke << "\"/>\n";
  }
  void text(int x, int y, std::string_view content, std::string_view fill = "#000000",
            std::string_view anchor = "middle", int size = 14) {
    body_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"" << size
          << "\" text-anchor=\"" << anchor << "\" fill=\"" << fill << "\">" << escape(content) << "</text>\n";
  }
  void polyline(const std::vector<std::pair<int, int>>& pts, std::string_view stroke, int width) {
    body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) body_ << (i ? " " : "") << pts[i].first << ',' << pts[i].second;
    body_ << "\"/>\n";
  }

  std::string finish(int width, int height) const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n"
       << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  std::ostringstream body_;
};

int panel_width(const Path& p) { return 2 * kMargin + std::max<int>(static_cast<int>(p.length()), 1) * kStep; }

/// Draws grid, axis, path and intercepts with the top edge at `top`; returns the panel height.
int draw_panel(Svg& svg, const Path& p, int top, const std::vector<Segment>& segments, std::string_view title) {
  const std::vector<int> h = p.heights();
  const int hi = std::max(1, *std::max_element(h.begin(), h.end()));
  const int lo = std::min(-1, *std::min_element(h.begin(), h.end()));
  const int length = static_cast<int>(p.length());
  const int height = 2 * kMargin + (hi - lo) * kStep;
  const int axis_y = top + kMargin + hi * kStep;
  const auto x_of = [](std::size_t t) { return kMargin + static_cast<int>(t) * kStep; };
  const auto y_of = [&](int height_at) { return axis_y - height_at * kStep; };

  svg.text(kMargin, top + kTextLine, title, "#000000", "start");
  for (int t = 0; t <= length; ++t) svg.line(x_of(t), y_of(hi), x_of(t), y_of(lo), "#e6e6e6", 1);
  for (int v = lo; v <= hi; ++v) svg.line(x_of(0), y_of(v), x_of(length), y_of(v), "#e6e6e6", 1);
  svg.line(x_of(0), axis_y, x_of(std::max(length, 1)), axis_y, "#000000", 2);

  std::vector<std::size_t> colour_of(p.length(), kPalette.size());
  for (const Segment& s : segments)
    for (std::size_t t = s.start; t < s.end; ++t) colour_of[t] = s.colour % kPalette.size();
  for (std::size_t t = 0; t < p.length(); ++t) {
    const std::string_view stroke = colour_of[t] < kPalette.size() ? kPalette[colour_of[t]] : kWrapperColour;
    svg.line(x_of(t), y_of(h[t]), x_of(t + 1), y_of(h[t + 1]), stroke, 3, "stroke-linecap=\"round\"");
  }
  for (std::size_t t : x_intercepts(p)) svg.circle(x_of(t), axis_y, 4, "#000000");

  for (const Segment& s : segments) {
    const int mid = (x_of(s.start) + x_of(s.end)) / 2;
    int peak = 0;
    int trough = 0;
    for (std::size_t t = s.start; t <= s.end; ++t) {
      peak = std::max(peak, h[t]);
      trough = std::min(trough, h[t]);
    }
    const bool below = trough < 0 && peak <= 0;
    const int y = below ? y_of(trough) + kTextLine : y_of(peak) - 8;
    svg.text(mid, y, s.label, kPalette[s.colour % kPalette.size()]);
  }
  return height;
}

std::vector<Segment> chi_segments(const BalancedPath& b) {
  std::vector<Segment> out;
  const SignedSeq items = chi(b);
  const auto exs = excursions(b);
  for (std::size_t k = 0; k < exs.size(); ++k) out.push_back({exs[k].start, exs[k].end, k, item_label(items[k])});
  return out;
}

}  // namespace

std::string render_decomposition(const Path& p, DecompositionMap map) {
  Svg svg;
  if (map == DecompositionMap::chi) {
    const BalancedPath b(p);
    const int height = draw_panel(svg, p, 0, chi_segments(b), "chi: " + (p.empty() ? std::string("()") : p.str()));
    return svg.finish(panel_width(p), height + kTextLine);
  }

  const DyckPath d(p);
  const std::vector<PsiStep> trace = psi_trace(d);
  std::vector<Segment> segments;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const PsiStep& s = trace[k];
    segments.push_back({s.emitted_offset, s.emitted_offset + s.emitted.path.path().length(), k, item_label(s.emitted)});
  }
  int top = draw_panel(svg, p, 0, segments, "psi: " + (p.empty() ? std::string("()") : p.str()));

  // one line per split: U L D R and the emitted item
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const PsiStep& s = trace[k];
    const std::string line = "split " + std::to_string(k + 1) + ": L=(" + s.split.left.str() + ") R=(" +
                             s.split.right.str() + ") emit " + item_label(s.emitted);
    top += kTextLine;
    svg.text(kMargin, top, line, kPalette[k % kPalette.size()], "start", 12);
  }
  top += kTextLine / 2;

  const BalancedPath image = even_zeroed_from_dyck(d);
  const int lower = draw_panel(svg, image.path(), top, chi_segments(image),
                               "even-zeroed image: " + (image.path().empty() ? std::string("()") : image.str()));
  return svg.finish(panel_width(p), top + lower + kTextLine);
}

std::string render_triangle(std::size_t blocks, const TriangleRenderOptions& options) {
  const TriangleGrid grid = triangle(blocks);
  const int depth = static_cast<int>(grid.depth());
  std::size_t widest = 1;
  for (int t = 0; t <= depth; ++t)
    for (const ExactCount& c : grid.row(static_cast<std::size_t>(t))) widest = std::max(widest, c.to_string().size());
  const int dx = std::max(48, static_cast<int>(widest) * 8 + 16);
  const int dy = 28;
  const int width = 2 * kMargin + depth * dx;
  const int height = 2 * kMargin + 2 * depth * dy + kTextLine;
  const int axis_y = kMargin + kTextLine + depth * dy;
  const auto x_of = [&](int t) { return kMargin + t * dx; };
  const auto y_of = [&](int h) { return axis_y - h * dy; };

  Svg svg;
  svg.text(kMargin, kTextLine, "even-zeroed paths to each node, rows 0.." + std::to_string(depth), "#000000", "start");
  svg.line(x_of(0), axis_y, x_of(std::max(depth, 1)), axis_y, "#cccccc", 1);

  // edges first so labels sit on top
  for (int t = 1; t <= depth; ++t) {
    for (int h = -t; h <= t; h += 2) {
      if (TriangleGrid::is_forbidden(static_cast<std::size_t>(t), h)) continue;
      for (int from : {h - 1, h + 1}) {
        if (from < -(t - 1) || from > t - 1) continue;
        if (TriangleGrid::is_forbidden(static_cast<std::size_t>(t - 1), from)) continue;
        svg.line(x_of(t - 1), y_of(from), x_of(t), y_of(h), "#bbbbbb", 1);
      }
    }
  }
  for (int t = 0; t <= depth; ++t) {
    for (int h = -t; h <= t; h += 2) {
      const bool forbidden = TriangleGrid::is_forbidden(static_cast<std::size_t>(t), h);
      if (forbidden && options.omit_forbidden) continue;
      const std::string label = grid.label(static_cast<std::size_t>(t), h).to_string();
      const int x = x_of(t);
      const int y = y_of(h);
      svg.circle(x, y, 3, forbidden ? "#d62728" : "#1f77b4");
      svg.text(x, y - 6, label, forbidden ? "#d62728" : "#000000", "middle", 12);
      if (forbidden) {
        const int half = 4 * static_cast<int>(label.size()) + 4;
        svg.line(x - half, y - 10, x + half, y - 10, "#d62728", 1);
      }
    }
  }
  return svg.finish(width, height);
}

}  // namespace catconv
