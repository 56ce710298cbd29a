#include "fibword/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fibword {

namespace {

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // normalise -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

class SvgBuilder {
 public:
  SvgBuilder(BBox box, const RenderStyle& style) : style_(style), box_(box) {
    width_ = box_.width() * style.scale + 2 * style.margin;
    height_ = box_.height() * style.scale + 2 * style.margin;
  }

  // Model space is y-up; SVG is y-down.
  double sx(double x) const { return (x - box_.min_x) * style_.scale + style_.margin; }
  double sy(double y) const { return (box_.max_y - y) * style_.scale + style_.margin; }

  void open(std::ostringstream& out) const {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width_)
        << "\" height=\"" << fmt(height_) << "\" viewBox=\"0 0 " << fmt(width_) << " "
        << fmt(height_) << "\">\n";
  }

  void polyline(std::ostringstream& out, const std::vector<Vec2>& pts, const std::string& color,
                double stroke_width) const {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << fmt(stroke_width) << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out << ' ';
      out << fmt(sx(pts[i].x)) << ',' << fmt(sy(pts[i].y));
    }
    out << "\"/>\n";
  }

  void polygon(std::ostringstream& out, const std::vector<Vec2>& pts,
               const std::string& fill) const {
    out << "<polygon fill=\"" << fill << "\" fill-opacity=\"0.45\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out << ' ';
      out << fmt(sx(pts[i].x)) << ',' << fmt(sy(pts[i].y));
    }
    out << "\"/>\n";
  }

  void line(std::ostringstream& out, Vec2 a, Vec2 b, const std::string& color, double width,
            bool dashed = false) const {
    out << "<line stroke=\"" << color << "\" stroke-width=\"" << fmt(width) << "\"";
    if (dashed) out << " stroke-dasharray=\"6,4\"";
    out << " x1=\"" << fmt(sx(a.x)) << "\" y1=\"" << fmt(sy(a.y)) << "\" x2=\"" << fmt(sx(b.x))
        << "\" y2=\"" << fmt(sy(b.y)) << "\"/>\n";
  }

  void cross(std::ostringstream& out, Vec2 c, const std::string& color) const {
    const double r = 5.0;
    out << "<path stroke=\"" << color << "\" stroke-width=\"1.5\" d=\"M " << fmt(sx(c.x) - r)
        << ' ' << fmt(sy(c.y) - r) << " L " << fmt(sx(c.x) + r) << ' ' << fmt(sy(c.y) + r)
        << " M " << fmt(sx(c.x) - r) << ' ' << fmt(sy(c.y) + r) << " L " << fmt(sx(c.x) + r)
        << ' ' << fmt(sy(c.y) - r) << "\"/>\n";
  }

  void text(std::ostringstream& out, double px, double py, const std::string& content) const {
    out << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(py)
        << "\" font-family=\"monospace\" font-size=\"10\">" << content << "</text>\n";
  }

 private:
  RenderStyle style_;
  BBox box_;
  double width_ = 0;
  double height_ = 0;
};

}  // namespace

std::string render_path_svg(const Path& p, const RenderStyle& style, const PathOverlays& overlays) {
  if (p.vertices.size() < 2) throw std::domain_error("cannot render a path without segments");
  const BBox box = bounding_box(p);
  SvgBuilder b(box, style);
  std::ostringstream out;
  b.open(out);
  if (overlays.bounding_box) {
    b.line(out, {box.min_x, box.min_y}, {box.max_x, box.min_y}, style.bbox_color, 1.0);
    b.line(out, {box.max_x, box.min_y}, {box.max_x, box.max_y}, style.bbox_color, 1.0);
    b.line(out, {box.max_x, box.max_y}, {box.min_x, box.max_y}, style.bbox_color, 1.0);
    b.line(out, {box.min_x, box.max_y}, {box.min_x, box.min_y}, style.bbox_color, 1.0);
  }
  if (overlays.entrance_exit_diagonal) {
    b.line(out, p.vertices.front(), p.vertices.back(), style.bbox_color, 1.0, true);
  }
  b.polyline(out, p.vertices, style.path_color, style.stroke_width);
  if (overlays.center_mark) b.cross(out, *overlays.center_mark, style.axis_color);
  out << "</svg>\n";
  return out.str();
}

std::string render_deviation_svg(const Word& w, const RenderStyle& style, bool fill_excursions,
                                 bool mirror_line) {
  const DeviationDiagram d = deviation_diagram(w);
  if (d.polyline.size() < 2) throw std::domain_error("cannot render an empty deviation diagram");

  BBox box{0, 0, 0, 0};
  for (const auto& v : d.polyline) {
    box.min_x = std::min(box.min_x, v.x);
    box.min_y = std::min(box.min_y, v.y);
    box.max_x = std::max(box.max_x, v.x);
    box.max_y = std::max(box.max_y, v.y);
  }
  box.min_y -= 1.0;  // room for the tally row

  SvgBuilder b(box, style);
  std::ostringstream out;
  b.open(out);

  if (fill_excursions) {
    // Split the polyline where x changes sign; each maximal one-sided
    // piece closes into a region against the x = 0 axis.
    std::vector<Vec2> region;
    int side = 0;
    auto flush = [&]() {
      if (region.size() >= 2) {
        std::vector<Vec2> poly = region;
        poly.push_back({0.0, region.back().y});
        poly.push_back({0.0, region.front().y});
        b.polygon(out, poly, style.fill_color);
      }
      region.clear();
    };
    const double eps = 1e-9;
    Vec2 prev = d.polyline.front();
    for (std::size_t i = 1; i < d.polyline.size(); ++i) {
      Vec2 curr = d.polyline[i];
      int s_prev = prev.x > eps ? 1 : (prev.x < -eps ? -1 : 0);
      int s_curr = curr.x > eps ? 1 : (curr.x < -eps ? -1 : 0);
      if (region.empty() && s_prev != 0) {
        region.push_back(prev);
        side = s_prev;
      }
      if (s_prev != 0 && s_curr != 0 && s_prev != s_curr) {
        region.push_back({0.0, prev.y});  // horizontal crossing, same y
        flush();
        region.push_back({0.0, curr.y});
        side = s_curr;
      }
      region.push_back(curr);
      if (s_curr == 0) {
        flush();
      }
      (void)side;
      prev = curr;
    }
    flush();
  }

  b.line(out, {0.0, box.max_y}, {0.0, box.min_y + 1.0}, style.axis_color, 1.0);
  b.polyline(out, d.polyline, style.path_color, style.stroke_width);

  if (mirror_line) {
    // Mirror through the fold of the central b of a palindromic word.
    long long bs = 0;
    for (char c : w.letters()) bs += c == 'b' ? 1 : 0;
    if (bs % 2 == 1) {
      long long seen = 0;
      for (const auto& c : d.controls) {
        if (c.tile != 'b') continue;
        ++seen;
        if (seen == (bs + 1) / 2) {
          const double x = c.x.to_double();
          b.line(out, {x, box.max_y}, {x, box.min_y + 1.0}, style.mirror_color, 1.0, true);
          break;
        }
      }
    }
  }

  for (const auto& [x, count] : d.tallies) {
    b.text(out, b.sx(x.to_double()) - 3.0, b.sy(box.min_y + 0.25), std::to_string(count));
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_growth_svg(const GrowthChart& chart, const RenderStyle& style) {
  std::ostringstream body;
  double offset = 0.0;
  double max_width = 0.0;

  std::vector<std::string> blocks;
  std::vector<double> heights;
  for (const auto& node : chart.nodes) {
    std::string svg = render_deviation_svg(node.word, style, true, false);
    blocks.push_back(std::move(svg));
  }

  // Stack the per-node documents: strip the xml/svg wrapper and translate.
  std::ostringstream out;
  std::vector<std::pair<std::string, std::pair<double, double>>> inner;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string& doc = blocks[i];
    const auto open_end = doc.find(">\n", doc.find("<svg"));
    const auto close = doc.rfind("</svg>");
    const auto w_pos = doc.find("width=\"");
    const auto h_pos = doc.find("height=\"");
    const double w = std::stod(doc.substr(w_pos + 7));
    const double h = std::stod(doc.substr(h_pos + 8));
    inner.emplace_back(doc.substr(open_end + 2, close - open_end - 2), std::make_pair(w, h));
    max_width = std::max(max_width, w);
  }

  const double label_height = 16.0;
  double total_height = 0.0;
  for (const auto& [content, size] : inner) total_height += size.second + label_height;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(max_width)
      << "\" height=\"" << fmt(total_height) << "\" viewBox=\"0 0 " << fmt(max_width) << " "
      << fmt(total_height) << "\">\n";
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const auto& node = chart.nodes[i];
    out << "<text x=\"4\" y=\"" << fmt(offset + 11.0)
        << "\" font-family=\"monospace\" font-size=\"11\">#" << i << " depth " << node.depth
        << " tiles " << node.word.size() << " " << node.word.letters() << "</text>\n";
    out << "<g transform=\"translate(0," << fmt(offset + label_height) << ")\">\n";
    out << inner[i].first;
    out << "</g>\n";
    offset += inner[i].second.second + label_height;
  }
  out << "</svg>\n";
  (void)body;
  return out.str();
}

}  // namespace fibword
