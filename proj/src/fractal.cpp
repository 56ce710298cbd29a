#include "fibword/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "fibword/fibonacci.hpp"

namespace fibword {

std::array<long long, 2> vector_recurrence(const VecPair& vp, int residue_mod_6) {
  const long long p = vp.w_minus_3[0], q = vp.w_minus_3[1];
  const long long r = vp.w_minus_6[0], s = vp.w_minus_6[1];
  if (residue_mod_6 == 1) return {2 * p - 2 * q - r + 2, 2 * p + 2 * q - s};
  if (residue_mod_6 == 4) return {2 * p + 2 * q - r - 2, -2 * p + 2 * q - s};
  throw std::domain_error("vector_recurrence is defined for residues 1 and 4 (mod 6)");
}

std::vector<VecEntry> vector_sequence(int n_max) {
  if (n_max < 7) throw std::domain_error("vector_sequence requires n_max >= 7");
  std::vector<VecEntry> out;
  out.push_back({4, {-2, -1}});
  out.push_back({7, {0, -6}});
  for (int n = 10; n <= n_max; n += 3) {
    const VecPair vp{out[out.size() - 1].v, out[out.size() - 2].v};
    out.push_back({n, vector_recurrence(vp, n % 6)});
  }
  while (!out.empty() && out.back().n > n_max) out.pop_back();
  return out;
}

double similarity_dimension(double copies, double scale) {
  if (!(copies > 1.0)) throw std::domain_error("similarity_dimension requires copies > 1");
  if (scale > 0.0 && scale < 1.0) scale = 1.0 / scale;
  if (!(scale > 1.0)) throw std::domain_error("similarity_dimension requires a nontrivial scale");
  return std::log(copies) / std::log(scale);
}

double segment_growth_ratio(int n) {
  if (n < 9) throw std::domain_error("segment_growth_ratio requires n >= 9");
  return static_cast<double>(fibonacci_number(n + 2)) / static_cast<double>(fibonacci_number(n - 1));
}

double scale_ratio(int n) {
  if (n % 3 != 1 || n < 13) throw std::domain_error("scale_ratio requires n = 1 (mod 3), n >= 13");
  const auto seq = vector_sequence(n);
  const auto& curr = seq[seq.size() - 1].v;
  const auto& prev = seq[seq.size() - 2].v;
  const double num = std::hypot(static_cast<double>(curr[0]), static_cast<double>(curr[1]));
  const double den = std::hypot(static_cast<double>(prev[0]), static_cast<double>(prev[1]));
  return num / den;
}

namespace {

// Cells of the grid (anchored at `anchor`, cell size `s`) crossed by the
// segment from a to b, accumulated into `cells`.
void rasterize_segment(Vec2 a, Vec2 b, Vec2 anchor, double s,
                       std::set<std::pair<long long, long long>>& cells) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double length = std::hypot(dx, dy);
  auto cell_of = [&](Vec2 p) {
    return std::pair<long long, long long>{
        static_cast<long long>(std::floor((p.x - anchor.x) / s)),
        static_cast<long long>(std::floor((p.y - anchor.y) / s))};
  };
  // Parametric marching: visit the cell at a dense set of points along the
  // segment, stepping well under one cell per sample.
  const int steps = std::max(1, static_cast<int>(std::ceil(length / (s * 0.25))));
  for (int i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps);
    cells.insert(cell_of({a.x + t * dx, a.y + t * dy}));
  }
}

}  // namespace

BoxCountResult box_count_dimension(const Path& p, std::vector<double> box_sizes) {
  if (p.vertices.size() < 2) throw std::domain_error("box counting needs a path with segments");
  std::sort(box_sizes.begin(), box_sizes.end(), std::greater<double>());
  box_sizes.erase(std::unique(box_sizes.begin(), box_sizes.end()), box_sizes.end());
  if (box_sizes.size() < 4) throw std::domain_error("box counting needs at least 4 scales");
  if (box_sizes.back() <= 0.0) throw std::domain_error("box sizes must be positive");
  if (box_sizes.front() / box_sizes.back() < 10.0) {
    throw std::domain_error("box sizes must span at least a decade");
  }

  const BBox box = bounding_box(p);
  BoxCountResult result;
  result.anchor = {box.min_x, box.min_y};

  for (double s : box_sizes) {
    std::set<std::pair<long long, long long>> cells;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      rasterize_segment(p.vertices[i], p.vertices[i + 1], {box.min_x, box.min_y}, s, cells);
    }
    result.scales.push_back({s, static_cast<long long>(cells.size())});
  }

  // Least squares on log N = d * log(1/s) + c.
  const auto m = static_cast<double>(result.scales.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& sc : result.scales) {
    const double x = std::log(1.0 / sc.box_size);
    const double y = std::log(static_cast<double>(sc.boxes));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  result.dimension = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double intercept = (sy - result.dimension * sx) / m;
  double rss = 0;
  for (const auto& sc : result.scales) {
    const double x = std::log(1.0 / sc.box_size);
    const double y = std::log(static_cast<double>(sc.boxes));
    const double e = y - (result.dimension * x + intercept);
    rss += e * e;
  }
  result.fit_residual = std::sqrt(rss / m);
  return result;
}

double bbox_ratio_limit(int n) {
  if (n % 3 != 1) throw std::domain_error("bbox_ratio_limit requires n = 1 (mod 3)");
  const Path path = trace(trim_last_two(n), double_letter_rule());
  const BBox box = bounding_box(path);
  if (box.width() <= 0.0) throw std::domain_error("degenerate bounding box");
  return box.height() / box.width();
}

PeriodicApprox periodic_approx(int k) {
  if (k % 6 != 1 || k < 7) {
    throw std::domain_error("periodic_approx requires k = 1 (mod 6), k >= 7");
  }
  PeriodicApprox out;
  out.segments = fibonacci_number(k + 2) / 2;
  const auto seq = vector_sequence(k);
  const auto& v = seq.back().v;  // (0, w): purely vertical drop
  out.scale = std::llabs(v[1]) + 1;
  out.dimension = std::log(static_cast<double>(out.segments)) /
                  std::log(static_cast<double>(out.scale));
  return out;
}

Path iterate_generator(const Path& generator, int iterations) {
  if (iterations < 0) throw std::domain_error("iterations must be non-negative");
  if (generator.vertices.size() < 2) throw std::domain_error("generator needs segments");
  const Vec2 start = generator.vertices.front();
  const Vec2 end = generator.vertices.back();
  if (start.x != 0.0 || start.y != 0.0 || end.y != 0.0 || end.x <= 0.0) {
    throw std::domain_error("generator must run from (0,0) to (d,0), d > 0");
  }
  const double span = end.x;

  std::vector<Vec2> current = {{0.0, 0.0}, {1.0, 0.0}};  // unit initiator
  for (int it = 0; it < iterations; ++it) {
    std::vector<Vec2> next;
    next.reserve((current.size() - 1) * (generator.vertices.size() - 1) + 1);
    next.push_back(current.front());
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      const Vec2 a = current[i];
      const Vec2 b = current[i + 1];
      // Affine map sending (0,0)->(a) and (span,0)->(b), no reflection.
      const double ux = (b.x - a.x) / span;
      const double uy = (b.y - a.y) / span;
      for (std::size_t j = 1; j < generator.vertices.size(); ++j) {
        const Vec2 g = generator.vertices[j];
        next.push_back({a.x + ux * g.x - uy * g.y, a.y + uy * g.x + ux * g.y});
      }
    }
    current = std::move(next);
  }

  Path path;
  path.rule_name = "generator";
  path.vertices = std::move(current);
  return path;
}

Path quarter_zigzag_generator() {
  Path path;
  path.rule_name = "quarter-zigzag";
  path.vertices = {{0.0, 0.0},   {0.25, 0.0},  {0.25, 0.25}, {0.5, 0.25},
                   {0.5, 0.0},   {0.5, -0.25}, {0.75, -0.25}, {0.75, 0.0},
                   {1.0, 0.0}};
  return path;
}

Path unit_segment_path() {
  Path path;
  path.rule_name = "segment";
  path.vertices = {{0.0, 0.0}, {1.0, 0.0}};
  return path;
}

}  // namespace fibword
