#include "fibword/turtle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "fibword/fibonacci.hpp"
#include "fibword/legality.hpp"

namespace fibword {

namespace {

constexpr double kDegToRad = 0.017453292519943295;

// Heading indices, y-up plane: 0 down, 1 left, 2 up, 3 right. A clockwise
// quarter turn adds one.
constexpr std::array<std::array<int, 2>, 4> kDirs = {{{0, -1}, {-1, 0}, {0, 1}, {1, 0}}};

int heading_index(Vec2 h) {
  for (int i = 0; i < 4; ++i) {
    if (h.x == static_cast<double>(kDirs[i][0]) && h.y == static_cast<double>(kDirs[i][1])) return i;
  }
  return -1;
}

bool half_representable(double v, long long& out) {
  const double doubled = v * 2.0;
  if (doubled != std::nearbyint(doubled)) return false;
  out = static_cast<long long>(std::llround(doubled));
  return true;
}

double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

}  // namespace

TurtleAction TurtleAction::forward(Golden len) {
  if (len.sign() <= 0) throw std::invalid_argument("forward length must be positive");
  TurtleAction a;
  a.kind = Kind::Forward;
  a.length = len;
  return a;
}

TurtleAction TurtleAction::turn(double degrees) {
  TurtleAction a;
  a.kind = Kind::Turn;
  a.turn_degrees = degrees;
  return a;
}

bool TurtleAction::quarter_turn() const {
  return kind == Kind::Turn && std::fmod(turn_degrees, 90.0) == 0.0;
}

bool DrawingRule::exact() const {
  for (const auto& [token, list] : actions) {
    for (const auto& action : list) {
      if (action.kind == TurtleAction::Kind::Turn && !action.quarter_turn()) return false;
    }
  }
  return true;
}

DrawingRule identity_rule() {
  DrawingRule r;
  r.name = "identity";
  r.scheme = TokenScheme::PerLetter;
  r.actions["a"] = {TurtleAction::forward(Golden::phi())};
  r.actions["b"] = {TurtleAction::forward(Golden::unit(1))};
  return r;
}

DrawingRule to_and_fro_rule() {
  DrawingRule r = generalized_to_and_fro(180.0);
  r.name = "to-and-fro";
  return r;
}

DrawingRule generalized_to_and_fro(double angle_degrees) {
  DrawingRule r;
  r.name = "angle:" + std::to_string(angle_degrees);
  r.scheme = TokenScheme::PerLetter;
  r.actions["a"] = {TurtleAction::forward(Golden::phi())};
  r.actions["b"] = {TurtleAction::forward(Golden::half()), TurtleAction::turn(angle_degrees),
                    TurtleAction::forward(Golden::half())};
  return r;
}

DrawingRule double_letter_rule() {
  DrawingRule r;
  r.name = "double-letter";
  r.scheme = TokenScheme::PerDigram;
  r.actions["ab"] = {TurtleAction::forward(Golden::half()), TurtleAction::turn(-90.0),
                     TurtleAction::forward(Golden::half())};
  r.actions["aa"] = {TurtleAction::forward(Golden::unit(1))};
  r.actions["ba"] = {TurtleAction::forward(Golden::half()), TurtleAction::turn(90.0),
                     TurtleAction::forward(Golden::half())};
  return r;
}

DrawingRule odd_even_rule(int parity_base) {
  DrawingRule r;
  r.name = "odd-even";
  r.scheme = TokenScheme::PerLetterParity;
  r.parity_base = parity_base;
  r.actions["a0"] = {TurtleAction::forward(Golden::unit(1)), TurtleAction::turn(90.0)};
  r.actions["a1"] = {TurtleAction::forward(Golden::unit(1)), TurtleAction::turn(-90.0)};
  r.actions["b0"] = {TurtleAction::forward(Golden::unit(1))};
  r.actions["b1"] = {TurtleAction::forward(Golden::unit(1))};
  return r;
}

DrawingRule omega_rule() {
  DrawingRule r;
  r.name = "omega";
  r.scheme = TokenScheme::PerLetter;
  r.alphabet = Alphabet::dogleg();
  r.actions["F"] = {TurtleAction::forward(Golden::unit(1))};
  r.actions["L"] = {TurtleAction::turn(90.0)};   // L binds counterclockwise
  r.actions["R"] = {TurtleAction::turn(-90.0)};  // R binds clockwise
  return r;
}

std::vector<DrawingRule> builtin_rules() {
  return {identity_rule(), to_and_fro_rule(), double_letter_rule(), odd_even_rule(), omega_rule()};
}

DrawingRule rule_by_name(std::string_view name, int parity_base) {
  if (name == "identity") return identity_rule();
  if (name == "to-and-fro") return to_and_fro_rule();
  if (name == "double-letter") return double_letter_rule();
  if (name == "odd-even") return odd_even_rule(parity_base);
  if (name == "omega") return omega_rule();
  constexpr std::string_view kAnglePrefix = "angle:";
  if (name.substr(0, kAnglePrefix.size()) == kAnglePrefix) {
    const std::string degrees(name.substr(kAnglePrefix.size()));
    std::size_t used = 0;
    const double value = std::stod(degrees, &used);
    if (used != degrees.size()) throw std::invalid_argument("bad angle in rule name: " + degrees);
    return generalized_to_and_fro(value);
  }
  throw std::invalid_argument("unknown drawing rule: " + std::string(name));
}

std::vector<std::string> tokenize(const Word& w, const DrawingRule& rule) {
  if (!(w.alphabet() == rule.alphabet)) {
    throw std::invalid_argument("word alphabet does not match rule '" + rule.name + "'");
  }
  std::vector<std::string> tokens;
  const std::string& s = w.letters();
  switch (rule.scheme) {
    case TokenScheme::PerLetter:
      tokens.reserve(s.size());
      for (char c : s) tokens.emplace_back(1, c);
      break;
    case TokenScheme::PerDigram:
      if (s.size() % 2 != 0) {
        throw std::domain_error("digram rule needs an even number of letters, got " +
                                std::to_string(s.size()));
      }
      tokens.reserve(s.size() / 2);
      for (std::size_t i = 0; i < s.size(); i += 2) tokens.push_back(s.substr(i, 2));
      break;
    case TokenScheme::PerLetterParity:
      tokens.reserve(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        const char parity = static_cast<char>('0' + ((i + rule.parity_base) % 2));
        tokens.push_back(std::string(1, s[i]) + parity);
      }
      break;
  }
  return tokens;
}

Path trace(const Word& w, const DrawingRule& rule, Vec2 start, Vec2 heading) {
  Path path;
  path.rule_name = rule.name;
  path.tokens = tokenize(w, rule);
  path.initial_heading = heading;

  long long sx = 0, sy = 0;
  const int dir0 = heading_index(heading);
  const bool exact = rule.exact() && dir0 >= 0 && half_representable(start.x, sx) &&
                     half_representable(start.y, sy);

  GoldenVec epos{Golden::half(sx), Golden::half(sy)};
  int edir = std::max(dir0, 0);
  double fx = start.x;
  double fy = start.y;
  const double angle0 = std::atan2(heading.y, heading.x);
  double turned = 0.0;  // accumulated ccw degrees

  path.vertices.push_back(exact ? Vec2{epos.x.to_double(), epos.y.to_double()} : start);
  if (exact) {
    path.exact_vertices.push_back(epos);
    path.exact_initial_heading = kDirs[static_cast<std::size_t>(edir)];
  }

  for (const auto& token : path.tokens) {
    auto it = rule.actions.find(token);
    if (it == rule.actions.end()) {
      throw std::invalid_argument("rule '" + rule.name + "' has no action for token '" + token + "'");
    }
    const std::size_t span_begin = path.vertices.size() - 1;
    for (const auto& action : it->second) {
      if (action.kind == TurtleAction::Kind::Forward) {
        if (exact) {
          const auto& d = kDirs[static_cast<std::size_t>(edir)];
          epos.x += action.length.scaled(d[0]);
          epos.y += action.length.scaled(d[1]);
          path.exact_vertices.push_back(epos);
          path.vertices.push_back({epos.x.to_double(), epos.y.to_double()});
        } else {
          const double a = angle0 + turned * kDegToRad;
          const double len = action.length.to_double();
          fx += std::cos(a) * len;
          fy += std::sin(a) * len;
          path.vertices.push_back({fx, fy});
        }
      } else {
        turned += action.turn_degrees;
        if (exact) {
          const int quarters = static_cast<int>(std::llround(action.turn_degrees / 90.0));
          edir = ((edir - quarters) % 4 + 4) % 4;
        }
      }
    }
    path.token_spans.emplace_back(span_begin, path.vertices.size() - 1);
  }

  if (exact) {
    path.exact_final_heading = kDirs[static_cast<std::size_t>(edir)];
    path.final_heading = {static_cast<double>(kDirs[static_cast<std::size_t>(edir)][0]),
                          static_cast<double>(kDirs[static_cast<std::size_t>(edir)][1])};
  } else {
    const double a = angle0 + turned * kDegToRad;
    path.final_heading = {std::cos(a), std::sin(a)};
  }
  return path;
}

Trace1D trace_1d(const Word& w) {
  if (!(w.alphabet() == Alphabet::binary())) {
    throw std::invalid_argument("trace_1d expects a word over {a, b}");
  }
  Trace1D t;
  Golden pos;
  int dir = 1;
  auto move = [&](Golden step) {
    const Golden delta = step.scaled(dir);
    pos += delta;
    t.positions.push_back(pos);
    t.moves.push_back(delta);
  };
  for (char c : w.letters()) {
    if (c == 'a') {
      move(Golden::phi());
    } else {
      move(Golden::half());
      dir = -dir;
      move(Golden::half());
    }
  }
  t.final_direction = dir;
  return t;
}

Golden Trace1D::max_abs_position() const {
  Golden best;
  for (const auto& p : positions) {
    const Golden a = p.abs();
    if (best < a) best = a;
  }
  return best;
}

Vec2 displacement(const Path& p) {
  if (p.vertices.empty()) return {0.0, 0.0};
  return {p.vertices.back().x - p.vertices.front().x, p.vertices.back().y - p.vertices.front().y};
}

std::optional<GoldenVec> displacement_exact(const Path& p) {
  if (!p.exact()) return std::nullopt;
  return p.exact_vertices.back() - p.exact_vertices.front();
}

BBox bounding_box(const Path& p) {
  if (p.vertices.empty()) return {};
  BBox box{p.vertices[0].x, p.vertices[0].y, p.vertices[0].x, p.vertices[0].y};
  for (const auto& v : p.vertices) {
    box.min_x = std::min(box.min_x, v.x);
    box.min_y = std::min(box.min_y, v.y);
    box.max_x = std::max(box.max_x, v.x);
    box.max_y = std::max(box.max_y, v.y);
  }
  return box;
}

SymmetryResult half_turn_symmetry(const Path& p) {
  SymmetryResult result;
  if (p.vertices.size() < 2) return result;
  const std::size_t last = p.vertices.size() - 1;
  result.center = {(p.vertices.front().x + p.vertices.back().x) / 2.0,
                   (p.vertices.front().y + p.vertices.back().y) / 2.0};

  if (p.exact()) {
    const GoldenVec sum = p.exact_vertices.front() + p.exact_vertices.back();
    for (std::size_t i = 0; i <= last / 2; ++i) {
      if (!(p.exact_vertices[i] + p.exact_vertices[last - i] == sum)) return result;
    }
    result.symmetric = p.exact_initial_heading && p.exact_final_heading &&
                       *p.exact_initial_heading == *p.exact_final_heading;
    return result;
  }

  double scale = 1.0;
  for (const auto& v : p.vertices) scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
  const double tol = 1e-9 * scale;
  const double sx = p.vertices.front().x + p.vertices.back().x;
  const double sy = p.vertices.front().y + p.vertices.back().y;
  for (std::size_t i = 0; i <= last / 2; ++i) {
    if (std::abs(p.vertices[i].x + p.vertices[last - i].x - sx) > tol) return result;
    if (std::abs(p.vertices[i].y + p.vertices[last - i].y - sy) > tol) return result;
  }
  result.symmetric = dot(p.initial_heading, p.final_heading) > 1.0 - 1e-9;
  return result;
}

namespace {

struct ExactSeg {
  GoldenVec lo, hi;  // sorted along the segment's axis
  bool horizontal = false;
};

ExactSeg make_exact_seg(const GoldenVec& a, const GoldenVec& b) {
  ExactSeg s;
  if (a.y == b.y) {
    s.horizontal = true;
    s.lo = a.x <= b.x ? a : b;
    s.hi = a.x <= b.x ? b : a;
  } else if (a.x == b.x) {
    s.horizontal = false;
    s.lo = a.y <= b.y ? a : b;
    s.hi = a.y <= b.y ? b : a;
  } else {
    throw std::logic_error("exact intersection requires axis-aligned segments");
  }
  return s;
}

enum class Contact { None, Proper, Overlap, Touch };

Contact classify_exact(const ExactSeg& s1, const ExactSeg& s2) {
  if (s1.horizontal == s2.horizontal) {
    if (s1.horizontal) {
      if (!(s1.lo.y == s2.lo.y)) return Contact::None;
      const Golden lo = std::max(s1.lo.x, s2.lo.x, [](Golden a, Golden b) { return a < b; });
      const Golden hi = std::min(s1.hi.x, s2.hi.x, [](Golden a, Golden b) { return a < b; });
      if (hi < lo) return Contact::None;
      return lo < hi ? Contact::Overlap : Contact::Touch;
    }
    if (!(s1.lo.x == s2.lo.x)) return Contact::None;
    const Golden lo = std::max(s1.lo.y, s2.lo.y, [](Golden a, Golden b) { return a < b; });
    const Golden hi = std::min(s1.hi.y, s2.hi.y, [](Golden a, Golden b) { return a < b; });
    if (hi < lo) return Contact::None;
    return lo < hi ? Contact::Overlap : Contact::Touch;
  }
  const ExactSeg& h = s1.horizontal ? s1 : s2;
  const ExactSeg& v = s1.horizontal ? s2 : s1;
  const Golden xv = v.lo.x;
  const Golden yh = h.lo.y;
  if (xv < h.lo.x || h.hi.x < xv || yh < v.lo.y || v.hi.y < yh) return Contact::None;
  const bool x_interior = h.lo.x < xv && xv < h.hi.x;
  const bool y_interior = v.lo.y < yh && yh < v.hi.y;
  return (x_interior && y_interior) ? Contact::Proper : Contact::Touch;
}

Contact classify_float(Vec2 a1, Vec2 b1, Vec2 a2, Vec2 b2, double tol) {
  const Vec2 d1{b1.x - a1.x, b1.y - a1.y};
  const Vec2 d2{b2.x - a2.x, b2.y - a2.y};
  const Vec2 r{a2.x - a1.x, a2.y - a1.y};
  const double denom = cross(d1, d2);
  const double len1 = std::hypot(d1.x, d1.y);
  const double len2 = std::hypot(d2.x, d2.y);
  if (std::abs(denom) <= tol * len1 * len2) {
    // Parallel; collinear only if a2 sits on line 1.
    if (std::abs(cross(d1, r)) > tol * len1) return Contact::None;
    const double inv = 1.0 / (len1 * len1);
    double t0 = dot(r, d1) * inv;
    double t1 = dot({b2.x - a1.x, b2.y - a1.y}, d1) * inv;
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(0.0, t0);
    const double hi = std::min(1.0, t1);
    const double eps = tol / std::max(len1, 1e-300);
    if (hi < lo - eps) return Contact::None;
    if (hi - lo > eps) return Contact::Overlap;
    return Contact::Touch;
  }
  const double t = cross(r, d2) / denom;
  const double u = cross(r, d1) / denom;
  const double e1 = tol / std::max(len1, 1e-300);
  const double e2 = tol / std::max(len2, 1e-300);
  if (t < -e1 || t > 1.0 + e1 || u < -e2 || u > 1.0 + e2) return Contact::None;
  const bool interior = t > e1 && t < 1.0 - e1 && u > e2 && u < 1.0 - e2;
  return interior ? Contact::Proper : Contact::Touch;
}

}  // namespace

IntersectionReport self_intersections(const Path& p) {
  IntersectionReport report;
  const std::size_t n = p.segment_count();
  if (n < 2) return report;

  report.exact = p.exact();
  double scale = 1.0;
  for (const auto& v : p.vertices) scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
  const double tol = 1e-9 * scale;

  std::vector<ExactSeg> exact_segs;
  if (report.exact) {
    exact_segs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      exact_segs.push_back(make_exact_seg(p.exact_vertices[i], p.exact_vertices[i + 1]));
    }
  }

  // Sweep by min-x with a float bounding-box prefilter; exact arithmetic
  // confirms every candidate pair.
  struct Box {
    double min_x, max_x, min_y, max_y;
    std::size_t index;
  };
  std::vector<Box> boxes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = p.vertices[i];
    const Vec2& b = p.vertices[i + 1];
    boxes[i] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y), i};
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) { return a.min_x < b.min_x; });

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (boxes[j].min_x > boxes[i].max_x + tol) break;
      if (boxes[j].min_y > boxes[i].max_y + tol || boxes[i].min_y > boxes[j].max_y + tol) continue;
      const std::size_t s1 = std::min(boxes[i].index, boxes[j].index);
      const std::size_t s2 = std::max(boxes[i].index, boxes[j].index);
      if (s2 == s1 + 1) continue;  // adjacent segments share a vertex by construction
      Contact c;
      if (report.exact) {
        c = classify_exact(exact_segs[s1], exact_segs[s2]);
      } else {
        c = classify_float(p.vertices[s1], p.vertices[s1 + 1], p.vertices[s2], p.vertices[s2 + 1], tol);
      }
      switch (c) {
        case Contact::Proper: ++report.proper_crossings; break;
        case Contact::Overlap: ++report.collinear_overlaps; break;
        case Contact::Touch: ++report.vertex_touches; break;
        case Contact::None: break;
      }
    }
  }
  return report;
}

double DeviationDiagram::total_drop() const {
  return polyline.empty() ? 0.0 : polyline.front().y - polyline.back().y;
}

DeviationDiagram deviation_diagram(const Word& w, double step_down) {
  if (!(w.alphabet() == Alphabet::binary())) {
    throw std::invalid_argument("deviation_diagram expects a word over {a, b}");
  }
  DeviationDiagram d;
  d.step_down = step_down;
  Golden x;
  double y = 0.0;
  int dir = 1;
  d.polyline.push_back({0.0, 0.0});
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'a') {
      const Golden mid = x + Golden::from_half_units(dir, 0);  // half a phi tile
      x += Golden::phi().scaled(dir);
      d.polyline.push_back({x.to_double(), y});
      d.controls.push_back({mid, y, i, 'a'});
    } else {
      x += Golden::half().scaled(dir);
      d.polyline.push_back({x.to_double(), y});
      d.polyline.push_back({x.to_double(), y - step_down});
      d.controls.push_back({x, y - step_down / 2.0, i, 'b'});
      y -= step_down;
      dir = -dir;
      x += Golden::half().scaled(dir);
      d.polyline.push_back({x.to_double(), y});
    }
  }
  std::vector<std::pair<Golden, int>> tallies;
  for (const auto& c : d.controls) {
    auto it = std::find_if(tallies.begin(), tallies.end(),
                           [&](const auto& t) { return t.first == c.x; });
    if (it == tallies.end()) tallies.emplace_back(c.x, 1);
    else ++it->second;
  }
  std::sort(tallies.begin(), tallies.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  d.tallies = std::move(tallies);
  return d;
}

namespace {

std::string moves_key(const std::vector<Golden>& moves) {
  std::string key;
  for (const auto& m : moves) {
    key += std::to_string(m.phi_half_units());
    key += ':';
    key += std::to_string(m.rational_half_units());
    key += ';';
  }
  return key;
}

std::vector<Golden> sign_normalized(std::vector<Golden> moves) {
  if (!moves.empty() && moves.front().sign() < 0) {
    for (auto& m : moves) m = -m;
  }
  return moves;
}

}  // namespace

std::string canonical_excursion_key(const Excursion& e, bool identify_reversal) {
  std::string key = moves_key(sign_normalized(e.moves));
  if (identify_reversal) {
    std::vector<Golden> rev(e.moves.rbegin(), e.moves.rend());
    for (auto& m : rev) m = -m;
    key = std::min(key, moves_key(sign_normalized(std::move(rev))));
  }
  return key;
}

ExcursionScan zero_excursions(const Word& w, bool identify_reversal) {
  const Trace1D t = trace_1d(w);
  ExcursionScan scan;
  scan.identify_reversal = identify_reversal;

  Golden pos;
  Excursion current;
  auto flush = [&](bool closed) {
    if (current.moves.empty()) return;
    current.closed = closed;
    scan.excursions.push_back(std::move(current));
    current = Excursion{};
  };
  for (const auto& m : t.moves) {
    const Golden next = pos + m;
    const bool crosses = pos.sign() != 0 && next.sign() != 0 && pos.sign() == -next.sign();
    if (crosses) {
      current.moves.push_back(-pos);
      flush(true);
      current.side = next.sign();
      current.moves.push_back(next);
    } else {
      if (pos.is_zero() && !next.is_zero()) current.side = next.sign();
      current.moves.push_back(m);
      if (next.is_zero()) flush(true);
    }
    pos = next;
  }
  flush(false);

  std::set<std::string> keys;
  for (const auto& e : scan.excursions) {
    if (e.closed) keys.insert(canonical_excursion_key(e, identify_reversal));
  }
  scan.distinct_closed.assign(keys.begin(), keys.end());
  return scan;
}

Golden max_deviation(int n) { return trace_1d(fib_word(n)).max_abs_position(); }

GrowthChart growth_chart(int max_tiles) {
  if (max_tiles < 3) throw std::domain_error("growth_chart requires a budget of at least 3 tiles");
  GrowthChart chart;
  chart.max_tiles = max_tiles;

  GrowthNode root;
  root.word = Word::ab("aba");
  chart.nodes.push_back(std::move(root));

  static const std::array<const char*, 2> kExtensions = {"aba", "baaba"};
  for (std::size_t idx = 0; idx < chart.nodes.size(); ++idx) {
    const Word base = chart.nodes[idx].word;
    const int depth = chart.nodes[idx].depth;
    for (const char* ext : kExtensions) {
      Word cand = base + Word::ab(ext);
      if (!is_legal_factor(BoundedFactor{cand, true, true})) continue;
      chart.nodes[idx].legal_extensions.emplace_back(ext);
      if (cand.size() <= static_cast<std::size_t>(max_tiles)) {
        GrowthNode child;
        child.word = std::move(cand);
        child.parent = static_cast<int>(idx);
        child.depth = depth + 1;
        chart.nodes.push_back(std::move(child));
        chart.nodes[idx].children.push_back(static_cast<int>(chart.nodes.size() - 1));
      }
    }
    if (chart.first_branch_node < 0 && chart.nodes[idx].legal_extensions.size() == 2) {
      chart.first_branch_node = static_cast<int>(idx);
    }
  }
  return chart;
}

double net_heading_drift(const Word& w, double angle_degrees) {
  if (angle_degrees == 180.0) return 0.0;  // pure 1-D rule
  const Path path = trace(w, generalized_to_and_fro(angle_degrees));
  if (path.vertices.size() < 3) return 0.0;

  double total = 0.0;
  std::vector<double> cumulative{0.0};
  cumulative.reserve(path.vertices.size());
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    total += std::hypot(path.vertices[i].x - path.vertices[i - 1].x,
                        path.vertices[i].y - path.vertices[i - 1].y);
    cumulative.push_back(total);
  }
  const double half = total / 2.0;
  std::size_t k = 1;
  while (k < cumulative.size() && cumulative[k] < half) ++k;
  const double seg_len = cumulative[k] - cumulative[k - 1];
  const double f = seg_len > 0 ? (half - cumulative[k - 1]) / seg_len : 0.0;
  const Vec2 mid{path.vertices[k - 1].x + f * (path.vertices[k].x - path.vertices[k - 1].x),
                 path.vertices[k - 1].y + f * (path.vertices[k].y - path.vertices[k - 1].y)};

  const Vec2 d1{mid.x - path.vertices.front().x, mid.y - path.vertices.front().y};
  const Vec2 d2{path.vertices.back().x - mid.x, path.vertices.back().y - mid.y};
  if (std::hypot(d1.x, d1.y) < 1e-12 || std::hypot(d2.x, d2.y) < 1e-12) return 0.0;
  return std::atan2(cross(d1, d2), dot(d1, d2)) / kDegToRad;
}

double find_firehose_angle(int n, double lo_degrees, double hi_degrees) {
  if (!(lo_degrees < hi_degrees)) throw std::domain_error("find_firehose_angle needs lo < hi");
  const Word w = fib_word(n);
  double lo = lo_degrees, hi = hi_degrees;
  double flo = net_heading_drift(w, lo);
  double fhi = net_heading_drift(w, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) {
    throw std::domain_error("drift does not change sign across the bracket");
  }
  while (hi - lo > 0.01) {
    const double mid = (lo + hi) / 2.0;
    const double fmid = net_heading_drift(w, mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0) == (flo > 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2.0;
}

}  // namespace fibword
