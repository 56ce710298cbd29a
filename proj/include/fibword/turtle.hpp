#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibword/golden.hpp"
#include "fibword/word.hpp"

namespace fibword {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

enum class TokenScheme { PerLetter, PerDigram, PerLetterParity };

struct TurtleAction {
  enum class Kind { Forward, Turn };
  Kind kind = Kind::Forward;
  Golden length;              // Forward only; always > 0
  double turn_degrees = 0.0;  // Turn only; positive turns counterclockwise

  static TurtleAction forward(Golden len);
  static TurtleAction turn(double degrees);
  bool quarter_turn() const;
};

struct DrawingRule {
  std::string name;
  TokenScheme scheme = TokenScheme::PerLetter;
  Alphabet alphabet = Alphabet::binary();
  std::map<std::string, std::vector<TurtleAction>> actions;
  int parity_base = 0;  // PerLetterParity only: index of the first "even" letter

  // True when every turn is a multiple of 90 degrees, so paths can be
  // traced with exact coordinates.
  bool exact() const;
};

// Polyline produced by a drawing rule. Coordinates are exact (phi-ring)
// whenever the rule turns only in quarter turns and the start point is
// representable; the double view is always present. Plane is y-up, the
// default heading points down, and a right turn is clockwise; this is the
// orientation that reproduces the documented displacement tables.
struct Path {
  std::string rule_name;
  std::vector<std::string> tokens;
  std::vector<Vec2> vertices;             // first entry is the start point
  std::vector<GoldenVec> exact_vertices;  // parallel to vertices when exact
  std::vector<std::pair<std::size_t, std::size_t>> token_spans;  // vertex range per token
  Vec2 initial_heading{0.0, -1.0};
  Vec2 final_heading{0.0, -1.0};
  std::optional<std::array<int, 2>> exact_initial_heading;
  std::optional<std::array<int, 2>> exact_final_heading;

  bool exact() const { return !exact_vertices.empty(); }
  std::size_t segment_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// Built-in rules.
DrawingRule identity_rule();                            // a: fwd phi; b: fwd 1
DrawingRule to_and_fro_rule();                          // b folds back through 180
DrawingRule generalized_to_and_fro(double angle_degrees);
DrawingRule double_letter_rule();                       // one tile per digram
DrawingRule odd_even_rule(int parity_base = 0);
DrawingRule omega_rule();                               // F: fwd 1; L/R: quarter turns
std::vector<DrawingRule> builtin_rules();
// Accepts a builtin name or "angle:<degrees>".
DrawingRule rule_by_name(std::string_view name, int parity_base = 0);

std::vector<std::string> tokenize(const Word& w, const DrawingRule& rule);

Path trace(const Word& w, const DrawingRule& rule, Vec2 start = {0.0, 0.0},
           Vec2 heading = {0.0, -1.0});

// One-dimensional to-and-fro trace with exact positions after every
// half-move (a-tiles move one phi, b-tiles move a half, fold, and move a
// half back).
struct Trace1D {
  std::vector<Golden> positions;  // after each half-move; start (0) not included
  std::vector<Golden> moves;      // signed displacement of each half-move
  int final_direction = 1;        // +1 along initial direction, -1 reversed

  Golden final_position() const { return positions.empty() ? Golden() : positions.back(); }
  Golden max_abs_position() const;
};
Trace1D trace_1d(const Word& w);

Vec2 displacement(const Path& p);
std::optional<GoldenVec> displacement_exact(const Path& p);

struct BBox {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};
BBox bounding_box(const Path& p);

struct SymmetryResult {
  bool symmetric = false;
  Vec2 center;
};
// Half-turn symmetry: v_i + v_{L-i} constant, with equal entry and exit
// headings.
SymmetryResult half_turn_symmetry(const Path& p);

struct IntersectionReport {
  std::size_t proper_crossings = 0;    // interiors cross transversally
  std::size_t collinear_overlaps = 0;  // shared sub-segment of positive length
  std::size_t vertex_touches = 0;      // isolated contact at a segment end
  bool exact = false;
};
// Pairwise segment contacts, adjacent segments excluded. Exact integer
// tests for axis-aligned exact paths; 1e-9 epsilon otherwise.
IntersectionReport self_intersections(const Path& p);

// Two-dimensional rendering of the 1-D trace: a-tiles run horizontally,
// each b folds through a small vertical step-down at its midpoint, one
// control point per tile midpoint.
struct DeviationControl {
  Golden x;
  double y = 0.0;
  std::size_t tile_index = 0;
  char tile = 'a';
};
struct DeviationDiagram {
  std::vector<Vec2> polyline;
  std::vector<DeviationControl> controls;
  std::vector<std::pair<Golden, int>> tallies;  // control-point x multiset, ascending
  double step_down = 0.4;
  double total_drop() const;
};
DeviationDiagram deviation_diagram(const Word& w, double step_down = 0.4);

// Maximal one-sided departures of the 1-D trace from position zero. The
// trace is split at every exact zero, including crossings inside a move.
struct Excursion {
  std::vector<Golden> moves;
  int side = 0;        // +1 above the start direction, -1 below
  bool closed = true;  // false for a trailing excursion that never returns
};
std::string canonical_excursion_key(const Excursion& e, bool identify_reversal);
struct ExcursionScan {
  std::vector<Excursion> excursions;
  std::vector<std::string> distinct_closed;  // sorted canonical keys
  bool identify_reversal = false;
};
ExcursionScan zero_excursions(const Word& w, bool identify_reversal = false);

// Maximum |position| over the to-and-fro trace of F_n.
Golden max_deviation(int n);

// Breadth-first enumeration of legal words built from the factors aba and
// baaba, rooted at aba.
struct GrowthNode {
  Word word;
  int parent = -1;
  int depth = 1;
  std::vector<int> children;
  std::vector<std::string> legal_extensions;
};
struct GrowthChart {
  std::vector<GrowthNode> nodes;  // BFS order
  int first_branch_node = -1;     // first node with two legal extensions
  int max_tiles = 0;
};
GrowthChart growth_chart(int max_tiles);

// Signed bend of the generalized to-and-fro path: the angle (degrees, ccw
// positive) from the first half's displacement vector to the second
// half's, halves measured by arc length. Exactly 180 degrees is the pure
// 1-D rule and reports zero by convention.
double net_heading_drift(const Word& w, double angle_degrees);

// Bisection for the angle in (lo, hi) where the drift changes sign,
// resolved to 0.01 degrees.
double find_firehose_angle(int n, double lo_degrees, double hi_degrees);

}  // namespace fibword
