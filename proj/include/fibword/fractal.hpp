#pragma once

#include <array>
#include <vector>

#include "fibword/turtle.hpp"

namespace fibword {

// Displacement vectors of consecutive double-letter paths W_{n-3}, W_{n-6}.
struct VecPair {
  std::array<long long, 2> w_minus_3{};
  std::array<long long, 2> w_minus_6{};
};

// (2p-2q-r+2, 2p+2q-s) when n = 1 (mod 6); (2p+2q-r-2, -2p+2q-s) when
// n = 4 (mod 6).
std::array<long long, 2> vector_recurrence(const VecPair& vp, int residue_mod_6);

struct VecEntry {
  int n = 0;
  std::array<long long, 2> v{};
};

// Displacement vectors of W_n for n = 4, 7, ..., n_max (n = 1 mod 3),
// seeded with W_4 = (-2, -1) and W_7 = (0, -6) and iterated by the
// recurrence. Entries alternate between (0, w) and (x, x+1).
std::vector<VecEntry> vector_sequence(int n_max);

// log(copies) / log(scale). Accepts either the contraction ratio r < 1 or
// the expansion factor s = 1/r > 1.
double similarity_dimension(double copies, double scale);

// Fib(n+2) / Fib(n-1): ratio of segment counts between F_n and F_{n-3}
// paths, converging to phi^3.
double segment_growth_ratio(int n);

// |W_n| / |W_{n-3}| displacement-length ratio from the vector sequence,
// converging to 1 + sqrt(2). Requires n = 1 (mod 3), n >= 13.
double scale_ratio(int n);

struct BoxCountScale {
  double box_size = 0.0;
  long long boxes = 0;
};
struct BoxCountResult {
  double dimension = 0.0;
  double fit_residual = 0.0;
  std::array<double, 2> anchor{};  // grid origin: bounding-box min corner
  std::vector<BoxCountScale> scales;
};

// Grid-anchored box counting with a log-log least-squares fit. Needs at
// least four box sizes spanning a decade.
BoxCountResult box_count_dimension(const Path& p, std::vector<double> box_sizes);

// Height / width of the double-letter W_n bounding box; tends to
// 1 + sqrt(2). Requires n = 1 (mod 3).
double bbox_ratio_limit(int n);

struct PeriodicApprox {
  long long segments = 0;  // |F_k| / 2 digram tiles
  long long scale = 0;     // end-to-end span of the generator plus the
                           // entry and exit half-tiles: |W_k drop| + 1
  double dimension = 0.0;  // log(segments) / log(scale)
};

// Periodic approximation built on the F_k double-letter path. Requires
// k = 1 (mod 6), where the W_k displacement is purely vertical and the
// span is an integer.
PeriodicApprox periodic_approx(int k);

// Initiator/generator iteration: every segment of the current polyline is
// replaced by the generator, scaled and rotated to fit. The generator
// must run from (0, 0) to (d, 0) for some d > 0.
Path iterate_generator(const Path& generator, int iterations);

// Mandelbrot's eight-segment quarter-scale generator; dimension 1.5.
Path quarter_zigzag_generator();

// Straight unit segment, handy as an initiator or a dimension-1 control.
Path unit_segment_path();

}  // namespace fibword
