#pragma once

#include <Eigen/Dense>

#include "fibword/word.hpp"

namespace fibword {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Letter-count matrix of a substitution: entry (r, c) counts occurrences
// of letter r in the image of letter c, rows and columns ordered as in
// the alphabet.
struct IncidenceMatrix {
  Alphabet alphabet;
  IntMatrix counts;
};

IncidenceMatrix incidence(const Substitution& subst);

// Exact integer matrix power, n >= 0.
IntMatrix matrix_power(const IntMatrix& m, int n);

struct PrimitivityResult {
  bool primitive = false;
  // Smallest exponent whose power is strictly positive; meaningful only
  // when primitive. Powers are checked up to the Wielandt bound
  // (d-1)^2 + 1.
  int witness_exponent = 0;
};

PrimitivityResult is_primitive(const IntMatrix& m);

struct PerronData {
  double lambda_pf = 0.0;
  Eigen::VectorXd right_vector;  // letter frequencies, entries sum to 1
  Eigen::VectorXd left_vector;   // tile lengths, unit-tile entry equals 1
  int unit_tile_index = 0;
};

// Perron-Frobenius data for a primitive incidence matrix. 2x2 matrices
// use the closed form from the characteristic polynomial; larger ones use
// power iteration to 1e-12 with a 10000-iteration cap. The left vector is
// normalised so the given unit-tile letter has length 1.
PerronData perron(const IncidenceMatrix& m, char unit_tile_letter = 'b');

}  // namespace fibword
