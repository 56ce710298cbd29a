#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fibword/fibonacci.hpp"
#include "fibword/spectral.hpp"

using namespace fibword;

namespace {
constexpr double kPhi = 1.6180339887498948482;
}

TEST_CASE("incidence matrices") {
  const IncidenceMatrix m = incidence(theta());
  CHECK(m.counts(0, 0) == 1);
  CHECK(m.counts(0, 1) == 1);
  CHECK(m.counts(1, 0) == 1);
  CHECK(m.counts(1, 1) == 0);

  const Substitution identity(Alphabet::binary(), {{'a', "a"}, {'b', "b"}}, "identity");
  const IncidenceMatrix mi = incidence(identity);
  CHECK(mi.counts(0, 0) == 1);
  CHECK(mi.counts(0, 1) == 0);
  CHECK(mi.counts(1, 0) == 0);
  CHECK(mi.counts(1, 1) == 1);

  const IncidenceMatrix mo = incidence(omega_substitution());
  CHECK(mo.counts(0, 0) == 5);  // F in image(F)
  CHECK(mo.counts(1, 0) == 2);  // L in image(F)
  CHECK(mo.counts(2, 0) == 2);  // R in image(F)
  CHECK(mo.counts(1, 1) == 1);
  CHECK(mo.counts(2, 2) == 1);
}

TEST_CASE("matrix powers") {
  const IntMatrix m = incidence(theta()).counts;
  const IntMatrix m6 = matrix_power(m, 6);
  CHECK(m6(0, 0) == 13);
  CHECK(m6(0, 1) == 8);
  CHECK(m6(1, 0) == 8);
  CHECK(m6(1, 1) == 5);
  const IntMatrix m2 = matrix_power(m, 2);
  CHECK((m2.array() > 0).all());
  CHECK(matrix_power(m, 0) == IntMatrix::Identity(2, 2));
}

TEST_CASE("powers of the incidence matrix count letters of iterated images") {
  const IntMatrix m = incidence(theta()).counts;
  for (int n = 0; n <= 20; ++n) {
    const IntMatrix mn = matrix_power(m, n);
    for (int c = 0; c < 2; ++c) {
      const char letter = c == 0 ? 'a' : 'b';
      const WordStats s = word_stats(theta().iterate(letter, n));
      CAPTURE(n);
      CAPTURE(letter);
      CHECK(mn(0, c) == s.count_a);
      CHECK(mn(1, c) == s.count_b);
    }
  }
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(incidence(theta()).counts).primitive);
  CHECK(is_primitive(incidence(theta()).counts).witness_exponent == 2);

  IntMatrix id = IntMatrix::Identity(2, 2);
  CHECK(!is_primitive(id).primitive);

  IntMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(!is_primitive(swap).primitive);

  CHECK(!is_primitive(incidence(omega_substitution()).counts).primitive);
}

TEST_CASE("perron data for theta") {
  const PerronData pd = perron(incidence(theta()));
  CHECK(pd.lambda_pf == doctest::Approx(kPhi).epsilon(1e-12));
  CHECK(pd.lambda_pf * pd.lambda_pf - pd.lambda_pf - 1.0 == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(pd.right_vector(0) == doctest::Approx(kPhi - 1.0).epsilon(1e-12));
  CHECK(pd.right_vector(1) == doctest::Approx(2.0 - kPhi).epsilon(1e-12));
  CHECK(pd.right_vector.sum() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(pd.left_vector(0) == doctest::Approx(kPhi).epsilon(1e-12));
  CHECK(pd.left_vector(1) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(perron(incidence(omega_substitution())), std::domain_error);
}

TEST_CASE("frequencies agree with long-word letter ratios") {
  const PerronData pd = perron(incidence(theta()));
  const WordStats s = word_stats(fib_word(30));
  const double ratio = static_cast<double>(s.count_a) / static_cast<double>(s.count_b);
  CHECK(pd.right_vector(0) / pd.right_vector(1) == doctest::Approx(ratio).epsilon(1e-6));
}

TEST_CASE("power iteration path handles a primitive 3x3 system") {
  // a -> ab, b -> ac, c -> a: a primitive three-letter substitution.
  const Substitution tri(Alphabet("abc"), {{'a', "ab"}, {'b', "ac"}, {'c', "a"}}, "tri");
  const IncidenceMatrix m = incidence(tri);
  REQUIRE(is_primitive(m.counts).primitive);
  const PerronData pd = perron(m, 'c');
  // lambda is the tribonacci constant, the root of x^3 = x^2 + x + 1.
  const double l = pd.lambda_pf;
  CHECK(l * l * l - (l * l + l + 1.0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(pd.right_vector.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pd.left_vector(2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pd.right_vector.minCoeff() > 0.0);
}
