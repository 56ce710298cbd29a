#include "fibword/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace fibword {

IncidenceMatrix incidence(const Substitution& subst) {
  const Alphabet& alphabet = subst.alphabet();
  const auto d = static_cast<Eigen::Index>(alphabet.size());
  IntMatrix m = IntMatrix::Zero(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    const std::string& image = subst.image(alphabet.letter(static_cast<std::size_t>(c)));
    for (char letter : image) {
      m(static_cast<Eigen::Index>(alphabet.index(letter)), c) += 1;
    }
  }
  return IncidenceMatrix{alphabet, std::move(m)};
}

IntMatrix matrix_power(const IntMatrix& m, int n) {
  if (n < 0) throw std::domain_error("matrix_power requires n >= 0");
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_power requires a square matrix");
  IntMatrix result = IntMatrix::Identity(m.rows(), m.cols());
  IntMatrix base = m;
  int e = n;
  while (e > 0) {
    if (e & 1) result = (result * base).eval();
    base = (base * base).eval();
    e >>= 1;
  }
  return result;
}

PrimitivityResult is_primitive(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_primitive requires a square matrix");
  if ((m.array() < 0).any()) throw std::invalid_argument("is_primitive requires a non-negative matrix");
  const auto d = m.rows();
  const int bound = static_cast<int>((d - 1) * (d - 1) + 1);
  // Track only positivity to avoid overflow in repeated products.
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> reach = (m.array() > 0).matrix();
  for (int k = 1; k <= bound; ++k) {
    if (reach.all()) return PrimitivityResult{true, k};
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> next(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) {
        bool any = false;
        for (Eigen::Index j = 0; j < d && !any; ++j) {
          any = reach(r, j) && m(j, c) > 0;
        }
        next(r, c) = any;
      }
    }
    reach = std::move(next);
  }
  return PrimitivityResult{false, 0};
}

namespace {

Eigen::VectorXd power_iteration(const Eigen::MatrixXd& m, double& lambda) {
  const auto d = m.rows();
  Eigen::VectorXd v = Eigen::VectorXd::Constant(d, 1.0 / static_cast<double>(d));
  double prev = 0.0;
  for (int it = 0; it < 10000; ++it) {
    Eigen::VectorXd next = m * v;
    const double norm = next.sum();
    if (norm <= 0) throw std::runtime_error("power iteration collapsed");
    next /= norm;
    lambda = norm;
    if (std::abs(lambda - prev) < 1e-12 && (next - v).cwiseAbs().maxCoeff() < 1e-12) {
      return next;
    }
    prev = lambda;
    v = std::move(next);
  }
  return v;
}

}  // namespace

PerronData perron(const IncidenceMatrix& m, char unit_tile_letter) {
  PrimitivityResult prim = is_primitive(m.counts);
  if (!prim.primitive) {
    throw std::domain_error("perron requires a primitive incidence matrix");
  }
  PerronData data;
  data.unit_tile_index = static_cast<int>(m.alphabet.index(unit_tile_letter));
  const auto d = m.counts.rows();

  Eigen::MatrixXd md = m.counts.cast<double>();
  if (d == 2) {
    const double tr = md(0, 0) + md(1, 1);
    const double det = md(0, 0) * md(1, 1) - md(0, 1) * md(1, 0);
    data.lambda_pf = (tr + std::sqrt(tr * tr - 4.0 * det)) / 2.0;
    auto eigvec = [&](const Eigen::MatrixXd& mm) {
      Eigen::VectorXd v(2);
      if (mm(0, 1) != 0.0) {
        v << mm(0, 1), data.lambda_pf - mm(0, 0);
      } else if (mm(1, 0) != 0.0) {
        v << data.lambda_pf - mm(1, 1), mm(1, 0);
      } else {
        throw std::domain_error("perron: matrix is diagonal, not primitive");
      }
      return v;
    };
    data.right_vector = eigvec(md);
    data.left_vector = eigvec(md.transpose().eval());
  } else {
    double lambda_r = 0.0, lambda_l = 0.0;
    data.right_vector = power_iteration(md, lambda_r);
    data.left_vector = power_iteration(md.transpose().eval(), lambda_l);
    data.lambda_pf = lambda_r;
  }

  data.right_vector /= data.right_vector.sum();
  data.left_vector /= data.left_vector(data.unit_tile_index);
  return data;
}

}  // namespace fibword
