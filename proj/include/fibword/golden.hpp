#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fibword {

// Exact scalar in the half-ring {(u*phi + v)/2 : u, v integers} where
// phi = (1+sqrt(5))/2. Every coordinate reachable by the built-in
// 90-degree drawing rules lives here: tile lengths phi, 1 and 1/2, plus
// tile midpoints. Zero and sign tests are integer computations, never
// floating point.
class Golden {
 public:
  constexpr Golden() = default;

  static constexpr Golden phi(long long n = 1) { return Golden(2 * n, 0); }
  static constexpr Golden unit(long long n) { return Golden(0, 2 * n); }
  static constexpr Golden half(long long n = 1) { return Golden(0, n); }
  static constexpr Golden from_half_units(long long phi_halves, long long rational_halves) {
    return Golden(phi_halves, rational_halves);
  }

  // value == (phi_half_units()*phi + rational_half_units()) / 2
  constexpr long long phi_half_units() const { return u_; }
  constexpr long long rational_half_units() const { return v_; }

  constexpr bool is_zero() const { return u_ == 0 && v_ == 0; }

  // Sign of u*phi + v, decided by comparing 5u^2 against (u + 2v)^2.
  constexpr int sign() const {
    const long long s = u_;
    const long long t = u_ + 2 * v_;
    if (s == 0) return t > 0 ? 1 : (t < 0 ? -1 : 0);
    if (s > 0 && t >= 0) return 1;
    if (s < 0 && t <= 0) return -1;
    const long long lhs = 5 * s * s;
    const long long rhs = t * t;
    if (s > 0) return lhs > rhs ? 1 : -1;  // here t < 0
    return rhs > lhs ? 1 : -1;             // here s < 0, t > 0
  }

  constexpr Golden operator+(Golden o) const { return Golden(u_ + o.u_, v_ + o.v_); }
  constexpr Golden operator-(Golden o) const { return Golden(u_ - o.u_, v_ - o.v_); }
  constexpr Golden operator-() const { return Golden(-u_, -v_); }
  constexpr Golden& operator+=(Golden o) { u_ += o.u_; v_ += o.v_; return *this; }
  constexpr Golden& operator-=(Golden o) { u_ -= o.u_; v_ -= o.v_; return *this; }
  constexpr Golden scaled(long long k) const { return Golden(u_ * k, v_ * k); }

  constexpr bool operator==(Golden o) const { return u_ == o.u_ && v_ == o.v_; }
  constexpr bool operator!=(Golden o) const { return !(*this == o); }
  constexpr bool operator<(Golden o) const { return (*this - o).sign() < 0; }
  constexpr bool operator>(Golden o) const { return o < *this; }
  constexpr bool operator<=(Golden o) const { return !(o < *this); }
  constexpr bool operator>=(Golden o) const { return !(*this < o); }

  constexpr Golden abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const {
    constexpr double kPhi = 1.6180339887498948482;
    return (static_cast<double>(u_) * kPhi + static_cast<double>(v_)) / 2.0;
  }

  // Exact pair (m, k) with value m*phi + k/2; valid only when the phi
  // coefficient is integral (true for every path vertex, not always for
  // tile midpoints).
  bool ring_pair(long long& m, long long& k) const {
    if (u_ % 2 != 0) return false;
    m = u_ / 2;
    k = v_;
    return true;
  }

  std::string str() const {
    long long m = 0, k = 0;
    if (ring_pair(m, k)) {
      return std::to_string(m) + "*phi+" + std::to_string(k) + "/2";
    }
    return "(" + std::to_string(u_) + "*phi+" + std::to_string(v_) + ")/2";
  }

  // Stable total order on the representation, for use as a map key.
  constexpr bool rep_less(Golden o) const {
    return u_ != o.u_ ? u_ < o.u_ : v_ < o.v_;
  }

 private:
  constexpr Golden(long long u, long long v) : u_(u), v_(v) {}
  long long u_ = 0;
  long long v_ = 0;
};

struct GoldenVec {
  Golden x;
  Golden y;

  constexpr GoldenVec operator+(const GoldenVec& o) const { return {x + o.x, y + o.y}; }
  constexpr GoldenVec operator-(const GoldenVec& o) const { return {x - o.x, y - o.y}; }
  constexpr bool operator==(const GoldenVec& o) const { return x == o.x && y == o.y; }
};

}  // namespace fibword
