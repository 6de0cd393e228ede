#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "g2scroll/fp.hpp"

namespace g2scroll {

// Dense univariate polynomial over a prime field, coefficients low-to-high,
// always normalized (no trailing zeros; the zero polynomial has no coefficients).
class Poly {
 public:
  explicit Poly(PrimeField F) : F_(F) {}
  Poly(PrimeField F, std::vector<fp_t> coeffs) : F_(F), c_(std::move(coeffs)) { trim(); }

  static Poly zero(PrimeField F) { return Poly(F); }
  static Poly constant(PrimeField F, fp_t v) { return Poly(F, {v % F.p()}); }
  static Poly one(PrimeField F) { return constant(F, 1); }
  static Poly x(PrimeField F) { return Poly(F, {0, 1}); }
  // x - r
  static Poly linear_root(PrimeField F, fp_t r) { return Poly(F, {F.neg(r), 1}); }

  const PrimeField& field() const noexcept { return F_; }
  int deg() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  fp_t coeff(int i) const noexcept { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
  fp_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const noexcept { return lead() == 1; }
  const std::vector<fp_t>& coeffs() const noexcept { return c_; }

  fp_t eval(fp_t x) const noexcept;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(fp_t s) const;
  Poly derivative() const;
  Poly monic() const;

  // Euclidean division; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  Poly operator/(const Poly& o) const { return divmod(*this, o).first; }
  Poly operator%(const Poly& o) const { return divmod(*this, o).second; }
  bool divides(const Poly& a) const;

  static Poly gcd(Poly a, Poly b);  // monic
  // g = s*a + t*b with g the monic gcd.
  static void xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);

  // First k coefficients of p(x0 + t) as a series in t (synthetic division,
  // exact in any characteristic).
  std::vector<fp_t> taylor(fp_t x0, int k) const;

  bool operator==(const Poly& o) const noexcept { return c_ == o.c_; }
  bool operator!=(const Poly& o) const noexcept { return !(*this == o); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    for (auto& v : c_) v %= F_.p();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  PrimeField F_;
  std::vector<fp_t> c_;
};

}  // namespace g2scroll
