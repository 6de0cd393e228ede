#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "g2scroll/curve.hpp"
#include "g2scroll/linalg.hpp"

namespace g2scroll {

// Element of the function field: (a(x) + b(x)*y) / c(x) with y^2 = f(x)
// eliminated, c monic and gcd(a, b, c) = 1.
class RationalForm {
 public:
  RationalForm(Poly a, Poly b, Poly c);

  static RationalForm zero(PrimeField F) { return RationalForm(Poly(F), Poly(F), Poly::one(F)); }
  static RationalForm one(PrimeField F) {
    return RationalForm(Poly::one(F), Poly(F), Poly::one(F));
  }
  static RationalForm from_poly(const Poly& p) {
    return RationalForm(p, Poly(p.field()), Poly::one(p.field()));
  }
  static RationalForm y_times(const Poly& b) {
    return RationalForm(Poly(b.field()), b, Poly::one(b.field()));
  }

  const Poly& a() const noexcept { return a_; }
  const Poly& b() const noexcept { return b_; }
  const Poly& c() const noexcept { return c_; }
  const PrimeField& field() const noexcept { return c_.field(); }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }

  bool operator==(const RationalForm& o) const noexcept {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
  }

 private:
  Poly a_, b_, c_;
};

RationalForm rf_add(const RationalForm& g1, const RationalForm& g2);
RationalForm rf_sub(const RationalForm& g1, const RationalForm& g2);
RationalForm rf_neg(const RationalForm& g);
RationalForm rf_scale(const RationalForm& g, fp_t s);
RationalForm rf_mul(const Curve& c, const RationalForm& g1, const RationalForm& g2);

// Value at an affine point that is not a pole; 0/0 situations are resolved by
// local series expansion. Throws PoleAtPoint at genuine poles.
fp_t evaluate(const Curve& c, const RationalForm& g, const Point& pt);

// Vanishing order at an affine point (negative at poles); g must be nonzero.
int order_at(const Curve& c, const RationalForm& g, const Point& pt);
int order_at_infinity(const RationalForm& g);

// Complete linear series |cls| presented by a chosen effective divisor and an
// explicit function basis of L(div).
struct LinSeries {
  DivClass cls;
  Divisor div;
  std::vector<RationalForm> basis;
};

// Basis of L(div) for a divisor with rational support (may have negative
// multiplicities). Affine denominators are cleared into L(N*infinity) with
// N = mult_inf + 2*(positive affine degree); vanishing conditions at the
// support are imposed on the monomial basis {x^i, y*x^j} via kernel_basis.
std::vector<RationalForm> riemann_roch_basis(const Curve& c, const Divisor& div);

LinSeries rr_space(const Curve& c, const Divisor& div);  // div must be effective

// C embedded in P^{d-2} by the complete system of Hdiv, deg Hdiv = d >= 6.
struct EmbCurve {
  Curve curve;
  LinSeries H;
  int d;
};

EmbCurve embed(const Curve& c, const Divisor& Hdiv);
std::vector<fp_t> image_point(const EmbCurve& emb, const Point& pt);

// Exact coefficients of g in the basis of L, or nullopt when g is not in the
// span. Products are compared after clearing to a common denominator.
std::optional<std::vector<fp_t>> coords_in_basis(const Curve& c, const RationalForm& g,
                                                 const LinSeries& L);

// For a degree-3 pencil: the basepoint P with |D| = |K_C + P|, if any.
// Degree-2 pencils are basepoint-free. Throws NotAPencil unless h0 = 2.
std::optional<Point> basepoint(const Curve& c, const LinSeries& L);

// Random degree-3 series spanned by 3 distinct affine points. The optional
// predicate lets callers impose extra acceptance conditions (rejection
// sampling); force_basepoint_free rejects series with a basepoint.
LinSeries random_g13(const Curve& c, Rng& rng, bool force_basepoint_free = false,
                     const std::function<bool(const LinSeries&)>& accept = nullptr);

}  // namespace g2scroll
