#include "g2scroll/curve.hpp"

#include <algorithm>

namespace g2scroll {

void Divisor::add(const Point& pt, int mult) {
  if (mult == 0) return;
  int m = terms_[pt] + mult;
  if (!pt.infinite && (m > 2 || m < -2))
    fail(Errc::UnsupportedMultiplicity, "affine multiplicity exceeds 2");
  if (m == 0)
    terms_.erase(pt);
  else
    terms_[pt] = m;
}

int Divisor::mult_at(const Point& pt) const {
  auto it = terms_.find(pt);
  return it == terms_.end() ? 0 : it->second;
}

int Divisor::degree() const {
  int d = 0;
  for (const auto& [pt, m] : terms_) d += m;
  return d;
}

int Divisor::affine_degree() const {
  int d = 0;
  for (const auto& [pt, m] : terms_)
    if (!pt.infinite && m > 0) d += m;
  return d;
}

bool Divisor::is_effective() const {
  for (const auto& [pt, m] : terms_)
    if (m < 0) return false;
  return true;
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [pt, m] : o.terms_) r.add(pt, m);
  return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [pt, m] : o.terms_) r.add(pt, -m);
  return r;
}

Curve::Curve(std::uint64_t p, const std::vector<std::int64_t>& f_coeffs) : F_(p), f_(F_) {
  if (f_coeffs.size() != 6) fail(Errc::BadDegree, "f must be given by 6 coefficients c0..c5");
  std::vector<fp_t> c(6);
  for (size_t i = 0; i < 6; ++i) c[i] = F_.reduce(f_coeffs[i]);
  f_ = Poly(F_, std::move(c));
  if (f_.deg() != 5) fail(Errc::BadDegree, "f must have degree 5");
  if (!f_.is_monic()) fail(Errc::BadDegree, "f must be monic");
  if (Poly::gcd(f_, f_.derivative()).deg() != 0)
    fail(Errc::NonSquarefree, "f has a repeated root; the model is singular");
}

Curve make_curve(std::uint64_t p, const std::vector<std::int64_t>& f_coeffs) {
  return Curve(p, f_coeffs);
}

bool Curve::on_curve(const Point& pt) const {
  if (pt.infinite) return true;
  return F_.mul(pt.y, pt.y) == f_.eval(pt.x);
}

Point Curve::involution(const Point& pt) const {
  if (pt.infinite) return pt;
  return Point::affine(pt.x, F_.neg(pt.y));
}

std::vector<Point> Curve::points() const {
  std::vector<Point> out;
  out.push_back(Point::at_infinity());
  for (fp_t x = 0; x < F_.p(); ++x) {
    fp_t fx = f_.eval(x);
    if (fx == 0) {
      out.push_back(Point::affine(x, 0));
    } else if (auto y = F_.sqrt(fx)) {
      out.push_back(Point::affine(x, *y));
      out.push_back(Point::affine(x, F_.neg(*y)));
    }
  }
  return out;
}

Point Curve::random_affine_point(Rng& rng) const {
  for (int tries = 0; tries < 10000; ++tries) {
    fp_t x = rng.below(F_.p());
    fp_t fx = f_.eval(x);
    auto y = F_.sqrt(fx);
    if (!y) continue;
    fp_t yy = (fx != 0 && rng.below(2) == 1) ? F_.neg(*y) : *y;
    return Point::affine(x, yy);
  }
  fail(Errc::InsufficientPoints, "could not sample an affine point");
}

namespace {

// Cantor composition followed by reduction to weight <= 2.
std::pair<Poly, Poly> cantor_add(const Curve& c, const Poly& u1, const Poly& v1, const Poly& u2,
                                 const Poly& v2) {
  const PrimeField& F = c.field();
  const Poly& f = c.f();

  Poly d1(F), e1(F), e2(F);
  Poly::xgcd(u1, u2, d1, e1, e2);
  Poly sum_v = v1 + v2;
  Poly d(F), c1(F), c2(F);
  Poly::xgcd(d1, sum_v, d, c1, c2);

  Poly s1 = c1 * e1;
  Poly s2 = c1 * e2;
  Poly s3 = c2;

  Poly u = ((u1 * u2) / d) / d;
  Poly v = (s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)) / d;
  v = v % u;

  while (u.deg() > 2) {
    Poly u_next = (f - v * v) / u;
    u_next = u_next.monic();
    Poly v_next = (-v) % u_next;
    u = std::move(u_next);
    v = std::move(v_next);
  }
  u = u.monic();
  v = v % u;
  return {u, v};
}

}  // namespace

DivClass point_class(const Curve& c, const Point& pt) {
  const PrimeField& F = c.field();
  if (pt.infinite) return DivClass(Poly::one(F), Poly(F), 1);
  if (!c.on_curve(pt)) fail(Errc::PointNotOnCurve, "point does not satisfy the curve equation");
  return DivClass(Poly::linear_root(F, pt.x), Poly::constant(F, pt.y), 1);
}

DivClass canonical_class(const Curve& c) { return DivClass::identity(c, 2); }

DivClass add_classes(const Curve& c, const DivClass& a, const DivClass& b) {
  auto [u, v] = cantor_add(c, a.u(), a.v(), b.u(), b.v());
  return DivClass(std::move(u), std::move(v), a.degree() + b.degree());
}

DivClass negate_class(const Curve& c, const DivClass& a) {
  Poly v = (-a.v()) % a.u();
  return DivClass(a.u(), std::move(v), -a.degree());
}

DivClass sub_classes(const Curve& c, const DivClass& a, const DivClass& b) {
  return add_classes(c, a, negate_class(c, b));
}

DivClass scale_class(const Curve& c, const DivClass& a, int k) {
  DivClass base = k >= 0 ? a : negate_class(c, a);
  int n = k >= 0 ? k : -k;
  DivClass acc = DivClass::identity(c, 0);
  for (int i = 0; i < n; ++i) acc = add_classes(c, acc, base);
  return acc;
}

DivClass class_of(const Curve& c, const Divisor& d) {
  DivClass acc = DivClass::identity(c, 0);
  for (const auto& [pt, m] : d.terms()) {
    if (!pt.infinite && (m > 2 || m < -2))
      fail(Errc::UnsupportedMultiplicity, "affine multiplicity exceeds 2");
    DivClass pc = point_class(c, pt);
    acc = add_classes(c, acc, scale_class(c, pc, m));
  }
  return acc;
}

int h0(const Curve& c, const DivClass& cl) {
  int d = cl.degree();
  if (d < 0) return 0;
  if (d == 0) return cl.weight() == 0 ? 1 : 0;
  if (d == 1) return cl.weight() <= 1 ? 1 : 0;
  if (d == 2) return cl.weight() == 0 ? 2 : 1;  // weight 0 means cl = K_C
  return d - 1;                                 // nonspecial for degree >= 3
}

bool is_effective(const Curve& c, const DivClass& cl) {
  int d = cl.degree();
  if (d < 0) return false;
  if (d == 0) return cl.weight() == 0;
  if (d == 1) return cl.weight() <= 1;
  return true;
}

std::optional<Divisor> representative_divisor(const Curve& c, const DivClass& cl) {
  const PrimeField& F = c.field();
  int w = cl.weight();
  if (cl.degree() < w) return std::nullopt;
  Divisor div;
  if (w == 1) {
    fp_t x0 = F.neg(cl.u().coeff(0));
    div.add(Point::affine(x0, cl.v().coeff(0)), 1);
  } else if (w == 2) {
    fp_t b = cl.u().coeff(1), c0 = cl.u().coeff(0);
    fp_t disc = F.sub(F.mul(b, b), F.mul(4, c0));
    auto s = F.sqrt(disc);
    if (!s) return std::nullopt;  // conjugate points, not rational
    fp_t inv2 = F.inv(2);
    fp_t x1 = F.mul(F.sub(*s, b), inv2);
    fp_t x2 = F.mul(F.sub(F.neg(*s), b), inv2);
    if (x1 == x2) {
      div.add(Point::affine(x1, cl.v().eval(x1)), 2);
    } else {
      div.add(Point::affine(x1, cl.v().eval(x1)), 1);
      div.add(Point::affine(x2, cl.v().eval(x2)), 1);
    }
  }
  if (cl.degree() > w) div.add(Point::at_infinity(), cl.degree() - w);
  return div;
}

}  // namespace g2scroll
