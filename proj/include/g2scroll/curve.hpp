#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "g2scroll/poly.hpp"

namespace g2scroll {

// Deterministic seeded randomness. All bounded draws go through below() so
// output streams are stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), g_(seed) {}

  std::uint64_t next() { return g_(); }
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling on the top of the range to stay unbiased.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = g_();
    } while (v >= limit);
    return v % n;
  }
  // Independent stream derived from (seed, salt); stable under reordering of
  // sibling streams.
  Rng split(std::uint64_t salt) const {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return Rng(z ^ (z >> 31));
  }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 g_;
};

struct Point {
  bool infinite = true;
  fp_t x = 0, y = 0;

  static Point at_infinity() { return Point{}; }
  static Point affine(fp_t x, fp_t y) { return Point{false, x, y}; }

  bool operator==(const Point& o) const noexcept {
    return infinite == o.infinite && (infinite || (x == o.x && y == o.y));
  }
  bool operator<(const Point& o) const noexcept {
    if (infinite != o.infinite) return infinite < o.infinite;
    if (infinite) return false;
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

// Formal sum of rational points. Affine multiplicities are capped at 2 in
// absolute value; the multiplicity at infinity is unrestricted.
class Divisor {
 public:
  Divisor() = default;

  void add(const Point& pt, int mult);
  int mult_at(const Point& pt) const;
  int degree() const;
  int affine_degree() const;  // sum of positive affine multiplicities
  bool is_effective() const;
  const std::map<Point, int>& terms() const noexcept { return terms_; }

  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;

  bool operator==(const Divisor& o) const noexcept { return terms_ == o.terms_; }

 private:
  std::map<Point, int> terms_;
};

// y^2 = f(x), f monic squarefree of degree 5 (odd model: one point at
// infinity, canonical class 2*infinity).
class Curve {
 public:
  Curve(std::uint64_t p, const std::vector<std::int64_t>& f_coeffs);

  const PrimeField& field() const noexcept { return F_; }
  const Poly& f() const noexcept { return f_; }

  bool on_curve(const Point& pt) const;
  Point involution(const Point& pt) const;
  bool is_weierstrass(const Point& pt) const { return !pt.infinite && pt.y == 0; }
  std::vector<Point> points() const;

  Point random_affine_point(Rng& rng) const;

 private:
  PrimeField F_;
  Poly f_;
};

Curve make_curve(std::uint64_t p, const std::vector<std::int64_t>& f_coeffs);

// Degree-tagged divisor class: (u, v) is the reduced Mumford representative
// of class - degree*[infinity]; u monic of degree <= 2, deg v < deg u,
// v^2 = f mod u. The identity of the degree-0 part is (1, 0).
class DivClass {
 public:
  DivClass(Poly u, Poly v, int degree) : u_(std::move(u)), v_(std::move(v)), degree_(degree) {}

  static DivClass identity(const Curve& c, int degree = 0) {
    return DivClass(Poly::one(c.field()), Poly(c.field()), degree);
  }

  const Poly& u() const noexcept { return u_; }
  const Poly& v() const noexcept { return v_; }
  int degree() const noexcept { return degree_; }
  int weight() const noexcept { return u_.deg(); }
  bool is_zero_class() const noexcept { return degree_ == 0 && u_.is_one(); }

  bool operator==(const DivClass& o) const noexcept {
    return degree_ == o.degree_ && u_ == o.u_ && v_ == o.v_;
  }
  bool operator!=(const DivClass& o) const noexcept { return !(*this == o); }

 private:
  Poly u_, v_;
  int degree_;
};

DivClass class_of(const Curve& c, const Divisor& d);
DivClass point_class(const Curve& c, const Point& pt);
DivClass canonical_class(const Curve& c);
DivClass add_classes(const Curve& c, const DivClass& a, const DivClass& b);
DivClass negate_class(const Curve& c, const DivClass& a);
DivClass sub_classes(const Curve& c, const DivClass& a, const DivClass& b);
DivClass scale_class(const Curve& c, const DivClass& a, int k);

// Riemann-Roch dimension h^0(O(cl)) for genus 2 by case analysis.
int h0(const Curve& c, const DivClass& cl);
bool is_effective(const Curve& c, const DivClass& cl);

// Effective divisor with rational support representing cl, when one exists:
// Mumford part must split over the base field and degree must cover the
// weight. The multiplicity overflow onto [infinity] is unconstrained.
std::optional<Divisor> representative_divisor(const Curve& c, const DivClass& cl);

}  // namespace g2scroll
