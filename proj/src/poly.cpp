#include "g2scroll/poly.hpp"

#include <algorithm>

namespace g2scroll {

fp_t Poly::eval(fp_t x) const noexcept {
  fp_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = F_.add(F_.mul(r, x), *it);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<fp_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Poly(F_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<fp_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Poly(F_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(F_);
  std::vector<fp_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = F_.add(r[i + j], F_.mul(c_[i], o.c_[j]));
  }
  return Poly(F_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<fp_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = F_.neg(c_[i]);
  return Poly(F_, std::move(r));
}

Poly Poly::scaled(fp_t s) const {
  std::vector<fp_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = F_.mul(c_[i], s % F_.p());
  return Poly(F_, std::move(r));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(F_);
  std::vector<fp_t> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = F_.mul(c_[i], static_cast<fp_t>(i % F_.p()));
  return Poly(F_, std::move(r));
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return scaled(F_.inv(lead()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(Errc::Internal, "polynomial division by zero");
  const PrimeField& F = a.F_;
  if (a.deg() < b.deg()) return {Poly(F), a};
  std::vector<fp_t> rem = a.c_;
  std::vector<fp_t> quot(static_cast<size_t>(a.deg() - b.deg() + 1), 0);
  fp_t inv_lead = F.inv(b.lead());
  for (int i = a.deg(); i >= b.deg(); --i) {
    fp_t c = rem[static_cast<size_t>(i)];
    if (c == 0) continue;
    fp_t q = F.mul(c, inv_lead);
    quot[static_cast<size_t>(i - b.deg())] = q;
    for (int j = 0; j <= b.deg(); ++j) {
      size_t k = static_cast<size_t>(i - b.deg() + j);
      rem[k] = F.sub(rem[k], F.mul(q, b.coeff(j)));
    }
  }
  return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

bool Poly::divides(const Poly& a) const { return divmod(a, *this).second.is_zero(); }

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

void Poly::xgcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
  const PrimeField& F = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(F), s1 = Poly(F);
  Poly t0 = Poly(F), t1 = Poly::one(F);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    g = r0;
    s = s0;
    t = t0;
    return;
  }
  fp_t c = F.inv(r0.lead());
  g = r0.scaled(c);
  s = s0.scaled(c);
  t = t0.scaled(c);
}

std::vector<fp_t> Poly::taylor(fp_t x0, int k) const {
  std::vector<fp_t> out(static_cast<size_t>(k), 0);
  std::vector<fp_t> work = c_;
  for (int i = 0; i < k; ++i) {
    if (work.empty()) break;
    // Synthetic division by (x - x0): remainder is the next Taylor coefficient.
    fp_t rem = 0;
    for (auto it = work.rbegin(); it != work.rend(); ++it) rem = F_.add(F_.mul(rem, x0), *it);
    out[static_cast<size_t>(i)] = rem;
    std::vector<fp_t> q(work.size() > 1 ? work.size() - 1 : 0, 0);
    fp_t carry = 0;
    for (size_t j = work.size(); j-- > 1;) {
      carry = F_.add(F_.mul(carry, x0), work[j]);
      q[j - 1] = carry;
    }
    work = std::move(q);
  }
  return out;
}

}  // namespace g2scroll
