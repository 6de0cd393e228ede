#include "g2scroll/fp.hpp"

namespace g2scroll {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs with the standard base set.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 5) fail(Errc::SmallPrime, "modulus must be at least 5");
  if (p >= (1ull << 31)) fail(Errc::NotPrime, "modulus too large (must fit in 31 bits)");
  if (!is_prime_u64(p)) fail(Errc::NotPrime, "modulus is not prime");
}

fp_t PrimeField::pow(fp_t a, std::uint64_t e) const noexcept {
  fp_t r = 1;
  a %= p_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

fp_t PrimeField::inv(fp_t a) const {
  if (a == 0) fail(Errc::Internal, "division by zero in prime field");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a % p_);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<fp_t>(t);
}

bool PrimeField::is_square(fp_t a) const noexcept {
  if (a == 0) return true;
  return pow(a, (p_ - 1) / 2) == 1;
}

std::optional<fp_t> PrimeField::sqrt(fp_t a) const {
  a %= p_;
  if (a == 0) return fp_t{0};
  if (!is_square(a)) return std::nullopt;
  if (p_ % 4 == 3) {
    fp_t r = pow(a, (p_ + 1) / 4);
    return r;
  }
  // Tonelli-Shanks.
  std::uint64_t q = p_ - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  fp_t z = 2;
  while (is_square(z)) ++z;
  fp_t m = static_cast<fp_t>(s);
  fp_t c = pow(z, q);
  fp_t t = pow(a, q);
  fp_t r = pow(a, (q + 1) / 2);
  while (t != 1) {
    fp_t i = 0;
    fp_t t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2);
      ++i;
    }
    fp_t b = c;
    for (fp_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

}  // namespace g2scroll
