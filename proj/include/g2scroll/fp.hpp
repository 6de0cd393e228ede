#pragma once

#include <cstdint>
#include <optional>

#include "g2scroll/errors.hpp"

namespace g2scroll {

// Field elements are plain residues in [0, p). The modulus lives in a shared
// PrimeField context carried by every container that does arithmetic.
using fp_t = std::uint64_t;

bool is_prime_u64(std::uint64_t n);

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }

  fp_t reduce(std::int64_t n) const noexcept {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<fp_t>(r);
  }

  fp_t add(fp_t a, fp_t b) const noexcept {
    fp_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  fp_t sub(fp_t a, fp_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  fp_t neg(fp_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  fp_t mul(fp_t a, fp_t b) const noexcept { return (a * b) % p_; }
  fp_t pow(fp_t a, std::uint64_t e) const noexcept;
  fp_t inv(fp_t a) const;
  fp_t div(fp_t a, fp_t b) const { return mul(a, inv(b)); }

  bool is_square(fp_t a) const noexcept;
  // Tonelli-Shanks; nullopt when a is a non-residue.
  std::optional<fp_t> sqrt(fp_t a) const;

  bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace g2scroll
