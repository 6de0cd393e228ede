#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "g2scroll/fp.hpp"

namespace g2scroll {

// Dense row-major matrix over a prime field.
class Mat {
 public:
  Mat(PrimeField F, std::size_t rows, std::size_t cols)
      : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  const PrimeField& field() const noexcept { return F_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  fp_t& at(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
  fp_t at(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }

  std::vector<fp_t> row(std::size_t i) const {
    return std::vector<fp_t>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  void set_row(std::size_t i, const std::vector<fp_t>& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j] % F_.p();
  }

  std::vector<fp_t> mul_vec(const std::vector<fp_t>& v) const;

  bool operator==(const Mat& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  PrimeField F_;
  std::size_t rows_, cols_;
  std::vector<fp_t> a_;
};

struct RrefResult {
  std::size_t rank;
  Mat r;  // canonical RREF, zero rows at the bottom, same shape as the input
};

RrefResult rref(const Mat& m);

// Row space in canonical reduced row-echelon form: pivot columns strictly
// increasing, pivots 1, pivot columns cleared elsewhere, no zero rows.
// Subspace equality is plain matrix equality.
class Subspace {
 public:
  static Subspace zero(PrimeField F, std::size_t ambient) { return Subspace(Mat(F, 0, ambient)); }
  static Subspace full(PrimeField F, std::size_t ambient);
  static Subspace from_rows(const Mat& rows);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Mat& basis() const noexcept { return basis_; }
  const PrimeField& field() const noexcept { return basis_.field(); }

  bool operator==(const Subspace& o) const noexcept { return basis_ == o.basis_; }

 private:
  explicit Subspace(Mat basis) : basis_(std::move(basis)) {}
  Mat basis_;
};

Subspace kernel_basis(const Mat& m);
Subspace span_sum(const Subspace& a, const Subspace& b);
Subspace span_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const std::vector<fp_t>& v);

// Solves A x = b; nullopt when inconsistent. Free variables are set to zero.
std::optional<std::vector<fp_t>> solve(const Mat& A, const std::vector<fp_t>& b);

}  // namespace g2scroll
