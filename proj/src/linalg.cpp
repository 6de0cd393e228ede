#include "g2scroll/linalg.hpp"

namespace g2scroll {

std::vector<fp_t> Mat::mul_vec(const std::vector<fp_t>& v) const {
  if (v.size() != cols_) fail(Errc::LengthMismatch, "matrix-vector size mismatch");
  std::vector<fp_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    fp_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s = F_.add(s, F_.mul(at(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

RrefResult rref(const Mat& m) {
  const PrimeField& F = m.field();
  Mat r = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < r.cols() && rank < r.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < r.rows() && r.at(piv, col) == 0) ++piv;
    if (piv == r.rows()) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(rank, j));
    }
    fp_t inv = F.inv(r.at(rank, col));
    for (std::size_t j = col; j < r.cols(); ++j) r.at(rank, j) = F.mul(r.at(rank, j), inv);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == rank) continue;
      fp_t c = r.at(i, col);
      if (c == 0) continue;
      for (std::size_t j = col; j < r.cols(); ++j)
        r.at(i, j) = F.sub(r.at(i, j), F.mul(c, r.at(rank, j)));
    }
    ++rank;
  }
  return {rank, std::move(r)};
}

Subspace Subspace::full(PrimeField F, std::size_t ambient) {
  Mat id(F, ambient, ambient);
  for (std::size_t i = 0; i < ambient; ++i) id.at(i, i) = 1;
  return Subspace(std::move(id));
}

Subspace Subspace::from_rows(const Mat& rows) {
  auto [rank, r] = rref(rows);
  Mat basis(rows.field(), rank, rows.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.at(i, j);
  return Subspace(std::move(basis));
}

Subspace kernel_basis(const Mat& m) {
  const PrimeField& F = m.field();
  auto [rank, r] = rref(m);
  std::size_t n = m.cols();
  // Locate pivot columns.
  std::vector<std::size_t> pivot_col(rank);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t j = 0;
    while (j < n && r.at(i, j) == 0) ++j;
    pivot_col[i] = j;
    is_pivot[j] = true;
  }
  Mat gens(F, n - rank, n);
  std::size_t g = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    gens.at(g, j) = 1;
    for (std::size_t i = 0; i < rank; ++i) gens.at(g, pivot_col[i]) = F.neg(r.at(i, j));
    ++g;
  }
  return Subspace::from_rows(gens);
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(Errc::AmbientMismatch, "span_sum: ambient dimensions differ");
  Mat stacked(a.field(), a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) stacked.at(i, j) = a.basis().at(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.ambient_dim(); ++j) stacked.at(a.dim() + i, j) = b.basis().at(i, j);
  return Subspace::from_rows(stacked);
}

Subspace span_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(Errc::AmbientMismatch, "span_intersect: ambient dimensions differ");
  const PrimeField& F = a.field();
  std::size_t n = a.ambient_dim();
  // Zassenhaus: reduce rows (u|u) for u in a and (w|0) for w in b; rows whose
  // left half vanishes carry an intersection basis in the right half.
  Mat z(F, a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      z.at(i, j) = a.basis().at(i, j);
      z.at(i, n + j) = a.basis().at(i, j);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) z.at(a.dim() + i, j) = b.basis().at(i, j);
  auto [rank, r] = rref(z);
  Mat inter(F, rank, n);
  std::size_t cnt = 0;
  for (std::size_t i = 0; i < rank; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (r.at(i, j) != 0) {
        left_zero = false;
        break;
      }
    }
    if (!left_zero) continue;
    for (std::size_t j = 0; j < n; ++j) inter.at(cnt, j) = r.at(i, n + j);
    ++cnt;
  }
  Mat rows(F, cnt, n);
  for (std::size_t i = 0; i < cnt; ++i)
    for (std::size_t j = 0; j < n; ++j) rows.at(i, j) = inter.at(i, j);
  return Subspace::from_rows(rows);
}

bool contains(const Subspace& a, const std::vector<fp_t>& v) {
  if (v.size() != a.ambient_dim()) fail(Errc::LengthMismatch, "contains: vector length mismatch");
  const PrimeField& F = a.field();
  std::vector<fp_t> w = v;
  for (auto& c : w) c %= F.p();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::size_t j = 0;
    while (j < a.ambient_dim() && a.basis().at(i, j) == 0) ++j;
    if (j == a.ambient_dim()) continue;
    fp_t c = w[j];
    if (c == 0) continue;
    for (std::size_t k = j; k < a.ambient_dim(); ++k) w[k] = F.sub(w[k], F.mul(c, a.basis().at(i, k)));
  }
  for (fp_t c : w)
    if (c != 0) return false;
  return true;
}

std::optional<std::vector<fp_t>> solve(const Mat& A, const std::vector<fp_t>& b) {
  if (b.size() != A.rows()) fail(Errc::LengthMismatch, "solve: rhs length mismatch");
  const PrimeField& F = A.field();
  Mat aug(F, A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i] % F.p();
  }
  auto [rank, r] = rref(aug);
  std::vector<fp_t> x(A.cols(), 0);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t j = 0;
    while (j < aug.cols() && r.at(i, j) == 0) ++j;
    if (j == A.cols()) return std::nullopt;  // pivot in the augmented column
    x[j] = r.at(i, A.cols());
  }
  return x;
}

}  // namespace g2scroll
