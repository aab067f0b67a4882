#include "branecalc/matrix.hpp"

#include <utility>

#include "branecalc/errors.hpp"

namespace branecalc {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (n_ != rhs.n_) throw ConstraintError("matrix size mismatch in product");
  RationalMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    if (a.a_[i] != b.a_[i]) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::inverse() const {
  const std::size_t n = n_;
  RationalMatrix work = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw ConstraintError("singular matrix has no inverse");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rational p = work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      const Rational f = work.at(row, col);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work.at(row, j) -= f * work.at(col, j);
        inv.at(row, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::vector<Rational> RationalMatrix::apply_row(
    const std::vector<Rational>& v) const {
  if (v.size() != n_) throw ConstraintError("vector size mismatch in v*M");
  std::vector<Rational> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) out[j] += v[i] * at(i, j);
  }
  return out;
}

std::vector<Rational> RationalMatrix::apply_col(
    const std::vector<Rational>& v) const {
  if (v.size() != n_) throw ConstraintError("vector size mismatch in M*v");
  std::vector<Rational> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!v[j].is_zero()) out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

std::size_t RationalMatrix::rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Rational p = rows[rank][col];
    for (std::size_t j = col; j < cols; ++j) rows[rank][j] /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = col; j < cols; ++j)
        rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace branecalc
