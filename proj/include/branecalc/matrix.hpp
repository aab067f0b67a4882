#pragma once

#include <cstddef>
#include <vector>

#include "branecalc/rational.hpp"

namespace branecalc {

// Dense square matrix over exact rationals. Only the small sizes the charge
// lattice needs (6x6, plus rank checks on relation generators).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), a_(n * n) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Rational& at(std::size_t row, std::size_t col) { return a_[row * n_ + col]; }
  const Rational& at(std::size_t row, std::size_t col) const {
    return a_[row * n_ + col];
  }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  // Gauss-Jordan over Q; throws ConstraintError when singular.
  RationalMatrix inverse() const;

  // v * M and M * v
  std::vector<Rational> apply_row(const std::vector<Rational>& v) const;
  std::vector<Rational> apply_col(const std::vector<Rational>& v) const;

  // exact rank of an arbitrary (possibly non-square) rational matrix,
  // rows given as vectors of equal length
  static std::size_t rank(std::vector<std::vector<Rational>> rows);

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

}  // namespace branecalc
