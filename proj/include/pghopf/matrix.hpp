#ifndef PGHOPF_MATRIX_HPP
#define PGHOPF_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pghopf/ratfunc.hpp"

namespace pghopf {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Square matrix over K, row-major. Indices are 0-based.
class MatK {
 public:
  /// n x n zero matrix.
  MatK(Field f, std::size_t n);

  static MatK identity(Field f, std::size_t n);
  static MatK diagonal(const std::vector<RatFunc>& d);
  /// Throws DimensionMismatch unless rows form a nonempty square array.
  static MatK from_rows(const std::vector<std::vector<RatFunc>>& rows);

  std::size_t size() const { return n_; }
  const Field& field() const { return field_; }

  const RatFunc& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  std::vector<RatFunc> column(std::size_t j) const;

  MatK operator*(const MatK& o) const;
  MatK operator+(const MatK& o) const;
  MatK operator-(const MatK& o) const;
  MatK scaled(const RatFunc& c) const;

  bool is_zero() const;
  bool operator==(const MatK& o) const { return n_ == o.n_ && field_ == o.field_ && a_ == o.a_; }

 private:
  void require_compatible(const MatK& o) const;

  Field field_;
  std::size_t n_;
  std::vector<RatFunc> a_;
};

/// Determinant by exact Gaussian elimination.
RatFunc det(const MatK& m);

/// Exact inverse; throws SingularMatrix.
MatK inverse(const MatK& m);

/// Entrywise p-th power M^(p).
MatK frobenius_twist(const MatK& m);

/// Entry of negative valuation, reported as (row, col) 0-based.
struct IntegralityWitness {
  std::size_t row;
  std::size_t col;
  Valuation valuation;
};

/// First entry (row-major) not in R, if any.
std::optional<IntegralityWitness> find_non_integral(const MatK& m);

inline bool is_integral(const MatK& m) { return !find_non_integral(m).has_value(); }

/// Membership in GL_n(R): integral with unit determinant.
bool is_unit(const MatK& m);

}  // namespace pghopf

#endif  // PGHOPF_MATRIX_HPP
