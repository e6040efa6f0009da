#include "pghopf/matrix.hpp"

#include <string>
#include <utility>

namespace pghopf {

MatK::MatK(Field f, std::size_t n) : field_(f), n_(n), a_(n * n, RatFunc(f)) {
  if (n == 0) throw DimensionMismatch("matrix dimension must be at least 1");
}

MatK MatK::identity(Field f, std::size_t n) {
  MatK m(f, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc::from_integer(f, 1);
  return m;
}

MatK MatK::diagonal(const std::vector<RatFunc>& d) {
  if (d.empty()) throw DimensionMismatch("empty diagonal");
  MatK m(d.front().field(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(d[i].field() == m.field_)) throw FieldMismatch("diagonal entries over different fields");
    m(i, i) = d[i];
  }
  return m;
}

MatK MatK::from_rows(const std::vector<std::vector<RatFunc>>& rows) {
  if (rows.empty() || rows.front().empty()) throw DimensionMismatch("empty matrix");
  const std::size_t n = rows.size();
  MatK m(rows.front().front().field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw DimensionMismatch("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(rows[i][j].field() == m.field_)) throw FieldMismatch("matrix entries over different fields");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<RatFunc> MatK::column(std::size_t j) const {
  std::vector<RatFunc> c;
  c.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) c.push_back((*this)(i, j));
  return c;
}

void MatK::require_compatible(const MatK& o) const {
  if (n_ != o.n_) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }
  if (!(field_ == o.field_)) throw FieldMismatch("matrices over different fields");
}

MatK MatK::operator*(const MatK& o) const {
  require_compatible(o);
  MatK out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const RatFunc& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const RatFunc& y = o(k, j);
        if (y.is_zero()) continue;
        out(i, j) += x * y;
      }
    }
  }
  return out;
}

MatK MatK::operator+(const MatK& o) const {
  require_compatible(o);
  MatK out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

MatK MatK::operator-(const MatK& o) const {
  require_compatible(o);
  MatK out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

MatK MatK::scaled(const RatFunc& c) const {
  MatK out = *this;
  for (auto& x : out.a_) x *= c;
  return out;
}

bool MatK::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

RatFunc det(const MatK& m) {
  const std::size_t n = m.size();
  MatK w = m;
  RatFunc result = RatFunc::from_integer(m.field(), 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && w(piv, c).is_zero()) ++piv;
    if (piv == n) return RatFunc(m.field());
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(w(piv, j), w(c, j));
      result = -result;
    }
    const RatFunc pivot = w(c, c);
    result *= pivot;
    const RatFunc pivot_inv = pivot.inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (w(r, c).is_zero()) continue;
      const RatFunc factor = w(r, c) * pivot_inv;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (!w(c, j).is_zero()) w(r, j) -= factor * w(c, j);
      }
      w(r, c) = RatFunc(m.field());
    }
  }
  return result;
}

MatK inverse(const MatK& m) {
  const std::size_t n = m.size();
  const Field& f = m.field();
  MatK w = m;
  MatK inv = MatK::identity(f, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && w(piv, c).is_zero()) ++piv;
    if (piv == n) throw SingularMatrix("matrix is singular");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w(piv, j), w(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    const RatFunc pivot_inv = w(c, c).inverse();
    if (!pivot_inv.is_one()) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!w(c, j).is_zero()) w(c, j) *= pivot_inv;
        if (!inv(c, j).is_zero()) inv(c, j) *= pivot_inv;
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || w(r, c).is_zero()) continue;
      const RatFunc factor = w(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!w(c, j).is_zero()) w(r, j) -= factor * w(c, j);
        if (!inv(c, j).is_zero()) inv(r, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

MatK frobenius_twist(const MatK& m) {
  MatK out(m.field(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j).pth_power();
  }
  return out;
}

std::optional<IntegralityWitness> find_non_integral(const MatK& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!m(i, j).is_integral()) return IntegralityWitness{i, j, m(i, j).valuation()};
    }
  }
  return std::nullopt;
}

bool is_unit(const MatK& m) { return is_integral(m) && det(m).valuation() == Valuation(0); }

}  // namespace pghopf
