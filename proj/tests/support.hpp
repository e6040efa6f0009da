#ifndef PGHOPF_TESTS_SUPPORT_HPP
#define PGHOPF_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pghopf/matrix.hpp"

namespace pghopf::testing {

// Random objects for the property suites. Every suite seeds its own Gen.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return range(0, 1) == 1; }

  Field::Raw element(const Field& f) { return static_cast<Field::Raw>(range(0, f.order() - 1)); }
  Field::Raw nonzero(const Field& f) { return static_cast<Field::Raw>(range(1, f.order() - 1)); }

  PolyPi poly(const Field& f, int max_degree) {
    std::vector<Field::Raw> c(static_cast<std::size_t>(range(0, max_degree + 1)));
    for (auto& x : c) x = element(f);
    return PolyPi(f, c);
  }

  // pi^shift * num / den with small degrees; zero with small probability.
  RatFunc ratfunc(const Field& f, int max_degree = 3, int max_shift = 3) {
    PolyPi num = poly(f, max_degree);
    PolyPi den = poly(f, max_degree);
    if (den.is_zero()) den = PolyPi::constant(f, 1);
    return RatFunc::make(num, den) * RatFunc::pi_power(f, range(-max_shift, max_shift));
  }

  RatFunc nonzero_ratfunc(const Field& f, int max_degree = 3, int max_shift = 3) {
    for (;;) {
      RatFunc x = ratfunc(f, max_degree, max_shift);
      if (!x.is_zero()) return x;
    }
  }

  // Element of R: a polynomial over a denominator with nonzero constant term.
  RatFunc integral(const Field& f, int max_degree = 2) {
    PolyPi den = poly(f, max_degree);
    std::vector<Field::Raw> c = den.coeffs();
    if (c.empty()) c.push_back(0);
    c[0] = nonzero(f);
    return RatFunc::make(poly(f, max_degree), PolyPi(f, c));
  }

  RatFunc unit(const Field& f, int max_degree = 2) {
    for (;;) {
      RatFunc x = integral(f, max_degree);
      if (x.valuation() == Valuation(0)) return x;
    }
  }

  MatK matrix(const Field& f, std::size_t n, int max_degree = 2, int max_shift = 2) {
    MatK m(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = ratfunc(f, max_degree, max_shift);
    }
    return m;
  }

  MatK invertible(const Field& f, std::size_t n, int max_degree = 2, int max_shift = 2) {
    for (;;) {
      MatK m = matrix(f, n, max_degree, max_shift);
      if (!det(m).is_zero()) return m;
    }
  }

  MatK integral_matrix(const Field& f, std::size_t n, int max_degree = 2) {
    MatK m(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = integral(f, max_degree);
    }
    return m;
  }

  // Lower unitriangular * diagonal of units * upper unitriangular, all over R,
  // with the columns shuffled.
  MatK unit_matrix(const Field& f, std::size_t n) {
    MatK L = MatK::identity(f, n), D(f, n), Uu = MatK::identity(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      D(i, i) = unit(f);
      for (std::size_t j = 0; j < i; ++j) {
        L(i, j) = integral(f);
        Uu(j, i) = integral(f);
      }
    }
    MatK P(f, n);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng_);
    for (std::size_t i = 0; i < n; ++i) P(perm[i], i) = RatFunc::from_integer(f, 1);
    return L * D * Uu * P;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pghopf::testing

#endif  // PGHOPF_TESTS_SUPPORT_HPP
