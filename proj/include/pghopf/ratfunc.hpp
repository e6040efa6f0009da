#ifndef PGHOPF_RATFUNC_HPP
#define PGHOPF_RATFUNC_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pghopf/finite_field.hpp"

namespace pghopf {

/// pi-adic valuation: an integer, or +infinity for zero.
class Valuation {
 public:
  constexpr Valuation(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Valuation infinity() { return Valuation(kInf); }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr bool is_finite() const { return v_ != kInf; }
  /// Throws std::logic_error on +infinity.
  std::int64_t value() const;

  constexpr auto operator<=>(const Valuation&) const = default;
  constexpr bool operator==(const Valuation&) const = default;

  /// +infinity absorbs.
  constexpr Valuation operator+(Valuation o) const {
    return (is_infinite() || o.is_infinite()) ? infinity() : Valuation(v_ + o.v_);
  }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t v_;
};

std::string to_string(Valuation v);

/// Polynomial in the uniformizer pi with coefficients in F_q (ascending).
class PolyPi {
 public:
  using Raw = Field::Raw;

  explicit PolyPi(Field f) : field_(f) {}
  PolyPi(Field f, std::vector<Raw> coeffs);

  static PolyPi constant(Field f, Raw c);
  /// c * pi^e
  static PolyPi monomial(Field f, Raw c, std::size_t e);

  const Field& field() const { return field_; }
  const std::vector<Raw>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  /// Largest e with pi^e dividing the polynomial; 0 for the zero polynomial.
  std::size_t ord() const;
  /// Exactly one nonzero coefficient.
  bool is_monomial() const;
  Raw leading() const { return c_.empty() ? 0 : c_.back(); }
  FqElem coeff(std::size_t i) const { return {field_, i < c_.size() ? c_[i] : 0}; }
  FqElem eval_at_zero() const { return coeff(0); }

  PolyPi shifted_down(std::size_t n) const;  // exact division by pi^n
  PolyPi shifted_up(std::size_t n) const;    // multiplication by pi^n
  PolyPi scaled(Raw c) const;
  PolyPi monic() const;
  /// Sum a_i^p pi^{p i}
  PolyPi pth_power() const;

  PolyPi operator+(const PolyPi& o) const;
  PolyPi operator-(const PolyPi& o) const;
  PolyPi operator*(const PolyPi& o) const;
  PolyPi operator-() const;

  bool operator==(const PolyPi& o) const { return field_ == o.field_ && c_ == o.c_; }

 private:
  void trim();
  Field field_;
  std::vector<Raw> c_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<PolyPi, PolyPi> divmod(const PolyPi& f, const PolyPi& g);
/// Monic gcd (zero iff both inputs are zero).
PolyPi gcd(const PolyPi& f, const PolyPi& g);

/*
 * Element of K = F_q(pi).
 *
 * Canonical form: num/den with gcd(num, den) = 1 and den monic, so equal
 * elements have identical representations. Negative powers of pi live in
 * the denominator. The pi-adic valuation is cached.
 */
class RatFunc {
 public:
  using Raw = Field::Raw;

  /// Zero of K over f.
  explicit RatFunc(Field f) : num_(f), den_(PolyPi::constant(f, 1)), val_(Valuation::infinity()) {}
  /// Embeds a polynomial.
  explicit RatFunc(PolyPi num);

  /// Reduces num/den to canonical form; throws DivisionByZero if den = 0.
  static RatFunc make(PolyPi num, PolyPi den);
  static RatFunc constant(const FqElem& c);
  static RatFunc from_integer(Field f, std::int64_t n);
  /// pi^e for any integer e.
  static RatFunc pi_power(Field f, std::int64_t e);
  /// Sum_i coeffs[i] pi^{low + i}
  static RatFunc laurent(Field f, std::int64_t low, const std::vector<Raw>& coeffs);

  const Field& field() const { return num_.field(); }
  const PolyPi& num() const { return num_; }
  const PolyPi& den() const { return den_; }
  Valuation valuation() const { return val_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  /// Membership in R: valuation >= 0.
  bool is_integral() const { return val_ >= Valuation(0); }
  /// Exactly pi^m for some integer m (coefficient 1).
  bool is_pi_power() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc inverse() const;
  /// Integer power; negative exponents invert (DivisionByZero on 0).
  RatFunc pow(std::int64_t e) const;
  /// x^p, computed coefficientwise via Frobenius (a ring homomorphism).
  RatFunc pth_power() const;
  /// Residue x(0) in F_q; throws std::domain_error if x is not integral.
  FqElem reduce_mod_pi() const;

  /// Coefficients of pi^e in the Laurent expansion, for e in [from, to).
  std::vector<FqElem> laurent_coeffs(std::int64_t from, std::int64_t to) const;
  /// Laurent expansion truncated to exponents below j (exact, finite).
  RatFunc truncated_below(std::int64_t j) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  RatFunc(PolyPi num, PolyPi den, Valuation val)
      : num_(std::move(num)), den_(std::move(den)), val_(val) {}
  void require_same(const RatFunc& o) const;

  PolyPi num_;
  PolyPi den_;
  Valuation val_;
};

}  // namespace pghopf

#endif  // PGHOPF_RATFUNC_HPP
