#ifndef PGHOPF_FINITE_FIELD_HPP
#define PGHOPF_FINITE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pghopf {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidField : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
struct FieldData;
}

/*
 * Handle to an interned finite field F_q, q = p^k.
 *
 * Elements are passed around as packed "raw" values: for k = 1 the residue
 * itself, for k > 1 the base-p integer sum c_i p^i of the coordinates in the
 * power basis 1, a, ..., a^{k-1} of the modulus. Fields are interned, so two
 * handles compare equal iff they were built from the same (p, k, modulus).
 * Interned field data is immutable and lives for the whole process.
 */
class Field {
 public:
  using Raw = std::uint64_t;

  /// F_p. Throws InvalidField if p is not prime.
  static Field prime(std::uint64_t p);

  /// F_p[a]/(modulus), modulus given by ascending coefficients (degree k >= 2).
  /// The modulus is normalized to be monic; it must be irreducible over F_p.
  static Field extension(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const;
  unsigned degree() const;
  /// q = p^k
  std::uint64_t order() const;
  /// Monic modulus, ascending coefficients. Empty when k = 1.
  const std::vector<std::uint64_t>& modulus() const;

  Raw add(Raw x, Raw y) const;
  Raw sub(Raw x, Raw y) const;
  Raw neg(Raw x) const;
  Raw mul(Raw x, Raw y) const;
  /// Throws DivisionByZero on x = 0.
  Raw inv(Raw x) const;
  Raw frobenius(Raw x) const;
  Raw pow(Raw x, std::uint64_t e) const;

  /// Reduces an integer into the prime subfield.
  Raw from_integer(std::int64_t n) const;
  /// The generator a of F_p[a]/(modulus); only meaningful for k > 1.
  Raw generator() const;

  std::vector<std::uint64_t> unpack(Raw x) const;
  Raw pack(const std::vector<std::uint64_t>& coords) const;

  /// "p=5" or "p=2;k=2;mod=1 + a + a^2"
  std::string describe() const;

  bool operator==(const Field& other) const { return data_ == other.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  const detail::FieldData* data_;
};

bool is_prime(std::uint64_t n);

/// Element of F_q together with the field it lives in.
class FqElem {
 public:
  FqElem(Field field, Field::Raw raw) : field_(field), raw_(raw) {}

  static FqElem zero(Field f) { return {f, 0}; }
  static FqElem one(Field f) { return {f, 1}; }
  static FqElem from_integer(Field f, std::int64_t n) { return {f, f.from_integer(n)}; }
  static FqElem from_coeffs(Field f, const std::vector<std::uint64_t>& coords) {
    return {f, f.pack(coords)};
  }

  const Field& field() const { return field_; }
  Field::Raw raw() const { return raw_; }
  /// Coordinates in the power basis of the modulus; one entry when k = 1.
  std::vector<std::uint64_t> coeffs() const { return field_.unpack(raw_); }

  bool is_zero() const { return raw_ == 0; }
  bool is_one() const { return raw_ == 1; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem operator-() const { return {field_, field_.neg(raw_)}; }
  FqElem inverse() const { return {field_, field_.inv(raw_)}; }
  /// x -> x^p
  FqElem frobenius() const { return {field_, field_.frobenius(raw_)}; }
  FqElem pow(std::uint64_t e) const { return {field_, field_.pow(raw_, e)}; }

  bool operator==(const FqElem& o) const { return field_ == o.field_ && raw_ == o.raw_; }

 private:
  void require_same(const FqElem& o) const;

  Field field_;
  Field::Raw raw_;
};

std::string to_string(const FqElem& x);

}  // namespace pghopf

#endif  // PGHOPF_FINITE_FIELD_HPP
