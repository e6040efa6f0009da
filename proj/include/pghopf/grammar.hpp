#ifndef PGHOPF_GRAMMAR_HPP
#define PGHOPF_GRAMMAR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pghopf/matrix.hpp"

namespace pghopf {

/*
 * Text forms shared by the CLI and the JSON output.
 *
 *   field    p=<prime>  |  p=<prime>;k=<deg>;mod=<poly in a>
 *   element  + - * / ^ ( ), integers, T (the uniformizer), a (generator of
 *            F_q when k > 1). Exponents are integers and may be negative,
 *            so T^-2 means 1/T^2. Whitespace is ignored.
 *   matrix   [e11,e12;e21,e22]   rows split by ';', entries by ','
 *
 * Printing is canonical: ascending powers of T, coefficients as residues in
 * [0, p) (polynomials in a when k > 1), and parse(format(x)) == x.
 */

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

class MatrixParseError : public ParseError {
 public:
  /// row/col are 1-based; absent for structural errors (ragged, non-square).
  MatrixParseError(const std::string& message, std::size_t position, std::optional<std::size_t> row = {},
                   std::optional<std::size_t> col = {});
  std::optional<std::size_t> row() const { return row_; }
  std::optional<std::size_t> col() const { return col_; }

 private:
  std::optional<std::size_t> row_;
  std::optional<std::size_t> col_;
};

Field parse_field_spec(std::string_view src);
RatFunc parse_element(std::string_view src, const Field& field);
MatK parse_matrix(std::string_view src, const Field& field);

std::string format(const PolyPi& f);
std::string format(const RatFunc& x);
std::string format(const MatK& m);

/// "c1*x1 + c2*x2 + ..." skipping zero coefficients; "0" if all vanish.
std::string format_linear_combination(const std::vector<RatFunc>& coeffs, const std::vector<std::string>& names);

}  // namespace pghopf

#endif  // PGHOPF_GRAMMAR_HPP
