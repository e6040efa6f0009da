#include "pghopf/grammar.hpp"

#include <cctype>
#include <cstdint>
#include <utility>

namespace pghopf {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      message_(message),
      position_(position) {}

MatrixParseError::MatrixParseError(const std::string& message, std::size_t position,
                                   std::optional<std::size_t> row, std::optional<std::size_t> col)
    : ParseError(message, position), row_(row), col_(col) {}

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;

/*
 * Recursive descent over
 *   expr    := term (('+' | '-') term)*
 *   term    := unary (('*' | '/') unary)*
 *   unary   := ('-' | '+') unary | power
 *   power   := primary ('^' exponent)?
 *   primary := integer | identifier | '(' expr ')'
 * The semantic actions come from Sem.
 */
template <class Sem>
class ExprParser {
 public:
  using Value = typename Sem::Value;

  ExprParser(std::string_view src, Sem& sem) : src_(src), sem_(sem) {}

  Value parse() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError("empty expression", pos_);
    Value v = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = sem_.add(v, term());
      } else if (accept('-')) {
        v = sem_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = sem_.mul(v, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        v = sem_.div(v, unary(), at);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return sem_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const std::int64_t e = exponent();
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '^') throw ParseError("chained exponents need parentheses", pos_);
    return sem_.pow(base, e, at);
  }

  std::int64_t exponent() {
    if (accept('(')) {
      const std::int64_t e = exponent();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t e = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      e = e * 10 + (src_[pos_] - '0');
      if (e > kMaxExponent) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer exponent", pos_);
    return negative ? -e : e;
  }

  Value primary() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return sem_.integer(src_.substr(start, pos_ - start), start);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      return sem_.symbol(src_.substr(start, pos_ - start), start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view src_;
  Sem& sem_;
  std::size_t pos_ = 0;
};

// Decimal literal reduced mod p digit by digit, so any length is accepted.
std::uint64_t reduce_literal(std::string_view digits, std::uint64_t p) {
  unsigned __int128 r = 0;
  for (char d : digits) r = (r * 10 + static_cast<unsigned>(d - '0')) % p;
  return static_cast<std::uint64_t>(r);
}

struct ElementSem {
  using Value = RatFunc;
  Field field;

  Value integer(std::string_view digits, std::size_t) const {
    return RatFunc(PolyPi::constant(field, reduce_literal(digits, field.characteristic())));
  }
  Value symbol(std::string_view name, std::size_t at) const {
    if (name == "T") return RatFunc::pi_power(field, 1);
    if (name == "a") {
      if (field.degree() == 1) throw ParseError("symbol 'a' needs an extension field (k > 1)", at);
      return RatFunc(PolyPi::constant(field, field.generator()));
    }
    throw ParseError("unknown symbol '" + std::string(name) + "'", at);
  }
  Value add(const Value& x, const Value& y) const { return x + y; }
  Value sub(const Value& x, const Value& y) const { return x - y; }
  Value neg(const Value& x) const { return -x; }
  Value mul(const Value& x, const Value& y) const { return x * y; }
  Value div(const Value& x, const Value& y, std::size_t at) const {
    if (y.is_zero()) throw ParseError("division by zero (divisor vanishes mod p)", at);
    return x / y;
  }
  Value pow(const Value& x, std::int64_t e, std::size_t at) const {
    if (e < 0 && x.is_zero()) throw ParseError("negative power of zero", at);
    return x.pow(e);
  }
};

// Polynomials over F_p in the symbol a, unreduced (for moduli).
struct ModulusSem {
  using Value = std::vector<std::uint64_t>;
  std::uint64_t p;

  static void trim(Value& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  Value integer(std::string_view digits, std::size_t) const {
    Value v{reduce_literal(digits, p)};
    trim(v);
    return v;
  }
  Value symbol(std::string_view name, std::size_t at) const {
    if (name != "a") throw ParseError("unknown symbol '" + std::string(name) + "' in modulus", at);
    return Value{0, 1};
  }
  Value add(Value x, const Value& y) const {
    if (x.size() < y.size()) x.resize(y.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) x[i] = (x[i] + y[i]) % p;
    trim(x);
    return x;
  }
  Value neg(Value x) const {
    for (auto& c : x) c = (p - c) % p;
    return x;
  }
  Value sub(const Value& x, const Value& y) const { return add(x, neg(y)); }
  Value mul(const Value& x, const Value& y) const {
    if (x.empty() || y.empty()) return {};
    Value r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < y.size(); ++j) {
        r[i + j] = static_cast<std::uint64_t>((r[i + j] + static_cast<unsigned __int128>(x[i]) * y[j]) % p);
      }
    }
    trim(r);
    return r;
  }
  Value div(const Value&, const Value&, std::size_t at) const {
    throw ParseError("division is not allowed in a modulus", at);
  }
  Value pow(const Value& x, std::int64_t e, std::size_t at) const {
    if (e < 0) throw ParseError("negative exponent in modulus", at);
    Value r{1 % p};
    trim(r);
    for (std::int64_t i = 0; i < e; ++i) r = mul(r, x);
    return r;
  }
};

std::string_view trim_ws(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset += b;
  return s.substr(b, e - b);
}

std::uint64_t parse_unsigned(std::string_view s, std::size_t at, const char* what) {
  if (s.empty()) throw ParseError(std::string("missing value for ") + what, at);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError(std::string("invalid digit in ") + what, at + i);
    }
    const auto d = static_cast<std::uint64_t>(s[i] - '0');
    if (v > (UINT64_MAX - d) / 10) throw ParseError(std::string(what) + " out of range", at);
    v = v * 10 + d;
  }
  return v;
}

std::string coefficient_string(const FqElem& c) { return to_string(c); }

bool is_compound(const std::string& s) { return s.find(' ') != std::string::npos; }

}  // namespace

Field parse_field_spec(std::string_view src) {
  std::optional<std::uint64_t> p, k;
  std::optional<std::pair<std::string_view, std::size_t>> mod;
  std::size_t start = 0;
  while (start <= src.size()) {
    std::size_t end = src.find(';', start);
    if (end == std::string_view::npos) end = src.size();
    std::size_t off = start;
    const std::string_view item = trim_ws(src.substr(start, end - start), &off);
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected key=value in field spec", off);
      std::size_t koff = off;
      const std::string_view key = trim_ws(item.substr(0, eq), &koff);
      std::size_t voff = off + eq + 1;
      const std::string_view value = trim_ws(item.substr(eq + 1), &voff);
      if (key == "p") {
        if (p) throw ParseError("duplicate key 'p'", koff);
        p = parse_unsigned(value, voff, "p");
      } else if (key == "k") {
        if (k) throw ParseError("duplicate key 'k'", koff);
        k = parse_unsigned(value, voff, "k");
      } else if (key == "mod") {
        if (mod) throw ParseError("duplicate key 'mod'", koff);
        mod = std::make_pair(value, voff);
      } else {
        throw ParseError("unknown key '" + std::string(key) + "' in field spec", koff);
      }
    }
    start = end + 1;
  }
  if (!p) throw ParseError("field spec needs p=<prime>", 0);
  if (!is_prime(*p)) throw ParseError("p=" + std::to_string(*p) + " is not prime", 0);
  const std::uint64_t degree = k.value_or(1);
  if (degree == 0) throw ParseError("k must be at least 1", 0);
  if (degree == 1) {
    if (mod) throw ParseError("k=1 takes no modulus", mod->second);
    return Field::prime(*p);
  }
  if (!mod) throw ParseError("k>1 needs mod=<polynomial in a>", src.size());
  ModulusSem sem{*p};
  std::vector<std::uint64_t> poly;
  try {
    poly = ExprParser<ModulusSem>(mod->first, sem).parse();
  } catch (const ParseError& e) {
    throw ParseError(e.message(), mod->second + e.position());
  }
  if (poly.size() != degree + 1) {
    throw ParseError("modulus degree " + std::to_string(poly.empty() ? 0 : poly.size() - 1) + " differs from k=" +
                         std::to_string(degree),
                     mod->second);
  }
  try {
    return Field::extension(*p, std::move(poly));
  } catch (const InvalidField& e) {
    throw ParseError(e.what(), mod->second);
  }
}

RatFunc parse_element(std::string_view src, const Field& field) {
  ElementSem sem{field};
  return ExprParser<ElementSem>(src, sem).parse();
}

MatK parse_matrix(std::string_view src, const Field& field) {
  std::size_t off = 0;
  const std::string_view body = trim_ws(src, &off);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw MatrixParseError("matrix must be wrapped in [ ... ]", off);
  }
  const std::size_t base = off + 1;
  const std::string_view inner = body.substr(1, body.size() - 2);

  // Split at top-level ';' and ',' (ignoring separators inside parentheses).
  struct Cell {
    std::string_view text;
    std::size_t offset;
  };
  std::vector<std::vector<Cell>> cells(1);
  int depth = 0;
  std::size_t cell_start = 0;
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    const char c = i < inner.size() ? inner[i] : ';';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw MatrixParseError("unbalanced ')'", base + i);
    if (depth == 0 && (c == ',' || c == ';')) {
      cells.back().push_back({inner.substr(cell_start, i - cell_start), base + cell_start});
      if (c == ';' && i < inner.size()) cells.emplace_back();
      cell_start = i + 1;
    }
  }
  if (depth != 0) throw MatrixParseError("unbalanced '('", base + inner.size());

  const std::size_t cols = cells.front().size();
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (cells[r].size() != cols) {
      throw MatrixParseError("ragged rows: row " + std::to_string(r + 1) + " has " + std::to_string(cells[r].size()) +
                                 " entries, row 1 has " + std::to_string(cols),
                             cells[r].front().offset);
    }
  }
  if (cells.size() != cols) {
    throw MatrixParseError("matrix is " + std::to_string(cells.size()) + "x" + std::to_string(cols) + ", not square",
                           off);
  }
  std::vector<std::vector<RatFunc>> rows(cells.size());
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Cell& cell = cells[r][c];
      try {
        rows[r].push_back(parse_element(cell.text, field));
      } catch (const ParseError& e) {
        throw MatrixParseError("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + e.message(),
                               cell.offset + e.position(), r + 1, c + 1);
      }
    }
  }
  return MatK::from_rows(rows);
}

std::string format(const PolyPi& f) {
  const auto& c = f.coeffs();
  std::string out;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string cs = coefficient_string(FqElem(f.field(), c[e]));
    if (e == 0) {
      out += cs;
      continue;
    }
    if (c[e] != 1) out += is_compound(cs) ? "(" + cs + ")*" : cs + "*";
    out += "T";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

std::string format(const RatFunc& x) {
  const std::string num = format(x.num());
  if (x.den().is_one()) return num;
  const std::string den = format(x.den());
  return (is_compound(num) ? "(" + num + ")" : num) + "/" + (is_compound(den) ? "(" + den + ")" : den);
}

std::string format(const MatK& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ", ";
      out += format(m(i, j));
    }
  }
  return out + "]";
}

std::string format_linear_combination(const std::vector<RatFunc>& coeffs, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!coeffs[j].is_one()) {
      const std::string c = format(coeffs[j]);
      const bool bare = c.find_first_of(" /") == std::string::npos;
      out += (bare ? c : "(" + c + ")") + "*";
    }
    out += names.at(j);
  }
  return out.empty() ? "0" : out;
}

}  // namespace pghopf
