#include "pghopf/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace pghopf {

namespace detail {

struct FieldData {
  std::uint64_t p = 0;
  unsigned k = 1;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;  // monic, size k+1; empty for k = 1
  // k > 1 only: discrete log tables w.r.t. a primitive element
  std::vector<std::uint32_t> exp_table;  // size q-1
  std::vector<std::uint32_t> log_table;  // size q, log_table[0] unused
  std::vector<std::uint32_t> frob_table;
};

}  // namespace detail

namespace {

using detail::FieldData;

// Largest q for which extension fields build their lookup tables.
constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 20;

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
}

std::uint64_t powmod(std::uint64_t x, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, x, p);
    x = mulmod(x, x, p);
    e >>= 1;
  }
  return r;
}

using Dense = std::vector<std::uint64_t>;

void trim(Dense& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g over F_p; g nonzero.
Dense poly_rem(Dense f, const Dense& g, std::uint64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = powmod(g.back(), p - 2, p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = mulmod(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - mulmod(c, g[i], p)) % p;
    }
    trim(f);
  }
  return f;
}

Dense mul_mod_poly(const Dense& x, const Dense& y, const Dense& m, std::uint64_t p) {
  if (x.empty() || y.empty()) return {};
  Dense r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(x[i], y[j], p)) % p;
    }
  }
  return poly_rem(std::move(r), m, p);
}

Dense pow_mod_poly(Dense x, std::uint64_t e, const Dense& m, std::uint64_t p) {
  Dense r{1};
  while (e) {
    if (e & 1) r = mul_mod_poly(r, x, m, p);
    x = mul_mod_poly(x, x, m, p);
    e >>= 1;
  }
  return r;
}

Dense unpack_digits(std::uint64_t raw, std::uint64_t p, unsigned k) {
  Dense d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = raw % p;
    raw /= p;
  }
  trim(d);
  return d;
}

std::uint64_t pack_digits(const Dense& d, std::uint64_t p) {
  std::uint64_t raw = 0;
  for (std::size_t i = d.size(); i-- > 0;) raw = raw * p + d[i];
  return raw;
}

bool is_irreducible(const Dense& modulus, std::uint64_t p) {
  const std::size_t k = modulus.size() - 1;
  // A reducible polynomial of degree k has a monic factor of degree <= k/2.
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t lower = 0; lower < count; ++lower) {
      Dense g = unpack_digits(lower, p, static_cast<unsigned>(d));
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_rem(modulus, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void build_tables(FieldData& fd) {
  const std::uint64_t order = fd.q - 1;
  const auto factors = prime_factors(order);
  Dense gen;
  for (std::uint64_t cand = 2; cand < fd.q; ++cand) {
    Dense x = unpack_digits(cand, fd.p, fd.k);
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (pow_mod_poly(x, order / r, fd.modulus, fd.p) == Dense{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = std::move(x);
      break;
    }
  }
  fd.exp_table.assign(order, 0);
  fd.log_table.assign(fd.q, 0);
  Dense cur{1};
  for (std::uint64_t e = 0; e < order; ++e) {
    const auto raw = static_cast<std::uint32_t>(pack_digits(cur, fd.p));
    fd.exp_table[e] = raw;
    fd.log_table[raw] = static_cast<std::uint32_t>(e);
    cur = mul_mod_poly(cur, gen, fd.modulus, fd.p);
  }
  fd.frob_table.assign(fd.q, 0);
  for (std::uint64_t x = 1; x < fd.q; ++x) {
    fd.frob_table[x] = fd.exp_table[(fd.log_table[x] * fd.p) % order];
  }
}

struct Registry {
  std::mutex mutex;
  std::map<std::tuple<std::uint64_t, Dense>, std::unique_ptr<FieldData>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidField("characteristic " + std::to_string(p) + " is not prime");
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  auto& slot = reg.fields[{p, Dense{}}];
  if (!slot) {
    auto fd = std::make_unique<FieldData>();
    fd->p = p;
    fd->k = 1;
    fd->q = p;
    slot = std::move(fd);
  }
  return Field(slot.get());
}

Field Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw InvalidField("characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 3) throw InvalidField("extension modulus must have degree >= 2");
  const auto k = static_cast<unsigned>(modulus.size() - 1);
  const std::uint64_t lead_inv = powmod(modulus.back(), p - 2, p);
  for (auto& c : modulus) c = mulmod(c, lead_inv, p);

  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > kMaxExtensionOrder / p) {
      throw InvalidField("field order p^k exceeds the supported bound 2^20");
    }
    q *= p;
  }

  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  auto it = reg.fields.find({p, modulus});
  if (it != reg.fields.end()) return Field(it->second.get());
  if (!is_irreducible(modulus, p)) throw InvalidField("modulus is reducible over F_" + std::to_string(p));
  auto fd = std::make_unique<FieldData>();
  fd->p = p;
  fd->k = k;
  fd->q = q;
  fd->modulus = modulus;
  build_tables(*fd);
  auto& slot = reg.fields[{p, std::move(modulus)}];
  slot = std::move(fd);
  return Field(slot.get());
}

std::uint64_t Field::characteristic() const { return data_->p; }
unsigned Field::degree() const { return data_->k; }
std::uint64_t Field::order() const { return data_->q; }
const std::vector<std::uint64_t>& Field::modulus() const { return data_->modulus; }

Field::Raw Field::add(Raw x, Raw y) const {
  const std::uint64_t p = data_->p;
  if (data_->k == 1) {
    const Raw s = x + y;
    return (s >= p || s < x) ? s - p : s;
  }
  Raw out = 0, scale = 1;
  for (unsigned i = 0; i < data_->k; ++i) {
    out += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return out;
}

Field::Raw Field::neg(Raw x) const {
  const std::uint64_t p = data_->p;
  if (data_->k == 1) return x == 0 ? 0 : p - x;
  Raw out = 0, scale = 1;
  for (unsigned i = 0; i < data_->k; ++i) {
    out += ((p - x % p) % p) * scale;
    x /= p;
    scale *= p;
  }
  return out;
}

Field::Raw Field::sub(Raw x, Raw y) const { return add(x, neg(y)); }

Field::Raw Field::mul(Raw x, Raw y) const {
  if (x == 0 || y == 0) return 0;
  if (data_->k == 1) {
    if (data_->p <= 0xffffffffULL) return (x * y) % data_->p;
    return mulmod(x, y, data_->p);
  }
  const std::uint64_t order = data_->q - 1;
  std::uint64_t e = std::uint64_t{data_->log_table[x]} + data_->log_table[y];
  if (e >= order) e -= order;
  return data_->exp_table[e];
}

Field::Raw Field::inv(Raw x) const {
  if (x == 0) throw DivisionByZero("inverse of zero in " + describe());
  if (data_->k == 1) return powmod(x, data_->p - 2, data_->p);
  const std::uint64_t order = data_->q - 1;
  const std::uint64_t l = data_->log_table[x];
  return data_->exp_table[l == 0 ? 0 : order - l];
}

Field::Raw Field::frobenius(Raw x) const {
  if (data_->k == 1) return x;
  return data_->frob_table[x];
}

Field::Raw Field::pow(Raw x, std::uint64_t e) const {
  Raw r = 1;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Field::Raw Field::from_integer(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(data_->p);
  if (data_->p > static_cast<std::uint64_t>(INT64_MAX)) {
    return n >= 0 ? static_cast<Raw>(n) : data_->p - static_cast<Raw>(-(n + 1)) - 1;
  }
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return static_cast<Raw>(r);
}

Field::Raw Field::generator() const { return data_->k == 1 ? 0 : data_->p; }

std::vector<std::uint64_t> Field::unpack(Raw x) const {
  std::vector<std::uint64_t> d(data_->k, 0);
  if (data_->k == 1) {
    d[0] = x;
    return d;
  }
  for (unsigned i = 0; i < data_->k; ++i) {
    d[i] = x % data_->p;
    x /= data_->p;
  }
  return d;
}

Field::Raw Field::pack(const std::vector<std::uint64_t>& coords) const {
  if (coords.size() > data_->k) throw std::invalid_argument("too many coordinates for " + describe());
  if (data_->k == 1) return coords.empty() ? 0 : coords[0] % data_->p;
  Raw out = 0;
  for (std::size_t i = coords.size(); i-- > 0;) out = out * data_->p + coords[i] % data_->p;
  return out;
}

std::string Field::describe() const {
  std::string s = "p=" + std::to_string(data_->p);
  if (data_->k == 1) return s;
  s += ";k=" + std::to_string(data_->k) + ";mod=";
  bool first = true;
  for (std::size_t i = 0; i < data_->modulus.size(); ++i) {
    const auto c = data_->modulus[i];
    if (c == 0) continue;
    if (!first) s += " + ";
    first = false;
    if (i == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += "a";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

void FqElem::require_same(const FqElem& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch("elements of " + field_.describe() + " and " + o.field_.describe() + " do not combine");
  }
}

FqElem FqElem::operator+(const FqElem& o) const {
  require_same(o);
  return {field_, field_.add(raw_, o.raw_)};
}

FqElem FqElem::operator-(const FqElem& o) const {
  require_same(o);
  return {field_, field_.sub(raw_, o.raw_)};
}

FqElem FqElem::operator*(const FqElem& o) const {
  require_same(o);
  return {field_, field_.mul(raw_, o.raw_)};
}

FqElem FqElem::operator/(const FqElem& o) const {
  require_same(o);
  if (o.raw_ == 0) throw DivisionByZero("division by zero in " + field_.describe());
  return {field_, field_.mul(raw_, field_.inv(o.raw_))};
}

std::string to_string(const FqElem& x) {
  const auto c = x.coeffs();
  if (x.field().degree() == 1) return std::to_string(c[0]);
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) s += std::to_string(c[i]) + "*";
    s += "a";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace pghopf
