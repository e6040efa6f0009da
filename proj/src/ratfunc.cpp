#include "pghopf/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace pghopf {

std::int64_t Valuation::value() const {
  if (is_infinite()) throw std::logic_error("valuation of zero is +infinity");
  return v_;
}

std::string to_string(Valuation v) { return v.is_infinite() ? "inf" : std::to_string(v.value()); }

// ---------------------------------------------------------------- PolyPi

PolyPi::PolyPi(Field f, std::vector<Raw> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

PolyPi PolyPi::constant(Field f, Raw c) { return c == 0 ? PolyPi(f) : PolyPi(f, {c}); }

PolyPi PolyPi::monomial(Field f, Raw c, std::size_t e) {
  if (c == 0) return PolyPi(f);
  std::vector<Raw> v(e + 1, 0);
  v[e] = c;
  return PolyPi(f, std::move(v));
}

void PolyPi::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t PolyPi::ord() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return i;
  }
  return 0;
}

bool PolyPi::is_monomial() const { return !c_.empty() && ord() + 1 == c_.size(); }

PolyPi PolyPi::shifted_down(std::size_t n) const {
  if (n == 0) return *this;
  if (n >= c_.size()) return PolyPi(field_);
  PolyPi out(field_);
  out.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(n), c_.end());
  return out;
}

PolyPi PolyPi::shifted_up(std::size_t n) const {
  if (n == 0 || c_.empty()) return *this;
  PolyPi out(field_);
  out.c_.reserve(c_.size() + n);
  out.c_.assign(n, 0);
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

PolyPi PolyPi::scaled(Raw c) const {
  if (c == 1) return *this;
  if (c == 0) return PolyPi(field_);
  PolyPi out(field_);
  out.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = field_.mul(c_[i], c);
  return out;
}

PolyPi PolyPi::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scaled(field_.inv(c_.back()));
}

PolyPi PolyPi::pth_power() const {
  if (c_.empty()) return *this;
  const std::size_t p = field_.characteristic();
  PolyPi out(field_);
  out.c_.assign((c_.size() - 1) * p + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i * p] = field_.frobenius(c_[i]);
  return out;
}

PolyPi PolyPi::operator+(const PolyPi& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
  if (o.c_.empty()) return *this;
  if (c_.empty()) return o;
  PolyPi out(field_);
  const auto& big = c_.size() >= o.c_.size() ? c_ : o.c_;
  const auto& small = c_.size() >= o.c_.size() ? o.c_ : c_;
  out.c_ = big;
  for (std::size_t i = 0; i < small.size(); ++i) out.c_[i] = field_.add(out.c_[i], small[i]);
  out.trim();
  return out;
}

PolyPi PolyPi::operator-() const {
  PolyPi out(field_);
  out.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = field_.neg(c_[i]);
  return out;
}

PolyPi PolyPi::operator-(const PolyPi& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
  if (o.c_.empty()) return *this;
  PolyPi out(field_);
  out.c_ = c_;
  if (out.c_.size() < o.c_.size()) out.c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) out.c_[i] = field_.sub(out.c_[i], o.c_[i]);
  out.trim();
  return out;
}

PolyPi PolyPi::operator*(const PolyPi& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
  if (c_.empty() || o.c_.empty()) return PolyPi(field_);
  PolyPi out(field_);
  out.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      out.c_[i + j] = field_.add(out.c_[i + j], field_.mul(c_[i], o.c_[j]));
    }
  }
  out.trim();
  return out;
}

std::pair<PolyPi, PolyPi> divmod(const PolyPi& f, const PolyPi& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Field& F = f.field();
  if (!(F == g.field())) throw FieldMismatch("polynomials over different fields");
  std::vector<Field::Raw> r = f.coeffs();
  const auto& gc = g.coeffs();
  if (r.size() < gc.size()) return {PolyPi(F), f};
  const std::size_t dg = gc.size() - 1;
  const Field::Raw lead_inv = F.inv(gc.back());
  std::vector<Field::Raw> q(r.size() - dg, 0);
  for (std::size_t k = r.size(); k-- > dg;) {
    const Field::Raw c = F.mul(r[k], lead_inv);
    if (c == 0) continue;
    q[k - dg] = c;
    for (std::size_t i = 0; i <= dg; ++i) r[k - dg + i] = F.sub(r[k - dg + i], F.mul(c, gc[i]));
  }
  r.resize(dg);
  return {PolyPi(F, std::move(q)), PolyPi(F, std::move(r))};
}

PolyPi gcd(const PolyPi& f, const PolyPi& g) {
  PolyPi a = f, b = g;
  while (!b.is_zero()) {
    PolyPi r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// --------------------------------------------------------------- RatFunc

RatFunc::RatFunc(PolyPi num)
    : num_(std::move(num)),
      den_(PolyPi::constant(num_.field(), 1)),
      val_(num_.is_zero() ? Valuation::infinity() : Valuation(static_cast<std::int64_t>(num_.ord()))) {}

RatFunc RatFunc::make(PolyPi num, PolyPi den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (!(num.field() == den.field())) throw FieldMismatch("numerator and denominator over different fields");
  const Field f = num.field();
  if (num.is_zero()) return RatFunc(f);

  const std::size_t common = std::min(num.ord(), den.ord());
  if (common > 0) {
    num = num.shifted_down(common);
    den = den.shifted_down(common);
  }
  // With the common pi-power removed, a monomial on either side is coprime to the other.
  if (!num.is_monomial() && !den.is_monomial() && den.degree() > 0) {
    PolyPi g = gcd(num, den);
    if (!g.is_one()) {
      num = divmod(num, g).first;
      den = divmod(den, g).first;
    }
  }
  const Field::Raw lead = den.leading();
  if (lead != 1) {
    const Field::Raw li = f.inv(lead);
    num = num.scaled(li);
    den = den.scaled(li);
  }
  const auto v = static_cast<std::int64_t>(num.ord()) - static_cast<std::int64_t>(den.ord());
  return RatFunc(std::move(num), std::move(den), Valuation(v));
}

RatFunc RatFunc::constant(const FqElem& c) { return RatFunc(PolyPi::constant(c.field(), c.raw())); }

RatFunc RatFunc::from_integer(Field f, std::int64_t n) { return RatFunc(PolyPi::constant(f, f.from_integer(n))); }

RatFunc RatFunc::pi_power(Field f, std::int64_t e) {
  if (e >= 0) return RatFunc(PolyPi::monomial(f, 1, static_cast<std::size_t>(e)));
  return RatFunc(PolyPi::constant(f, 1), PolyPi::monomial(f, 1, static_cast<std::size_t>(-e)), Valuation(e));
}

RatFunc RatFunc::laurent(Field f, std::int64_t low, const std::vector<Raw>& coeffs) {
  PolyPi body(f, coeffs);
  if (low >= 0) return RatFunc(body.shifted_up(static_cast<std::size_t>(low)));
  return make(std::move(body), PolyPi::monomial(f, 1, static_cast<std::size_t>(-low)));
}

bool RatFunc::is_pi_power() const {
  if (!num_.is_monomial() || num_.leading() != 1) return false;
  return den_.is_monomial() && (num_.degree() == 0 || den_.degree() == 0);
}

void RatFunc::require_same(const RatFunc& o) const {
  if (!(field() == o.field())) {
    throw FieldMismatch("elements of K over " + field().describe() + " and " + o.field().describe());
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  require_same(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) {
    if (den_.is_one()) return RatFunc(num_ + o.num_);
    return make(num_ + o.num_, den_);
  }
  return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, val_); }

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  require_same(o);
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  if (o.is_one()) return *this;
  if (is_one()) return o;
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ * o.num_);
  return make(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in K");
  const Field::Raw li = field().inv(num_.leading());
  return RatFunc(den_.scaled(li), num_.scaled(li), Valuation(-val_.value()));
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  require_same(o);
  return *this * o.inverse();
}

RatFunc RatFunc::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc base = *this;
  RatFunc acc = RatFunc::from_integer(field(), 1);
  auto u = static_cast<std::uint64_t>(e);
  while (u) {
    if (u & 1) acc = acc * base;
    u >>= 1;
    if (u) base = base * base;
  }
  return acc;
}

RatFunc RatFunc::pth_power() const {
  if (is_zero()) return *this;
  const auto p = static_cast<std::int64_t>(field().characteristic());
  // Frobenius is injective, so the powers stay coprime and den^p stays monic.
  return RatFunc(num_.pth_power(), den_.pth_power(), Valuation(val_.value() * p));
}

FqElem RatFunc::reduce_mod_pi() const {
  if (!is_integral()) {
    throw std::domain_error("reduction mod pi of a non-integral element (valuation " + to_string(val_) + ")");
  }
  if (val_ > Valuation(0)) return FqElem::zero(field());
  return num_.eval_at_zero() / den_.eval_at_zero();
}

std::vector<FqElem> RatFunc::laurent_coeffs(std::int64_t from, std::int64_t to) const {
  const Field& F = field();
  std::vector<FqElem> out;
  if (to <= from) return out;
  out.assign(static_cast<std::size_t>(to - from), FqElem::zero(F));
  if (is_zero()) return out;
  // x = num / (pi^d * u) with u(0) != 0; expand num/u as a power series.
  const auto d = static_cast<std::int64_t>(den_.ord());
  const PolyPi unit = den_.shifted_down(static_cast<std::size_t>(d));
  const std::int64_t upto = to + d;  // series indices [0, upto)
  if (upto <= 0) return out;
  const auto n = static_cast<std::size_t>(upto);
  const auto& uc = unit.coeffs();
  const auto& nc = num_.coeffs();
  const Field::Raw u0_inv = F.inv(uc[0]);
  std::vector<Field::Raw> s(n, 0);
  for (std::size_t m = 0; m < n; ++m) {
    Field::Raw acc = m < nc.size() ? nc[m] : 0;
    for (std::size_t i = 1; i <= m && i < uc.size(); ++i) acc = F.sub(acc, F.mul(uc[i], s[m - i]));
    s[m] = F.mul(acc, u0_inv);
  }
  for (std::int64_t e = from; e < to; ++e) {
    const std::int64_t idx = e + d;
    if (idx >= 0) out[static_cast<std::size_t>(e - from)] = FqElem(F, s[static_cast<std::size_t>(idx)]);
  }
  return out;
}

RatFunc RatFunc::truncated_below(std::int64_t j) const {
  if (val_ >= Valuation(j)) return RatFunc(field());
  const std::int64_t low = val_.value();
  const auto cs = laurent_coeffs(low, j);
  std::vector<Raw> raw(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) raw[i] = cs[i].raw();
  return laurent(field(), low, raw);
}

}  // namespace pghopf
