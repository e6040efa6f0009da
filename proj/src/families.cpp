#include "pghopf/families.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <tuple>

#include "pghopf/grammar.hpp"

namespace pghopf {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyTags{{
    {Family::alpha_p_n, "alpha_p_n"},
    {Family::alpha_p2, "alpha_p2"},
    {Family::zp_x_ap, "zp_x_ap"},
    {Family::zp_squared, "zp_squared"},
    {Family::mono_p2, "mono_p2"},
    {Family::rank1_local, "rank1_local"},
    {Family::rank1_separable, "rank1_separable"},
}};

// Sweeps larger than this are refused rather than run for hours.
constexpr std::uint64_t kMaxSweep = 20'000'000;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_range(IndexRange r, const char* what) {
  if (r.lo > r.hi) {
    throw std::invalid_argument(std::string("empty ") + what + " range " + std::to_string(r.lo) + ".." +
                                std::to_string(r.hi));
  }
}

// Sort key for canonical theta: valuation, then the Laurent coefficients.
std::vector<std::uint64_t> theta_key(const OrderRecord& r) {
  const std::int64_t v = r.theta.valuation().value();
  std::vector<std::uint64_t> key{static_cast<std::uint64_t>(v - r.j + (std::int64_t{1} << 40))};
  for (const auto& c : r.theta.laurent_coeffs(v, r.j)) key.push_back(c.raw());
  return key;
}

}  // namespace

std::string to_string(Family f) {
  for (const auto& [fam, tag] : kFamilyTags) {
    if (fam == f) return std::string(tag);
  }
  return "unknown";
}

Family parse_family(std::string_view tag) {
  for (const auto& [fam, name] : kFamilyTags) {
    if (name == tag) return fam;
  }
  throw std::invalid_argument("unknown family '" + std::string(tag) + "'");
}

bool is_rank_p2(Family f) { return f != Family::rank1_local && f != Family::rank1_separable; }

std::vector<Family> rank_p2_families() {
  return {Family::alpha_p_n, Family::alpha_p2, Family::zp_x_ap, Family::zp_squared, Family::mono_p2};
}

MatK family_matrix(Family f, const Field& field, std::size_t n) {
  const auto one = RatFunc::from_integer(field, 1);
  auto fixed = [&](std::size_t size) {
    if (n != 0 && n != size) {
      throw std::invalid_argument("family " + to_string(f) + " has fixed size " + std::to_string(size));
    }
    return MatK(field, size);
  };
  switch (f) {
    case Family::alpha_p_n:
      return MatK(field, n == 0 ? 2 : n);
    case Family::alpha_p2: {
      MatK B = fixed(2);
      B(0, 1) = one;
      return B;
    }
    case Family::zp_x_ap: {
      MatK B = fixed(2);
      B(0, 0) = one;
      return B;
    }
    case Family::zp_squared:
      fixed(2);
      return MatK::identity(field, 2);
    case Family::mono_p2: {
      MatK B = fixed(2);
      B(0, 1) = one;
      B(1, 0) = one;
      return B;
    }
    case Family::rank1_local:
      return fixed(1);
    case Family::rank1_separable:
      fixed(1);
      return MatK::identity(field, 1);
  }
  throw std::invalid_argument("unknown family");
}

RatFunc canonical_theta(const RatFunc& theta, std::int64_t j) {
  if (theta.valuation() >= Valuation(j)) return RatFunc::pi_power(theta.field(), j);
  return theta.truncated_below(j);
}

OrderRecord make_record(Family f, std::int64_t i, std::int64_t j, const RatFunc& theta) {
  if (!is_rank_p2(f)) throw std::invalid_argument("order records describe rank p^2 families only");
  return OrderRecord{f, i, j, canonical_theta(theta, j)};
}

MatK theta_for_record(const OrderRecord& r) {
  const Field& f = r.theta.field();
  MatK m(f, 2);
  m(0, 0) = RatFunc::pi_power(f, r.i);
  m(1, 0) = r.theta;
  m(1, 1) = RatFunc::pi_power(f, r.j);
  return m;
}

OrderOutcome oracle_outcome(const OrderRecord& r) {
  return order_from_theta(family_matrix(r.family, r.theta.field(), 2), theta_for_record(r));
}

bool predicate(const OrderRecord& r, PredicateVariant variant) {
  const Field& f = r.theta.field();
  const auto p = static_cast<std::int64_t>(f.characteristic());
  const std::int64_t i = r.i, j = r.j;
  const std::int64_t v = r.theta.valuation().value();
  switch (r.family) {
    case Family::alpha_p_n:
      return true;
    case Family::alpha_p2:
      if (variant == PredicateVariant::printed_simplification) {
        return p * j >= i && i - (p - 1) * j <= v && v <= j;
      }
      // v >= i/p, v >= (i+j)/(p+1), with i - (p-1)j <= i/p implied by pj >= i
      return p * j >= i && p * v >= i && (p + 1) * v >= i + j;
    case Family::zp_x_ap:
      return i >= 0 && v >= j - (p - 1) * i;
    case Family::zp_squared: {
      if (i < 0 || j < 0) return false;
      const RatFunc lower = RatFunc::pi_power(f, -j) * r.theta.pth_power() -
                            RatFunc::pi_power(f, (p - 1) * i - j) * r.theta;
      return lower.is_integral();
    }
    case Family::mono_p2: {
      if (p * j < i || p * v < i) return false;
      const RatFunc diff = RatFunc::pi_power(f, (p + 1) * i) - r.theta.pth_power() * r.theta;
      return diff.valuation() >= Valuation(i + j);
    }
    case Family::rank1_local:
    case Family::rank1_separable:
      break;
  }
  throw std::invalid_argument("no rank p^2 predicate for family " + to_string(r.family));
}

std::optional<bool> monogenic_flag(const OrderRecord& r) {
  if (r.family != Family::alpha_p2 && r.family != Family::mono_p2) return std::nullopt;
  const auto p = static_cast<std::int64_t>(r.theta.field().characteristic());
  return r.theta.valuation() == Valuation(r.j) && p * r.j == r.i;
}

int default_depth(const Field& field) { return 2 * (static_cast<int>(field.characteristic()) + 2); }

std::vector<RatFunc> theta_sweep(const Field& field, std::int64_t j, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  const std::uint64_t q = field.order();
  std::uint64_t count = 1;
  for (int d = 0; d < depth; ++d) {
    if (count > kMaxSweep / q) {
      throw std::invalid_argument("theta sweep of q^" + std::to_string(depth) + " elements is too large; lower --depth");
    }
    count *= q;
  }
  std::vector<RatFunc> out;
  out.reserve(count);
  std::vector<Field::Raw> digits(static_cast<std::size_t>(depth), 0);
  for (std::uint64_t n = 1; n < count; ++n) {
    // odometer increment, lowest exponent fastest
    for (auto& d : digits) {
      if (++d < q) break;
      d = 0;
    }
    out.push_back(RatFunc::laurent(field, j - depth, digits));
  }
  out.push_back(RatFunc::pi_power(field, j));
  return out;
}

std::vector<OrderRecord> enumerate_orders(Family f, const Field& field, IndexRange i, IndexRange j, int depth) {
  if (!is_rank_p2(f)) throw std::invalid_argument("enumeration needs a rank p^2 family");
  require_range(i, "i");
  require_range(j, "j");
  if (f == Family::zp_squared) {
    i.lo = std::max<std::int64_t>(i.lo, 0);
    j.lo = std::max<std::int64_t>(j.lo, 0);
  }
  const MatK B = family_matrix(f, field, 2);
  std::vector<std::pair<std::vector<std::uint64_t>, OrderRecord>> found;
  for (std::int64_t jj = j.lo; jj <= j.hi; ++jj) {
    const auto thetas = theta_sweep(field, jj, depth);
    for (std::int64_t ii = i.lo; ii <= i.hi; ++ii) {
      for (const auto& theta : thetas) {
        OrderRecord r{f, ii, jj, theta};
        if (is_order(order_from_theta(B, theta_for_record(r)))) {
          auto key = theta_key(r);
          found.emplace_back(std::move(key), std::move(r));
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return std::tie(x.second.i, x.second.j, x.first) < std::tie(y.second.i, y.second.j, y.first);
  });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const auto& x, const auto& y) {
                            return x.second.i == y.second.i && x.second.j == y.second.j && x.first == y.first;
                          }),
              found.end());
  std::vector<OrderRecord> out;
  out.reserve(found.size());
  for (auto& [key, r] : found) out.push_back(std::move(r));
  return out;
}

AgreementReport oracle_check_family(Family f, const Field& field, IndexRange i, IndexRange j, int depth,
                                    PredicateVariant variant) {
  if (!is_rank_p2(f)) throw std::invalid_argument("oracle check needs a rank p^2 family");
  require_range(i, "i");
  require_range(j, "j");
  AgreementReport report{f, field.characteristic(), variant, 0, 0, {}};
  const MatK B = family_matrix(f, field, 2);
  for (std::int64_t jj = j.lo; jj <= j.hi; ++jj) {
    const auto thetas = theta_sweep(field, jj, depth);
    for (std::int64_t ii = i.lo; ii <= i.hi; ++ii) {
      for (const auto& theta : thetas) {
        OrderRecord r{f, ii, jj, theta};
        const bool pred = predicate(r, variant);
        const OrderOutcome outcome = order_from_theta(B, theta_for_record(r));
        const bool oracle = is_order(outcome);
        ++report.total;
        if (pred == oracle) {
          ++report.agreements;
          continue;
        }
        std::optional<IntegralityWitness> witness;
        if (const auto* bad = std::get_if<NotIntegral>(&outcome)) witness = bad->witness;
        report.disagreements.push_back({std::move(r), pred, oracle, witness});
      }
    }
  }
  return report;
}

Rank1Result rank1_orders(const RatFunc& b, std::int64_t i) {
  const Field& f = b.field();
  const auto p = static_cast<std::int64_t>(f.characteristic());
  std::int64_t shift = 0;
  RatFunc normalized = b;
  if (!b.is_zero()) {
    // t -> pi^shift t multiplies b by pi^{(p-1) shift}
    shift = -floor_div(b.valuation().value(), p - 1);
    normalized = b * RatFunc::pi_power(f, (p - 1) * shift);
  }
  const MatK B = MatK::diagonal({normalized});
  const MatK theta = MatK::diagonal({RatFunc::pi_power(f, i)});
  const OrderOutcome outcome = order_from_theta(B, theta);
  const bool ok = is_order(outcome);
  RatFunc a = ok ? std::get<OrderResult>(outcome).A(0, 0) : std::get<NotIntegral>(outcome).A(0, 0);

  const std::string gen = i == 0 ? "t" : (i == 1 ? "T*t" : "T^" + std::to_string(i) + "*t");
  std::string desc = "H_" + std::to_string(i) + " = R[" + gen + "]";
  const std::string rel = "(" + gen + ")^" + std::to_string(p) + " = " +
                          (a.is_zero() ? std::string("0") : format_linear_combination({a}, {"(" + gen + ")"}));
  if (ok) {
    desc += " is a Hopf order: " + rel;
  } else {
    desc += " is not a Hopf order: " + rel + " has coefficient of valuation " + to_string(a.valuation());
  }
  return Rank1Result{ok, b, std::move(normalized), shift, std::move(a), std::move(desc)};
}

}  // namespace pghopf
