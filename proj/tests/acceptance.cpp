// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pghopf/families.hpp"
#include "pghopf/grammar.hpp"
#include "pghopf/orders.hpp"
#include "support.hpp"

using namespace pghopf;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

RatFunc pi(const Field& f, std::int64_t e) { return RatFunc::pi_power(f, e); }
RatFunc num(const Field& f, std::int64_t n) { return RatFunc::from_integer(f, n); }

Verdict worked_example() {
  const auto start = Clock::now();
  std::string bad;
  for (std::int64_t p : {2, 3, 5}) {
    const Field f = Field::prime(static_cast<std::uint64_t>(p));
    const RatFunc z(f);
    const MatK B = MatK::from_rows({{z, pi(f, 2), z}, {pi(f, 3), z, z}, {z, z, pi(f, 4)}});
    const MatK theta = MatK::from_rows({{pi(f, 1), z, z}, {num(f, 1), num(f, 1), z}, {num(f, 1), z, pi(f, 1)}});
    const MatK expect = MatK::from_rows({{pi(f, 1), pi(f, 1), z},
                                         {pi(f, p + 3) - pi(f, 1), -pi(f, 1), z},
                                         {pi(f, 3) - num(f, 1), num(f, -1), pi(f, p + 3)}});
    const OrderOutcome out = order_from_theta(B, theta);
    if (!is_order(out)) {
      bad += " p=" + std::to_string(p) + ":not-integral";
      continue;
    }
    const auto& r = std::get<OrderResult>(out);
    if (!(r.A == expect)) bad += " p=" + std::to_string(p) + ":A=" + format(r.A);
    if (embedding_generators(r.embedding) != std::vector<std::string>{"T*t1 + t2 + t3", "t2", "T*t3"}) {
      bad += " p=" + std::to_string(p) + ":embedding";
    }
    const FibreReport fib = special_fibre(r.A);
    if (fib.fpower_ranks != std::vector<std::size_t>{1, 0, 0} || !fib.connected) {
      bad += " p=" + std::to_string(p) + ":fibre";
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 1.0) bad += " runtime " + std::to_string(secs) + "s";
  return {bad.empty(), bad.empty() ? "A, embedding and ranks [1,0,0] exact for p=2,3,5" : bad};
}

Verdict predicate_oracle() {
  const auto start = Clock::now();
  std::string bad;
  std::size_t points = 0;
  for (std::uint64_t p : {2, 3}) {
    const Field f = Field::prime(p);
    const std::int64_t ip = static_cast<std::int64_t>(p);
    for (Family fam : rank_p2_families()) {
      const AgreementReport r = oracle_check_family(fam, f, {0, 2 * ip + 2}, {-2, 4}, default_depth(f));
      points += r.total;
      if (!r.all_agree()) {
        bad += " " + to_string(fam) + "/p=" + std::to_string(p) + ":" + std::to_string(r.disagreements.size());
      }
    }
  }
  const Field f2 = Field::prime(2);
  const AgreementReport printed = oracle_check_family(Family::alpha_p2, f2, {0, 6}, {-2, 4}, default_depth(f2),
                                                      PredicateVariant::printed_simplification);
  bool example_listed = false;
  for (const auto& d : printed.disagreements) {
    if (d.record.i == 0 && d.record.j == 1 && d.record.theta.valuation() == Valuation(0) && d.witness) {
      example_listed = true;
    }
  }
  if (!example_listed) bad += " printed alpha_p2 bound showed no disagreement at p=2,i=0,j=1,v=0";
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 300.0) bad += " runtime " + std::to_string(secs) + "s";
  return {bad.empty(), bad.empty() ? std::to_string(points) + " grid points agree; printed alpha_p2 bound: " +
                                         std::to_string(printed.disagreements.size()) + " disagreements (" +
                                         std::to_string(static_cast<int>(secs)) + "s)"
                                   : bad};
}

Verdict closure() {
  testing::Gen gen(20240601);
  int trials = 0, failures = 0, attempts = 0;
  while (trials < 200 && attempts < 100000) {
    ++attempts;
    const Field f = Field::prime(gen.coin() ? 2 : 3);
    const std::size_t n = static_cast<std::size_t>(gen.range(2, 3));
    const MatK B = gen.integral_matrix(f, n);
    const MatK theta = scale_to_integral(gen.invertible(f, n)).scaled(pi(f, gen.range(0, 2)));
    const OrderOutcome out = order_from_theta(B, theta);
    if (!is_order(out)) continue;
    ++trials;
    const MatK& A = std::get<OrderResult>(out).A;
    const MatK U = gen.unit_matrix(f, n);
    const OrderOutcome out2 = order_from_theta(B, theta * U);
    const bool ok = is_order(out2) && same_order(theta, theta * U) &&
                    std::get<OrderResult>(out2).A == inverse(U) * A * frobenius_twist(U);
    if (!ok) ++failures;
  }
  const bool pass = trials == 200 && failures == 0;
  return {pass, std::to_string(trials) + " trials, " + std::to_string(failures) + " failures"};
}

Verdict ddl() {
  const auto start = Clock::now();
  testing::Gen gen(777);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Field f = Field::prime(gen.coin() ? 2 : 3);
    const MatK theta = gen.invertible(f, static_cast<std::size_t>(gen.range(2, 3)));
    const DdlResult r = ddl_normalize(theta);
    const bool ok = is_ddl(r.theta) && same_order(theta, r.theta) && same_order(ddl_normalize(r.theta).theta, r.theta);
    if (!ok) ++failures;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return {failures == 0 && secs < 30.0,
          "200 matrices, " + std::to_string(failures) + " failures, " + std::to_string(secs) + "s"};
}

Verdict rank2_equality() {
  const Field f = Field::prime(2);
  // all Laurent polynomials on [j-3, j+1] with v <= j
  auto thetas = [&](std::int64_t j) {
    std::vector<RatFunc> out;
    for (std::uint64_t bits = 1; bits < 32; ++bits) {
      if ((bits & 0xF) == 0) continue;
      std::vector<Field::Raw> c;
      for (int e = 0; e < 5; ++e) c.push_back((bits >> e) & 1U);
      out.push_back(RatFunc::laurent(f, j - 3, c));
    }
    return out;
  };
  std::size_t checks = 0, failures = 0;
  for (std::int64_t i = 0; i <= 3; ++i) {
    for (std::int64_t j = 0; j <= 3; ++j) {
      const auto ts = thetas(j);
      for (const auto& t : ts) {
        const MatK X = theta_for_record({Family::alpha_p_n, i, j, t});
        for (std::int64_t i2 = 0; i2 <= 3; ++i2) {
          for (std::int64_t j2 = 0; j2 <= 3; ++j2) {
            for (const auto& t2 : thetas(j2)) {
              const MatK Y = theta_for_record({Family::alpha_p_n, i2, j2, t2});
              const bool expect = i == i2 && j == j2 && (t - t2).valuation() >= Valuation(j);
              ++checks;
              if (same_order(X, Y) != expect) ++failures;
            }
          }
        }
      }
    }
  }
  return {failures == 0, std::to_string(checks) + " pairs, " + std::to_string(failures) + " failures"};
}

Verdict rank_p() {
  std::size_t checks = 0, failures = 0;
  auto expect = [&](const RatFunc& b, std::int64_t i, bool want) {
    ++checks;
    if (rank1_orders(b, i).is_order != want) ++failures;
  };
  for (std::uint64_t p : {2, 3, 5}) {
    const Field f = Field::prime(p);
    const std::int64_t ip = static_cast<std::int64_t>(p);
    const RatFunc one = num(f, 1);
    std::vector<RatFunc> units{one, one + pi(f, 1), one / (one + pi(f, 2))};
    if (p > 2) units.push_back(num(f, -1));
    for (std::int64_t i = -5; i <= 5; ++i) {
      expect(RatFunc(f), i, true);
      for (const auto& u : units) {
        expect(u, i, i >= 0);
        for (std::int64_t v = 0; v <= ip - 2; ++v) expect(u * pi(f, v), i, i >= 0);
        // b outside the normal range is first rescaled into it
        for (std::int64_t shift : {-2, -1, 1, 2}) {
          const RatFunc b = u * pi(f, (ip - 1) * shift);
          const Rank1Result r = rank1_orders(b, i);
          ++checks;
          if (r.is_order != (i >= 0) || !(r.normalized_b == u)) ++failures;
        }
      }
    }
  }
  return {failures == 0, std::to_string(checks) + " cases, " + std::to_string(failures) + " failures"};
}

Verdict properties() {
  testing::Gen gen(31337);
  const std::vector<Field> fields{Field::prime(2), Field::prime(3), Field::prime(5), Field::extension(2, {1, 1, 1})};
  std::vector<std::pair<std::string, std::function<bool(const Field&)>>> props{
      {"ultrametric",
       [&](const Field& f) {
         const RatFunc x = gen.ratfunc(f), y = gen.ratfunc(f);
         const Valuation vx = x.valuation(), vy = y.valuation(), vs = (x + y).valuation();
         return (x * y).valuation() == vx + vy && vs >= std::min(vx, vy) && (vx == vy || vs == std::min(vx, vy));
       }},
      {"pth-power",
       [&](const Field& f) {
         const RatFunc x = gen.ratfunc(f), y = gen.ratfunc(f);
         return (x + y).pth_power() == x.pth_power() + y.pth_power() &&
                (x * y).pth_power() == x.pth_power() * y.pth_power() &&
                x.pth_power() == x.pow(static_cast<std::int64_t>(f.characteristic()));
       }},
      {"inverse",
       [&](const Field& f) {
         const MatK X = gen.invertible(f, static_cast<std::size_t>(gen.range(1, 3)));
         return X * inverse(X) == MatK::identity(f, X.size()) && inverse(X) * X == MatK::identity(f, X.size());
       }},
      {"det",
       [&](const Field& f) {
         const std::size_t n = static_cast<std::size_t>(gen.range(1, 3));
         const MatK X = gen.matrix(f, n), Y = gen.matrix(f, n);
         return det(X * Y) == det(X) * det(Y);
       }},
      {"twist/inverse",
       [&](const Field& f) {
         const MatK X = gen.invertible(f, static_cast<std::size_t>(gen.range(1, 3)));
         return frobenius_twist(inverse(X)) == inverse(frobenius_twist(X));
       }},
      {"round-trip",
       [&](const Field& f) {
         const RatFunc x = gen.ratfunc(f, 4, 4);
         const MatK m = gen.matrix(f, 2);
         return parse_element(format(x), f) == x && parse_matrix(format(m), f) == m;
       }},
  };
  std::string bad;
  for (auto& [name, prop] : props) {
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      if (!prop(fields[static_cast<std::size_t>(trial) % fields.size()])) ++failures;
    }
    if (failures) bad += " " + name + ":" + std::to_string(failures);
  }
  return {bad.empty(), bad.empty() ? "6 properties x 1000 cases" : bad};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Verdict (*)()>> criteria{
      {"worked 3x3 example", worked_example},
      {"predicate/oracle agreement", predicate_oracle},
      {"closure under GL_n(R)", closure},
      {"DDL normalization", ddl},
      {"rank p^2 equality criterion", rank2_equality},
      {"rank p catalog", rank_p},
      {"scalar/matrix properties", properties},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Verdict v = criteria[k].second();
    std::printf("%s criterion %zu (%s): %s\n", v.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
