#include <doctest.h>

#include <algorithm>

#include "pghopf/grammar.hpp"
#include "pghopf/ratfunc.hpp"
#include "support.hpp"

using namespace pghopf;

namespace {

RatFunc pi(const Field& f, std::int64_t e = 1) { return RatFunc::pi_power(f, e); }
RatFunc c(const Field& f, std::int64_t n) { return RatFunc::from_integer(f, n); }

}  // namespace

TEST_CASE("polynomials") {
  const Field f = Field::prime(3);
  const PolyPi x(f, {0, 0, 2, 1});
  CHECK(x.ord() == 2);
  CHECK(x.degree() == 3);
  CHECK(x.shifted_down(2) == PolyPi(f, {2, 1}));
  CHECK(PolyPi(f, {1, 2, 0, 0}).degree() == 1);
  const auto [q, r] = divmod(PolyPi(f, {2, 0, 1}), PolyPi(f, {2, 1}));
  CHECK(q == PolyPi(f, {1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(PolyPi(f, {2, 0, 1}), PolyPi(f, {1, 1})) == PolyPi(f, {1, 1}));
  CHECK(PolyPi(f, {1, 1}).pth_power() == PolyPi(f, {1, 0, 0, 1}));
  CHECK_THROWS_AS(divmod(x, PolyPi(f)), DivisionByZero);
}

TEST_CASE("canonical form and valuation") {
  const Field f = Field::prime(3);
  const RatFunc x = RatFunc::make(PolyPi(f, {2, 0, 1}), PolyPi(f, {2, 1}));
  CHECK(x == pi(f) + c(f, 1));
  CHECK(x.den().is_one());

  CHECK(pi(f, -2).valuation() == Valuation(-2));
  CHECK(pi(f, 3).valuation() == Valuation(3));
  CHECK(RatFunc(f).valuation().is_infinite());
  CHECK((pi(f, 2) / (c(f, 1) + pi(f))).valuation() == Valuation(2));
  CHECK(pi(f, 2) * pi(f, -2) == c(f, 1));
  CHECK(pi(f, 4).is_pi_power());
  CHECK_FALSE((pi(f, 4) * c(f, 2)).is_pi_power());
  CHECK_THROWS_AS(c(f, 1) / RatFunc(f), DivisionByZero);
  CHECK_THROWS_AS(RatFunc(f).inverse(), DivisionByZero);
  CHECK_THROWS_AS(RatFunc(f).valuation().value(), std::logic_error);
}

TEST_CASE("reduction mod pi") {
  for (std::uint64_t p : {2, 3, 5}) {
    const Field f = Field::prime(p);
    CHECK(((pi(f, 3) - c(f, 1)).reduce_mod_pi() == FqElem::from_integer(f, -1)));
    CHECK((pi(f, p + 3) - pi(f)).reduce_mod_pi().is_zero());
    CHECK((c(f, 1) / (c(f, 1) + pi(f))).reduce_mod_pi().is_one());
    CHECK_THROWS_AS(pi(f, -1).reduce_mod_pi(), std::domain_error);
  }
}

TEST_CASE("Laurent truncation") {
  const Field f = Field::prime(2);
  const RatFunc x = c(f, 1) / (pi(f, 1) * (c(f, 1) + pi(f)));  // 1/T + 1 + T + T^2 + ...
  CHECK(x.valuation() == Valuation(-1));
  const auto co = x.laurent_coeffs(-1, 3);
  REQUIRE(co.size() == 4);
  for (const auto& e : co) CHECK(e.is_one());
  CHECK(x.truncated_below(2) == pi(f, -1) + c(f, 1) + pi(f));
  CHECK(x.truncated_below(-1).is_zero());
}

TEST_CASE("ultrametric and p-th power laws, randomized") {
  testing::Gen gen(0xA11CE);
  for (const Field& f : {Field::prime(2), Field::prime(3), Field::prime(5), Field::extension(2, {1, 1, 1})}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const RatFunc x = gen.ratfunc(f), y = gen.ratfunc(f), z = gen.ratfunc(f);
      const Valuation vx = x.valuation(), vy = y.valuation();
      CHECK((x * y).valuation() == vx + vy);
      CHECK((x + y).valuation() >= std::min(vx, vy));
      if (vx != vy) CHECK((x + y).valuation() == std::min(vx, vy));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y).pth_power() == x.pth_power() + y.pth_power());
      CHECK((x * y).pth_power() == x.pth_power() * y.pth_power());
      CHECK(x.pth_power() == x.pow(static_cast<std::int64_t>(f.characteristic())));
      if (!x.is_zero()) {
        CHECK((x * x.inverse()).is_one());
        CHECK(x.inverse().valuation() == Valuation(-vx.value()));
        CHECK(x.pth_power().valuation() == Valuation(vx.value() * static_cast<std::int64_t>(f.characteristic())));
        const std::int64_t j = gen.range(-4, 4);
        CHECK((x - x.truncated_below(j)).valuation() >= Valuation(j));
      }
    }
  }
}
