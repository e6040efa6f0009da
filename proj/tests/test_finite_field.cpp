#include <doctest.h>

#include "pghopf/finite_field.hpp"
#include "support.hpp"

using namespace pghopf;

namespace {

// Schoolbook product in F_p[a]/(mod), independent of the table arithmetic.
std::vector<std::uint64_t> naive_mul(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y,
                                     const std::vector<std::uint64_t>& mod, std::uint64_t p) {
  const std::size_t k = mod.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::uint64_t c = prod[d];
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * mod[i]) % p;
  }
  prod.resize(k);
  return prod;
}

}  // namespace

TEST_CASE("prime fields") {
  const Field f5 = Field::prime(5);
  CHECK(f5.order() == 5);
  CHECK(f5.degree() == 1);
  CHECK(f5.describe() == "p=5");
  const auto three = FqElem::from_integer(f5, 3);
  CHECK((three * three).raw() == 4);
  CHECK((three + three).raw() == 1);
  CHECK((three * three.inverse()).is_one());
  CHECK(FqElem::from_integer(f5, -1).raw() == 4);
  CHECK(three.frobenius() == three);
  CHECK_THROWS_AS(Field::prime(4), InvalidField);
  CHECK_THROWS_AS(Field::prime(1), InvalidField);
  CHECK_THROWS_AS(FqElem::zero(f5).inverse(), DivisionByZero);
  CHECK(Field::prime(5) == f5);
  CHECK_FALSE(Field::prime(7) == f5);
}

TEST_CASE("F_4 and F_9") {
  const Field f4 = Field::extension(2, {1, 1, 1});
  const FqElem a(f4, f4.generator());
  CHECK(a * a == a + FqElem::one(f4));
  CHECK(to_string(a * a) == "1 + a");
  CHECK(f4.describe() == "p=2;k=2;mod=1 + a + a^2");
  CHECK(a.pow(3).is_one());

  const Field f9 = Field::extension(3, {1, 0, 1});
  const FqElem b(f9, f9.generator());
  CHECK(b.frobenius() == -b);
  CHECK(to_string(-b) == "2*a");
  CHECK(b.pow(4) == FqElem::one(f9));

  CHECK_THROWS_AS(Field::extension(2, {1, 0, 1}), InvalidField);
  CHECK_THROWS_AS(Field::extension(3, {2, 0, 1}), InvalidField);
}

TEST_CASE("mixing fields is an error") {
  const auto x = FqElem::one(Field::prime(3));
  const auto y = FqElem::one(Field::prime(5));
  CHECK_THROWS_AS(x + y, FieldMismatch);
}

TEST_CASE("field axioms and Frobenius, randomized") {
  testing::Gen gen(0xF1E1D);
  const std::vector<Field> fields{Field::prime(2),
                                  Field::prime(3),
                                  Field::prime(7),
                                  Field::extension(2, {1, 1, 0, 1}),
                                  Field::extension(3, {1, 0, 1}),
                                  Field::extension(5, {2, 1, 1})};
  for (const Field& f : fields) {
    const std::uint64_t p = f.characteristic();
    for (int trial = 0; trial < 300; ++trial) {
      const FqElem x(f, gen.element(f)), y(f, gen.element(f)), z(f, gen.element(f));
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x - x == FqElem::zero(f));
      CHECK((x + y).frobenius() == x.frobenius() + y.frobenius());
      CHECK((x * y).frobenius() == x.frobenius() * y.frobenius());
      CHECK(x.frobenius() == x.pow(p));
      CHECK(x.pow(f.order()) == x);
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
      if (f.degree() > 1) {
        std::vector<std::uint64_t> mod = f.modulus();
        const auto expect = naive_mul(x.coeffs(), y.coeffs(), mod, p);
        CHECK((x * y).coeffs() == expect);
      }
    }
  }
}
