#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle/naive.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/field.hpp"

using namespace tracecodes;

namespace {

struct Case {
  std::uint32_t p;
  std::uint32_t m;
};

const Case kSmallFields[] = {{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 1}, {3, 4}};

FFElem x_of(const ExtField& f) { return FFElem{f.p()}; }  // coefficient vector (0, 1, 0, ...)

}  // namespace

TEST(Field, F9DefaultModulusIsXSquaredPlusOne) {
  const auto f = ExtField::build(3, 2);
  EXPECT_EQ(f.modulus(), (std::vector<Residue>{1, 0, 1}));
  EXPECT_EQ(f.q(), 9u);
}

TEST(Field, PrimeFieldUsesModulusX) {
  const auto f = ExtField::build(3, 1);
  EXPECT_EQ(f.modulus(), (std::vector<Residue>{0, 1}));
  EXPECT_EQ(f.q(), 3u);
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(ExtField::build(4, 2), InvalidArgument);
  EXPECT_THROW(ExtField::build(2, 2), InvalidArgument);
  EXPECT_THROW(ExtField::build(9, 1), InvalidArgument);
  EXPECT_THROW(ExtField::build(3, 0), InvalidArgument);
  EXPECT_THROW(ExtField::build(3, 2, std::vector<Residue>{2, 0, 1}), InvalidArgument);  // x^2 - 1
  EXPECT_THROW(ExtField::build(3, 2, std::vector<Residue>{1, 0, 0, 1}), InvalidArgument);
  try {
    ExtField::build(4, 2);
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("p must be an odd prime"), std::string::npos);
  }
}

TEST(Field, DefaultModulusMatchesTrialDivisionScan) {
  for (const auto [p, m] : kSmallFields) {
    const auto f = ExtField::build(p, m);
    const auto o = oracle::make_field(p, m);
    std::vector<Residue> expected(o.modulus.begin(), o.modulus.end());
    EXPECT_EQ(f.modulus(), expected) << "p=" << p << " m=" << m;
  }
}

TEST(Field, F9Examples) {
  const auto f = ExtField::build(3, 2);
  const FFElem x = x_of(f);
  EXPECT_EQ(f.mul(x, x), f.constant(2));
  EXPECT_EQ(f.inv(x), f.scale(2, x));
  EXPECT_EQ(f.trace(x), 0u);
  EXPECT_EQ(f.trace(f.one()), 2u);
  EXPECT_EQ(f.trace(f.zero()), 0u);
}

TEST(Field, InverseOfZeroAndForeignElementsThrow) {
  const auto f = ExtField::build(3, 2);
  EXPECT_THROW(f.inv(f.zero()), InvalidArgument);
  EXPECT_THROW(f.mul(FFElem{9}, f.one()), InvalidArgument);
  EXPECT_THROW(f.is_square(f.zero()), InvalidArgument);
}

TEST(Field, ArithmeticAgreesWithPolynomialOracle) {
  for (const auto [p, m] : kSmallFields) {
    const auto f = ExtField::build(p, m);
    std::vector<int> mod(f.modulus().begin(), f.modulus().end());
    const auto o = oracle::make_field(p, m, mod);
    for (std::uint32_t i = 0; i < f.q(); ++i) {
      for (std::uint32_t j = 0; j < f.q(); ++j) {
        const FFElem x{i}, y{j};
        ASSERT_EQ(f.mul(x, y).value, o.index(o.mul(o.elem(i), o.elem(j))));
        ASSERT_EQ(f.add(x, y).value, o.index(o.add(o.elem(i), o.elem(j))));
        ASSERT_EQ(f.sub(x, y).value, o.index(o.sub(o.elem(i), o.elem(j))));
      }
      const FFElem x{i};
      EXPECT_EQ(f.trace(x), static_cast<Residue>(o.trace(o.elem(i))));
      EXPECT_EQ(f.trace_by_definition(x), f.trace(x));
      if (i != 0) {
        EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
        EXPECT_EQ(f.is_square(x), o.is_square(o.elem(i)));
      }
    }
  }
}

TEST(Field, PolynomialFallbackMatchesTables) {
  // A field above the table limit: check arithmetic identities directly.
  const auto big = ExtField::build(3, 13);
  ASSERT_FALSE(big.has_tables());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(1, big.q() - 1);
  for (int i = 0; i < 50; ++i) {
    const FFElem x{pick(rng)}, y{pick(rng)}, z{pick(rng)};
    EXPECT_EQ(big.mul(x, big.inv(x)), big.one());
    EXPECT_EQ(big.mul(x, big.add(y, z)), big.add(big.mul(x, y), big.mul(x, z)));
    EXPECT_EQ(big.trace(big.add(x, y)), (big.trace(x) + big.trace(y)) % 3);
    EXPECT_EQ(big.trace(big.frobenius(x)), big.trace(x));
    EXPECT_EQ(big.is_square(big.mul(x, x)), true);
  }
  EXPECT_FALSE(big.is_square(big.generator()));
}

TEST(Field, TraceIsLinearAndSurjective) {
  for (const auto [p, m] : kSmallFields) {
    const auto f = ExtField::build(p, m);
    std::set<Residue> image;
    for (std::uint32_t i = 0; i < f.q(); ++i) {
      image.insert(f.trace(FFElem{i}));
      for (Residue c = 0; c < p; ++c) EXPECT_EQ(f.trace(f.scale(c, FFElem{i})), (c * f.trace(FFElem{i})) % p);
    }
    EXPECT_EQ(image.size(), p);
    EXPECT_EQ(f.trace(f.one()), m % p);
  }
}

TEST(Field, SquaresOfF7) {
  const auto f = ExtField::build(7, 1);
  std::set<std::uint32_t> sq;
  for (auto z : f.squares()) sq.insert(z.value);
  EXPECT_EQ(sq, (std::set<std::uint32_t>{1, 2, 4}));
  EXPECT_FALSE(f.is_square(f.constant(3)));
  EXPECT_TRUE(f.is_square(f.one()));
}

TEST(Field, UnitsInPrimitivePowerOrder) {
  const auto f3 = ExtField::build(3, 1);
  EXPECT_EQ(f3.generator(), f3.constant(2));
  const auto u3 = f3.units();
  ASSERT_EQ(u3.size(), 2u);
  EXPECT_EQ(u3[0].value, 1u);
  EXPECT_EQ(u3[1].value, 2u);

  for (const auto [p, m] : kSmallFields) {
    const auto f = ExtField::build(p, m);
    const auto units = f.units();
    ASSERT_EQ(units.size(), f.q() - 1);
    for (std::size_t k = 0; k < units.size(); ++k) {
      EXPECT_EQ(f.is_square(units[k]), k % 2 == 0);
      EXPECT_EQ(f.log(units[k]), k);
      EXPECT_EQ(f.exp(k), units[k]);
    }
    EXPECT_FALSE(f.is_square(f.generator()));
    EXPECT_EQ(f.squares().size(), (f.q() - 1) / 2);
    EXPECT_EQ(f.non_squares().size(), (f.q() - 1) / 2);
  }
}

TEST(Field, GeneratorIsSmallestPrimitiveElement) {
  for (const auto [p, m] : kSmallFields) {
    const auto f = ExtField::build(p, m);
    std::vector<int> mod(f.modulus().begin(), f.modulus().end());
    const auto o = oracle::make_field(p, m, mod);
    auto order = [&](std::uint32_t v) {
      auto x = o.elem(v);
      auto acc = x;
      int k = 1;
      while (acc != o.one()) {
        acc = o.mul(acc, x);
        ++k;
      }
      return k;
    };
    std::uint32_t smallest = 1;
    while (order(smallest) != o.q - 1) ++smallest;
    EXPECT_EQ(f.generator().value, smallest) << "p=" << p << " m=" << m;
  }
}

TEST(Field, SquareClassProperties) {
  const auto f = ExtField::build(5, 2);
  for (auto x : f.squares())
    for (auto y : f.squares()) EXPECT_TRUE(f.is_square(f.mul(x, y)));
  for (auto x : f.non_squares())
    for (auto y : f.non_squares()) EXPECT_TRUE(f.is_square(f.mul(x, y)));
}

TEST(Field, TraceNondegenerate) {
  for (const auto [p, m] : {Case{3, 5}, Case{5, 2}, Case{7, 2}}) {
    const auto f = ExtField::build(p, m);
    for (std::uint32_t z = 1; z < f.q(); ++z) {
      bool found = false;
      for (std::uint32_t w = 0; w < f.q() && !found; ++w) found = f.trace(f.mul(FFElem{z}, FFElem{w})) != 0;
      ASSERT_TRUE(found) << z;
    }
  }
}

TEST(Field, PowAndCoefficientRoundTrip) {
  const auto f = ExtField::build(5, 3);
  for (std::uint32_t i = 0; i < f.q(); i += 7) {
    const FFElem x{i};
    EXPECT_EQ(f.from_coeffs(f.coeffs(x)), x);
    EXPECT_EQ(f.pow(x, f.q()), x);
    EXPECT_EQ(f.mul(f.one(), x), x);
  }
}

TEST(Poly, BenOrAgreesWithTrialDivision) {
  for (int p : {3, 5}) {
    for (int m = 1; m <= 4; ++m) {
      const int count = static_cast<int>(std::pow(p, m));
      for (int v = 0; v < count; ++v) {
        oracle::Poly g(m + 1);
        int x = v;
        for (int i = 0; i < m; ++i) {
          g[i] = x % p;
          x /= p;
        }
        g[m] = 1;
        std::vector<Residue> r(g.begin(), g.end());
        EXPECT_EQ(poly::is_irreducible(r, p), oracle::irreducible_by_trial_division(g, p));
      }
    }
  }
}

TEST(Primes, SmallCases) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(15));
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
}
