#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "oracle/naive.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/ring.hpp"

using namespace tracecodes;

namespace {

Ring ring_for(std::uint32_t p, std::uint32_t m) {
  return Ring(std::make_shared<const ExtField>(ExtField::build(p, m)));
}

}  // namespace

TEST(Ring, BasicIdentities) {
  const Ring r = ring_for(3, 2);
  const auto& f = r.field();
  EXPECT_EQ(r.mul(r.u(), r.u()), r.u());
  const RingElem one_minus_2u = r.make(f.one(), f.constant(1));  // 1 - 2u = 1 + u mod 3
  EXPECT_EQ(r.mul(one_minus_2u, one_minus_2u), r.one());
  const RingElem x = r.from_index(37);
  EXPECT_EQ(r.mul(x, r.zero()), r.zero());
  EXPECT_EQ(r.mul(x, r.one()), x);
}

TEST(Ring, CrtExamples) {
  const Ring r = ring_for(3, 2);
  const auto& f = r.field();
  EXPECT_EQ(r.crt_split(r.u()), std::make_pair(f.zero(), f.one()));
  const RingElem one_minus_2u = r.make(f.one(), f.constant(1));
  EXPECT_EQ(r.crt_split(one_minus_2u), std::make_pair(f.one(), f.constant(2)));
  // crt_join(t', t) = u t + (1 - u) t'
  const FFElem t{4}, tp{7};
  const RingElem expected = r.add(r.mul(r.u(), r.make(t, f.zero())),
                                  r.mul(r.sub(r.one(), r.u()), r.make(tp, f.zero())));
  EXPECT_EQ(r.crt_join(tp, t), expected);
}

TEST(Ring, CrtRoundTripAndMultiplicativity) {
  const Ring r = ring_for(5, 2);
  for (std::uint64_t i = 0; i < r.size(); i += 3) {
    const RingElem x = r.from_index(i);
    const auto [s, t] = r.crt_split(x);
    EXPECT_EQ(r.crt_join(s, t), x);
    const RingElem y = r.from_index((i * 7 + 11) % r.size());
    const auto [s2, t2] = r.crt_split(y);
    const auto [sp, tp] = r.crt_split(r.mul(x, y));
    EXPECT_EQ(sp, r.field().mul(s, s2));
    EXPECT_EQ(tp, r.field().mul(t, t2));
  }
}

TEST(Ring, MultiplicationAgreesWithOracle) {
  for (const auto [p, m] : {std::pair{3u, 2u}, std::pair{5u, 1u}, std::pair{3u, 3u}}) {
    const Ring r = ring_for(p, m);
    const auto& f = r.field();
    std::vector<int> mod(f.modulus().begin(), f.modulus().end());
    const auto o = oracle::make_field(p, m, mod);
    for (std::uint64_t i = 0; i < r.size(); i += 5) {
      for (std::uint64_t j = 0; j < r.size(); j += 7) {
        const RingElem x = r.from_index(i), y = r.from_index(j);
        const auto prod = oracle::rmul(o, {o.elem(x.a.value), o.elem(x.b.value)}, {o.elem(y.a.value), o.elem(y.b.value)});
        const RingElem got = r.mul(x, y);
        ASSERT_EQ(got.a.value, o.index(prod.a));
        ASSERT_EQ(got.b.value, o.index(prod.b));
      }
    }
  }
}

TEST(Ring, UnitsAndInverse) {
  const Ring r = ring_for(3, 1);
  const auto& f = r.field();
  EXPECT_FALSE(r.is_unit(r.u()));
  EXPECT_TRUE(r.is_unit(r.make(f.one(), f.constant(1))));
  std::size_t units = 0;
  for (std::uint64_t i = 0; i < r.size(); ++i) units += r.is_unit(r.from_index(i));
  EXPECT_EQ(units, 4u);

  const Ring r2 = ring_for(5, 2);
  std::size_t units2 = 0;
  for (std::uint64_t i = 0; i < r2.size(); ++i) {
    const RingElem x = r2.from_index(i);
    if (!r2.is_unit(x)) {
      EXPECT_THROW(r2.inv(x), InvalidArgument);
      continue;
    }
    ++units2;
    EXPECT_EQ(r2.mul(x, r2.inv(x)), r2.one());
  }
  EXPECT_EQ(units2, 24u * 24u);
}

TEST(Ring, Frobenius) {
  const Ring r = ring_for(3, 3);
  EXPECT_EQ(r.frobenius(r.u()), r.u());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> pick(0, r.size() - 1);
  for (int i = 0; i < 100; ++i) {
    const RingElem x = r.from_index(pick(rng)), y = r.from_index(pick(rng));
    RingElem z = x;
    for (std::uint32_t j = 0; j < r.m(); ++j) z = r.frobenius(z);
    EXPECT_EQ(z, x);
    EXPECT_EQ(r.frobenius(r.mul(x, y)), r.mul(r.frobenius(x), r.frobenius(y)));
  }
}

TEST(Ring, TraceExamples) {
  const Ring r = ring_for(3, 2);
  const auto& f = r.field();
  EXPECT_EQ(r.trace(r.zero()), r.zero());
  EXPECT_EQ(r.trace(r.u()), r.make(f.zero(), f.constant(2)));
  const RingElem x_plus_u = r.make(FFElem{3}, f.one());
  EXPECT_EQ(r.trace(x_plus_u), r.make(f.zero(), f.constant(2)));
}

TEST(Ring, TraceClosedFormMatchesDefinition) {
  for (const auto [p, m] : {std::pair{3u, 2u}, std::pair{3u, 4u}, std::pair{5u, 2u}, std::pair{7u, 2u}}) {
    const Ring r = ring_for(p, m);
    for (std::uint64_t i = 0; i < r.size(); ++i) {
      const RingElem x = r.from_index(i);
      ASSERT_EQ(r.trace(x), r.trace_by_definition(x));
    }
  }
}

TEST(Ring, ForeignElementsRejected) {
  const Ring r = ring_for(3, 1);
  EXPECT_THROW(r.mul(RingElem{FFElem{3}, FFElem{0}}, r.one()), InvalidArgument);
  EXPECT_THROW(r.make(FFElem{0}, FFElem{5}), InvalidArgument);
}
