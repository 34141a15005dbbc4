#include <gtest/gtest.h>

#include <memory>
#include <set>

#include "oracle/naive.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/kernels.hpp"
#include "tracecodes/trace_code.hpp"

using namespace tracecodes;

namespace {

std::shared_ptr<const ExtField> field(std::uint32_t p, std::uint32_t m) {
  return std::make_shared<const ExtField>(ExtField::build(p, m));
}

WeightDistribution dist(std::initializer_list<std::pair<const std::uint64_t, std::uint64_t>> init) {
  WeightDistribution d;
  d.freq = init;
  return d;
}

WeightDistribution from_oracle(std::uint32_t p, std::uint32_t m, Variant v) {
  WeightDistribution d;
  d.freq = oracle::weight_distribution(oracle::make_field(p, m), v == Variant::Lprime);
  return d;
}

}  // namespace

TEST(DefiningSet, Sizes) {
  EXPECT_EQ(TraceCode(field(3, 2), Variant::L).n(), 32u);
  EXPECT_EQ(TraceCode(field(3, 3), Variant::Lprime).n(), 676u);
  EXPECT_EQ(TraceCode(field(3, 1), Variant::L).n(), 2u);
  EXPECT_EQ(TraceCode(field(3, 1), Variant::Lprime).n(), 4u);
}

TEST(DefiningSet, MatchesUnitScan) {
  for (auto v : {Variant::L, Variant::Lprime}) {
    const TraceCode code(field(5, 2), v);
    const auto o = oracle::make_field(5, 2);
    std::set<std::pair<std::uint32_t, std::uint32_t>> got, want;
    for (auto x : code.set().elements) got.insert({x.a.value, x.b.value});
    for (const auto& x : oracle::defining_set(o, v == Variant::Lprime)) want.insert({o.index(x.a), o.index(x.b)});
    EXPECT_EQ(got, want);
    EXPECT_EQ(got.size(), code.n());
  }
}

TEST(DefiningSet, PositionIsInverseOfOrder) {
  const TraceCode code(field(3, 3), Variant::L);
  for (std::size_t i = 0; i < code.n(); ++i) EXPECT_EQ(code.position(code.set().elements[i]), i);
  EXPECT_FALSE(code.position(code.ring().u()).has_value());
  EXPECT_FALSE(code.position(code.ring().zero()).has_value());
}

TEST(TraceCode, EvaluateZeroAndLinearity) {
  const TraceCode code(field(3, 2), Variant::L);
  const auto& R = code.ring();
  EXPECT_EQ(code.evaluate(R.zero()), RVector(code.n(), code.base_ring().zero()));
  const RingElem a = R.from_index(17), b = R.from_index(55);
  const RVector ea = code.evaluate(a), eb = code.evaluate(b), eab = code.evaluate(R.add(a, b));
  for (std::size_t i = 0; i < code.n(); ++i) EXPECT_EQ(eab[i], code.base_ring().add(ea[i], eb[i]));
}

TEST(TraceCode, TableKernelMatchesRingEvaluation) {
  for (auto v : {Variant::L, Variant::Lprime}) {
    const TraceCode code(field(5, 2), v);
    for (std::uint64_t i = 0; i < code.codeword_count(); i += 3) {
      const RingElem a = code.ring().from_index(i);
      const PVector slow = code.gray_codeword(a);
      ASSERT_EQ(kernels::gray_codeword(code, a), slow);
      ASSERT_EQ(kernels::lee_weight(code, a), hamming_weight(slow));
    }
  }
}

TEST(TraceCode, GeneratorMatrixShapeAndRank) {
  const TraceCode l(field(3, 3), Variant::L);
  const Matrix g = l.gray_generator_matrix();
  EXPECT_EQ(g.rows(), 6u);
  EXPECT_EQ(g.cols(), 676u);
  EXPECT_EQ(rank_mod_p(g, 3), 6u);
  const TraceCode lp(field(3, 3), Variant::Lprime);
  const Matrix gp = lp.gray_generator_matrix();
  EXPECT_EQ(gp.rows(), 6u);
  EXPECT_EQ(gp.cols(), 1352u);
  EXPECT_EQ(rank_mod_p(gp, 3), 6u);
  const Matrix g1 = TraceCode(field(3, 1), Variant::Lprime).gray_generator_matrix();
  EXPECT_EQ(g1.rows(), 2u);
  EXPECT_EQ(g1.cols(), 8u);
}

// The F_p-span of the generator rows is exactly the Gray image.
TEST(TraceCode, GeneratorMatrixSpansGrayImage) {
  const TraceCode code(field(3, 2), Variant::L);
  const Matrix g = code.gray_generator_matrix();
  std::set<PVector> image, span;
  for (std::uint64_t i = 0; i < code.codeword_count(); ++i) image.insert(code.gray_codeword(code.ring().from_index(i)));
  for (std::uint64_t c = 0; c < 81; ++c) {
    std::vector<Residue> u(4);
    std::uint64_t x = c;
    for (auto& ui : u) {
      ui = x % 3;
      x /= 3;
    }
    span.insert(row_times_matrix(u, g, 3));
  }
  EXPECT_EQ(image, span);
  EXPECT_EQ(image.size(), 81u);
}

TEST(WeightDistribution, FiveWeightP3M2AgainstOracle) {
  const auto expected = dist({{0, 1}, {32, 4}, {40, 32}, {44, 32}, {48, 8}, {64, 4}});
  EXPECT_EQ(from_oracle(3, 2, Variant::L), expected);
  const TraceCode code(field(3, 2), Variant::L);
  EXPECT_EQ(empirical_weight_distribution(code, EnumerationMode::full), expected);
}

TEST(WeightDistribution, FiveWeightP5M2AgainstOracle) {
  const auto expected = dist({{0, 1}, {384, 12}, {456, 288}, {464, 288}, {480, 24}, {576, 12}});
  EXPECT_EQ(from_oracle(5, 2, Variant::L), expected);
  const TraceCode code(field(5, 2), Variant::L);
  EXPECT_EQ(empirical_weight_distribution(code, EnumerationMode::full), expected);
}

TEST(WeightDistribution, TwoWeightP3M3) {
  const auto expected = dist({{0, 1}, {450, 676}, {468, 52}});
  EXPECT_EQ(from_oracle(3, 3, Variant::L), expected);
  EXPECT_EQ(empirical_weight_distribution(TraceCode(field(3, 3), Variant::L), EnumerationMode::full), expected);
  EXPECT_EQ(empirical_weight_distribution(TraceCode(field(3, 3), Variant::Lprime), EnumerationMode::full),
            dist({{0, 1}, {900, 676}, {936, 52}}));
}

TEST(WeightDistribution, PrimeFieldCasesAgainstOracle) {
  for (std::uint32_t p : {3u, 7u, 11u}) {
    for (auto v : {Variant::L, Variant::Lprime}) {
      const TraceCode code(field(p, 1), v);
      EXPECT_EQ(empirical_weight_distribution(code, EnumerationMode::full), from_oracle(p, 1, v)) << p;
    }
  }
  EXPECT_EQ(empirical_weight_distribution(TraceCode(field(7, 1), Variant::L), EnumerationMode::full),
            dist({{0, 1}, {30, 36}, {36, 12}}));
  EXPECT_EQ(empirical_weight_distribution(TraceCode(field(11, 1), Variant::L), EnumerationMode::full),
            dist({{0, 1}, {90, 100}, {100, 20}}));
}

TEST(WeightDistribution, ParallelKernelMatchesSerialReference) {
  for (auto [p, m] : {std::pair{3u, 2u}, std::pair{5u, 2u}, std::pair{3u, 3u}, std::pair{7u, 2u}}) {
    for (auto v : {Variant::L, Variant::Lprime}) {
      const TraceCode code(field(p, m), v);
      const auto ref = kernels::weight_distribution_reference(code);
      EXPECT_EQ(ref.total(), code.codeword_count());
      for (int workers : {1, 2, 4}) EXPECT_EQ(kernels::weight_distribution_parallel(code, workers), ref);
    }
  }
}

TEST(WeightDistribution, ByClassMatchesFull) {
  for (auto [p, m, v] : {std::tuple{3u, 2u, Variant::L}, std::tuple{5u, 2u, Variant::L},
                         std::tuple{3u, 3u, Variant::L}, std::tuple{3u, 3u, Variant::Lprime},
                         std::tuple{7u, 1u, Variant::L}, std::tuple{5u, 1u, Variant::Lprime}}) {
    const TraceCode code(field(p, m), v);
    EXPECT_EQ(empirical_weight_distribution(code, EnumerationMode::by_class),
              empirical_weight_distribution(code, EnumerationMode::full));
  }
}

TEST(WeightDistribution, ByClassRejectsUnsupportedRegime) {
  const TraceCode code(field(5, 1), Variant::L);  // m odd, p = 1 mod 4
  EXPECT_THROW(empirical_weight_distribution(code, EnumerationMode::by_class), UnsupportedRegime);
}

TEST(WeightDistribution, BudgetRefusal) {
  const TraceCode code(field(3, 3), Variant::L);
  EnumerationOptions opts;
  opts.budget = 1000;
  EXPECT_THROW(empirical_weight_distribution(code, EnumerationMode::full, opts), BudgetExceeded);
}

TEST(WeightDistribution, Accessors) {
  const auto d = dist({{0, 1}, {32, 4}, {64, 4}});
  EXPECT_EQ(d.total(), 9u);
  EXPECT_EQ(d.min_nonzero(), 32u);
  EXPECT_EQ(d.max_weight(), 64u);
  EXPECT_EQ(d.nonzero_weight_count(), 2u);
  WeightDistribution e = d;
  e.merge(d);
  EXPECT_EQ(e.total(), 18u);
}

TEST(Classify, Examples) {
  const auto f = field(3, 2);
  const Ring R(f);
  const FFElem g = f->generator();
  EXPECT_EQ(classify(R, R.zero(), true), ClassLabel::zero);
  EXPECT_EQ(classify(R, R.make(f->zero(), g), true), ClassLabel::u_alpha_N);
  EXPECT_EQ(classify(R, R.make(f->zero(), f->mul(g, g)), true), ClassLabel::u_alpha_Q);
  EXPECT_EQ(classify(R, R.crt_join(g, f->mul(g, g)), true), ClassLabel::unit_Q);
  EXPECT_EQ(classify(R, R.crt_join(g, g), true), ClassLabel::unit_N);
  EXPECT_EQ(classify(R, R.crt_join(g, g), false), ClassLabel::unit);
  EXPECT_EQ(classify(R, R.crt_join(g, f->zero()), false), ClassLabel::one_minus_u_beta);
}

TEST(Classify, SizesPartitionTheRing) {
  for (auto tag : {RegimeTag::five_weight, RegimeTag::two_weight_L, RegimeTag::two_weight_Lprime}) {
    for (std::uint64_t q : {3u, 9u, 25u, 27u}) {
      std::uint64_t total = 0;
      for (auto label : class_labels(tag)) total += class_size(label, q);
      EXPECT_EQ(total, q * q);
    }
  }
  const auto f = field(5, 2);
  const Ring R(f);
  std::map<ClassLabel, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < R.size(); ++i) ++counts[classify(R, R.from_index(i), true)];
  for (auto label : class_labels(RegimeTag::five_weight)) EXPECT_EQ(counts[label], class_size(label, 25));
}

TEST(Regime, Classification) {
  EXPECT_EQ(classify_regime(Variant::L, 3, 2).tag, RegimeTag::five_weight);
  EXPECT_EQ(classify_regime(Variant::L, 5, 6).tag, RegimeTag::five_weight);
  EXPECT_EQ(classify_regime(Variant::L, 3, 3).tag, RegimeTag::two_weight_L);
  EXPECT_EQ(classify_regime(Variant::L, 5, 3).tag, RegimeTag::unsupported);
  EXPECT_EQ(classify_regime(Variant::L, 3, 4).tag, RegimeTag::unsupported);
  EXPECT_EQ(classify_regime(Variant::Lprime, 5, 4).tag, RegimeTag::two_weight_Lprime);
  EXPECT_EQ(parse_variant("L'"), Variant::Lprime);
  EXPECT_THROW(parse_variant("M"), InvalidArgument);
  EXPECT_THROW(parse_mode("fast"), InvalidArgument);
}
