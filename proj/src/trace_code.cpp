#include "tracecodes/trace_code.hpp"

#include <random>
#include <string>

#include "tracecodes/errors.hpp"
#include "tracecodes/kernels.hpp"

namespace tracecodes {

Regime classify_regime(Variant variant, std::uint32_t p, std::uint32_t m) {
  Regime r{variant, p, m, RegimeTag::unsupported};
  if (variant == Variant::Lprime) {
    r.tag = RegimeTag::two_weight_Lprime;
  } else if (m % 4 == 2) {
    r.tag = RegimeTag::five_weight;
  } else if (m % 2 == 1 && p % 4 == 3) {
    r.tag = RegimeTag::two_weight_L;
  }
  return r;
}

std::string_view to_string(Variant v) { return v == Variant::L ? "L" : "Lprime"; }

std::string_view to_string(RegimeTag t) {
  switch (t) {
    case RegimeTag::five_weight: return "five_weight";
    case RegimeTag::two_weight_L: return "two_weight_L";
    case RegimeTag::two_weight_Lprime: return "two_weight_Lprime";
    case RegimeTag::unsupported: return "unsupported";
  }
  return "unsupported";
}

Variant parse_variant(std::string_view s) {
  if (s == "L") return Variant::L;
  if (s == "Lprime" || s == "L'") return Variant::Lprime;
  throw InvalidArgument("unknown variant '" + std::string(s) + "' (expected L or Lprime)");
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, f] : freq) t += f;
  return t;
}

std::uint64_t WeightDistribution::min_nonzero() const {
  for (const auto& [w, f] : freq) {
    if (w != 0 && f != 0) return w;
  }
  return 0;
}

std::uint64_t WeightDistribution::max_weight() const { return freq.empty() ? 0 : freq.rbegin()->first; }

std::size_t WeightDistribution::nonzero_weight_count() const {
  std::size_t c = 0;
  for (const auto& [w, f] : freq) c += (w != 0 && f != 0);
  return c;
}

void WeightDistribution::merge(const WeightDistribution& other) {
  for (const auto& [w, f] : other.freq) freq[w] += f;
}

DefiningSet build_defining_set(const Ring& ring, Variant variant) {
  const ExtField& f = ring.field();
  if (!f.has_tables()) throw InvalidArgument("defining sets require a table-backed field");
  DefiningSet set;
  set.variant = variant;
  set.inner_count = f.q() - 1;
  const std::uint32_t step = variant == Variant::L ? 2 : 1;
  for (std::uint32_t k = 0; k + 1 < f.q(); k += step) set.outer_logs.push_back(k);
  set.elements.reserve(set.outer_logs.size() * set.inner_count);
  for (const std::uint32_t k : set.outer_logs) {
    const FFElem t = f.exp(k);
    for (std::uint32_t i = 0; i < set.inner_count; ++i) set.elements.push_back(ring.crt_join(f.exp(i), t));
  }
  return set;
}

TraceCode::TraceCode(std::shared_ptr<const ExtField> field, Variant variant)
    : ring_(field),
      base_(std::make_shared<const ExtField>(ExtField::build(field->p(), 1))),
      set_(build_defining_set(ring_, variant)) {}

std::optional<std::size_t> TraceCode::position(RingElem x) const {
  const auto [s, t] = ring_.crt_split(x);
  if (s.value == 0 || t.value == 0) return std::nullopt;
  const ExtField& f = field();
  std::uint32_t lt = f.log(t);
  if (variant() == Variant::L) {
    if (lt % 2 != 0) return std::nullopt;
    lt /= 2;
  }
  return std::size_t{lt} * set_.inner_count + f.log(s);
}

RVector TraceCode::evaluate(RingElem a) const {
  RVector out;
  out.reserve(n());
  for (const RingElem& x : set_.elements) out.push_back(ring_.trace(ring_.mul(a, x)));
  return out;
}

std::vector<RingElem> TraceCode::generator_basis() const {
  const ExtField& f = field();
  std::vector<RingElem> basis;
  for (std::uint32_t i = 0; i < m(); ++i) basis.push_back(ring_.make(f.zero(), f.exp(i)));
  for (std::uint32_t i = 0; i < m(); ++i) {
    const FFElem e = f.exp(i);
    basis.push_back(ring_.make(e, f.neg(e)));
  }
  return basis;
}

Matrix TraceCode::gray_generator_matrix() const {
  const auto basis = generator_basis();
  Matrix g(basis.size(), gray_length());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const PVector row = gray_codeword(basis[r]);
    for (std::size_t c = 0; c < row.size(); ++c) g.at(r, c) = row[c];
  }
  return g;
}

std::string_view to_string(ClassLabel c) {
  switch (c) {
    case ClassLabel::zero: return "zero";
    case ClassLabel::u_alpha_Q: return "u_alpha_Q";
    case ClassLabel::u_alpha_N: return "u_alpha_N";
    case ClassLabel::u_alpha: return "u_alpha";
    case ClassLabel::one_minus_u_beta: return "one_minus_u_beta";
    case ClassLabel::unit_Q: return "unit_Q";
    case ClassLabel::unit_N: return "unit_N";
    case ClassLabel::unit: return "unit";
  }
  return "zero";
}

std::vector<ClassLabel> class_labels(RegimeTag tag) {
  if (tag == RegimeTag::five_weight) {
    return {ClassLabel::zero,   ClassLabel::u_alpha_Q, ClassLabel::u_alpha_N, ClassLabel::one_minus_u_beta,
            ClassLabel::unit_Q, ClassLabel::unit_N};
  }
  return {ClassLabel::zero, ClassLabel::u_alpha, ClassLabel::one_minus_u_beta, ClassLabel::unit};
}

std::uint64_t class_size(ClassLabel label, std::uint64_t q) {
  switch (label) {
    case ClassLabel::zero: return 1;
    case ClassLabel::u_alpha_Q:
    case ClassLabel::u_alpha_N: return (q - 1) / 2;
    case ClassLabel::u_alpha:
    case ClassLabel::one_minus_u_beta: return q - 1;
    case ClassLabel::unit_Q:
    case ClassLabel::unit_N: return (q - 1) * (q - 1) / 2;
    case ClassLabel::unit: return (q - 1) * (q - 1);
  }
  return 0;
}

ClassLabel classify(const Ring& ring, RingElem a, bool split) {
  const auto [beta, alpha] = ring.crt_split(a);
  const bool has_alpha = alpha.value != 0;
  const bool has_beta = beta.value != 0;
  if (!has_alpha && !has_beta) return ClassLabel::zero;
  if (!has_alpha) return ClassLabel::one_minus_u_beta;
  if (!has_beta) {
    if (!split) return ClassLabel::u_alpha;
    return ring.field().is_square(alpha) ? ClassLabel::u_alpha_Q : ClassLabel::u_alpha_N;
  }
  if (!split) return ClassLabel::unit;
  return ring.field().is_square(alpha) ? ClassLabel::unit_Q : ClassLabel::unit_N;
}

ClassLabel classify(const Ring& ring, RingElem a, const Regime& regime) {
  return classify(ring, a, regime.tag == RegimeTag::five_weight);
}

namespace {

RingElem sample_class_member(const Ring& ring, ClassLabel label, std::mt19937_64& rng) {
  const ExtField& f = ring.field();
  const std::uint64_t order = f.q() - 1;
  std::uniform_int_distribution<std::uint64_t> any(0, order - 1);
  std::uniform_int_distribution<std::uint64_t> half(0, order / 2 - 1);
  const FFElem zero = f.zero();
  switch (label) {
    case ClassLabel::zero: return ring.zero();
    case ClassLabel::u_alpha_Q: return ring.crt_join(zero, f.exp(2 * half(rng)));
    case ClassLabel::u_alpha_N: return ring.crt_join(zero, f.exp(2 * half(rng) + 1));
    case ClassLabel::u_alpha: return ring.crt_join(zero, f.exp(any(rng)));
    case ClassLabel::one_minus_u_beta: return ring.crt_join(f.exp(any(rng)), zero);
    case ClassLabel::unit_Q: return ring.crt_join(f.exp(any(rng)), f.exp(2 * half(rng)));
    case ClassLabel::unit_N: return ring.crt_join(f.exp(any(rng)), f.exp(2 * half(rng) + 1));
    case ClassLabel::unit: return ring.crt_join(f.exp(any(rng)), f.exp(any(rng)));
  }
  return ring.zero();
}

WeightDistribution by_class_distribution(const TraceCode& code, const EnumerationOptions& options) {
  const Regime regime = classify_regime(code.variant(), code.p(), code.m());
  if (regime.tag == RegimeTag::unsupported) {
    throw UnsupportedRegime("by_class mode needs a regime with constant class weights");
  }
  if (options.reps_per_class == 0) throw InvalidArgument("reps_per_class must be positive");
  const auto labels = class_labels(regime.tag);
  const std::uint64_t cost = labels.size() * options.reps_per_class * code.n();
  if (cost > options.budget) throw BudgetExceeded("by_class sampling exceeds budget");

  std::mt19937_64 rng(options.seed);
  WeightDistribution dist;
  const std::uint64_t q = code.field().q();
  for (const ClassLabel label : labels) {
    std::optional<std::uint64_t> weight;
    for (std::size_t k = 0; k < options.reps_per_class; ++k) {
      const RingElem a = sample_class_member(code.ring(), label, rng);
      const std::uint64_t w = kernels::lee_weight(code, a);
      if (weight && *weight != w) {
        throw Discrepancy("Lee weight not constant on class " + std::string(to_string(label)) + ": " +
                          std::to_string(*weight) + " vs " + std::to_string(w));
      }
      weight = w;
    }
    dist.add(*weight, class_size(label, q));
  }
  return dist;
}

}  // namespace

WeightDistribution empirical_weight_distribution(const TraceCode& code, EnumerationMode mode,
                                                 const EnumerationOptions& options) {
  if (mode == EnumerationMode::by_class) return by_class_distribution(code, options);
  std::uint64_t cost = 0;
  const bool overflow = __builtin_mul_overflow(code.codeword_count(), std::uint64_t{code.n()}, &cost);
  if (overflow || cost > options.budget) {
    throw BudgetExceeded("full enumeration needs " + std::to_string(cost) +
                         " coordinate evaluations, budget is " + std::to_string(options.budget) +
                         (overflow ? " (cost overflows 64 bits)" : ""));
  }
  return kernels::weight_distribution_parallel(code, options.workers);
}

EnumerationMode parse_mode(std::string_view s) {
  if (s == "full") return EnumerationMode::full;
  if (s == "by_class") return EnumerationMode::by_class;
  throw InvalidArgument("unknown mode '" + std::string(s) + "' (expected full or by_class)");
}

std::string_view to_string(EnumerationMode mode) {
  return mode == EnumerationMode::full ? "full" : "by_class";
}

}  // namespace tracecodes
