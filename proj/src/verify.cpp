#include "tracecodes/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "tracecodes/errors.hpp"
#include "tracecodes/gray.hpp"
#include "tracecodes/kernels.hpp"

namespace tracecodes {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Lee-weight-w elements of R lifted into R_m (constants in both components).
std::vector<RingElem> lifted_lee_elements(const TraceCode& code, std::size_t w) {
  return elements_of_lee_weight(code.base_ring(), w);
}

}  // namespace

DualDistanceResult dual_lee_distance_small(const TraceCode& code) {
  const Ring& ring = code.ring();
  const auto& elements = code.set().elements;
  const auto weight_one = lifted_lee_elements(code, 1);
  const auto weight_two = lifted_lee_elements(code, 2);

  DualDistanceResult result;
  result.weight_one_absent = true;
  for (const RingElem& x : elements) {
    for (const RingElem& gamma : weight_one) {
      ++result.weight_one_checks;
      if (ring.mul(gamma, x) == ring.zero()) result.weight_one_absent = false;
    }
  }
  if (!result.weight_one_absent) {
    result.distance = 1;
    return result;
  }

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const RingElem& gamma : weight_two) {
      if (ring.mul(gamma, elements[i]) == ring.zero()) {
        result.distance = 2;
        result.witness = DualWitness{i, i, gamma, ring.zero()};
        return result;
      }
    }
  }

  // gamma x + delta y = 0  <=>  y = -(gamma / delta) x; weight-1 elements are units.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const RingElem& gamma : weight_one) {
      for (const RingElem& delta : weight_one) {
        const RingElem y = ring.neg(ring.mul(ring.mul(gamma, ring.inv(delta)), elements[i]));
        const auto j = code.position(y);
        if (j && *j != i) {
          result.distance = 2;
          result.witness = DualWitness{i, *j, gamma, delta};
          return result;
        }
      }
    }
  }
  throw Discrepancy("no dual word of Lee weight <= 2 found");
}

MinimalityResult minimal_codewords_bruteforce(const TraceCode& code, int workers, std::uint64_t max_codewords) {
  const std::uint64_t count = code.codeword_count();
  if (count > max_codewords) {
    throw BudgetExceeded("minimal-codeword brute force limited to " + std::to_string(max_codewords) +
                         " codewords, code has " + std::to_string(count));
  }
  const auto table = kernels::codeword_supports(code, workers);
  const Ring& ring = code.ring();
  const std::uint32_t p = code.p();
  const std::size_t words = table.words_per_row;

  // First covered codeword per x, or count (none).
  std::vector<std::uint64_t> covered(count, count);
  const auto total = static_cast<std::int64_t>(count);

#pragma omp parallel for schedule(dynamic, 4) num_threads(kernels::resolve_workers(workers))
  for (std::int64_t xi = 0; xi < total; ++xi) {
    const auto x = static_cast<std::uint64_t>(xi);
    const std::uint32_t wx = table.weights[x];
    if (wx == 0) continue;
    const RingElem ax = ring.from_index(x);
    std::vector<std::uint64_t> multiples;
    for (std::uint32_t s = 1; s < p; ++s) multiples.push_back(ring.index(ring.scale(s, ax)));
    const std::uint64_t* sx = table.row(x);
    for (std::uint64_t y = 0; y < count; ++y) {
      const std::uint32_t wy = table.weights[y];
      if (wy == 0 || wy > wx || y == x) continue;
      const std::uint64_t* sy = table.row(y);
      bool inside = true;
      for (std::size_t k = 0; k < words && inside; ++k) inside = (sy[k] & ~sx[k]) == 0;
      if (!inside) continue;
      if (wy == wx && std::find(multiples.begin(), multiples.end(), y) != multiples.end()) continue;
      covered[x] = y;
      break;
    }
  }

  MinimalityResult r;
  for (std::uint64_t x = 0; x < count; ++x) {
    if (table.weights[x] == 0) continue;
    ++r.nonzero_codewords;
    if (covered[x] != count) {
      ++r.non_minimal;
      if (r.counterexamples.size() < MinimalityResult::kMaxCounterexamples) {
        r.counterexamples.emplace_back(x, covered[x]);
      }
    }
  }
  r.all_minimal = r.non_minimal == 0;
  return r;
}

SymmetryResult check_symmetry(const TraceCode& code, std::size_t trials, std::uint64_t seed, bool exhaustive) {
  const Ring& ring = code.ring();
  const auto& elements = code.set().elements;
  const std::size_t n = elements.size();
  SymmetryResult r;
  r.holds = true;
  r.regular = true;

  // Coordinate x moves to position (c x); nullopt if c x leaves the set.
  auto permutation = [&](RingElem c) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> to(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = code.position(ring.mul(c, elements[i]));
      if (!j) return std::nullopt;
      to[i] = *j;
    }
    return to;
  };
  auto apply = [&](const RVector& word, const std::vector<std::size_t>& to) {
    RVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[to[i]] = word[i];
    return out;
  };
  auto regular_pair = [&](RingElem v, RingElem w) {
    std::size_t hits = 0;
    for (const RingElem& c : elements) hits += ring.mul(c, w) == v;
    return hits == 1;
  };

  if (exhaustive) {
    const std::uint64_t count = code.codeword_count();
    std::vector<RVector> words(count);
    for (std::uint64_t i = 0; i < count; ++i) words[i] = code.evaluate(ring.from_index(i));
    for (const RingElem& v : elements) {
      for (const RingElem& w : elements) {
        ++r.pairs_checked;
        const RingElem c = ring.mul(v, ring.inv(w));
        r.regular = r.regular && regular_pair(v, w);
        const RingElem c_inv = ring.inv(c);
        const auto to = permutation(c);
        if (!to) {
          r.holds = false;
          return r;
        }
        for (std::uint64_t i = 0; i < count; ++i) {
          ++r.codewords_checked;
          const std::uint64_t target = ring.index(ring.mul(ring.from_index(i), c_inv));
          if (apply(words[i], *to) != words[target]) {
            r.holds = false;
            return r;
          }
        }
      }
    }
    return r;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<std::uint64_t> pick_a(0, code.codeword_count() - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    const RingElem v = elements[pick(rng)];
    const RingElem w = elements[pick(rng)];
    const RingElem a = ring.from_index(pick_a(rng));
    ++r.pairs_checked;
    ++r.codewords_checked;
    const RingElem c = ring.mul(v, ring.inv(w));
    if (n <= 4096) r.regular = r.regular && regular_pair(v, w);
    const auto to = permutation(c);
    if (!to || apply(code.evaluate(a), *to) != code.evaluate(ring.mul(a, ring.inv(c)))) {
      r.holds = false;
      return r;
    }
  }
  return r;
}

NondegeneracyResult check_nondegeneracy(const Ring& ring, std::size_t trials, std::uint64_t seed) {
  NondegeneracyResult r;
  r.holds = true;
  auto has_witness = [&](RingElem x) {
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
      if (ring.trace(ring.mul(ring.from_index(i), x)) != ring.zero()) return true;
    }
    return false;
  };
  if (trials == 0) {
    for (std::uint64_t i = 1; i < ring.size(); ++i) {
      ++r.checked;
      if (!has_witness(ring.from_index(i))) {
        r.holds = false;
        return r;
      }
    }
    return r;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, ring.size() - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    ++r.checked;
    if (!has_witness(ring.from_index(pick(rng)))) {
      r.holds = false;
      return r;
    }
  }
  return r;
}

namespace {

std::string describe(const WeightDistribution& d) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [w, f] : d.freq) {
    os << (first ? "" : ", ") << w << ":" << f;
    first = false;
  }
  os << "}";
  return os.str();
}

struct Built {
  std::shared_ptr<const ExtField> field;
  std::unique_ptr<TraceCode> code;
};

Built build_code(std::uint32_t p, std::uint32_t m, Variant variant) {
  Built b;
  b.field = std::make_shared<const ExtField>(ExtField::build(p, m));
  b.code = std::make_unique<TraceCode>(b.field, variant);
  return b;
}

VerificationReport distribution_report(const TraceCode& code, EnumerationMode mode,
                                       const EnumerationOptions& options) {
  VerificationReport r;
  r.regime = classify_regime(code.variant(), code.p(), code.m());
  r.mode = mode;
  auto t0 = Clock::now();
  r.predicted = predicted_distribution(r.regime);
  r.timings.predicted_ms = elapsed_ms(t0);

  t0 = Clock::now();
  r.empirical = empirical_weight_distribution(code, mode, options);
  r.timings.empirical_ms = elapsed_ms(t0);

  r.match = r.predicted == r.empirical;
  if (!r.match) {
    r.failures.push_back("weight distribution mismatch: predicted " + describe(r.predicted) + ", empirical " +
                         describe(r.empirical));
  }
  r.length = code.gray_length();
  r.dimension = static_cast<std::uint32_t>(rank_mod_p(code.gray_generator_matrix(), code.p()));
  if (r.dimension != 2 * code.m()) {
    r.failures.push_back("generator matrix rank " + std::to_string(r.dimension) + " != 2m");
  }
  r.min_distance = r.empirical.min_nonzero();
  if (r.min_distance > 0) r.griesmer = griesmer(r.length, r.dimension, r.min_distance, code.p());
  r.optimality_asserted = optimality_claimed(r.regime);
  if (r.optimality_asserted && !r.griesmer.optimal) {
    r.failures.push_back("Griesmer optimality expected but not attained");
  }
  return r;
}

}  // namespace

VerificationReport verify_distribution(std::uint32_t p, std::uint32_t m, Variant variant, EnumerationMode mode,
                                       const EnumerationOptions& options) {
  if (classify_regime(variant, p, m).tag == RegimeTag::unsupported) {
    // Validate p and m first so bad input maps to InvalidArgument.
    (void)ExtField::build(p, 1);
    throw UnsupportedRegime("no closed-form weight distribution for variant " + std::string(to_string(variant)) +
                            " with p = " + std::to_string(p) + ", m = " + std::to_string(m));
  }
  const auto built = build_code(p, m, variant);
  return distribution_report(*built.code, mode, options);
}

VerificationReport run_verification(const VerifyConfig& config) {
  const auto start = Clock::now();
  if (classify_regime(config.variant, config.p, config.m).tag == RegimeTag::unsupported) {
    (void)ExtField::build(config.p, 1);
    throw UnsupportedRegime("no closed-form weight distribution for variant " +
                            std::string(to_string(config.variant)) + " with p = " + std::to_string(config.p) +
                            ", m = " + std::to_string(config.m));
  }
  const auto built = build_code(config.p, config.m, config.variant);
  const TraceCode& code = *built.code;
  VerificationReport r = distribution_report(code, config.mode, config.enumeration);

  auto t0 = Clock::now();
  try {
    r.dual = dual_lee_distance_small(code);
    if (config.m >= 2 && r.dual->distance != 2) {
      r.failures.push_back("dual Lee distance " + std::to_string(r.dual->distance) + " != 2");
    }
  } catch (const Discrepancy& e) {
    if (config.m >= 2) r.failures.push_back(std::string("dual distance search: ") + e.what());
  }
  r.timings.dual_ms = elapsed_ms(t0);

  const std::uint64_t w0 = r.empirical.min_nonzero();
  const std::uint64_t w_inf = r.empirical.max_weight();
  if (w0 > 0) r.ab_minimal = ab_minimality(w0, w_inf, code.p());

  t0 = Clock::now();
  if (code.codeword_count() <= config.minimality_limit) {
    r.brute_minimal = minimal_codewords_bruteforce(code, config.enumeration.workers, config.minimality_limit);
    if (r.ab_minimal.value_or(false) && !r.brute_minimal->all_minimal) {
      r.failures.push_back("sufficient minimality condition holds but brute force found a non-minimal codeword");
    }
    if (minimality_claimed(r.regime) && !r.brute_minimal->all_minimal) {
      r.failures.push_back("all nonzero codewords expected minimal");
    }
  }
  r.timings.minimality_ms = elapsed_ms(t0);

  const bool all_minimal = r.brute_minimal ? r.brute_minimal->all_minimal : r.ab_minimal.value_or(false);
  if (all_minimal && r.dual && r.dual->distance == 2) {
    r.sss = secret_sharing_summary(code.gray_generator_matrix(), code.p(), true, 2);
  }
  r.timings.total_ms = elapsed_ms(start);
  return r;
}

}  // namespace tracecodes
