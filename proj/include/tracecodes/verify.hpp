#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracecodes/theory.hpp"
#include "tracecodes/trace_code.hpp"

namespace tracecodes {

/// A Lee-weight-2 dual word gamma * e_x + delta * e_y, i.e. gamma x + delta y = 0.
struct DualWitness {
  std::size_t position_x = 0;
  std::size_t position_y = 0;
  RingElem gamma;
  RingElem delta;
};

struct DualDistanceResult {
  int distance = 0;
  /// gamma x != 0 for every position x and every Lee-weight-1 gamma.
  bool weight_one_absent = false;
  std::uint64_t weight_one_checks = 0;
  std::optional<DualWitness> witness;
};

/// Dual Lee distance of the code over R, searched among words of Lee weight
/// <= 2. A word y is dual iff sum_x y_x x = 0 in R_m. Returns 1 if a
/// weight-1 dual word exists; throws Discrepancy if no word of weight <= 2
/// is found.
DualDistanceResult dual_lee_distance_small(const TraceCode& code);

struct MinimalityResult {
  bool all_minimal = false;
  std::uint64_t nonzero_codewords = 0;
  std::uint64_t non_minimal = 0;
  /// (codeword, covered codeword) as ring enumeration indices of a; at most
  /// kMaxCounterexamples entries, in increasing order of the first index.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counterexamples;

  static constexpr std::size_t kMaxCounterexamples = 16;
};

/// Pairwise support comparison over all Gray-image codewords. x is minimal
/// iff no nonzero y that is not a scalar multiple of x has supp(y) within
/// supp(x). Throws BudgetExceeded above `max_codewords`.
MinimalityResult minimal_codewords_bruteforce(const TraceCode& code, int workers = 0,
                                              std::uint64_t max_codewords = 10'000);

struct SymmetryResult {
  bool holds = false;
  /// Exactly one multiplier in the set maps w to v, for every checked pair.
  bool regular = false;
  std::uint64_t pairs_checked = 0;
  std::uint64_t codewords_checked = 0;
};

/// Moving coordinate x to position (v/w) x turns ev(a) into ev(a (v/w)^{-1}).
/// exhaustive: all pairs (v, w) and all a; otherwise `trials` random triples.
SymmetryResult check_symmetry(const TraceCode& code, std::size_t trials, std::uint64_t seed,
                              bool exhaustive = false);

struct NondegeneracyResult {
  bool holds = false;
  std::uint64_t checked = 0;
};

/// For nonzero x in R_m finds a with Tr(a x) != 0. Exhaustive over all x
/// when trials == 0, otherwise `trials` random nonzero x.
NondegeneracyResult check_nondegeneracy(const Ring& ring, std::size_t trials = 0, std::uint64_t seed = 1);

struct VerifyConfig {
  std::uint32_t p = 3;
  std::uint32_t m = 1;
  Variant variant = Variant::L;
  EnumerationMode mode = EnumerationMode::full;
  EnumerationOptions enumeration;
  /// Brute-force minimality is attempted only up to this many codewords.
  std::uint64_t minimality_limit = 10'000;
};

struct Timings {
  double predicted_ms = 0;
  double empirical_ms = 0;
  double dual_ms = 0;
  double minimality_ms = 0;
  double total_ms = 0;
};

struct VerificationReport {
  Regime regime;
  std::uint64_t length = 0;
  std::uint32_t dimension = 0;
  EnumerationMode mode = EnumerationMode::full;
  WeightDistribution predicted;
  WeightDistribution empirical;
  bool match = false;
  std::uint64_t min_distance = 0;
  BoundReport griesmer;
  bool optimality_asserted = false;
  std::optional<DualDistanceResult> dual;
  std::optional<bool> ab_minimal;
  std::optional<MinimalityResult> brute_minimal;
  std::optional<SecretSharingSummary> sss;
  /// Human-readable description of every failed assertion.
  std::vector<std::string> failures;
  Timings timings;

  bool passed() const { return failures.empty(); }
};

/// Predicted vs. empirical distribution plus the Griesmer report at the
/// empirical minimum distance. Throws UnsupportedRegime / BudgetExceeded.
VerificationReport verify_distribution(std::uint32_t p, std::uint32_t m, Variant variant, EnumerationMode mode,
                                       const EnumerationOptions& options = {});

/// verify_distribution followed by the dual-distance, minimality and
/// secret-sharing checks, with each applicable claim turned into an assertion.
VerificationReport run_verification(const VerifyConfig& config);

}  // namespace tracecodes
