#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <vector>

#include "tracecodes/linalg.hpp"
#include "tracecodes/regime.hpp"
#include "tracecodes/trace_code.hpp"

namespace tracecodes {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(std::uint64_t base, std::uint32_t exponent);
/// Narrowing with a range check (throws InvalidArgument).
std::uint64_t to_u64(const BigInt& x);

/// Closed-form weight distribution of the Gray image (zero word included).
/// Throws UnsupportedRegime for regimes without a formula.
WeightDistribution predicted_distribution(const Regime& regime);

/// Lee weight of ev(a) for a in the class `label`, from the per-case
/// formulas. Q/N-split labels are valid only for five_weight.
std::uint64_t class_weight(ClassLabel label, const Regime& regime);

struct CodeParameters {
  BigInt length;
  std::uint32_t dimension = 0;
  BigInt min_distance;
};

/// [N, 2m, d] with d the smallest predicted nonzero weight.
CodeParameters predicted_parameters(const Regime& regime);

struct BoundReport {
  BigInt length;
  std::uint32_t dimension = 0;
  BigInt min_distance;
  BigInt griesmer_sum_d;
  BigInt griesmer_sum_d_plus_1;
  /// sum_d <= N and sum_{d+1} > N.
  bool optimal = false;
};

/// sum_{j=0}^{K-1} ceil(d / p^j).
BigInt griesmer_sum(const BigInt& d, std::uint32_t dimension, std::uint32_t p);
BoundReport griesmer(const BigInt& length, std::uint32_t dimension, const BigInt& d, std::uint32_t p);

/// Closed form of sum_j ceil((d+1)/p^j) at the predicted d:
/// two_weight_L: p^{2m} - 2p^m + m; two_weight_Lprime: 2p^{2m} - 4p^m + m
/// (p = 3) or 2p^{2m} - 4p^m + m - 1 (p >= 5). Other regimes throw.
BigInt griesmer_closed_form(const Regime& regime);

/// Whether the optimality theorems cover this regime: L with m odd >= 3,
/// p = 3 mod 4; L' with p = 3, m >= 3 or p >= 5, m >= 4.
bool optimality_claimed(const Regime& regime);

/// Whether all nonzero codewords are claimed minimal: L with m odd >= 3,
/// p = 3 mod 4; L with m singly-even >= 6; L' with m >= 2.
bool minimality_claimed(const Regime& regime);

/// True iff p^K < 1 + N(p-1), i.e. no [N, N-K] dual code with minimum
/// distance >= 3 can exist.
bool sphere_packing_refutes_d3(const BigInt& length, std::uint32_t dimension, std::uint32_t p);

/// Sufficient condition for all nonzero codewords being minimal:
/// p * w0 > (p - 1) * w_inf.
bool ab_minimality(std::uint64_t w0, std::uint64_t w_inf, std::uint32_t p);

struct SecretSharingSummary {
  std::uint64_t participants = 0;
  BigInt minimal_access_sets;
  /// Minimal access sets containing a given non-dictatorial participant.
  BigInt coverage;
  /// Participant indices i >= 1 whose column is a multiple of column 0.
  std::vector<std::size_t> dictatorial_positions;
};

/// Access-structure counts of the Massey scheme on the dual of the code
/// generated by `g`. Requires all nonzero codewords minimal and dual
/// distance 2 (throws InvalidArgument otherwise).
SecretSharingSummary secret_sharing_summary(const Matrix& g, std::uint32_t p, bool all_minimal,
                                            int dual_distance);

struct MasseyDemo {
  Residue secret = 0;
  std::vector<Residue> shares;  // c_1 .. c_{N-1}
  Residue recovered = 0;
  std::vector<Residue> coefficients;
};

/// Deals c = u G, keeps S = c_0 as the secret and recovers it from the
/// shares at `positions` (indices >= 1) by solving g_0 = sum x_j g_{i_j}.
/// Throws InvalidArgument when the positions do not span g_0.
MasseyDemo massey_demo(const Matrix& g, std::span<const Residue> dealer_vector,
                       std::span<const std::size_t> positions, std::uint32_t p);

/// A minimal set of participants whose columns span g_0, found by dropping
/// participants in random order while g_0 stays in the span.
std::vector<std::size_t> minimal_access_set(const Matrix& g, std::uint32_t p, std::mt19937_64& rng);

}  // namespace tracecodes
