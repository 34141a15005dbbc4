#pragma once

#include <cstdint>
#include <vector>

#include "tracecodes/trace_code.hpp"

// Enumeration kernels. The table-driven kernels use the CRT form of the
// evaluation: for a with CRT coordinates (beta, alpha) and a coordinate x with
// CRT coordinates (t', t),
//   Tr(a x) = tr(beta t') + u (tr(alpha t) - tr(beta t')),
// whose Gray image is (tr(beta t') - tr(alpha t), tr(beta t') + tr(alpha t)).
// The serial reference goes through ring multiplication, Tr and gray_vec
// instead, and is kept for cross-checking the fast path.
namespace tracecodes::kernels {

/// Lee weight of ev(a) by direct per-coordinate evaluation from trace tables.
std::uint64_t lee_weight(const TraceCode& code, RingElem a);

/// Gray image of ev(a) from trace tables, block order.
PVector gray_codeword(const TraceCode& code, RingElem a);

/// Full weight distribution over all a in R_m, OpenMP-parallel over a.
/// workers == 0 uses the OpenMP default. Result is independent of workers.
WeightDistribution weight_distribution_parallel(const TraceCode& code, int workers = 0);

/// Same distribution through evaluate() + gray_vec() + hamming_weight(),
/// single-threaded.
WeightDistribution weight_distribution_reference(const TraceCode& code);

/// Bit-packed supports of the Gray images of all codewords, indexed by the
/// ring enumeration index of a. OpenMP-parallel.
struct SupportTable {
  std::size_t length = 0;
  std::size_t words_per_row = 0;
  std::vector<std::uint64_t> bits;
  std::vector<std::uint32_t> weights;

  const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words_per_row; }
};

SupportTable codeword_supports(const TraceCode& code, int workers = 0);

/// Number of OpenMP threads a request for `workers` resolves to.
int resolve_workers(int workers);

}  // namespace tracecodes::kernels
