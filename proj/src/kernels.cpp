#include "tracecodes/kernels.hpp"

#include <omp.h>

#include "tracecodes/errors.hpp"

namespace tracecodes::kernels {

namespace {

// Trace rows for one codeword: inner[i] = tr(beta g^i), outer[j] = tr(alpha t_j).
struct TraceRows {
  std::vector<Residue> inner;
  std::vector<Residue> outer;

  void fill(const TraceCode& code, RingElem a) {
    const ExtField& f = code.field();
    const auto& set = code.set();
    const auto [beta, alpha] = code.ring().crt_split(a);
    inner.assign(set.inner_count, 0);
    outer.assign(set.outer_logs.size(), 0);
    if (beta.value != 0) {
      const std::uint64_t lb = f.log(beta);
      for (std::uint32_t i = 0; i < set.inner_count; ++i) inner[i] = f.trace_of_power(lb + i);
    }
    if (alpha.value != 0) {
      const std::uint64_t la = f.log(alpha);
      for (std::size_t j = 0; j < outer.size(); ++j) outer[j] = f.trace_of_power(la + set.outer_logs[j]);
    }
  }
};

std::uint64_t weight_from_rows(const TraceRows& rows, Residue p) {
  std::uint64_t w = 0;
  for (const Residue y : rows.outer) {
    std::uint64_t row = 0;
    for (const Residue x : rows.inner) {
      const Residue s = x + y;
      row += static_cast<std::uint64_t>(x != y) + static_cast<std::uint64_t>(s != 0 && s != p);
    }
    w += row;
  }
  return w;
}

}  // namespace

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

std::uint64_t lee_weight(const TraceCode& code, RingElem a) {
  TraceRows rows;
  rows.fill(code, a);
  return weight_from_rows(rows, code.p());
}

PVector gray_codeword(const TraceCode& code, RingElem a) {
  TraceRows rows;
  rows.fill(code, a);
  const Residue p = code.p();
  const std::size_t n = code.n();
  PVector out(2 * n);
  std::size_t k = 0;
  for (const Residue y : rows.outer) {
    for (const Residue x : rows.inner) {
      out[k] = (x + p - y) % p;
      out[n + k] = (x + y) % p;
      ++k;
    }
  }
  return out;
}

WeightDistribution weight_distribution_parallel(const TraceCode& code, int workers) {
  const std::int64_t total = static_cast<std::int64_t>(code.codeword_count());
  const std::size_t length = code.gray_length();
  const Residue p = code.p();
  std::vector<std::uint64_t> hist(length + 1, 0);

#pragma omp parallel num_threads(resolve_workers(workers))
  {
    std::vector<std::uint64_t> local(length + 1, 0);
    TraceRows rows;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      rows.fill(code, code.ring().from_index(static_cast<std::uint64_t>(idx)));
      ++local[weight_from_rows(rows, p)];
    }
#pragma omp critical
    for (std::size_t w = 0; w <= length; ++w) hist[w] += local[w];
  }

  WeightDistribution dist;
  for (std::size_t w = 0; w <= length; ++w) {
    if (hist[w] != 0) dist.add(w, hist[w]);
  }
  return dist;
}

WeightDistribution weight_distribution_reference(const TraceCode& code) {
  WeightDistribution dist;
  for (std::uint64_t idx = 0; idx < code.codeword_count(); ++idx) {
    const PVector word = code.gray_codeword(code.ring().from_index(idx));
    dist.add(hamming_weight(word));
  }
  return dist;
}

SupportTable codeword_supports(const TraceCode& code, int workers) {
  SupportTable table;
  table.length = code.gray_length();
  table.words_per_row = (table.length + 63) / 64;
  const std::int64_t total = static_cast<std::int64_t>(code.codeword_count());
  table.bits.assign(static_cast<std::size_t>(total) * table.words_per_row, 0);
  table.weights.assign(static_cast<std::size_t>(total), 0);

#pragma omp parallel for schedule(dynamic, 8) num_threads(resolve_workers(workers))
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const PVector word = gray_codeword(code, code.ring().from_index(static_cast<std::uint64_t>(idx)));
    std::uint64_t* row = table.bits.data() + static_cast<std::size_t>(idx) * table.words_per_row;
    std::uint32_t w = 0;
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (word[k] != 0) {
        row[k / 64] |= std::uint64_t{1} << (k % 64);
        ++w;
      }
    }
    table.weights[static_cast<std::size_t>(idx)] = w;
  }
  return table;
}

}  // namespace tracecodes::kernels
