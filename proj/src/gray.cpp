#include "tracecodes/gray.hpp"

#include <algorithm>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

void require_base(const Ring& base) {
  if (base.m() != 1) throw InvalidArgument("Gray map is defined on the base ring (m = 1) only");
}

}  // namespace

std::pair<Residue, Residue> gray_map(const Ring& base, RingElem x) {
  require_base(base);
  const Residue p = base.p();
  if (x.a.value >= p || x.b.value >= p) throw InvalidArgument("element is not in F_p + uF_p");
  const Residue a = x.a.value, b = x.b.value;
  return {(p - b) % p, (2 * a + b) % p};
}

PVector gray_vec(const Ring& base, std::span<const RingElem> v) {
  const std::size_t n = v.size();
  PVector out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [first, second] = gray_map(base, v[i]);
    out[i] = first;
    out[n + i] = second;
  }
  return out;
}

std::size_t hamming_weight(std::span<const Residue> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Residue c) { return c != 0; }));
}

std::size_t lee_weight(const Ring& base, RingElem x) {
  const auto [first, second] = gray_map(base, x);
  return (first != 0) + (second != 0);
}

std::size_t lee_weight_vec(const Ring& base, std::span<const RingElem> v) {
  std::size_t w = 0;
  for (const auto& x : v) w += lee_weight(base, x);
  return w;
}

std::size_t lee_distance(const Ring& base, std::span<const RingElem> x,
                         std::span<const RingElem> y) {
  if (x.size() != y.size()) throw InvalidArgument("Lee distance of vectors of unequal length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += lee_weight(base, base.sub(x[i], y[i]));
  return d;
}

std::vector<RingElem> elements_of_lee_weight(const Ring& base, std::size_t w) {
  require_base(base);
  std::vector<RingElem> out;
  for (std::uint64_t i = 0; i < base.size(); ++i) {
    const RingElem x = base.from_index(i);
    if (lee_weight(base, x) == w) out.push_back(x);
  }
  return out;
}

}  // namespace tracecodes
