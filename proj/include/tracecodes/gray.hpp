#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tracecodes/ring.hpp"

namespace tracecodes {

/// Vector over F_p (entries in [0, p)).
using PVector = std::vector<Residue>;
/// Vector over the base ring R.
using RVector = std::vector<RingElem>;

/// phi(a + ub) = (-b, 2a + b). `base` must be the base ring (m = 1).
std::pair<Residue, Residue> gray_map(const Ring& base, RingElem x);

/// Componentwise Gray image in block order: the -b components of all
/// coordinates first, then all 2a + b components. Output length 2n.
PVector gray_vec(const Ring& base, std::span<const RingElem> v);

std::size_t hamming_weight(std::span<const Residue> v);

/// Hamming weight of the Gray image.
std::size_t lee_weight(const Ring& base, RingElem x);
std::size_t lee_weight_vec(const Ring& base, std::span<const RingElem> v);
std::size_t lee_distance(const Ring& base, std::span<const RingElem> x,
                         std::span<const RingElem> y);

/// All elements of R with Lee weight exactly `w`, in index order.
std::vector<RingElem> elements_of_lee_weight(const Ring& base, std::size_t w);

}  // namespace tracecodes
