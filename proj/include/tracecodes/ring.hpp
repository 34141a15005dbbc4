#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <utility>

#include "tracecodes/field.hpp"

namespace tracecodes {

/// a + u b in R_m = F_{p^m} + u F_{p^m}, u^2 = u.
///
/// The base ring R = F_p + u F_p is R_m with m = 1; an element of R_m whose
/// two components are prime-field constants is also read as an element of R.
struct RingElem {
  FFElem a;
  FFElem b;

  constexpr auto operator<=>(const RingElem&) const = default;
};

/// Arithmetic context for R_m over a fixed ExtField.
class Ring {
 public:
  explicit Ring(std::shared_ptr<const ExtField> field);

  const ExtField& field() const { return *field_; }
  const std::shared_ptr<const ExtField>& field_ptr() const { return field_; }
  std::uint32_t p() const { return field_->p(); }
  std::uint32_t m() const { return field_->m(); }
  /// |R_m| = q^2.
  std::uint64_t size() const { return std::uint64_t{field_->q()} * field_->q(); }

  RingElem zero() const { return {}; }
  RingElem one() const { return {field_->one(), field_->zero()}; }
  RingElem u() const { return {field_->zero(), field_->one()}; }
  RingElem make(FFElem a, FFElem b) const;
  /// Element number `index` in the enumeration a + q * b.
  RingElem from_index(std::uint64_t index) const;
  std::uint64_t index(RingElem x) const;

  RingElem add(RingElem x, RingElem y) const;
  RingElem sub(RingElem x, RingElem y) const;
  RingElem neg(RingElem x) const;
  /// (a + ub)(c + ud) = ac + u(ad + bc + bd).
  RingElem mul(RingElem x, RingElem y) const;
  RingElem scale(Residue c, RingElem x) const;
  /// Inverse of a unit, componentwise on CRT coordinates.
  RingElem inv(RingElem x) const;

  /// (a, a + b): the images under u -> 0 and u -> 1.
  std::pair<FFElem, FFElem> crt_split(RingElem x) const;
  /// s + u(t - s): the element with CRT coordinates (s, t).
  RingElem crt_join(FFElem s, FFElem t) const;

  bool is_unit(RingElem x) const;

  /// a^p + u b^p.
  RingElem frobenius(RingElem x) const;
  /// Tr(a + ub) = tr(a) + u tr(b); both components land in F_p.
  RingElem trace(RingElem x) const;
  /// Tr as the sum of Frobenius iterates F^0 + ... + F^{m-1}.
  RingElem trace_by_definition(RingElem x) const;

 private:
  void check(RingElem x) const;

  std::shared_ptr<const ExtField> field_;
};

}  // namespace tracecodes
