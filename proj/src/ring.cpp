#include "tracecodes/ring.hpp"

#include "tracecodes/errors.hpp"

namespace tracecodes {

Ring::Ring(std::shared_ptr<const ExtField> field) : field_(std::move(field)) {
  if (!field_) throw InvalidArgument("ring requires a field");
}

void Ring::check(RingElem x) const {
  if (!field_->contains(x.a) || !field_->contains(x.b)) {
    throw InvalidArgument("ring element does not belong to this ring");
  }
}

RingElem Ring::make(FFElem a, FFElem b) const {
  RingElem x{a, b};
  check(x);
  return x;
}

RingElem Ring::from_index(std::uint64_t index) const {
  if (index >= size()) throw InvalidArgument("ring element index out of range");
  const std::uint64_t q = field_->q();
  return {FFElem{static_cast<std::uint32_t>(index % q)},
          FFElem{static_cast<std::uint32_t>(index / q)}};
}

std::uint64_t Ring::index(RingElem x) const {
  check(x);
  return x.a.value + std::uint64_t{field_->q()} * x.b.value;
}

RingElem Ring::add(RingElem x, RingElem y) const {
  return {field_->add(x.a, y.a), field_->add(x.b, y.b)};
}

RingElem Ring::sub(RingElem x, RingElem y) const {
  return {field_->sub(x.a, y.a), field_->sub(x.b, y.b)};
}

RingElem Ring::neg(RingElem x) const { return {field_->neg(x.a), field_->neg(x.b)}; }

RingElem Ring::mul(RingElem x, RingElem y) const {
  const auto& f = *field_;
  const FFElem ac = f.mul(x.a, y.a);
  const FFElem cross = f.add(f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)), f.mul(x.b, y.b));
  return {ac, cross};
}

RingElem Ring::scale(Residue c, RingElem x) const {
  return {field_->scale(c, x.a), field_->scale(c, x.b)};
}

RingElem Ring::inv(RingElem x) const {
  const auto [s, t] = crt_split(x);
  if (s.value == 0 || t.value == 0) throw InvalidArgument("inversion of a non-unit");
  return crt_join(field_->inv(s), field_->inv(t));
}

std::pair<FFElem, FFElem> Ring::crt_split(RingElem x) const {
  check(x);
  return {x.a, field_->add(x.a, x.b)};
}

RingElem Ring::crt_join(FFElem s, FFElem t) const { return {s, field_->sub(t, s)}; }

bool Ring::is_unit(RingElem x) const {
  const auto [s, t] = crt_split(x);
  return s.value != 0 && t.value != 0;
}

RingElem Ring::frobenius(RingElem x) const {
  return {field_->frobenius(x.a), field_->frobenius(x.b)};
}

RingElem Ring::trace(RingElem x) const {
  return {FFElem{field_->trace(x.a)}, FFElem{field_->trace(x.b)}};
}

RingElem Ring::trace_by_definition(RingElem x) const {
  RingElem sum = zero();
  RingElem term = x;
  for (std::uint32_t j = 0; j < m(); ++j) {
    sum = add(sum, term);
    term = frobenius(term);
  }
  if (sum.a.value >= p() || sum.b.value >= p()) throw Discrepancy("Tr left the base ring");
  return sum;
}

}  // namespace tracecodes
