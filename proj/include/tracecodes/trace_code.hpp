#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "tracecodes/field.hpp"
#include "tracecodes/gray.hpp"
#include "tracecodes/linalg.hpp"
#include "tracecodes/regime.hpp"
#include "tracecodes/ring.hpp"

namespace tracecodes {

/// Ordered coordinate set of a trace code.
///
/// Elements are crt_join(t', t) with the outer loop over t (squares for L,
/// all units for L') and the inner loop over t' in F*, both in
/// primitive-power order. Position of (t', t) is outer_index * (q-1) + log t'.
struct DefiningSet {
  Variant variant = Variant::L;
  std::vector<RingElem> elements;
  /// log_g of the outer CRT coordinate t for each outer index.
  std::vector<std::uint32_t> outer_logs;
  /// q - 1.
  std::uint32_t inner_count = 0;

  std::size_t n() const { return elements.size(); }
};

DefiningSet build_defining_set(const Ring& ring, Variant variant);

/// Weight -> frequency, zero word included.
struct WeightDistribution {
  std::map<std::uint64_t, std::uint64_t> freq;

  std::uint64_t total() const;
  /// Smallest nonzero weight (0 if there is none).
  std::uint64_t min_nonzero() const;
  std::uint64_t max_weight() const;
  std::size_t nonzero_weight_count() const;
  void add(std::uint64_t weight, std::uint64_t count = 1) { freq[weight] += count; }
  void merge(const WeightDistribution& other);

  bool operator==(const WeightDistribution&) const = default;
};

/// Trace code {ev(a) = (Tr(a x))_{x in set} : a in R_m} over the base ring R.
class TraceCode {
 public:
  /// The field must be table-backed.
  TraceCode(std::shared_ptr<const ExtField> field, Variant variant);

  const ExtField& field() const { return ring_.field(); }
  const Ring& ring() const { return ring_; }
  /// F_p + uF_p.
  const Ring& base_ring() const { return base_; }
  const DefiningSet& set() const { return set_; }
  Variant variant() const { return set_.variant; }
  std::uint32_t p() const { return ring_.p(); }
  std::uint32_t m() const { return ring_.m(); }
  std::size_t n() const { return set_.n(); }
  std::size_t gray_length() const { return 2 * set_.n(); }
  /// p^{2m}.
  std::uint64_t codeword_count() const { return ring_.size(); }

  /// Position of x in the defining set, or nullopt if x is not in it.
  std::optional<std::size_t> position(RingElem x) const;

  /// ev(a) computed with ring arithmetic: coordinate i is Tr(a * x_i).
  RVector evaluate(RingElem a) const;
  /// Gray image of ev(a).
  PVector gray_codeword(RingElem a) const { return gray_vec(base_, evaluate(a)); }

  /// 2m x 2n matrix whose rows are the Gray images of ev(u g^i) then
  /// ev((1-u) g^i), i = 0..m-1.
  Matrix gray_generator_matrix() const;
  /// R_m elements behind the generator matrix rows, in row order.
  std::vector<RingElem> generator_basis() const;

 private:
  Ring ring_;
  Ring base_;
  DefiningSet set_;
};

/// Case labels of the per-codeword weight analysis. a = u*alpha + (1-u)*beta,
/// i.e. CRT coordinates (beta, alpha).
enum class ClassLabel {
  zero,
  u_alpha_Q,
  u_alpha_N,
  u_alpha,
  one_minus_u_beta,
  unit_Q,
  unit_N,
  unit,
};

std::string_view to_string(ClassLabel c);

/// Labels used by a regime, in a fixed order. Split labels for five_weight.
std::vector<ClassLabel> class_labels(RegimeTag tag);
/// Number of a in R_m carrying `label` (q = p^m).
std::uint64_t class_size(ClassLabel label, std::uint64_t q);
/// Q/N split on alpha applies when split == true.
ClassLabel classify(const Ring& ring, RingElem a, bool split);
ClassLabel classify(const Ring& ring, RingElem a, const Regime& regime);

enum class EnumerationMode { full, by_class };

struct EnumerationOptions {
  /// Upper bound on q^2 * n coordinate evaluations for full mode.
  std::uint64_t budget = 5'000'000'000ULL;
  /// OpenMP threads; 0 means the runtime default.
  int workers = 0;
  std::size_t reps_per_class = 20;
  std::uint64_t seed = 1;
};

/// Full: exact enumeration over all a in R_m (OpenMP kernel).
/// by_class: weight of random representatives per class label, constancy
/// asserted (throws Discrepancy), frequencies from class sizes.
WeightDistribution empirical_weight_distribution(const TraceCode& code, EnumerationMode mode,
                                                 const EnumerationOptions& options = {});

EnumerationMode parse_mode(std::string_view s);
std::string_view to_string(EnumerationMode mode);

}  // namespace tracecodes
