#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tracecodes {

using Residue = std::uint32_t;

/// Element of F_{p^m}, stored as its polynomial-basis coordinates packed in
/// base p: value = c_0 + c_1 p + ... + c_{m-1} p^{m-1}. Prime-field constants
/// therefore have value < p, and numeric order is lexicographic order on the
/// coefficient vector read from the leading coefficient down.
///
/// Elements carry no reference to their field; arithmetic goes through the
/// owning ExtField, which rejects out-of-range values.
struct FFElem {
  std::uint32_t value = 0;

  constexpr auto operator<=>(const FFElem&) const = default;
};

bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Polynomial helpers over F_p. Coefficient vectors are little-endian
/// (index i holds the coefficient of x^i).
namespace poly {

std::vector<Residue> trim(std::vector<Residue> f);
std::vector<Residue> mul(std::span<const Residue> f, std::span<const Residue> g, Residue p);
std::vector<Residue> rem(std::span<const Residue> f, std::span<const Residue> g, Residue p);
std::vector<Residue> gcd(std::vector<Residue> f, std::vector<Residue> g, Residue p);

/// Ben-Or test: f (monic, degree >= 1) is irreducible iff
/// gcd(f, x^{p^i} - x) = 1 for every i <= deg(f)/2.
bool is_irreducible(std::span<const Residue> f, Residue p);

}  // namespace poly

/// The finite field F_{p^m} = F_p[x]/(modulus).
///
/// Immutable after construction. For q <= kTableLimit the field precomputes
/// exp/log/trace tables and multiplication, square tests and traces are O(1);
/// larger fields fall back to polynomial arithmetic.
class ExtField {
 public:
  static constexpr std::uint64_t kTableLimit = 1'000'000;

  /// Validates p (odd prime), m >= 1 and the modulus. With no modulus the
  /// smallest monic irreducible of degree m is chosen; the generator is the
  /// smallest primitive element. Throws InvalidArgument.
  static ExtField build(std::uint32_t p, std::uint32_t m,
                        std::optional<std::vector<Residue>> modulus = std::nullopt);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, little-endian, length m + 1.
  const std::vector<Residue>& modulus() const { return modulus_; }
  FFElem generator() const { return generator_; }
  bool has_tables() const { return !exp_.empty(); }

  FFElem zero() const { return FFElem{0}; }
  FFElem one() const { return FFElem{1}; }
  FFElem constant(Residue c) const { return FFElem{c % p_}; }
  FFElem from_coeffs(std::span<const Residue> coeffs) const;
  std::vector<Residue> coeffs(FFElem x) const;
  bool contains(FFElem x) const { return x.value < q_; }

  FFElem add(FFElem x, FFElem y) const;
  FFElem sub(FFElem x, FFElem y) const;
  FFElem neg(FFElem x) const;
  FFElem scale(Residue c, FFElem x) const;
  FFElem mul(FFElem x, FFElem y) const;
  FFElem inv(FFElem x) const;
  FFElem div(FFElem x, FFElem y) const { return mul(x, inv(y)); }
  FFElem pow(FFElem x, std::uint64_t e) const;
  /// x^p.
  FFElem frobenius(FFElem x) const { return pow(x, p_); }

  /// Absolute trace tr(z) = z + z^p + ... + z^{p^{m-1}}, as a residue mod p.
  Residue trace(FFElem z) const;
  /// Trace computed directly from the defining sum of Frobenius iterates.
  Residue trace_by_definition(FFElem z) const;

  /// Euler criterion z^{(q-1)/2} == 1. Throws for z == 0.
  bool is_square(FFElem z) const;

  /// Discrete log base the generator (tables required); throws for 0.
  std::uint32_t log(FFElem z) const;
  /// g^k for any k (reduced mod q - 1).
  FFElem exp(std::uint64_t k) const;
  /// tr(g^k), k reduced mod q - 1 (tables required).
  Residue trace_of_power(std::uint64_t k) const { return trace_pow_[k % (q_ - 1)]; }

  /// g^0, g^1, ..., g^{q-2}.
  std::vector<FFElem> units() const;
  /// Squares in primitive-power order (g^0, g^2, ...).
  std::vector<FFElem> squares() const;
  std::vector<FFElem> non_squares() const;

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  ExtField() = default;

  void check(FFElem x) const;
  FFElem mul_poly(FFElem x, FFElem y) const;
  FFElem pow_poly(FFElem x, std::uint64_t e) const;
  bool is_primitive_poly(FFElem x, std::span<const std::uint64_t> factors) const;
  void build_tables();

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<Residue> modulus_;
  FFElem generator_{};
  std::vector<std::uint32_t> pow_p_;  // p^i, i = 0..m
  std::vector<Residue> basis_trace_;  // tr(x^i), i = 0..m-1

  // Present only when q <= kTableLimit.
  std::vector<FFElem> exp_;           // g^k, k = 0..q-2
  std::vector<std::uint32_t> log_;    // log_[0] unused
  std::vector<Residue> trace_;        // tr(z) for every z
  std::vector<Residue> trace_pow_;    // tr(g^k)
};

}  // namespace tracecodes
