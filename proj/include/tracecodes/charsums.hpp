#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>

#include "tracecodes/field.hpp"
#include "tracecodes/gray.hpp"
#include "tracecodes/trace_code.hpp"

namespace tracecodes {

using Complex = std::complex<double>;

/// Absolute comparison tolerance for a sum of `summands` unit-modulus terms:
/// 1e-6 * max(1, summands).
double tolerance(std::size_t summands);

/// Powers of omega = exp(2 pi i / p), indexed by residue.
class RootsOfUnity {
 public:
  explicit RootsOfUnity(std::uint32_t p);
  std::uint32_t p() const { return p_; }
  Complex operator[](Residue k) const { return powers_[k % p_]; }

 private:
  std::uint32_t p_;
  std::vector<Complex> powers_;
};

/// sum over x in subset of psi(x) = omega^{tr(x)}.
Complex additive_char_sum(const ExtField& f, std::span<const FFElem> subset);

/// Quadratic Gauss sum sum_{x in F*} psi(x) eta(x), summed term by term.
Complex gauss_quadratic_empirical(const ExtField& f);

/// Closed form: (-1)^{m-1} sqrt(q) for p = 1 mod 4, (-1)^{m-1} i^m sqrt(q)
/// for p = 3 mod 4.
Complex gauss_quadratic_closed(std::uint32_t p, std::uint32_t m);

/// (-1)^{(p+1)/2}: +1 for p = 3 mod 4, -1 for p = 1 mod 4.
int epsilon(std::uint32_t p);

/// Gaussian periods (sum over squares, sum over non-squares) from the
/// closed-form Gauss sum: ((G - 1)/2, (-G - 1)/2).
std::pair<Complex, Complex> gaussian_periods_closed(std::uint32_t p, std::uint32_t m);

/// Theta(y) = sum_j omega^{y_j}.
Complex theta_vec(std::span<const Residue> y, std::uint32_t p);

/// theta(a) = Theta(gray image of ev(a)).
Complex theta(const TraceCode& code, RingElem a);

struct IdentityCheck {
  Complex lhs;
  double rhs = 0;
  double tol = 0;

  double error() const { return std::abs(lhs - Complex(rhs, 0.0)); }
  bool holds() const { return error() <= tol; }
};

/// lhs = sum_{s=1}^{p-1} Theta(s y), rhs = (p-1) len(y) - p w_H(y).
IdentityCheck correlation_identity(std::span<const Residue> y, std::uint32_t p);

/// lhs = sum_{s=1}^{p-1} theta(s a), rhs = (p-1) Re theta(a).
/// Requires p = 3 mod 4 (throws InvalidArgument otherwise).
IdentityCheck real_correlation_identity(const TraceCode& code, RingElem a);

}  // namespace tracecodes
