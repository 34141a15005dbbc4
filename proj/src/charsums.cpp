#include "tracecodes/charsums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tracecodes/errors.hpp"

namespace tracecodes {

namespace {

void require_odd_prime(std::uint32_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw InvalidArgument("p must be an odd prime");
}

}  // namespace

double tolerance(std::size_t summands) {
  return 1e-6 * static_cast<double>(std::max<std::size_t>(1, summands));
}

RootsOfUnity::RootsOfUnity(std::uint32_t p) : p_(p), powers_(p) {
  if (p == 0) throw InvalidArgument("roots of unity of order 0");
  for (std::uint32_t k = 0; k < p; ++k) {
    powers_[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p);
  }
}

Complex additive_char_sum(const ExtField& f, std::span<const FFElem> subset) {
  const RootsOfUnity omega(f.p());
  Complex sum = 0;
  for (const FFElem x : subset) sum += omega[f.trace(x)];
  return sum;
}

Complex gauss_quadratic_empirical(const ExtField& f) {
  const RootsOfUnity omega(f.p());
  Complex sum = 0;
  FFElem x = f.one();
  // eta(g^k) = (-1)^k.
  for (std::uint32_t k = 0; k + 1 < f.q(); ++k) {
    const Complex term = omega[f.trace(x)];
    sum += (k % 2 == 0) ? term : -term;
    x = f.mul(x, f.generator());
  }
  return sum;
}

Complex gauss_quadratic_closed(std::uint32_t p, std::uint32_t m) {
  require_odd_prime(p);
  if (m < 1) throw InvalidArgument("m must be >= 1");
  const double root_q = std::pow(static_cast<double>(p), m / 2.0);
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m-1}
  if (p % 4 == 1) return {sign * root_q, 0.0};
  // i^m cycles 1, i, -1, -i.
  static constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return sign * kIPowers[m % 4] * root_q;
}

int epsilon(std::uint32_t p) {
  require_odd_prime(p);
  return ((p + 1) / 2) % 2 == 0 ? 1 : -1;
}

std::pair<Complex, Complex> gaussian_periods_closed(std::uint32_t p, std::uint32_t m) {
  const Complex g = gauss_quadratic_closed(p, m);
  return {(g - 1.0) / 2.0, (-g - 1.0) / 2.0};
}

Complex theta_vec(std::span<const Residue> y, std::uint32_t p) {
  const RootsOfUnity omega(p);
  Complex sum = 0;
  for (const Residue v : y) sum += omega[v];
  return sum;
}

Complex theta(const TraceCode& code, RingElem a) { return theta_vec(code.gray_codeword(a), code.p()); }

IdentityCheck correlation_identity(std::span<const Residue> y, std::uint32_t p) {
  IdentityCheck out;
  PVector scaled(y.size());
  for (std::uint32_t s = 1; s < p; ++s) {
    for (std::size_t j = 0; j < y.size(); ++j) scaled[j] = static_cast<Residue>(std::uint64_t{s} * y[j] % p);
    out.lhs += theta_vec(scaled, p);
  }
  out.rhs = static_cast<double>(p - 1) * static_cast<double>(y.size()) -
            static_cast<double>(p) * static_cast<double>(hamming_weight(y));
  out.tol = tolerance((p - 1) * y.size());
  return out;
}

IdentityCheck real_correlation_identity(const TraceCode& code, RingElem a) {
  const std::uint32_t p = code.p();
  if (p % 4 != 3) throw InvalidArgument("real correlation identity requires p = 3 mod 4");
  IdentityCheck out;
  for (std::uint32_t s = 1; s < p; ++s) out.lhs += theta(code, code.ring().scale(s, a));
  out.rhs = static_cast<double>(p - 1) * theta(code, a).real();
  out.tol = tolerance(p * code.gray_length());
  return out;
}

}  // namespace tracecodes
