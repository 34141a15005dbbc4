#include "tracecodes/field.hpp"

#include <algorithm>
#include <string>

#include "tracecodes/errors.hpp"

namespace tracecodes {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

Residue inv_mod(Residue a, Residue p) {
  // p prime: a^{p-2}.
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<Residue>(result);
}

std::vector<Residue> powmod(std::vector<Residue> base, std::uint64_t e,
                            std::span<const Residue> f, Residue p) {
  std::vector<Residue> result{1};
  base = poly::rem(base, f, p);
  while (e > 0) {
    if (e & 1) result = poly::rem(poly::mul(result, base, p), f, p);
    e >>= 1;
    if (e > 0) base = poly::rem(poly::mul(base, base, p), f, p);
  }
  return result;
}

}  // namespace

namespace poly {

std::vector<Residue> trim(std::vector<Residue> f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::vector<Residue> mul(std::span<const Residue> f, std::span<const Residue> g, Residue p) {
  if (f.empty() || g.empty()) return {};
  std::vector<std::uint64_t> acc(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{f[i]} * g[j]) % p;
    }
  }
  return trim(std::vector<Residue>(acc.begin(), acc.end()));
}

std::vector<Residue> rem(std::span<const Residue> f, std::span<const Residue> g, Residue p) {
  auto divisor = trim(std::vector<Residue>(g.begin(), g.end()));
  if (divisor.empty()) throw InvalidArgument("polynomial division by zero");
  auto r = trim(std::vector<Residue>(f.begin(), f.end()));
  const std::size_t dg = divisor.size() - 1;
  const Residue lead_inv = inv_mod(divisor.back(), p);
  while (!r.empty() && r.size() - 1 >= dg) {
    const std::size_t shift = r.size() - 1 - dg;
    const std::uint64_t c = std::uint64_t{r.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= dg; ++i) {
      r[shift + i] = static_cast<Residue>((r[shift + i] + (p - c) * divisor[i]) % p);
    }
    r = trim(std::move(r));
  }
  return r;
}

std::vector<Residue> gcd(std::vector<Residue> f, std::vector<Residue> g, Residue p) {
  f = trim(std::move(f));
  g = trim(std::move(g));
  while (!g.empty()) {
    auto r = rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    for (auto& c : f) c = static_cast<Residue>(c * lead_inv % p);
  }
  return f;
}

bool is_irreducible(std::span<const Residue> f, Residue p) {
  const auto monic = trim(std::vector<Residue>(f.begin(), f.end()));
  if (monic.size() < 2) return false;
  const std::size_t deg = monic.size() - 1;
  if (deg == 1) return true;
  std::vector<Residue> h{0, 1};  // x
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    h = powmod(h, p, monic, p);
    auto diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (gcd(monic, diff, p).size() != 1) return false;
  }
  return true;
}

}  // namespace poly

ExtField ExtField::build(std::uint32_t p, std::uint32_t m,
                         std::optional<std::vector<Residue>> modulus) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw InvalidArgument("p must be an odd prime (got " + std::to_string(p) + ")");
  }
  if (m < 1) throw InvalidArgument("extension degree m must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > 0x7fffffffULL) throw InvalidArgument("field order p^m too large");
  }

  ExtField f;
  f.p_ = p;
  f.m_ = m;
  f.q_ = static_cast<std::uint32_t>(q);
  f.pow_p_.resize(m + 1);
  f.pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= m; ++i) f.pow_p_[i] = f.pow_p_[i - 1] * p;

  if (modulus) {
    const auto& mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1) {
      throw InvalidArgument("modulus must be monic of degree " + std::to_string(m));
    }
    if (std::any_of(mod.begin(), mod.end(), [p](Residue c) { return c >= p; })) {
      throw InvalidArgument("modulus coefficients must lie in [0, p)");
    }
    if (!poly::is_irreducible(mod, p)) throw InvalidArgument("modulus is reducible");
    f.modulus_ = mod;
  } else {
    std::vector<Residue> cand(m + 1, 0);
    cand[m] = 1;
    for (std::uint32_t low = 0; low < f.q_; ++low) {
      std::uint32_t v = low;
      for (std::uint32_t i = 0; i < m; ++i) {
        cand[i] = v % p;
        v /= p;
      }
      if (poly::is_irreducible(cand, p)) {
        f.modulus_ = cand;
        break;
      }
    }
    if (f.modulus_.empty()) throw InvalidArgument("no irreducible polynomial found");
  }

  f.basis_trace_.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    f.basis_trace_[i] = f.trace_by_definition(FFElem{f.pow_p_[i]});
  }

  const auto factors = prime_factors(f.q_ - 1);
  for (std::uint32_t v = 1; v < f.q_; ++v) {
    if (f.is_primitive_poly(FFElem{v}, factors)) {
      f.generator_ = FFElem{v};
      break;
    }
  }
  if (f.q_ <= kTableLimit) f.build_tables();
  return f;
}

void ExtField::build_tables() {
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  FFElem x = one();
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    exp_[k] = x;
    log_[x.value] = k;
    x = mul_poly(x, generator_);
  }
  trace_.resize(q_);
  for (std::uint32_t v = 0; v < q_; ++v) {
    std::uint64_t t = 0;
    std::uint32_t rest = v;
    for (std::uint32_t i = 0; i < m_; ++i) {
      t += std::uint64_t{rest % p_} * basis_trace_[i];
      rest /= p_;
    }
    trace_[v] = static_cast<Residue>(t % p_);
  }
  trace_pow_.resize(q_ - 1);
  for (std::uint32_t k = 0; k + 1 < q_; ++k) trace_pow_[k] = trace_[exp_[k].value];
}

void ExtField::check(FFElem x) const {
  if (x.value >= q_) {
    throw InvalidArgument("element " + std::to_string(x.value) + " does not belong to F_" +
                          std::to_string(q_));
  }
}

FFElem ExtField::from_coeffs(std::span<const Residue> coeffs) const {
  if (coeffs.size() > m_) throw InvalidArgument("too many coefficients for field degree");
  std::uint32_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw InvalidArgument("coefficient out of range");
    v = v * p_ + coeffs[i];
  }
  return FFElem{v};
}

std::vector<Residue> ExtField::coeffs(FFElem x) const {
  check(x);
  std::vector<Residue> out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = x.value % p_;
    x.value /= p_;
  }
  return out;
}

FFElem ExtField::add(FFElem x, FFElem y) const {
  check(x);
  check(y);
  std::uint32_t out = 0;
  std::uint32_t a = x.value, b = y.value;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return FFElem{out};
}

FFElem ExtField::neg(FFElem x) const {
  check(x);
  std::uint32_t out = 0;
  std::uint32_t a = x.value;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * pow_p_[i];
    a /= p_;
  }
  return FFElem{out};
}

FFElem ExtField::sub(FFElem x, FFElem y) const { return add(x, neg(y)); }

FFElem ExtField::scale(Residue c, FFElem x) const {
  check(x);
  c %= p_;
  std::uint32_t out = 0;
  std::uint32_t a = x.value;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += static_cast<std::uint32_t>(std::uint64_t{a % p_} * c % p_) * pow_p_[i];
    a /= p_;
  }
  return FFElem{out};
}

FFElem ExtField::mul_poly(FFElem x, FFElem y) const {
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  const auto cx = coeffs(x);
  const auto cy = coeffs(y);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (cx[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{cx[i]} * cy[j]) % p_;
    }
  }
  // Reduce with the monic modulus: x^m = -(c_0 + ... + c_{m-1} x^{m-1}).
  for (std::size_t k = prod.size(); k-- > m_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
      prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  std::uint32_t v = 0;
  for (std::uint32_t i = m_; i-- > 0;) v = v * p_ + static_cast<std::uint32_t>(prod[i]);
  return FFElem{v};
}

FFElem ExtField::pow_poly(FFElem x, std::uint64_t e) const {
  FFElem result = one();
  while (e > 0) {
    if (e & 1) result = mul_poly(result, x);
    e >>= 1;
    if (e > 0) x = mul_poly(x, x);
  }
  return result;
}

bool ExtField::is_primitive_poly(FFElem x, std::span<const std::uint64_t> factors) const {
  if (x.value == 0) return false;
  if (pow_poly(x, q_ - 1) != one()) return false;
  return std::all_of(factors.begin(), factors.end(),
                     [&](std::uint64_t r) { return pow_poly(x, (q_ - 1) / r) != one(); });
}

FFElem ExtField::mul(FFElem x, FFElem y) const {
  check(x);
  check(y);
  if (x.value == 0 || y.value == 0) return zero();
  if (has_tables()) {
    return exp_[(std::uint64_t{log_[x.value]} + log_[y.value]) % (q_ - 1)];
  }
  return mul_poly(x, y);
}

FFElem ExtField::inv(FFElem x) const {
  check(x);
  if (x.value == 0) throw InvalidArgument("inversion of zero");
  if (has_tables()) return exp_[(q_ - 1 - log_[x.value]) % (q_ - 1)];
  return pow_poly(x, q_ - 2);
}

FFElem ExtField::pow(FFElem x, std::uint64_t e) const {
  check(x);
  if (e == 0) return one();
  if (x.value == 0) return zero();
  if (has_tables()) return exp_[(std::uint64_t{log_[x.value]} * (e % (q_ - 1))) % (q_ - 1)];
  return pow_poly(x, e);
}

Residue ExtField::trace(FFElem z) const {
  check(z);
  if (has_tables()) return trace_[z.value];
  std::uint64_t t = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    t += std::uint64_t{z.value % p_} * basis_trace_[i];
    z.value /= p_;
  }
  return static_cast<Residue>(t % p_);
}

Residue ExtField::trace_by_definition(FFElem z) const {
  check(z);
  FFElem sum = zero();
  FFElem term = z;
  for (std::uint32_t j = 0; j < m_; ++j) {
    sum = add(sum, term);
    term = pow_poly(term, p_);
  }
  if (sum.value >= p_) throw Discrepancy("trace left the prime field");
  return sum.value;
}

bool ExtField::is_square(FFElem z) const {
  check(z);
  if (z.value == 0) throw InvalidArgument("zero is neither a square nor a non-square");
  if (has_tables()) return log_[z.value] % 2 == 0;
  return pow_poly(z, (q_ - 1) / 2) == one();
}

std::uint32_t ExtField::log(FFElem z) const {
  check(z);
  if (z.value == 0) throw InvalidArgument("discrete log of zero");
  if (!has_tables()) throw InvalidArgument("discrete log requires table-backed field");
  return log_[z.value];
}

FFElem ExtField::exp(std::uint64_t k) const {
  if (has_tables()) return exp_[k % (q_ - 1)];
  return pow_poly(generator_, k % (q_ - 1));
}

std::vector<FFElem> ExtField::units() const {
  if (has_tables()) return exp_;
  std::vector<FFElem> out;
  out.reserve(q_ - 1);
  FFElem x = one();
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    out.push_back(x);
    x = mul_poly(x, generator_);
  }
  return out;
}

std::vector<FFElem> ExtField::squares() const {
  std::vector<FFElem> out;
  out.reserve((q_ - 1) / 2);
  for (std::uint32_t k = 0; k + 1 < q_; k += 2) out.push_back(exp(k));
  return out;
}

std::vector<FFElem> ExtField::non_squares() const {
  std::vector<FFElem> out;
  out.reserve((q_ - 1) / 2);
  for (std::uint32_t k = 1; k + 1 < q_; k += 2) out.push_back(exp(k));
  return out;
}

}  // namespace tracecodes
