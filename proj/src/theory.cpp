#include "tracecodes/theory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tracecodes/charsums.hpp"
#include "tracecodes/errors.hpp"

namespace tracecodes {

BigInt ipow(std::uint64_t base, std::uint32_t exponent) {
  BigInt result = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max()) {
    throw InvalidArgument("value does not fit in 64 bits");
  }
  return x.convert_to<std::uint64_t>();
}

namespace {

void require_supported(const Regime& regime) {
  if (regime.tag == RegimeTag::unsupported) {
    throw UnsupportedRegime("no closed-form weight distribution for variant " +
                            std::string(to_string(regime.variant)) + " with p = " + std::to_string(regime.p) +
                            ", m = " + std::to_string(regime.m));
  }
}

void add_weight(WeightDistribution& dist, const BigInt& w, const BigInt& f) { dist.add(to_u64(w), to_u64(f)); }

}  // namespace

WeightDistribution predicted_distribution(const Regime& regime) {
  require_supported(regime);
  const std::uint32_t p = regime.p, m = regime.m;
  const BigInt q = ipow(p, m);
  const BigInt pm1 = p - 1;
  WeightDistribution dist;
  dist.add(0, 1);
  switch (regime.tag) {
    case RegimeTag::five_weight: {
      const BigInt h = ipow(p, m / 2 - 1);
      const BigInt top = ipow(p, 2 * m - 1);
      const BigInt mid = ipow(p, m - 1);
      add_weight(dist, pm1 * (mid - h) * (q - 1), (q - 1) / 2);
      add_weight(dist, pm1 * (top - 2 * mid - h), (q - 1) * (q - 1) / 2);
      add_weight(dist, pm1 * (top - 2 * mid + h), (q - 1) * (q - 1) / 2);
      add_weight(dist, pm1 * (top - mid), q - 1);
      add_weight(dist, pm1 * (mid + h) * (q - 1), (q - 1) / 2);
      break;
    }
    case RegimeTag::two_weight_L:
    case RegimeTag::two_weight_Lprime: {
      const BigInt factor = regime.tag == RegimeTag::two_weight_Lprime ? 2 : 1;
      const BigInt top = ipow(p, 2 * m - 1);
      const BigInt mid = ipow(p, m - 1);
      add_weight(dist, factor * pm1 * (top - 2 * mid), (q - 1) * (q - 1));
      add_weight(dist, factor * pm1 * (top - mid), 2 * (q - 1));
      break;
    }
    case RegimeTag::unsupported: break;
  }
  return dist;
}

std::uint64_t class_weight(ClassLabel label, const Regime& regime) {
  require_supported(regime);
  if (label == ClassLabel::zero) return 0;
  const std::uint32_t p = regime.p, m = regime.m;
  const BigInt pm1 = p - 1;
  const BigInt top = ipow(p, 2 * m - 1);
  const BigInt mid = ipow(p, m - 1);
  const auto valid = class_labels(regime.tag);
  if (std::find(valid.begin(), valid.end(), label) == valid.end()) {
    throw InvalidArgument("class label " + std::string(to_string(label)) + " does not apply to regime " +
                          std::string(to_string(regime.tag)));
  }

  if (regime.tag == RegimeTag::five_weight) {
    const BigInt e = epsilon(p);
    const BigInt h = ipow(p, m / 2 - 1);
    const BigInt h3 = ipow(p, 3 * m / 2 - 1);
    switch (label) {
      case ClassLabel::u_alpha_Q: return to_u64(pm1 * (top - mid - e * h3 + e * h));
      case ClassLabel::u_alpha_N: return to_u64(pm1 * (top - mid + e * h3 - e * h));
      case ClassLabel::one_minus_u_beta: return to_u64(pm1 * (top - mid));
      case ClassLabel::unit_Q: return to_u64(pm1 * (top - 2 * mid + e * h));
      case ClassLabel::unit_N: return to_u64(pm1 * (top - 2 * mid - e * h));
      default: break;
    }
  } else {
    const BigInt factor = regime.tag == RegimeTag::two_weight_Lprime ? 2 : 1;
    switch (label) {
      case ClassLabel::u_alpha:
      case ClassLabel::one_minus_u_beta: return to_u64(factor * pm1 * (top - mid));
      case ClassLabel::unit: return to_u64(factor * pm1 * (top - 2 * mid));
      default: break;
    }
  }
  throw InvalidArgument("class label does not apply to regime");
}

CodeParameters predicted_parameters(const Regime& regime) {
  require_supported(regime);
  const BigInt q = ipow(regime.p, regime.m);
  BigInt n = (q - 1) * (q - 1);
  if (regime.variant == Variant::L) n /= 2;
  CodeParameters out;
  out.length = 2 * n;
  out.dimension = 2 * regime.m;
  out.min_distance = predicted_distribution(regime).min_nonzero();
  return out;
}

BigInt griesmer_sum(const BigInt& d, std::uint32_t dimension, std::uint32_t p) {
  BigInt sum = 0;
  BigInt power = 1;
  for (std::uint32_t j = 0; j < dimension; ++j) {
    sum += (d + power - 1) / power;
    power *= p;
  }
  return sum;
}

BoundReport griesmer(const BigInt& length, std::uint32_t dimension, const BigInt& d, std::uint32_t p) {
  if (dimension < 1 || d < 1) throw InvalidArgument("Griesmer bound needs K >= 1 and d >= 1");
  BoundReport r;
  r.length = length;
  r.dimension = dimension;
  r.min_distance = d;
  r.griesmer_sum_d = griesmer_sum(d, dimension, p);
  r.griesmer_sum_d_plus_1 = griesmer_sum(d + 1, dimension, p);
  r.optimal = r.griesmer_sum_d <= length && r.griesmer_sum_d_plus_1 > length;
  return r;
}

BigInt griesmer_closed_form(const Regime& regime) {
  const std::uint32_t p = regime.p, m = regime.m;
  const BigInt q = ipow(p, m);
  switch (regime.tag) {
    case RegimeTag::two_weight_L: return q * q - 2 * q + m;
    case RegimeTag::two_weight_Lprime: return 2 * q * q - 4 * q + m - (p == 3 ? 0 : 1);
    default: break;
  }
  throw UnsupportedRegime("no Griesmer closed form for regime " + std::string(to_string(regime.tag)));
}

bool optimality_claimed(const Regime& regime) {
  switch (regime.tag) {
    case RegimeTag::two_weight_L: return regime.m >= 3;
    case RegimeTag::two_weight_Lprime: return (regime.p == 3 && regime.m >= 3) || (regime.p >= 5 && regime.m >= 4);
    default: return false;
  }
}

bool minimality_claimed(const Regime& regime) {
  switch (regime.tag) {
    case RegimeTag::two_weight_L: return regime.m >= 3;
    case RegimeTag::five_weight: return regime.m >= 6;
    case RegimeTag::two_weight_Lprime: return regime.m >= 2;
    default: return false;
  }
}

bool sphere_packing_refutes_d3(const BigInt& length, std::uint32_t dimension, std::uint32_t p) {
  return ipow(p, dimension) < 1 + length * (p - 1);
}

bool ab_minimality(std::uint64_t w0, std::uint64_t w_inf, std::uint32_t p) {
  if (w0 == 0 || w0 > w_inf) throw InvalidArgument("need 0 < w0 <= w_inf");
  return BigInt(p) * w0 > BigInt(p - 1) * w_inf;
}

SecretSharingSummary secret_sharing_summary(const Matrix& g, std::uint32_t p, bool all_minimal,
                                            int dual_distance) {
  if (!all_minimal) throw InvalidArgument("secret sharing summary needs every nonzero codeword minimal");
  if (dual_distance != 2) throw InvalidArgument("secret sharing summary needs dual distance 2");
  if (g.cols() == 0 || g.rows() == 0) throw InvalidArgument("empty generator matrix");
  const auto k = static_cast<std::uint32_t>(rank_mod_p(g, p));
  SecretSharingSummary s;
  s.participants = g.cols() - 1;
  s.minimal_access_sets = ipow(p, k - 1);
  s.coverage = BigInt(p - 1) * ipow(p, k >= 2 ? k - 2 : 0);
  const auto g0 = g.column(0);
  for (std::size_t i = 1; i < g.cols(); ++i) {
    if (is_scalar_multiple(g.column(i), g0, p)) s.dictatorial_positions.push_back(i);
  }
  return s;
}

MasseyDemo massey_demo(const Matrix& g, std::span<const Residue> dealer_vector,
                       std::span<const std::size_t> positions, std::uint32_t p) {
  const auto c = row_times_matrix(dealer_vector, g, p);
  MasseyDemo demo;
  demo.secret = c[0];
  demo.shares.assign(c.begin() + 1, c.end());

  std::vector<std::vector<Residue>> columns;
  for (const std::size_t i : positions) {
    if (i == 0 || i >= g.cols()) throw InvalidArgument("participant index out of range");
    columns.push_back(g.column(i));
  }
  const auto g0 = g.column(0);
  auto x = solve_combination(columns, g0, p);
  if (!x) throw InvalidArgument("chosen participants cannot recover the secret");
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < positions.size(); ++j) s = (s + std::uint64_t{(*x)[j]} * c[positions[j]]) % p;
  demo.recovered = static_cast<Residue>(s);
  demo.coefficients = std::move(*x);
  return demo;
}

std::vector<std::size_t> minimal_access_set(const Matrix& g, std::uint32_t p, std::mt19937_64& rng) {
  std::vector<std::size_t> order(g.cols() - 1);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<Residue>> cols(g.cols());
  for (std::size_t i = 0; i < g.cols(); ++i) cols[i] = g.column(i);

  auto spans = [&](const std::vector<std::size_t>& set) {
    std::vector<std::vector<Residue>> chosen;
    chosen.reserve(set.size());
    for (const std::size_t i : set) chosen.push_back(cols[i]);
    return solve_combination(chosen, cols[0], p).has_value();
  };
  if (!spans(order)) throw InvalidArgument("g_0 is not spanned by the other columns");

  std::vector<std::size_t> current = order;
  for (const std::size_t candidate : order) {
    std::vector<std::size_t> trial;
    trial.reserve(current.size());
    for (const std::size_t i : current) {
      if (i != candidate) trial.push_back(i);
    }
    if (spans(trial)) current = std::move(trial);
  }
  std::sort(current.begin(), current.end());
  return current;
}

}  // namespace tracecodes
