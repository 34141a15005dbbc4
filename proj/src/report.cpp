#include "tracecodes/report.hpp"

#include <iomanip>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace tracecodes {

namespace {

nlohmann::json big_to_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  return x.str();
}

nlohmann::json pairs(const WeightDistribution& d) {
  auto arr = nlohmann::json::array();
  for (const auto& [w, f] : d.freq) arr.push_back({w, f});
  return arr;
}

nlohmann::json ring_json(RingElem x) { return {x.a.value, x.b.value}; }

}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["p"] = r.regime.p;
  j["m"] = r.regime.m;
  j["variant"] = std::string(to_string(r.regime.variant));
  j["regime"] = std::string(to_string(r.regime.tag));
  j["mode"] = std::string(to_string(r.mode));
  j["length"] = r.length;
  j["dimension"] = r.dimension;
  j["predicted"] = pairs(r.predicted);
  j["empirical"] = pairs(r.empirical);
  j["match"] = r.match;
  j["min_distance"] = r.min_distance;
  j["griesmer"] = {{"sum_d", big_to_json(r.griesmer.griesmer_sum_d)},
                   {"sum_d1", big_to_json(r.griesmer.griesmer_sum_d_plus_1)},
                   {"optimal", r.griesmer.optimal},
                   {"asserted", r.optimality_asserted}};
  if (r.dual) {
    j["dual_lee_distance"] = r.dual->distance;
    if (r.dual->witness) {
      const auto& w = *r.dual->witness;
      j["dual_witness"] = {{"x", w.position_x},
                           {"y", w.position_y},
                           {"gamma", ring_json(w.gamma)},
                           {"delta", ring_json(w.delta)}};
    }
  } else {
    j["dual_lee_distance"] = "not determined";
  }
  j["ab_minimal"] = r.ab_minimal ? nlohmann::json(*r.ab_minimal) : nlohmann::json(nullptr);
  if (r.brute_minimal) {
    j["brute_minimal"] = r.brute_minimal->all_minimal;
    j["non_minimal_count"] = r.brute_minimal->non_minimal;
  } else {
    j["brute_minimal"] = nullptr;
  }
  if (r.sss) {
    j["sss"] = {{"participants", r.sss->participants},
                {"access_sets", big_to_json(r.sss->minimal_access_sets)},
                {"coverage", big_to_json(r.sss->coverage)},
                {"dictatorial_count", r.sss->dictatorial_positions.size()}};
  } else {
    j["sss"] = nullptr;
  }
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  return j;
}

void write_text(std::ostream& os, const VerificationReport& r) {
  os << "variant " << to_string(r.regime.variant) << ", p = " << r.regime.p << ", m = " << r.regime.m
     << ", regime " << to_string(r.regime.tag) << ", mode " << to_string(r.mode) << "\n";
  os << "parameters [" << r.length << ", " << r.dimension << ", " << r.min_distance << "]\n\n";
  os << std::setw(12) << "weight" << std::setw(16) << "predicted" << std::setw(16) << "empirical" << "\n";
  std::set<std::uint64_t> weights;
  for (const auto& [w, f] : r.predicted.freq) weights.insert(w);
  for (const auto& [w, f] : r.empirical.freq) weights.insert(w);
  auto lookup = [](const WeightDistribution& d, std::uint64_t w) {
    const auto it = d.freq.find(w);
    return it == d.freq.end() ? std::string("-") : std::to_string(it->second);
  };
  for (const auto w : weights) {
    os << std::setw(12) << w << std::setw(16) << lookup(r.predicted, w) << std::setw(16) << lookup(r.empirical, w)
       << "\n";
  }
  os << "\nmatch: " << (r.match ? "yes" : "NO") << "\n";
  os << "griesmer: sum_d = " << r.griesmer.griesmer_sum_d << ", sum_d+1 = " << r.griesmer.griesmer_sum_d_plus_1
     << ", optimal = " << (r.griesmer.optimal ? "yes" : "no") << (r.optimality_asserted ? " (asserted)" : "")
     << "\n";
  os << "dual Lee distance: " << (r.dual ? std::to_string(r.dual->distance) : std::string("not determined"))
     << "\n";
  os << "AB minimality condition: "
     << (r.ab_minimal ? (*r.ab_minimal ? "holds" : "fails") : "n/a") << "\n";
  os << "brute-force minimality: ";
  if (r.brute_minimal) {
    os << (r.brute_minimal->all_minimal ? "all minimal" : "not all minimal") << " (" << r.brute_minimal->non_minimal
       << " of " << r.brute_minimal->nonzero_codewords << " non-minimal)\n";
  } else {
    os << "skipped\n";
  }
  if (r.sss) {
    os << "secret sharing: " << r.sss->participants << " participants, " << r.sss->minimal_access_sets
       << " minimal access sets, coverage " << r.sss->coverage << ", " << r.sss->dictatorial_positions.size()
       << " dictatorial\n";
  }
  os << std::fixed << std::setprecision(1) << "time: " << r.timings.total_ms << " ms\n";
  for (const auto& f : r.failures) os << "FAIL: " << f << "\n";
}

std::string sweep_csv_header() { return "p,m,variant,regime,N,K,d,match,optimal,dual,runtime_ms"; }

std::string sweep_csv_row(const VerificationReport& r) {
  std::ostringstream os;
  os << r.regime.p << "," << r.regime.m << "," << to_string(r.regime.variant) << "," << to_string(r.regime.tag)
     << "," << r.length << "," << r.dimension << "," << r.min_distance << "," << (r.match ? "true" : "false") << ","
     << (r.griesmer.optimal ? "true" : "false") << ","
     << (r.dual ? std::to_string(r.dual->distance) : std::string("not_determined")) << "," << std::fixed
     << std::setprecision(1) << r.timings.total_ms;
  return os.str();
}

void write_matrix_csv(std::ostream& os, const Matrix& g) {
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const auto row = g.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << row[c];
    }
    os << '\n';
  }
}

std::string matrix_file_name(std::uint32_t p, std::uint32_t m, Variant variant) {
  return "gmatrix_p" + std::to_string(p) + "_m" + std::to_string(m) + "_" + std::string(to_string(variant)) + ".csv";
}

}  // namespace tracecodes
