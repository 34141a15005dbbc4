// Command-line front end: construct, verify, gauss, sweep.
//
// Exit codes: 0 pass, 1 assertion mismatch, 2 invalid input, 3 budget
// refusal, 4 unsupported regime.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "tracecodes/charsums.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/report.hpp"
#include "tracecodes/trace_code.hpp"
#include "tracecodes/verify.hpp"

namespace tc = tracecodes;

namespace {

enum ExitCode { kPass = 0, kMismatch = 1, kInvalid = 2, kBudget = 3, kUnsupported = 4 };

struct RunConfig {
  std::uint32_t p = 3;
  std::uint32_t m = 1;
  std::string variant = "L";
  std::string mode = "full";
  int workers = 0;
  std::uint64_t budget = 5'000'000'000ULL;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 1;
};

struct SweepConfig {
  std::vector<std::uint32_t> primes;
  std::vector<std::uint32_t> degrees;
  std::vector<std::string> variants{"L", "Lprime"};
  std::string mode = "full";
  int workers = 0;
  std::uint64_t budget = 5'000'000'000ULL;
  std::string out;
  std::uint64_t seed = 1;
};

// Writes to --out when given, stdout otherwise.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw tc::InvalidArgument("cannot open output file " + path);
  f << text;
}

tc::EnumerationOptions enumeration_options(int workers, std::uint64_t budget, std::uint64_t seed) {
  if (workers < 0) throw tc::InvalidArgument("workers must be >= 1");
  tc::EnumerationOptions o;
  o.workers = workers;
  o.budget = budget;
  o.seed = seed;
  return o;
}

int cmd_construct(const RunConfig& cfg) {
  const auto variant = tc::parse_variant(cfg.variant);
  auto field = std::make_shared<const tc::ExtField>(tc::ExtField::build(cfg.p, cfg.m));
  if (!field->has_tables()) throw tc::BudgetExceeded("field too large for table-backed construction");
  const std::uint64_t q = field->q();
  std::uint64_t n = (q - 1) * (q - 1);
  if (variant == tc::Variant::L) n /= 2;
  if (2 * cfg.m * n > cfg.budget) throw tc::BudgetExceeded("generator matrix exceeds budget");

  const tc::TraceCode code(field, variant);
  const tc::Matrix g = code.gray_generator_matrix();
  const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
  std::filesystem::create_directories(dir);
  const auto path = dir / tc::matrix_file_name(cfg.p, cfg.m, variant);
  std::ofstream f(path);
  if (!f) throw tc::InvalidArgument("cannot open output file " + path.string());
  tc::write_matrix_csv(f, g);
  std::cout << "[" << g.cols() << ", " << tc::rank_mod_p(g, cfg.p) << "]\n";
  return kPass;
}

int cmd_verify(const RunConfig& cfg) {
  tc::VerifyConfig vc;
  vc.p = cfg.p;
  vc.m = cfg.m;
  vc.variant = tc::parse_variant(cfg.variant);
  vc.mode = tc::parse_mode(cfg.mode);
  vc.enumeration = enumeration_options(cfg.workers, cfg.budget, cfg.seed);
  const auto report = tc::run_verification(vc);

  std::ostringstream os;
  if (cfg.format == "json") {
    os << tc::to_json(report).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << tc::sweep_csv_header() << "\n" << tc::sweep_csv_row(report) << "\n";
  } else {
    tc::write_text(os, report);
  }
  emit(cfg.out, os.str());
  for (const auto& failure : report.failures) std::cerr << "mismatch: " << failure << "\n";
  return report.passed() ? kPass : kMismatch;
}

int cmd_gauss(const RunConfig& cfg) {
  const auto field = tc::ExtField::build(cfg.p, cfg.m);
  const tc::Complex closed = tc::gauss_quadratic_closed(cfg.p, cfg.m);
  const tc::Complex empirical = tc::gauss_quadratic_empirical(field);
  const auto [q_closed, n_closed] = tc::gaussian_periods_closed(cfg.p, cfg.m);
  const tc::Complex q_emp = tc::additive_char_sum(field, field.squares());
  const tc::Complex n_emp = tc::additive_char_sum(field, field.non_squares());
  const double tau = tc::tolerance(field.q());
  const double d_gauss = std::abs(closed - empirical);
  const double d_q = std::abs(q_closed - q_emp);
  const double d_n = std::abs(n_closed - n_emp);
  const double d_sum = std::abs(q_emp + n_emp + 1.0);
  const bool pass = d_gauss <= tau && d_q <= tau && d_n <= tau && d_sum <= tau;

  auto fmt = [](tc::Complex z) {
    std::ostringstream os;
    os << std::setprecision(10) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
  };
  std::ostringstream os;
  os << "p = " << cfg.p << ", m = " << cfg.m << ", q = " << field.q() << "\n";
  os << std::scientific << std::setprecision(3);
  os << "G(eta) closed:    " << fmt(closed) << "\n";
  os << "G(eta) empirical: " << fmt(empirical) << "\n";
  os << "|difference|:     " << d_gauss << "\n";
  os << "Q period closed:  " << fmt(q_closed) << "   empirical: " << fmt(q_emp) << "   |diff| " << d_q << "\n";
  os << "N period closed:  " << fmt(n_closed) << "   empirical: " << fmt(n_emp) << "   |diff| " << d_n << "\n";
  os << "|Q + N + 1|:      " << d_sum << "\n";
  os << "tolerance:        " << tau << "\n";
  os << (pass ? "PASS" : "FAIL") << "\n";
  emit(cfg.out, os.str());
  return pass ? kPass : kMismatch;
}

std::string failed_row(std::uint32_t p, std::uint32_t m, const std::string& variant, const std::string& regime,
                       const std::string& status, double ms) {
  std::ostringstream os;
  os << p << "," << m << "," << variant << "," << regime << ",,,," << status << ",,," << std::fixed
     << std::setprecision(1) << ms;
  return os.str();
}

int cmd_sweep(const SweepConfig& cfg) {
  std::ostringstream os;
  os << tc::sweep_csv_header() << "\n";
  bool any_failed = false;
  const auto mode = tc::parse_mode(cfg.mode);
  for (const auto p : cfg.primes) {
    for (const auto m : cfg.degrees) {
      for (const auto& vname : cfg.variants) {
        const auto start = std::chrono::steady_clock::now();
        auto ms = [&] {
          return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        };
        try {
          tc::VerifyConfig vc;
          vc.p = p;
          vc.m = m;
          vc.variant = tc::parse_variant(vname);
          vc.mode = mode;
          vc.enumeration = enumeration_options(cfg.workers, cfg.budget, cfg.seed);
          const auto report = tc::run_verification(vc);
          os << tc::sweep_csv_row(report) << "\n";
          any_failed = any_failed || !report.passed();
        } catch (const tc::UnsupportedRegime&) {
          os << failed_row(p, m, vname, "unsupported", "unsupported", ms()) << "\n";
        } catch (const tc::BudgetExceeded&) {
          os << failed_row(p, m, vname, "", "budget", ms()) << "\n";
          any_failed = true;
        } catch (const std::exception&) {
          os << failed_row(p, m, vname, "", "error", ms()) << "\n";
          any_failed = true;
        }
      }
    }
  }
  emit(cfg.out, os.str());
  return any_failed ? kMismatch : kPass;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-p", cfg.p, "odd prime p")->required();
  sub->add_option("-m", cfg.m, "extension degree m")->required();
  sub->add_option("--out", cfg.out, "output path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace codes over F_p + uF_p: construction and verification"};
  app.require_subcommand(1);

  RunConfig construct_cfg, verify_cfg, gauss_cfg;
  SweepConfig sweep_cfg;

  auto* construct = app.add_subcommand("construct", "write the Gray-image generator matrix as CSV");
  add_common(construct, construct_cfg);
  construct->add_option("--variant", construct_cfg.variant, "L or Lprime");
  construct->add_option("--budget", construct_cfg.budget, "max coordinate evaluations");

  auto* verify = app.add_subcommand("verify", "compare predicted and empirical results");
  add_common(verify, verify_cfg);
  verify->add_option("--variant", verify_cfg.variant, "L or Lprime");
  verify->add_option("--mode", verify_cfg.mode, "full or by_class");
  verify->add_option("--workers", verify_cfg.workers, "worker threads (default: all)");
  verify->add_option("--budget", verify_cfg.budget, "max coordinate evaluations");
  verify->add_option("--format", verify_cfg.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--seed", verify_cfg.seed, "seed for randomized checks");

  auto* gauss = app.add_subcommand("gauss", "closed-form vs. empirical quadratic Gauss sums and periods");
  add_common(gauss, gauss_cfg);

  auto* sweep = app.add_subcommand("sweep", "verify a grid of instances, one CSV row each");
  sweep->add_option("-p", sweep_cfg.primes, "primes (comma-separated)")->delimiter(',');
  sweep->add_option("-m", sweep_cfg.degrees, "degrees (comma-separated)")->delimiter(',');
  sweep->add_option("--variant", sweep_cfg.variants, "variants (default: L,Lprime)")->delimiter(',');
  sweep->add_option("--mode", sweep_cfg.mode, "full or by_class");
  sweep->add_option("--workers", sweep_cfg.workers, "worker threads (default: all)");
  sweep->add_option("--budget", sweep_cfg.budget, "max coordinate evaluations per instance");
  sweep->add_option("--out", sweep_cfg.out, "output CSV path");
  sweep->add_option("--seed", sweep_cfg.seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*construct) return cmd_construct(construct_cfg);
    if (*verify) return cmd_verify(verify_cfg);
    if (*gauss) return cmd_gauss(gauss_cfg);
    if (*sweep) return cmd_sweep(sweep_cfg);
  } catch (const tc::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const tc::BudgetExceeded& e) {
    std::cerr << "budget refused: " << e.what() << "\n";
    return kBudget;
  } catch (const tc::UnsupportedRegime& e) {
    std::cerr << "unsupported regime: " << e.what() << "\n";
    return kUnsupported;
  } catch (const tc::Discrepancy& e) {
    std::cerr << "discrepancy: " << e.what() << "\n";
    return kMismatch;
  }
  return kInvalid;
}
