/*
 * Copyright 2026 The finzeta Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finzeta/finzeta.hpp"
#include "report.hpp"

namespace {

using finzeta::cli::Json;
using finzeta::cli::to_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr double kDualEvalTol = 1e-10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json new_report(const std::string& command) {
  Json r;
  r["schema_version"] = finzeta::cli::kSchemaVersion;
  r["command"] = command;
  r["parameters"] = Json::object();
  r["results"] = Json::array();
  r["checks"] = Json::array();
  r["notes"] = Json::array();
  return r;
}

void add_check(Json& report, const std::string& name, bool pass, Json detail = Json::object()) {
  Json c;
  c["name"] = name;
  c["pass"] = pass;
  for (auto& [k, v] : detail.items()) c[k] = v;
  report["checks"].push_back(std::move(c));
}

std::complex<double> parse_point(const std::string& text) {
  auto z = finzeta::cli::parse_complex(text);
  if (!z) throw UsageError("cannot parse complex number '" + text + "'");
  return *z;
}

std::optional<long> as_integer(std::complex<double> s) {
  if (s.imag() != 0 || std::floor(s.real()) != s.real() || std::fabs(s.real()) > 1e6) return std::nullopt;
  return static_cast<long>(s.real());
}

struct EvalArgs {
  std::uint64_t n = 1;
  int m = 1;
  std::string s = "0";
  std::string mode = "euler";
  bool exact = false;
};

Json cmd_eval(const EvalArgs& a) {
  Json r = new_report("eval");
  const auto s = parse_point(a.s);
  r["parameters"] = {{"N", a.n}, {"m", a.m}, {"s", to_json(s)}, {"mode", a.mode}, {"exact", a.exact}};
  if (a.exact) {
    auto k = as_integer(s);
    if (!k) throw UsageError("--exact needs an integer s");
    const finzeta::Rational v = finzeta::eval_brute_exact(a.n, a.m, *k);
    r["results"].push_back({{"method", "exact"}, {"value", to_json(v)}, {"integer", finzeta::is_integer(v)}});
    return r;
  }
  std::complex<double> brute, euler;
  if (a.mode != "euler") {
    brute = finzeta::eval_brute(a.n, a.m, s);
    r["results"].push_back({{"method", "brute"}, {"value", to_json(brute)}});
  }
  if (a.mode != "brute") {
    euler = finzeta::eval_euler(a.n, a.m, s);
    r["results"].push_back({{"method", "euler"}, {"value", to_json(euler)}});
  }
  if (a.mode == "both") {
    const double rel = std::abs(brute - euler) / std::max(1.0, std::abs(brute));
    add_check(r, "brute_vs_euler", rel <= kDualEvalTol, {{"discrepancy", rel}, {"tolerance", kDualEvalTol}});
  }
  return r;
}

Json cmd_zeros(std::uint64_t n, int m, double height) {
  Json r = new_report("zeros");
  r["parameters"] = {{"N", n}, {"m", m}, {"height", height}};
  for (const auto& z : finzeta::predicted_zeros(n, m, height)) {
    r["results"].push_back({{"p", z.p},
                            {"k", z.k},
                            {"n", z.n},
                            {"s", to_json(z.s)},
                            {"counted_multiplicity", z.multiplicity},
                            {"net_order", z.order},
                            {"abs_Z", std::abs(finzeta::eval_brute(n, m, z.s))}});
  }
  r["notes"].push_back(
      "candidates s = 2 pi i n / ((ord_p N + k) log p); counted_multiplicity counts vanishing numerator "
      "factors only, net_order also subtracts vanishing denominator factors and is the true order of vanishing");
  return r;
}

struct GfunArgs {
  std::vector<int> gamma;
  std::optional<int> l;
  bool infinite = false;
  int trunc = 20;
};

Json cmd_gfun(const GfunArgs& a) {
  Json r = new_report("gfun");
  const finzeta::Signature gamma(a.gamma);
  if (a.infinite == a.l.has_value()) throw UsageError("give exactly one of -l and --infinite");
  if (a.trunc < 1) throw UsageError("--trunc must be positive");
  r["parameters"] = {{"gamma", a.gamma}};
  if (!a.infinite) {
    const int l = *a.l;
    if (l < 0) throw UsageError("-l must be nonnegative");
    r["parameters"]["l"] = l;
    const auto g = finzeta::gfun_finite(gamma, l);
    for (const auto& [mono, c] : g.terms()) {
      std::vector<int> exps;
      for (int i = 0; i < gamma.size(); ++i) exps.push_back(mono.exponent(i));
      r["results"].push_back({{"exponents", exps}, {"coeff", c}});
    }
    if (gamma.size() >= 2) add_check(r, "recurrence", finzeta::gfun_recurrence(gamma, l) == g);
    add_check(r, "gcd_reduction", finzeta::gfun_via_gcd(gamma, l) == g);
    if (gamma == finzeta::Signature::ones(gamma.size())) {
      const auto args = finzeta::staircase_monomials(gamma.size());
      finzeta::MultiQPoly sum(gamma.size());
      for (int j = 0; j <= l; ++j) sum += finzeta::complete_symmetric(j, args);
      add_check(r, "complete_symmetric_sum", sum == g);
      add_check(r, "q_binomial", g.specialize(std::vector<int>(gamma.size(), 1), l * gamma.size()) ==
                                     finzeta::qbinom(l + gamma.size(), gamma.size())
                                         .specialize(std::vector<int>{1}, l * gamma.size()));
    }
    return r;
  }
  r["parameters"]["infinite"] = true;
  r["parameters"]["trunc"] = a.trunc;
  const auto series = finzeta::gfun_infinite_series(gamma, a.trunc);
  for (int i = 0; i <= a.trunc; ++i) r["results"].push_back({{"degree", i}, {"coeff", series[i]}});
  if (auto cf = finzeta::detect_closed_form(gamma)) {
    add_check(r, "closed_form", finzeta::gfun_infinite_closed(*cf, a.trunc) == series);
  } else {
    r["notes"].push_back("no closed form implemented for this signature; series by enumeration only");
  }
  r["notes"].push_back("series in one variable: all q_j set to q");
  return r;
}

struct PowerfulArgs {
  int k = 2;
  int l = 1;
  std::uint64_t max = 1000;
  std::optional<std::uint64_t> canonical;
};

Json cmd_powerful(const PowerfulArgs& a) {
  Json r = new_report("powerful");
  const finzeta::StepPowerfulParams params{a.k, a.l};
  if (a.k < 1 || a.l < 1) throw UsageError("-k and -l must be positive");
  r["parameters"] = {{"k", a.k}, {"l", a.l}};
  if (a.canonical) {
    const std::uint64_t n = *a.canonical;
    r["parameters"]["canonical"] = n;
    if (n == 0 || !finzeta::is_step_powerful(n, params))
      throw UsageError(std::to_string(n) + " is not an l-step k-powerful number");
    const auto rep = finzeta::canonical_rep(n, params);
    r["results"].push_back({{"n", n},
                            {"a", rep.a},
                            {"m", rep.m},
                            {"m_decomposition", finzeta::powerful_decomposition(rep.m, a.k * a.l)}});
    r["notes"].push_back("n = a_1^k a_2^(2k) ... a_l^(lk) * m; m = b_1^K b_2^(K+1) ... b_K^(2K-1) with K = lk");
    return r;
  }
  if (a.max < 1) throw UsageError("--max must be positive");
  r["parameters"]["max"] = a.max;
  for (std::uint64_t n : finzeta::sieve_step_powerful(a.max, params)) r["results"].push_back({{"n", n}});
  return r;
}

Json cmd_unitarity(int kmax, int lmax) {
  Json r = new_report("unitarity");
  if (kmax < 1 || lmax < 1) throw UsageError("--kmax and --lmax must be positive");
  r["parameters"] = {{"kmax", kmax}, {"lmax", lmax}};
  std::vector<finzeta::UnitarityVerdict> verdicts(static_cast<std::size_t>(kmax) * lmax);
  finzeta::parallel_for(verdicts.size(), [&](std::size_t i) {
    verdicts[i] = finzeta::classify(static_cast<int>(i / lmax) + 1, static_cast<int>(i % lmax) + 1);
  });
  bool rule_holds = true;
  for (const auto& v : verdicts) {
    double max_residual = 0;
    for (const auto& root : v.roots) max_residual = std::max(max_residual, root.residual);
    r["results"].push_back({{"k", v.k},
                            {"l", v.l},
                            {"G", v.polynomial.to_string()},
                            {"unitary", v.unitary},
                            {"witness_modulus", v.witness ? Json(v.witness->modulus) : Json(nullptr)},
                            {"max_residual", max_residual},
                            {"conclusion", v.conclusion}});
    rule_holds = rule_holds && (v.unitary == (v.k <= 2));
  }
  add_check(r, "unitary_iff_k_le_2", rule_holds);
  r["notes"].push_back("unitary: every root of G_{k,l} within 1e-8 of the unit circle");
  return r;
}

struct AverageArgs {
  std::string kind = "g_m_inf";
  int m = 2;
  double sigma = 1;
  std::uint32_t max = 1000000;
};

Json cmd_average(const AverageArgs& a) {
  Json r = new_report("average");
  const auto kind = finzeta::parse_average_kind(a.kind);
  if (!kind) throw UsageError("unknown kind '" + a.kind + "' (g_m_inf, Z_at_sigma, Z_at_zero)");
  r["parameters"] = {{"kind", a.kind}, {"m", a.m}, {"max", a.max}};
  if (*kind == finzeta::AverageKind::kZetaAtSigma) r["parameters"]["sigma"] = a.sigma;
  const auto res = finzeta::average_experiment(*kind, a.m, a.sigma, a.max);
  for (const auto& pt : res.curve)
    r["results"].push_back({{"x", pt.x}, {"partial_sum", pt.partial_sum}, {"ratio", pt.ratio}});
  r["summary"] = {{"beta", res.beta},
                  {"alpha", res.alpha},
                  {"empirical_constant", res.empirical_constant},
                  {"predicted_constant", res.predicted_constant},
                  {"corrected_constant", res.corrected_constant},
                  {"relative_deviation", std::fabs(res.empirical_constant / res.corrected_constant - 1)}};
  if (!res.note.empty()) r["notes"].push_back(res.note);
  r["notes"].push_back("no convergence rate is known for these averages; compare the ratio curve, not one value");
  return r;
}

struct EisensteinArgs {
  int m = 1;
  std::string s = "4";
  int trunc = 20;
  bool verify = false;
};

Json cmd_eisenstein(const EisensteinArgs& a) {
  Json r = new_report("eisenstein");
  const auto s = parse_point(a.s);
  if (a.trunc < 1) throw UsageError("--trunc must be positive");
  r["parameters"] = {{"m", a.m}, {"s", to_json(s)}, {"trunc", a.trunc}};
  if (auto k = as_integer(s)) {
    const auto c = finzeta::eisenstein_coeffs_exact(a.m, *k, a.trunc);
    for (std::size_t n = 1; n <= c.size(); ++n) r["results"].push_back({{"n", n}, {"coeff", to_json(c[n - 1])}});
  } else {
    const auto e = finzeta::eisenstein_coeffs(a.m, s, a.trunc);
    for (std::size_t n = 1; n <= e.trunc(); ++n) r["results"].push_back({{"n", n}, {"coeff", to_json(e[n])}});
  }
  r["notes"].push_back("c_n = Z^m_n(1 - s)");
  if (a.verify) {
    const auto chk = finzeta::eisen1_check(s, a.trunc);
    add_check(r, "divisor_sum_identity", chk.ok,
              {{"exact", chk.exact}, {"max_rel_error", chk.max_rel_error}, {"first_failure", chk.first_failure}});
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finzeta: multiple finite Riemann zeta functions and related identities"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table";
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--timing", timing, "Include wall time in the report");

  EvalArgs eval;
  auto* c_eval = app.add_subcommand("eval", "Evaluate Z^m_N(s)");
  c_eval->add_option("-N", eval.n, "Modulus N")->required()->check(CLI::PositiveNumber);
  c_eval->add_option("-m", eval.m, "Chain length m")->check(CLI::PositiveNumber);
  c_eval->add_option("-s", eval.s, "Point s, e.g. 2, -1, 0.5+2i")->required()->allow_extra_args(false);
  c_eval->add_option("--mode", eval.mode)->check(CLI::IsMember({"brute", "euler", "both"}));
  c_eval->add_flag("--exact", eval.exact, "Exact rational value (integer s)");

  std::uint64_t zeros_n = 1;
  int zeros_m = 1;
  double zeros_height = 30;
  auto* c_zeros = app.add_subcommand("zeros", "List candidate zeros on the imaginary axis");
  c_zeros->add_option("-N", zeros_n)->required()->check(CLI::PositiveNumber);
  c_zeros->add_option("-m", zeros_m)->check(CLI::PositiveNumber);
  c_zeros->add_option("--height", zeros_height)->check(CLI::NonNegativeNumber);

  GfunArgs gfun;
  int gfun_l = -1;
  auto* c_gfun = app.add_subcommand("gfun", "Partition generating function G^gamma_l");
  c_gfun->add_option("--gamma", gfun.gamma, "Signature, comma separated")->required()->delimiter(',');
  auto* opt_l = c_gfun->add_option("-l", gfun_l, "Bound on the largest part");
  c_gfun->add_flag("--infinite", gfun.infinite, "Univariate series of G^gamma_inf");
  c_gfun->add_option("--trunc", gfun.trunc, "Series order for --infinite");

  PowerfulArgs powerful;
  std::uint64_t canonical = 0;
  auto* c_powerful = app.add_subcommand("powerful", "l-step k-powerful numbers");
  c_powerful->add_option("-k", powerful.k)->required();
  c_powerful->add_option("-l", powerful.l)->required();
  c_powerful->add_option("--max", powerful.max);
  auto* opt_canonical = c_powerful->add_option("--canonical", canonical, "Canonical representation of n");

  int kmax = 8, lmax = 5;
  auto* c_unit = app.add_subcommand("unitarity", "Unitarity of G_{k,l} over a (k, l) grid");
  c_unit->add_option("--kmax", kmax);
  c_unit->add_option("--lmax", lmax);

  AverageArgs average;
  auto* c_avg = app.add_subcommand("average", "Empirical averages of coefficient sums");
  c_avg->add_option("kind", average.kind, "g_m_inf | Z_at_sigma | Z_at_zero")->required();
  c_avg->add_option("-m", average.m)->check(CLI::PositiveNumber);
  c_avg->add_option("--sigma", average.sigma);
  c_avg->add_option("--max", average.max);

  EisensteinArgs eis;
  auto* c_eis = app.add_subcommand("eisenstein", "Multiple Eisenstein series coefficients");
  c_eis->add_option("-m", eis.m)->check(CLI::PositiveNumber);
  c_eis->add_option("-s", eis.s)->required();
  c_eis->add_option("--trunc", eis.trunc);
  c_eis->add_flag("--verify", eis.verify, "Check the divisor-sum identity for Z^2_n(-s)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Json report;
  try {
    if (*c_eval) {
      report = cmd_eval(eval);
    } else if (*c_zeros) {
      report = cmd_zeros(zeros_n, zeros_m, zeros_height);
    } else if (*c_gfun) {
      if (*opt_l) gfun.l = gfun_l;
      report = cmd_gfun(gfun);
    } else if (*c_powerful) {
      if (*opt_canonical) powerful.canonical = canonical;
      report = cmd_powerful(powerful);
    } else if (*c_unit) {
      report = cmd_unitarity(kmax, lmax);
    } else if (*c_avg) {
      report = cmd_average(average);
    } else if (*c_eis) {
      report = cmd_eisenstein(eis);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  bool all_pass = true;
  for (const auto& c : report["checks"]) all_pass = all_pass && c["pass"].get<bool>();
  report["status"] = all_pass ? "ok" : "check_failed";
  if (timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    report["wall_time_s"] = dt.count();
  }

  if (format == "json")
    std::cout << report.dump(2) << '\n';
  else if (format == "csv")
    finzeta::cli::render_csv(std::cout, report);
  else
    finzeta::cli::render_table(std::cout, report);
  return all_pass ? kExitOk : kExitCheckFailed;
}
