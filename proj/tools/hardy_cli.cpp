#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hardy/factorization.hpp"
#include "hardy/io.hpp"
#include "hardy/parallel.hpp"
#include "hardy/spectral.hpp"
#include "hardy/subspace.hpp"

// Exit codes are a public contract:
//   0 success (and classify: simply invariant)       10 classify: doubly invariant
//   2 parse failure          3 axiom-validation failure    4 vanishing modulus
//   5 inverse unbounded      6 degenerate generator        7 io failure
//  11 inconsistent cross-check                              1 anything else
namespace {

using namespace hardy;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return 2;
    case ErrorCode::AxiomValidation: return 3;
    case ErrorCode::VanishingModulus: return 4;
    case ErrorCode::InverseUnbounded: return 5;
    case ErrorCode::DegenerateGenerator: return 6;
    case ErrorCode::IoError: return 7;
    case ErrorCode::InconsistentCrossCheck: return 11;
    default: return 1;
  }
}

GaugeNormSpec spec_from(const std::string& norm_path) {
  if (norm_path.empty()) return GaugeNormSpec::lp(2.0);
  return load_norm_config(norm_path);
}

void echo_common(ReportBuilder& rep, const std::string& file,
                 const std::string& norm_path, const GaugeNormSpec& spec) {
  rep.add("inputs", "function_file", file);
  rep.add("inputs", "norm_config", norm_path.empty() ? "(default)" : norm_path);
  rep.add("inputs", "norm", spec.describe());
  rep.add("inputs", "exec", execution() == Exec::Serial ? "serial" : "parallel");
}

void finish(ReportBuilder& rep, const std::string& report_path) {
  rep.add_runtime_counters();
  if (!report_path.empty()) rep.write(report_path);
}

struct NormArgs {
  std::string file, norm, report, method = "ascent";
  bool dual = false;
};

int run_norm(const NormArgs& a) {
  const GaugeNormSpec spec = spec_from(a.norm);
  const CircleFunction f = read_function_file(a.file);
  ReportBuilder rep("norm");
  echo_common(rep, a.file, a.norm, spec);
  rep.add("inputs", "dual", a.dual ? "true" : "false");
  rep.add("inputs", "method", a.method);
  if (a.dual) {
    DualMethod method = DualMethod::Ascent;
    if (a.method == "closed-form") method = DualMethod::ClosedForm;
    if (a.method == "brute-small") method = DualMethod::BruteSmall;
    const DualResult r = dual_norm(spec, f, method);
    std::printf("alpha_dual %s\n", format_sci(r.value).c_str());
    rep.add("verdict", "alpha_dual", r.value);
    rep.add("verdict", "iterations", r.iterations);
    rep.add("tolerances", "ascent_cap", std::uint64_t{tol::kAscentCap});
    rep.add("tolerances", "ascent_tol", tol::kAscentTol);
    rep.add("tolerances", "stall_window", std::uint64_t{tol::kAscentStallWindow});
  } else {
    const double v = evaluate(spec, f);
    std::printf("alpha %s\n", format_sci(v).c_str());
    rep.add("verdict", "alpha", v);
  }
  finish(rep, a.report);
  return 0;
}

struct OuterArgs {
  std::string file, norm, out = "outer.fn", report;
};

int run_outer(const OuterArgs& a) {
  const GaugeNormSpec spec = spec_from(a.norm);
  const CircleFunction phi = modulus_of(read_function_file(a.file));
  ReportBuilder rep("outer");
  echo_common(rep, a.file, a.norm, spec);
  rep.add("inputs", "output_file", a.out);
  const CircleFunction g = outer_from_modulus(phi);
  write_function_file(a.out, g);
  const CircleFunction dev = modulus_of(g) - phi;
  const double mod_dev = sup_norm(dev);
  std::printf("max_modulus_deviation %s\n", format_sci(mod_dev).c_str());
  std::printf("written %s\n", a.out.c_str());
  rep.add("residuals", "max_modulus_deviation", mod_dev);
  rep.add("residuals", "negative_energy", negative_energy(g));
  rep.add("certificate", "center_value_re", g.coefficient(0).real());
  rep.add("certificate", "center_value_im", g.coefficient(0).imag());
  rep.add("tolerances", "log_floor", tol::kLogFloor);
  rep.add("tolerances", "zero_threshold", tol::kZeroThreshold);
  rep.add("tolerances", "gate_fraction", tol::kGateFraction);
  finish(rep, a.report);
  return 0;
}

struct FactorizeArgs {
  std::string file, norm, report, mode = "inner-outer";
  std::string unimodular_out = "unimodular.fn", outer_out = "outer.fn";
};

int run_factorize(const FactorizeArgs& a) {
  const GaugeNormSpec spec = spec_from(a.norm);
  const CircleFunction f = read_function_file(a.file);
  ReportBuilder rep("factorize");
  echo_common(rep, a.file, a.norm, spec);
  rep.add("inputs", "mode", a.mode);
  rep.add("inputs", "unimodular_out", a.unimodular_out);
  rep.add("inputs", "outer_out", a.outer_out);
  const FactorizationResult r = a.mode == "inverse-bounded"
                                    ? factorize_inverse_bounded(f, spec)
                                    : inner_outer_factorize(f);
  write_function_file(a.unimodular_out, r.unimodular);
  write_function_file(a.outer_out, r.outer);
  std::printf("residual_reconstruction %s\n",
              format_sci(r.residual_reconstruction).c_str());
  std::printf("residual_unimodularity %s\n",
              format_sci(r.residual_unimodularity).c_str());
  std::printf("written %s %s\n", a.unimodular_out.c_str(), a.outer_out.c_str());
  rep.add("residuals", "reconstruction", r.residual_reconstruction);
  rep.add("residuals", "unimodularity", r.residual_unimodularity);
  rep.add("residuals", "outer_negative_energy", r.outer_negative_energy);
  rep.add("residuals", "guarded_nodes", std::uint64_t{r.guarded_nodes});
  if (a.mode == "inverse-bounded") {
    rep.add("cross-check", "inverse_in_class", r.inverse_in_class ? "true" : "false");
  } else {
    const MembershipReport m = is_in_Halpha(f, spec);
    rep.add("cross-check", "input_member", m.member ? "true" : "false");
    rep.add("cross-check", "input_negative_fraction", m.negative_fraction);
  }
  rep.add("tolerances", "analytic_tol", tol::kAnalyticTol);
  rep.add("tolerances", "division_guard", tol::kDivisionGuard);
  rep.add("tolerances", "log_floor", tol::kLogFloor);
  finish(rep, a.report);
  return 0;
}

struct ClassifyArgs {
  std::string file, norm, report, phi_out = "phi.fn";
  std::size_t n_basis = 64, m_trunc = 1024;
  double tau = tol::kTauDoubly;
};

int run_classify(const ClassifyArgs& a) {
  const GaugeNormSpec spec = spec_from(a.norm);
  const CircleFunction f = read_function_file(a.file);
  ReportBuilder rep("classify");
  echo_common(rep, a.file, a.norm, spec);
  rep.add("inputs", "n_basis", std::uint64_t{a.n_basis});
  rep.add("inputs", "m_trunc", std::uint64_t{a.m_trunc});
  rep.add("inputs", "tau", a.tau);
  rep.add("inputs", "phi_out", a.phi_out);
  ClassifyParams params;
  params.n_basis = a.n_basis;
  params.m_trunc = a.m_trunc;
  params.tau_doubly = a.tau;
  const Classification c = classify(f, spec, params);
  const bool simply = c.verdict == Verdict::SimplyInvariant;
  std::printf("verdict %s\n", simply ? "simply" : "doubly");
  rep.add("verdict", "verdict", simply ? "simply" : "doubly");
  rep.add("certificate", "dist_backward", c.certificate.dist_backward);
  rep.add("certificate", "dist_forward", c.certificate.dist_forward);
  rep.add("certificate", "margin", c.certificate.margin);
  rep.add("certificate", "log_integral", c.certificate.log_report.integral);
  rep.add("certificate", "log_gate_pass",
          c.certificate.log_report.pass ? "true" : "false");
  rep.add("certificate", "vanishing_nodes",
          std::uint64_t{c.certificate.log_report.vanishing_nodes});
  if (simply) {
    write_function_file(a.phi_out, c.phi);
    std::printf("phi_written %s\n", a.phi_out.c_str());
    rep.add("certificate", "phi_unimodularity", c.certificate.phi_unimodularity);
    rep.add("residuals", "regeneration", c.certificate.regeneration_residual);
  } else {
    std::size_t support = 0;
    for (bool b : c.e_mask) support += b ? 1 : 0;
    rep.add("certificate", "support_nodes", std::uint64_t{support});
    rep.add("certificate", "support_measure",
            static_cast<double>(support) / static_cast<double>(f.size()));
    rep.add("residuals", "mask_identity", c.certificate.regeneration_residual);
  }
  rep.add("cross-check", "log_gate_agrees", "true");  // classify throws otherwise
  rep.add("tolerances", "tau_doubly", a.tau);
  rep.add("tolerances", "drop_tol", tol::kDropTol);
  rep.add("tolerances", "mask_rel", tol::kMaskRel);
  rep.add("tolerances", "generator_floor", tol::kGeneratorFloor);
  rep.add("tolerances", "division_guard", tol::kDivisionGuard);
  finish(rep, a.report);
  return simply ? 0 : 10;
}

struct ApproxArgs {
  std::string file, norm, report, out_prefix;
  std::size_t stages = 5;
};

int run_approx(const ApproxArgs& a) {
  const GaugeNormSpec spec = spec_from(a.norm);
  const CircleFunction f = read_function_file(a.file);
  ReportBuilder rep("approx");
  echo_common(rep, a.file, a.norm, spec);
  rep.add("inputs", "stages", std::uint64_t{a.stages});
  rep.add("inputs", "out_prefix", a.out_prefix.empty() ? "(none)" : a.out_prefix);
  const std::vector<ApproximationStage> seq =
      bounded_approximation(f, spec, a.stages);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    std::printf("stage %zu degree %zu alpha_error %s\n", j, seq[j].degree,
                format_sci(seq[j].alpha_error).c_str());
    rep.add("residuals", "stage_" + std::to_string(j) + "_degree",
            std::uint64_t{seq[j].degree});
    rep.add("residuals", "stage_" + std::to_string(j) + "_alpha_error",
            seq[j].alpha_error);
    if (!a.out_prefix.empty()) {
      write_function_file(a.out_prefix + std::to_string(j) + ".fn", seq[j].bounded);
    }
  }
  rep.add("verdict", "final_over_initial",
          seq.front().alpha_error > 0.0
              ? seq.back().alpha_error / seq.front().alpha_error
              : 0.0);
  finish(rep, a.report);
  return 0;
}

struct CorpusArgs {
  std::string dir;
  std::uint64_t seed = 42;
};

int run_corpus(const CorpusArgs& a) {
  const std::vector<CorpusItem> items = generate_corpus(a.dir, a.seed);
  std::printf("corpus_items %zu\n", items.size());
  std::printf("written %s\n", a.dir.c_str());
  return 0;
}

struct ValidateArgs {
  std::string norm, report;
  int trials = 500;
  std::uint64_t seed = 0x0125CE;
  std::size_t grid = tol::kDefaultGridSize;
};

int run_validate(const ValidateArgs& a) {
  ReportBuilder rep("validate");
  rep.add("inputs", "norm_config", a.norm.empty() ? "(shipped suite)" : a.norm);
  rep.add("inputs", "trials", std::uint64_t(a.trials));
  rep.add("inputs", "seed", std::uint64_t{a.seed});
  rep.add("inputs", "grid", std::uint64_t{a.grid});
  std::vector<std::pair<std::string, GaugeNormSpec>> specs;
  if (a.norm.empty()) {
    specs = shipped_continuous_specs();
  } else {
    try {
      specs.emplace_back("config", load_norm_config(a.norm));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::AxiomValidation) {
        // Constructor-level rejection (orlicz gate): record the witness.
        rep.add("verdict", "axioms", "fail");
        rep.add("cross-check", "witness", e.what());
        finish(rep, a.report);
      }
      throw;
    }
  }
  bool all_pass = true;
  std::string witness;
  for (const auto& [name, spec] : specs) {
    const ValidationReport vr = validate_axioms(spec, a.trials, a.seed, a.grid);
    std::printf("%s %s\n", name.c_str(), vr.passed ? "pass" : "fail");
    rep.add("verdict", name, vr.passed ? "pass" : "fail");
    for (const AxiomCheck& check : vr.checks) {
      rep.add("cross-check", name + "." + check.name,
              check.passed ? "pass" : ("fail: " + check.witness));
      if (!check.passed && witness.empty()) witness = name + "." + check.name;
    }
    all_pass = all_pass && vr.passed;
  }
  finish(rep, a.report);
  if (!all_pass) {
    fail(ErrorCode::AxiomValidation, "axiom suite failed at " + witness);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hardy-space gauge-norm toolkit"};
  app.require_subcommand(1);
  std::string exec = "parallel";
  app.add_option("--exec", exec, "execution mode")
      ->check(CLI::IsMember({"serial", "parallel"}));

  NormArgs na;
  CLI::App* norm = app.add_subcommand("norm", "evaluate a gauge norm (or its dual)");
  norm->add_option("file", na.file, "function file")->required();
  norm->add_option("--norm", na.norm, "norm config (JSON); default Lp(2)");
  norm->add_flag("--dual", na.dual, "evaluate the dual norm");
  norm->add_option("--method", na.method, "dual method")
      ->check(CLI::IsMember({"closed-form", "ascent", "brute-small"}));
  norm->add_option("--report", na.report, "report output path");

  OuterArgs oa;
  CLI::App* outer = app.add_subcommand("outer", "outer function from a modulus file");
  outer->add_option("file", oa.file, "modulus file")->required();
  outer->add_option("--norm", oa.norm, "norm config (JSON)");
  outer->add_option("--out", oa.out, "output function file");
  outer->add_option("--report", oa.report, "report output path");

  FactorizeArgs fa;
  CLI::App* fact = app.add_subcommand("factorize", "unimodular x outer factorization");
  fact->add_option("file", fa.file, "function file")->required();
  fact->add_option("--norm", fa.norm, "norm config (JSON)");
  fact->add_option("--mode", fa.mode, "inner-outer | inverse-bounded")
      ->check(CLI::IsMember({"inner-outer", "inverse-bounded"}));
  fact->add_option("--unimodular-out", fa.unimodular_out, "unimodular factor path");
  fact->add_option("--outer-out", fa.outer_out, "outer factor path");
  fact->add_option("--report", fa.report, "report output path");

  ClassifyArgs ca;
  CLI::App* cls = app.add_subcommand("classify", "simply/doubly invariance verdict");
  cls->add_option("file", ca.file, "generator function file")->required();
  cls->add_option("--norm", ca.norm, "norm config (JSON)");
  cls->add_option("--n-basis", ca.n_basis, "shift powers in the truncated model");
  cls->add_option("--m-trunc", ca.m_trunc, "Fourier window half-width");
  cls->add_option("--tau", ca.tau, "doubly-invariance distance threshold");
  cls->add_option("--phi-out", ca.phi_out, "unimodular factor output (simply)");
  cls->add_option("--report", ca.report, "report output path");

  ApproxArgs aa;
  CLI::App* approx = app.add_subcommand("approx", "bounded approximation stages");
  approx->add_option("file", aa.file, "function file")->required();
  approx->add_option("--norm", aa.norm, "norm config (JSON)");
  approx->add_option("--stages", aa.stages, "number of stages");
  approx->add_option("--out-prefix", aa.out_prefix, "write stage files with prefix");
  approx->add_option("--report", aa.report, "report output path");

  CorpusArgs cpa;
  CLI::App* corpus = app.add_subcommand("corpus", "generate the canonical corpus");
  corpus->add_option("dir", cpa.dir, "output directory")->required();
  corpus->add_option("--seed", cpa.seed, "placement seed");

  ValidateArgs va;
  CLI::App* validate = app.add_subcommand("validate", "randomized norm-axiom suite");
  validate->add_option("--norm", va.norm, "norm config (JSON); default: shipped suite");
  validate->add_option("--trials", va.trials, "randomized trials per check");
  validate->add_option("--seed", va.seed, "trial seed");
  validate->add_option("--grid", va.grid, "validation grid size");
  validate->add_option("--report", va.report, "report output path");

  CLI11_PARSE(app, argc, argv);
  set_execution(exec == "serial" ? Exec::Serial : Exec::Parallel);
  counters_reset();

  try {
    if (app.got_subcommand(norm)) return run_norm(na);
    if (app.got_subcommand(outer)) return run_outer(oa);
    if (app.got_subcommand(fact)) return run_factorize(fa);
    if (app.got_subcommand(cls)) return run_classify(ca);
    if (app.got_subcommand(approx)) return run_approx(aa);
    if (app.got_subcommand(corpus)) return run_corpus(cpa);
    if (app.got_subcommand(validate)) return run_validate(va);
  } catch (const OptimizationError& e) {
    std::fprintf(stderr, "error: %s (best lower bound %s)\n", e.what(),
                 format_sci(e.best_lower_bound()).c_str());
    return exit_code_for(e.code());
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
