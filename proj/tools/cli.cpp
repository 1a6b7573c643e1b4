// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "qpm/corpus.hpp"
#include "qpm/io.hpp"
#include "qpm/solver.hpp"

namespace qpm::cli {

namespace {

struct Options {
  bool use_float = false;
  std::string path;
  std::string verify_mode = "forward";
  std::string solve_mode = "startpoint";
  std::string from;
  std::optional<std::string> tol;
  std::size_t max_iter = 10'000;
  std::string select = "greedy";
  std::string trace_out;
  std::uint64_t seed = 0;
  std::size_t size = 6;
  std::string out_path;
  std::string what = "startpoints";
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

NumericPolicy numeric_policy(const Options& opt) {
  if (!opt.use_float) return NumericPolicy::exact();
  NumericPolicy policy = NumericPolicy::floating();
  if (const char* env = std::getenv("QPM_TOLERANCE"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      policy.tolerance = std::stod(env, &used);
      if (used != std::string(env).size() || policy.tolerance < 0) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw InputError(std::string("QPM_TOLERANCE: not a nonnegative number: '") + env + "'");
    }
  }
  return policy;
}

io::SystemDocument load(const Options& opt) {
  const auto numeric = numeric_policy(opt);
  return io::load_system(opt.path, opt.use_float ? std::optional(numeric) : std::nullopt);
}

const SetValuedMap& require_map(const io::SystemDocument& doc) {
  if (!doc.map) throw io::DocumentError("/F", "missing field");
  return *doc.map;
}

const ComparisonFunction& require_gamma(const io::SystemDocument& doc) {
  if (!doc.gamma) throw io::DocumentError("/gamma", "missing field");
  return *doc.gamma;
}

void warn_if_sampled(const ComparisonFunction& gamma, std::ostream& err) {
  if (gamma.certification() == Certification::Sampled) {
    err << "warning: comparison function '" << gamma.label()
        << "' is SAMPLED; the summability condition is not certified\n";
  }
}

std::string join(const std::vector<Point>& pts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += sep;
    s += pts[i];
  }
  return s;
}

void print_axiom(std::ostream& out, const char* name, const AxiomResult& r) {
  out << name << ": " << to_string(r.status);
  if (!r.witness.empty()) out << " witness=(" << join(r.witness, ",") << ")";
  out << '\n';
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream&) {
  const auto doc = load(opt);
  const auto report = check_axioms(doc.space, doc.space.t0());
  print_axiom(out, "axiom (i) identity", report.identity);
  print_axiom(out, "axiom (ii) triangle", report.triangle);
  print_axiom(out, "axiom (iii) T0", report.t0);
  bool ok = report.ok();
  if (doc.gamma) {
    const auto g = verify_gamma1(*doc.gamma, default_gamma_grid());
    out << "gamma1: " << (g.ok() ? "PASS" : "FAIL");
    if (!g.ok()) {
      out << " " << to_string(g.failure) << " witness=(";
      for (std::size_t i = 0; i < g.witness.size(); ++i) out << (i ? "," : "") << g.witness[i].str();
      out << ")";
    }
    out << (g.certification == Certification::Certified ? " [certified]" : " [sampled]") << '\n';
    ok = ok && g.ok();
  }
  return ok ? kOk : kFail;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, ContractionMode> modes = {
      {"forward", ContractionMode::Forward}, {"dual", ContractionMode::Dual}, {"symmetric", ContractionMode::Symmetric}};
  const auto doc = load(opt);
  const auto& f = require_map(doc);
  const auto& gamma = require_gamma(doc);
  warn_if_sampled(gamma, err);
  const auto result = verify_weak_contraction(doc.space, f, gamma, modes.at(opt.verify_mode));
  if (const auto* v = std::get_if<Violation>(&result)) {
    out << "VIOLATION mode=" << to_string(v->mode) << " x=" << v->x << '\n';
    return kFail;
  }
  const auto& cert = std::get<ContractionCertificate>(result);
  out << "CERTIFICATE mode=" << to_string(cert.mode) << " points=" << cert.checked_points.size() << '\n';
  for (const auto& [x, y] : cert.witnesses) out << "  " << x << " -> " << y << '\n';
  return kOk;
}

int cmd_solve(const Options& opt, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, SolveMode> modes = {
      {"startpoint", SolveMode::Startpoint}, {"endpoint", SolveMode::Endpoint}, {"fixedpoint", SolveMode::FixedPoint}};
  const auto doc = load(opt);
  const auto& f = require_map(doc);
  const auto& gamma = require_gamma(doc);
  if (!doc.space.contains(opt.from)) throw InputError("--from: unknown point '" + opt.from + "'");
  warn_if_sampled(gamma, err);

  SolverConfig config;
  config.mode = modes.at(opt.solve_mode);
  config.max_iterations = opt.max_iter;
  config.selection = opt.select == "first" ? Selection::FirstAdmissible : Selection::GreedyMinDefect;
  const auto arith = doc.space.numeric().mode;
  if (opt.tol) {
    try {
      config.tolerance = Real::parse(*opt.tol, arith);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--tol: ") + e.what());
    }
  } else {
    config.tolerance = arith == Arithmetic::Exact ? Real(0) : Real(doc.space.numeric().tolerance);
  }

  IterationTrace trace;
  try {
    trace = solve(doc.space, f, gamma, opt.from, config);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (!opt.trace_out.empty()) {
    std::ofstream file(opt.trace_out);
    if (!file) throw InputError("--trace: cannot write '" + opt.trace_out + "'");
    file << io::trace_to_json(trace).dump(2) << '\n';
  }
  out << to_string(trace.outcome.kind) << ' ' << trace.outcome.point << " defect=" << trace.outcome.defect.str()
      << " steps=" << trace.steps.size();
  if (!trace.outcome.note.empty()) out << " note=" << trace.outcome.note;
  out << '\n';
  return trace.converged() ? kOk : kFail;
}

int cmd_gen(const Options& opt, std::ostream& out, std::ostream& err) {
  GeneratorSeed g;
  g.seed = opt.seed;
  g.size = opt.size;
  const auto gamma = ComparisonFunction::linear(Rational(1, 2));
  GeneratedSystem system = [&] {
    try {
      return random_weakly_contractive_system(g, gamma);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  io::SystemDocument doc{system.space, system.map, gamma,
                         {{"seed", g.seed},
                          {"size", g.size},
                          {"sink", system.sink},
                          {"weight_range", {g.weight_lo.str(), g.weight_hi.str()}}}};
  if (opt.out_path.empty()) {
    out << io::system_to_json(doc).dump(2) << '\n';
  } else {
    io::save_system(doc, opt.out_path);
    err << "wrote " << opt.out_path << " (" << g.size << " points, sink " << system.sink << ")\n";
  }
  return kOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out, std::ostream&) {
  const auto doc = load(opt);
  const auto& f = require_map(doc);
  std::vector<Point> found;
  if (opt.what == "startpoints") {
    found = enumerate_startpoints(doc.space, f);
  } else if (opt.what == "endpoints") {
    found = enumerate_endpoints(doc.space, f);
  } else {
    found = enumerate_fixed_points(doc.space, f);
  }
  for (const auto& p : found) out << p << '\n';
  return found.empty() ? kFail : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Quasi-pseudometric spaces: axioms, weak contractions, startpoints.", "qpm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--float", opt.use_float, "Use floating-point arithmetic with tolerance (QPM_TOLERANCE)");

  auto* check = app.add_subcommand("check", "Check the quasi-pseudometric axioms (and gamma, if present)");
  check->add_option("path", opt.path, "System document")->required();

  auto* verify = app.add_subcommand("verify", "Verify the weak-contraction condition");
  verify->add_option("path", opt.path, "System document")->required();
  verify->add_option("--mode", opt.verify_mode)->check(CLI::IsMember({"forward", "dual", "symmetric"}));

  auto* solve_cmd = app.add_subcommand("solve", "Run the contraction iteration");
  solve_cmd->add_option("path", opt.path, "System document")->required();
  solve_cmd->add_option("--mode", opt.solve_mode)->check(CLI::IsMember({"startpoint", "endpoint", "fixedpoint"}));
  solve_cmd->add_option("--from", opt.from, "Start point")->required();
  solve_cmd->add_option("--tol", opt.tol, "Defect tolerance, e.g. 0 or 1/1000");
  solve_cmd->add_option("--max-iter", opt.max_iter)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--select", opt.select)->check(CLI::IsMember({"greedy", "first"}));
  solve_cmd->add_option("--trace", opt.trace_out, "Write the JSON trace here");

  auto* gen = app.add_subcommand("gen", "Generate a weakly contractive system");
  gen->add_option("--seed", opt.seed)->required();
  gen->add_option("--size", opt.size)->check(CLI::Range(2, 4096));
  gen->add_option("--out", opt.out_path, "Output path (stdout if omitted)");

  auto* enumerate = app.add_subcommand("enumerate", "Brute-force startpoints, endpoints or fixed points");
  enumerate->add_option("path", opt.path, "System document")->required();
  enumerate->add_option("--what", opt.what)->check(CLI::IsMember({"startpoints", "endpoints", "fixedpoints"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out, err);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    if (solve_cmd->parsed()) return cmd_solve(opt, out, err);
    if (gen->parsed()) return cmd_gen(opt, out, err);
    if (enumerate->parsed()) return cmd_enumerate(opt, out, err);
  } catch (const io::DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace qpm::cli
