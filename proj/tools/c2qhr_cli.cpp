// Command-line front end: weight enumeration, character evaluation, identity suites and matrices.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "c2qhr/suites.hpp"

using namespace c2qhr;

namespace {

cplx parse_complex(const std::string& text) {
  std::stringstream ss(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  ss >> re;
  if (!ss) throw Error(ErrorKind::BadArgument, "expected RE,IM but got '" + text + "'");
  if (ss >> comma) {
    if (comma != ',' || !(ss >> im)) throw Error(ErrorKind::BadArgument, "expected RE,IM but got '" + text + "'");
  }
  std::string rest;
  if (ss >> rest) throw Error(ErrorKind::BadArgument, "trailing input in '" + text + "'");
  return {re, im};
}

std::string format_complex(cplx v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", v.real(), v.imag());
  return buf;
}

int cmd_weights(long K) {
  const auto ws = enumerate_admissible(K);
  if (ws.empty()) throw Error(ErrorKind::BadArgument, "level K must be at least -1");
  std::cout << "# K=" << K << ", " << ws.size() << " weights (n1,n2)\n";
  for (const auto& w : ws) std::cout << w.n1() << "," << w.n2() << "\n";
  return 0;
}

int cmd_eval_char(long K, long n1, long n2, const std::string& tau, const std::string& z1, const std::string& z2,
                  const std::string& t) {
  const AdmissibleWeight w(K, n1, n2);
  const EvalPoint p(parse_complex(tau), {parse_complex(z1), parse_complex(z2)}, parse_complex(t));
  const cplx num = numerator_theta(w, p);
  const cplx den = denominator_R(p);
  const cplx ch = character(w, p);
  std::cout << "ch = " << format_complex(ch) << "\n";
  std::cout << "numerator = " << format_complex(num) << "\n";
  std::cout << "denominator = " << format_complex(den) << "\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& suites, std::uint64_t seed, long long samples, double tol,
               const std::string& json_path) {
  std::vector<std::string> names = suites;
  if (names.size() == 1 && names[0] == "all") names = suite_names();
  bool all_pass = true;
  std::vector<std::string> reports;
  for (const auto& name : names) {
    const std::size_t n = samples > 0 ? static_cast<std::size_t>(samples) : default_samples(name);
    const double tolerance = tol > 0 ? tol : default_tolerance(name);
    const SuiteReport r = run_suite(name, seed, n, tolerance);
    all_pass = all_pass && r.pass;
    std::printf("%s %s max_abs_residual=%.3e tolerance=%.1e identities=%zu\n", r.pass ? "PASS" : "FAIL",
                r.suite_name.c_str(), r.max_abs_residual, r.tolerance, r.identities.size());
    for (const auto& id : r.identities)
      if (!(id.residual < r.tolerance))
        std::printf("  failed: %s residual=%.3e%s%s\n", id.label.c_str(), id.residual, id.error.empty() ? "" : " error=",
                    id.error.c_str());
    reports.push_back(to_json(r));
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::BadArgument, "cannot write " + json_path);
    // One suite writes its report object; several write an array of reports.
    if (reports.size() == 1) {
      out << reports.front();
    } else {
      out << "[\n";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        std::string body = reports[i];
        while (!body.empty() && body.back() == '\n') body.pop_back();
        out << body << (i + 1 < reports.size() ? ",\n" : "\n");
      }
      out << "]\n";
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta functions, C2 admissible characters and their modular transformations"};
  app.require_subcommand(1);

  long level = 0;
  auto* weights = app.add_subcommand("weights", "List admissible weights (n1, n2) at level K");
  weights->add_option("--level", level, "Level K >= -1")->required();

  long n1 = 0, n2 = 0;
  std::string tau, z1, z2, t = "0,0";
  auto* eval = app.add_subcommand("eval-char", "Evaluate a normalized character A'/R");
  eval->add_option("--level", level, "Level K")->required();
  eval->add_option("--n1", n1)->required();
  eval->add_option("--n2", n2)->required();
  eval->add_option("--tau", tau, "RE,IM")->required();
  eval->add_option("--z1", z1, "RE,IM")->required();
  eval->add_option("--z2", z2, "RE,IM")->required();
  eval->add_option("--t", t, "RE,IM");

  std::vector<std::string> suites;
  std::uint64_t seed = 42;
  long long samples = 0;
  double tol = 0.0;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "Run identity suites; exit code 0 iff all pass");
  verify->add_option("--suite", suites, "Suite name (repeatable) or 'all'")->required();
  verify->add_option("--seed", seed, "LCG seed");
  verify->add_option("--samples", samples, "Sample count (default per suite)");
  verify->add_option("--tol", tol, "Tolerance (default per suite)");
  verify->add_option("--json", json_path, "Write the JSON report here");

  std::string which, format = "json";
  long m = 0;
  auto* matrix = app.add_subcommand("matrix", "Emit a transformation matrix");
  matrix->add_option("--which", which, "theta_S | theta_ST2S | ch_ST2S | qhr_ST2S")->required();
  auto* level_opt = matrix->add_option("--level", level, "Level K (ch_ST2S, qhr_ST2S)");
  auto* m_opt = matrix->add_option("--m", m, "Theta level m (theta_S, theta_ST2S)");
  level_opt->excludes(m_opt);
  matrix->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (weights->parsed()) return cmd_weights(level);
    if (eval->parsed()) return cmd_eval_char(level, n1, n2, tau, z1, z2, t);
    if (verify->parsed()) return cmd_verify(suites, seed, samples, tol, json_path);
    if (matrix->parsed()) {
      const bool theta = which.rfind("theta_", 0) == 0;
      if (theta ? !*m_opt : !*level_opt)
        throw Error(ErrorKind::BadArgument, which + (theta ? " needs --m" : " needs --level"));
      std::cout << emit_matrix(which, theta ? m : level, format == "csv" ? MatrixFormat::Csv : MatrixFormat::Json);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
