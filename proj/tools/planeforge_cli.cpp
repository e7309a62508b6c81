#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "planeforge/complex.hpp"
#include "planeforge/geometry.hpp"
#include "planeforge/nerve.hpp"
#include "planeforge/plane.hpp"
#include "planeforge/spectra.hpp"

namespace pf = planeforge;

namespace {

// Exit code contract: 0 all checks pass, 2 verified violation/witness,
// 1 usage or infeasibility error.
constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kWitness = 2;

int thread_cap() {
  // Module internals are sequential today; the cap is recorded for
  // reproducibility of reports.
  if (const char* env = std::getenv("PLANEFORGE_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int run_plane(int q, const std::string& out_path) {
  const auto pl = pf::plane::build_plane(q);
  const auto rep = pf::plane::verify_axioms(pl);
  std::cout << "plane q=" << q << " n=" << pl.n
            << " axiom(i)=" << (rep.two_points_unique_line ? "pass" : "FAIL")
            << " axiom(ii)=" << (rep.two_lines_unique_point ? "pass" : "FAIL")
            << " axiom(iii)=" << (rep.line_sizes_ok ? "pass" : "FAIL")
            << " degrees=" << (rep.point_degrees_ok ? "pass" : "FAIL") << '\n';
  if (!out_path.empty()) {
    std::ostringstream ss;
    pf::plane::write_incidence(pl, ss);
    write_output(out_path, ss.str());
    std::cout << "incidence written to " << out_path << '\n';
  }
  return rep.all_pass() ? kOk : kWitness;
}

int run_expansion(int q, bool exhaustive, std::optional<std::uint64_t> sampled,
                  std::optional<std::uint64_t> seed, const std::string& out_path) {
  const auto pl = pf::plane::build_plane(q);
  const auto cert = pf::spectra::gram_certificate(pl);
  std::cout << "spectral certificate: lambda1=" << cert.lambda1
            << " lambda2=" << cert.lambda2 << " (multiplicity " << cert.n - 1
            << ")\n";
  pf::spectra::AuditSummary summary;
  if (exhaustive) {
    summary = pf::spectra::expansion_audit_exhaustive(pl);
  } else {
    if (!sampled || !seed) {
      std::cerr << "sampled mode requires --sampled and --seed\n";
      return kError;
    }
    summary = pf::spectra::expansion_audit_sampled(pl, *sampled, *seed);
  }
  const auto json = pf::spectra::audit_summary_json(summary);
  std::cout << "expansion audit: " << summary.subsets_checked << " subsets, "
            << summary.violations.size() << " violations, worst slack "
            << summary.worst_slack.str() << '\n';
  write_output(out_path, json);
  if (out_path.empty()) std::cout << json << '\n';
  return summary.violations.empty() ? kOk : kWitness;
}

int run_collapse(std::optional<int> kq, std::optional<int> simplex_d,
                 const std::string& verify_path, const std::string& out_path) {
  pf::cx::SimplicialComplex K;
  std::vector<pf::cx::CollapseStep> steps;
  if (kq) {
    const auto pl = pf::plane::build_plane(*kq);
    K = pf::cx::kq_complex(pl);
    if (verify_path.empty()) steps = pf::cx::kq_collapse_sequence(pl);
  } else if (simplex_d) {
    K = pf::cx::full_simplex(*simplex_d);
    if (verify_path.empty()) {
      steps = pf::cx::simplex_collapse_sequence(*simplex_d);
      // Edge collapses stop at the vertex set; finish to the empty complex.
      pf::cx::SimplicialComplex after = K;
      for (const auto& s : steps) after = pf::cx::apply_collapse(after, s.sigma, s.tau);
      for (const auto& s : pf::cx::vertex_removal_steps(after)) steps.push_back(s);
    }
  } else {
    std::cerr << "collapse requires --kq or --simplex\n";
    return kError;
  }
  if (!verify_path.empty()) {
    std::ifstream in(verify_path);
    if (!in) {
      std::cerr << "cannot read " << verify_path << '\n';
      return kError;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    steps = pf::cx::steps_from_json(buf.str());
  }
  const auto result = pf::cx::verify_sequence(K, steps, 2);
  if (!result.ok) {
    std::cout << "collapse sequence INVALID at step " << result.failed_index << ": "
              << result.reason << '\n';
    return kWitness;
  }
  std::cout << "collapse sequence of " << steps.size()
            << " steps verified, reaches the empty complex\n";
  if (!out_path.empty()) write_output(out_path, pf::cx::steps_to_json(steps));
  return kOk;
}

int run_nerve(const std::string& family_path, const std::string& out_path) {
  std::ifstream in(family_path);
  if (!in) {
    std::cerr << "cannot read " << family_path << '\n';
    return kError;
  }
  const auto fam = pf::nerve::read_family(in);
  const auto K = pf::nerve::nerve_of(fam);
  const auto fv = K.f_vector();
  std::cout << "nerve f-vector:";
  for (std::size_t s = 0; s < fv.size(); ++s) std::cout << ' ' << fv[s];
  std::cout << " (by face cardinality, empty face first)\n";
  if (!out_path.empty()) {
    std::ostringstream ss;
    pf::cx::write_complex(K, ss);
    write_output(out_path, ss.str());
  }
  return kOk;
}

int run_audit(const std::string& rep_path, int q, std::size_t budget,
              const std::string& out_path) {
  std::ifstream in(rep_path);
  if (!in) {
    std::cerr << "cannot read " << rep_path << '\n';
    return kError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const auto rep = pf::geometry::representation_from_json(buf.str());
  const auto pl = pf::plane::build_plane(q);
  pf::geometry::AuditOptions opts;
  opts.selection.max_evaluations = budget;
  const auto report = pf::geometry::audit_representation(rep, pl, opts);
  const auto json = pf::geometry::audit_report_json(report, q);
  write_output(out_path, json);
  if (out_path.empty()) std::cout << json << '\n';
  if (!report.representation_valid) {
    std::cout << "audit: nerve MISMATCH, witness lines [";
    for (std::size_t i = 0; i < report.nerve.witness_lines.size(); ++i)
      std::cout << (i ? " " : "") << report.nerve.witness_lines[i];
    std::cout << "]\n";
    return kWitness;
  }
  std::cout << "audit: nerve MATCH (" << report.nerve.checks << " k-wise checks)\n";
  if (!report.selection_ran)
    std::cout << "audit: selection phase skipped: "
              << report.selection_skipped_reason << '\n';
  else
    std::cout << "audit: " << report.sets_containing_a
              << " sets contain a (cap " << q + 1 << ")\n";
  return report.contradiction ? kWitness : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planeforge: projective plane expansion, collapsibility and "
               "representation audits"};
  app.require_subcommand(1);
  (void)thread_cap();

  int q = 2;
  std::string out_path, in_path, verify_path;
  std::optional<std::uint64_t> sampled, seed;
  bool exhaustive = false;
  std::optional<int> kq, simplex_d;
  std::size_t budget = 1u << 22;

  auto* plane_cmd = app.add_subcommand("plane", "build and verify PG(2, q)");
  plane_cmd->add_option("--q", q, "plane order (prime power)")->required();
  plane_cmd->add_option("--out", out_path, "incidence file to write");

  auto* exp_cmd =
      app.add_subcommand("expansion", "spectral certificate and expansion audit");
  exp_cmd->add_option("--q", q)->required();
  exp_cmd->add_flag("--exhaustive", exhaustive, "all nonempty subsets");
  exp_cmd->add_option("--sampled", sampled, "number of sampled subsets");
  exp_cmd->add_option("--seed", seed, "sampling seed (required with --sampled)");
  exp_cmd->add_option("--out", out_path, "JSON report path");

  auto* col_cmd =
      app.add_subcommand("collapse", "generate or verify 2-collapse sequences");
  col_cmd->add_option("--kq", kq, "collapse K_q of the order-q plane");
  col_cmd->add_option("--simplex", simplex_d, "collapse the d-simplex");
  col_cmd->add_option("--verify-only", verify_path, "steps JSON to verify");
  col_cmd->add_option("--out", out_path, "steps JSON to write");

  auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a set family file");
  nerve_cmd->add_option("family", in_path, "family file")->required();
  nerve_cmd->add_option("--out", out_path, "complex file to write");

  auto* audit_cmd =
      app.add_subcommand("audit", "audit a candidate representation");
  audit_cmd->add_option("rep", in_path, "representation JSON")->required();
  audit_cmd->add_option("--q", q)->required();
  audit_cmd->add_option("--budget", budget, "selection evaluation budget");
  audit_cmd->add_option("--out", out_path, "JSON report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(plane_cmd)) return run_plane(q, out_path);
    if (app.got_subcommand(exp_cmd))
      return run_expansion(q, exhaustive, sampled, seed, out_path);
    if (app.got_subcommand(col_cmd))
      return run_collapse(kq, simplex_d, verify_path, out_path);
    if (app.got_subcommand(nerve_cmd)) return run_nerve(in_path, out_path);
    if (app.got_subcommand(audit_cmd))
      return run_audit(in_path, q, budget, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
