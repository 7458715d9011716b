#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tangentfit/io.hpp"

using namespace tangentfit;

namespace {

// Exit codes: 0 success, 1 internal error, 2 input validation failure,
// 3 observation outside the domain, 4 degree cap exceeded, 5 pipeline/oracle
// span mismatch.
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitOutside = 3;
constexpr int kExitDegreeCap = 4;
constexpr int kExitSpanMismatch = 5;

struct Options {
  std::string polytope_path;
  std::string obs_path;
  std::string out_path;
  std::string basis_path;
  std::string fit_path;
  int k = 0;
  double eps = 0.0;
  std::optional<int> kmax;
  std::string constraint = "none";
  long max_denominator = 1000000;
  int grid_res = 50;
  int field_index = 0;
  bool verbose = false;
  bool allow_nonessential = false;
  bool allow_outside = false;

  std::ostream* log() const { return verbose ? &std::cerr : nullptr; }
  Polytope polytope() const {
    Polytope P = load_polytope(polytope_path, max_denominator, verbose ? &std::cerr : nullptr);
    return P;
  }
};

int run_basis(const Options& opt) {
  Polytope P = opt.polytope();
  TangentPipeline pipe(P, opt.allow_nonessential, opt.log());
  TangentBasis B = pipe.tangent_basis(opt.k);
  if (!opt.out_path.empty()) save_basis(opt.out_path, B);
  std::cout << B.dim() << "\n";
  return 0;
}

int run_dim(const Options& opt) {
  Polytope P = opt.polytope();
  TangentPipeline pipe(P, opt.allow_nonessential, opt.log());
  std::cout << pipe.dimension_by_resolution(opt.k) << "\n";
  return 0;
}

int run_fit(const Options& opt, bool have_k, bool have_eps) {
  Polytope P = opt.polytope();
  std::vector<Observation> obs = load_observations(opt.obs_path);
  ConstraintKind kind = constraint_from_string(opt.constraint);
  FitResult R;
  if (!opt.basis_path.empty()) {
    TangentBasis B = load_basis(opt.basis_path, P.d);
    R = fit_with_basis(P, B, obs, kind, opt.allow_outside, opt.log());
  } else if (have_k) {
    TangentPipeline pipe(P, opt.allow_nonessential, opt.log());
    R = fit_with_degree(pipe, opt.k, obs, kind, opt.allow_outside, opt.log());
  } else {
    if (!have_eps) throw ValidationError("fit needs --k, --eps or --basis");
    R = fit_with_error_bound(P, opt.eps, obs, kind, opt.kmax, opt.allow_outside,
                             opt.log());
  }
  if (!opt.out_path.empty()) write_file(opt.out_path, fit_to_json(R));
  std::cout << std::setprecision(17) << R.error << "\n";
  if (!R.converged) {
    std::cerr << "degree cap exceeded: best error " << R.error << " at degree "
              << R.degree_used << "\n";
    return kExitDegreeCap;
  }
  return 0;
}

int run_interp(const Options& opt) {
  Polytope P = opt.polytope();
  std::vector<Observation> obs = load_observations(opt.obs_path);
  FitResult R = interpolation_result(P, obs);
  if (!opt.out_path.empty()) write_file(opt.out_path, fit_to_json(R));
  std::cout << std::setprecision(17) << R.error << "\n";
  return 0;
}

int run_check(const Options& opt, bool have_k) {
  Polytope P = opt.polytope();
  if (!opt.basis_path.empty()) {
    // Verification mode: audit a basis file against the facet conditions and
    // the oracle span at the file's degree bound.
    TangentBasis B = load_basis(opt.basis_path, P.d);
    bool tangent_ok = true;
    for (int j = 0; j < B.dim(); ++j) {
      TangencyReport tr = facet_tangency_check(B.fields[j], P);
      if (tr.all_tangent) continue;
      tangent_ok = false;
      for (int i = 0; i < P.facet_count(); ++i)
        if (!tr.tangent[i])
          std::cerr << "field " << j + 1 << " fails facet " << i + 1
                    << ": residue "
                    << to_string(tr.residues[i], base_var_names(P.d)) << "\n";
    }
    TangentBasis O = oracle_tangent_basis(P, B.k);
    SpanComparison cmp = compare_spans(B.fields, O.fields, P.d, B.k);
    bool ok = tangent_ok && cmp.equal;
    std::cout << "file " << cmp.dim_a << " oracle " << cmp.dim_b << " "
              << (ok ? "PASS" : "FAIL") << "\n";
    if (ok) return 0;
    if (cmp.witness) {
      std::cerr << "witness field ("
                << (cmp.witness_from_a ? "file" : "oracle")
                << " basis, missing from the other span):\n";
      for (const Polynomial& p : *cmp.witness)
        std::cerr << "  " << to_string(p, base_var_names(P.d)) << "\n";
    }
    return kExitSpanMismatch;
  }
  if (!have_k) throw ValidationError("check needs --k (or --basis)");
  TangentPipeline pipe(P, opt.allow_nonessential, opt.log());
  TangentBasis B = pipe.tangent_basis(opt.k);
  TangentBasis O = oracle_tangent_basis(P, opt.k);
  SpanComparison cmp = compare_spans(B.fields, O.fields, P.d, opt.k);
  long res_dim = pipe.dimension_by_resolution(opt.k);
  bool dims_ok = cmp.dim_a == res_dim && cmp.dim_b == res_dim;
  std::cout << "pipeline " << cmp.dim_a << " oracle " << cmp.dim_b
            << " resolution " << res_dim << " "
            << (cmp.equal && dims_ok ? "PASS" : "FAIL") << "\n";
  if (cmp.equal && dims_ok) return 0;
  if (cmp.witness) {
    std::cerr << "witness field ("
              << (cmp.witness_from_a ? "pipeline" : "oracle")
              << " basis, missing from the other span):\n";
    for (const Polynomial& p : *cmp.witness)
      std::cerr << "  " << to_string(p, base_var_names(P.d)) << "\n";
  }
  return kExitSpanMismatch;
}

int run_grid(const Options& opt) {
  Polytope P = opt.polytope();
  std::vector<Polynomial> field;
  if (!opt.fit_path.empty()) {
    field = field_from_fit_json(read_file(opt.fit_path), P.d);
  } else if (!opt.basis_path.empty()) {
    TangentBasis B = load_basis(opt.basis_path, P.d);
    if (opt.field_index < 0 || opt.field_index >= B.dim())
      throw ValidationError("--index out of range for the basis file");
    field = B.fields[opt.field_index];
  } else {
    throw ValidationError("grid needs --fit or --basis");
  }
  long count;
  if (opt.out_path.empty()) {
    count = write_grid_csv(std::cout, P, field, opt.grid_res, &std::cerr);
  } else {
    std::ostringstream os;
    count = write_grid_csv(os, P, field, opt.grid_res, &std::cerr);
    write_file(opt.out_path, os.str());
    std::cout << count << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Bases of polynomial vector fields tangent to the boundary of a convex "
      "polyhedral domain, and least-squares fitting over them"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd, bool needs_obs) {
    cmd->add_option("--polytope", opt.polytope_path, "polytope JSON file")
        ->required();
    cmd->add_option("--max-denominator", opt.max_denominator,
                    "denominator bound when rationalizing float input");
    cmd->add_flag("--verbose", opt.verbose, "trace to stderr");
    cmd->add_flag("--allow-nonessential", opt.allow_nonessential,
                  "proceed when the cone forms do not span the dual space");
    if (needs_obs)
      cmd->add_option("--obs", opt.obs_path, "observations JSON file")->required();
  };

  CLI::App* basis = app.add_subcommand("basis", "compute a tangent-field basis");
  add_common(basis, false);
  basis->add_option("--k", opt.k, "degree bound")->required();
  basis->add_option("--out", opt.out_path, "basis JSON output path");

  CLI::App* dim = app.add_subcommand("dim", "dimension via the free resolution");
  add_common(dim, false);
  dim->add_option("--k", opt.k, "degree bound")->required();

  CLI::App* fit = app.add_subcommand("fit", "constrained least-squares fit");
  add_common(fit, true);
  CLI::Option* fit_k = fit->add_option("--k", opt.k, "degree bound");
  CLI::Option* fit_eps =
      fit->add_option("--eps", opt.eps, "error bound for degree escalation");
  fit_k->excludes(fit_eps);
  fit_eps->excludes(fit_k);
  int kmax_val = -1;
  fit->add_option("--kmax", kmax_val, "degree cap for --eps");
  fit->add_option("--constraint", opt.constraint,
                  "subspace constraint: none, div, rot, harm");
  fit->add_option("--basis", opt.basis_path,
                  "reuse a basis file instead of recomputing");
  fit->add_option("--out", opt.out_path, "fit JSON output path");
  fit->add_flag("--allow-outside", opt.allow_outside,
                "warn instead of failing on observations outside the domain");

  CLI::App* interp = app.add_subcommand("interp", "exact tangential interpolant");
  add_common(interp, true);
  interp->add_option("--out", opt.out_path, "fit JSON output path");

  CLI::App* check =
      app.add_subcommand("check", "pipeline vs oracle span and dimension audit");
  add_common(check, false);
  CLI::Option* check_k = check->add_option("--k", opt.k, "degree bound");
  check->add_option("--basis", opt.basis_path,
                    "verify a basis file instead of the pipeline output");

  CLI::App* grid = app.add_subcommand("grid", "evaluate a field on a lattice");
  add_common(grid, false);
  CLI::Option* grid_fit =
      grid->add_option("--fit", opt.fit_path, "fit JSON file to draw the field from");
  grid->add_option("--basis", opt.basis_path, "basis JSON file")
      ->excludes(grid_fit);
  grid->add_option("--index", opt.field_index, "field index into --basis");
  grid->add_option("--grid-res", opt.grid_res, "lattice points per axis");
  grid->add_option("--out", opt.out_path, "CSV output path (stdout otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (basis->parsed()) return run_basis(opt);
    if (dim->parsed()) return run_dim(opt);
    if (fit->parsed()) {
      if (kmax_val >= 0) opt.kmax = kmax_val;
      return run_fit(opt, fit_k->count() > 0, fit_eps->count() > 0);
    }
    if (interp->parsed()) return run_interp(opt);
    if (check->parsed()) return run_check(opt, check_k->count() > 0);
    if (grid->parsed()) return run_grid(opt);
    std::cerr << "no command\n";
    return kExitValidation;
  } catch (const OutsideDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOutside;
  } catch (const DegreeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegreeCap;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
