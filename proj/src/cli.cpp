#include "sbound/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sbound/certify.hpp"
#include "sbound/csdecomp.hpp"
#include "sbound/errors.hpp"
#include "sbound/figure.hpp"
#include "sbound/json_report.hpp"
#include "sbound/matrix_io.hpp"
#include "sbound/pluecker.hpp"
#include "sbound/worstcase.hpp"

namespace sbound::cli {
namespace {

// Threshold below 1/√n at which a search result counts as a counterexample.
constexpr double kHypothesisSlack = 1e-6;

struct Options {
  std::string input;
  std::string output;
  int n = 0;
  int k = 0;
  int restarts = SearchParams{}.restarts;
  std::uint64_t seed = 0;
  std::optional<int> grid;
  int resolution = 101;
  double bound = kDefaultFormBound;
  bool orthonormalize = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DenseMatrix load_matrix(const Options& opt, std::istream& in) {
  if (opt.input.empty()) return read_matrix(in);
  return read_matrix_file(opt.input);
}

StiefelMatrix load_stiefel(const Options& opt, std::istream& in) {
  const DenseMatrix m = load_matrix(opt, in);
  if (opt.orthonormalize) return orthonormalize(m);
  return StiefelMatrix(m);
}

Json pluecker_report(const StiefelMatrix& a, double bound) {
  const PlueckerCoords p = pluecker4x2(a);
  Json j = to_json(p);
  const Residuals res = invariant_residuals(p);
  j["relation_residual"] = res.relation;
  j["normalization_residual"] = res.normalization;
  const TransformedVars v = to_transformed(p);
  j["transformed"] = to_json(v);
  j["system"] = to_json(eval_system(v, bound));
  j["elliptic"] = to_json(elliptic_params(nonnegative_representative(v)));
  return j;
}

Json cs_report(const StiefelMatrix& a) {
  const CSFactors f = cs_decompose(a);
  Json j = to_json(f);
  j["reconstruction_error"] = (cs_reconstruct(f) - a.matrix()).cwiseAbs().maxCoeff();
  const CSMinors m = minors_from_cs(f);
  j["m_top"] = m.m_top;
  j["m_bottom"] = m.m_bottom;
  return j;
}

Json best_submatrix_report(const StiefelMatrix& a) {
  const SubmatrixReport r = best_submatrix(a);
  Json j;
  j["n"] = a.n();
  j["k"] = a.k();
  const Json body = to_json(r);
  for (const auto& [key, value] : body.items()) j[key] = value;
  j["principal_angle"] = principal_angle(a, r.row_set);
  j["reference_bound"] = 1.0 / std::sqrt(static_cast<double>(a.n()));
  return j;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Best-conditioned submatrices of semi-orthogonal matrices", "sbound"};
  app.require_subcommand(1);
  Options opt;

  const auto add_io = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("--input", opt.input, "Matrix file (\"n k\" header); stdin if omitted");
      sub->add_flag("--orthonormalize", opt.orthonormalize,
                    "Orthonormalize the input instead of requiring orthonormal columns");
    }
    sub->add_option("--output", opt.output, "Write the report here instead of stdout");
  };

  CLI::App* verify = app.add_subcommand("verify-extremal", "Check the extremal 4x2 matrix (or --input)");
  add_io(verify, false);
  verify->add_option("--input", opt.input, "Candidate 4x2 matrix; built-in extremal matrix if omitted");

  CLI::App* certify = app.add_subcommand("certify", "Run every proof-step check for n=4, k=2");
  add_io(certify, false);
  certify->add_option("--grid", opt.grid, "Use this grid size for every grid check")
      ->check(CLI::Range(2, 100000));
  certify->add_option("--seed", opt.seed, "Seed for optional random probes");
  certify->add_option("--bound", opt.bound, "Quadratic-form constant for system checks")
      ->check(CLI::PositiveNumber);

  CLI::App* pluecker = app.add_subcommand("pluecker", "Pluecker and transformed coordinates of a 4x2 matrix");
  add_io(pluecker, true);
  pluecker->add_option("--bound", opt.bound, "Quadratic-form constant")->check(CLI::PositiveNumber);

  CLI::App* cs = app.add_subcommand("cs", "Thin CS decomposition of a 4x2 matrix");
  add_io(cs, true);

  CLI::App* best = app.add_subcommand("best-submatrix", "Exhaustive best k x k row submatrix");
  add_io(best, true);

  CLI::App* search = app.add_subcommand("search", "Multistart worst-case subspace search");
  add_io(search, false);
  search->add_option("--n", opt.n, "Ambient dimension")->required()->check(CLI::Range(2, 64));
  search->add_option("--k", opt.k, "Subspace dimension")->required()->check(CLI::Range(1, 63));
  search->add_option("--restarts", opt.restarts, "Number of random starts")->check(CLI::Range(1, 1000000));
  search->add_option("--seed", opt.seed, "Base seed; restart r uses seed + r");

  CLI::App* figure = app.add_subcommand("figure-eq3", "CSV boundary data of the two level surfaces");
  add_io(figure, false);
  figure->add_option("--resolution", opt.resolution, "Grid points per axis")->check(CLI::Range(2, 100000));

  std::vector<const char*> argv{"sbound"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "sbound: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string payload;
  int code = kExitOk;
  try {
    if (verify->parsed()) {
      const DenseMatrix m = opt.input.empty() ? extremal_matrix() : read_matrix_file(opt.input);
      const CheckResult r = check_extremal_matrix(m);
      Json j = to_json(r);
      j["matrix"] = matrix_to_string(m);
      payload = dump_json(j);
      code = r.passed ? kExitOk : kExitFailed;
    } else if (certify->parsed()) {
      CertifyConfig config;
      if (opt.grid) {
        config.ellipse_grid = config.transform_grid = config.lemma_grid = config.implication_grid = *opt.grid;
      }
      config.seed = opt.seed;
      config.bound = opt.bound;
      const CertificateReport r = run_all(config);
      payload = dump_json(to_json(r));
      code = r.all_passed ? kExitOk : kExitFailed;
    } else if (pluecker->parsed()) {
      payload = dump_json(pluecker_report(load_stiefel(opt, in), opt.bound));
    } else if (cs->parsed()) {
      payload = dump_json(cs_report(load_stiefel(opt, in)));
    } else if (best->parsed()) {
      payload = dump_json(best_submatrix_report(load_stiefel(opt, in)));
    } else if (search->parsed()) {
      if (opt.k > opt.n - 1) throw UsageError("--k must be at most n-1");
      SearchParams params;
      params.restarts = opt.restarts;
      params.seed = opt.seed;
      const WorstCaseResult r = multistart_search(opt.n, opt.k, params);
      const double reference = 1.0 / std::sqrt(static_cast<double>(opt.n));
      Json j = to_json(r);
      j["params"] = to_json(params);
      j["reference_bound"] = reference;
      j["empirical"] = !(opt.n == 4 && opt.k == 2) && opt.k != 1 && opt.k != opt.n - 1;
      const bool violation = r.best_value < reference - kHypothesisSlack;
      j["hypothesis_violation"] = violation;
      payload = dump_json(j);
      code = violation ? kExitFailed : kExitOk;
    } else if (figure->parsed()) {
      payload = figure_csv(figure_eq3_data(opt.resolution));
    }
  } catch (const UsageError& e) {
    err << "sbound: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "sbound: --input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RankDeficient& e) {
    err << "sbound: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EnumerationCapExceeded& e) {
    err << "sbound: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // DimensionError, NotOrthonormal and parameter validation.
    err << "sbound: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "sbound: " << e.what() << '\n';
    return kExitFailed;
  }

  if (opt.output.empty()) {
    out << payload;
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file || !(file << payload)) {
      err << "sbound: --output: cannot write " << opt.output << '\n';
      return kExitUsage;
    }
  }
  return code;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, std::cin, std::cout, std::cerr);
}

}  // namespace sbound::cli
