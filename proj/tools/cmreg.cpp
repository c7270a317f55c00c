// cmreg: bound calculator, module analyzer and bound verifier.
//
//   cmreg bound F -d 3 -i 2 -x 0,0,0 -y 0
//   cmreg analyze fixture.json --window -4:4 --format json
//   cmreg verify fixture.json --checks thm3.6,serre --format md
//
// Exit codes: 0 success (all checks pass or skip), 1 a check failed,
// 2 usage or input error.

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <sstream>

#include "cmreg/document.hpp"
#include "cmreg/parse.hpp"
#include "cmreg/report_format.hpp"

namespace {

using namespace cmreg;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mpz_class to_mpz(const std::string& s, const std::string& flag) {
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) throw UsageError(flag + ": not an integer: '" + s + "'");
  return v;
}

std::vector<mpz_class> to_mpz_list(const std::vector<std::string>& in, const std::string& flag) {
  std::vector<mpz_class> out;
  for (const auto& s : in) out.push_back(to_mpz(s, flag));
  return out;
}

int to_int(const std::string& s, const std::string& flag) {
  mpz_class v = to_mpz(s, flag);
  if (!v.fits_sint_p()) throw UsageError(flag + ": out of range");
  return static_cast<int>(v.get_si());
}

std::pair<int, int> parse_window(const std::string& s) {
  const auto colon = s.find(':', 1);
  if (colon == std::string::npos) throw UsageError("--window: expected lo:hi");
  const int lo = to_int(s.substr(0, colon), "--window");
  const int hi = to_int(s.substr(colon + 1), "--window");
  if (lo > hi) throw UsageError("--window: lo exceeds hi");
  return {lo, hi};
}

// --- bound ------------------------------------------------------------------

struct BoundArgs {
  std::string function;
  std::string d, i, y, u, v, w, m, n, b, r, g, h, t;
  std::string lambda = "1";
  std::vector<std::string> x, e;
  bool all = false;
  bool kernel = false;
};

bool given(const std::string& s) { return !s.empty(); }

const std::string& need(const std::string& value, const std::string& flag, const std::string& fn) {
  if (!given(value)) throw UsageError("bound " + fn + " requires " + flag);
  return value;
}

std::string run_bound(const BoundArgs& a) {
  const std::string& f = a.function;
  auto I = [&](const std::string& v, const char* flag) { return to_int(need(v, flag, f), flag); };
  auto Z = [&](const std::string& v, const char* flag) { return to_mpz(need(v, flag, f), flag); };
  auto caps = [&](int size) {
    std::vector<mpz_class> x = to_mpz_list(a.x, "-x");
    if (static_cast<int>(x.size()) > size) throw UsageError("-x has more than " + std::to_string(size) + " entries");
    x.resize(size, 0);
    return x;
  };
  const mpz_class lambda = to_mpz(a.lambda, "--lambda");
  std::ostringstream out;
  if (f == "F") {
    DiagonalVector diag{caps(I(a.d, "-d")), Z(a.y, "-y")};
    out << diagonal_regularity_bound(I(a.i, "-i"), diag);
  } else if (f == "G") {
    out << reg2_regularity_bound(I(a.i, "-i"), I(a.d, "-d"), Z(a.u, "-u"), Z(a.v, "-v"), Z(a.w, "-w"));
  } else if (f == "E") {
    out << postulation_lower_bound(I(a.i, "-i"), caps(I(a.d, "-d")));
  } else if (f == "H") {
    out << hilbert_coefficient_bound(Z(a.m, "-m"), lambda, HilbertCoefficients{to_mpz_list(a.e, "-e")});
  } else if (f == "lemma33") {
    const int i = I(a.i, "-i");
    out << deficiency_length_bound(i, Z(a.n, "-n"), caps(i + 1));
  } else if (f == "diag") {
    const int i = I(a.i, "-i");
    out << diagonal_cohomology_bound(i, Z(a.n, "-n"), caps(i + 1));
  } else if (f == "gamma44") {
    out << ideal_deficiency_bound(I(a.i, "-i"), I(a.d, "-d"), Z(a.m, "-m"), Z(a.r, "-r"), lambda);
  } else if (f == "delta46") {
    GendegBound g = submodule_gendeg_bound(I(a.i, "-i"), I(a.d, "-d"), Z(a.m, "-m"), lambda,
                                           Z(a.b, "-b"), Z(a.r, "-r"));
    if (a.all) out << "rho " << g.rho << "\npi " << g.pi << "\ndelta ";
    out << g.delta;
  } else if (f == "r47") {
    IdealGendegBound g = ideal_gendeg_bound(I(a.i, "-i"), I(a.d, "-d"), Z(a.g, "-g"), lambda);
    if (a.all) out << "r " << g.r << "\ngamma ";
    out << g.gamma;
  } else if (f == "t412") {
    auto param = a.kernel ? kernel_mumford_parameter : mumford_parameter;
    MumfordParameter p = param(Z(a.m, "-m"), I(a.d, "-d"), lambda, I(a.h, "--height"),
                               HilbertCoefficients{to_mpz_list(a.e, "-e")});
    if (a.all) {
      out << "arguments";
      for (const auto& v : p.arguments) out << " " << v;
      out << "\nreg1_offset " << p.reg1_offset << "\nreg2_offset " << p.reg2_offset << "\nt ";
    }
    out << p.t;
  } else if (f == "b414") {
    out << mumford_ideal_bound(I(a.i, "-i"), I(a.d, "-d"), Z(a.t, "-t"));
  } else {
    throw UsageError("unknown bound function '" + f + "'");
  }
  out << "\n";
  return out.str();
}

// --- analyze / verify ---------------------------------------------------------

struct ModuleArgs {
  std::vector<std::string> inputs;
  std::string format = "json";
  std::string window;
  std::vector<std::string> checks;
  std::string r;
  int budget = 4;
  bool timings = false;
  int jobs = 1;
};

struct Outcome {
  std::string text;
  bool failed = false;
};

FormatOptions format_options(const std::string& input, const BuiltInput& built, bool timings) {
  return FormatOptions{input, built.ring->field().to_string(), timings};
}

Outcome analyze_one(const std::string& input, const ModuleArgs& a) {
  const InputDocument doc = load_document(input);
  const BuiltInput built = build_input(doc);
  CohomologyProfile profile(built.module);
  const auto window = given(a.window) ? parse_window(a.window) : profile.default_window();
  return {format_analysis(profile, window, parse_format(a.format), format_options(input, built, false)),
          false};
}

Outcome verify_one(const std::string& input, const ModuleArgs& a) {
  const InputDocument doc = load_document(input);
  const BuiltInput built = build_input(doc);
  VerifyInput vin{input, built.module, std::nullopt};
  if (built.ambient) vin.pair = ModulePair{*built.ambient, *built.submodule, built.ideal_case};
  VerifyOptions options;
  options.families.insert(a.checks.begin(), a.checks.end());
  if (doc.caps) {
    DiagonalCaps caps;
    for (long v : doc.caps->x) caps.x.push_back(v);
    caps.y = doc.caps->y;
    options.caps = caps;
  }
  if (given(a.r)) options.r_override = to_int(a.r, "--r");
  if (given(a.window)) options.window = parse_window(a.window);
  options.search_budget = a.budget;
  Report report = verify(vin, options);
  return {format_report(report, parse_format(a.format), format_options(input, built, a.timings)),
          report.any_failure()};
}

// Runs `fn` over all inputs (concurrently with --jobs > 1) and prints the
// results in input order, so output never depends on scheduling.
int run_modules(const ModuleArgs& a, Outcome (*fn)(const std::string&, const ModuleArgs&)) {
  parse_format(a.format);  // reject bad formats before any work
  if (given(a.window)) parse_window(a.window);
  for (const auto& c : a.checks) {
    const auto& all = check_families();
    if (std::find(all.begin(), all.end(), c) == all.end()) {
      throw UsageError("unknown check family '" + c + "'");
    }
  }
  std::vector<Outcome> results(a.inputs.size());
  if (a.jobs <= 1) {
    for (size_t k = 0; k < a.inputs.size(); ++k) results[k] = fn(a.inputs[k], a);
  } else {
    std::vector<std::future<Outcome>> pending;
    size_t next = 0;
    while (next < a.inputs.size()) {
      pending.clear();
      const size_t start = next;
      for (; next < a.inputs.size() && next - start < static_cast<size_t>(a.jobs); ++next) {
        pending.push_back(std::async(std::launch::async, fn, a.inputs[next], std::cref(a)));
      }
      for (size_t k = 0; k < pending.size(); ++k) results[start + k] = pending[k].get();
    }
  }
  bool failed = false;
  for (const auto& r : results) {
    std::cout << r.text;
    failed = failed || r.failed;
  }
  return failed ? kExitFailure : 0;
}

void add_module_options(CLI::App* cmd, ModuleArgs& a, bool verify) {
  cmd->add_option("input", a.inputs, "JSON input file(s) or shorthand like 'Q[x,y]/(x^2, x*y)'")
      ->required();
  cmd->add_option("--format", a.format, "json, csv or md")->capture_default_str();
  cmd->add_option("--window", a.window, "degree window lo:hi");
  cmd->add_option("--jobs", a.jobs, "process inputs concurrently")->check(CLI::PositiveNumber);
  if (!verify) return;
  cmd->add_option("--checks", a.checks, "comma-separated check families")->delimiter(',');
  cmd->add_option("--r", a.r, "override r for the reg^2 checks");
  cmd->add_option("--budget", a.budget, "rounds of the filter-regular search")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--timings", a.timings, "include wall time (nondeterministic)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cmreg: regularity bounds and cohomology checks for graded modules"};
  app.require_subcommand(1);

  BoundArgs bound;
  CLI::App* bound_cmd = app.add_subcommand("bound", "evaluate a bounding function");
  bound_cmd->add_option("function", bound.function,
                        "F G E H lemma33 diag gamma44 delta46 r47 t412 b414")
      ->required()
      ->check(CLI::IsMember({"F", "G", "E", "H", "lemma33", "diag", "gamma44", "delta46", "r47",
                             "t412", "b414"}));
  bound_cmd->add_option("-d", bound.d, "dimension");
  bound_cmd->add_option("-i", bound.i, "index");
  bound_cmd->add_option("-x", bound.x, "caps x_0,x_1,... (padded with zeros to d)")->delimiter(',');
  bound_cmd->add_option("-y", bound.y, "lower bound for beg");
  bound_cmd->add_option("-u", bound.u, "G: first argument");
  bound_cmd->add_option("-v", bound.v, "G: second argument");
  bound_cmd->add_option("-w", bound.w, "G: third argument");
  bound_cmd->add_option("-m", bound.m, "generator count");
  bound_cmd->add_option("-n", bound.n, "degree");
  bound_cmd->add_option("-b", bound.b, "beg of the ambient module");
  bound_cmd->add_option("-r", bound.r, "regularity parameter");
  bound_cmd->add_option("-g", bound.g, "generating degree");
  bound_cmd->add_option("-t", bound.t, "Mumford parameter");
  bound_cmd->add_option("--height,-k", bound.h, "t412: h = d - dim(L)");
  bound_cmd->add_option("-e,--coefficients", bound.e, "Hilbert coefficients e_0,e_1,...")->delimiter(',');
  bound_cmd->add_option("--lambda", bound.lambda, "length(R_0)")->capture_default_str();
  bound_cmd->add_flag("--all", bound.all, "print intermediate quantities");
  bound_cmd->add_flag("--kernel", bound.kernel,
                      "t412: feed H the Hilbert coefficients of the kernel (as verify does)");

  ModuleArgs analyze;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "compute the cohomology profile of a module");
  add_module_options(analyze_cmd, analyze, false);

  ModuleArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check every bound against a module");
  add_module_options(verify_cmd, verify_args, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (*bound_cmd) {
      std::cout << run_bound(bound);
      return 0;
    }
    if (*analyze_cmd) return run_modules(analyze, analyze_one);
    return run_modules(verify_args, verify_one);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SearchExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
