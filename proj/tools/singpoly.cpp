#include "singpoly/cache.hpp"
#include "singpoly/json_io.hpp"
#include "singpoly/oracle.hpp"
#include "singpoly/singular.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

using namespace singpoly;

namespace {

enum Exit { ok = 0, usage = 2, pole = 3, falsified = 4, budget = 5 };

struct Globals {
  std::string output;
  std::string cache_dir;
  bool paranoid = false;
  std::uint64_t budget = kDefaultSearchBudget;
};

void emit(const Globals& g, const Json& j) {
  const std::string text = j.dump(2);
  if (g.output.empty() || g.output == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw ParseError("cannot open output file " + g.output);
  out << text << "\n";
}

std::optional<ZetaCache> open_cache(const Globals& g) {
  std::string dir = g.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("SINGPOLY_CACHE_DIR")) dir = env;
  if (dir.empty()) return std::nullopt;
  return ZetaCache(dir, g.paranoid);
}

std::size_t syt_count(const std::vector<int>& shape) {
  std::vector<int> s;
  for (int v : shape)
    if (v > 0) s.push_back(v);
  return syt_enumerate(s).size();
}

int cmd_label(const Globals& g, int m, int n, int N) {
  SingularLabel L = resolve_label(m, n, N);
  Json j = to_json(L);
  if (L.family == Family::two_part) j["gcd_condition_ok"] = two_part_gcd_ok(L);
  emit(g, j);
  return ok;
}

int cmd_zeta(const Globals& g, const std::string& alpha_text, int N, const std::string& kappa, const std::string& basis) {
  if (basis != "x" && basis != "p") throw ParameterViolation("--basis must be x or p");
  const Composition alpha = parse_composition(alpha_text, 0);
  if (alpha.length() > N) throw AmbientTooSmall("length of alpha exceeds N");
  const Basis b = basis == "x" ? Basis::x_monic : Basis::p_monic;
  JackPoly z;
  if (auto cache = open_cache(g))
    z = cache->get(alpha, N, b);
  else
    z = b == Basis::x_monic ? zeta_x(alpha, N) : zeta_p(alpha, N);
  Json j = to_json(z);
  if (!kappa.empty()) {
    const Rational k0 = parse_rational(kappa);
    j["kappa0"] = to_json(k0);
    j["specialized"] = to_json(specialize(z.poly, k0));
  }
  emit(g, j);
  return ok;
}

int cmd_verify(const Globals& g, int m, int n, int N, bool oracle, const std::string& report) {
  SingularModule mod = build_module(m, n, N, false);
  const IsotypeReport iso = isotype_check(mod);
  std::vector<std::string> failed;
  for (const auto& b : mod.basis) {
    if (!b.annihilated) failed.push_back("annihilated " + b.alpha.to_string());
    if (!b.murphy_spectrum_ok) failed.push_back("murphy_spectrum " + b.alpha.to_string());
  }
  if (!iso.omega_ok) failed.push_back("omega eigenvalue");
  if (!iso.degree_ok) failed.push_back("degree law");
  if (!iso.invariance_ok) failed.push_back("Young subgroup invariance");
  const int rank = basis_rank(mod);
  if (rank != static_cast<int>(mod.basis.size())) failed.push_back("basis independence");
  if (mod.basis.size() != syt_count(mod.label.tau)) failed.push_back("#basis = #SYT(tau)");

  Json j = module_json(mod, &iso);
  j["basis_rank"] = rank;
  if (oracle) {
    KernelReport k = compare_with_module(joint_kernel(N, mod.label.lambda.degree(), mod.label.kappa0), mod);
    if (!k.comparison.contains_module) failed.push_back("oracle containment");
    j["kernel"] = to_json(k);
    std::cerr << "kernel dimension " << k.kernel_dimension << ", module dimension " << k.comparison.module_dim
              << ", contains " << (k.comparison.contains_module ? "yes" : "no") << ", equal "
              << (k.comparison.equal_to_module ? "yes" : "no") << "\n";
  }
  j["failed"] = failed;
  emit(g, j);
  if (!report.empty()) {
    std::ofstream out(report);
    if (!out) throw ParseError("cannot open report file " + report);
    out << j.dump(2) << "\n";
  }
  for (const auto& f : failed) std::cerr << "certificate failed: " << f << "\n";
  return failed.empty() ? ok : falsified;
}

int cmd_critical(const Globals& g, const std::string& lambda_text, const std::string& beta_text, int m, int n,
                 bool search, int max_len, int cap) {
  const Composition lambda = parse_composition(lambda_text, 0);
  if (search) {
    const int len = max_len > 0 ? max_len : lambda.ambient();
    const int vcap = cap > 0 ? cap : lambda.sorted().at(1);
    PartnerSearch s = find_critical_partners(lambda, m, n, len, vcap, g.budget);
    Json parts = Json::array();
    for (const auto& b : s.partners) parts.push_back(to_json(b));
    emit(g, {{"lambda", to_json(lambda)}, {"m", m}, {"n", n}, {"max_len", len}, {"cap", vcap}, {"partners", parts},
             {"nodes", s.nodes}});
    return ok;
  }
  if (beta_text.empty()) throw ParameterViolation("critical needs --beta or --search");
  const Composition beta = parse_composition(beta_text, 0);
  const bool crit = is_critical_pair(lambda, beta, m, n);
  emit(g, {{"lambda", to_json(lambda)}, {"beta", to_json(beta)}, {"m", m}, {"n", n}, {"critical", crit}});
  return ok;
}

int cmd_repn(const Globals& g, int m, int n, int N) {
  SingularModule mod = build_module(m, n, N, true);
  SeminormalReport semi = seminormal_matrices(mod);
  Json mats = Json::array();
  for (std::size_t p = 0; p < semi.matrices.size(); ++p)
    mats.push_back({{"transposition", {p + 1, p + 2}}, {"matrix", to_json(semi.matrices[p])}});
  Json spectra = Json::array();
  for (const auto& b : mod.basis) {
    Json s = Json::array();
    for (const auto& q : b.murphy_spectrum) s.push_back(to_string(q));
    spectra.push_back({{"alpha", to_json(b.alpha)}, {"tableau", to_json(b.tableau)}, {"spectrum", s}});
  }
  emit(g, {{"label", to_json(mod.label)},
           {"matrices", mats},
           {"murphy_spectra", spectra},
           {"rules_ok", semi.rules_ok},
           {"involution_ok", semi.involution_ok},
           {"braid_ok", semi.braid_ok},
           {"violations", semi.violations}});
  for (const auto& v : semi.violations) std::cerr << "rule violated: " << v << "\n";
  return semi.rules_ok && semi.involution_ok && semi.braid_ok ? ok : falsified;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singular polynomials for the symmetric group: construction and verification"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--output,-o", g.output, "Write JSON here instead of standard output");
  app.add_option("--cache-dir", g.cache_dir, "Result cache directory (default: $SINGPOLY_CACHE_DIR)");
  app.add_flag("--paranoid", g.paranoid, "Re-verify eigen-equations of cached entries on load");
  app.add_option("--budget", g.budget, "Node budget for critical-partner searches");

  int m = 0, n = 0, N = 0;
  auto* label = app.add_subcommand("label", "Resolve (m,n,N) to the isotype and label partition");
  label->add_option("--m", m)->required();
  label->add_option("--n", n)->required();
  label->add_option("--N", N)->required();

  std::string alpha, kappa, basis = "x";
  auto* zeta = app.add_subcommand("zeta", "Nonsymmetric Jack polynomial");
  zeta->add_option("--alpha", alpha)->required();
  zeta->add_option("--N", N)->required();
  zeta->add_option("--kappa", kappa, "Specialize at this rational value");
  zeta->add_option("--basis", basis, "x (x-monic) or p (p-monic)");

  bool oracle = false;
  std::string report;
  auto* verify = app.add_subcommand("verify", "Build and certify the singular module");
  verify->add_option("--m", m)->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--N", N)->required();
  verify->add_flag("--oracle", oracle, "Compare with the brute-force joint kernel");
  verify->add_option("--report", report, "Also write the full report here");

  std::string lambda, beta;
  bool search = false;
  int max_len = 0, cap = 0;
  auto* critical = app.add_subcommand("critical", "Check or search critical pairs");
  critical->add_option("--lambda", lambda)->required();
  critical->add_option("--beta", beta);
  critical->add_option("--m", m)->required();
  critical->add_option("--n", n)->required();
  critical->add_flag("--search", search);
  critical->add_option("--max-len", max_len);
  critical->add_option("--cap", cap);

  auto* repn = app.add_subcommand("repn", "Seminormal matrices and Murphy spectra");
  repn->add_option("--m", m)->required();
  repn->add_option("--n", n)->required();
  repn->add_option("--N", N)->required();

  for (auto* sub : {label, zeta, verify, critical, repn}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*label) return cmd_label(g, m, n, N);
    if (*zeta) return cmd_zeta(g, alpha, N, kappa, basis);
    if (*verify) return cmd_verify(g, m, n, N, oracle, report);
    if (*critical) return cmd_critical(g, lambda, beta, m, n, search, max_len, cap);
    if (*repn) return cmd_repn(g, m, n, N);
  } catch (const PoleError& e) {
    std::cerr << e.what() << " [factor " << e.factor() << "]\n";
    return pole;
  } catch (const PoleAtSingularValue& e) {
    std::cerr << e.what() << "\n";
    return pole;
  } catch (const SearchBudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return budget;
  } catch (const NotAnnihilated& e) {
    std::cerr << e.what() << "\n";
    return falsified;
  } catch (const ExpansionFailure& e) {
    std::cerr << e.what() << "\n";
    return falsified;
  } catch (const FormulaMismatch& e) {
    std::cerr << e.what() << "\n";
    return falsified;
  } catch (const SolveFailure& e) {
    std::cerr << e.what() << "\n";
    return falsified;
  } catch (const SpectralCollision& e) {
    std::cerr << e.what() << "\n";
    return falsified;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return usage;
}
