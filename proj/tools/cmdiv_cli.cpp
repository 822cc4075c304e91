// cmdiv: classify CM division fields, run the verification harness, and
// explore Cartan normalizer groups.
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad usage or input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmdiv/cartan.hpp"
#include "cmdiv/classifier.hpp"
#include "cmdiv/errors.hpp"
#include "cmdiv/modmat.hpp"
#include "cmdiv/verifier.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ClassifyArgs {
  std::optional<std::int64_t> jzero;
  std::optional<std::int64_t> j1728;
  std::optional<std::int64_t> disc;
  std::int64_t conductor = 1;
  std::string n = "2";
  bool json = false;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::int64_t> n_max;
  std::int64_t p_max = 500;
  std::string out;
  bool json = false;
  bool serial = false;
};

struct ExploreArgs {
  std::int64_t delta = 0;
  std::int64_t delta_den = 1;
  std::int64_t phi = 0;
  std::int64_t n = 2;
  std::string adjoin = "c1";
  std::string generators;
  bool json = false;
};

json structure_json(const cmdiv::ClassificationResult& r) {
  if (const auto* t = std::get_if<cmdiv::AbelianType>(&r.structure)) return t->invariant_factors;
  return cmdiv::to_string(std::get<cmdiv::NonAbelianKind>(r.structure));
}

std::string structure_text(const cmdiv::ClassificationResult& r) {
  if (const auto* t = std::get_if<cmdiv::AbelianType>(&r.structure)) return t->to_string();
  const auto kind = std::get<cmdiv::NonAbelianKind>(r.structure);
  return kind == cmdiv::NonAbelianKind::Unspecified ? "unspecified" : cmdiv::to_string(kind);
}

int run_classify(const ClassifyArgs& a) {
  const int given = a.jzero.has_value() + a.j1728.has_value() + a.disc.has_value();
  if (given != 1) throw cmdiv::InvalidInput("give exactly one of --jzero, --j1728, --disc");
  const cmdiv::CurveInput curve = a.jzero   ? cmdiv::CurveInput::jzero(*a.jzero)
                                  : a.j1728 ? cmdiv::CurveInput::j1728(*a.j1728)
                                            : cmdiv::CurveInput::general(*a.disc, a.conductor);

  std::vector<std::int64_t> levels;
  if (a.n == "all") {
    for (std::int64_t n = 2; n <= 12; ++n) levels.push_back(n);
  } else {
    std::size_t used = 0;
    std::int64_t n = 0;
    try {
      n = std::stoll(a.n, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != a.n.size() || n < 1) throw cmdiv::InvalidInput("--n must be a positive integer or 'all'");
    levels.push_back(n);
  }

  json rows = json::array();
  for (std::int64_t n : levels) {
    const cmdiv::ClassificationResult r = cmdiv::classify(curve, n);
    if (a.json) {
      rows.push_back({{"n", n}, {"abelian", r.abelian}, {"structure", structure_json(r)}, {"cyclotomic", r.cyclotomic}});
    } else {
      std::cout << curve.describe() << "  N=" << n << ": " << (r.abelian ? "abelian" : "non-abelian")
                << ", structure " << structure_text(r) << ", " << (r.cyclotomic ? "cyclotomic" : "not cyclotomic")
                << "\n";
    }
  }
  if (a.json) std::cout << (levels.size() == 1 ? rows[0] : rows).dump() << "\n";
  return kExitOk;
}

int run_verify(const VerifyArgs& a) {
  const auto suite = cmdiv::parse_suite(a.suite);
  if (!suite) throw cmdiv::InvalidInput("unknown suite '" + a.suite + "'");
  if (a.n_max && *a.n_max < 3) throw cmdiv::InvalidInput("--n-max must be at least 3");
  if (a.p_max < 5) throw cmdiv::InvalidInput("--p-max must be at least 5");

  cmdiv::VerifyOptions opts;
  opts.n_max = a.n_max;
  opts.p_max = a.p_max;
  opts.execution = a.serial ? cmdiv::Execution::serial : cmdiv::Execution::parallel;
  const cmdiv::VerificationReport report = cmdiv::run_suite(*suite, opts);

  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw cmdiv::InvalidInput("cannot write " + a.out);
    out << report.to_json() << "\n";
  }
  std::cout << (a.json ? report.to_json() + "\n" : report.to_text());
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_pairs(const std::string& text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto comma = item.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("no comma");
      std::size_t u1 = 0, u2 = 0;
      const std::string lhs = item.substr(0, comma), rhs = item.substr(comma + 1);
      const std::int64_t a = std::stoll(lhs, &u1);
      const std::int64_t b = std::stoll(rhs, &u2);
      if (u1 != lhs.size() || u2 != rhs.size()) throw std::invalid_argument("trailing text");
      out.emplace_back(a, b);
    } catch (const std::exception&) {
      throw cmdiv::InvalidInput("bad generator '" + item + "', expected a,b");
    }
  }
  return out;
}

int run_explore(const ExploreArgs& a) {
  const cmdiv::Modulus n(a.n);
  const cmdiv::CartanParams params{a.delta, a.delta_den, a.phi};

  std::vector<cmdiv::Mat2> gens;
  std::optional<cmdiv::FiniteMatrixGroup> cartan;
  if (a.generators.empty()) {
    cartan = cmdiv::cartan_subgroup(params, n);
    gens.assign(cartan->generators().begin(), cartan->generators().end());
  } else {
    for (const auto& [x, y] : parse_pairs(a.generators)) {
      const cmdiv::Mat2 m = cmdiv::c_matrix(x, y, params, n);
      if (!cmdiv::is_invertible(m)) {
        throw cmdiv::NotInvertible("c(" + std::to_string(x) + "," + std::to_string(y) + ") is not invertible mod " +
                                   std::to_string(a.n));
      }
      gens.push_back(m);
    }
    cartan = cmdiv::group_closure(n, gens);
  }
  if (a.adjoin == "c1") gens.push_back(cmdiv::c_eps(cmdiv::Sign::plus, params, n));
  else if (a.adjoin == "ceps-minus") gens.push_back(cmdiv::c_eps(cmdiv::Sign::minus, params, n));
  else if (a.adjoin == "cprime") gens.push_back(cmdiv::c_eps_prime(cmdiv::Sign::plus, n));
  const cmdiv::FiniteMatrixGroup g = cmdiv::group_closure(n, gens);

  const bool abelian = cmdiv::is_abelian(g);
  const bool cartan_abelian = cmdiv::is_abelian(*cartan);
  const auto stats = cmdiv::order_statistics(g);

  if (a.json) {
    json by_order = json::object();
    for (const auto& [ord, count] : stats) by_order[std::to_string(ord)] = count;
    json elements = json::array();
    for (const cmdiv::Mat2& m : g.elements()) elements.push_back(m.entries());
    json doc{{"n", a.n},
             {"delta", {a.delta, a.delta_den}},
             {"phi", a.phi},
             {"adjoin", a.adjoin},
             {"cartan_order", cartan->order()},
             {"cartan_abelian", cartan_abelian},
             {"order", g.order()},
             {"abelian", abelian},
             {"s3", cmdiv::is_isomorphic_s3(g)},
             {"elements_by_order", by_order},
             {"elements", elements}};
    doc["invariants"] = abelian ? json(cmdiv::abelian_invariants(g).invariant_factors) : json(nullptr);
    std::cout << doc.dump() << "\n";
    return kExitOk;
  }

  std::cout << "level " << a.n << ", delta = " << a.delta;
  if (a.delta_den != 1) std::cout << "/" << a.delta_den;
  std::cout << " (= " << params.delta_mod(n) << "), phi = " << a.phi << "\n";
  std::cout << "cartan order " << cartan->order() << ", " << (cartan_abelian ? "abelian" : "non-abelian") << "\n";
  std::cout << "group (adjoin " << a.adjoin << ") order " << g.order() << ", "
            << (abelian ? "abelian" : "non-abelian");
  if (abelian) std::cout << ", " << cmdiv::abelian_invariants(g).to_string();
  if (cmdiv::is_isomorphic_s3(g)) std::cout << ", isomorphic to S3";
  std::cout << "\nelements by order:";
  for (const auto& [ord, count] : stats) std::cout << " " << ord << ":" << count;
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian and cyclotomic division fields of CM elliptic curves"};
  app.set_version_flag("--version", std::string(CMDIV_VERSION));
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Classify Q(j, E[N]) for a CM curve");
  auto* oj0 = classify->add_option("--jzero", ca.jzero, "j = 0 model y^2 = x^3 + D");
  auto* oj1728 = classify->add_option("--j1728", ca.j1728, "j = 1728 model y^2 = x^3 + A x");
  auto* odisc = classify->add_option("--disc", ca.disc, "fundamental discriminant of K (j not 0, 1728)");
  oj0->excludes(oj1728)->excludes(odisc);
  oj1728->excludes(odisc);
  classify->add_option("--conductor", ca.conductor, "conductor f of the order (with --disc)")->needs(odisc);
  classify->add_option("--n", ca.n,
                       "level N, or 'all' for N = 2..12 (every case reduces to divisors of 12)")
      ->capture_default_str();
  classify->add_flag("--json", ca.json, "machine-readable output");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the exhaustive verification suites");
  verify->add_option("--suite", va.suite, "all | lemma33 | cor34 | lemma35 | thm36 | images | ladder | fixtures | oracle")
      ->check(CLI::IsMember({"all", "lemma33", "cor34", "lemma35", "thm36", "images", "ladder", "fixtures", "oracle"}))
      ->capture_default_str();
  verify->add_option("--n-max", va.n_max, "level bound for the group sweeps");
  verify->add_option("--p-max", va.p_max, "prime bound for the finite-field oracle")->capture_default_str();
  verify->add_option("--out", va.out, "also write the JSON report to this path");
  verify->add_flag("--json", va.json, "print the JSON report instead of text");
  verify->add_flag("--serial", va.serial, "use the serial reference kernels");

  ExploreArgs ea;
  auto* explore = app.add_subcommand("explore", "Build <C(N), c> for given (delta, phi) and describe it");
  explore->add_option("--delta", ea.delta, "numerator of delta")->required();
  explore->add_option("--delta-den", ea.delta_den, "denominator of delta")->capture_default_str();
  explore->add_option("--phi", ea.phi, "phi")->capture_default_str();
  explore->add_option("--n", ea.n, "level N")->required();
  explore->add_option("--adjoin", ea.adjoin, "element adjoined to the Cartan part")
      ->check(CLI::IsMember({"c1", "ceps-minus", "cprime", "none"}))
      ->capture_default_str();
  explore->add_option("--generators", ea.generators, "Cartan coordinates 'a,b;a,b;...' instead of all of C(N)");
  explore->add_flag("--json", ea.json, "machine-readable output including every element");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify) return run_classify(ca);
    if (*verify) return run_verify(va);
    return run_explore(ea);
  } catch (const cmdiv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
