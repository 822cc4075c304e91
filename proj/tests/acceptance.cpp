// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Expected values are written out here rather than taken
// from the verifier's tables.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cmdiv/cartan.hpp"
#include "cmdiv/classifier.hpp"
#include "cmdiv/images.hpp"
#include "cmdiv/ntheory.hpp"
#include "cmdiv/oracle.hpp"
#include "cmdiv/sweeps.hpp"

using namespace cmdiv;

namespace {

struct Outcome {
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string params(std::int64_t n, std::int64_t delta, std::int64_t phi) {
  return "n=" + std::to_string(n) + " delta=" + std::to_string(delta) + " phi=" + std::to_string(phi);
}

// Criterion 1: N(n) abelian iff n = 2 and (phi even or (delta, phi) = (0, 1)).
Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (std::int64_t delta = 0; delta < n; ++delta) {
      for (std::int64_t phi = 0; phi < n; ++phi) {
        const bool expected = n == 2 && (phi % 2 == 0 || (delta % 2 == 0 && phi % 2 == 1));
        const bool got = is_abelian(normalizer_group(CartanParams{delta, 1, phi}, Modulus(n)));
        o.expect(got == expected, params(n, delta, phi));
      }
    }
  }
  o.expect(seconds_since(start) < 60.0, "runtime over 60 s");
  return o;
}

// Criterion 2: the parity classes at level 2.
Outcome criterion2() {
  Outcome o;
  int s3 = 0, z2 = 0;
  for (std::int64_t delta = 0; delta < 2; ++delta) {
    for (std::int64_t phi = 0; phi < 2; ++phi) {
      const auto g = normalizer_group(CartanParams{delta, 1, phi}, Modulus(2));
      if (delta == 1 && phi == 1) {
        o.expect(is_isomorphic_s3(g), params(2, delta, phi) + " is not S3");
        s3 += is_isomorphic_s3(g);
      } else {
        const bool ok = is_abelian(g) && abelian_invariants(g).invariant_factors == std::vector<std::int64_t>{2};
        o.expect(ok, params(2, delta, phi) + " is not Z/2");
        z2 += ok;
      }
    }
  }
  o.expect(s3 == 1 && z2 == 3, "class counts");
  return o;
}

// Criterion 3: commutation sweeps at n <= 20.
Outcome criterion3() {
  Outcome o;
  const std::pair<const char*, SweepOutcome> sweeps[] = {
      {"c1 commutation", sweep_c1_commutation(20, Execution::parallel)},
      {"gamma' commutation", sweep_gamma_prime_commutation(20, Execution::parallel)},
      {"c'_eps commutation", sweep_j0_gamma_commutation(20, Execution::parallel)},
      {"unit b non-abelian", sweep_unit_b_nonabelian(20, Execution::parallel)},
  };
  for (const auto& [name, s] : sweeps) {
    o.expect(s.passed() && s.cases > 0, std::string(name) + ": " + s.first_failure.value_or("no cases"));
    o.cases += s.cases - 1;
  }
  return o;
}

// "nonabelian", "S3", "order<=2" or invariant factors such as "[2,2]".
bool verdict_matches(const FiniteMatrixGroup& g, const std::string& expected) {
  if (expected == "nonabelian") return !is_abelian(g);
  if (expected == "S3") return is_isomorphic_s3(g);
  if (expected == "order<=2") return g.order() <= 2;
  if (!is_abelian(g)) return false;
  std::string got = "[";
  const auto f = abelian_invariants(g).invariant_factors;
  for (std::size_t i = 0; i < f.size(); ++i) got += (i ? "," : "") + std::to_string(f[i]);
  return got + "]" == expected;
}

Outcome criterion4() {
  Outcome o;
  const auto check = [&](const NamedImage& img, const std::string& expected) {
    const std::string where = std::string(label_name(img.label)) + " level " + std::to_string(img.level);
    o.expect(verdict_matches(build_named(img), expected), where + " expected " + expected);
  };
  const IntMat2 c_plus{-1, 0, 0, 1}, c_minus{1, 0, 0, -1};
  const IntMat2 gamma_prime[] = {{1, 0, 0, -1}, {-1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, -1, 0}};
  const IntMat2 cprime[] = {{0, 1, 1, 0}, {0, -1, -1, 0}};
  const GammaSet lifts = gamma_lifts_mod8();
  o.expect(lifts.gamma_double_prime.size() == 16, "sixteen gamma'' lifts");

  for (const IntMat2& c : {c_plus, c_minus}) {
    check({ImageLabel::P43_H1, 3, c}, "[2,2]");
    check({ImageLabel::P43_H1, 9, c}, "nonabelian");
    check({ImageLabel::P43_H1P, 3, c}, "[2]");
    check({ImageLabel::P43_H1P, 9, c}, "nonabelian");
    for (ImageLabel l : {ImageLabel::P43_H2, ImageLabel::P43_H3, ImageLabel::P43_H2P, ImageLabel::P43_H3P}) {
      check({l, 3, c}, "nonabelian");
    }
  }
  for (ImageLabel l : {ImageLabel::P45_H1, ImageLabel::P45_H2}) {
    for (Sign eps : {Sign::plus, Sign::minus}) {
      for (std::int64_t alpha : {3, 5}) {
        for (std::int64_t delta : {-4, -16}) {
          const NamedImage two{l, 2, std::nullopt, eps, alpha, delta};
          o.expect(verdict_matches(build_named(two), "order<=2") && is_abelian(build_named(two)), "P45 level 2");
          check({l, 4, std::nullopt, eps, alpha, delta}, "nonabelian");
        }
      }
    }
  }
  for (const IntMat2& g : gamma_prime) {
    check({ImageLabel::P46_G1, 2, g}, "[2]");
    check({ImageLabel::P46_G1, 4, g}, "nonabelian");
    check({ImageLabel::P46_G2A, 4, g}, "[2,2,2]");
    check({ImageLabel::P46_G2B, 4, g}, "nonabelian");
    check({ImageLabel::P46_G4A, 4, g}, "[2,2]");
    check({ImageLabel::P46_G4B, 4, g}, "[2,2]");
    check({ImageLabel::P46_G4C, 4, g}, "nonabelian");
    check({ImageLabel::P46_G4D, 4, g}, "nonabelian");
  }
  for (const GammaLift& lift : lifts.gamma_double_prime) {
    o.expect(lift.matrix.at(Modulus(4)) == gamma_prime[lift.prime_index].at(Modulus(4)), "lift reduction");
    for (ImageLabel l : {ImageLabel::P46_G2A, ImageLabel::P46_G4A, ImageLabel::P46_G4B}) {
      check({l, 8, lift.matrix}, "nonabelian");
    }
  }
  for (const IntMat2& g : cprime) {
    check({ImageLabel::P48_INDEX3, 2, g}, "[2]");
    check({ImageLabel::P48_INDEX3, 4, g}, "nonabelian");
    check({ImageLabel::P48_FULL, 2, g}, "S3");
  }
  for (std::int64_t p : {5, 7, 11, 13}) {
    for (ImageLabel l : {ImageLabel::P42_FULL, ImageLabel::P42_CUBES, ImageLabel::P42_SPLIT}) {
      check({l, p, std::nullopt}, "nonabelian");
    }
  }
  return o;
}

struct Row {
  const char* label;
  CurveInput curve;
  std::int64_t n;
  const char* structure;
  bool cyclotomic;
};

Outcome criterion5() {
  const Row rows[] = {
      {"E1", CurveInput::j1728(-1), 2, "[]", true},
      {"E2", CurveInput::j1728(-2), 2, "[2]", false},
      {"E3", CurveInput::jzero(1), 2, "[2]", false},
      {"E4", CurveInput::general(-8, 1), 2, "[2]", false},
      {"E5", CurveInput::general(-7, 1), 2, "[2]", false},
      {"E6", CurveInput::general(-4, 4), 2, "[2]", false},
      {"E7", CurveInput::general(-15, 1), 2, "[2]", false},
      {"E8", CurveInput::jzero(2), 3, "[2,2]", false},
      {"E9", CurveInput::jzero(16), 3, "[2]", true},
      {"E10", CurveInput::j1728(-4), 4, "[2,2]", false},
      {"E11", CurveInput::j1728(9), 4, "[2,2,2]", false},
  };
  Outcome o;
  for (const Row& r : rows) {
    const ClassificationResult c = classify(r.curve, r.n);
    o.expect(c.abelian, std::string(r.label) + " abelian");
    o.expect(c.structure_code() == r.structure, std::string(r.label) + " structure " + c.structure_code());
    o.expect(c.cyclotomic == r.cyclotomic, std::string(r.label) + " cyclotomic");
    o.expect(is_cyclotomic(r.curve, r.n) == r.cyclotomic, std::string(r.label) + " is_cyclotomic");
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const SweepOutcome s = sweep_oracle_agreement(50, 500, Execution::parallel);
  o.expect(s.passed(), s.first_failure.value_or(""));
  o.cases += s.cases;
  const OracleVerdict e9 = cyclotomic_consistency_test(CurveInput::jzero(16), 3, 500);
  o.expect(e9.consistent, "JZero{16} at 3 refuted");
  const OracleVerdict e8 = cyclotomic_consistency_test(CurveInput::jzero(2), 3, 500);
  o.expect(!e8.consistent && e8.witness.has_value(), "JZero{2} at 3 not refuted");
  o.expect(seconds_since(start) < 60.0, "runtime over 60 s");
  return o;
}

Outcome criterion7() {
  Outcome o;
  // Closure idempotence and projection/closure commutation on N(n).
  for (std::int64_t n = 2; n <= 16; ++n) {
    for (std::int64_t delta = 0; delta < n; ++delta) {
      for (std::int64_t phi = 0; phi < n; ++phi) {
        const Modulus m(n);
        const auto g = normalizer_group(CartanParams{delta, 1, phi}, m);
        o.expect(group_closure(m, g.elements()) == g, "idempotence " + params(n, delta, phi));
        for (std::int64_t d = 2; d < n; ++d) {
          if (n % d != 0) continue;
          std::vector<Mat2> reduced;
          for (const Mat2& x : g.generators()) reduced.push_back(reduce_to(x, d));
          o.expect(project_group(g, d) == group_closure(Modulus(d), reduced),
                   "projection " + params(n, delta, phi) + " d=" + std::to_string(d));
        }
      }
    }
  }
  // Determinant multiplicativity over all pairs of matrices, n <= 8.
  for (std::int64_t n = 2; n <= 8; ++n) {
    std::vector<Mat2> all;
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b)
        for (std::int64_t c = 0; c < n; ++c)
          for (std::int64_t d = 0; d < n; ++d) all.emplace_back(a, b, c, d, Modulus(n));
    std::size_t bad = 0;
    for (const Mat2& x : all) {
      for (const Mat2& y : all) bad += mat_det(x * y) != mod_reduce(mat_det(x) * mat_det(y), n);
    }
    o.expect(bad == 0, "determinant n=" + std::to_string(n));
    o.cases += all.size() * all.size() - 1;
  }
  // Quartic twists at level 4.
  for (std::int64_t a = -200; a <= 200; ++a) {
    if (a == 0) continue;
    for (std::int64_t k = 2; k <= 7; ++k) {
      const std::int64_t twisted = a * k * k * k * k;
      o.expect(classify(CurveInput::j1728(twisted), 4).structure_code() ==
                   classify(CurveInput::j1728(a), 4).structure_code(),
               "quartic twist A=" + std::to_string(a) + " k=" + std::to_string(k));
    }
  }
  // Abelian at n forces abelian at every divisor of n.
  std::vector<CurveInput> curves;
  for (std::int64_t c = -60; c <= 60; ++c) {
    if (c == 0) continue;
    curves.push_back(CurveInput::jzero(c));
    curves.push_back(CurveInput::j1728(c));
  }
  for (std::int64_t dk : {-3, -4, -7, -8, -11, -15, -20, -23, -24}) {
    for (std::int64_t f = 2; f <= 5; ++f) curves.push_back(CurveInput::general(dk, f));
    if (dk != -3 && dk != -4) curves.push_back(CurveInput::general(dk, 1));
  }
  for (const CurveInput& c : curves) {
    for (std::int64_t n = 2; n <= 36; ++n) {
      if (!classify(c, n).abelian) continue;
      for (std::int64_t d = 1; d < n; ++d) {
        if (n % d == 0) o.expect(classify(c, d).abelian, c.describe() + " " + std::to_string(n));
      }
    }
  }
  // Same monotonicity for the group engine.
  for (std::int64_t n = 4; n <= 16; ++n) {
    for (std::int64_t delta = 0; delta < n; ++delta) {
      for (std::int64_t phi = 0; phi < n; ++phi) {
        const auto g = normalizer_group(CartanParams{delta, 1, phi}, Modulus(n));
        if (!is_abelian(g)) continue;
        for (std::int64_t d = 2; d < n; ++d) {
          if (n % d == 0) o.expect(is_abelian(project_group(g, d)), "group " + params(n, delta, phi));
        }
      }
    }
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::string cmd = std::string(CMDIV_CLI_PATH) + " verify --suite all";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    o.expect(false, "cannot launch " + cmd);
    return o;
  }
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  o.expect(code == 0, "exit code " + std::to_string(code) + "\n" + out);
  const double t = seconds_since(start);
  o.expect(t < 120.0, "runtime " + std::to_string(t) + " s");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 normalizer abelian iff n = 2 and parity condition, n <= 30", criterion1},
      {"2 level-2 parity classes: one S3, three Z/2", criterion2},
      {"3 commutation and unit-b sweeps, n <= 20", criterion3},
      {"4 named-image expectation table", criterion4},
      {"5 example curves E1-E11", criterion5},
      {"6 classifier and finite-field oracle agree, |coef| <= 50, p <= 500", criterion6},
      {"7 property suites", criterion7},
      {"8 verify --suite all exits 0 in under 120 s", criterion8},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.passed ? "PASS" : "FAIL") << "  criterion " << name << "  cases=" << o.cases << "  "
         << seconds_since(start) << "s";
    if (!o.passed) line << "  first failure: " << o.detail;
    std::cout << line.str() << std::endl;
    failed += !o.passed;
  }
  std::cout << (8 - failed) << "/8 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
