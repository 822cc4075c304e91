#include "cmdiv/sweeps.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <vector>

#include "cmdiv/cartan.hpp"
#include "cmdiv/classifier.hpp"
#include "cmdiv/modmat.hpp"
#include "cmdiv/ntheory.hpp"
#include "cmdiv/oracle.hpp"

namespace cmdiv {

namespace {

struct Params {
  std::int64_t n, delta, phi;
};

std::string describe(const Params& p) {
  return "n=" + std::to_string(p.n) + " delta=" + std::to_string(p.delta) + " phi=" + std::to_string(p.phi);
}

std::string pair_str(std::int64_t a, std::int64_t b) {
  return "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// All (n, delta, phi) with n_lo <= n <= n_hi; phi pinned when `fixed_phi`.
std::vector<Params> grid(std::int64_t n_lo, std::int64_t n_hi, std::optional<std::int64_t> fixed_phi = {}) {
  std::vector<Params> out;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    for (std::int64_t delta = 0; delta < n; ++delta) {
      if (fixed_phi) {
        out.push_back({n, delta, mod_reduce(*fixed_phi, n)});
        continue;
      }
      for (std::int64_t phi = 0; phi < n; ++phi) out.push_back({n, delta, phi});
    }
  }
  return out;
}

CartanParams params_of(const Params& p) { return CartanParams{p.delta, 1, p.phi}; }

// c(a, b) for residues delta, phi; nullopt when the determinant is not a unit.
std::optional<Mat2> cartan_element(const Params& p, std::int64_t a, std::int64_t b) {
  const Mat2 m(a + b * p.phi, b, p.delta * b, a, Modulus(p.n));
  if (!is_invertible(m)) return std::nullopt;
  return m;
}

// Runs task(i, failure) for every index and returns the summed case count
// with the lowest-indexed failure message.
template <typename Task>
SweepOutcome run_tasks(std::size_t count, Execution ex, Task task) {
  std::vector<std::optional<std::string>> failures(count);
  auto guarded = [&](std::size_t i) -> std::size_t {
    try {
      return task(i, failures[i]);
    } catch (const std::exception& e) {
      failures[i] = std::string("exception: ") + e.what();
      return 0;
    }
  };
  std::size_t cases = 0;
  const auto total = static_cast<std::int64_t>(count);
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : cases)
    for (std::int64_t i = 0; i < total; ++i) cases += guarded(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < total; ++i) cases += guarded(static_cast<std::size_t>(i));
  }
  SweepOutcome out{cases, std::nullopt};
  for (auto& f : failures) {
    if (f) {
      out.first_failure = std::move(f);
      break;
    }
  }
  return out;
}

}  // namespace

SweepOutcome sweep_c1_commutation(std::int64_t n_max, Execution ex) {
  const auto params = grid(2, n_max);
  return run_tasks(params.size(), ex, [&](std::size_t i, std::optional<std::string>& failure) {
    const Params& p = params[i];
    const Modulus n(p.n);
    std::vector<std::pair<Sign, Mat2>> conj{{Sign::plus, c_eps(Sign::plus, params_of(p), n)}};
    if (p.phi == 0) conj.emplace_back(Sign::minus, c_eps(Sign::minus, params_of(p), n));
    std::size_t cases = 0;
    for (std::int64_t a = 0; a < p.n; ++a) {
      for (std::int64_t b = 0; b < p.n; ++b) {
        const auto c = cartan_element(p, a, b);
        if (!c) continue;
        for (const auto& [eps, g] : conj) {
          ++cases;
          const bool congruences = (b * p.phi) % p.n == 0 && (2 * b) % p.n == 0;
          if (commute(g, *c) && !congruences && !failure) {
            failure = describe(p) + " " + pair_str(a, b) + ": c_" + (eps == Sign::plus ? "1" : "-1") +
                      " commutes with c(a,b) but b*phi or 2b is nonzero";
          }
        }
      }
    }
    return cases;
  });
}

SweepOutcome sweep_unit_b_nonabelian(std::int64_t n_max, Execution ex) {
  const auto params = grid(3, n_max);
  return run_tasks(params.size(), ex, [&](std::size_t i, std::optional<std::string>& failure) {
    const Params& p = params[i];
    const Modulus n(p.n);
    const Mat2 c1 = c_eps(Sign::plus, params_of(p), n);
    std::size_t cases = 0;
    for (std::int64_t b = 1; b < p.n; ++b) {
      if (gcd64(b, p.n) != 1) continue;
      for (std::int64_t a = 0; a < p.n; ++a) {
        const auto c = cartan_element(p, a, b);
        if (!c) continue;
        ++cases;
        if (is_abelian(group_closure(n, {c1, *c})) && !failure) {
          failure = describe(p) + " " + pair_str(a, b) + ": <c_1, c(a,b)> is abelian with b a unit";
        }
      }
    }
    return cases;
  });
}

SweepOutcome sweep_gamma_prime_commutation(std::int64_t n_max, Execution ex) {
  const auto params = grid(2, n_max, 0);
  return run_tasks(params.size(), ex, [&](std::size_t i, std::optional<std::string>& failure) {
    const Params& p = params[i];
    const Modulus n(p.n);
    const std::array<Mat2, 4> gammas{Mat2(1, 0, 0, -1, n), Mat2(-1, 0, 0, 1, n), Mat2(0, 1, 1, 0, n),
                                     Mat2(0, -1, -1, 0, n)};
    std::size_t cases = 0;
    for (std::int64_t a = 0; a < p.n; ++a) {
      for (std::int64_t b = 0; b < p.n; ++b) {
        const auto c = cartan_element(p, a, b);
        if (!c) continue;
        for (const Mat2& g : gammas) {
          ++cases;
          const bool ok = (2 * b) % p.n == 0 || mod_reduce(b * (p.delta - 1), p.n) == 0;
          if (commute(g, *c) && !ok && !failure) {
            failure = describe(p) + " " + pair_str(a, b) + ": " + to_string(g) +
                      " commutes with c(a,b) but neither 2b nor b(delta-1) vanishes";
          }
        }
      }
    }
    return cases;
  });
}

SweepOutcome sweep_j0_gamma_commutation(std::int64_t n_max, Execution ex) {
  const auto params = grid(2, n_max, 1);
  return run_tasks(params.size(), ex, [&](std::size_t i, std::optional<std::string>& failure) {
    const Params& p = params[i];
    const Modulus n(p.n);
    const std::array<Mat2, 2> gammas{c_eps_prime(Sign::plus, n), c_eps_prime(Sign::minus, n)};
    std::size_t cases = 0;
    for (std::int64_t a = 0; a < p.n; ++a) {
      for (std::int64_t b = 0; b < p.n; ++b) {
        const auto c = cartan_element(p, a, b);
        if (!c) continue;
        for (const Mat2& g : gammas) {
          ++cases;
          if (commute(g, *c) && b % p.n != 0 && !failure) {
            failure = describe(p) + " " + pair_str(a, b) + ": " + to_string(g) + " commutes with c(a,b), b != 0";
          }
        }
      }
    }
    return cases;
  });
}

SweepOutcome sweep_cartan_abelian(std::int64_t n_max, Execution ex) {
  const auto params = grid(2, n_max);
  return run_tasks(params.size(), ex, [&](std::size_t i, std::optional<std::string>& failure) {
    const Params& p = params[i];
    if (!is_abelian(cartan_subgroup(params_of(p), Modulus(p.n)))) {
      failure = describe(p) + ": Cartan subgroup is not abelian";
    }
    return std::size_t{1};
  });
}

SweepOutcome sweep_normalizer_abelian(std::int64_t n_max, Execution ex) {
  const auto params = grid(2, n_max);
  return run_tasks(params.size(), ex, [&](std::size_t i, std::optional<std::string>& failure) {
    const Params& p = params[i];
    const bool expected = p.n == 2 && (p.phi % 2 == 0 || p.delta % 2 == 0);
    const bool got = is_abelian(normalizer_group(params_of(p), Modulus(p.n)));
    if (got != expected) {
      failure = describe(p) + ": normalizer is " + (got ? "abelian" : "non-abelian") + ", expected " +
                (expected ? "abelian" : "non-abelian");
    }
    return std::size_t{1};
  });
}

SweepOutcome sweep_adjoin_sign(std::int64_t n_max, Execution ex) {
  const auto params = grid(2, n_max);
  return run_tasks(params.size(), ex, [&](std::size_t i, std::optional<std::string>& failure) {
    const Params& p = params[i];
    const Modulus n(p.n);
    const FiniteMatrixGroup plus = normalizer_group(params_of(p), n, Sign::plus);
    // c_-1 need not normalize C(n), so <C(n), c_-1> can be much larger than
    // N(n); a group is abelian iff its generators commute, which avoids the
    // closure.
    const FiniteMatrixGroup cartan = cartan_subgroup(params_of(p), n);
    const Mat2 cm = c_eps(Sign::minus, params_of(p), n);
    const bool minus_abelian = is_abelian(cartan) && std::all_of(cartan.generators().begin(),
                                                                 cartan.generators().end(),
                                                                 [&](const Mat2& g) { return commute(g, cm); });
    if (is_abelian(plus) != minus_abelian) {
      failure = describe(p) + ": adjoining c_1 and c_-1 give different abelian verdicts";
    }
    return std::size_t{1};
  });
}

SweepOutcome sweep_projection_surjective(std::int64_t n_max, Execution ex) {
  const auto params = grid(4, n_max);
  return run_tasks(params.size(), ex, [&](std::size_t i, std::optional<std::string>& failure) {
    const Params& p = params[i];
    const FiniteMatrixGroup big = normalizer_group(params_of(p), Modulus(p.n));
    std::size_t cases = 0;
    for (std::int64_t d = 2; d < p.n; ++d) {
      if (p.n % d != 0) continue;
      ++cases;
      const Params q{d, p.delta % d, p.phi % d};
      if (project_group(big, d) != normalizer_group(params_of(q), Modulus(d)) && !failure) {
        failure = describe(p) + ": reduction to level " + std::to_string(d) + " is not onto N(d)";
      }
    }
    return cases;
  });
}

SweepOutcome sweep_oracle_agreement(std::int64_t coef_max, std::int64_t p_max, Execution ex) {
  std::vector<CurveInput> curves;
  for (std::int64_t c = -coef_max; c <= coef_max; ++c) {
    if (c != 0) curves.push_back(CurveInput::jzero(c));
  }
  for (std::int64_t c = -coef_max; c <= coef_max; ++c) {
    if (c != 0) curves.push_back(CurveInput::j1728(c));
  }
  return run_tasks(curves.size(), ex, [&](std::size_t i, std::optional<std::string>& failure) {
    const CurveInput& curve = curves[i];
    std::size_t cases = 0;
    for (int ell : {2, 3}) {
      ++cases;
      const OracleVerdict v = cyclotomic_consistency_test(curve, ell, p_max);
      const bool predicted = is_cyclotomic(curve, ell);
      if (v.consistent != predicted && !failure) {
        failure = curve.describe() + " l=" + std::to_string(ell) + ": classifier says " +
                  (predicted ? "cyclotomic" : "not cyclotomic") + ", oracle " +
                  (v.consistent ? "found no refutation"
                                : "refuted at p=" + std::to_string(v.witness.value_or(0)));
      }
    }
    ++cases;
    const ClassificationResult level2 = classify(curve, 2);
    const OracleVerdict s = structure_consistency_test(curve, level2, p_max);
    if (!s.consistent && !failure) {
      failure = curve.describe() + ": level-2 structure " + level2.structure_code() + " refuted" +
                (s.witness ? " at p=" + std::to_string(*s.witness) : std::string(" (no inert prime found)"));
    }
    return cases;
  });
}

}  // namespace cmdiv
