#pragma once

// The verification harness: every structural claim is re-derived by
// exhaustive finite computation and collected into a report.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmdiv/images.hpp"
#include "cmdiv/sweeps.hpp"

namespace cmdiv {

struct CheckResult {
  std::string check_id;
  bool passed;
  std::size_t cases_run;
  std::optional<std::string> first_failure;
};

struct VerificationReport {
  std::vector<CheckResult> checks;  // sorted by check_id
  std::string tool_version;
  std::string timestamp;  // UTC, ISO 8601

  std::size_t passed_count() const;
  std::size_t failed_count() const { return checks.size() - passed_count(); }
  bool all_passed() const { return failed_count() == 0; }

  std::string to_text() const;
  // Keys sorted; schema documented in the README.
  std::string to_json() const;
};

enum class Suite { all, lemma33, cor34, lemma35, thm36, images, ladder, fixtures, oracle };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct VerifyOptions {
  // Overrides the per-check default level bound (20 for the commutation and
  // non-abelian witness sweeps, 30 for the normalizer sweeps).
  std::optional<std::int64_t> n_max;
  std::int64_t p_max = 500;
  Execution execution = Execution::parallel;
};

VerificationReport run_suite(Suite suite, const VerifyOptions& options = {});

// Individual checks. Each is deterministic.
CheckResult check_c1_commutation(std::int64_t n_max, Execution ex);
CheckResult check_gamma_prime_commutation(std::int64_t n_max, Execution ex);
CheckResult check_j0_gamma_commutation(std::int64_t n_max, Execution ex);
CheckResult check_nonabelian_witness(std::int64_t n_max, Execution ex);
CheckResult check_level2_types();
CheckResult check_cartan_abelian(std::int64_t n_max, Execution ex);
CheckResult check_normalizer_abelian(std::int64_t n_max, Execution ex);
CheckResult check_adjoin_sign(std::int64_t n_max, Execution ex);
CheckResult check_projection_surjective(std::int64_t n_max, Execution ex);
CheckResult check_good_primes();
CheckResult check_image_family(std::string_view check_id);
CheckResult check_level6();
CheckResult check_examples();
CheckResult check_example_images();
CheckResult check_oracle_agreement(std::int64_t p_max, Execution ex);
CheckResult check_weil_invariant(std::int64_t p_max);
CheckResult check_splitting_frequencies();

// The check ids that a full run has to produce.
std::span<const std::string_view> required_check_ids();

// Passes iff every required id is present in `checks`.
CheckResult check_coverage(std::span<const CheckResult> checks);

// One row of the named-image expectation table.
enum class GammaChoice { none, c_eps, gamma_prime, gamma_double_prime, gamma_prime_j0, p45_params };

struct ImageExpectation {
  std::string_view check_id;
  ImageLabel label;
  GammaChoice gamma;
  std::int64_t level;
  // "[2,2]" style invariant factors, "order<=2", "nonabelian" or "S3"
  std::string_view expected;
};

std::span<const ImageExpectation> image_expectations();

}  // namespace cmdiv
