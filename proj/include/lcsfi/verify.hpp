#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcsfi/mcg.hpp"

namespace lcsfi {

/// Bounds for the verification suite. A bound set to 0 (or below what a
/// check needs) turns that check into a reported skip.
struct VerifyConfig {
  std::uint64_t seed = 7;

  int pp_max_n = 4;
  int pp_max_k = 8;
  int binom_max_nm = 4;
  int binom_max_k = 10;
  int tensor_max_nm = 3;
  int tensor_max_k = 8;
  int dup_max_n = 2;
  int dup_max_m = 4;
  int lyndon_max_n = 4;
  int lyndon_max_k = 8;
  int magnus_pairs = 200;
  int magnus_max_k = 4;
  int psi_max_n = 3;
  int psi_max_k = 4;
  int psi_homs = 20;
  int kernel_max_n = 3;
  int kernel_max_k = 4;
  int andreadakis_pairs = 100;
  int andreadakis_max_n = 3;
  int andreadakis_max_k = 3;
  int mc_max_genus = 3;
  int surface_max_genus = 2;
  int surface_max_k = 2;
  int surface_samples = 12;
  int tau_pairs = 50;
  int graph_max_vertices = 8;
  int poincare_degree = 10;
  int degree_window = 15;
  int invariant_samples = 50;
  DualityConvention tau_convention = DualityConvention::Symplectic;
};

enum class CheckStatus { Pass, Fail, Skip };
const char* check_status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  int criterion = 0;  // 1..16 for acceptance checks, 0 for module invariants
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::map<std::string, std::string> witness;  // filled on failure
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct CheckInfo {
  std::string name;
  int criterion = 0;
};

// Every check in suite order: the 16 acceptance checks, then module invariants.
const std::vector<CheckInfo>& verify_checks();
CheckResult run_check(const std::string& name, const VerifyConfig& cfg);
VerifyReport verify_suite(const VerifyConfig& cfg);

// Sets one bound by its report key (e.g. "magnus_pairs"); "tau_convention"
// takes symplectic|symmetric. Throws InvalidArgument on unknown keys.
void set_config_value(VerifyConfig& cfg, const std::string& key, const std::string& value);

std::string report_json(const VerifyReport& r);
std::string report_tsv(const VerifyReport& r);

}  // namespace lcsfi
