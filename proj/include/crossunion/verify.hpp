#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crossunion/bounds.hpp"
#include "crossunion/search.hpp"

namespace crossunion {

enum class VerifyStatus { confirmed, mismatch, skipped_scale };
const char* verify_status_name(VerifyStatus s);

struct VerifyOptions {
  int threads = 0;             // 0: CROSSUNION_THREADS env var, then 1
  std::uint64_t seed = 12345;  // drives every randomized check
  int cases = 500;             // randomized cases per sweep
};

struct VerificationReport {
  std::string theorem_id;
  int n = 0, s = 0;
  BoundValue formula_value{0};
  long long oracle_value = 0;
  int witnesses_expected = 0;  // 0 when the statement fixes no witness set
  int witnesses_found = 0;
  VerifyStatus status = VerifyStatus::confirmed;
  std::string detail;
};

/* Statement ids: thm1.2, cor1.3i, cor1.3ii, prop1.4, thm1.5, thm1.6, milner,
   frankl1.9, wongtay, katona, sperner-ratios, lemmas. Each recomputes its
   claim from the search oracles (or randomized operator checks) and compares
   against the closed form; n above the oracle's reach yields skipped-scale.
   wongtay takes s = n-1 implicitly (pass s = -1); lemmas and sperner-ratios
   ignore n and s. */
std::vector<std::string> theorem_ids();
VerificationReport run_verify(const std::string& theorem_id, int n, int s,
                              const VerifyOptions& opt = {});
std::vector<VerificationReport> run_verify_all(int n_max,
                                               const VerifyOptions& opt = {});

std::string serialize_report(const VerificationReport& r, bool pretty = false);
std::string format_report_line(const VerificationReport& r);

}  // namespace crossunion
