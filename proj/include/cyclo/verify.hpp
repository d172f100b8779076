#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/serialize.hpp"

namespace cyclo {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct Timings {
  double cyclotomic_direct_ms = 0;
  double cyclotomic_reps_ms = 0;
  double jacobi_direct_ms = 0;
  double jacobi_reps_ms = 0;
};

struct VerifyReport {
  FieldSpec field;
  std::uint32_t e = 0;
  std::uint64_t k = 0;
  std::string generator;
  SymmetryCase symmetry;

  std::vector<CheckResult> checks;
  // Informational: known reference values or formulas that disagree with
  // what was computed. Never affects passed().
  std::vector<std::string> notes;

  WorkStats cyclotomic_work;
  WorkStats jacobi_work;
  std::uint64_t enumerated_classes = 0;
  std::optional<Timings> timings;

  bool passed() const;
  const CheckResult* find(std::string_view name) const;
};

/// Names of the checks run_verify performs, in report order.
const std::vector<std::string>& verify_check_names();

VerifyReport run_verify(const CharacterSetup& s, bool with_timing = false);

Json to_json(const VerifyReport& report);

}  // namespace cyclo
