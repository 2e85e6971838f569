#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdbound/oracle.hpp"

namespace rdbound {

struct CheckResult {
  std::string suite;
  uint32_t q = 0;
  std::string check;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> results;

  void add(std::string suite, uint32_t q, std::string check, bool pass, std::string detail = "");
  size_t failures() const;
  bool all_pass() const { return failures() == 0; }
  void append(const VerifyReport& other);
};

// Representative power distributions against the symbolic tables, plus column sums (k = 2, 3, 4).
VerifyReport verify_power_tables(uint32_t q_max);
// Class equation and chi_V norm / mean on the instantiated spectra.
VerifyReport verify_spectra(uint32_t q_max);
// m0..m4 from representatives and from the symbolic data, against the closed form.
VerifyReport verify_molien(uint32_t q_max);
// Exact orthogonality and degree sums of the SL(2,q) tables.
VerifyReport verify_chars(uint32_t q_max);
// Brute-force enumeration against the class data: PSU(3,q) for q <= psu3_q_max, SL(2,q) for q <= sl2_q_max.
VerifyReport verify_oracle(uint32_t psu3_q_max, uint32_t sl2_q_max, int max_power = 6,
                           const OracleOptions& opts = {});

}  // namespace rdbound
