#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "rdbound/oracle.hpp"
#include "rdbound/rd_core.hpp"

namespace rdbound::cli {

enum class Format { Text, Csv, Json };

struct RunConfig {
  std::string command;
  Family family = Family::PSU3;
  std::optional<uint32_t> q;
  uint32_t q_min = 0;
  uint32_t q_max = 0;
  int max_degree = 0;
  int power = 2;
  int64_t n = 0;
  std::string target;
  std::string source = "table";
  bool paper_compat = false;
  Format format = Format::Text;
  int jobs = 1;
  std::string ladder_path;
  OracleOptions oracle;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace rdbound::cli
