#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rdbound {

enum class Family { PSU2, PSU3 };

std::string_view family_name(Family f);
Family parse_family(std::string_view s);

class RdLadder {
 public:
  struct Rule {
    int64_t from = 0;
    int64_t offset = 0;  // RD(n) <= n - offset for n >= from
  };

  static RdLadder parse(std::string_view text, const std::string& source = "<ladder>");
  static RdLadder from_file(const std::string& path);
  static const RdLadder& builtin();
  // Ladder named by RDBOUND_LADDER when set, the built-in ladder otherwise.
  static const RdLadder& active();

  int64_t rd_upper(int64_t n, bool paper_compat = false) const;
  std::optional<int64_t> known_bound(Family f, uint32_t q) const;

  int version() const { return version_; }
  const std::string& source() const { return source_; }
  const std::map<int64_t, int64_t>& explicit_values() const { return values_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::map<int64_t, int64_t>& compat_values() const { return compat_; }

 private:
  void validate() const;

  int version_ = 0;
  std::string source_;
  std::map<int64_t, int64_t> values_;
  std::vector<Rule> rules_;
  std::map<int64_t, int64_t> compat_;
  std::map<std::pair<Family, uint32_t>, int64_t> known_;
};

int64_t rd_upper(int64_t n);

// Minimal faithful permutation degree; NotSimple outside the simple range.
int64_t mu(Family f, uint32_t q, bool paper_compat = false);
// As mu, but also covers PSU(3,2), which appears as a table row.
int64_t table_mu(Family f, uint32_t q, bool paper_compat = false);
int64_t bound_by_mu(Family f, uint32_t q, const RdLadder& ladder, bool paper_compat = false);

// Rows whose mu or bound-by-mu column differs between default and paper-compat mode.
bool is_compat_flagged(Family f, uint32_t q);

}  // namespace rdbound
