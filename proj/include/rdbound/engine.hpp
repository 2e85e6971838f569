#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdbound/rd_core.hpp"

namespace rdbound {

using InvariantCounts = std::map<int, int64_t>;  // degree -> m_degree

enum Blocker : unsigned {
  kNoBlocker = 0,
  kIrreducibility = 1,
  kLadderCondition = 2,
  kNoInvariants = 4,
};

enum class RowClass { NoImprovement, IrreducibilityBlocked, LadderBlocked };

std::string blocker_string(unsigned blockers);
std::string row_class_name(RowClass c);

struct ExtensionCheck {
  int degree = 0;
  int64_t available = 0;
  int64_t product = 0;
  int64_t rd_product = 0;
  int64_t budget = 0;  // dim V - 1 - (r + 1)
  bool irreducibility_fails = false;
  bool ladder_fails = false;
};

struct BoundCertificate {
  Family family = Family::PSU3;
  uint32_t q = 0;
  int64_t dim = 0;
  int64_t mu = 0;
  int max_degree = 0;
  InvariantCounts counts;
  std::vector<int> degrees;
  std::vector<int64_t> available;  // count available when each degree was taken
  int64_t product = 1;
  int64_t rd_product = 1;
  int64_t bound = 0;
  int64_t bound_mu = 0;
  std::optional<int64_t> known_bound;
  std::vector<ExtensionCheck> extensions;
  unsigned blockers = kNoBlocker;
  int next_degree = 0;  // smallest degree that could extend the winner; max_degree + 1 if none is known
  RowClass row_class = RowClass::NoImprovement;
  std::vector<std::string> notes;

  int r() const { return static_cast<int>(degrees.size()); }
  std::string degree_string() const;  // "4,4" or "None"
};

int64_t free_algebra_dim(const std::vector<int>& generator_degrees, int d);
int64_t available_count(const InvariantCounts& m, const std::vector<int>& chosen, int d);
bool admissible(const InvariantCounts& m, std::vector<int> degrees);

// Best admissible multiset over degrees 2..K: maximal r, then minimal product, then lexicographic.
BoundCertificate select_degrees(const InvariantCounts& m, int64_t dim, int64_t mu, const RdLadder& ladder, int K);

// Premises re-evaluated from the certificate fields alone; returns the failures.
std::vector<std::string> verify_certificate(const BoundCertificate& c, const RdLadder& ladder);
// Plain enumeration of every multiset with product below mu; returns the best degree list.
std::vector<int> exhaustive_best(const InvariantCounts& m, int64_t dim, int64_t mu, const RdLadder& ladder, int K);

struct AsymptoticResult {
  uint32_t q = 0;
  int r = 0;
  int64_t bound = 0;
  double formula = 0.0;
  int64_t quartics = 0;
};

AsymptoticResult asymptotic_bound(uint32_t q, const RdLadder& ladder = RdLadder::active());

struct TableOptions {
  int max_degree = 0;  // 0: family default (8 for PSU2, 6 for PSU3)
  bool paper_compat = false;
  const RdLadder* ladder = nullptr;
};

struct TableRow {
  Family family = Family::PSU3;
  uint32_t q = 0;
  bool ok = false;
  std::string error;
  bool flagged = false;
  BoundCertificate cert;
};

int default_max_degree(Family f);
int64_t representation_dim(Family f, uint32_t q);
InvariantCounts invariant_counts(Family f, uint32_t q, int K);

BoundCertificate certify(Family f, uint32_t q, const TableOptions& opts = {});
TableRow make_row(Family f, uint32_t q, const TableOptions& opts = {});
std::vector<TableRow> make_table(Family f, const std::vector<uint32_t>& qs, const TableOptions& opts = {}, int jobs = 1);

std::vector<uint32_t> table_qs(Family f);

}  // namespace rdbound
