#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rdbound/ffield.hpp"
#include "rdbound/matrix.hpp"

namespace rdbound {

enum class GroupKind { SL2, SU3 };

struct OracleOptions {
  uint64_t max_order = 2'000'000;
  uint64_t seed = 0x5eed2024;
};

// An enumerated matrix group, or its quotient by the center. Elements are held
// as sorted canonical keys: row-major discrete logs shifted by one, with 0 for
// the zero entry, read as base-|F| digits. For a quotient, each coset is
// represented by its least key.
struct MatrixGroup {
  GroupKind kind = GroupKind::SL2;
  uint32_t q = 0;
  std::shared_ptr<const Field> field;
  std::vector<uint64_t> keys;
  std::vector<uint64_t> center;
  std::vector<uint64_t> generators;
  bool quotient = false;

  int dim() const { return kind == GroupKind::SL2 ? 2 : 3; }
  uint64_t order() const { return keys.size(); }
  uint64_t encode(const Mat2& m) const;
  uint64_t encode(const Mat3& m) const;
  Mat2 decode2(uint64_t key) const;
  Mat3 decode3(uint64_t key) const;
  uint64_t multiply(uint64_t a, uint64_t b) const;
  uint64_t inverse(uint64_t a) const;
  uint64_t power(uint64_t a, uint64_t k) const;
  uint64_t identity() const;
  // Least key of the coset a*Z for a quotient; a itself otherwise.
  uint64_t canonical(uint64_t a) const;
  // Position of a (canonicalized) key in `keys`, or -1.
  int64_t index_of(uint64_t key) const;
};

uint64_t group_order_formula(GroupKind kind, uint64_t q);

bool in_sl2(const Field& F, const Mat2& m);
bool in_su3(const Field& F, const Mat3& m, uint64_t q);

MatrixGroup enumerate_group(GroupKind kind, uint32_t q, const OracleOptions& opts = {});
MatrixGroup quotient_by_center(const MatrixGroup& g);
MatrixGroup trivial_group();

struct OracleClass {
  uint64_t rep = 0;
  uint64_t size = 0;
  uint64_t centralizer_order = 0;
};

struct ClassPartition {
  std::vector<OracleClass> classes;
  std::vector<int32_t> class_of;  // indexed like MatrixGroup::keys
  uint64_t group_order = 0;
};

ClassPartition conjugacy_classes(const MatrixGroup& g);

int32_t class_of_key(const MatrixGroup& g, const ClassPartition& p, uint64_t key);

// Class of rep^k for every class.
std::vector<int32_t> power_map_oracle(const MatrixGroup& g, const ClassPartition& p, uint64_t k);

// counts[target][source] over classes; with labels, aggregated to label indices.
std::vector<std::vector<uint64_t>> power_distribution_oracle(const MatrixGroup& g, const ClassPartition& p, uint64_t k);
std::vector<std::vector<uint64_t>> power_distribution_oracle(const MatrixGroup& g, const ClassPartition& p, uint64_t k,
                                                             const std::vector<int>& label_of_class, int num_labels);

// Number of elements commuting with `key` (modulo the center, for a quotient).
uint64_t centralizer_order_direct(const MatrixGroup& g, uint64_t key);

// Checks (class of x^k) == (class of rep^k) for `samples` random members per class.
bool power_map_is_class_function(const MatrixGroup& g, const ClassPartition& p, uint64_t k, int samples, uint64_t seed);

}  // namespace rdbound
