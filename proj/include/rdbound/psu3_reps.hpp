#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rdbound/ffield.hpp"
#include "rdbound/matrix.hpp"
#include "rdbound/psu3_data.hpp"

namespace rdbound {

struct ClassRep {
  ClassType type = ClassType::C1;
  std::vector<int64_t> params;
  Mat3 matrix;
  std::string psu_id;
};

struct Psu3Reps {
  uint32_t q = 0;
  uint32_t d = 1;
  std::shared_ptr<const Field> field;  // F_{q^2}
  Mat3 frame;        // columns e, w, f with Gram matrix antidiag(1, 1, 1)
  Mat3 torus8;       // generator of the anisotropic torus (identity when q = 2)
  std::vector<ClassRep> reps;
};

// Type of g in PSU(3,q); g must lie in SU(3,q) for the identity Hermitian form.
ClassType identify_type(const Field& F, uint32_t q, const Mat3& g, bool check_membership = true);

Psu3Reps build_representatives(uint32_t q);

// counts[type of g^k][type of g] over PSU classes; k <= 4 is checked against
// the symbolic tables.
TypeMatrix power_distribution(const Psu3Reps& r, int k);

// For every representative, the types of g, g^2, ..., g^K.
std::vector<std::vector<ClassType>> power_type_sequences(const Psu3Reps& r, int K);

}  // namespace rdbound
