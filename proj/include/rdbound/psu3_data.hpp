#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rdbound/rational.hpp"

namespace rdbound {

enum class ClassType : int { C1 = 0, C2, C3, C4, C5, C6p, C6, C7, C8 };
inline constexpr int kNumTypes = 9;
inline constexpr std::array<ClassType, kNumTypes> kAllTypes = {ClassType::C1, ClassType::C2, ClassType::C3,
                                                              ClassType::C4, ClassType::C5, ClassType::C6p,
                                                              ClassType::C6, ClassType::C7, ClassType::C8};

std::string_view type_name(ClassType t);
ClassType parse_type(std::string_view s);
inline int idx(ClassType t) { return static_cast<int>(t); }

// Sum of c * q^i * d^j, plus multiples of the Kronecker deltas delta_{1,d} and delta_{3,d}.
struct SymExpr {
  struct Term {
    Rational coeff;
    int qexp = 0;
    int dexp = 0;
  };
  std::vector<Term> terms;
  Rational delta1 = 0;
  Rational delta3 = 0;

  Rational eval(int64_t q, int64_t d) const;
  std::string to_string() const;
};

// c2 q^2 + c1 q + c0, coefficients written as rational literals such as "-3/2".
SymExpr qpoly(const char* c2, const char* c1, const char* c0);

struct ClassTypeSpec {
  ClassType type;
  SymExpr centralizer_order;
  SymExpr class_count;
  SymExpr chi_v;
};

const std::vector<ClassTypeSpec>& class_type_specs();

// counts[target type][source type]
using TypeMatrix = std::array<std::array<int64_t, kNumTypes>, kNumTypes>;

struct SymbolicPowerTable {
  int k = 0;
  std::string case_label;
  std::function<bool(uint32_t)> applies;
  struct Entry {
    ClassType source;
    ClassType target;
    SymExpr value;
    bool corrected = false;  // differs from the reference table
  };
  std::vector<Entry> entries;
};

const std::vector<SymbolicPowerTable>& symbolic_power_tables();
const SymbolicPowerTable& select_power_table(uint32_t q, int k);

struct TypeData {
  ClassType type = ClassType::C1;
  int64_t count = 0;
  Integer centralizer_order;
  int64_t chi_v = 0;
};

struct InstantiatedSpectrum {
  uint32_t q = 0;
  uint32_t d = 1;
  Integer group_order;
  std::array<TypeData, kNumTypes> types;
  std::array<TypeMatrix, 3> power;  // k = 2, 3, 4

  const TypeData& at(ClassType t) const { return types[idx(t)]; }
  const TypeMatrix& power_table(int k) const { return power.at(k - 2); }
  int64_t total_classes() const;
};

uint32_t schur_d(uint32_t q);
Integer psu3_order(uint32_t q);

TypeMatrix symbolic_power_table(uint32_t q, int k);
InstantiatedSpectrum class_spectrum(uint32_t q);

// Sum of chi_V(g^k) over the classes of type t (k = 1 gives count * chi_V(t)).
int64_t chi_on_power_types(const InstantiatedSpectrum& s, ClassType t, int k);

}  // namespace rdbound
