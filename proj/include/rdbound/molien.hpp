#pragma once

#include <cstdint>
#include <vector>

#include "rdbound/cyclotomic.hpp"
#include "rdbound/psu3_reps.hpp"
#include "rdbound/rational.hpp"

namespace rdbound {

struct ClassFunctionEntry {
  Integer centralizer_order;
  Integer multiplicity = 1;             // number of classes sharing this data
  std::vector<CycNumber> chi_powers;    // chi(g), chi(g^2), ..., chi(g^K)
  int galois_tag = 0;                   // entries with equal tags form Galois-stable sets
};

struct ClassFunctionInput {
  std::vector<ClassFunctionEntry> classes;
  int max_degree() const;
};

// chi_{Sym^k}(g) from values[i-1] = chi(g^i).
CycNumber sym_power_char(const std::vector<CycNumber>& values, int k);
// chi_{Sym^j}(g) for j = 0..K.
std::vector<CycNumber> sym_power_chars(const std::vector<CycNumber>& values, int K);
// Expanded cycle-index formulas for k = 3 and k = 4.
CycNumber sym_power_char_direct(const std::vector<CycNumber>& values, int k);

// Dimension of degree-k invariants on the dual of the represented space.
Integer invariant_dimension(const ClassFunctionInput& input, int k);
std::vector<Integer> molien_prefix(const ClassFunctionInput& input, int K);

int64_t closed_form_m4(uint32_t q);

ClassFunctionInput psl2_molien_input(uint32_t q, int K);
ClassFunctionInput psu3_molien_input(const Psu3Reps& reps, int K);
ClassFunctionInput psu3_molien_input(uint32_t q, int K);

// m_0..m_4 for PSU(3,q) from the symbolic class-type data alone.
std::vector<Integer> psu3_symbolic_prefix(uint32_t q);

}  // namespace rdbound
