#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdbound/cyclotomic.hpp"
#include "rdbound/ffield.hpp"
#include "rdbound/matrix.hpp"

namespace rdbound {

enum class Sl2Kind { Identity, MinusIdentity, Unipotent, MinusUnipotent, Split, Nonsplit };

struct Sl2Class {
  std::string label;
  Sl2Kind kind = Sl2Kind::Identity;
  int64_t param = 0;  // l for split, m for nonsplit, 0 (c) or 1 (d) for unipotent
  uint64_t size = 0;
  uint64_t centralizer_order = 0;
  uint64_t element_order = 0;
};

struct Sl2ClassData {
  uint32_t q = 0;
  uint32_t p = 0;
  uint32_t f = 0;
  uint64_t group_order = 0;
  std::vector<Sl2Class> classes;

  int index_of(const std::string& label) const;
  // Class of g^k for g in class `cls`.
  int power(int cls, int64_t k) const;
  // Classes with equal tags form Galois-stable sets.
  int galois_tag(int cls) const;
};

Sl2ClassData sl2_class_data(uint32_t q);

struct CharacterTable {
  std::vector<std::string> names;
  std::vector<int64_t> degrees;
  std::vector<int> family;  // Galois-stable families of characters
  std::vector<std::vector<CycNumber>> rows;
};

// Exact table; checked for row and column orthogonality when `check` is set.
CharacterTable sl2_character_table(const Sl2ClassData& cd, bool check = true);
void check_orthogonality(const Sl2ClassData& cd, const CharacterTable& t);

// sqrt(eps q) with eps = (-1)^((q-1)/2), as an element of Q(zeta_p) for odd f.
CycNumber sqrt_eps_q(uint32_t p, uint32_t f);

struct ProjectiveCharacter {
  uint32_t q = 0;
  int64_t degree = 0;
  std::string name;
  std::vector<CycNumber> values;  // indexed like Sl2ClassData::classes
  std::string note;
};

ProjectiveCharacter smallest_projective_character(const Sl2ClassData& cd, const CharacterTable& t);
ProjectiveCharacter smallest_projective_character(uint32_t q);

// Matrices over F_q (the field passed in) representing each class.
Mat2 class_representative(const Sl2ClassData& cd, const Field& F, int cls);

class Sl2Classifier {
 public:
  Sl2Classifier(const Sl2ClassData& cd, const Field& F);
  int classify(const Mat2& g) const;

 private:
  const Sl2ClassData& cd_;
  const Field& F_;
  std::vector<int> by_trace_;  // indexed by field element code
};

int classify_matrix(const Sl2ClassData& cd, const Field& F, const Mat2& g);

}  // namespace rdbound
