#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rdbound {

// F_{p^m}. Elements are coded as integers sum c_i p^i, where c_i is the
// coefficient of x^i in the residue modulo the field's modulus.
class Field {
 public:
  using Elem = uint32_t;
  static constexpr uint64_t kMaxSize = 1ull << 24;
  static constexpr uint64_t kTableSize = 1ull << 16;

  // Cached; the same (p, m) always yields the same object.
  static std::shared_ptr<const Field> make(uint32_t p, uint32_t m);

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint32_t size() const { return size_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return gen_; }
  bool tabulated() const { return !exp_.empty(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, int64_t e) const;
  Elem frobenius(Elem a, uint64_t pk) const;
  Elem exp(int64_t e) const;
  uint64_t dlog(Elem a) const;

  Elem from_int(int64_t v) const;
  std::vector<uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<uint32_t>& c) const;

  std::string modulus_string() const;
  std::string describe() const;

 private:
  Field(uint32_t p, uint32_t m);
  Elem poly_mul(Elem a, Elem b) const;
  Elem digit_add(Elem a, Elem b) const;
  Elem slow_pow(Elem a, uint64_t e) const;

  uint32_t p_, m_, size_;
  std::vector<uint32_t> modulus_;
  Elem gen_ = 1;
  Elem minus_one_ = 0;
  std::vector<Elem> exp_;
  std::vector<uint32_t> log_;
  std::vector<int32_t> zech_;
};

// Value type carrying its field, for the public API and tests.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const Field> f, Field::Elem v) : f_(std::move(f)), v_(v) {}
  const Field& field() const { return *f_; }
  Field::Elem code() const { return v_; }
  std::vector<uint32_t> rep() const { return f_->coeffs(v_); }

  FieldElement operator+(const FieldElement& o) const { return {f_, f_->add(v_, o.v_)}; }
  FieldElement operator-(const FieldElement& o) const { return {f_, f_->sub(v_, o.v_)}; }
  FieldElement operator*(const FieldElement& o) const { return {f_, f_->mul(v_, o.v_)}; }
  FieldElement operator/(const FieldElement& o) const { return {f_, f_->div(v_, o.v_)}; }
  FieldElement operator-() const { return {f_, f_->neg(v_)}; }
  bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }

 private:
  std::shared_ptr<const Field> f_;
  Field::Elem v_;
};

std::shared_ptr<const Field> make_field(uint32_t p, uint32_t m);
FieldElement frobenius(const FieldElement& a, uint64_t pk);
uint64_t discrete_log(const FieldElement& a);

// Image of each element of `small` inside `big` (same characteristic, degree dividing).
const std::vector<Field::Elem>& subfield_embedding(const Field& small, const Field& big);

}  // namespace rdbound
