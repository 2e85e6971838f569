#include "rdbound/psu3_data.hpp"

#include <sstream>

#include "rdbound/error.hpp"
#include "rdbound/numtheory.hpp"

namespace rdbound {

namespace {

using T = ClassType;

SymExpr term(const char* c, int qexp, int dexp = 0) {
  SymExpr e;
  e.terms.push_back({Rational(c), qexp, dexp});
  return e;
}

SymExpr operator+(SymExpr a, const SymExpr& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  a.delta1 += b.delta1;
  a.delta3 += b.delta3;
  return a;
}

SymExpr constant(const char* c) { return term(c, 0); }

SymExpr delta(int which, const char* c) {
  SymExpr e;
  (which == 1 ? e.delta1 : e.delta3) = Rational(c);
  return e;
}

SymbolicPowerTable make_table(int k, std::string label, std::function<bool(uint32_t)> applies,
                              std::vector<SymbolicPowerTable::Entry> entries) {
  for (auto& e : entries)
    for (auto& t : e.value.terms) t.coeff.canonicalize();
  return {k, std::move(label), std::move(applies), std::move(entries)};
}

const SymExpr one = qpoly("0", "0", "1");

std::vector<SymbolicPowerTable> build_tables() {
  std::vector<SymbolicPowerTable> t;
  // k = 2
  t.push_back(make_table(2, "q = 1,3 mod 6", [](uint32_t q) { return q % 6 == 1 || q % 6 == 3; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C2, one},
                          {T::C3, T::C3, one},
                          {T::C4, T::C1, one},
                          {T::C4, T::C4, qpoly("0", "1", "-1")},
                          {T::C5, T::C2, one},
                          {T::C5, T::C5, qpoly("0", "1", "-1")},
                          {T::C6, T::C4, qpoly("0", "1/2", "-1/2")},
                          {T::C6, T::C6, qpoly("1/6", "-2/3", "1/2")},
                          {T::C7, T::C4, qpoly("0", "1/2", "1/2")},
                          {T::C7, T::C7, qpoly("1/2", "-1", "-3/2")},
                          {T::C8, T::C8, qpoly("1/3", "-1/3", "0")}}));
  t.push_back(make_table(2, "q = 2 mod 6", [](uint32_t q) { return q % 6 == 2; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C1, one},
                          {T::C3, T::C2, qpoly("0", "0", "3")},
                          {T::C4, T::C4, qpoly("0", "1/3", "-2/3")},
                          {T::C5, T::C4, qpoly("0", "1/3", "-2/3")},
                          {T::C6p, T::C6p, one},
                          {T::C6, T::C6, qpoly("1/18", "-1/18", "-1/9")},
                          {T::C7, T::C7, qpoly("1/6", "-1/6", "-1/3")},
                          {T::C8, T::C8, qpoly("1/9", "-1/9", "-2/9")}}));
  t.push_back(make_table(2, "q = 4 mod 6", [](uint32_t q) { return q % 6 == 4; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C1, one},
                          {T::C3, T::C2, one},
                          {T::C4, T::C4, qpoly("0", "1", "0")},
                          {T::C5, T::C4, qpoly("0", "1", "0")},
                          {T::C6, T::C6, qpoly("1/6", "-1/6", "0")},
                          {T::C7, T::C7, qpoly("1/2", "-1/2", "-1"), true},
                          {T::C8, T::C8, qpoly("1/3", "-1/3", "0")}}));
  t.push_back(make_table(2, "q = 5 mod 6", [](uint32_t q) { return q % 6 == 5; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C2, one},
                          {T::C3, T::C3, qpoly("0", "0", "3")},
                          {T::C4, T::C1, one},
                          {T::C4, T::C4, qpoly("0", "1/3", "-5/3")},
                          {T::C5, T::C2, one},
                          {T::C5, T::C5, qpoly("0", "1/3", "-5/3")},
                          {T::C6p, T::C6p, one},
                          {T::C6, T::C4, qpoly("0", "1/6", "-5/6")},
                          {T::C6, T::C6p, one, true},
                          {T::C6, T::C6, qpoly("1/18", "-2/9", "-5/18"), true},
                          {T::C7, T::C4, qpoly("0", "1/6", "1/6")},
                          {T::C7, T::C7, qpoly("1/6", "-1/3", "-1/2")},
                          {T::C8, T::C8, qpoly("1/9", "-1/9", "-2/9")}}));
  // k = 3
  t.push_back(make_table(3, "q = 0 mod 3", [](uint32_t q) { return q % 3 == 0; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C1, one},
                          {T::C3, T::C1, one},
                          {T::C4, T::C4, qpoly("0", "1", "0")},
                          {T::C5, T::C4, qpoly("0", "1", "0")},
                          {T::C6, T::C6, qpoly("1/6", "-1/6", "0")},
                          {T::C7, T::C7, qpoly("1/2", "-1/2", "-1"), true},
                          {T::C8, T::C8, qpoly("1/3", "-1/3", "0")}}));
  t.push_back(make_table(3, "q = 1 mod 3", [](uint32_t q) { return q % 3 == 1; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C2, one},
                          {T::C3, T::C3, one},
                          {T::C4, T::C4, qpoly("0", "1", "0")},
                          {T::C5, T::C5, qpoly("0", "1", "0")},
                          {T::C6, T::C6, qpoly("1/6", "-1/6", "0")},
                          {T::C7, T::C1, one},
                          {T::C7, T::C4, qpoly("0", "1", "0")},
                          {T::C7, T::C7, qpoly("1/2", "-3/2", "-2")},
                          {T::C8, T::C8, qpoly("1/3", "-1/3", "0")}}));
  t.push_back(make_table(3, "q = 2,5 mod 9", [](uint32_t q) { return q % 9 == 2 || q % 9 == 5; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C2, one},
                          {T::C3, T::C3, qpoly("0", "0", "3")},
                          {T::C4, T::C4, qpoly("0", "1/3", "-2/3")},
                          {T::C5, T::C5, qpoly("0", "1/3", "-2/3")},
                          {T::C6p, T::C1, one},
                          {T::C6, T::C4, qpoly("0", "1/3", "-2/3")},
                          {T::C6, T::C6, qpoly("1/18", "-7/18", "5/9")},
                          {T::C7, T::C7, qpoly("1/6", "-1/6", "-1/3")},
                          {T::C8, T::C8, qpoly("1/9", "-1/9", "-2/9")}}));
  t.push_back(make_table(3, "q = 8 mod 9", [](uint32_t q) { return q % 9 == 8; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C2, one},
                          {T::C3, T::C3, qpoly("0", "0", "3")},
                          {T::C4, T::C1, qpoly("0", "0", "2")},
                          {T::C4, T::C4, qpoly("0", "1/3", "-8/3")},
                          {T::C5, T::C2, qpoly("0", "0", "2")},
                          {T::C5, T::C5, qpoly("0", "1/3", "-8/3")},
                          {T::C6p, T::C1, one},
                          {T::C6, T::C4, qpoly("0", "1/3", "-8/3")},
                          {T::C6, T::C6p, qpoly("0", "0", "3"), true},
                          {T::C6, T::C6, qpoly("1/18", "-7/18", "-4/9"), true},
                          {T::C7, T::C7, qpoly("1/6", "-1/6", "-1/3")},
                          {T::C8, T::C8, qpoly("1/9", "-1/9", "-2/9")}}));
  // k = 4
  t.push_back(make_table(4, "q = 1,9 mod 12", [](uint32_t q) { return q % 12 == 1 || q % 12 == 9; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C2, one},
                          {T::C3, T::C3, one},
                          {T::C4, T::C1, one},
                          {T::C4, T::C4, qpoly("0", "1", "-1")},
                          {T::C5, T::C2, one},
                          {T::C5, T::C5, qpoly("0", "1", "-1")},
                          {T::C6, T::C4, qpoly("0", "1/2", "-1/2")},
                          {T::C6, T::C6, qpoly("1/6", "-2/3", "1/2")},
                          {T::C7, T::C1, one},
                          {T::C7, T::C4, qpoly("0", "3/2", "1/2")},
                          {T::C7, T::C7, qpoly("1/2", "-2", "-5/2")},
                          {T::C8, T::C8, qpoly("1/3", "-1/3", "0")}}));
  t.push_back(make_table(4, "q = 2 mod 6", [](uint32_t q) { return q % 6 == 2; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C1, one},
                          {T::C3, T::C1, qpoly("0", "0", "3")},
                          {T::C4, T::C4, qpoly("0", "1/3", "-2/3")},
                          {T::C5, T::C4, qpoly("0", "1/3", "-2/3")},
                          {T::C6p, T::C6p, one},
                          {T::C6, T::C6, qpoly("1/18", "-1/18", "-1/9")},
                          {T::C7, T::C7, qpoly("1/6", "-1/6", "-1/3")},
                          {T::C8, T::C8, qpoly("1/9", "-1/9", "-2/9")}}));
  t.push_back(make_table(4, "q = 3,7 mod 12", [](uint32_t q) { return q % 12 == 3 || q % 12 == 7; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C2, one},
                          {T::C3, T::C3, one},
                          {T::C4, T::C1, qpoly("0", "0", "3")},
                          {T::C4, T::C4, qpoly("0", "1", "-3")},
                          {T::C5, T::C2, qpoly("0", "0", "3")},
                          {T::C5, T::C5, qpoly("0", "1", "-3")},
                          {T::C6, T::C1, one},
                          {T::C6, T::C4, qpoly("0", "3/2", "-9/2")},
                          {T::C6, T::C6, qpoly("1/6", "-5/3", "7/2")},
                          {T::C7, T::C4, qpoly("0", "1/2", "1/2")},
                          {T::C7, T::C7, qpoly("1/2", "-1", "-3/2")},
                          {T::C8, T::C8, qpoly("1/3", "-1/3", "0")}}));
  t.push_back(make_table(4, "q = 4 mod 6", [](uint32_t q) { return q % 6 == 4; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C1, one},
                          {T::C3, T::C1, one},
                          {T::C4, T::C4, qpoly("0", "1", "0")},
                          {T::C5, T::C4, qpoly("0", "1", "0")},
                          {T::C6, T::C6, qpoly("1/6", "-1/6", "0")},
                          {T::C7, T::C7, qpoly("1/2", "-1/2", "-1")},
                          {T::C8, T::C8, qpoly("1/3", "-1/3", "0")}}));
  t.push_back(make_table(4, "q = 5 mod 12", [](uint32_t q) { return q % 12 == 5; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C2, one},
                          {T::C3, T::C3, qpoly("0", "0", "3")},
                          {T::C4, T::C1, one},
                          {T::C4, T::C4, qpoly("0", "1/3", "-5/3")},
                          {T::C5, T::C2, one},
                          {T::C5, T::C5, qpoly("0", "1/3", "-5/3")},
                          {T::C6p, T::C6p, one},
                          {T::C6, T::C4, qpoly("0", "1/6", "-5/6")},
                          {T::C6, T::C6p, one, true},
                          {T::C6, T::C6, qpoly("1/18", "-2/9", "-5/18"), true},
                          {T::C7, T::C1, one},
                          {T::C7, T::C4, qpoly("0", "1/2", "-1/2")},
                          {T::C7, T::C7, qpoly("1/6", "-2/3", "-5/6")},
                          {T::C8, T::C8, qpoly("1/9", "-1/9", "-2/9")}}));
  t.push_back(make_table(4, "q = 11 mod 12", [](uint32_t q) { return q % 12 == 11; },
                         {{T::C1, T::C1, one},
                          {T::C2, T::C2, one},
                          {T::C3, T::C3, qpoly("0", "0", "3")},
                          {T::C4, T::C1, qpoly("0", "0", "3")},
                          {T::C4, T::C4, qpoly("0", "1/3", "-11/3")},
                          {T::C5, T::C2, qpoly("0", "0", "3")},
                          {T::C5, T::C5, qpoly("0", "1/3", "-11/3")},
                          {T::C6p, T::C6p, one},
                          {T::C6, T::C1, one},
                          {T::C6, T::C4, qpoly("0", "1/2", "-11/2")},
                          {T::C6, T::C6p, qpoly("0", "0", "5"), true},
                          {T::C6, T::C6, qpoly("1/18", "-5/9", "-11/18"), true},
                          {T::C7, T::C4, qpoly("0", "1/6", "1/6")},
                          {T::C7, T::C7, qpoly("1/6", "-1/3", "-1/2")},
                          {T::C8, T::C8, qpoly("1/9", "-1/9", "-2/9")}}));
  return t;
}

std::vector<ClassTypeSpec> build_specs() {
  std::vector<ClassTypeSpec> s;
  const SymExpr group = term("1", 8, -1) + term("-1", 6, -1) + term("1", 5, -1) + term("-1", 3, -1);
  // (q^2 - q + 1 - d) / (c d)
  auto regular = [](const char* inv_c, const char* minus_inv_c) {
    return term(inv_c, 2, -1) + term(minus_inv_c, 1, -1) + term(inv_c, 0, -1) + term(minus_inv_c, 0, 0);
  };
  s.push_back({T::C1, group, constant("1"), qpoly("1", "-1", "0")});
  s.push_back({T::C2, term("1", 4, -1) + term("1", 3, -1), constant("1"), qpoly("0", "-1", "0")});
  s.push_back({T::C3, term("1", 2), term("1", 0, 1), qpoly("0", "0", "0")});
  s.push_back({T::C4, term("1", 4, -1) + term("1", 3, -1) + term("-1", 2, -1) + term("-1", 1, -1),
               term("1", 1, -1) + term("1", 0, -1) + constant("-1"), qpoly("0", "-1", "1")});
  s.push_back({T::C5, term("1", 2, -1) + term("1", 1, -1), term("1", 1, -1) + term("1", 0, -1) + constant("-1"),
               qpoly("0", "0", "1")});
  s.push_back({T::C6p, qpoly("1", "2", "1"), delta(3, "1"), qpoly("0", "0", "2")});
  s.push_back({T::C6, term("1", 2, -1) + term("2", 1, -1) + term("1", 0, -1), regular("1/6", "-1/6"), qpoly("0", "0", "2")});
  s.push_back({T::C7, term("1", 2, -1) + term("-1", 0, -1), regular("1/2", "-1/2") + delta(1, "-1"), qpoly("0", "0", "0")});
  s.push_back({T::C8, term("1", 2, -1) + term("-1", 1, -1) + term("1", 0, -1), regular("1/3", "-1/3"), qpoly("0", "0", "-1")});
  return s;
}

std::string rational_coeff(const Rational& c, bool first) {
  std::string s;
  if (sgn(c) < 0)
    s = first ? "-" : " - ";
  else if (!first)
    s = " + ";
  return s + Rational(abs(c)).get_str();
}

}  // namespace

std::string_view type_name(ClassType t) {
  static constexpr std::array<std::string_view, kNumTypes> names = {"C1", "C2", "C3", "C4", "C5", "C6'", "C6", "C7", "C8"};
  return names[idx(t)];
}

ClassType parse_type(std::string_view s) {
  if (s == "C6p" || s == "C6prime") return ClassType::C6p;
  for (auto t : kAllTypes)
    if (type_name(t) == s) return t;
  throw Error(ErrorCode::InvalidArgument, "unknown class type " + std::string(s));
}

SymExpr qpoly(const char* c2, const char* c1, const char* c0) {
  SymExpr e;
  const char* cs[3] = {c0, c1, c2};
  for (int i = 0; i < 3; ++i) {
    Rational r(cs[i]);
    r.canonicalize();
    if (sgn(r) != 0) e.terms.push_back({r, i, 0});
  }
  return e;
}

Rational SymExpr::eval(int64_t q, int64_t d) const {
  Rational v = 0;
  for (const auto& t : terms) {
    Rational x = t.coeff;
    for (int i = 0; i < t.qexp; ++i) x *= q;
    for (int i = 0; i < t.dexp; ++i) x *= d;
    for (int i = 0; i > t.dexp; --i) x /= d;
    v += x;
  }
  if (d == 1) v += delta1;
  if (d == 3) v += delta3;
  return v;
}

std::string SymExpr::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    os << rational_coeff(t.coeff, first);
    if (t.qexp > 0) os << "*q" << (t.qexp > 1 ? "^" + std::to_string(t.qexp) : "");
    if (t.dexp > 0) os << "*d" << (t.dexp > 1 ? "^" + std::to_string(t.dexp) : "");
    if (t.dexp < 0) os << "/d" << (t.dexp < -1 ? "^" + std::to_string(-t.dexp) : "");
    first = false;
  }
  if (sgn(delta1) != 0) {
    os << rational_coeff(delta1, first) << "*delta(1,d)";
    first = false;
  }
  if (sgn(delta3) != 0) {
    os << rational_coeff(delta3, first) << "*delta(3,d)";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

const std::vector<ClassTypeSpec>& class_type_specs() {
  static const std::vector<ClassTypeSpec> specs = build_specs();
  return specs;
}

const std::vector<SymbolicPowerTable>& symbolic_power_tables() {
  static const std::vector<SymbolicPowerTable> tables = build_tables();
  return tables;
}

const SymbolicPowerTable& select_power_table(uint32_t q, int k) {
  for (const auto& t : symbolic_power_tables())
    if (t.k == k && t.applies(q)) return t;
  throw Error(ErrorCode::InvalidArgument, "no power table for k = " + std::to_string(k) + " at q = " + std::to_string(q));
}

uint32_t schur_d(uint32_t q) { return (q + 1) % 3 == 0 ? 3 : 1; }

Integer psu3_order(uint32_t q) {
  Integer Q = q;
  return Q * Q * Q * (Q * Q - 1) * (Q * Q * Q + 1) / schur_d(q);
}

int64_t InstantiatedSpectrum::total_classes() const {
  int64_t n = 0;
  for (const auto& t : types) n += t.count;
  return n;
}

namespace {

void check_prime_power(uint32_t q) {
  if (!prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
}

std::array<int64_t, kNumTypes> instantiate_counts(uint32_t q, uint32_t d) {
  std::array<int64_t, kNumTypes> c{};
  for (const auto& spec : class_type_specs()) {
    Rational v = spec.class_count.eval(q, d);
    if (!is_integer(v) || sgn(v) < 0)
      throw Error(ErrorCode::NonIntegerResult, "class count of " + std::string(type_name(spec.type)) + " at q = " +
                                                   std::to_string(q) + " is " + v.get_str());
    c[idx(spec.type)] = to_int64(v);
  }
  return c;
}

}  // namespace

TypeMatrix symbolic_power_table(uint32_t q, int k) {
  check_prime_power(q);
  if (k < 2 || k > 4) throw Error(ErrorCode::InvalidArgument, "symbolic power tables exist for k = 2, 3, 4");
  const uint32_t d = schur_d(q);
  const auto counts = instantiate_counts(q, d);
  const auto& table = select_power_table(q, k);
  TypeMatrix m{};
  for (const auto& e : table.entries) {
    Rational v = e.value.eval(q, d);
    if (!is_integer(v) || sgn(v) < 0)
      throw Error(ErrorCode::NonIntegerResult, "power table entry (" + std::string(type_name(e.target)) + ", " +
                                                   std::string(type_name(e.source)) + ") at q = " + std::to_string(q) +
                                                   " is " + v.get_str());
    m[idx(e.target)][idx(e.source)] += to_int64(v);
  }
  for (auto src : kAllTypes) {
    int64_t sum = 0;
    for (auto dst : kAllTypes) sum += m[idx(dst)][idx(src)];
    if (sum != counts[idx(src)])
      throw Error(ErrorCode::ColumnSumMismatch, "k = " + std::to_string(k) + ", case " + table.case_label + ", column " +
                                                    std::string(type_name(src)) + " at q = " + std::to_string(q) +
                                                    " sums to " + std::to_string(sum) + ", expected " +
                                                    std::to_string(counts[idx(src)]));
  }
  return m;
}

InstantiatedSpectrum class_spectrum(uint32_t q) {
  check_prime_power(q);
  InstantiatedSpectrum s;
  s.q = q;
  s.d = schur_d(q);
  s.group_order = psu3_order(q);
  const auto counts = instantiate_counts(q, s.d);
  for (const auto& spec : class_type_specs()) {
    auto& t = s.types[idx(spec.type)];
    t.type = spec.type;
    t.count = counts[idx(spec.type)];
    Rational c = spec.centralizer_order.eval(q, s.d);
    if (!is_integer(c)) throw Error(ErrorCode::NonIntegerResult, "centralizer order is not an integer");
    t.centralizer_order = c.get_num();
    t.chi_v = to_int64(spec.chi_v.eval(q, s.d));
  }
  for (int k = 2; k <= 4; ++k) s.power[k - 2] = symbolic_power_table(q, k);
  return s;
}

int64_t chi_on_power_types(const InstantiatedSpectrum& s, ClassType t, int k) {
  if (k == 1) return s.at(t).count * s.at(t).chi_v;
  if (k < 1 || k > 4) throw Error(ErrorCode::InvalidArgument, "chi_on_power_types needs 1 <= k <= 4");
  int64_t total = 0;
  const auto& m = s.power_table(k);
  for (auto dst : kAllTypes) total += m[idx(dst)][idx(t)] * s.at(dst).chi_v;
  return total;
}

}  // namespace rdbound
