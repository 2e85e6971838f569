#include "rdbound/molien.hpp"

#include <algorithm>
#include <map>

#include "rdbound/error.hpp"
#include "rdbound/psu3_data.hpp"
#include "rdbound/sl2_chars.hpp"

namespace rdbound {

namespace {

Integer checked_dimension(const Rational& v, int k) {
  if (!is_integer(v) || sgn(v) < 0)
    throw Error(ErrorCode::NonIntegerResult,
                "degree " + std::to_string(k) + " invariant dimension evaluates to " + v.get_str());
  return v.get_num();
}

}  // namespace

int ClassFunctionInput::max_degree() const {
  if (classes.empty()) return 0;
  size_t m = classes.front().chi_powers.size();
  for (const auto& c : classes) m = std::min(m, c.chi_powers.size());
  return static_cast<int>(m);
}

std::vector<CycNumber> sym_power_chars(const std::vector<CycNumber>& values, int K) {
  if (K > static_cast<int>(values.size()))
    throw Error(ErrorCode::InvalidArgument, "need chi(g^i) for i up to " + std::to_string(K));
  std::vector<CycNumber> s{CycNumber(1)};
  for (int k = 1; k <= K; ++k) {
    CycNumber acc;
    for (int i = 1; i <= k; ++i)
      if (!values[i - 1].terms().empty() && !s[k - i].terms().empty()) acc += s[k - i] * values[i - 1];
    s.push_back(acc / Rational(k));
  }
  return s;
}

CycNumber sym_power_char(const std::vector<CycNumber>& values, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative symmetric power");
  return sym_power_chars(values, k).back();
}

CycNumber sym_power_char_direct(const std::vector<CycNumber>& values, int k) {
  if (k == 3) {
    if (values.size() < 3) throw Error(ErrorCode::InvalidArgument, "need chi(g), chi(g^2), chi(g^3)");
    const auto& a = values[0];
    return (a * a * a + Rational(3) * a * values[1] + Rational(2) * values[2]) / Rational(6);
  }
  if (k == 4) {
    if (values.size() < 4) throw Error(ErrorCode::InvalidArgument, "need chi(g) .. chi(g^4)");
    const auto& a = values[0];
    const auto& b = values[1];
    return (a * a * a * a + Rational(6) * a * a * b + Rational(3) * b * b + Rational(8) * a * values[2] +
            Rational(6) * values[3]) /
           Rational(24);
  }
  throw Error(ErrorCode::InvalidArgument, "direct symmetric power formulas exist for k = 3, 4");
}

std::vector<Integer> molien_prefix(const ClassFunctionInput& input, int K) {
  if (K > input.max_degree())
    throw Error(ErrorCode::InvalidArgument,
                "class data covers degrees up to " + std::to_string(input.max_degree()) + ", asked for " + std::to_string(K));
  std::vector<std::map<int, CycAccumulator>> buckets(K + 1);
  for (const auto& c : input.classes) {
    std::vector<CycNumber> dual;
    dual.reserve(K);
    for (int i = 0; i < K; ++i) dual.push_back(c.chi_powers[i].conj());
    const auto s = sym_power_chars(dual, K);
    Rational w(c.multiplicity, c.centralizer_order);
    w.canonicalize();
    for (int k = 0; k <= K; ++k) {
      auto it = buckets[k].find(c.galois_tag);
      if (it == buckets[k].end()) it = buckets[k].emplace(c.galois_tag, CycAccumulator(1)).first;
      it->second.add(s[k], w);
    }
  }
  std::vector<Integer> m;
  for (int k = 0; k <= K; ++k) {
    Rational r = 0;
    CycNumber rest;
    for (const auto& [tag, acc] : buckets[k]) {
      CycNumber v = acc.value();
      if (v.is_rational())
        r += v.to_rational();
      else
        rest += v;
    }
    if (!rest.terms().empty()) {
      rest += CycNumber(r);
      if (!rest.is_rational())
        throw Error(ErrorCode::NonIntegerResult, "degree " + std::to_string(k) + " invariant dimension is irrational");
      r = rest.to_rational();
    }
    m.push_back(checked_dimension(r, k));
  }
  return m;
}

Integer invariant_dimension(const ClassFunctionInput& input, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  return molien_prefix(input, k).back();
}

int64_t closed_form_m4(uint32_t q) {
  const int64_t Q = q;
  switch (q % 6) {
    case 1: return (Q - 1) / 6;
    case 2: return (Q + 10) / 6;
    case 3: return (Q - 3) / 6;
    case 4: return (Q + 2) / 6;
    case 5: return (Q + 7) / 6;
  }
  throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
}

ClassFunctionInput psl2_molien_input(uint32_t q, int K) {
  const auto cd = sl2_class_data(q);
  const auto table = sl2_character_table(cd, false);
  const auto chi = smallest_projective_character(cd, table);
  ClassFunctionInput in;
  for (size_t c = 0; c < cd.classes.size(); ++c) {
    ClassFunctionEntry e;
    e.centralizer_order = Integer(static_cast<unsigned long>(cd.classes[c].centralizer_order));
    e.galois_tag = cd.galois_tag(static_cast<int>(c));
    for (int k = 1; k <= K; ++k) e.chi_powers.push_back(chi.values[cd.power(static_cast<int>(c), k)]);
    in.classes.push_back(std::move(e));
  }
  return in;
}

ClassFunctionInput psu3_molien_input(const Psu3Reps& reps, int K) {
  const auto spec = class_spectrum(reps.q);
  const auto seqs = power_type_sequences(reps, K);
  std::map<std::vector<ClassType>, int64_t> grouped;
  for (const auto& s : seqs) ++grouped[s];
  ClassFunctionInput in;
  for (const auto& [seq, count] : grouped) {
    ClassFunctionEntry e;
    e.centralizer_order = spec.at(seq.front()).centralizer_order;
    e.multiplicity = Integer(static_cast<long>(count));
    for (auto t : seq) e.chi_powers.emplace_back(static_cast<long>(spec.at(t).chi_v));
    in.classes.push_back(std::move(e));
  }
  return in;
}

ClassFunctionInput psu3_molien_input(uint32_t q, int K) { return psu3_molien_input(build_representatives(q), K); }

std::vector<Integer> psu3_symbolic_prefix(uint32_t q) {
  const auto s = class_spectrum(q);
  // sum over classes of type t of h(chi(g^k))
  auto power_sum = [&](ClassType t, int k, int exponent) -> Rational {
    Rational total = 0;
    auto h = [&](int64_t v) {
      Rational r = 1;
      for (int i = 0; i < exponent; ++i) r *= v;
      return r;
    };
    if (k == 1) return Rational(Rational(s.at(t).count) * h(s.at(t).chi_v));
    const auto& m = s.power_table(k);
    for (auto dst : kAllTypes) total += Rational(m[idx(dst)][idx(t)]) * h(s.at(dst).chi_v);
    return total;
  };
  Rational m2 = 0, m3 = 0, m4 = 0, m1 = 0, m0 = 0;
  for (auto t : kAllTypes) {
    if (s.at(t).count == 0) continue;
    const Rational x = s.at(t).chi_v;
    const Rational inv_c = Rational(1) / Rational(s.at(t).centralizer_order);
    const Rational count = s.at(t).count;
    const Rational s2 = power_sum(t, 2, 1), s3 = power_sum(t, 3, 1), s4 = power_sum(t, 4, 1);
    const Rational s22 = power_sum(t, 2, 2);
    m0 += count * inv_c;
    m1 += count * x * inv_c;
    m2 += (count * x * x + s2) * inv_c / 2;
    m3 += (count * x * x * x + 3 * x * s2 + 2 * s3) * inv_c / 6;
    m4 += (count * x * x * x * x + 6 * x * x * s2 + 3 * s22 + 8 * x * s3 + 6 * s4) * inv_c / 24;
  }
  return {checked_dimension(m0, 0), checked_dimension(m1, 1), checked_dimension(m2, 2), checked_dimension(m3, 3),
          checked_dimension(m4, 4)};
}

}  // namespace rdbound
