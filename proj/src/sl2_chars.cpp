#include "rdbound/sl2_chars.hpp"

#include <map>
#include <numeric>
#include <optional>

#include "rdbound/error.hpp"
#include "rdbound/numtheory.hpp"
#include "rdbound/oracle.hpp"

namespace rdbound {

namespace {

bool is_square_mod_p(int64_t k, uint32_t p, uint32_t f) {
  if (f % 2 == 0) return true;
  return powmod(static_cast<uint64_t>(mod_floor(k, p)), (p - 1) / 2, p) == 1;
}

Mat2 mat2(Field::Elem a, Field::Elem b, Field::Elem c, Field::Elem d) {
  Mat2 m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// Companion matrix of x^2 - t x + 1 with multiplicative order q + 1.
Mat2 nonsplit_generator(const Field& F, uint32_t q) {
  const auto primes = prime_divisors(q + 1);
  for (Field::Elem t = 0; t < F.size(); ++t) {
    const Mat2 b = mat2(0, F.neg(1), 1, t);
    if (mat_pow(F, b, q + 1) != identity_matrix<2>()) continue;
    bool ok = true;
    for (uint64_t r : primes)
      if (mat_pow(F, b, (q + 1) / r) == identity_matrix<2>()) ok = false;
    if (ok) return b;
  }
  throw Error(ErrorCode::InvalidArgument, "no element of order q + 1 found");
}

// Sums terms bucketed by tag, converting each bucket to a rational before combining.
class BucketSum {
 public:
  void add(int tag, const CycNumber& x, const Rational& w) {
    auto it = buckets_.find(tag);
    if (it == buckets_.end()) it = buckets_.emplace(tag, CycAccumulator(1)).first;
    it->second.add(x, w);
  }
  CycNumber total() const {
    Rational r = 0;
    CycNumber rest;
    for (const auto& [tag, acc] : buckets_) {
      CycNumber v = acc.value();
      if (v.is_rational())
        r += v.to_rational();
      else
        rest += v;
    }
    return rest + CycNumber(r);
  }

 private:
  std::map<int, CycAccumulator> buckets_;
};

}  // namespace

int Sl2ClassData::index_of(const std::string& label) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].label == label) return static_cast<int>(i);
  throw Error(ErrorCode::InvalidArgument, "no class labelled " + label);
}

int Sl2ClassData::galois_tag(int cls) const {
  switch (classes[cls].kind) {
    case Sl2Kind::Identity:
    case Sl2Kind::MinusIdentity: return 0;
    case Sl2Kind::Unipotent: return 1;
    case Sl2Kind::MinusUnipotent: return 2;
    case Sl2Kind::Split: return 3;
    case Sl2Kind::Nonsplit: return 4;
  }
  return 0;
}

int Sl2ClassData::power(int cls, int64_t k) const {
  const Sl2Class& c = classes.at(cls);
  const bool odd = p != 2;
  auto central = [&](bool minus) { return index_of(minus ? "z" : "1"); };
  switch (c.kind) {
    case Sl2Kind::Identity: return cls;
    case Sl2Kind::MinusIdentity: return central(mod_floor(k, 2) == 1);
    case Sl2Kind::Unipotent:
    case Sl2Kind::MinusUnipotent: {
      const bool minus = c.kind == Sl2Kind::MinusUnipotent && mod_floor(k, 2) == 1;
      if (mod_floor(k, p) == 0) return central(minus);
      if (!odd) return index_of("c");
      const bool same = is_square_mod_p(k, p, f);
      const bool is_c = (c.param == 0) == same;
      return index_of(std::string(minus ? "z" : "") + (is_c ? "c" : "d"));
    }
    case Sl2Kind::Split:
    case Sl2Kind::Nonsplit: {
      const int64_t n = c.kind == Sl2Kind::Split ? q - 1 : q + 1;
      const int64_t r = mod_floor(k * c.param, n);
      if (r == 0) return central(false);
      if (odd && 2 * r == n) return central(true);
      return index_of(std::string(c.kind == Sl2Kind::Split ? "a" : "b") + std::to_string(std::min(r, n - r)));
    }
  }
  return cls;
}

Sl2ClassData sl2_class_data(uint32_t q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (q > 125) throw Error(ErrorCode::UnsupportedQ, "SL(2,q) tables are built for q <= 125");
  Sl2ClassData cd;
  cd.q = q;
  cd.p = static_cast<uint32_t>(pp->first);
  cd.f = static_cast<uint32_t>(pp->second);
  const uint64_t G = static_cast<uint64_t>(q) * (static_cast<uint64_t>(q) * q - 1);
  cd.group_order = G;
  const uint64_t p = cd.p;
  auto add = [&](std::string label, Sl2Kind kind, int64_t param, uint64_t cent, uint64_t order) {
    cd.classes.push_back({std::move(label), kind, param, G / cent, cent, order});
  };
  add("1", Sl2Kind::Identity, 0, G, 1);
  if (p == 2) {
    add("c", Sl2Kind::Unipotent, 0, q, 2);
    for (int64_t l = 1; l <= (q - 2) / 2; ++l)
      add("a" + std::to_string(l), Sl2Kind::Split, l, q - 1, (q - 1) / std::gcd<int64_t>(l, q - 1));
    for (int64_t m = 1; m <= q / 2; ++m)
      add("b" + std::to_string(m), Sl2Kind::Nonsplit, m, q + 1, (q + 1) / std::gcd<int64_t>(m, q + 1));
    return cd;
  }
  add("z", Sl2Kind::MinusIdentity, 0, G, 2);
  add("c", Sl2Kind::Unipotent, 0, 2 * q, p);
  add("d", Sl2Kind::Unipotent, 1, 2 * q, p);
  add("zc", Sl2Kind::MinusUnipotent, 0, 2 * q, 2 * p);
  add("zd", Sl2Kind::MinusUnipotent, 1, 2 * q, 2 * p);
  for (int64_t l = 1; l <= (static_cast<int64_t>(q) - 3) / 2; ++l)
    add("a" + std::to_string(l), Sl2Kind::Split, l, q - 1, (q - 1) / std::gcd<int64_t>(l, q - 1));
  for (int64_t m = 1; m <= (static_cast<int64_t>(q) - 1) / 2; ++m)
    add("b" + std::to_string(m), Sl2Kind::Nonsplit, m, q + 1, (q + 1) / std::gcd<int64_t>(m, q + 1));
  return cd;
}

CycNumber sqrt_eps_q(uint32_t p, uint32_t f) {
  if (f % 2 == 0) return CycNumber(Rational(static_cast<long>(ipow(p, f / 2))));
  std::vector<CycNumber::Term> terms;
  for (uint32_t a = 1; a < p; ++a) terms.emplace_back(a, Rational(powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1));
  return CycNumber::from_terms(p, std::move(terms)) * Rational(static_cast<long>(ipow(p, (f - 1) / 2)));
}

CharacterTable sl2_character_table(const Sl2ClassData& cd, bool check) {
  const int64_t q = cd.q;
  const bool odd = cd.p != 2;
  const size_t n = cd.classes.size();
  CharacterTable t;
  auto add_row = [&](std::string name, int family, auto&& value) {
    std::vector<CycNumber> row;
    row.reserve(n);
    for (const auto& c : cd.classes) row.push_back(value(c));
    t.degrees.push_back(to_int64(row[0].to_rational()));
    t.names.push_back(std::move(name));
    t.family.push_back(family);
    t.rows.push_back(std::move(row));
  };
  auto central_sign = [](const Sl2Class& c, int64_t i) {
    const bool minus = c.kind == Sl2Kind::MinusIdentity || c.kind == Sl2Kind::MinusUnipotent;
    return (minus && i % 2 != 0) ? -1L : 1L;
  };

  add_row("1", 0, [](const Sl2Class&) { return CycNumber(1); });
  add_row("St", 1, [&](const Sl2Class& c) -> CycNumber {
    switch (c.kind) {
      case Sl2Kind::Identity:
      case Sl2Kind::MinusIdentity: return CycNumber(q);
      case Sl2Kind::Split: return CycNumber(1);
      case Sl2Kind::Nonsplit: return CycNumber(-1);
      default: return CycNumber(0);
    }
  });
  const int64_t nchi = odd ? (q - 3) / 2 : (q - 2) / 2;
  for (int64_t i = 1; i <= nchi; ++i)
    add_row("chi" + std::to_string(i), 2, [&](const Sl2Class& c) -> CycNumber {
      switch (c.kind) {
        case Sl2Kind::Identity:
        case Sl2Kind::MinusIdentity: return CycNumber((q + 1) * central_sign(c, i));
        case Sl2Kind::Unipotent:
        case Sl2Kind::MinusUnipotent: return CycNumber(central_sign(c, i));
        case Sl2Kind::Split:
          return CycNumber::zeta(q - 1, i * c.param) + CycNumber::zeta(q - 1, -i * c.param);
        case Sl2Kind::Nonsplit: return CycNumber(0);
      }
      return CycNumber(0);
    });
  const int64_t ntheta = odd ? (q - 1) / 2 : q / 2;
  for (int64_t j = 1; j <= ntheta; ++j)
    add_row("theta" + std::to_string(j), 3, [&](const Sl2Class& c) -> CycNumber {
      switch (c.kind) {
        case Sl2Kind::Identity:
        case Sl2Kind::MinusIdentity: return CycNumber((q - 1) * central_sign(c, j));
        case Sl2Kind::Unipotent:
        case Sl2Kind::MinusUnipotent: return CycNumber(-central_sign(c, j));
        case Sl2Kind::Split: return CycNumber(0);
        case Sl2Kind::Nonsplit:
          return -(CycNumber::zeta(q + 1, j * c.param) + CycNumber::zeta(q + 1, -j * c.param));
      }
      return CycNumber(0);
    });
  if (odd) {
    const long eps = q % 4 == 1 ? 1 : -1;
    const CycNumber s = sqrt_eps_q(cd.p, cd.f);
    const Rational half(1, 2);
    for (int sg : {1, -1}) {
      const CycNumber ss = s * Rational(sg);
      add_row(sg == 1 ? "xi1" : "xi2", 4, [&](const Sl2Class& c) -> CycNumber {
        const long zs = c.kind == Sl2Kind::MinusIdentity || c.kind == Sl2Kind::MinusUnipotent ? eps : 1;
        switch (c.kind) {
          case Sl2Kind::Identity:
          case Sl2Kind::MinusIdentity: return CycNumber(make_rational(zs * (q + 1), 2));
          case Sl2Kind::Unipotent:
          case Sl2Kind::MinusUnipotent:
            return ((c.param == 0 ? ss : -ss) + CycNumber(1)) * (half * zs);
          case Sl2Kind::Split: return CycNumber(c.param % 2 == 0 ? 1 : -1);
          case Sl2Kind::Nonsplit: return CycNumber(0);
        }
        return CycNumber(0);
      });
    }
    for (int sg : {1, -1}) {
      const CycNumber ss = s * Rational(sg);
      add_row(sg == 1 ? "eta1" : "eta2", 5, [&](const Sl2Class& c) -> CycNumber {
        const long zs = c.kind == Sl2Kind::MinusIdentity || c.kind == Sl2Kind::MinusUnipotent ? -eps : 1;
        switch (c.kind) {
          case Sl2Kind::Identity:
          case Sl2Kind::MinusIdentity: return CycNumber(make_rational(zs * (q - 1), 2));
          case Sl2Kind::Unipotent:
          case Sl2Kind::MinusUnipotent:
            return ((c.param == 0 ? ss : -ss) - CycNumber(1)) * (half * zs);
          case Sl2Kind::Split: return CycNumber(0);
          case Sl2Kind::Nonsplit: return CycNumber(c.param % 2 == 0 ? -1 : 1);
        }
        return CycNumber(0);
      });
    }
  }
  if (t.rows.size() != n)
    throw Error(ErrorCode::OrthogonalityFailure,
                "built " + std::to_string(t.rows.size()) + " characters for " + std::to_string(n) + " classes");
  if (check) check_orthogonality(cd, t);
  return t;
}

namespace {

// Twice a table entry as integer multiples of powers of zeta_n.
struct HalfIntValue {
  uint32_t n = 1;
  std::vector<std::pair<uint32_t, int64_t>> terms;
};

std::optional<HalfIntValue> to_half_int(const CycNumber& x) {
  HalfIntValue v;
  v.n = x.conductor();
  for (const auto& [e, c] : x.terms()) {
    Rational twice = c * 2;
    if (twice.get_den() != 1 || !twice.get_num().fits_slong_p()) return std::nullopt;
    v.terms.emplace_back(e, twice.get_num().get_si());
  }
  return v;
}

// Sum over buckets of bucket-wise products, divided by `scale`; each bucket is
// reduced on its own before the buckets are combined.
class IntBucketSum {
 public:
  void add_product(int tag, const HalfIntValue& a, const HalfIntValue& b_conj_source, int64_t weight) {
    if (a.terms.empty() || b_conj_source.terms.empty()) return;
    const uint32_t n = std::lcm(a.n, b_conj_source.n);
    const uint32_t sa = n / a.n, sb = n / b_conj_source.n;
    auto& bucket = buckets_[tag];
    if (bucket.n != n) {
      const uint32_t m = std::lcm(bucket.n, n);
      const uint32_t grow = m / bucket.n;
      for (auto& t : bucket.terms) t.first *= grow;
      bucket.n = m;
    }
    const uint32_t s = bucket.n / n;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b_conj_source.terms) {
        const int64_t e = mod_floor(static_cast<int64_t>(ea) * sa - static_cast<int64_t>(eb) * sb, n);
        bucket.terms.emplace_back(static_cast<uint32_t>(e) * s, ca * cb * weight);
      }
  }
  CycNumber total(const Rational& scale) const {
    Rational r = 0;
    CycNumber rest;
    for (const auto& [tag, b] : buckets_) {
      std::vector<CycNumber::Term> terms;
      terms.reserve(b.terms.size());
      for (const auto& [e, c] : b.terms) terms.emplace_back(e, Rational(static_cast<long>(c)));
      CycNumber v = CycNumber::from_terms(b.n, std::move(terms));
      if (v.is_rational())
        r += v.to_rational();
      else
        rest += v;
    }
    return (rest + CycNumber(r)) / scale;
  }

 private:
  std::map<int, HalfIntValue> buckets_;
};

}  // namespace

void check_orthogonality(const Sl2ClassData& cd, const CharacterTable& t) {
  const size_t n = cd.classes.size();
  const size_t nrows = t.rows.size();
  std::vector<std::vector<HalfIntValue>> half(nrows);
  bool exact_path = false;
  for (size_t i = 0; i < nrows && !exact_path; ++i)
    for (const auto& v : t.rows[i]) {
      auto h = to_half_int(v);
      if (!h) {
        exact_path = true;
        break;
      }
      half[i].push_back(std::move(*h));
    }
  std::vector<Rational> inv_cent;
  for (const auto& c : cd.classes) inv_cent.push_back(make_rational(1L, static_cast<long>(c.centralizer_order)));

  auto row_product = [&](size_t i, size_t j) {
    if (!exact_path) {
      IntBucketSum s;
      for (size_t c = 0; c < n; ++c)
        s.add_product(cd.galois_tag(static_cast<int>(c)), half[i][c], half[j][c],
                      static_cast<int64_t>(cd.group_order / cd.classes[c].centralizer_order));
      return s.total(Rational(static_cast<long>(4 * cd.group_order)));
    }
    BucketSum s;
    for (size_t c = 0; c < n; ++c)
      if (!t.rows[i][c].terms().empty() && !t.rows[j][c].terms().empty())
        s.add(cd.galois_tag(static_cast<int>(c)), t.rows[i][c] * t.rows[j][c].conj(), inv_cent[c]);
    return s.total();
  };
  auto column_product = [&](size_t a, size_t b) {
    if (!exact_path) {
      IntBucketSum s;
      for (size_t i = 0; i < nrows; ++i) s.add_product(t.family[i], half[i][a], half[i][b], 1);
      return s.total(Rational(4));
    }
    BucketSum s;
    for (size_t i = 0; i < nrows; ++i)
      if (!t.rows[i][a].terms().empty() && !t.rows[i][b].terms().empty())
        s.add(t.family[i], t.rows[i][a] * t.rows[i][b].conj(), Rational(1));
    return s.total();
  };

  for (size_t i = 0; i < nrows; ++i)
    for (size_t j = i; j < nrows; ++j) {
      const CycNumber total = row_product(i, j);
      if (!(total == CycNumber(i == j ? 1 : 0)))
        throw Error(ErrorCode::OrthogonalityFailure, "q = " + std::to_string(cd.q) + ": rows " + t.names[i] + ", " +
                                                          t.names[j] + " give " + total.to_string());
    }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      const CycNumber total = column_product(a, b);
      const CycNumber expect(a == b ? Rational(static_cast<long>(cd.classes[a].centralizer_order)) : Rational(0));
      if (!(total == expect))
        throw Error(ErrorCode::OrthogonalityFailure, "q = " + std::to_string(cd.q) + ": columns " +
                                                          cd.classes[a].label + ", " + cd.classes[b].label + " give " +
                                                          total.to_string());
    }
}

ProjectiveCharacter smallest_projective_character(const Sl2ClassData& cd, const CharacterTable& t) {
  ProjectiveCharacter out;
  out.q = cd.q;
  std::string name;
  if (cd.p != 2) {
    name = "eta1";
  } else {
    // Among the theta_j, take the one with the smallest field of values.
    int64_t best_j = 1, best_g = 0;
    for (int64_t j = 1; j <= cd.q / 2; ++j) {
      const int64_t g = std::gcd<int64_t>(j, cd.q + 1);
      if (g > best_g) {
        best_g = g;
        best_j = j;
      }
    }
    name = "theta" + std::to_string(best_j);
  }
  for (size_t i = 0; i < t.names.size(); ++i)
    if (t.names[i] == name) {
      out.name = name;
      out.degree = t.degrees[i];
      out.values = t.rows[i];
    }
  if (cd.q == 9)
    out.note = "the triple cover of A6 has a faithful projective representation of degree 3; degree 4 is used";
  return out;
}

ProjectiveCharacter smallest_projective_character(uint32_t q) {
  const auto cd = sl2_class_data(q);
  return smallest_projective_character(cd, sl2_character_table(cd, false));
}

Mat2 class_representative(const Sl2ClassData& cd, const Field& F, int cls) {
  const Sl2Class& c = cd.classes.at(cls);
  const Field::Elem one = 1, minus = F.neg(1);
  switch (c.kind) {
    case Sl2Kind::Identity: return identity_matrix<2>();
    case Sl2Kind::MinusIdentity: return scalar_matrix<2>(minus);
    case Sl2Kind::Unipotent:
    case Sl2Kind::MinusUnipotent: {
      const Field::Elem s = c.kind == Sl2Kind::Unipotent ? one : minus;
      const Field::Elem top = c.param == 0 ? one : F.exp(1);
      return mat_scale(F, mat2(1, top, 0, 1), s);
    }
    case Sl2Kind::Split: {
      const Field::Elem a = F.exp(c.param);
      return mat2(a, 0, 0, F.inv(a));
    }
    case Sl2Kind::Nonsplit: return mat_pow(F, nonsplit_generator(F, cd.q), static_cast<uint64_t>(c.param));
  }
  return identity_matrix<2>();
}

Sl2Classifier::Sl2Classifier(const Sl2ClassData& cd, const Field& F) : cd_(cd), F_(F), by_trace_(F.size(), -1) {
  for (size_t i = 0; i < cd.classes.size(); ++i) {
    const auto kind = cd.classes[i].kind;
    if (kind != Sl2Kind::Split && kind != Sl2Kind::Nonsplit) continue;
    const Mat2 m = class_representative(cd, F, static_cast<int>(i));
    by_trace_[F.add(m(0, 0), m(1, 1))] = static_cast<int>(i);
  }
}

int Sl2Classifier::classify(const Mat2& g) const {
  const Field& F = F_;
  if (!in_sl2(F, g)) throw Error(ErrorCode::NotInGroup, "matrix is not in SL(2,q)");
  const Field::Elem two = F.from_int(2);
  if (is_scalar(g)) return cd_.index_of(g(0, 0) == 1 ? "1" : "z");
  const Field::Elem tr = F.add(g(0, 0), g(1, 1));
  const bool plus = tr == two, minus = tr == F.neg(two);
  if (plus || minus) {
    if (cd_.p == 2) return cd_.index_of("c");
    const Mat2 h = plus ? g : mat_scale(F, g, F.neg(1));
    Mat2 nil = h;
    nil(0, 0) = F.sub(nil(0, 0), 1);
    nil(1, 1) = F.sub(nil(1, 1), 1);
    const bool use_e1 = nil(0, 0) != 0 || nil(1, 0) != 0;
    const Field::Elem v0 = use_e1 ? 1 : 0, v1 = use_e1 ? 0 : 1;
    const Field::Elem n0 = F.add(F.mul(nil(0, 0), v0), F.mul(nil(0, 1), v1));
    const Field::Elem n1 = F.add(F.mul(nil(1, 0), v0), F.mul(nil(1, 1), v1));
    const Field::Elem det_nv = F.sub(F.mul(n0, v1), F.mul(n1, v0));
    const bool square = F.dlog(det_nv) % 2 == 0;
    return cd_.index_of(std::string(plus ? "" : "z") + (square ? "c" : "d"));
  }
  const int idx = by_trace_[tr];
  if (idx < 0) throw Error(ErrorCode::NotInGroup, "trace not attained by any class");
  return idx;
}

int classify_matrix(const Sl2ClassData& cd, const Field& F, const Mat2& g) { return Sl2Classifier(cd, F).classify(g); }

}  // namespace rdbound
