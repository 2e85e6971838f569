#include "rdbound/psu3_reps.hpp"

#include <algorithm>
#include <map>

#include "rdbound/error.hpp"
#include "rdbound/numtheory.hpp"
#include "rdbound/oracle.hpp"

namespace rdbound {

namespace {

using Elem = Field::Elem;
using Poly = std::vector<Elem>;  // lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_rem(const Field& F, Poly a, const Poly& b) {
  trim(a);
  const Elem lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const Elem c = F.mul(a.back(), lead_inv);
    const size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
    trim(a);
  }
  return a;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

Poly poly_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return poly_rem(F, r, m);
}

Poly t_power_mod(const Field& F, uint64_t e, const Poly& m) {
  Poly result{1}, base{0, 1};
  base = poly_rem(F, base, m);
  while (e) {
    if (e & 1) result = poly_mulmod(F, result, base, m);
    base = poly_mulmod(F, base, base, m);
    e >>= 1;
  }
  return result;
}

Mat3 diag3(Elem a, Elem b, Elem c) {
  Mat3 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

// unipotent [[1, alpha, beta], [0, 1, -alpha^q], [0, 0, 1]] in the hyperbolic frame
Mat3 unipotent(const Field& F, uint64_t q, Elem alpha, Elem beta) {
  Mat3 m = identity_matrix<3>();
  m(0, 1) = alpha;
  m(0, 2) = beta;
  m(1, 2) = F.neg(F.frobenius(alpha, q));
  return m;
}

std::string make_id(ClassType t, const std::vector<int64_t>& params) {
  std::string s(type_name(t));
  if (params.empty()) return s;
  s += "[";
  for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
  return s + "]";
}

}  // namespace

ClassType identify_type(const Field& F, uint32_t q, const Mat3& g, bool check_membership) {
  if (check_membership && !in_su3(F, g, q))
    throw Error(ErrorCode::NotInGroup, "matrix is not in SU(3," + std::to_string(q) + ")");
  if (is_scalar(g)) return ClassType::C1;
  const auto c = charpoly(F, g);
  const Poly f{c[0], c[1], c[2], 1};
  Poly df{c[1], F.mul(F.from_int(2), c[2]), F.from_int(3)};
  trim(df);
  auto unipotent_rank_type = [&](Elem a, ClassType rank1, ClassType rank2) {
    Mat3 m = g;
    for (int i = 0; i < 3; ++i) m(i, i) = F.sub(m(i, i), a);
    return rank(F, m) == 1 ? rank1 : rank2;
  };
  if (df.empty()) {
    // characteristic 3, f = t^3 + c0
    const Elem a = F.pow(F.neg(c[0]), F.size() / 3);
    return unipotent_rank_type(a, ClassType::C2, ClassType::C3);
  }
  const Poly h = poly_gcd(F, f, df);
  if (h.size() > 1) {
    // h is a power of (t - a) for the repeated root a
    Elem a;
    if (h.size() == 2)
      a = F.neg(h[0]);
    else if (F.p() == 2)
      a = F.pow(h[0], F.size() / 2);
    else
      a = F.div(F.neg(h[1]), F.from_int(2));
    const Elem other = F.sub(F.neg(c[2]), F.add(a, a));
    if (other == a) return unipotent_rank_type(a, ClassType::C2, ClassType::C3);
    return unipotent_rank_type(a, ClassType::C4, ClassType::C5);
  }
  Poly r = t_power_mod(F, static_cast<uint64_t>(q) + 1, f);
  r.resize(std::max<size_t>(r.size(), 1), 0);
  r[0] = F.sub(r[0], 1);
  const Poly u = poly_gcd(F, f, r);
  const size_t roots_on_circle = u.empty() ? 3 : u.size() - 1;
  switch (roots_on_circle) {
    case 3: return (c[2] == 0 && c[1] == 0) ? ClassType::C6p : ClassType::C6;
    case 1: return ClassType::C7;
    case 0: return ClassType::C8;
    default: throw Error(ErrorCode::NotInGroup, "eigenvalue pattern impossible in SU(3,q)");
  }
}

Psu3Reps build_representatives(uint32_t q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (q > 197) throw Error(ErrorCode::UnsupportedQ, "representatives are built for q <= 197");
  Psu3Reps out;
  out.q = q;
  out.d = schur_d(q);
  out.field = make_field(pp->first, 2 * pp->second);
  const Field& F = *out.field;
  const int64_t N = static_cast<int64_t>(q) * q - 1;
  const int64_t qq = q;
  const bool odd = pp->first != 2;
  const uint32_t d = out.d;
  const Elem zeta = F.exp(qq - 1);  // generates the norm-one circle
  auto circle = [&](int64_t k) { return F.pow(zeta, k); };

  // hyperbolic frame e = (1, y, 0), f = c (1, y2, 0), w = (0, 0, 1)
  const Elem y = odd ? F.exp((qq - 1) / 2) : Elem{1};
  const Elem y2 = odd ? F.neg(y) : zeta;
  const Elem c = F.inv(F.add(1, F.mul(F.frobenius(y, q), y2)));
  Mat3 P;
  P(0, 0) = 1;
  P(1, 0) = y;
  P(2, 1) = 1;
  P(0, 2) = c;
  P(1, 2) = F.mul(c, y2);
  Mat3 J;
  J(0, 2) = J(1, 1) = J(2, 0) = 1;
  if (mat_mul(F, conj_transpose(F, P, q), P) != J) throw Error(ErrorCode::InvalidArgument, "hyperbolic frame construction failed");
  out.frame = P;
  const Mat3 Pinv = inverse(F, P);
  auto from_frame = [&](const Mat3& x) { return mat_mul(F, mat_mul(F, P, x), Pinv); };

  auto add = [&](ClassType t, std::vector<int64_t> params, const Mat3& m) {
    out.reps.push_back({t, params, m, make_id(t, params)});
  };

  add(ClassType::C1, {}, identity_matrix<3>());

  Elem trace_one = 0;
  if (odd) {
    trace_one = F.inv(F.from_int(2));
  } else {
    for (Elem b = 1; b < F.size(); ++b)
      if (F.add(b, F.frobenius(b, q)) == 1) {
        trace_one = b;
        break;
      }
  }
  auto beta_for = [&](Elem alpha) { return F.mul(F.neg(F.pow(alpha, qq + 1)), trace_one); };

  // trace-zero element for the centre of the unipotent radical
  const Elem beta0 = odd ? F.exp((qq + 1) / 2) : Elem{1};
  add(ClassType::C2, {}, from_frame(unipotent(F, q, 0, beta0)));

  for (uint32_t l = 0; l < d; ++l) {
    const Elem alpha = F.exp(l);
    const Elem beta = beta_for(alpha);
    add(ClassType::C3, {static_cast<int64_t>(l)}, from_frame(unipotent(F, q, alpha, beta)));
  }

  const int64_t shift_circle = (qq + 1) / 3;  // omega on the circle, when d = 3
  auto circle_orbit_min = [&](int64_t k) {
    int64_t best = k;
    if (d == 3)
      for (int s = 1; s < 3; ++s) best = std::min(best, mod_floor(k + s * shift_circle, qq + 1));
    return best;
  };
  for (int64_t k = 0; k <= qq; ++k) {
    if ((3 * k) % (qq + 1) == 0) continue;
    if (circle_orbit_min(k) != k) continue;
    const Elem a = circle(k);
    const Elem a2 = F.inv(F.mul(a, a));
    add(ClassType::C4, {k}, diag3(a, a, a2));
  }
  for (int64_t k = 0; k <= qq; ++k) {
    if ((3 * k) % (qq + 1) == 0) continue;
    if (circle_orbit_min(k) != k) continue;
    const Elem a = circle(k);
    const Elem a2 = F.inv(F.mul(a, a));
    Mat3 x = diag3(a, a2, a);
    x(0, 2) = F.mul(a, beta0);
    add(ClassType::C5, {k}, from_frame(x));
  }

  if (d == 3) add(ClassType::C6p, {0, shift_circle, 2 * shift_circle}, diag3(1, circle(shift_circle), circle(2 * shift_circle)));

  auto sorted_triple = [&](int64_t a, int64_t b, int64_t cc) {
    std::array<int64_t, 3> t{mod_floor(a, qq + 1), mod_floor(b, qq + 1), mod_floor(cc, qq + 1)};
    std::sort(t.begin(), t.end());
    return t;
  };
  for (int64_t k = 0; k <= qq; ++k)
    for (int64_t l = k + 1; l <= qq; ++l) {
      const int64_t m = mod_floor(-k - l, qq + 1);
      if (m <= l) continue;
      std::array<int64_t, 3> t{k, l, m};
      if (d == 3) {
        if (l == k + shift_circle && m == l + shift_circle) continue;
        bool least = true;
        for (int s = 1; s < 3; ++s)
          if (sorted_triple(k + s * shift_circle, l + s * shift_circle, m + s * shift_circle) < t) least = false;
        if (!least) continue;
      }
      add(ClassType::C6, {k, l, m}, diag3(circle(k), circle(l), circle(m)));
    }

  for (int64_t e = 0; e < N; ++e) {
    if (e % (qq - 1) == 0) continue;
    int64_t best = e;
    for (int s = 0; s < static_cast<int>(d); ++s) {
      const int64_t e1 = mod_floor(e + s * (N / 3), N);
      best = std::min({best, e1, mod_floor(-qq * e1, N)});
    }
    if (best != e) continue;
    const Elem a = F.exp(e);
    add(ClassType::C7, {e}, from_frame(diag3(a, F.pow(a, qq - 1), F.pow(a, -qq))));
  }

  const int64_t n8 = qq * qq - qq + 1;
  out.torus8 = identity_matrix<3>();
  if (n8 > static_cast<int64_t>(d)) {
    Mat3 W;
    W(0, 2) = 1;
    W(1, 1) = F.neg(1);
    W(2, 0) = 1;
    const auto primes = prime_divisors(static_cast<uint64_t>(n8));
    bool found = false;
    std::vector<Elem> shifts{0};
    for (int64_t i = 0; i < qq - 1; ++i) shifts.push_back(F.mul(beta0, F.exp(i * (qq + 1))));
    for (int64_t te = 0; te < N && !found; ++te) {
      const Elem t = F.exp(te);
      const Mat3 T = diag3(t, F.pow(t, qq - 1), F.pow(t, -qq));
      for (Elem alpha = 0; alpha < F.size() && !found; ++alpha)
        for (Elem shift : shifts) {
          const Elem beta = F.add(beta_for(alpha), shift);
          const Mat3 g = from_frame(mat_mul(F, mat_mul(F, W, unipotent(F, q, alpha, beta)), T));
          if (identify_type(F, q, g) != ClassType::C8) continue;
          for (uint32_t s = 0; s < d && !found; ++s) {
            const Mat3 h = mat_scale(F, g, F.exp(static_cast<int64_t>(s) * (N / 3)));
            if (mat_pow(F, h, static_cast<uint64_t>(n8)) != identity_matrix<3>()) continue;
            bool generator = true;
            for (uint64_t r : primes)
              if (mat_pow(F, h, static_cast<uint64_t>(n8) / r) == identity_matrix<3>()) generator = false;
            if (!generator) continue;
            out.torus8 = h;
            found = true;
          }
          if (found) break;
        }
    }
    if (!found) throw Error(ErrorCode::CountMismatch, "no generator of the anisotropic torus found");
    const int64_t sub = n8 / d;
    for (int64_t j = 1; j < n8; ++j) {
      if (j % sub == 0) continue;
      int64_t best = j;
      for (int s = 0; s < static_cast<int>(d); ++s) {
        int64_t x = mod_floor(j + s * (n8 / 3), n8);
        for (int r = 0; r < 3; ++r) {
          best = std::min(best, x);
          x = mod_floor(x * ((qq * qq) % n8), n8);
        }
      }
      if (best != j) continue;
      add(ClassType::C8, {j}, mat_pow(F, out.torus8, static_cast<uint64_t>(j)));
    }
  }

  const auto spec = class_spectrum(q);
  std::array<int64_t, kNumTypes> built{};
  for (const auto& r : out.reps) ++built[idx(r.type)];
  for (auto t : kAllTypes)
    if (built[idx(t)] != spec.at(t).count)
      throw Error(ErrorCode::CountMismatch, "built " + std::to_string(built[idx(t)]) + " representatives of type " +
                                                std::string(type_name(t)) + " at q = " + std::to_string(q) +
                                                ", expected " + std::to_string(spec.at(t).count));
  return out;
}

TypeMatrix power_distribution(const Psu3Reps& r, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "power exponent must be positive");
  const Field& F = *r.field;
  TypeMatrix m{};
  for (const auto& rep : r.reps) {
    const Mat3 g = mat_pow(F, rep.matrix, static_cast<uint64_t>(k));
    ++m[idx(identify_type(F, r.q, g, false))][idx(rep.type)];
  }
  if (k >= 2 && k <= 4) {
    const TypeMatrix s = symbolic_power_table(r.q, k);
    for (auto dst : kAllTypes)
      for (auto src : kAllTypes)
        if (m[idx(dst)][idx(src)] != s[idx(dst)][idx(src)])
          throw Error(ErrorCode::SymbolicMismatch,
                      "q = " + std::to_string(r.q) + ", k = " + std::to_string(k) + ", entry (" +
                          std::string(type_name(dst)) + ", " + std::string(type_name(src)) + "): representatives give " +
                          std::to_string(m[idx(dst)][idx(src)]) + ", table gives " + std::to_string(s[idx(dst)][idx(src)]));
  }
  return m;
}

std::vector<std::vector<ClassType>> power_type_sequences(const Psu3Reps& r, int K) {
  if (K < 1 || K > 12) throw Error(ErrorCode::InvalidArgument, "power sequence length must be in 1..12");
  const Field& F = *r.field;
  std::vector<std::vector<ClassType>> out;
  out.reserve(r.reps.size());
  for (const auto& rep : r.reps) {
    std::vector<ClassType> seq;
    Mat3 g = rep.matrix;
    for (int i = 1; i <= K; ++i) {
      seq.push_back(identify_type(F, r.q, g, false));
      if (i < K) g = mat_mul(F, g, rep.matrix);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

}  // namespace rdbound
