#include "rdbound/oracle.hpp"

#include <algorithm>
#include <random>

#include "rdbound/error.hpp"
#include "rdbound/numtheory.hpp"

namespace rdbound {

namespace {

template <int N>
uint64_t encode_mat(const Field& F, const Mat<N>& m) {
  uint64_t key = 0;
  for (int i = 0; i < N * N; ++i) key = key * F.size() + (m.a[i] == 0 ? 0 : F.dlog(m.a[i]) + 1);
  return key;
}

template <int N>
Mat<N> decode_mat(const Field& F, uint64_t key) {
  Mat<N> m;
  for (int i = N * N; i-- > 0;) {
    uint64_t d = key % F.size();
    key /= F.size();
    m.a[i] = d == 0 ? 0 : F.exp(static_cast<int64_t>(d - 1));
  }
  return m;
}

void enumerate_sl2(const Field& F, std::vector<uint64_t>& out) {
  const uint32_t q = F.size();
  for (Field::Elem a = 0; a < q; ++a)
    for (Field::Elem b = 0; b < q; ++b)
      for (Field::Elem c = 0; c < q; ++c) {
        Mat2 m;
        m(0, 0) = a;
        m(0, 1) = b;
        m(1, 0) = c;
        if (a != 0) {
          m(1, 1) = F.div(F.add(1, F.mul(b, c)), a);
          out.push_back(encode_mat<2>(F, m));
        } else if (F.mul(b, c) == F.neg(1)) {
          for (Field::Elem d = 0; d < q; ++d) {
            m(1, 1) = d;
            out.push_back(encode_mat<2>(F, m));
          }
        }
      }
}

void enumerate_su3(const Field& F, uint64_t q, std::vector<uint64_t>& out) {
  const uint32_t n = F.size();
  std::vector<Field::Elem> norm(n), conj(n);
  for (Field::Elem x = 0; x < n; ++x) {
    conj[x] = F.frobenius(x, q);
    norm[x] = F.mul(x, conj[x]);
  }
  std::vector<std::array<Field::Elem, 3>> units;
  for (Field::Elem x = 0; x < n; ++x)
    for (Field::Elem y = 0; y < n; ++y) {
      const Field::Elem s = F.add(norm[x], norm[y]);
      for (Field::Elem z = 0; z < n; ++z)
        if (F.add(s, norm[z]) == 1) units.push_back({x, y, z});
    }
  for (const auto& v : units) {
    int k = 0;
    while (v[k] == 0) ++k;
    const int i1 = (k + 1) % 3, i2 = (k + 2) % 3;
    const Field::Elem ck_inv = F.inv(conj[v[k]]);
    for (Field::Elem a = 0; a < n; ++a)
      for (Field::Elem b = 0; b < n; ++b) {
        // solve conj(v) . w = 0 for w[k]
        std::array<Field::Elem, 3> w{};
        w[i1] = a;
        w[i2] = b;
        const Field::Elem s = F.add(F.mul(conj[v[i1]], a), F.mul(conj[v[i2]], b));
        w[k] = F.neg(F.mul(s, ck_inv));
        if (F.add(F.add(norm[w[0]], norm[w[1]]), norm[w[2]]) != 1) continue;
        // third column: conjugate of the cross product
        std::array<Field::Elem, 3> u{};
        for (int r = 0; r < 3; ++r) {
          const int s1 = (r + 1) % 3, s2 = (r + 2) % 3;
          u[r] = conj[F.sub(F.mul(v[s1], w[s2]), F.mul(v[s2], w[s1]))];
        }
        Mat3 m;
        for (int r = 0; r < 3; ++r) {
          m(r, 0) = v[r];
          m(r, 1) = w[r];
          m(r, 2) = u[r];
        }
        out.push_back(encode_mat<3>(F, m));
      }
  }
}

}  // namespace

uint64_t MatrixGroup::encode(const Mat2& m) const { return encode_mat<2>(*field, m); }
uint64_t MatrixGroup::encode(const Mat3& m) const { return encode_mat<3>(*field, m); }
Mat2 MatrixGroup::decode2(uint64_t key) const { return decode_mat<2>(*field, key); }
Mat3 MatrixGroup::decode3(uint64_t key) const { return decode_mat<3>(*field, key); }

uint64_t MatrixGroup::identity() const {
  return kind == GroupKind::SL2 ? encode(identity_matrix<2>()) : encode(identity_matrix<3>());
}

uint64_t MatrixGroup::multiply(uint64_t a, uint64_t b) const {
  uint64_t r = kind == GroupKind::SL2 ? encode(mat_mul(*field, decode2(a), decode2(b)))
                                      : encode(mat_mul(*field, decode3(a), decode3(b)));
  return canonical(r);
}

uint64_t MatrixGroup::inverse(uint64_t a) const {
  uint64_t r = kind == GroupKind::SL2 ? encode(rdbound::inverse(*field, decode2(a)))
                                      : encode(conj_transpose(*field, decode3(a), q));
  return canonical(r);
}

uint64_t MatrixGroup::power(uint64_t a, uint64_t k) const {
  uint64_t r = kind == GroupKind::SL2 ? encode(mat_pow(*field, decode2(a), k)) : encode(mat_pow(*field, decode3(a), k));
  return canonical(r);
}

uint64_t MatrixGroup::canonical(uint64_t a) const {
  if (!quotient) return a;
  uint64_t best = a;
  if (kind == GroupKind::SL2) {
    const Mat2 m = decode2(a);
    for (uint64_t z : center) best = std::min(best, encode(mat_mul(*field, decode2(z), m)));
  } else {
    const Mat3 m = decode3(a);
    for (uint64_t z : center) best = std::min(best, encode(mat_mul(*field, decode3(z), m)));
  }
  return best;
}

int64_t MatrixGroup::index_of(uint64_t key) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return -1;
  return it - keys.begin();
}

uint64_t group_order_formula(GroupKind kind, uint64_t q) {
  if (kind == GroupKind::SL2) return q * (q * q - 1);
  return q * q * q * (q * q - 1) * (q * q * q + 1);
}

bool in_sl2(const Field& F, const Mat2& m) { return det(F, m) == 1; }

bool in_su3(const Field& F, const Mat3& m, uint64_t q) {
  return det(F, m) == 1 && mat_mul(F, conj_transpose(F, m, q), m) == identity_matrix<3>();
}

MatrixGroup trivial_group() {
  MatrixGroup g;
  g.kind = GroupKind::SL2;
  g.q = 2;
  g.field = make_field(2, 1);
  g.keys = {g.identity()};
  g.center = g.keys;
  return g;
}

MatrixGroup enumerate_group(GroupKind kind, uint32_t q, const OracleOptions& opts) {
  auto pp = prime_power(q);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  const uint64_t order = group_order_formula(kind, q);
  const uint64_t cap = std::min<uint64_t>(opts.max_order, 10'000'000);
  if (order > cap)
    throw Error(ErrorCode::SizeExceeded, "group of order " + std::to_string(order) + " exceeds the oracle budget " + std::to_string(cap));
  MatrixGroup g;
  g.kind = kind;
  g.q = q;
  g.field = make_field(pp->first, kind == GroupKind::SL2 ? pp->second : 2 * pp->second);
  g.keys.reserve(order);
  if (kind == GroupKind::SL2)
    enumerate_sl2(*g.field, g.keys);
  else
    enumerate_su3(*g.field, q, g.keys);
  std::sort(g.keys.begin(), g.keys.end());
  g.keys.erase(std::unique(g.keys.begin(), g.keys.end()), g.keys.end());
  if (g.keys.size() != order)
    throw Error(ErrorCode::CountMismatch, "enumerated " + std::to_string(g.keys.size()) + " elements, expected " + std::to_string(order));

  // generators: random elements until their closure is the whole group
  std::mt19937_64 rng(opts.seed ^ (static_cast<uint64_t>(q) << 8) ^ static_cast<uint64_t>(kind));
  std::uniform_int_distribution<size_t> pick(0, g.keys.size() - 1);
  while (true) {
    g.generators.push_back(g.keys[pick(rng)]);
    if (g.generators.size() < 2) continue;
    std::vector<char> seen(g.keys.size(), 0);
    std::vector<uint64_t> stack{g.identity()};
    seen[g.index_of(g.identity())] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
      uint64_t x = stack.back();
      stack.pop_back();
      for (uint64_t s : g.generators) {
        uint64_t y = g.multiply(x, s);
        int64_t i = g.index_of(y);
        if (!seen[i]) {
          seen[i] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached == g.keys.size()) break;
  }
  for (uint64_t x : g.keys) {
    bool central = true;
    for (uint64_t s : g.generators)
      if (g.multiply(x, s) != g.multiply(s, x)) {
        central = false;
        break;
      }
    if (central) g.center.push_back(x);
  }
  return g;
}

MatrixGroup quotient_by_center(const MatrixGroup& g) {
  MatrixGroup h = g;
  h.quotient = true;
  h.keys.clear();
  for (uint64_t x : g.keys) {
    if (h.canonical(x) == x) h.keys.push_back(x);
  }
  for (auto& s : h.generators) s = h.canonical(s);
  return h;
}

ClassPartition conjugacy_classes(const MatrixGroup& g) {
  ClassPartition p;
  p.group_order = g.order();
  p.class_of.assign(g.keys.size(), -1);
  std::vector<uint64_t> gen_inv;
  for (uint64_t s : g.generators) gen_inv.push_back(g.inverse(s));
  std::vector<uint64_t> stack;
  for (size_t start = 0; start < g.keys.size(); ++start) {
    if (p.class_of[start] >= 0) continue;
    const int32_t id = static_cast<int32_t>(p.classes.size());
    uint64_t size = 1;
    p.class_of[start] = id;
    stack.assign(1, g.keys[start]);
    while (!stack.empty()) {
      uint64_t x = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < g.generators.size(); ++j) {
        uint64_t y = g.multiply(g.multiply(g.generators[j], x), gen_inv[j]);
        int64_t i = g.index_of(y);
        if (p.class_of[i] < 0) {
          p.class_of[i] = id;
          ++size;
          stack.push_back(y);
        }
      }
    }
    p.classes.push_back({g.keys[start], size, p.group_order / size});
  }
  return p;
}

int32_t class_of_key(const MatrixGroup& g, const ClassPartition& p, uint64_t key) {
  int64_t i = g.index_of(g.canonical(key));
  if (i < 0) throw Error(ErrorCode::NotInGroup, "element not in the enumerated group");
  return p.class_of[i];
}

std::vector<int32_t> power_map_oracle(const MatrixGroup& g, const ClassPartition& p, uint64_t k) {
  std::vector<int32_t> out;
  out.reserve(p.classes.size());
  for (const auto& c : p.classes) out.push_back(class_of_key(g, p, g.power(c.rep, k)));
  return out;
}

std::vector<std::vector<uint64_t>> power_distribution_oracle(const MatrixGroup& g, const ClassPartition& p, uint64_t k) {
  std::vector<int> ident(p.classes.size());
  for (size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
  return power_distribution_oracle(g, p, k, ident, static_cast<int>(ident.size()));
}

std::vector<std::vector<uint64_t>> power_distribution_oracle(const MatrixGroup& g, const ClassPartition& p, uint64_t k,
                                                             const std::vector<int>& label_of_class, int num_labels) {
  std::vector<std::vector<uint64_t>> counts(num_labels, std::vector<uint64_t>(num_labels, 0));
  auto pm = power_map_oracle(g, p, k);
  for (size_t c = 0; c < pm.size(); ++c) ++counts[label_of_class[pm[c]]][label_of_class[c]];
  return counts;
}

uint64_t centralizer_order_direct(const MatrixGroup& g, uint64_t key) {
  uint64_t count = 0;
  for (uint64_t x : g.keys)
    if (g.multiply(x, key) == g.multiply(key, x)) ++count;
  return count;
}

bool power_map_is_class_function(const MatrixGroup& g, const ClassPartition& p, uint64_t k, int samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<uint64_t>> members(p.classes.size());
  std::vector<uint64_t> seen(p.classes.size(), 0);
  // reservoir sample per class
  for (size_t i = 0; i < g.keys.size(); ++i) {
    const int32_t c = p.class_of[i];
    auto& m = members[c];
    ++seen[c];
    if (m.size() < static_cast<size_t>(samples)) {
      m.push_back(g.keys[i]);
    } else {
      std::uniform_int_distribution<uint64_t> d(0, seen[c] - 1);
      uint64_t j = d(rng);
      if (j < m.size()) m[j] = g.keys[i];
    }
  }
  auto pm = power_map_oracle(g, p, k);
  for (size_t c = 0; c < members.size(); ++c)
    for (uint64_t x : members[c])
      if (class_of_key(g, p, g.power(x, k)) != pm[c]) return false;
  return true;
}

}  // namespace rdbound
