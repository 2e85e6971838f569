#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rdbound/ffield.hpp"

namespace rdbound {

template <int N>
struct Mat {
  std::array<Field::Elem, N * N> a{};

  Field::Elem& operator()(int i, int j) { return a[i * N + j]; }
  Field::Elem operator()(int i, int j) const { return a[i * N + j]; }
  bool operator==(const Mat&) const = default;
  auto operator<=>(const Mat&) const = default;
};

using Mat2 = Mat<2>;
using Mat3 = Mat<3>;

template <int N>
Mat<N> identity_matrix() {
  Mat<N> m;
  for (int i = 0; i < N; ++i) m(i, i) = 1;
  return m;
}

template <int N>
Mat<N> scalar_matrix(Field::Elem s) {
  Mat<N> m;
  for (int i = 0; i < N; ++i) m(i, i) = s;
  return m;
}

template <int N>
Mat<N> mat_mul(const Field& F, const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Field::Elem acc = 0;
      for (int k = 0; k < N; ++k) acc = F.add(acc, F.mul(x(i, k), y(k, j)));
      r(i, j) = acc;
    }
  return r;
}

template <int N>
Mat<N> mat_pow(const Field& F, Mat<N> x, uint64_t e) {
  Mat<N> r = identity_matrix<N>();
  while (e) {
    if (e & 1) r = mat_mul(F, r, x);
    x = mat_mul(F, x, x);
    e >>= 1;
  }
  return r;
}

// Conjugate transpose under x -> x^q.
template <int N>
Mat<N> conj_transpose(const Field& F, const Mat<N>& x, uint64_t q) {
  Mat<N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r(i, j) = F.frobenius(x(j, i), q);
  return r;
}

template <int N>
Mat<N> mat_scale(const Field& F, const Mat<N>& x, Field::Elem s) {
  Mat<N> r;
  for (int i = 0; i < N * N; ++i) r.a[i] = F.mul(x.a[i], s);
  return r;
}

template <int N>
bool is_scalar(const Mat<N>& x) {
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j && x(i, j) != 0) return false;
  for (int i = 1; i < N; ++i)
    if (x(i, i) != x(0, 0)) return false;
  return true;
}

Field::Elem det(const Field& F, const Mat2& x);
Field::Elem det(const Field& F, const Mat3& x);
Mat2 inverse(const Field& F, const Mat2& x);
Mat3 inverse(const Field& F, const Mat3& x);
int rank(const Field& F, const Mat3& x);

// Coefficients c0, c1, c2 of det(tI - x) = t^3 + c2 t^2 + c1 t + c0.
std::array<Field::Elem, 3> charpoly(const Field& F, const Mat3& x);

}  // namespace rdbound
