#include "rdbound/matrix.hpp"

#include "rdbound/error.hpp"

namespace rdbound {

Field::Elem det(const Field& F, const Mat2& x) { return F.sub(F.mul(x(0, 0), x(1, 1)), F.mul(x(0, 1), x(1, 0))); }

Field::Elem det(const Field& F, const Mat3& x) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return F.sub(F.mul(x(r0, c0), x(r1, c1)), F.mul(x(r0, c1), x(r1, c0)));
  };
  Field::Elem d = F.mul(x(0, 0), minor(1, 2, 1, 2));
  d = F.sub(d, F.mul(x(0, 1), minor(1, 2, 0, 2)));
  return F.add(d, F.mul(x(0, 2), minor(1, 2, 0, 1)));
}

Mat2 inverse(const Field& F, const Mat2& x) {
  const Field::Elem di = F.inv(det(F, x));
  Mat2 r;
  r(0, 0) = F.mul(x(1, 1), di);
  r(1, 1) = F.mul(x(0, 0), di);
  r(0, 1) = F.neg(F.mul(x(0, 1), di));
  r(1, 0) = F.neg(F.mul(x(1, 0), di));
  return r;
}

Mat3 inverse(const Field& F, const Mat3& x) {
  const Field::Elem di = F.inv(det(F, x));
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      Field::Elem cof = F.sub(F.mul(x(r0, c0), x(r1, c1)), F.mul(x(r0, c1), x(r1, c0)));
      r(i, j) = F.mul(cof, di);
    }
  return r;
}

int rank(const Field& F, const Mat3& x) {
  Mat3 m = x;
  int r = 0;
  for (int c = 0; c < 3 && r < 3; ++c) {
    int piv = r;
    while (piv < 3 && m(piv, c) == 0) ++piv;
    if (piv == 3) continue;
    for (int k = 0; k < 3; ++k) std::swap(m(r, k), m(piv, k));
    const Field::Elem inv = F.inv(m(r, c));
    for (int i = 0; i < 3; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Field::Elem f = F.mul(m(i, c), inv);
      for (int k = 0; k < 3; ++k) m(i, k) = F.sub(m(i, k), F.mul(f, m(r, k)));
    }
    ++r;
  }
  return r;
}

std::array<Field::Elem, 3> charpoly(const Field& F, const Mat3& x) {
  const Field::Elem tr = F.add(F.add(x(0, 0), x(1, 1)), x(2, 2));
  auto m2 = [&](int i, int j) { return F.sub(F.mul(x(i, i), x(j, j)), F.mul(x(i, j), x(j, i))); };
  const Field::Elem s2 = F.add(F.add(m2(0, 1), m2(0, 2)), m2(1, 2));
  return {F.neg(det(F, x)), s2, F.neg(tr)};
}

}  // namespace rdbound
