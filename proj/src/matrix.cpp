#include "vpf/matrix.hpp"

#include <utility>

namespace vpf {

RatMat to_rat(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

Rat det(const RatMat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "det of non-square matrix");
  RatMat a = m;
  const std::size_t n = a.rows();
  Rat d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rat f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return d;
}

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "det of non-square matrix");
  IntMat a = m;
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int s = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      s = -s;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        a(r, c) = (a(r, c) * a(k, k) - a(r, k) * a(k, c)) / prev;
      }
      a(r, k) = 0;
    }
    prev = a(k, k);
  }
  return s * a(n - 1, n - 1);
}

RatMat invert(const RatMat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMat a = m;
  RatMat inv = RatMat::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(p, c), a(k, c));
        std::swap(inv(p, c), inv(k, c));
      }
    }
    const Rat pivot = a(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      a(k, c) /= pivot;
      inv(k, c) /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a(r, k) == 0) continue;
      const Rat f = a(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

RatMat rref(const RatMat& m) {
  RatMat a = m;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead, j));
    const Rat pivot = a(lead, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) /= pivot;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const Rat f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(lead, j);
    }
    ++lead;
  }
  RatMat out(lead, a.cols());
  for (std::size_t r = 0; r < lead; ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  return out;
}

std::size_t rank(const RatMat& m) { return rref(m).rows(); }

std::size_t rank(const IntMat& m) {
  IntMat a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Int g = gcd(a(r, c), a(i, c));
      const Int fr = a(i, c) / g;
      const Int fi = a(r, c) / g;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * fi - a(r, j) * fr;
    }
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 0;
  return rank(IntMat::from_rows(rows));
}

RatMat nullspace(const RatMat& m) {
  const RatMat e = rref(m);
  const std::size_t n = m.cols();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < e.rows(); ++r) {
    std::size_t c = 0;
    while (e(r, c) == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows(); ++r) v[pivot_col[r]] = -e(r, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return RatMat(0, n);
  return rref(RatMat::from_rows(basis));
}

}  // namespace vpf
