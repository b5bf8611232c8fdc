#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "vpf/chambers.hpp"
#include "vpf/matrix.hpp"
#include "vpf/so5.hpp"

namespace testing_support {

using vpf::Int;
using vpf::IntMat;
using vpf::IntVec;
using vpf::Rat;

inline const vpf::ChamberTable& so5_table() {
  static const vpf::ChamberTable table = vpf::so5::build_chamber_table();
  return table;
}

// Solves M x = rhs for square M by plain fraction elimination; false if singular.
inline bool solve(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs, std::vector<Rat>& x) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return true;
}

// Number of a >= 0 with A a = h. `theta` must pair positively with every column;
// the columns listed in `free` are enumerated, the rest solved for.
inline Int partition_count(const IntMat& A, const IntVec& h, const IntVec& theta, const std::vector<std::size_t>& free) {
  const std::size_t n = A.rows();
  std::vector<std::size_t> fixed;
  for (std::size_t k = 0; k < A.cols(); ++k)
    if (std::find(free.begin(), free.end(), k) == free.end()) fixed.push_back(k);
  std::vector<std::vector<Rat>> sq(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sq[i][j] = A(i, fixed[j]);
  Int count = 0;
  IntVec rem = h;
  std::function<void(std::size_t)> rec = [&](std::size_t f) {
    if (f == free.size()) {
      std::vector<Rat> rhs(rem.begin(), rem.end()), x;
      if (!solve(sq, rhs, x)) return;
      for (const auto& v : x)
        if (v < 0 || v.get_den() != 1) return;
      ++count;
      return;
    }
    const std::size_t k = free[f];
    Int budget = 0, weight = 0;
    for (std::size_t i = 0; i < n; ++i) {
      budget += theta[i] * rem[i];
      weight += theta[i] * A(i, k);
    }
    long used = 0;
    for (; weight * used <= budget; ++used) {
      rec(f + 1);
      for (std::size_t i = 0; i < n; ++i) rem[i] -= A(i, k);
    }
    for (std::size_t i = 0; i < n; ++i) rem[i] += A(i, k) * used;
  };
  rec(0);
  return count;
}

inline const IntVec& so5_theta() {
  static const IntVec t = {-1, -1, 1, 1, 1, 1, 1, 4};
  return t;
}

// Phi_A for the so5 matrix: the last two columns are enumerated.
inline Int so5_partition_count(const IntVec& h) {
  return partition_count(vpf::so5::matrix_A(), h, so5_theta(), {8, 9});
}

// Interior lattice points of a full-dimensional cone: random positive ray combinations.
inline std::vector<IntVec> interior_points(const vpf::ConeH& c, std::size_t count, std::mt19937_64& rng,
                                           long max_coeff = 5) {
  std::vector<IntVec> out;
  std::uniform_int_distribution<long> coeff(1, max_coeff);
  while (out.size() < count) {
    IntVec p(c.ambient_dim(), Int(0));
    for (const auto& r : c.rays()) {
      const long k = coeff(rng);
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += r[i] * k;
    }
    if (c.contains_in_relative_interior(p)) out.push_back(p);
  }
  return out;
}

}  // namespace testing_support
