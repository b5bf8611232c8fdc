#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vpf/cone.hpp"
#include "vpf/matrix.hpp"
#include "vpf/quasipolynomial.hpp"

namespace vpf {

struct BuildCounts {
  std::size_t basic = 0;
  std::size_t nbc = 0;
  std::size_t maximal_cones = 0;
  std::size_t intersections = 0;  // full-dimensional pullbacks of maximal cones
  std::size_t glued_chambers = 0;

  friend bool operator==(const BuildCounts&, const BuildCounts&) = default;
};

struct Chamber {
  int id = 0;
  bool published = false;  // id taken from the reference chamber list
  ConeH cone;
  QuasiPolynomial quasi_polynomial;

  friend bool operator==(const Chamber&, const Chamber&) = default;
};

/// Chambers of Phi_A(M y) in y-space, where M = B (or the identity when B is absent),
/// ordered by id.
struct ChamberTable {
  IntMat A;
  std::optional<IntMat> B;
  BuildCounts counts;
  std::vector<Chamber> chambers;

  std::size_t dim() const { return B ? B->cols() : A.rows(); }
  /// Index of the lowest-id chamber containing y.
  std::optional<std::size_t> locate(std::span<const Int> y) const;
  const Chamber& by_id(int id) const;  // throws UnknownChamberId
  /// Phi_A(M y); 0 outside every chamber.
  Rat evaluate(std::span<const Int> y) const;

  friend bool operator==(const ChamberTable&, const ChamberTable&) = default;
};

struct GluingOptions {
  bool glue = true;
  unsigned threads = 0;  // 0: worker_count()
};

/// Builds fan(A), pulls every maximal cone back along M, keeps the
/// full-dimensional pieces, and glues neighbouring pieces carrying equal
/// quasi-polynomials whenever the union stays convex. Chambers get ids 1, 2, ...
/// in canonical cone order. Throws GluingMismatch if two maximal cones with the
/// same pullback yield different quasi-polynomials there.
ChamberTable build_table(const IntMat& A, const std::optional<IntMat>& B, const GluingOptions& opts = {});

}  // namespace vpf
