#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vpf/cone.hpp"
#include "vpf/matrix.hpp"
#include "vpf/rational.hpp"

namespace vpf {

/// n column indices (0-based, increasing) of A forming a basis, with |det|.
struct BasicSubset {
  std::vector<std::size_t> indices;
  Int volume;

  friend bool operator==(const BasicSubset&, const BasicSubset&) = default;
};

std::string to_string(const BasicSubset& s);  // 1-based, e.g. "{1,3}"

/// All basic subsets in lexicographic order of their index lists.
/// Throws RankDeficient if rank(A) < rows(A).
std::vector<BasicSubset> enumerate_basic_subsets(const IntMat& A);

/// Basic subsets without broken circuits: for no j and no k > i_j is
/// (a_{i_1}, ..., a_{i_j}, a_k) linearly dependent. Built prefix by prefix.
std::vector<BasicSubset> enumerate_nbc(const IntMat& A);

/// Column submatrix A_sigma.
IntMat basis_matrix(const IntMat& A, const BasicSubset& s);

/// Point of the torus (R^n)^* / (Z^n)^*, stored with coordinates in [0, 1).
class TorusElement {
 public:
  TorusElement() = default;
  explicit TorusElement(RatVec coords);
  static TorusElement zero(std::size_t n) { return TorusElement(RatVec(n, Rat(0))); }

  const RatVec& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  /// Order in the torus: lcm of the coordinate denominators.
  unsigned order() const;
  bool is_zero() const;

  /// <g, v> mod 1 in [0, 1).
  Rat pairing(std::span<const Int> v) const;

  /// g composed with an integer map M (n x m): the covector g M in (R^m)^*.
  TorusElement compose(const IntMat& map) const;

  friend TorusElement operator+(const TorusElement& a, const TorusElement& b);
  friend bool operator==(const TorusElement& a, const TorusElement& b) = default;
  friend bool operator<(const TorusElement& a, const TorusElement& b);

  std::string to_string() const;

 private:
  RatVec coords_;
};

/// T(sigma): closure of the row classes of A_sigma^{-1} under addition.
/// Throws ClosureOverflow if more than vol(sigma) classes appear.
std::vector<TorusElement> torus_subgroup(const IntMat& A, const BasicSubset& s);

/// Gamma: union of T(sigma) over the given subsets, sorted.
std::vector<TorusElement> torus_points(const IntMat& A, std::span<const BasicSubset> subsets);

/// lcm of the element orders (the cyclotomic order needed for Gamma).
unsigned ambient_order(std::span<const TorusElement> gamma);

/// cone(sigma) in canonical half-space form.
ConeH basic_cone(const IntMat& A, const BasicSubset& s);

/// Strictly positive functional on the columns (theta . a_k > 0), if one exists.
std::optional<IntVec> positive_functional(const IntMat& A);

struct MaximalCone {
  ConeH cone;
  std::vector<std::size_t> containing;  // indices of basic subsets with cone(sigma) >= C
  std::vector<std::size_t> nbc;         // indices into the NBC list: B_nb(C)
};

struct FanEdge {
  std::size_t from;
  std::size_t to;
  IntVec facet_normal;  // normal of `from` defining the shared facet
};

/// fan(A): the maximal cones of the common refinement of the basic cones.
class ChamberFan {
 public:
  ChamberFan(IntMat A, std::vector<BasicSubset> basic, std::vector<BasicSubset> nbc,
             std::vector<MaximalCone> cones, std::vector<FanEdge> edges);

  const IntMat& matrix() const { return A_; }
  const std::vector<BasicSubset>& basic_subsets() const { return basic_; }
  const std::vector<BasicSubset>& nbc_subsets() const { return nbc_; }
  const std::vector<MaximalCone>& cones() const { return cones_; }
  const std::vector<FanEdge>& edges() const { return edges_; }

  /// Index of the first maximal cone containing h.
  std::optional<std::size_t> locate(std::span<const Int> h) const;
  /// Neighbor of cone i across its facet with the given normal, if any.
  std::optional<std::size_t> neighbor(std::size_t i, const IntVec& facet_normal) const;

 private:
  IntMat A_;
  std::vector<BasicSubset> basic_;
  std::vector<BasicSubset> nbc_;
  std::vector<MaximalCone> cones_;
  std::vector<FanEdge> edges_;
};

/// Indices of basic subsets whose cone contains the point. Throws DegenerateSeed
/// if the point lies on the boundary hyperplane of some basic cone.
std::vector<std::size_t> generic_containing_subsets(const IntMat& A,
                                                    std::span<const BasicSubset> basic,
                                                    std::span<const Int> point);

/// Breadth-first facet-neighbor traversal from a random generic seed. Cones are
/// sorted canonically afterwards, so the result does not depend on the seed.
ChamberFan build_fan(const IntMat& A, std::vector<BasicSubset> basic,
                     std::vector<BasicSubset> nbc, std::uint64_t seed = 0x5eedf00dULL);

/// B_nb(C): NBC subsets whose cone contains C. Throws EmptyNbc if none do.
std::vector<std::size_t> b_nb_for_cone(const IntMat& A, const ConeH& C,
                                       std::span<const BasicSubset> nbc);

}  // namespace vpf
