#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vpf/matrix.hpp"
#include "vpf/rational.hpp"

namespace vpf {

/// Generators of a polyhedral cone: cone(rays) + span(lines).
struct Generators {
  std::vector<IntVec> rays;
  std::vector<IntVec> lines;
};

/// Double description: generators of {x in R^dim : a.x >= 0 for all a in inequalities}.
/// Rays are extreme and primitive; lines form a basis of the lineality space.
Generators double_description(std::size_t dim, const std::vector<IntVec>& inequalities);

/// Polyhedral cone {x : nu.x >= 0 for every stored normal nu} in canonical form.
///
/// Normals are primitive integer covectors sorted lexicographically. Facet
/// normals are irredundant and, for lower-dimensional cones, orthogonally
/// projected into the linear span of the cone; the span itself is cut out by
/// +/- pairs of primitive equations taken from the reduced echelon basis of its
/// orthogonal complement. Equal cones therefore have equal normal lists.
class ConeH {
 public:
  ConeH() = default;

  static ConeH from_inequalities(std::size_t ambient_dim, std::vector<IntVec> normals);
  static ConeH from_generators(std::size_t ambient_dim, const std::vector<IntVec>& gens);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == ambient_dim_; }

  const std::vector<IntVec>& normals() const { return normals_; }
  /// Normals whose negation is not also a normal.
  std::vector<IntVec> facet_normals() const;
  std::vector<IntVec> equations() const;

  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& lines() const { return lines_; }

  bool contains(std::span<const Rat> x) const;
  bool contains(std::span<const Int> x) const;
  /// x lies strictly inside every facet (relative interior of the cone).
  bool contains_in_relative_interior(std::span<const Int> x) const;

  /// Cone with the facet on `facet_normal` made tight (a face of this cone).
  ConeH face(const IntVec& facet_normal) const;
  /// One face per facet normal, in normal order.
  std::vector<ConeH> facets() const;

  /// Integer point in the relative interior: sum of the rays (lines ignored).
  IntVec interior_point() const;

  /// Canonical text "[[a,b,...],[...]]".
  std::string key() const;

  friend bool operator==(const ConeH& a, const ConeH& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.normals_ == b.normals_;
  }
  friend bool operator<(const ConeH& a, const ConeH& b);

 private:
  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<IntVec> normals_;
  std::vector<IntVec> rays_;
  std::vector<IntVec> lines_;
};

ConeH intersect(const ConeH& a, const ConeH& b);

/// Pulls a cone in R^n back along y -> M y (M is n x m): {y in R^m : M y in c}.
ConeH pullback(const ConeH& c, const IntMat& map);

}  // namespace vpf
