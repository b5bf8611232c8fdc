#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "vpf/chambers.hpp"
#include "vpf/matrix.hpp"
#include "vpf/rational.hpp"

namespace vpf::so5 {

/// Highest weight l1*w1 + l2*w2.
struct Weight {
  long l1 = 0;
  long l2 = 0;
  bool dominant() const { return l1 >= 0 && l2 >= 0; }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// b1*alpha1 + b2*alpha2; the weight in question is lambda - beta.
struct RootVector {
  long b1 = 0;
  long b2 = 0;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

/// Pattern coordinates (a22, a11, a12, a13).
struct PatternPoint {
  long a22 = 0;
  long a11 = 0;
  long a12 = 0;
  long a13 = 0;
};

/// Cone and polytope inequalities for the pattern.
bool in_cone(const PatternPoint& a);
bool in_polytope(const PatternPoint& a, const Weight& w);
RootVector weight_of(const PatternPoint& a);  // (a22 + a12, a11 + a13)

IntMat matrix_A();  // 8 x 10
IntMat matrix_B();  // 8 x 4, (l1, l2, b1, b2) -> right-hand side

/// Inequality normals of the reference chambers 1..33 in (l1, l2, b1, b2).
const std::vector<std::vector<IntVec>>& reference_chamber_normals();
/// Alternative reading of reference chamber 16.
std::vector<IntVec> reference_chamber_16_alternative();

/// Full pipeline for A, B. Chambers equal to a reference chamber take its id;
/// a chamber left over is given the id of the only unused reference chamber
/// containing it. The rest follow in canonical order.
ChamberTable build_chamber_table(unsigned threads = 0);

/// Reference ids matched by build_chamber_table and which reading of 16 matched.
struct ReferenceMatch {
  std::vector<int> matched;      // equal cones
  std::vector<int> by_containment;
  bool chamber16_alternative = false;
};
ReferenceMatch assign_reference_ids(ChamberTable& table);

/// K^lambda_beta from the table; 0 for non-dominant lambda or beta outside the chambers.
/// Throws NonIntegerValue / NegativeValue if the table is inconsistent.
Int multiplicity(const Weight& w, const RootVector& b, const ChamberTable& table);
/// Same, also reporting the chamber used (0 if none).
std::pair<Int, int> multiplicity_with_chamber(const Weight& w, const RootVector& b, const ChamberTable& table);

/// Direct count of integral patterns.
Int brute_force_multiplicity(const Weight& w, const RootVector& b);

/// Box of beta values that can carry a weight of V(lambda).
struct SupportBox {
  long b1_max;
  long b2_max;
};
SupportBox support_box(const Weight& w);

/// All beta with K^lambda_beta > 0.
std::map<RootVector, Int> character(const Weight& w, const ChamberTable& table);
std::map<RootVector, Int> brute_force_character(const Weight& w);

/// (l1+1)(l2+1)(l1+l2+2)(l1+2 l2+3)/6
Int weyl_dimension(const Weight& w);

/// Simple reflections acting on lambda - beta, expressed on beta.
RootVector reflect_s1(const Weight& w, const RootVector& b);
RootVector reflect_s2(const Weight& w, const RootVector& b);

/// dim V(lambda)_0 for lambda = i alpha1 + j alpha2 by the closed formula; 0 unless i/2 <= j <= i.
Int weight_zero_dim(long i, long j);
Weight weight_from_roots(long i, long j);  // (2i - 2j, -i + 2j)

enum class NearHighest { Alpha1, Alpha2, Alpha1Alpha2, TwoAlpha1Alpha2 };
RootVector root_vector(NearHighest e);
/// Closed value when its hypothesis on lambda holds, else the table value.
Int near_highest(const Weight& w, NearHighest e, const ChamberTable& table);
/// Closed value, or nothing when the hypothesis fails.
std::optional<Int> near_highest_formula(const Weight& w, NearHighest e);

/// Parametrization with the simple roots in the opposite order and weights given absolutely.
std::pair<std::array<long, 2>, std::array<long, 2>> lie_reparam(const Weight& w, const RootVector& b);

struct SlicePolygon {
  int chamber_id;
  std::size_t dim;                               // 0, 1 or 2
  std::vector<std::array<Rat, 2>> vertices;      // counter-clockwise for dim 2
};
/// Slices of the chambers at fixed lambda, restricted to the slices of largest
/// dimension; identical slices are reported once (lowest id).
std::vector<SlicePolygon> induced_decomposition(const Weight& w, const ChamberTable& table);

}  // namespace vpf::so5
