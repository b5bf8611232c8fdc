#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vpf/polynomial.hpp"
#include "vpf/rational.hpp"

namespace vpf {

/// f(h) = f_r(h) where r = h mod period (componentwise); one rational
/// polynomial per residue class. Residue classes are stored in lexicographic
/// order of the residue vectors (last coordinate fastest).
class QuasiPolynomial {
 public:
  QuasiPolynomial() = default;
  QuasiPolynomial(std::vector<unsigned> period, std::vector<RatPoly> cosets);
  static QuasiPolynomial polynomial(const RatPoly& p);

  std::size_t dim() const { return period_.size(); }
  const std::vector<unsigned>& period() const { return period_; }
  const std::vector<RatPoly>& cosets() const { return cosets_; }
  std::size_t coset_count() const { return cosets_.size(); }

  /// Residue vector of the i-th coset.
  std::vector<unsigned> residue(std::size_t index) const;
  std::size_t coset_index(std::span<const Int> h) const;
  const RatPoly& coset_polynomial(std::span<const Int> h) const { return cosets_[coset_index(h)]; }

  Rat evaluate(std::span<const Int> h) const;

  /// Same function over a finer period (each entry a multiple of the current one).
  QuasiPolynomial with_period(const std::vector<unsigned>& period) const;
  /// Smallest period describing the same function.
  QuasiPolynomial minimized() const;

  /// Largest total degree over all cosets.
  int degree() const;
  bool coset_independent() const { return cosets_.size() == 1; }

  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b);

 private:
  std::vector<unsigned> period_;
  std::vector<RatPoly> cosets_;
};

/// Equality as functions on Z^n (periods harmonized to their lcm).
bool quasipoly_equal(const QuasiPolynomial& a, const QuasiPolynomial& b);

}  // namespace vpf
