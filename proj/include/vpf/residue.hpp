#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "vpf/combinatorics.hpp"
#include "vpf/matrix.hpp"
#include "vpf/polynomial.hpp"
#include "vpf/quasipolynomial.hpp"

namespace vpf {

/// Laurent data of the Kostant-type integrand e^<u+2pi i g,h> / prod (1 - e^-<u+2pi i g,a_k>)
/// written in the coordinates z_j = <u, a_{i_j}> of a basic subset, with the
/// character e^{2 pi i <g,h>} split off.
struct KostantExpansion {
  std::size_t n = 0;
  int truncation = 0;                // holomorphic part kept up to this total degree
  std::vector<RatPoly> weights;      // (A_sigma^{-1} h)_j as linear polynomials in h
  std::vector<RatVec> poles;         // linear forms in z of the factors 1/l
  CycPoly holomorphic;               // product of Todd and 1/(1 - eta e^{-l}) series in z
};

/// Number of pole factors minus n; the holomorphic degree the residue needs.
int required_truncation(const IntMat& A, const BasicSubset& s, const TorusElement& g);

/// Throws ZeroDenominatorFactor for a zero column.
KostantExpansion expand_kostant_term(const IntMat& A, const BasicSubset& s, const TorusElement& g,
                                     std::optional<int> truncation = std::nullopt);

/// res_{z_n=0} ... res_{z_1=0} of the expansion times e^{<z,w(h)>}, as a polynomial in h.
/// Throws TruncationTooLow if the expansion was truncated below the needed degree.
CycPoly iterated_residue(const KostantExpansion& e);

/// sum_g e^{2 pi i <g,h>} Q_g(h)
class CharacterSum {
 public:
  explicit CharacterSum(std::size_t n = 0) : n_(n) {}

  std::size_t dim() const { return n_; }
  void add(const TorusElement& g, const CycPoly& q);
  const std::map<TorusElement, CycPoly>& terms() const { return terms_; }

  Cyclotomic evaluate(std::span<const Int> h) const;
  /// Composition with h = M y.
  CharacterSum pullback(const IntMat& M) const;
  /// Throws NonRationalCoefficient if some coset polynomial is not rational,
  /// InvalidArgument if the period has more than max_cosets classes.
  QuasiPolynomial to_quasi_polynomial(std::size_t max_cosets = std::size_t{1} << 20) const;

 private:
  std::size_t n_;
  std::map<TorusElement, CycPoly> terms_;
};

/// Caches ires_sigma F_{g,h} for every NBC subset sigma and every g in Gamma.
class ResidueEngine {
 public:
  /// gamma must hold T(sigma) for every basic subset, not only the NBC ones.
  /// threads == 0 uses worker_count().
  ResidueEngine(IntMat A, std::vector<BasicSubset> nbc, std::vector<TorusElement> gamma,
                unsigned threads = 0);

  const IntMat& matrix() const { return A_; }
  const std::vector<BasicSubset>& nbc() const { return nbc_; }
  const std::vector<TorusElement>& gamma() const { return gamma_; }
  const CycPoly& term(std::size_t nbc_index, std::size_t gamma_index) const {
    return terms_[nbc_index * gamma_.size() + gamma_index];
  }

  /// Phi_A on the chamber whose NBC set is b_nb.
  CharacterSum chamber_sum(std::span<const std::size_t> b_nb) const;
  QuasiPolynomial chamber_quasipolynomial(std::span<const std::size_t> b_nb) const;

 private:
  IntMat A_;
  std::vector<BasicSubset> nbc_;
  std::vector<TorusElement> gamma_;
  std::vector<CycPoly> terms_;
};

/// Quasi-polynomial of Phi_A on a maximal cone of the chamber fan.
QuasiPolynomial chamber_quasipolynomial(const IntMat& A, const ConeH& C);

}  // namespace vpf
