#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vpf/rational.hpp"

namespace vpf {

/// Coefficients (constant term first) of the m-th cyclotomic polynomial.
const std::vector<Int>& cyclotomic_polynomial(unsigned m);

/// Euler's totient, the degree of the m-th cyclotomic polynomial.
unsigned totient(unsigned m);

/// Element of Q(zeta_m), zeta_m = exp(2 pi i / m), stored in the power basis
/// 1, zeta, ..., zeta^(phi(m)-1) after reduction by the m-th cyclotomic polynomial,
/// so equal values of the same order have equal coefficient vectors. Operands of
/// different orders are embedded into the field of the lcm order.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rat(0)) {}
  Cyclotomic(const Rat& r);  // NOLINT: rationals embed implicitly
  Cyclotomic(long v) : Cyclotomic(Rat(v)) {}  // NOLINT

  /// zeta_m^r.
  static Cyclotomic root_of_unity(unsigned m, long r);

  unsigned order() const { return order_; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }

  /// Same value, represented in Q(zeta_target); target must be a multiple of order().
  Cyclotomic lift(unsigned target) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Throws NonRationalCoefficient unless is_rational().
  Rat rational_value() const;

  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  Cyclotomic(unsigned order, std::vector<Rat> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}

  unsigned order_ = 1;
  std::vector<Rat> coeffs_;
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline bool is_zero(const Rat& r) { return r == 0; }

}  // namespace vpf
