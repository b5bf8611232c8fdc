#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "vpf/cyclotomic.hpp"
#include "vpf/errors.hpp"
#include "vpf/rational.hpp"

namespace vpf {

/// Exponent vector; negative entries are allowed (Laurent monomials).
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Total degree ascending, then the larger exponent of an earlier variable first
/// (1, x, y, x^2, xy, y^2, ...).
struct GradedOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Sparse multivariate (Laurent) polynomial with exact coefficients, kept in
/// canonical form: no zero coefficients, monomials in GradedOrder.
template <class C>
class Polynomial {
 public:
  using Terms = std::map<Exponents, C, GradedOrder>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const C& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(e, C(1));
    return p;
  }

  /// sum_i coeffs[i] * x_i
  template <class R>
  static Polynomial linear(std::span<const R> coeffs) {
    Polynomial p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(e, C(coeffs[i]));
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Exponents& e, const C& c) {
    if (vpf::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (vpf::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Largest total degree of a monomial; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return multiply(a, b, std::numeric_limits<int>::max());
  }

  /// Product keeping only monomials of total degree <= max_degree.
  static Polynomial multiply(const Polynomial& a, const Polynomial& b, int max_degree) {
    Polynomial out(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
      const int da = total_degree(ea);
      for (const auto& [eb, cb] : b.terms_) {
        if (da + total_degree(eb) > max_degree) continue;
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  template <class S>
  Polynomial scaled(const S& s) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * C(s));
    return out;
  }

  /// Homogeneous component of the given total degree.
  Polynomial homogeneous_part(int d) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == d) out.terms_.emplace(e, c);
    return out;
  }

  /// Evaluates at a point whose coordinates lie in a ring V that C converts into.
  template <class V>
  V evaluate(std::span<const V> x) const {
    V sum = 0;
    for (const auto& [e, c] : terms_) {
      V t = V(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0) throw Error(ErrorKind::InvalidArgument, "evaluating a Laurent monomial");
        for (int k = 0; k < e[i]; ++k) t *= x[i];
      }
      sum += t;
    }
    return sum;
  }

  /// Substitutes x_i = images[i] (polynomials in a common set of variables).
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    const std::size_t m = images.empty() ? 0 : images.front().nvars();
    Polynomial out(m);
    for (const auto& [e, c] : terms_) {
      Polynomial t = Polynomial::constant(m, c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t = t * images[i];
      out += t;
    }
    return out;
  }

  /// Applies f to every coefficient.
  template <class D, class F>
  Polynomial<D> map_coefficients(F f) const {
    Polynomial<D> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form such as "1 + 3/2*b2 + 1/2*b2^2".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

std::string format_monomial(const Exponents& e, const std::vector<std::string>& names);

template <>
inline std::string Polynomial<Rat>::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const std::string mono = format_monomial(e, names);
    const bool negative = c < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += vpf::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += vpf::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

template <>
inline std::string Polynomial<Cyclotomic>::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.to_string() + "]";
    const std::string mono = format_monomial(e, names);
    if (!mono.empty()) out += "*" + mono;
  }
  return out;
}

inline std::string format_monomial(const Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

using RatPoly = Polynomial<Rat>;
using CycPoly = Polynomial<Cyclotomic>;

}  // namespace vpf
