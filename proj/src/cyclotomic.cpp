#include "vpf/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "vpf/errors.hpp"
#include "vpf/matrix.hpp"

namespace vpf {

namespace {

struct FieldTables {
  unsigned order = 1;
  unsigned degree = 1;
  std::vector<Int> modulus;
  // powers[k] = x^k reduced modulo the cyclotomic polynomial, k < max(order, 2 * degree).
  std::vector<std::vector<Rat>> powers;
};

std::vector<Int> compute_cyclotomic(unsigned m) {
  // x^m - 1 divided by every Phi_d for proper divisors d of m.
  std::vector<Int> num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<Int> q(num.size() - dd, Int(0));
    for (std::size_t i = num.size(); i-- > dd;) {
      const Int c = num[i];  // den is monic
      q[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return num;
}

const FieldTables& tables(unsigned m) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<FieldTables>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return *it->second;
  auto t = std::make_unique<FieldTables>();
  t->order = m;
  t->modulus = compute_cyclotomic(m);
  t->degree = static_cast<unsigned>(t->modulus.size() - 1);
  const std::size_t count = std::max<std::size_t>(m, 2 * t->degree);
  std::vector<Rat> cur(t->degree, Rat(0));
  cur[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    t->powers.push_back(cur);
    // multiply by x and reduce: x^degree = -sum modulus[j] x^j
    std::vector<Rat> next(t->degree, Rat(0));
    for (std::size_t j = 0; j + 1 < t->degree; ++j) next[j + 1] = cur[j];
    const Rat top = cur[t->degree - 1];
    if (top != 0)
      for (std::size_t j = 0; j < t->degree; ++j) next[j] -= top * t->modulus[j];
    cur = std::move(next);
  }
  return *cache.emplace(m, std::move(t)).first->second;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<std::vector<Int>>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  auto p = std::make_unique<std::vector<Int>>(compute_cyclotomic(m));
  std::lock_guard lock(mutex);
  return *cache.emplace(m, std::move(p)).first->second;
}

unsigned totient(unsigned m) {
  unsigned count = 0;
  for (unsigned k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) ++count;
  return count;
}

Cyclotomic::Cyclotomic(const Rat& r) : order_(1), coeffs_{r} {}

Cyclotomic Cyclotomic::root_of_unity(unsigned m, long r) {
  const auto& t = tables(m);
  const long k = ((r % static_cast<long>(m)) + m) % m;
  return Cyclotomic(m, t.powers[static_cast<std::size_t>(k)]);
}

Cyclotomic Cyclotomic::lift(unsigned target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) throw Error(ErrorKind::InvalidArgument, "lift target not a multiple");
  const auto& t = tables(target);
  const unsigned step = target / order_;
  std::vector<Rat> out(t.degree, Rat(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& p = t.powers[(k * step) % target];
    for (std::size_t j = 0; j < t.degree; ++j)
      if (p[j] != 0) out[j] += coeffs_[k] * p[j];
  }
  return Cyclotomic(target, std::move(out));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_value() const {
  if (!is_rational()) {
    throw Error(ErrorKind::NonRationalCoefficient, "value " + to_string() + " is not rational");
  }
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  auto out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const unsigned m = std::lcm(order_, o.order_);
  if (m != order_) *this = lift(m);
  if (o.order_ == m) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  } else {
    const auto lifted = o.lift(m);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += lifted.coeffs_[k];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (order_ == 1) {
    const Rat s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  const unsigned m = std::lcm(order_, o.order_);
  const Cyclotomic a = lift(m);
  const Cyclotomic b = o.lift(m);
  const auto& t = tables(m);
  std::vector<Rat> prod(2 * t.degree, Rat(0));
  for (std::size_t i = 0; i < t.degree; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < t.degree; ++j)
      if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  std::vector<Rat> out(t.degree, Rat(0));
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& p = t.powers[k];
    for (std::size_t j = 0; j < t.degree; ++j)
      if (p[j] != 0) out[j] += prod[k] * p[j];
  }
  order_ = m;
  coeffs_ = std::move(out);
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  if (order_ == 1) return Cyclotomic(Rat(1) / coeffs_[0]);
  // Solve (multiplication-by-this) x = 1 in the power basis.
  const auto& t = tables(order_);
  const std::size_t d = t.degree;
  RatMat mul(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Cyclotomic col = *this * Cyclotomic(order_, t.powers[j]);
    for (std::size_t i = 0; i < d; ++i) mul(i, j) = col.coeffs_[i];
  }
  const RatMat inv = invert(mul);
  return Cyclotomic(order_, inv.column(0));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const unsigned m = std::lcm(a.order_, b.order_);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + vpf::to_string(coeffs_[k]) + ")";
    if (k > 0) out += "*z" + std::to_string(order_) + "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace vpf
