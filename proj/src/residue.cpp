#include "vpf/residue.hpp"

#include <numeric>

#include "vpf/errors.hpp"
#include "vpf/parallel.hpp"

namespace vpf {

namespace {

template <class T>
std::vector<T> series_inverse(const std::vector<T>& a) {
  std::vector<T> b(a.size());
  const T inv0 = T(1) / a[0];
  b[0] = inv0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    T s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += a[i] * b[k - i];
    b[k] = -(s * inv0);
  }
  return b;
}

Rat factorial(int m) {
  Rat f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// x / (1 - e^{-x})
std::vector<Rat> todd_series(int degree) {
  std::vector<Rat> a(static_cast<std::size_t>(degree) + 1);
  for (int m = 0; m <= degree; ++m) a[m] = Rat((m % 2 == 0) ? 1 : -1) / factorial(m + 1);
  return series_inverse(a);
}

// 1 / (1 - eta e^{-x})
std::vector<Cyclotomic> geometric_series(const Cyclotomic& eta, int degree) {
  std::vector<Cyclotomic> a(static_cast<std::size_t>(degree) + 1);
  a[0] = Cyclotomic(1) - eta;
  for (int m = 1; m <= degree; ++m) a[m] = -(eta * Cyclotomic(Rat((m % 2 == 0) ? 1 : -1) / factorial(m)));
  return series_inverse(a);
}

template <class T>
CycPoly compose(const std::vector<T>& series, const RatVec& form, int degree) {
  const std::size_t n = form.size();
  const CycPoly l = CycPoly::linear<Rat>(form);
  CycPoly power = CycPoly::constant(n, Cyclotomic(1));
  CycPoly out(n);
  for (int m = 0; m <= degree; ++m) {
    if (m > 0) power = power * l;
    out += power.scaled(Cyclotomic(series[m]));
  }
  return out;
}

struct ColumnData {
  RatVec form;
  bool pole;
  Cyclotomic eta;
};

std::vector<ColumnData> columns(const IntMat& A, const TorusElement& g, const RatMat& inverse) {
  std::vector<ColumnData> out;
  const unsigned order = g.order();
  for (std::size_t k = 0; k < A.cols(); ++k) {
    const IntVec a = A.column(k);
    if (std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; }))
      throw Error(ErrorKind::ZeroDenominatorFactor, "column " + std::to_string(k + 1) + " is zero");
    ColumnData c;
    c.form = inverse.apply(to_rat(a));
    const Rat gamma = g.pairing(a);
    c.pole = gamma == 0;
    if (!c.pole) {
      const Rat r = gamma * order;
      c.eta = Cyclotomic::root_of_unity(order, -r.get_num().get_si());
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

int required_truncation(const IntMat& A, const BasicSubset& s, const TorusElement& g) {
  int poles = 0;
  for (std::size_t k = 0; k < A.cols(); ++k)
    if (g.pairing(A.column(k)) == 0) ++poles;
  return poles - static_cast<int>(s.indices.size());
}

KostantExpansion expand_kostant_term(const IntMat& A, const BasicSubset& s, const TorusElement& g,
                                     std::optional<int> truncation) {
  const std::size_t n = A.rows();
  if (s.indices.size() != n || g.dim() != n)
    throw Error(ErrorKind::InvalidArgument, "basic subset or torus element has wrong size");
  const RatMat inverse = invert(to_rat(basis_matrix(A, s)));
  const auto cols = columns(A, g, inverse);

  KostantExpansion e;
  e.n = n;
  int poles = 0;
  for (const auto& c : cols) poles += c.pole ? 1 : 0;
  e.truncation = truncation.value_or(std::max(0, poles - static_cast<int>(n)));
  if (e.truncation < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation");

  for (std::size_t j = 0; j < n; ++j) {
    RatVec row(inverse.row(j).begin(), inverse.row(j).end());
    e.weights.push_back(RatPoly::linear<Rat>(row));
  }

  const auto todd = todd_series(e.truncation);
  e.holomorphic = CycPoly::constant(n, Cyclotomic(1));
  for (const auto& c : cols) {
    CycPoly factor = c.pole ? compose(todd, c.form, e.truncation)
                            : compose(geometric_series(c.eta, e.truncation), c.form, e.truncation);
    e.holomorphic = CycPoly::multiply(e.holomorphic, factor, e.truncation);
    if (c.pole) e.poles.push_back(c.form);
  }
  return e;
}

CycPoly iterated_residue(const KostantExpansion& e) {
  const std::size_t n = e.n;
  const int P = static_cast<int>(e.poles.size());
  const int D = P - static_cast<int>(n);
  CycPoly zero(n);
  if (D < 0) return zero;
  if (e.truncation < D)
    throw Error(ErrorKind::TruncationTooLow, "holomorphic part truncated at degree " +
                                                 std::to_string(e.truncation) + ", need " +
                                                 std::to_string(D));

  std::vector<std::size_t> top(e.poles.size());
  std::vector<int> prefix(n + 1, 0);  // prefix[j]: poles whose top variable index < j
  for (std::size_t p = 0; p < e.poles.size(); ++p) {
    std::size_t t = n;
    for (std::size_t j = n; j-- > 0;)
      if (e.poles[p][j] != 0) {
        t = j;
        break;
      }
    if (t == n) throw Error(ErrorKind::InvariantViolation, "zero pole form");
    top[p] = t;
    for (std::size_t j = t + 1; j <= n; ++j) ++prefix[j];
  }
  for (std::size_t j = 1; j <= n; ++j)
    if (prefix[j] < static_cast<int>(j)) return zero;

  RatPoly product = RatPoly::constant(n, Rat(1));
  for (std::size_t p = 0; p < e.poles.size(); ++p) {
    const std::size_t t = top[p];
    const Rat c = e.poles[p][t];
    RatVec low_form = e.poles[p];
    low_form[t] = 0;
    const RatPoly low = RatPoly::linear<Rat>(low_form);
    const int M = prefix[t] - static_cast<int>(t);
    RatPoly factor(n);
    RatPoly power = RatPoly::constant(n, Rat(1));
    Rat cpow = c;
    for (int m = 0; m <= M; ++m) {
      if (m > 0) {
        power = power * low;
        cpow *= c;
      }
      const Rat scale = Rat(m % 2 == 0 ? 1 : -1) / cpow;
      for (const auto& [ex, coef] : power.terms()) {
        Exponents shifted = ex;
        shifted[t] -= m + 1;
        factor.add_term(shifted, coef * scale);
      }
    }
    product = product * factor;
  }

  std::map<Exponents, RatPoly> exp_terms;
  auto exp_term = [&](const Exponents& beta) -> const RatPoly& {
    auto it = exp_terms.find(beta);
    if (it != exp_terms.end()) return it->second;
    RatPoly w = RatPoly::constant(n, Rat(1));
    Rat denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      for (int k = 0; k < beta[j]; ++k) w = w * e.weights[j];
      denom *= factorial(beta[j]);
    }
    return exp_terms.emplace(beta, w.scaled(Rat(1) / denom)).first->second;
  };

  CycPoly result(n);
  for (const auto& [ex, pole_coef] : product.terms()) {
    Exponents alpha(n);
    bool valid = true;
    for (std::size_t j = 0; j < n; ++j) {
      alpha[j] = -1 - ex[j];
      if (alpha[j] < 0) valid = false;
    }
    if (!valid) continue;
    // coefficient of z^alpha in holomorphic * e^{<z,w>}
    for (const auto& [kappa, kcoef] : e.holomorphic.terms()) {
      Exponents beta(n);
      bool fits = true;
      for (std::size_t j = 0; j < n; ++j) {
        beta[j] = alpha[j] - kappa[j];
        if (beta[j] < 0) fits = false;
      }
      if (!fits) continue;
      const Cyclotomic scale = kcoef * Cyclotomic(pole_coef);
      result += exp_term(beta).map_coefficients<Cyclotomic>([&](const Rat& r) { return scale * Cyclotomic(r); });
    }
  }
  return result;
}

void CharacterSum::add(const TorusElement& g, const CycPoly& q) {
  if (g.dim() != n_ || q.nvars() != n_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  if (q.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, q);
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Cyclotomic CharacterSum::evaluate(std::span<const Int> h) const {
  const std::vector<Cyclotomic> x(h.begin(), h.end());
  Cyclotomic sum = 0;
  for (const auto& [g, q] : terms_) {
    const unsigned m = g.order();
    const Rat r = g.pairing(h) * m;
    sum += Cyclotomic::root_of_unity(m, r.get_num().get_si()) * q.evaluate<Cyclotomic>(x);
  }
  return sum;
}

CharacterSum CharacterSum::pullback(const IntMat& M) const {
  if (M.rows() != n_) throw Error(ErrorKind::InvalidArgument, "pullback map has wrong row count");
  const std::size_t m = M.cols();
  std::vector<CycPoly> images;
  for (std::size_t i = 0; i < n_; ++i) {
    RatVec row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = M(i, j);
    images.push_back(CycPoly::linear<Rat>(row));
  }
  CharacterSum out(m);
  for (const auto& [g, q] : terms_) out.add(g.compose(M), q.substitute(images));
  return out;
}

QuasiPolynomial CharacterSum::to_quasi_polynomial(std::size_t max_cosets) const {
  std::vector<unsigned> period(n_, 1u);
  for (const auto& [g, q] : terms_)
    for (std::size_t j = 0; j < n_; ++j)
      period[j] = std::lcm(period[j], static_cast<unsigned>(g.coords()[j].get_den().get_ui()));
  std::size_t count = 1;
  for (unsigned p : period) {
    count *= p;
    if (count > max_cosets) throw Error(ErrorKind::InvalidArgument, "period too large");
  }
  std::vector<RatPoly> cosets;
  cosets.reserve(count);
  std::vector<Int> r(n_, Int(0));
  for (std::size_t idx = 0; idx < count; ++idx) {
    CycPoly sum(n_);
    for (const auto& [g, q] : terms_) {
      const unsigned m = g.order();
      const Rat k = g.pairing(r) * m;
      sum += q.scaled(Cyclotomic::root_of_unity(m, k.get_num().get_si()));
    }
    cosets.push_back(sum.map_coefficients<Rat>([](const Cyclotomic& c) { return c.rational_value(); }));
    for (std::size_t j = n_; j-- > 0;) {
      r[j] += 1;
      if (r[j] < period[j]) break;
      r[j] = 0;
    }
  }
  return QuasiPolynomial(period, std::move(cosets)).minimized();
}

ResidueEngine::ResidueEngine(IntMat A, std::vector<BasicSubset> nbc, std::vector<TorusElement> gamma,
                             unsigned threads)
    : A_(std::move(A)), nbc_(std::move(nbc)), gamma_(std::move(gamma)) {
  terms_.resize(nbc_.size() * gamma_.size());
  if (threads == 0) threads = worker_count();
  parallel_for(terms_.size(), threads, [&](std::size_t i) {
    const auto& s = nbc_[i / gamma_.size()];
    const auto& g = gamma_[i % gamma_.size()];
    terms_[i] = iterated_residue(expand_kostant_term(A_, s, g));
  });
}

CharacterSum ResidueEngine::chamber_sum(std::span<const std::size_t> b_nb) const {
  CharacterSum out(A_.rows());
  for (std::size_t si : b_nb) {
    if (si >= nbc_.size()) throw Error(ErrorKind::InvalidArgument, "NBC index out of range");
    const Cyclotomic scale(Rat(1) / Rat(nbc_[si].volume));
    for (std::size_t gi = 0; gi < gamma_.size(); ++gi) out.add(gamma_[gi], term(si, gi).scaled(scale));
  }
  return out;
}

QuasiPolynomial ResidueEngine::chamber_quasipolynomial(std::span<const std::size_t> b_nb) const {
  return chamber_sum(b_nb).to_quasi_polynomial();
}

QuasiPolynomial chamber_quasipolynomial(const IntMat& A, const ConeH& C) {
  auto basic = enumerate_basic_subsets(A);
  auto nbc = enumerate_nbc(A);
  const auto b_nb = b_nb_for_cone(A, C, nbc);
  auto gamma = torus_points(A, basic);
  std::vector<BasicSubset> used;
  for (std::size_t i : b_nb) used.push_back(nbc[i]);
  std::vector<std::size_t> idx(used.size());
  std::iota(idx.begin(), idx.end(), 0);
  ResidueEngine engine(A, std::move(used), std::move(gamma));
  return engine.chamber_quasipolynomial(idx);
}

}  // namespace vpf
