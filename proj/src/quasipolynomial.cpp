#include "vpf/quasipolynomial.hpp"

#include <numeric>

#include "vpf/errors.hpp"

namespace vpf {

namespace {

std::size_t product(const std::vector<unsigned>& p) {
  std::size_t n = 1;
  for (unsigned x : p) n *= x;
  return n;
}

std::size_t index_of(const std::vector<unsigned>& period, const std::vector<unsigned>& r) {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < period.size(); ++j) idx = idx * period[j] + r[j];
  return idx;
}

}  // namespace

QuasiPolynomial::QuasiPolynomial(std::vector<unsigned> period, std::vector<RatPoly> cosets)
    : period_(std::move(period)), cosets_(std::move(cosets)) {
  for (unsigned p : period_)
    if (p == 0) throw Error(ErrorKind::InvalidArgument, "period entries must be positive");
  if (cosets_.size() != product(period_))
    throw Error(ErrorKind::InvalidArgument, "coset count does not match the period");
  for (const auto& c : cosets_)
    if (c.nvars() != period_.size())
      throw Error(ErrorKind::InvalidArgument, "coset polynomial has wrong variable count");
}

QuasiPolynomial QuasiPolynomial::polynomial(const RatPoly& p) {
  return QuasiPolynomial(std::vector<unsigned>(p.nvars(), 1u), {p});
}

std::vector<unsigned> QuasiPolynomial::residue(std::size_t index) const {
  std::vector<unsigned> r(period_.size());
  for (std::size_t j = period_.size(); j-- > 0;) {
    r[j] = static_cast<unsigned>(index % period_[j]);
    index /= period_[j];
  }
  return r;
}

std::size_t QuasiPolynomial::coset_index(std::span<const Int> h) const {
  if (h.size() != period_.size()) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  std::vector<unsigned> r(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    Int m;
    mpz_fdiv_r_ui(m.get_mpz_t(), h[j].get_mpz_t(), period_[j]);
    r[j] = static_cast<unsigned>(m.get_ui());
  }
  return index_of(period_, r);
}

Rat QuasiPolynomial::evaluate(std::span<const Int> h) const {
  const RatVec x = to_rat(h);
  return cosets_[coset_index(h)].evaluate<Rat>(x);
}

QuasiPolynomial QuasiPolynomial::with_period(const std::vector<unsigned>& period) const {
  if (period.size() != period_.size()) throw Error(ErrorKind::InvalidArgument, "period dimension mismatch");
  for (std::size_t j = 0; j < period.size(); ++j)
    if (period[j] == 0 || period[j] % period_[j] != 0)
      throw Error(ErrorKind::InvalidArgument, "target period is not a multiple");
  std::vector<RatPoly> cosets;
  const std::size_t count = product(period);
  cosets.reserve(count);
  std::vector<unsigned> r(period.size(), 0u);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::vector<unsigned> coarse(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) coarse[j] = r[j] % period_[j];
    cosets.push_back(cosets_[index_of(period_, coarse)]);
    for (std::size_t j = r.size(); j-- > 0;) {
      if (++r[j] < period[j]) break;
      r[j] = 0;
    }
  }
  return QuasiPolynomial(period, std::move(cosets));
}

QuasiPolynomial QuasiPolynomial::minimized() const {
  QuasiPolynomial cur = *this;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < cur.dim() && !changed; ++j) {
      const unsigned p = cur.period_[j];
      for (unsigned q = 2; q <= p && !changed; ++q) {
        if (p % q != 0) continue;
        bool prime = true;
        for (unsigned d = 2; d * d <= q; ++d)
          if (q % d == 0) prime = false;
        if (!prime) continue;
        const unsigned reduced = p / q;
        bool periodic = true;
        for (std::size_t idx = 0; idx < cur.coset_count() && periodic; ++idx) {
          auto r = cur.residue(idx);
          auto base = r;
          base[j] = r[j] % reduced;
          periodic = cur.cosets_[idx] == cur.cosets_[index_of(cur.period_, base)];
        }
        if (!periodic) continue;
        std::vector<unsigned> np = cur.period_;
        np[j] = reduced;
        std::vector<RatPoly> nc;
        for (std::size_t idx = 0; idx < product(np); ++idx) {
          std::vector<unsigned> r(np.size());
          std::size_t t = idx;
          for (std::size_t k = np.size(); k-- > 0;) {
            r[k] = static_cast<unsigned>(t % np[k]);
            t /= np[k];
          }
          nc.push_back(cur.cosets_[index_of(cur.period_, r)]);
        }
        cur = QuasiPolynomial(std::move(np), std::move(nc));
        changed = true;
      }
    }
  }
  return cur;
}

int QuasiPolynomial::degree() const {
  int d = -1;
  for (const auto& c : cosets_) d = std::max(d, c.degree());
  return d;
}

bool quasipoly_equal(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  if (a.dim() != b.dim()) return false;
  std::vector<unsigned> p(a.dim());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = std::lcm(a.period()[j], b.period()[j]);
  return a.with_period(p).cosets() == b.with_period(p).cosets();
}

bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) { return quasipoly_equal(a, b); }

}  // namespace vpf
