#include "vpf/combinatorics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "vpf/errors.hpp"

namespace vpf {

std::string to_string(const BasicSubset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.indices[i] + 1);
  }
  return out + "}";
}

IntMat basis_matrix(const IntMat& A, const BasicSubset& s) { return A.select_columns(s.indices); }

namespace {

void require_full_rank(const IntMat& A) {
  if (A.rows() == 0 || A.cols() == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  if (rank(A) != A.rows()) {
    throw Error(ErrorKind::RankDeficient, "matrix rank is below its row count " + std::to_string(A.rows()));
  }
}

bool in_span(const IntMat& A, const std::vector<std::size_t>& cols, std::size_t k) {
  std::vector<std::size_t> ext = cols;
  ext.push_back(k);
  return rank(A.select_columns(ext)) == cols.size();
}

void nbc_extend(const IntMat& A, std::vector<std::size_t>& prefix, std::vector<BasicSubset>& out) {
  const std::size_t n = A.rows();
  const std::size_t N = A.cols();
  if (prefix.size() == n) {
    out.push_back({prefix, abs(det(A.select_columns(prefix)))});
    return;
  }
  const std::size_t start = prefix.empty() ? 0 : prefix.back() + 1;
  for (std::size_t i = start; i < N; ++i) {
    if (in_span(A, prefix, i)) continue;
    prefix.push_back(i);
    bool broken = false;
    for (std::size_t k = i + 1; k < N && !broken; ++k) broken = in_span(A, prefix, k);
    if (!broken) nbc_extend(A, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<BasicSubset> enumerate_basic_subsets(const IntMat& A) {
  require_full_rank(A);
  const std::size_t n = A.rows();
  const std::size_t N = A.cols();
  std::vector<BasicSubset> out;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    const Int d = det(A.select_columns(idx));
    if (d != 0) out.push_back({idx, abs(d)});
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == N - n + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<BasicSubset> enumerate_nbc(const IntMat& A) {
  require_full_rank(A);
  std::vector<BasicSubset> out;
  std::vector<std::size_t> prefix;
  nbc_extend(A, prefix, out);
  return out;
}

TorusElement::TorusElement(RatVec coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c = frac(c);
}

unsigned TorusElement::order() const {
  Int l = 1;
  for (const auto& c : coords_) l = lcm(l, c.get_den());
  return static_cast<unsigned>(l.get_ui());
}

bool TorusElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

Rat TorusElement::pairing(std::span<const Int> v) const {
  Rat s = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * v[i];
  return frac(s);
}

TorusElement TorusElement::compose(const IntMat& map) const {
  RatVec out(map.cols(), Rat(0));
  for (std::size_t i = 0; i < map.rows(); ++i)
    for (std::size_t j = 0; j < map.cols(); ++j) out[j] += coords_[i] * map(i, j);
  return TorusElement(std::move(out));
}

TorusElement operator+(const TorusElement& a, const TorusElement& b) {
  RatVec out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords_[i] + b.coords_[i];
  return TorusElement(std::move(out));
}

bool operator<(const TorusElement& a, const TorusElement& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

std::string TorusElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += vpf::to_string(coords_[i]);
  }
  return out + ")";
}

std::vector<TorusElement> torus_subgroup(const IntMat& A, const BasicSubset& s) {
  const RatMat inv = invert(to_rat(basis_matrix(A, s)));
  std::vector<TorusElement> gens;
  for (std::size_t r = 0; r < inv.rows(); ++r) gens.emplace_back(RatVec(inv.row(r).begin(), inv.row(r).end()));

  std::set<TorusElement> seen;
  std::deque<TorusElement> queue;
  auto visit = [&](const TorusElement& g) {
    if (seen.insert(g).second) {
      if (seen.size() > s.volume) {
        throw Error(ErrorKind::ClosureOverflow,
                    "T" + to_string(s) + " exceeds volume " + vpf::to_string(s.volume));
      }
      queue.push_back(g);
    }
  };
  visit(TorusElement::zero(A.rows()));
  for (const auto& g : gens) visit(g);
  while (!queue.empty()) {
    const TorusElement cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) visit(cur + g);
  }
  if (seen.size() != s.volume) {
    throw Error(ErrorKind::InvariantViolation,
                "T" + to_string(s) + " has " + std::to_string(seen.size()) + " elements");
  }
  return {seen.begin(), seen.end()};
}

std::vector<TorusElement> torus_points(const IntMat& A, std::span<const BasicSubset> subsets) {
  std::set<TorusElement> all;
  for (const auto& s : subsets) {
    auto t = torus_subgroup(A, s);
    all.insert(t.begin(), t.end());
  }
  return {all.begin(), all.end()};
}

unsigned ambient_order(std::span<const TorusElement> gamma) {
  unsigned m = 1;
  for (const auto& g : gamma) m = std::lcm(m, g.order());
  return m;
}

ConeH basic_cone(const IntMat& A, const BasicSubset& s) {
  const RatMat inv = invert(to_rat(basis_matrix(A, s)));
  std::vector<IntVec> normals;
  for (std::size_t r = 0; r < inv.rows(); ++r) normals.push_back(primitive(inv.row(r)));
  return ConeH::from_inequalities(A.rows(), std::move(normals));
}

std::optional<IntVec> positive_functional(const IntMat& A) {
  std::vector<IntVec> cols;
  for (std::size_t k = 0; k < A.cols(); ++k) cols.push_back(A.column(k));
  const ConeH dual = ConeH::from_inequalities(A.rows(), cols);
  if (!dual.full_dimensional() || !dual.lines().empty()) return std::nullopt;
  IntVec theta = dual.interior_point();
  for (const auto& a : cols)
    if (dot(theta, a) <= 0) return std::nullopt;
  return theta;
}

ChamberFan::ChamberFan(IntMat A, std::vector<BasicSubset> basic, std::vector<BasicSubset> nbc,
                       std::vector<MaximalCone> cones, std::vector<FanEdge> edges)
    : A_(std::move(A)),
      basic_(std::move(basic)),
      nbc_(std::move(nbc)),
      cones_(std::move(cones)),
      edges_(std::move(edges)) {}

std::optional<std::size_t> ChamberFan::locate(std::span<const Int> h) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].cone.contains(h)) return i;
  return std::nullopt;
}

std::optional<std::size_t> ChamberFan::neighbor(std::size_t i, const IntVec& facet_normal) const {
  for (const auto& e : edges_)
    if (e.from == i && e.facet_normal == facet_normal) return e.to;
  return std::nullopt;
}

std::vector<std::size_t> generic_containing_subsets(const IntMat& A,
                                                    std::span<const BasicSubset> basic,
                                                    std::span<const Int> point) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < basic.size(); ++s) {
    const ConeH c = basic_cone(A, basic[s]);
    bool inside = true;
    for (const auto& nu : c.normals()) {
      const Int v = dot(nu, point);
      if (v == 0) throw Error(ErrorKind::DegenerateSeed, "seed point lies on a basic-cone wall");
      if (v < 0) inside = false;
    }
    if (inside) out.push_back(s);
  }
  return out;
}

namespace {

ConeH intersect_basic(std::size_t n, const std::vector<ConeH>& basic_cones,
                      const std::vector<std::size_t>& members) {
  std::vector<IntVec> normals;
  for (std::size_t s : members)
    normals.insert(normals.end(), basic_cones[s].normals().begin(), basic_cones[s].normals().end());
  return ConeH::from_inequalities(n, std::move(normals));
}

}  // namespace

ChamberFan build_fan(const IntMat& A, std::vector<BasicSubset> basic, std::vector<BasicSubset> nbc,
                     std::uint64_t seed) {
  require_full_rank(A);
  if (basic.empty()) throw Error(ErrorKind::InvalidArgument, "no basic subsets");
  const std::size_t n = A.rows();

  std::vector<ConeH> basic_cones;
  for (const auto& s : basic) basic_cones.push_back(basic_cone(A, s));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(1, 1L << 20);
  std::vector<std::size_t> seed_members;
  for (int attempt = 0;; ++attempt) {
    IntVec point(n, Int(0));
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const Int c = coef(rng);
      for (std::size_t i = 0; i < n; ++i) point[i] += c * A(i, k);
    }
    try {
      seed_members = generic_containing_subsets(A, basic, point);
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateSeed || attempt >= 64) throw;
    }
  }

  std::vector<MaximalCone> cones;
  std::vector<FanEdge> edges;
  std::map<std::vector<std::size_t>, std::size_t> by_members;
  std::deque<std::size_t> queue;

  auto add_cone = [&](const std::vector<std::size_t>& members) -> std::size_t {
    auto it = by_members.find(members);
    if (it != by_members.end()) return it->second;
    ConeH c = intersect_basic(n, basic_cones, members);
    if (c.dim() != n) {
      throw Error(ErrorKind::InvariantViolation, "intersection of basic cones is not full-dimensional");
    }
    const std::size_t idx = cones.size();
    cones.push_back({std::move(c), members, {}});
    by_members.emplace(members, idx);
    queue.push_back(idx);
    return idx;
  };
  add_cone(seed_members);

  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    const ConeH current = cones[i].cone;
    for (const auto& nu : current.facet_normals()) {
      IntVec x(n, Int(0));
      for (const auto& r : current.rays())
        if (dot(nu, r) == 0)
          for (std::size_t j = 0; j < n; ++j) x[j] += r[j];
      // Basic cones containing x - eps * nu for infinitesimal eps > 0.
      std::vector<std::size_t> members;
      for (std::size_t s = 0; s < basic.size(); ++s) {
        bool inside = true;
        for (const auto& eta : basic_cones[s].normals()) {
          const Int v0 = dot(eta, x);
          const int sg = v0 != 0 ? sgn(v0) : -sgn(dot(eta, nu));
          if (sg < 0) {
            inside = false;
            break;
          }
        }
        if (inside) members.push_back(s);
      }
      if (members.empty()) continue;  // facet on the boundary of the support
      const std::size_t j = add_cone(members);
      edges.push_back({i, j, nu});
    }
  }

  // Canonical order of the cones.
  std::vector<std::size_t> order(cones.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return cones[a].cone < cones[b].cone; });
  std::vector<std::size_t> rank_of(cones.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank_of[order[r]] = r;
  std::vector<MaximalCone> sorted;
  for (std::size_t idx : order) sorted.push_back(std::move(cones[idx]));
  for (auto& e : edges) {
    e.from = rank_of[e.from];
    e.to = rank_of[e.to];
  }
  std::sort(edges.begin(), edges.end(), [](const FanEdge& a, const FanEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return lex_less(a.facet_normal, b.facet_normal);
  });

  // B_nb(C) through the containing sets.
  std::map<std::vector<std::size_t>, std::size_t> basic_index;
  for (std::size_t s = 0; s < basic.size(); ++s) basic_index.emplace(basic[s].indices, s);
  for (auto& mc : sorted) {
    for (std::size_t k = 0; k < nbc.size(); ++k) {
      const std::size_t s = basic_index.at(nbc[k].indices);
      if (std::binary_search(mc.containing.begin(), mc.containing.end(), s)) mc.nbc.push_back(k);
    }
    if (mc.nbc.empty()) throw Error(ErrorKind::EmptyNbc, "maximal cone without NBC basis");
  }

  return ChamberFan(A, std::move(basic), std::move(nbc), std::move(sorted), std::move(edges));
}

std::vector<std::size_t> b_nb_for_cone(const IntMat& A, const ConeH& C,
                                       std::span<const BasicSubset> nbc) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < nbc.size(); ++k) {
    const ConeH bc = basic_cone(A, nbc[k]);
    const bool contains_all = std::all_of(C.rays().begin(), C.rays().end(),
                                          [&](const IntVec& r) { return bc.contains(std::span<const Int>(r)); });
    if (contains_all) out.push_back(k);
  }
  if (out.empty()) throw Error(ErrorKind::EmptyNbc, "no NBC basic cone contains the cone");
  return out;
}

}  // namespace vpf
