#include "vpf/chambers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "vpf/combinatorics.hpp"
#include "vpf/errors.hpp"
#include "vpf/parallel.hpp"
#include "vpf/residue.hpp"

namespace vpf {

std::optional<std::size_t> ChamberTable::locate(std::span<const Int> y) const {
  if (y.size() != dim()) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  for (std::size_t i = 0; i < chambers.size(); ++i)
    if (chambers[i].cone.contains(y)) return i;
  return std::nullopt;
}

const Chamber& ChamberTable::by_id(int id) const {
  for (const auto& c : chambers)
    if (c.id == id) return c;
  throw Error(ErrorKind::UnknownChamberId, "no chamber with id " + std::to_string(id));
}

Rat ChamberTable::evaluate(std::span<const Int> y) const {
  const auto i = locate(y);
  return i ? chambers[*i].quasi_polynomial.evaluate(y) : Rat(0);
}

namespace {

struct Piece {
  ConeH cone;
  QuasiPolynomial qp;
};

bool may_overlap(const ConeH& hull, const ConeH& other) {
  for (const auto& nu : hull.facet_normals()) {
    bool separated = true;
    for (const auto& r : other.rays())
      if (dot(nu, r) > 0) separated = false;
    for (const auto& l : other.lines())
      if (dot(nu, l) != 0) separated = false;
    if (separated) return false;
  }
  return true;
}

ConeH hull_of(const std::vector<const ConeH*>& cones, std::size_t d) {
  std::vector<IntVec> gens;
  for (const ConeH* c : cones) {
    for (const auto& r : c->rays()) gens.push_back(r);
    for (const auto& l : c->lines()) {
      gens.push_back(l);
      IntVec neg = l;
      for (auto& x : neg) x = -x;
      gens.push_back(neg);
    }
  }
  return ConeH::from_generators(d, gens);
}

bool adjacent(const ConeH& a, const ConeH& b) {
  const auto fa = a.facet_normals();
  const auto fb = b.facet_normals();
  bool candidate = false;
  for (const auto& nu : fa) {
    IntVec neg = nu;
    for (auto& x : neg) x = -x;
    if (std::find(fb.begin(), fb.end(), neg) != fb.end()) candidate = true;
  }
  return candidate && intersect(a, b).dim() + 1 == a.ambient_dim();
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

ChamberTable build_table(const IntMat& A, const std::optional<IntMat>& B, const GluingOptions& opts) {
  ChamberTable table;
  table.A = A;
  table.B = B;
  const IntMat M = B ? *B : IntMat::identity(A.rows());
  if (M.rows() != A.rows()) throw Error(ErrorKind::InvalidArgument, "B must have as many rows as A");
  const std::size_t d = M.cols();
  const unsigned threads = opts.threads ? opts.threads : worker_count();

  auto basic = enumerate_basic_subsets(A);
  auto nbc = enumerate_nbc(A);
  auto gamma = torus_points(A, basic);
  table.counts.basic = basic.size();
  table.counts.nbc = nbc.size();
  const ChamberFan fan = build_fan(A, basic, nbc);
  table.counts.maximal_cones = fan.cones().size();
  const ResidueEngine engine(A, nbc, gamma, threads);

  std::vector<ConeH> pulled(fan.cones().size());
  parallel_for(pulled.size(), threads, [&](std::size_t i) { pulled[i] = pullback(fan.cones()[i].cone, M); });

  std::map<std::string, std::size_t> piece_of_key;
  std::vector<std::vector<std::size_t>> members;
  std::vector<ConeH> piece_cones;
  for (std::size_t i = 0; i < pulled.size(); ++i) {
    if (pulled[i].dim() != d) continue;
    auto [it, inserted] = piece_of_key.try_emplace(pulled[i].key(), piece_cones.size());
    if (inserted) {
      piece_cones.push_back(pulled[i]);
      members.emplace_back();
    }
    members[it->second].push_back(i);
  }
  table.counts.intersections = piece_cones.size();

  std::vector<std::size_t> flat;
  for (const auto& m : members) flat.insert(flat.end(), m.begin(), m.end());
  std::vector<QuasiPolynomial> cone_qp(fan.cones().size());
  parallel_for(flat.size(), threads, [&](std::size_t k) {
    const std::size_t i = flat[k];
    CharacterSum s = engine.chamber_sum(fan.cones()[i].nbc);
    cone_qp[i] = (B ? s.pullback(M) : s).to_quasi_polynomial();
  });

  std::vector<Piece> pieces;
  for (std::size_t p = 0; p < piece_cones.size(); ++p) {
    const auto& qp = cone_qp[members[p].front()];
    for (std::size_t i : members[p])
      if (!(cone_qp[i] == qp))
        throw Error(ErrorKind::GluingMismatch, "maximal cones " + std::to_string(members[p].front()) + " and " +
                                                   std::to_string(i) + " disagree on a common piece");
    pieces.push_back({piece_cones[p], qp});
  }
  std::vector<std::size_t> order(pieces.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pieces[a].cone < pieces[b].cone; });
  {
    std::vector<Piece> sorted;
    for (std::size_t i : order) sorted.push_back(pieces[i]);
    pieces = std::move(sorted);
  }

  std::vector<std::size_t> parent(pieces.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<ConeH> hull(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) hull[i] = pieces[i].cone;
  if (opts.glue) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j)
        if (pieces[i].qp == pieces[j].qp && adjacent(pieces[i].cone, pieces[j].cone)) edges.emplace_back(i, j);
    bool merged_any = true;
    while (merged_any) {
      merged_any = false;
      for (auto [i, j] : edges) {
      const std::size_t ri = find(parent, i);
      const std::size_t rj = find(parent, j);
      if (ri == rj) continue;
      std::vector<const ConeH*> group;
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        const std::size_t r = find(parent, k);
        if (r == ri || r == rj) group.push_back(&pieces[k].cone);
      }
      const ConeH merged = hull_of(group, d);
      bool convex = true;
      for (std::size_t k = 0; k < pieces.size() && convex; ++k) {
        const std::size_t r = find(parent, k);
        if (r == ri || r == rj) continue;
        if (may_overlap(merged, pieces[k].cone) && intersect(merged, pieces[k].cone).dim() == d) convex = false;
      }
      if (!convex) continue;
      parent[rj] = ri;
      hull[ri] = merged;
      merged_any = true;
      }
    }
  }

  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (find(parent, i) == i) table.chambers.push_back({0, false, hull[i], pieces[i].qp});
  std::sort(table.chambers.begin(), table.chambers.end(),
            [](const Chamber& a, const Chamber& b) { return a.cone < b.cone; });
  for (std::size_t i = 0; i < table.chambers.size(); ++i) table.chambers[i].id = static_cast<int>(i + 1);
  table.counts.glued_chambers = table.chambers.size();
  return table;
}

}  // namespace vpf
