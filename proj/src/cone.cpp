#include "vpf/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <set>

#include "vpf/errors.hpp"

namespace vpf {

namespace {

using Bits = boost::dynamic_bitset<>;

struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};

IntVec combine(const Int& s, const IntVec& x, const Int& t, const IntVec& y) {
  IntVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i] - t * y[i];
  return primitive(std::move(out));
}

bool is_zero_vec(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::vector<IntVec> normalized_constraints(std::size_t dim, const std::vector<IntVec>& in) {
  std::set<IntVec, LexLess> unique;
  for (const auto& a : in) {
    if (a.size() != dim) throw Error(ErrorKind::InvalidArgument, "normal has wrong dimension");
    if (is_zero_vec(a)) continue;
    unique.insert(primitive(a));
  }
  return {unique.begin(), unique.end()};
}

}  // namespace

Generators double_description(std::size_t dim, const std::vector<IntVec>& inequalities) {
  const auto cons = normalized_constraints(dim, inequalities);
  const std::size_t m = cons.size();

  std::vector<IntVec> lines;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, Int(0));
    e[i] = 1;
    lines.push_back(std::move(e));
  }
  struct Ray {
    IntVec v;
    Bits zeros;
  };
  std::vector<Ray> rays;

  for (std::size_t t = 0; t < m; ++t) {
    const IntVec& a = cons[t];
    std::size_t li = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (dot(a, lines[i]) != 0) {
        li = i;
        break;
      }
    }
    if (li < lines.size()) {
      IntVec l = lines[li];
      Int al = dot(a, l);
      if (al < 0) {
        for (auto& x : l) x = -x;
        al = -al;
      }
      lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(li));
      for (auto& other : lines) {
        const Int c = dot(a, other);
        if (c != 0) other = combine(al, other, c, l);
      }
      for (auto& r : rays) {
        const Int c = dot(a, r.v);
        if (c != 0) r.v = combine(al, r.v, c, l);
        r.zeros.set(t);
      }
      Bits z(m);
      for (std::size_t s = 0; s < t; ++s) z.set(s);
      rays.push_back({std::move(l), std::move(z)});
      continue;
    }

    std::vector<Int> value(rays.size());
    bool any_negative = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].v);
      if (value[i] < 0) any_negative = true;
    }
    if (!any_negative) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (value[i] == 0) rays[i].zeros.set(t);
      continue;
    }

    const long pointed_dim = static_cast<long>(dim) - static_cast<long>(lines.size());
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] > 0) next.push_back(rays[i]);
      if (value[i] == 0) {
        next.push_back(rays[i]);
        next.back().zeros.set(t);
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (value[n] >= 0) continue;
        Bits common = rays[p].zeros & rays[n].zeros;
        if (static_cast<long>(common.count()) < pointed_dim - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec v = combine(value[p], rays[n].v, value[n], rays[p].v);
        common.set(t);
        next.push_back({std::move(v), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  Generators out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  out.lines = std::move(lines);
  std::sort(out.rays.begin(), out.rays.end(), LexLess{});
  return out;
}

ConeH ConeH::from_inequalities(std::size_t ambient_dim, std::vector<IntVec> normals) {
  const auto cons = normalized_constraints(ambient_dim, normals);
  Generators g = double_description(ambient_dim, cons);

  ConeH c;
  c.ambient_dim_ = ambient_dim;
  c.rays_ = std::move(g.rays);
  c.lines_ = std::move(g.lines);

  std::vector<IntVec> gens = c.rays_;
  gens.insert(gens.end(), c.lines_.begin(), c.lines_.end());
  c.dim_ = rank(gens);

  std::set<IntVec, LexLess> out;
  RatMat projector;  // orthogonal projection onto the complement of the span
  if (c.dim_ < ambient_dim) {
    RatMat eq;
    if (gens.empty()) {
      eq = RatMat::identity(ambient_dim);
    } else {
      eq = nullspace(to_rat(IntMat::from_rows(gens)));
    }
    RatMat gram = eq * eq.transpose();
    projector = eq.transpose() * invert(gram) * eq;
    for (std::size_t r = 0; r < eq.rows(); ++r) {
      IntVec e = primitive(eq.row(r));
      IntVec neg = e;
      for (auto& x : neg) x = -x;
      out.insert(std::move(e));
      out.insert(std::move(neg));
    }
  }

  if (c.dim_ > 0) {
    for (const auto& nu : cons) {
      IntVec facet;
      if (c.dim_ < ambient_dim) {
        RatVec v = to_rat(nu);
        const RatVec pv = projector.apply(v);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= pv[i];
        facet = primitive(v);
      } else {
        facet = nu;
      }
      if (is_zero_vec(facet)) continue;
      std::vector<IntVec> tight = c.lines_;
      for (const auto& r : c.rays_)
        if (dot(nu, r) == 0) tight.push_back(r);
      if (tight.size() + 1 < c.dim_) continue;
      if (rank(tight) + 1 != c.dim_) continue;
      out.insert(std::move(facet));
    }
  }
  c.normals_.assign(out.begin(), out.end());
  return c;
}

ConeH ConeH::from_generators(std::size_t ambient_dim, const std::vector<IntVec>& gens) {
  for (const auto& g : gens)
    if (g.size() != ambient_dim) throw Error(ErrorKind::InvalidArgument, "generator has wrong dimension");
  Generators dual = double_description(ambient_dim, gens);
  std::vector<IntVec> normals = dual.rays;
  for (const auto& l : dual.lines) {
    normals.push_back(l);
    IntVec neg = l;
    for (auto& x : neg) x = -x;
    normals.push_back(std::move(neg));
  }
  return from_inequalities(ambient_dim, std::move(normals));
}

std::vector<IntVec> ConeH::facet_normals() const {
  std::set<IntVec, LexLess> all(normals_.begin(), normals_.end());
  std::vector<IntVec> out;
  for (const auto& nu : normals_) {
    IntVec neg = nu;
    for (auto& x : neg) x = -x;
    if (!all.count(neg)) out.push_back(nu);
  }
  return out;
}

std::vector<IntVec> ConeH::equations() const {
  std::set<IntVec, LexLess> all(normals_.begin(), normals_.end());
  std::vector<IntVec> out;
  for (const auto& nu : normals_) {
    IntVec neg = nu;
    for (auto& x : neg) x = -x;
    if (all.count(neg) && lex_less(neg, nu)) out.push_back(nu);
  }
  return out;
}

bool ConeH::contains(std::span<const Rat> x) const {
  if (x.size() != ambient_dim_) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  return std::all_of(normals_.begin(), normals_.end(),
                     [&](const IntVec& nu) { return dot(nu, x) >= 0; });
}

bool ConeH::contains(std::span<const Int> x) const {
  if (x.size() != ambient_dim_) throw Error(ErrorKind::InvalidArgument, "point has wrong dimension");
  return std::all_of(normals_.begin(), normals_.end(),
                     [&](const IntVec& nu) { return dot(nu, x) >= 0; });
}

bool ConeH::contains_in_relative_interior(std::span<const Int> x) const {
  if (!contains(x)) return false;
  for (const auto& nu : facet_normals())
    if (dot(nu, x) == 0) return false;
  return true;
}

ConeH ConeH::face(const IntVec& facet_normal) const {
  std::vector<IntVec> normals = normals_;
  IntVec neg = facet_normal;
  for (auto& x : neg) x = -x;
  normals.push_back(std::move(neg));
  return from_inequalities(ambient_dim_, std::move(normals));
}

std::vector<ConeH> ConeH::facets() const {
  std::vector<ConeH> out;
  for (const auto& nu : facet_normals()) out.push_back(face(nu));
  return out;
}

IntVec ConeH::interior_point() const {
  IntVec p(ambient_dim_, Int(0));
  for (const auto& r : rays_)
    for (std::size_t i = 0; i < ambient_dim_; ++i) p[i] += r[i];
  return p;
}

std::string ConeH::key() const {
  std::string out = "[";
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < normals_[i].size(); ++j) {
      if (j) out += ",";
      out += to_string(normals_[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

bool operator<(const ConeH& a, const ConeH& b) {
  if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
  return std::lexicographical_compare(a.normals_.begin(), a.normals_.end(), b.normals_.begin(),
                                      b.normals_.end(), LexLess{});
}

ConeH intersect(const ConeH& a, const ConeH& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::InvalidArgument, "intersecting cones of different dimension");
  std::vector<IntVec> normals = a.normals();
  normals.insert(normals.end(), b.normals().begin(), b.normals().end());
  return ConeH::from_inequalities(a.ambient_dim(), std::move(normals));
}

ConeH pullback(const ConeH& c, const IntMat& map) {
  if (map.rows() != c.ambient_dim())
    throw Error(ErrorKind::InvalidArgument, "pullback map has wrong shape");
  std::vector<IntVec> normals;
  for (const auto& nu : c.normals()) {
    IntVec row(map.cols(), Int(0));
    for (std::size_t i = 0; i < map.rows(); ++i)
      for (std::size_t j = 0; j < map.cols(); ++j) row[j] += nu[i] * map(i, j);
    normals.push_back(std::move(row));
  }
  return ConeH::from_inequalities(map.cols(), std::move(normals));
}

}  // namespace vpf
