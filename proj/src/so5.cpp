#include "vpf/so5.hpp"

#include <algorithm>

#include "vpf/errors.hpp"

namespace vpf::so5 {

bool in_cone(const PatternPoint& a) {
  return 2 * a.a11 >= a.a12 && a.a12 >= 2 * a.a13 && a.a13 >= 0 && a.a22 >= 0;
}

bool in_polytope(const PatternPoint& a, const Weight& w) {
  return in_cone(a) && a.a13 <= w.l2 && a.a12 <= w.l1 + 2 * a.a13 && a.a11 <= w.l2 + a.a12 - 2 * a.a13 &&
         a.a22 <= w.l1 + 2 * a.a11 - 2 * a.a12 + 2 * a.a13;
}

RootVector weight_of(const PatternPoint& a) { return {a.a22 + a.a12, a.a11 + a.a13}; }

IntMat matrix_A() {
  return IntMat{{0, 2, -1, 0, -1, 0, 0, 0, 0, 0},  {0, 0, 1, -2, 0, -1, 0, 0, 0, 0},
                {0, 0, 0, 1, 0, 0, 1, 0, 0, 0},    {0, 0, 1, -2, 0, 0, 0, 1, 0, 0},
                {0, 1, -1, 2, 0, 0, 0, 0, 1, 0},   {1, -2, 2, -2, 0, 0, 0, 0, 0, 1},
                {1, 0, 1, 0, 0, 0, 0, 0, 0, 0},    {0, 1, 0, 1, 0, 0, 0, 0, 0, 0}};
}

IntMat matrix_B() {
  return IntMat{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 0, 0},
                {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
}

const std::vector<std::vector<IntVec>>& reference_chamber_normals() {
  static const std::vector<std::vector<IntVec>> normals = {
      {{0, 1, 0, -1}, {1, 0, -1, 0}, {0, 0, 1, -1}, {0, 0, -1, 2}},
      {{0, 0, 1, -2}, {0, 1, 0, -1}, {-1, 0, 1, 0}, {1, 0, -1, 1}},
      {{0, 1, 0, -1}, {-1, 0, 1, 0}, {0, 0, -1, 2}, {0, 0, 1, -1}, {1, 0, -1, 1}},
      {{0, 0, 1, 0}, {0, 1, 0, -1}, {0, 0, -1, 1}, {1, 0, -1, 0}},
      {{0, 0, 0, 1}, {0, 0, 1, -2}, {1, 0, -1, 0}, {0, 1, 0, -1}},
      {{0, 0, 1, -1}, {0, 2, 1, -2}, {0, 0, -1, 2}, {0, -1, 0, 1}, {1, 0, -1, 0}},
      {{1, 0, -1, 2}, {-1, 0, 1, -1}, {0, 0, 1, -2}, {0, 1, 0, -1}},
      {{-1, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, -1}, {0, 0, -1, 1}},
      {{-1, 0, 1, 0}, {1, 0, -1, 1}, {1, 2, -1, 0}, {0, -1, 0, 1}, {0, 0, 1, -2}},
      {{1, 1, 0, -1}, {1, 2, -1, 0}, {0, 2, 1, -2}, {1, 0, -1, 1}, {-1, 0, 1, 0}},
      {{0, 2, 1, -2}, {0, -1, 0, 1}, {0, 0, -1, 1}, {1, 0, -1, 0}},
      {{0, -1, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, -2}, {1, 0, -1, 0}},
      {{0, 0, -1, 2}, {-1, 0, 1, -1}, {1, 0, 0, 0}, {0, 1, 0, -1}},
      {{-1, 0, 1, -1}, {1, 2, -1, 0}, {0, -1, 0, 1}, {0, 0, 1, -2}},
      {{0, 0, -1, 1}, {0, -1, 0, 1}, {0, 2, 1, -2}, {1, 1, 0, -1}, {-1, 0, 1, 0}},
      {{-1, -1, 0, 1}, {1, 2, -1, 0}, {0, 2, 1, -2}, {1, 0, 0, 0}, {0, 0, 1, -1}},
      {{0, 1, 1, -1}, {0, -2, -1, 2}, {0, 0, -1, 1}, {1, 0, -1, 0}},
      {{0, 0, 1, -1}, {0, 1, 0, 0}, {0, -2, -1, 2}, {1, 0, -1, 0}},
      {{-1, 0, 1, -1}, {0, -1, 0, 1}, {0, 0, -1, 2}, {1, 2, -1, 0}, {1, 1, 0, -1}},
      {{1, 1, -1, 1}, {-1, -2, 1, 0}, {-1, 0, 1, -1}, {0, 0, 1, -2}},
      {{1, 1, 0, -1}, {-1, 0, 1, 0}, {0, -2, -1, 2}, {0, 0, -1, 1}},
      {{-1, -1, 0, 1}, {1, 0, 0, 0}, {0, 2, 1, -2}, {0, 0, -1, 1}},
      {{0, 1, 0, 0}, {-1, -2, 1, 0}, {1, 0, -1, 1}, {0, 0, 1, -2}},
      {{0, -2, -1, 2}, {0, 0, 1, -1}, {1, 1, 0, -1}, {-1, 0, 1, 0}, {1, 2, -1, 0}},
      {{-1, -2, 1, 0}, {-1, 0, 1, -1}, {0, 0, -1, 2}, {1, 1, 0, -1}},
      {{1, 0, 0, 0}, {-1, -1, 0, 1}, {-1, 0, 1, -1}, {1, 2, -1, 0}},
      {{1, 2, 1, -2}, {-1, -1, 0, 1}, {0, -2, -1, 2}, {0, 0, -1, 1}},
      {{-1, -2, 1, 0}, {0, 0, -1, 2}, {0, 2, 1, -2}, {1, 0, -1, 1}, {1, 1, 0, -1}},
      {{0, 1, 0, 0}, {-1, -2, 1, 0}, {0, -2, -1, 2}, {1, 1, 0, -1}},
      {{-1, -1, 0, 1}, {0, 0, 1, -1}, {1, 2, -1, 0}, {0, -2, -1, 2}},
      {{-1, -2, 1, 0}, {-1, 0, 1, -1}, {2, 2, -1, 0}, {-1, -1, 0, 1}},
      {{0, 2, 1, -2}, {-1, -1, 0, 1}, {-1, -2, 1, 0}, {1, 0, -1, 1}},
      {{-1, -1, 0, 1}, {1, 2, 0, -1}, {-1, -2, 1, 0}, {0, -2, -1, 2}},
  };
  return normals;
}

std::vector<IntVec> reference_chamber_16_alternative() {
  auto n = reference_chamber_normals()[15];
  for (auto& v : n)
    if (v == IntVec{1, 0, 0, 0}) v = IntVec{1, 0, -1, 1};
  return n;
}

ReferenceMatch assign_reference_ids(ChamberTable& table) {
  ReferenceMatch match;
  const auto& refs = reference_chamber_normals();
  std::vector<int> assigned(table.chambers.size(), 0);
  for (std::size_t r = 0; r < refs.size(); ++r) {
    const int id = static_cast<int>(r + 1);
    std::vector<ConeH> readings = {ConeH::from_inequalities(4, refs[r])};
    if (id == 16) readings.push_back(ConeH::from_inequalities(4, reference_chamber_16_alternative()));
    for (std::size_t k = 0; k < readings.size(); ++k) {
      auto it = std::find_if(table.chambers.begin(), table.chambers.end(),
                             [&](const Chamber& c) { return c.cone == readings[k]; });
      if (it == table.chambers.end()) continue;
      const std::size_t idx = static_cast<std::size_t>(it - table.chambers.begin());
      if (assigned[idx] != 0) continue;
      assigned[idx] = id;
      match.matched.push_back(id);
      if (k == 1) match.chamber16_alternative = true;
      break;
    }
  }
  for (std::size_t i = 0; i < table.chambers.size(); ++i) {
    if (assigned[i] != 0) continue;
    int candidate = 0;
    int hits = 0;
    for (std::size_t r = 0; r < refs.size(); ++r) {
      const int id = static_cast<int>(r + 1);
      if (std::find(assigned.begin(), assigned.end(), id) != assigned.end()) continue;
      const ConeH ref = ConeH::from_inequalities(4, refs[r]);
      const auto& rays = table.chambers[i].cone.rays();
      if (std::all_of(rays.begin(), rays.end(), [&](const IntVec& x) { return ref.contains(std::span<const Int>(x)); })) {
        candidate = id;
        ++hits;
      }
    }
    if (hits == 1) {
      assigned[i] = candidate;
      match.by_containment.push_back(candidate);
    }
  }
  int next = static_cast<int>(refs.size()) + 1;
  for (std::size_t i = 0; i < table.chambers.size(); ++i) {
    table.chambers[i].published = assigned[i] != 0;
    table.chambers[i].id = assigned[i] != 0 ? assigned[i] : next++;
  }
  std::stable_sort(table.chambers.begin(), table.chambers.end(),
                   [](const Chamber& a, const Chamber& b) { return a.id < b.id; });
  return match;
}

ChamberTable build_chamber_table(unsigned threads) {
  GluingOptions opts;
  opts.threads = threads;
  ChamberTable table = build_table(matrix_A(), matrix_B(), opts);
  assign_reference_ids(table);
  return table;
}

std::pair<Int, int> multiplicity_with_chamber(const Weight& w, const RootVector& b, const ChamberTable& table) {
  if (!w.dominant()) return {Int(0), 0};
  const IntVec y = {Int(w.l1), Int(w.l2), Int(b.b1), Int(b.b2)};
  const auto i = table.locate(y);
  if (!i) return {Int(0), 0};
  const Rat v = table.chambers[*i].quasi_polynomial.evaluate(y);
  if (!is_integer(v))
    throw Error(ErrorKind::NonIntegerValue, "chamber " + std::to_string(table.chambers[*i].id) + " gives " + to_string(v));
  if (v < 0)
    throw Error(ErrorKind::NegativeValue, "chamber " + std::to_string(table.chambers[*i].id) + " gives " + to_string(v));
  return {v.get_num(), table.chambers[*i].id};
}

Int multiplicity(const Weight& w, const RootVector& b, const ChamberTable& table) {
  return multiplicity_with_chamber(w, b, table).first;
}

Int brute_force_multiplicity(const Weight& w, const RootVector& b) {
  if (!w.dominant() || b.b1 < 0 || b.b2 < 0) return 0;
  Int count = 0;
  for (long a13 = 0; a13 <= std::min(w.l2, b.b2); ++a13) {
    const long a11 = b.b2 - a13;
    for (long a12 = 0; a12 <= b.b1; ++a12) {
      const PatternPoint p{b.b1 - a12, a11, a12, a13};
      if (in_polytope(p, w)) ++count;
    }
  }
  return count;
}

SupportBox support_box(const Weight& w) { return {2 * w.l1 + 2 * w.l2, w.l1 + 2 * w.l2}; }

std::map<RootVector, Int> character(const Weight& w, const ChamberTable& table) {
  std::map<RootVector, Int> out;
  if (!w.dominant()) return out;
  const auto box = support_box(w);
  for (long b1 = 0; b1 <= box.b1_max; ++b1)
    for (long b2 = 0; b2 <= box.b2_max; ++b2) {
      Int m = multiplicity(w, {b1, b2}, table);
      if (m > 0) out.emplace(RootVector{b1, b2}, m);
    }
  return out;
}

std::map<RootVector, Int> brute_force_character(const Weight& w) {
  std::map<RootVector, Int> out;
  if (!w.dominant()) return out;
  for (long a13 = 0; a13 <= w.l2; ++a13)
    for (long a12 = 2 * a13; a12 <= w.l1 + 2 * a13; ++a12)
      for (long a11 = (a12 + 1) / 2; a11 <= w.l2 + a12 - 2 * a13; ++a11)
        for (long a22 = 0; a22 <= w.l1 + 2 * a11 - 2 * a12 + 2 * a13; ++a22) out[weight_of({a22, a11, a12, a13})] += 1;
  return out;
}

Int weyl_dimension(const Weight& w) {
  if (!w.dominant()) return 0;
  Int d = Int(w.l1 + 1) * (w.l2 + 1) * (w.l1 + w.l2 + 2) * (w.l1 + 2 * w.l2 + 3);
  return d / 6;
}

namespace {

// omega-coordinates of lambda - beta
std::array<long, 2> weight_coords(const Weight& w, const RootVector& b) {
  return {w.l1 - 2 * b.b1 + 2 * b.b2, w.l2 + b.b1 - 2 * b.b2};
}

}  // namespace

RootVector reflect_s1(const Weight& w, const RootVector& b) { return {b.b1 + weight_coords(w, b)[0], b.b2}; }
RootVector reflect_s2(const Weight& w, const RootVector& b) { return {b.b1, b.b2 + weight_coords(w, b)[1]}; }

Int weight_zero_dim(long i, long j) {
  if (i < 0 || j < 0 || 2 * j < i || j > i) return 0;
  const Rat v = make_rat(i, 2) - Rat(i * i) + Rat(3 * i * j) - Rat(2 * j * j) + make_rat(i % 2 == 0 ? 4 : 2, 4);
  if (!is_integer(v)) throw Error(ErrorKind::NonIntegerValue, "weight zero formula");
  return v.get_num();
}

Weight weight_from_roots(long i, long j) { return {2 * i - 2 * j, -i + 2 * j}; }

RootVector root_vector(NearHighest e) {
  switch (e) {
    case NearHighest::Alpha1: return {1, 0};
    case NearHighest::Alpha2: return {0, 1};
    case NearHighest::Alpha1Alpha2: return {1, 1};
    case NearHighest::TwoAlpha1Alpha2: return {2, 1};
  }
  return {};
}

std::optional<Int> near_highest_formula(const Weight& w, NearHighest e) {
  switch (e) {
    case NearHighest::Alpha1: if (w.l1 >= 1 && w.l2 >= 0) return Int(1); break;
    case NearHighest::Alpha2: if (w.l2 >= 1 && w.l1 >= 0) return Int(1); break;
    case NearHighest::Alpha1Alpha2: if (w.l1 >= 1 && w.l2 >= 1) return Int(2); break;
    case NearHighest::TwoAlpha1Alpha2: if (w.l1 >= 2 && w.l2 >= 1) return Int(3); break;
  }
  return std::nullopt;
}

Int near_highest(const Weight& w, NearHighest e, const ChamberTable& table) {
  if (auto v = near_highest_formula(w, e)) return *v;
  return multiplicity(w, root_vector(e), table);
}

std::pair<std::array<long, 2>, std::array<long, 2>> lie_reparam(const Weight& w, const RootVector& b) {
  return {{w.l2, w.l1}, {w.l2 + b.b1 - 2 * b.b2, w.l1 - 2 * b.b1 + 2 * b.b2}};
}

namespace {

using Point2 = std::array<Rat, 2>;

Rat cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

std::vector<SlicePolygon> induced_decomposition(const Weight& w, const ChamberTable& table) {
  if (table.dim() != 4) throw Error(ErrorKind::InvalidArgument, "table is not in (l1, l2, b1, b2) coordinates");
  std::vector<SlicePolygon> slices;
  if (!w.dominant()) return slices;
  for (const auto& ch : table.chambers) {
    std::vector<IntVec> ineq;
    for (const auto& nu : ch.cone.normals()) ineq.push_back({nu[2], nu[3], nu[0] * w.l1 + nu[1] * w.l2});
    ineq.push_back({0, 0, 1});
    const Generators g = double_description(3, ineq);
    if (!g.lines.empty()) throw Error(ErrorKind::InvariantViolation, "unbounded chamber slice");
    std::vector<Point2> pts;
    for (const auto& r : g.rays) {
      if (r[2] == 0) throw Error(ErrorKind::InvariantViolation, "unbounded chamber slice");
      pts.push_back({make_rat(r[0], r[2]), make_rat(r[1], r[2])});
    }
    if (pts.empty()) continue;
    auto hull = convex_hull(pts);
    std::size_t dim = hull.size() >= 3 ? 2 : hull.size() == 2 ? 1 : 0;
    slices.push_back({ch.id, dim, std::move(hull)});
  }
  std::size_t top = 0;
  for (const auto& s : slices) top = std::max(top, s.dim);
  std::vector<SlicePolygon> out;
  for (auto& s : slices) {
    if (s.dim != top) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const SlicePolygon& o) { return o.vertices == s.vertices; });
    if (!seen) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace vpf::so5
