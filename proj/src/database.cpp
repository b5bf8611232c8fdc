#include "vpf/database.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vpf/errors.hpp"

namespace vpf {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::DatabaseFormat, what); }

json matrix_json(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const IntVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) bad(std::string("missing field '") + name + "'");
  return obj.at(name);
}

Int int_of(const json& j) {
  if (!j.is_string()) bad("expected a decimal string");
  try {
    return parse_int(j.get<std::string>());
  } catch (const Error&) {
    bad("bad integer '" + j.get<std::string>() + "'");
  }
}

Rat rat_of(const json& j) {
  if (!j.is_string()) bad("expected a rational string");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error&) {
    bad("bad rational '" + j.get<std::string>() + "'");
  }
}

std::size_t size_of(const json& j) {
  const Int v = int_of(j);
  if (v < 0 || !v.fits_ulong_p()) bad("count out of range");
  return v.get_ui();
}

long small_of(const json& j, long lo, long hi) {
  const Int v = int_of(j);
  if (v < lo || v > hi) bad("value out of range");
  return v.get_si();
}

IntVec vector_of(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) bad("vector has wrong length");
  IntVec v;
  for (const auto& x : j) v.push_back(int_of(x));
  return v;
}

IntMat matrix_of(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) bad("matrix must be a non-empty array of rows");
  IntMat m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const IntVec row = vector_of(j[i], m.cols());
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = row[k];
  }
  return m;
}

json quasi_polynomial_json(const QuasiPolynomial& q) {
  json period = json::array();
  for (unsigned p : q.period()) period.push_back(std::to_string(p));
  json cosets = json::array();
  for (std::size_t i = 0; i < q.coset_count(); ++i) {
    json residue = json::array();
    for (unsigned r : q.residue(i)) residue.push_back(std::to_string(r));
    json terms = json::array();
    for (const auto& [e, c] : q.cosets()[i].terms()) {
      json ex = json::array();
      for (int x : e) ex.push_back(std::to_string(x));
      terms.push_back(json::array({std::move(ex), to_string(c)}));
    }
    json coset;
    coset["residue"] = std::move(residue);
    coset["terms"] = std::move(terms);
    cosets.push_back(std::move(coset));
  }
  json out;
  out["period"] = std::move(period);
  out["cosets"] = std::move(cosets);
  return out;
}

QuasiPolynomial quasi_polynomial_of(const json& j, std::size_t n) {
  const json& pj = field(j, "period");
  if (!pj.is_array() || pj.size() != n) bad("period has wrong length");
  std::vector<unsigned> period;
  std::size_t count = 1;
  for (const auto& x : pj) {
    period.push_back(static_cast<unsigned>(small_of(x, 1, 1 << 16)));
    count *= period.back();
    if (count > (std::size_t{1} << 20)) bad("period too large");
  }
  const json& cj = field(j, "cosets");
  if (!cj.is_array() || cj.size() != count) bad("coset count does not match the period");
  std::vector<RatPoly> cosets;
  QuasiPolynomial shape(period, std::vector<RatPoly>(count, RatPoly(n)));
  for (std::size_t i = 0; i < count; ++i) {
    const json& rj = field(cj[i], "residue");
    const IntVec r = vector_of(rj, n);
    const auto expect = shape.residue(i);
    for (std::size_t k = 0; k < n; ++k)
      if (r[k] != expect[k]) bad("cosets out of order");
    const json& tj = field(cj[i], "terms");
    if (!tj.is_array()) bad("terms must be an array");
    RatPoly p(n);
    for (const auto& t : tj) {
      if (!t.is_array() || t.size() != 2) bad("term must be [exponents, coefficient]");
      if (!t[0].is_array() || t[0].size() != n) bad("exponent vector has wrong length");
      Exponents e;
      for (const auto& x : t[0]) e.push_back(static_cast<int>(small_of(x, 0, 1000)));
      const Rat c = rat_of(t[1]);
      if (c == 0) bad("zero coefficient stored");
      if (p.coefficient(e) != 0) bad("repeated monomial");
      p.add_term(e, c);
    }
    cosets.push_back(std::move(p));
  }
  return QuasiPolynomial(std::move(period), std::move(cosets));
}

}  // namespace

std::string to_json(const ChamberTable& table) {
  json root;
  root["format"] = kDatabaseFormat;
  root["version"] = std::to_string(kDatabaseVersion);
  root["matrix_A"] = matrix_json(table.A);
  root["matrix_B"] = table.B ? matrix_json(*table.B) : json(nullptr);
  json counts;
  counts["basic"] = std::to_string(table.counts.basic);
  counts["nbc"] = std::to_string(table.counts.nbc);
  counts["maximal_cones"] = std::to_string(table.counts.maximal_cones);
  counts["intersections"] = std::to_string(table.counts.intersections);
  counts["glued_chambers"] = std::to_string(table.counts.glued_chambers);
  root["counts"] = std::move(counts);
  json chambers = json::array();
  for (const auto& c : table.chambers) {
    json cj;
    cj["id"] = std::to_string(c.id);
    cj["published"] = c.published;
    json normals = json::array();
    for (const auto& nu : c.cone.normals()) normals.push_back(vector_json(nu));
    cj["normals"] = std::move(normals);
    cj["quasi_polynomial"] = quasi_polynomial_json(c.quasi_polynomial);
    chambers.push_back(std::move(cj));
  }
  root["chambers"] = std::move(chambers);
  return root.dump(2) + "\n";
}

ChamberTable from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  try {
    if (field(root, "format") != kDatabaseFormat) bad("unknown format");
    if (field(root, "version") != std::to_string(kDatabaseVersion)) bad("unsupported version");
    ChamberTable t;
    t.A = matrix_of(field(root, "matrix_A"));
    const json& bj = field(root, "matrix_B");
    if (!bj.is_null()) {
      t.B = matrix_of(bj);
      if (t.B->rows() != t.A.rows()) bad("matrix_B row count differs from matrix_A");
    }
    const json& cj = field(root, "counts");
    t.counts.basic = size_of(field(cj, "basic"));
    t.counts.nbc = size_of(field(cj, "nbc"));
    t.counts.maximal_cones = size_of(field(cj, "maximal_cones"));
    t.counts.intersections = size_of(field(cj, "intersections"));
    t.counts.glued_chambers = size_of(field(cj, "glued_chambers"));
    const std::size_t n = t.dim();
    const json& chambers = field(root, "chambers");
    if (!chambers.is_array()) bad("chambers must be an array");
    int last_id = 0;
    for (const auto& c : chambers) {
      Chamber ch;
      ch.id = static_cast<int>(small_of(field(c, "id"), 1, 1 << 30));
      if (ch.id <= last_id) bad("chamber ids must increase");
      last_id = ch.id;
      const json& pub = field(c, "published");
      if (!pub.is_boolean()) bad("published must be a boolean");
      ch.published = pub.get<bool>();
      const json& nj = field(c, "normals");
      if (!nj.is_array() || nj.empty()) bad("normals must be a non-empty array");
      std::vector<IntVec> normals;
      for (const auto& v : nj) normals.push_back(vector_of(v, n));
      ch.cone = ConeH::from_inequalities(n, normals);
      if (ch.cone.normals() != normals) bad("chamber " + std::to_string(ch.id) + " is not in canonical form");
      if (!ch.cone.full_dimensional()) bad("chamber " + std::to_string(ch.id) + " is not full-dimensional");
      ch.quasi_polynomial = quasi_polynomial_of(field(c, "quasi_polynomial"), n);
      t.chambers.push_back(std::move(ch));
    }
    if (t.chambers.size() != t.counts.glued_chambers) bad("chamber count does not match counts.glued_chambers");
    return t;
  } catch (const json::exception& e) {
    bad(std::string("malformed database: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DatabaseFormat) throw;
    bad(e.what());
  }
}

void save_database(const ChamberTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << to_json(table);
  if (!out) throw Error(ErrorKind::InvalidArgument, "write failed for " + path.string());
}

ChamberTable load_database(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace vpf
