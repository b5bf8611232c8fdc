#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vpf/database.hpp"
#include "vpf/errors.hpp"
#include "vpf/so5.hpp"

using namespace vpf;

namespace {

std::vector<long> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Int v = parse_int(item);
    if (!v.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, std::string(what) + " component out of range");
    out.push_back(v.get_si());
  }
  if (expected != 0 && out.size() != expected)
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + " needs " + std::to_string(expected) + " comma-separated integers");
  return out;
}

IntMat parse_matrix(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_list(row, 0, "matrix row"));
  if (rows.empty() || rows[0].empty()) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  IntMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(ErrorKind::InvalidArgument, "matrix rows differ in length");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::string> variable_names(const ChamberTable& t) {
  if (t.B && t.dim() == 4) return {"l1", "l2", "b1", "b2"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < t.dim(); ++i) names.push_back("h" + std::to_string(i + 1));
  return names;
}

bool is_so5(const ChamberTable& t) { return t.B && t.A == so5::matrix_A() && *t.B == so5::matrix_B(); }

void require_so5(const ChamberTable& t) {
  if (!is_so5(t)) throw Error(ErrorKind::InvalidArgument, "this query needs the so5 database");
}

std::string inequality(const IntVec& nu, const std::vector<std::string>& names) {
  return RatPoly::linear<Int>(nu).to_string(names) + " >= 0";
}

std::string coset_label(const QuasiPolynomial& q, std::size_t i, const std::vector<std::string>& names) {
  const auto r = q.residue(i);
  std::string out;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (q.period()[k] == 1) continue;
    if (!out.empty()) out += ", ";
    out += names[k] + " = " + std::to_string(r[k]) + " mod " + std::to_string(q.period()[k]);
  }
  return out;
}

void print_counts(const BuildCounts& c) {
  std::cout << "basic subsets: " << c.basic << "\n"
            << "nbc subsets: " << c.nbc << "\n"
            << "maximal cones: " << c.maximal_cones << "\n"
            << "intersections: " << c.intersections << "\n"
            << "glued chambers: " << c.glued_chambers << "\n";
}

int cmd_build(const std::string& out, const std::string& matrix, bool no_glue) {
  const auto t0 = std::chrono::steady_clock::now();
  ChamberTable table;
  if (matrix.empty()) {
    table = so5::build_chamber_table();
  } else {
    GluingOptions opts;
    opts.glue = !no_glue;
    table = build_table(parse_matrix(matrix), std::nullopt, opts);
  }
  print_counts(table.counts);
  save_database(table, out);
  std::cerr << "wrote " << out << " in "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  return 0;
}

int cmd_mult(const std::string& db, const std::string& lambda, const std::string& beta, const std::string& point,
             bool verify) {
  const ChamberTable table = load_database(db);
  if (!point.empty()) {
    const auto p = parse_list(point, table.dim(), "--point");
    IntVec y(p.begin(), p.end());
    const auto idx = table.locate(y);
    const Rat v = table.evaluate(y);
    if (!is_integer(v) || v < 0) throw Error(ErrorKind::InvariantViolation, "value " + to_string(v) + " is not a count");
    std::cout << "value " << to_string(v) << "\n"
              << "chamber " << (idx ? table.chambers[*idx].id : 0) << "\n";
    return 0;
  }
  require_so5(table);
  if (lambda.empty() || beta.empty()) throw Error(ErrorKind::InvalidArgument, "--lambda and --beta are required");
  const auto l = parse_list(lambda, 2, "--lambda");
  const auto b = parse_list(beta, 2, "--beta");
  const so5::Weight w{l[0], l[1]};
  const so5::RootVector rv{b[0], b[1]};
  const auto [m, id] = so5::multiplicity_with_chamber(w, rv, table);
  std::cout << "multiplicity " << to_string(m) << "\n"
            << "chamber " << id << "\n";
  if (verify) {
    const Int bf = so5::brute_force_multiplicity(w, rv);
    std::cout << "brute_force " << to_string(bf) << "\n";
    if (bf != m) throw Error(ErrorKind::InvariantViolation, "chamber value disagrees with the direct count");
  }
  return 0;
}

int cmd_character(const std::string& db, const std::string& lambda, const std::string& format) {
  const ChamberTable table = load_database(db);
  require_so5(table);
  const auto l = parse_list(lambda, 2, "--lambda");
  const auto ch = so5::character({l[0], l[1]}, table);
  Int total = 0;
  const char* sep = format == "csv" ? "," : " ";
  if (format == "csv") std::cout << "b1,b2,multiplicity\n";
  for (const auto& [b, m] : ch) {
    std::cout << b.b1 << sep << b.b2 << sep << to_string(m) << "\n";
    total += m;
  }
  std::cout << "total" << sep << to_string(total) << "\n";
  return 0;
}

int cmd_chambers(const std::string& db, const std::string& lambda, std::optional<int> poly) {
  const ChamberTable table = load_database(db);
  const auto names = variable_names(table);
  if (poly) {
    const auto& q = table.by_id(*poly).quasi_polynomial;
    if (q.coset_independent()) {
      std::cout << q.cosets()[0].to_string(names) << "\n";
    } else {
      for (std::size_t i = 0; i < q.coset_count(); ++i)
        std::cout << "[" << coset_label(q, i, names) << "] " << q.cosets()[i].to_string(names) << "\n";
    }
    return 0;
  }
  if (!lambda.empty()) {
    require_so5(table);
    const auto l = parse_list(lambda, 2, "--lambda");
    for (const auto& s : so5::induced_decomposition({l[0], l[1]}, table)) {
      std::cout << "chamber " << s.chamber_id << ":";
      for (const auto& v : s.vertices) std::cout << " (" << to_string(v[0]) << "," << to_string(v[1]) << ")";
      std::cout << "\n";
    }
    return 0;
  }
  for (const auto& c : table.chambers) {
    std::cout << "chamber " << c.id << (c.published ? "" : " (new)") << ":";
    bool first = true;
    for (const auto& nu : c.cone.normals()) {
      std::cout << (first ? " " : ", ") << inequality(nu, names);
      first = false;
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_selftest(const std::string& db, long max_lambda) {
  const ChamberTable table = load_database(db);
  require_so5(table);
  if (max_lambda < 0) throw Error(ErrorKind::InvalidArgument, "--max-lambda must be nonnegative");
  long checked = 0;
  for (long l1 = 0; l1 <= max_lambda; ++l1)
    for (long l2 = 0; l2 <= max_lambda; ++l2) {
      const so5::Weight w{l1, l2};
      const auto ch = so5::character(w, table);
      const auto bf = so5::brute_force_character(w);
      for (const auto& [b, m] : bf) {
        const auto it = ch.find(b);
        const Int got = it == ch.end() ? Int(0) : it->second;
        if (got != m) {
          std::cout << "FAIL oracle lambda=(" << l1 << "," << l2 << ") beta=(" << b.b1 << "," << b.b2
                    << ") chamber=" << to_string(got) << " direct=" << to_string(m) << "\n";
          return 2;
        }
      }
      if (ch.size() != bf.size()) {
        std::cout << "FAIL oracle lambda=(" << l1 << "," << l2 << ") support sizes differ\n";
        return 2;
      }
      Int total = 0;
      for (const auto& [b, m] : ch) total += m;
      if (total != so5::weyl_dimension(w)) {
        std::cout << "FAIL dimension lambda=(" << l1 << "," << l2 << ") total=" << to_string(total)
                  << " weyl=" << to_string(so5::weyl_dimension(w)) << "\n";
        return 2;
      }
      if (so5::multiplicity(w, {0, 0}, table) != 1) {
        std::cout << "FAIL highest weight lambda=(" << l1 << "," << l2 << ")\n";
        return 2;
      }
      ++checked;
    }
  std::cout << "PASS oracle, dimension and highest weight checks for " << checked << " weights\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight multiplicities of so5 through vector partition functions"};
  app.require_subcommand(1);

  std::string out, matrix, db, lambda, beta, point, format = "table";
  bool no_glue = false, verify = false;
  std::optional<int> poly;
  long max_lambda = 8;

  auto* build = app.add_subcommand("build", "Build the chamber database");
  build->add_option("--out", out, "Output file")->required();
  build->add_option("--matrix", matrix, "Generic mode: rows of A separated by ';', entries by ','");
  build->add_flag("--no-glue", no_glue, "Generic mode: keep every maximal cone as its own chamber");

  auto* mult = app.add_subcommand("mult", "Weight multiplicity K^lambda_beta");
  mult->add_option("--db", db, "Chamber database")->required();
  mult->add_option("--lambda", lambda, "Highest weight l1,l2");
  mult->add_option("--beta", beta, "Root vector b1,b2");
  mult->add_option("--point", point, "Generic database: evaluate at h1,...,hn");
  mult->add_flag("--verify", verify, "Compare with a direct count");

  auto* character = app.add_subcommand("character", "All weights of V(lambda) with multiplicities");
  character->add_option("--db", db, "Chamber database")->required();
  character->add_option("--lambda", lambda, "Highest weight l1,l2")->required();
  character->add_option("--format", format, "table or csv")->check(CLI::IsMember({"table", "csv"}));

  auto* chambers = app.add_subcommand("chambers", "Chamber inequalities, quasi-polynomials or slices");
  chambers->add_option("--db", db, "Chamber database")->required();
  chambers->add_option("--lambda", lambda, "Slice of the chambers at fixed l1,l2");
  chambers->add_option("--poly", poly, "Print the quasi-polynomial of one chamber");

  auto* selftest = app.add_subcommand("selftest", "Check the database against direct counts");
  selftest->add_option("--db", db, "Chamber database")->required();
  selftest->add_option("--max-lambda", max_lambda, "Check all l1, l2 up to this bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*build) return cmd_build(out, matrix, no_glue);
    if (*mult) return cmd_mult(db, lambda, beta, point, verify);
    if (*character) return cmd_character(db, lambda, format);
    if (*chambers) return cmd_chambers(db, lambda, poly);
    if (*selftest) return cmd_selftest(db, max_lambda);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_user_error(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
