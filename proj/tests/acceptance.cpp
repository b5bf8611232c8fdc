// Acceptance checks 1-9; one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "reference_eval.hpp"
#include "support.hpp"
#include "vpf/chambers.hpp"
#include "vpf/errors.hpp"
#include "vpf/so5.hpp"

using namespace vpf;
using namespace vpf::so5;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& what) {
    if (pass) note << what;
    pass = false;
  }
};

const ChamberTable* g_table = nullptr;
double g_build_seconds = 0;

void criterion_1(Outcome& o) {
  const auto& c = g_table->counts;
  o.note << "cones " << c.maximal_cones << ", intersections " << c.intersections << ", chambers "
         << c.glued_chambers << ", build " << g_build_seconds << " s";
  if (c.maximal_cones != 320 || c.intersections != 43 || c.glued_chambers != 33 || g_build_seconds > 600)
    o.pass = false;
}

void criterion_2(Outcome& o) {
  std::mt19937_64 rng(2);
  std::size_t points = 0, chambers = 0;
  for (const auto& c : g_table->chambers) {
    if (!c.published) continue;
    ++chambers;
    const auto& ref = testing_support::reference_chamber(c.id);
    for (const auto& y : testing_support::interior_points(c.cone, 50, rng)) {
      ++points;
      if (c.quasi_polynomial.evaluate(y) != testing_support::reference_value(ref, y))
        o.fail("chamber " + std::to_string(c.id) + " differs; ");
    }
  }
  if (chambers != 33) o.fail(std::to_string(chambers) + " published chambers; ");
  o.note << chambers << " chambers, " << points << " points";
}

void criterion_3(Outcome& o) {
  const std::vector<std::pair<RootVector, long>> row = {{{0, 0}, 1}, {{1, 1}, 2}, {{2, 1}, 3},
                                                        {{2, 2}, 4}, {{3, 2}, 5}, {{4, 2}, 6},
                                                        {{3, 3}, 6}, {{4, 3}, 8}, {{4, 4}, 9}};
  for (const auto& [b, m] : row) {
    const Int v = multiplicity({4, 8}, b, *g_table);
    o.note << v << " ";
    if (v != m) o.pass = false;
  }
}

void criterion_4(Outcome& o) {
  std::size_t checks = 0;
  for (long l1 = 0; l1 <= 12; ++l1)
    for (long l2 = 0; l2 <= 12; ++l2) {
      const Weight w{l1, l2};
      const SupportBox box = support_box(w);
      for (long b1 = 0; b1 <= box.b1_max; ++b1)
        for (long b2 = 0; b2 <= box.b2_max; ++b2) {
          ++checks;
          if (multiplicity(w, {b1, b2}, *g_table) != brute_force_multiplicity(w, {b1, b2}))
            o.fail("(" + std::to_string(l1) + "," + std::to_string(l2) + ") (" + std::to_string(b1) + "," +
                   std::to_string(b2) + "); ");
        }
    }
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> lam(0, 40);
  for (int t = 0; t < 500; ++t) {
    const Weight w{lam(rng), lam(rng)};
    const SupportBox box = support_box(w);
    const RootVector b{std::uniform_int_distribution<long>(0, box.b1_max)(rng),
                       std::uniform_int_distribution<long>(0, box.b2_max)(rng)};
    ++checks;
    if (multiplicity(w, b, *g_table) != brute_force_multiplicity(w, b)) o.fail("random probe; ");
  }
  o.note << checks << " comparisons";
}

void criterion_5(Outcome& o) {
  for (long l1 = 0; l1 <= 10; ++l1)
    for (long l2 = 0; l2 <= 10; ++l2) {
      Int total = 0;
      for (const auto& [b, m] : character({l1, l2}, *g_table)) total += m;
      if (total != weyl_dimension({l1, l2})) o.fail("sum differs at (" + std::to_string(l1) + "," + std::to_string(l2) + "); ");
    }
  for (const auto& [w, d] : {std::pair{Weight{1, 0}, 4}, std::pair{Weight{0, 1}, 5}}) {
    Int brute = 0;
    for (const auto& [b, m] : brute_force_character(w)) brute += m;
    if (brute != d || weyl_dimension(w) != d) o.fail("formula check; ");
  }
  o.note << "121 weights";
}

void criterion_6(Outcome& o) {
  std::size_t checks = 0;
  for (long i = 0; i <= 20; ++i)
    for (long j = (i + 1) / 2; j <= i; ++j) {
      ++checks;
      const Weight w = weight_from_roots(i, j);
      const Int f = weight_zero_dim(i, j);
      if (f != multiplicity(w, {i, j}, *g_table) || f != brute_force_multiplicity(w, {i, j}))
        o.fail("(" + std::to_string(i) + "," + std::to_string(j) + "); ");
    }
  o.note << checks << " pairs";
}

void criterion_7(Outcome& o) {
  std::size_t checks = 0;
  for (auto e : {NearHighest::Alpha1, NearHighest::Alpha2, NearHighest::Alpha1Alpha2, NearHighest::TwoAlpha1Alpha2})
    for (long l1 = 0; l1 <= 15; ++l1)
      for (long l2 = 0; l2 <= 15; ++l2) {
        const Weight w{l1, l2};
        const auto f = near_highest_formula(w, e);
        if (!f) continue;
        ++checks;
        const RootVector b = root_vector(e);
        if (*f != multiplicity(w, b, *g_table) || *f != brute_force_multiplicity(w, b)) o.fail("mismatch; ");
      }
  o.note << checks << " cases";
}

void criterion_8(Outcome& o) {
  struct Case {
    IntMat A;
    std::function<Int(const IntVec&)> count;
  };
  const std::vector<Case> cases = {
      {IntMat{{1, 0}, {0, 1}}, [](const IntVec& h) { return Int(h[0] >= 0 && h[1] >= 0 ? 1 : 0); }},
      {IntMat{{1, 1}}, [](const IntVec& h) { return h[0] >= 0 ? Int(h[0] + 1) : Int(0); }},
      {IntMat{{2}}, [](const IntVec& h) { return Int(h[0] >= 0 && h[0] % 2 == 0 ? 1 : 0); }},
  };
  std::size_t checks = 0;
  for (const auto& c : cases) {
    const ChamberTable t = build_table(c.A, std::nullopt);
    const IntVec theta(c.A.rows(), Int(1));
    std::vector<std::size_t> free;
    for (std::size_t k = c.A.rows(); k < c.A.cols(); ++k) free.push_back(k);
    const std::size_t n = c.A.rows();
    IntVec h(n, Int(0));
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        ++checks;
        const Int expected = c.count(h);
        if (expected != testing_support::partition_count(c.A, h, theta, free)) o.fail("oracle disagreement; ");
        if (t.evaluate(h) != Rat(expected)) o.fail("pipeline differs; ");
        return;
      }
      for (long v = 0; v <= 50; ++v) {
        h[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
  o.note << checks << " points over 3 matrices";
}

void criterion_9(Outcome& o) {
  std::size_t cosets = 0;
  for (const auto& c : g_table->chambers) {
    for (const auto& p : c.quasi_polynomial.cosets()) {
      ++cosets;
      if (p.degree() > 2) o.fail("degree in chamber " + std::to_string(c.id) + "; ");
    }
    for (unsigned p : c.quasi_polynomial.period())
      if (2 % p != 0) o.fail("period in chamber " + std::to_string(c.id) + "; ");
  }
  o.note << cosets << " coset polynomials";
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::optional<ChamberTable> table;
  try {
    table = build_chamber_table();
  } catch (const std::exception& e) {
    std::cout << "build failed: " << e.what() << "\n";
    for (int i = 1; i <= 9; ++i) std::cout << "criterion " << i << ": FAIL\n";
    return 1;
  }
  g_build_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  g_table = &*table;

  const std::vector<void (*)(Outcome&)> criteria = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                                    criterion_6, criterion_7, criterion_8, criterion_9};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.note.str() << "; "
              << secs << " s)\n";
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
