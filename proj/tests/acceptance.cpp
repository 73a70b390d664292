// Runs each acceptance criterion once, with its time budget, and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include "aktangent/ak_local.hpp"
#include "aktangent/closed_forms.hpp"
#include "aktangent/consistency.hpp"
#include "aktangent/pencil.hpp"
#include "aktangent/starter_table.hpp"
#include "aktangent/tangency_recursion.hpp"

#include "germ_support.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace aktangent;
using namespace aktangent::testing;

namespace {

/// Collects mismatches; an empty log means the criterion held.
class Log {
 public:
  template <class A, class B>
  void expect_eq(const A& computed, const B& expected, const std::string& what) {
    if (!(computed == expected)) {
      std::ostringstream os;
      os << what << ": got " << computed << ", want " << expected;
      problems_.push_back(os.str());
    }
  }
  void fail(const std::string& what) { problems_.push_back(what); }
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(Log&)> body;
};

const std::pair<BigRational, BigRational> kOrigin{0, 0};

void base_tangency_law(Log& log) {
  for (int d = 2; d <= 5; ++d)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const PencilTrial t = run_pencil_trial(d, seed);
      log.expect_eq(t.result.count, 2 * (d - 1), "d=" + std::to_string(d) + " seed=" + std::to_string(seed));
    }
}

void anchors(Log& log) {
  log.expect_eq(nt_closed(3, SingularityProfile::single(1)).value, BigInt(36), "N_3^T(A1)");
  log.expect_eq(nt_closed(3, SingularityProfile::single(2)).value, BigInt(60), "N_3^T(A2)");
}

void kazaryan(Log& log) {
  const CheckReport r = kazaryan_check(starter_table());
  log.expect_eq(r.computed, BigInt(2256), "quartic count");
  for (const auto& s : r.subchecks) log.expect_eq(s.computed, BigInt(72), s.name);
  const BigInt n3 = *starter_table().plain(3, SingularityProfile::single(2));
  log.expect_eq(BigInt(6 * n3 - 3 * n3), BigInt(72), "144 - 72");
  if (!r.passed()) log.fail("report verdict " + r.verdict());
}

void oracle_equivalence(Log& log) {
  CaporasoHarris ch;
  for (int delta = 1; delta <= 8; ++delta)
    for (int d : {1 + 2 * delta, 2 + 2 * delta}) {
      const BigInt closed = nt_closed(d, SingularityProfile::single(1, delta)).value;
      const BigInt recursed = BigInt(factorial(static_cast<unsigned>(delta))) * ch.tangent(d, delta);
      log.expect_eq(recursed, closed, "delta=" + std::to_string(delta) + " d=" + std::to_string(d));
    }
  if (nt_closed(18, SingularityProfile::single(1, 8)).value <= BigInt("1000000000000000000"))
    log.fail("d=18 delta=8 does not exceed 10^18");
}

void classifier_ground_truth(Log& log) {
  for (int k = 0; k <= 10; ++k)
    log.expect_eq(classify(normal_form(k), kOrigin, 10).tag(), "A" + std::to_string(k), "k=" + std::to_string(k));
  log.expect_eq(classify(parse_bivar_poly("y^2 + x^2 y"), kOrigin, 10).tag(), std::string("A3"), "y^2 + x^2 y");
  Random rnd(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = static_cast<int>(rnd.integer(1, 8));
    const MovedGerm moved = random_coordinate_change(rnd, random_ak(rnd, k));
    log.expect_eq(classify(moved.poly, moved.point, 10).tag(), "A" + std::to_string(k),
                  "coordinate change " + std::to_string(trial));
  }
}

void closed_vs_elimination(Log& log) {
  Random rnd(2025);
  for (int trial = 0; trial < 100; ++trial) {
    const GermData g = random_sheared_germ(rnd, 5);
    const EliminationResult e = elimination_series(g, 5);
    for (int j = 3; j <= 5; ++j)
      log.expect_eq(ak_closed(g, j), e.invariant(j), "germ " + std::to_string(trial) + " j=" + std::to_string(j));
  }
}

void multiplicity(Log& log) {
  Random rnd(2026);
  for (int k = 1; k <= 8; ++k)
    for (int trial = 0; trial < 10; ++trial) {
      const BigRational m = rnd.nonzero_rational();
      const VanishingOrder v = tangency_vanishing_order(k, m);
      const std::string what = "k=" + std::to_string(k) + " M=" + to_string(m);
      log.expect_eq(v.total, k + 1, what);
      const std::vector<int> split = k % 2 ? std::vector<int>{(k + 1) / 2, (k + 1) / 2} : std::vector<int>{k + 1};
      if (v.branch_orders != split) log.fail(what + ": wrong branch split");
    }
}

void eq1_round_trip(Log& log) {
  const BaseValueTable table = starter_table();
  const SingularityProfile a2 = SingularityProfile::single(2);
  log.expect_eq(nt_recursive(3, a2, table).value, BigInt(60), "nt_recursive(3, A2)");
  log.expect_eq(invert_for_conditioned(3, a2, BigInt(24), nt_closed(3, a2).value), BigInt(12), "inversion");
  const auto reports = check_eq1_table(table);
  if (reports.empty()) log.fail("starter table produced no checks");
  log.expect_eq(count_failures(reports), std::size_t{0}, "table failures");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "base tangency law 2(d-1), d=2..5, 5 seeds", 30, base_tangency_law},
      {2, "anchors 36 and 60", 1, anchors},
      {3, "Kazaryan quartic count 2256", 1, kazaryan},
      {4, "Caporaso-Harris equals closed forms, delta=1..8", 120, oracle_equivalence},
      {5, "classifier ground truth and coordinate invariance", 10, classifier_ground_truth},
      {6, "closed forms equal elimination, 100 germs", 30, closed_vs_elimination},
      {7, "vanishing order k+1, k=1..8", 5, multiplicity},
      {8, "tangency recursion round trip on the starter table", 1, eq1_round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Log log;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(log);
    } catch (const std::exception& e) {
      log.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.budget_seconds) log.fail("over time budget of " + std::to_string(c.budget_seconds) + " s");
    const bool ok = log.problems().empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << std::fixed
              << std::setprecision(3) << secs << " s, budget " << std::setprecision(0) << c.budget_seconds
              << " s)\n";
    for (const auto& p : log.problems()) std::cout << "    " << p << '\n';
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << '/' << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
