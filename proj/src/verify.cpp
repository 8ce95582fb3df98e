#include "pdsort/verify.hpp"

#include <algorithm>
#include <set>
#include <random>
#include <sstream>

#include "pdsort/algebra.hpp"
#include "pdsort/analysis.hpp"
#include "pdsort/enumerate.hpp"
#include "pdsort/oracles.hpp"
#include "pdsort/sorting.hpp"
#include "pdsort/stretch.hpp"
#include "pdsort/text.hpp"
#include "pdsort/word.hpp"

namespace pdsort {

namespace {

using Clock = std::chrono::steady_clock;
using std::chrono::milliseconds;

class Recorder {
 public:
  Recorder(int id, std::string name, milliseconds budget) : start_(Clock::now()) {
    result_.id = id;
    result_.name = std::move(name);
    result_.budget = budget;
  }

  void expect(bool ok, const std::string& what) {
    if (!ok && result_.failures.size() < 20) result_.failures.push_back(what);
  }

  void expect_eq(const PartitionDiagram& got, const PartitionDiagram& want, const std::string& what) {
    expect(got == want, what + ": got " + format_diagram(got) + ", want " + format_diagram(want));
  }

  template <typename T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    expect(false, os.str());
  }

  CriterionResult finish() {
    result_.elapsed = std::chrono::duration_cast<milliseconds>(Clock::now() - start_);
    return std::move(result_);
  }

 private:
  CriterionResult result_;
  Clock::time_point start_;
};

PartitionDiagram D(const char* text, int n) { return parse_diagram(text, n); }

std::multiset<std::pair<int, int>> signature(const PartitionDiagram& d) {
  std::multiset<std::pair<int, int>> out;
  for (const Block& b : d.blocks()) out.emplace(b.top_size(), b.bottom_size());
  return out;
}

SetComposition random_composition(int max_element, std::mt19937_64& rng) {
  // Label each of 1..max_element with 0 (unused) or a part number, then
  // compact the used part numbers in a random order.
  std::uniform_int_distribution<int> pick(0, max_element);
  std::vector<int> label(static_cast<std::size_t>(max_element));
  for (int& l : label) l = pick(rng);
  std::vector<IndexMask> parts(static_cast<std::size_t>(max_element) + 1, 0);
  for (int i = 0; i < max_element; ++i) {
    const int l = label[static_cast<std::size_t>(i)];
    if (l > 0) parts[static_cast<std::size_t>(l)] |= index_bit(i + 1);
  }
  std::vector<IndexMask> used;
  for (std::size_t j = 1; j < parts.size(); ++j)
    if (parts[j] != 0) used.push_back(parts[j]);
  std::shuffle(used.begin(), used.end(), rng);
  return SetComposition(std::move(used));
}

}  // namespace

CriterionResult check_golden_examples() {
  Recorder r(1, "golden examples", milliseconds(1000));

  const PartitionDiagram ex1 = D("{1,4|2,3,4',5'|1',3'}", 5);
  const PartitionDiagram ex2 = D("{1,3|2,4,3'|5,4',5'}", 5);
  const auto composite = compose(ex1, ex2);
  r.expect_eq(composite.diagram, D("{1,4|2,3,3',4',5'|5|1'|2'}", 5), "composition d1 o d2");
  r.expect_eq(composite.middle_count, 1, "middle components of d1 o d2");

  const PartitionDiagram ex5 = D("{1,2|3,5,7,2',4',6'|4,3'|6,7'|8|1'|5',8'}", 8);
  r.expect_eq(sort_diagram(ex5), D("{1,3'|2,3,4,2',4',6'|5,7'|6,7|8|1'|5',8'}", 8),
              "sort of the 8-node example");

  r.expect_eq(sort_diagram(embed_permutation(Word{3, 1, 2})), identity_diagram(3), "sort of 312");

  const PartitionDiagram ex14 = D("{1,4'|2,1'|3,4,2',3'}", 4);
  r.expect_eq(sort_diagram(ex14), D("{1,1'|2,3,2',3'|4,4'}", 4), "sort of the 4-node example");
  r.expect(is_sss_direct(ex14), "4-node example is stretch-stack-sortable");

  const PartitionDiagram ex15 = D("{1,3,2',3'|2,1'}", 3);
  r.expect_eq(sort_diagram(ex15), D("{1,1'|2,3,2',3'}", 3), "sort of the 3-node skew example");
  r.expect(is_sss_direct(ex15), "3-node skew example is stretch-stack-sortable");

  const PartitionDiagram ex18 = D("{1,2,3,4',5',6'|4,6,7,1',2',3'|5,8,9,7',8',9'}", 9);
  r.expect_eq(sort_diagram(ex18), D("{1,2,3,4',5',6'|4,5,6,1',2',3'|7,8,9,7',8',9'}", 9),
              "sort of the 9-node example");
  r.expect(!is_sss_direct(ex18), "9-node example is not stretch-stack-sortable (direct)");
  r.expect(!is_sss_theorem(ex18), "9-node example is not stretch-stack-sortable (characterization)");

  const SetComposition alpha{{1, 2}, {3}, {5, 6, 7}, {4}};
  r.expect_eq(stretch_map(alpha, 7, identity_diagram(4)), D("{1,2,1',2'|3,3'|4,4'|5,6,7,5',6',7'}", 7),
              "Stretch of id_4");
  return r.finish();
}

CriterionResult check_lift_theorem() {
  Recorder r(2, "sort lifts West's map on S_1..S_6", milliseconds(5000));
  std::uint64_t checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [&](const Word& p) {
      ++checked;
      r.expect(sort_diagram(embed_permutation(p)) == embed_permutation(sort_word(p)),
               "lift fails at " + p.to_string());
    });
  }
  r.expect_eq<std::uint64_t>(checked, 873, "permutations checked");
  return r.finish();
}

CriterionResult check_knuth_theorem() {
  Recorder r(3, "1-stack-sortable iff 231-avoiding, n <= 7", milliseconds(5000));
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t sortable = 0;
    for_each_permutation(n, [&](const Word& p) {
      const bool s = is_t_stack_sortable(p, 1);
      sortable += s ? 1 : 0;
      r.expect(s == !contains_231(p), "Knuth equivalence fails at " + p.to_string());
    });
    r.expect_eq(sortable, oracle::catalan(n), "1-stack-sortable count at n=" + std::to_string(n));
  }
  return r.finish();
}

CriterionResult check_two_stack_counts() {
  Recorder r(4, "2-stack-sortable counts, n <= 7", milliseconds(30000));
  const std::array<std::uint64_t, 7> expected = {1, 2, 6, 22, 91, 408, 1938};
  for (int n = 1; n <= 7; ++n) {
    const std::uint64_t want = expected[static_cast<std::size_t>(n - 1)];
    r.expect_eq(oracle::two_stack_sortable(n), want, "closed form at n=" + std::to_string(n));
    r.expect_eq(count_t_stack_sortable(n, 2), want, "2-stack-sortable count at n=" + std::to_string(n));
  }
  return r.finish();
}

CriterionResult check_predicate_equivalence(const VerifyOptions& options) {
  const int max_n = options.deep ? 5 : 4;
  Recorder r(5, "direct and characterized sortability agree on P_0..P_" + std::to_string(max_n),
             options.deep ? milliseconds(15 * 60 * 1000) : milliseconds(60000));
  for (int n = 0; n <= max_n; ++n) {
    const CensusRow row = census_stretch_sortable(n, {.check = true, .jobs = options.jobs});
    r.expect_eq(row.total, oracle::bell(2 * n), "diagrams enumerated in P_" + std::to_string(n));
    r.expect(row.mismatches == 0,
             "predicates disagree on " + std::to_string(row.mismatches) + " diagrams of P_" +
                 std::to_string(n) +
                 (row.first_mismatch ? ", e.g. " + format_diagram(*row.first_mismatch) : std::string{}));
  }
  return r.finish();
}

CriterionResult check_property_suites() {
  Recorder r(6, "property suites", milliseconds(120000));
  std::mt19937_64 rng(20221205);

  // Identity laws, exhaustive n <= 3.
  for (int n = 0; n <= 3; ++n) {
    const PartitionDiagram id = identity_diagram(n);
    for_each_diagram(n, [&](const PartitionDiagram& d) {
      const auto left = compose(id, d);
      const auto right = compose(d, id);
      r.expect(left.diagram == d && left.middle_count == 0, "id o d != d for " + format_diagram(d));
      r.expect(right.diagram == d && right.middle_count == 0, "d o id != d for " + format_diagram(d));
    });
  }

  // Associativity with loop bookkeeping, random triples, n <= 4.
  for (int sample = 0; sample < 1000; ++sample) {
    const int n = 1 + sample % 4;
    const PartitionDiagram a = random_diagram(n, rng);
    const PartitionDiagram b = random_diagram(n, rng);
    const PartitionDiagram c = random_diagram(n, rng);
    const auto ab = compose(a, b);
    const auto bc = compose(b, c);
    const auto ab_c = compose(ab.diagram, c);
    const auto a_bc = compose(a, bc.diagram);
    const std::string where = format_diagram(a) + " " + format_diagram(b) + " " + format_diagram(c);
    r.expect(ab_c.diagram == a_bc.diagram, "associativity fails for " + where);
    r.expect(ab.middle_count + ab_c.middle_count == bc.middle_count + a_bc.middle_count,
             "loop exponents disagree for " + where);
    const AlgebraElement ea(a), eb(b), ec(c);
    r.expect((ea * eb) * ec == ea * (eb * ec), "algebra associativity fails for " + where);
  }

  // Sorting: signature and bottom-label preservation, non-propagating fixpoint.
  for (int n = 0; n <= 4; ++n) {
    for_each_diagram(n, [&](const PartitionDiagram& d) {
      const PartitionDiagram s = sort_diagram(d);
      r.expect(s.order() == d.order(), "sort changes order of " + format_diagram(d));
      r.expect(signature(s) == signature(d), "sort changes block signature of " + format_diagram(d));
      for (const Block& b : s.blocks()) {
        if (b.singleton() || b.bottom == 0) continue;
        bool found = false;
        for (const Block& o : d.blocks()) found = found || o.bottom == b.bottom;
        r.expect(found, "sort invents bottom set for " + format_diagram(d));
      }
      if (propagation_number(d) == 0) r.expect(s == d, "non-propagating diagram moved: " + format_diagram(d));
    });
  }

  // Stretch round trip on random compositions over subsets of {1..6}.
  for (int sample = 0; sample < 1000; ++sample) {
    SetComposition alpha = random_composition(6, rng);
    std::uniform_int_distribution<int> extra(0, 2);
    const int k = std::max(alpha.max_element(), 0) + extra(rng);
    const PartitionDiagram image = stretch_map(alpha, k, identity_diagram(alpha.length()));
    r.expect(is_stretch_of_identity(image), "stretch of identity rejected: " + format_diagram(image));
  }

  // Characterization against exhaustive search, and the trivial stretch.
  for (int n = 0; n <= 3; ++n) {
    std::vector<IndexMask> singletons;
    for (int i = 1; i <= n; ++i) singletons.push_back(index_bit(i));
    const SetComposition trivial(singletons);
    for_each_diagram(n, [&](const PartitionDiagram& d) {
      r.expect(is_stretch_of_identity(d) == oracle::is_stretch_of_identity_by_search(d),
               "stretch characterization differs on " + format_diagram(d));
      r.expect(stretch_map(trivial, n, d) == d, "trivial stretch moves " + format_diagram(d));
    });
  }

  // Parser round trip.
  for (int n = 1; n <= 5; ++n) {
    for (int sample = 0; sample < 1000; ++sample) {
      const PartitionDiagram d = random_diagram(n, rng);
      r.expect(parse_diagram(format_diagram(d), n) == d, "parse/format round trip fails on " + format_diagram(d));
    }
  }
  return r.finish();
}

CriterionResult check_census(const VerifyOptions& options) {
  const int max_n = options.deep ? 5 : 4;
  Recorder r(7, "census of stretch-stack-sortable diagrams (computed, not from paper)",
             options.deep ? milliseconds(15 * 60 * 1000) : milliseconds(60000));
  for (int n = 1; n <= max_n; ++n) {
    const CensusRow serial = census_stretch_sortable(n, {.check = false, .jobs = 1});
    const CensusRow parallel = census_stretch_sortable(n, {.check = false, .jobs = std::max(2, options.jobs)});
    const std::string at = " at n=" + std::to_string(n);
    r.expect_eq(serial.total, oracle::bell(2 * n), "total" + at);
    r.expect_eq(serial.sortable, kComputedSortableCounts[static_cast<std::size_t>(n)], "pinned sortable count" + at);
    r.expect_eq(parallel.sortable, serial.sortable, "job-count independence" + at);
    r.expect(serial.sortable <= serial.total, "sortable exceeds total" + at);
  }
  return r.finish();
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  out.push_back(check_golden_examples());
  out.push_back(check_lift_theorem());
  out.push_back(check_knuth_theorem());
  out.push_back(check_two_stack_counts());
  out.push_back(check_predicate_equivalence(options));
  out.push_back(check_property_suites());
  out.push_back(check_census(options));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << " (" << r.elapsed.count()
     << " ms / budget " << r.budget.count() << " ms)";
  if (r.elapsed > r.budget) os << "\n    over time budget";
  for (const std::string& f : r.failures) os << "\n    " << f;
  return os.str();
}

}  // namespace pdsort
