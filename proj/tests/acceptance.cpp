// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each criterion re-derives its expectations from scratch (CLI output,
// frozen listings, independent oracle) rather than trusting intermediate
// library state.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "starlike/cli.hpp"
#include "starlike/index.hpp"
#include "starlike/partition.hpp"
#include "starlike/spectra.hpp"
#include "starlike/tree.hpp"
#include "starlike/verify.hpp"

using namespace starlike;

namespace {

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool expect(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

std::vector<std::string> partition_strings(const std::vector<Partition>& parts) {
  std::vector<std::string> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(p.str());
  return out;
}

bool criterion_frozen_listing(std::string& detail) {
  std::ostringstream out;
  std::ostringstream err;
  if (run_cli({"enumerate", "--n", "8"}, out, err) != 0)
    return expect(false, detail, "enumerate --n 8 exited nonzero");
  const std::string expected =
      "1\t1,1,5\n2\t1,2,4\n3\t1,3,3\n4\t2,2,3\n5\t1,1,1,4\n6\t1,1,2,3\n7\t1,2,2,2\n"
      "8\t1,1,1,1,3\n9\t1,1,1,2,2\n10\t1,1,1,1,1,2\n11\t1,1,1,1,1,1,1\n";
  return expect(out.str() == expected, detail, "listing differs from the frozen order");
}

bool criterion_block_structure(std::string& detail) {
  const std::vector<std::string> listing{"1,1,9", "1,2,8", "1,3,7", "1,4,6", "1,5,5",
                                         "2,2,7", "2,3,6", "2,4,5", "3,3,5", "3,4,4"};
  const auto block = enumerate_omega(12, 3);
  if (!expect(partition_strings(block) == listing, detail, "r=3 block of n=12 differs"))
    return false;

  const auto class_a = maximal_class(Partition::parse("1,1,9"));
  const auto class_b = maximal_class(Partition::parse("2,2,7"));
  const auto class_c = maximal_class(Partition::parse("3,3,5"));
  bool ok = expect(class_a.size() == 5 && class_b.size() == 3 && class_c.size() == 2, detail,
                   "class sizes are not 5, 3, 2");
  std::vector<Partition> stitched = class_a;
  stitched.insert(stitched.end(), class_b.begin(), class_b.end());
  stitched.insert(stitched.end(), class_c.begin(), class_c.end());
  ok = expect(stitched == block, detail, "classes do not stitch into the block") && ok;

  const VerificationReport report = verify_main_theorem(12, 3);
  ok = expect(report.ok(), detail, "index order fails inside the block") && ok;
  ok = expect(report.type_ii == 7, detail, "TypeII tally is not 7") && ok;
  ok = expect(report.type_iii_alpha + report.type_iii_reset == 2, detail,
              "TypeIII tally is not 2") &&
       ok;
  ok = expect(report.type_i == 0, detail, "unexpected TypeI inside one block") && ok;
  return ok;
}

bool criterion_worked_example(std::string& detail) {
  const RootedTree tree = starlike_tree(Partition::parse("1,3,3"));
  bool ok = expect(count_eigenvalues(tree, Rational(1)) == EigenvalueCounts{5, 1, 2}, detail,
                   "counts at 1 are not (5,1,2)");
  const DiagonalProfile profile = diagonalize(tree, Rational(-1));
  std::map<std::string, int> multiset;
  for (const Rational& value : profile.values) ++multiset[to_string(value)];
  const std::map<std::string, int> expected{{"-1", 3}, {"-1/2", 2}, {"0", 1}, {"2", 2}};
  return expect(multiset == expected, detail, "diagonal multiset differs") && ok;
}

bool criterion_main_theorem(std::string& detail) {
  bool ok = true;
  for (int n = 4; n <= 16; ++n) {
    const VerificationReport report = verify_main_theorem(n);
    if (!report.ok()) {
      ok = expect(false, detail,
                  "n=" + std::to_string(n) + ": [" + report.failures.front().a + "] vs [" +
                      report.failures.front().b + "] " + report.failures.front().predicate);
    }
  }
  return ok;
}

bool criterion_successor_chains(std::string& detail) {
  bool ok = true;
  for (int n = 4; n <= 20; ++n) {
    const auto exhaustive = enumerate_omega_all(n);
    for (std::size_t k = 0; k + 1 < exhaustive.size(); ++k)
      ok = expect(lex_compare(exhaustive[k], exhaustive[k + 1]) == std::strong_ordering::less,
                  detail, "n=" + std::to_string(n) + ": enumeration is not sorted") &&
           ok;

    std::vector<Partition> chain{smallest_partition(n, 3)};
    while (auto next = successor(chain.back())) chain.push_back(*next);
    ok = expect(chain == exhaustive, detail,
                "n=" + std::to_string(n) + ": successor chain diverges") &&
         ok;

    long tallied = 0;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      const CoveringKind kind = classify_covering(chain[k], chain[k + 1]);
      tallied += (kind.type == CoveringType::type_iii && !kind.form.has_value()) ? 0 : 1;
    }
    ok = expect(tallied == static_cast<long>(chain.size()) - 1, detail,
                "n=" + std::to_string(n) + ": a pair failed to classify") &&
         ok;
  }
  return ok;
}

bool criterion_bounds(std::string& detail) {
  bool ok = true;
  for (int n = 4; n <= 16; ++n) {
    for (const Partition& p : enumerate_omega_all(n)) {
      const RootedTree tree = starlike_tree(p);
      const IndexBracket bracket = index_bracket(tree, dyadic(1, 20));
      const bool fits = bracket_is_valid(tree, bracket) &&
                        bracket.lo >= lower_bound_star(p.r()) - dyadic(1, 20) &&
                        bracket.hi <= upper_bound_lepovic(p.r());
      ok = expect(fits, detail, "[" + p.str() + "] leaves its certified bounds") && ok;
    }
  }
  return ok;
}

bool criterion_oracle_agreement(std::string& detail) {
  bool ok = true;
  auto agree = [&](const RootedTree& tree, const std::string& name) {
    const double certified = index_approx(tree, dyadic(1, 24)).get_d();
    const double estimate = oracle_index(tree, 1e-12);
    ok = expect(std::abs(certified - estimate) <= 1e-6, detail,
                name + ": certified and oracle indices disagree") &&
         ok;
  };
  for (int n = 4; n <= 12; ++n)
    for (const Partition& p : enumerate_omega_all(n)) agree(starlike_tree(p), "[" + p.str() + "]");
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> size(2, 12);
  for (int k = 0; k < 100; ++k) {
    const int n = size(rng);
    agree(random_tree(n, rng), "random tree " + std::to_string(k));
  }
  return ok;
}

bool criterion_monotonicity(std::string& detail) {
  bool ok = true;
  auto strictly_less = [&](const RootedTree& small, const RootedTree& large,
                           const std::string& name) {
    const auto result = compare_indices(small, large);
    const bool good =
        result && result->verdict == IndexOrder::less &&
        count_eigenvalues(small, result->witness).above == 0 &&
        count_eigenvalues(large, result->witness).above >= 1;
    ok = expect(good, detail, name + ": no certificate of strict increase") && ok;
  };

  for (int n = 4; n <= 14; ++n) {
    for (const Partition& p : enumerate_omega_all(n)) {
      for (int j = 2; j <= p.r(); ++j) {
        for (int i = 1; i < j; ++i) {
          if (!alpha_valid(p, i, j)) continue;
          strictly_less(starlike_tree(p), starlike_tree(alpha(p, i, j)),
                        "[" + p.str() + "] alpha(" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
        }
      }
    }
  }

  // leaf additions over a mixed corpus
  std::vector<RootedTree> corpus;
  for (int n = 4; n <= 9; ++n)
    for (const Partition& p : enumerate_omega_all(n)) corpus.push_back(starlike_tree(p));
  for (int n = 2; n <= 10; ++n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    corpus.push_back(tree_from_edge_list(n, edges, 0));
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(2, 10);
  for (int k = 0; k < 25; ++k) corpus.push_back(random_tree(size(rng), rng));

  for (std::size_t t = 0; t < corpus.size(); ++t) {
    const RootedTree& tree = corpus[t];
    const int n = tree.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
      if (tree.parent(v) >= 0) edges.emplace_back(tree.parent(v), v);
    for (int v = 0; v < n; ++v) {
      auto grown = edges;
      grown.emplace_back(v, n);
      strictly_less(tree, tree_from_edge_list(n + 1, grown, tree.root()),
                    "corpus tree " + std::to_string(t) + " + leaf at " + std::to_string(v));
    }
  }
  return ok;
}

bool criterion_b_lemma(std::string& detail) {
  bool ok = true;
  for (int n = 4; n <= 14; ++n) {
    for (const Partition& p : enumerate_omega_all(n)) {
      ok = expect(verify_b_lemma(p, 40).ok(), detail,
                  "[" + p.str() + "] fails the b-sequence checks") &&
           ok;
      ok = expect(verify_residual_root(p, 40).ok(), detail,
                  "[" + p.str() + "] fails the residual sign check") &&
           ok;
    }
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "frozen n=8 listing reproduced via the CLI", 1.0, criterion_frozen_listing},
      {2, "n=12 r=3 block: classes 5/3/2 and covering tallies", 1.0, criterion_block_structure},
      {3, "S(1,3,3) worked example: counts and diagonal multiset", 1.0,
       criterion_worked_example},
      {4, "index order matches enumeration order, n = 4..16", 60.0, criterion_main_theorem},
      {5, "successor chains replay the enumeration, n = 4..20", 30.0,
       criterion_successor_chains},
      {6, "certified brackets respect the dyadic bounds, n <= 16", 30.0, criterion_bounds},
      {7, "certified indices match the floating oracle within 1e-6", 30.0,
       criterion_oracle_agreement},
      {8, "alpha moves and leaf additions strictly increase the index", 60.0,
       criterion_monotonicity},
      {9, "b-sequence and residual-root checks pass, n <= 14", 30.0, criterion_b_lemma},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool passed = false;
    try {
      passed = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.budget_seconds) {
      passed = false;
      if (detail.empty())
        detail = "exceeded " + std::to_string(criterion.budget_seconds) + " s budget";
    }
    std::printf("%s  %d  %s  (%.2f s)%s%s\n", passed ? "PASS" : "FAIL", criterion.id,
                criterion.label.c_str(), elapsed, detail.empty() ? "" : "  -- ",
                detail.c_str());
    if (!passed) ++failures;
  }
  if (failures > 0) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
