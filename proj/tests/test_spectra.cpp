#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "oracle_utils.hpp"
#include "starlike/spectra.hpp"
#include "starlike/verify.hpp"

using namespace starlike;

namespace {

std::map<std::string, int> value_multiset(const DiagonalProfile& profile) {
  std::map<std::string, int> counts;
  for (const Rational& value : profile.values) ++counts[to_string(value)];
  return counts;
}

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("star at shift -2: all entries negative") {
    const RootedTree star = starlike_tree(Partition::parse("1,1,1"));
    const DiagonalProfile profile = diagonalize(star, Rational(-2));
    CHECK(profile.values == std::vector<Rational>{Rational(-1, 2), -2, -2, -2});
    CHECK(profile.inertia == Inertia{4, 0, 0});
  }

  TEST_CASE("worked example: S(1,3,3) at shift -1") {
    const RootedTree tree = starlike_tree(Partition::parse("1,3,3"));
    const DiagonalProfile profile = diagonalize(tree, Rational(-1));
    CHECK(profile.inertia == Inertia{5, 1, 2});
    CHECK(value_multiset(profile) ==
          std::map<std::string, int>{{"-1", 3}, {"-1/2", 2}, {"0", 1}, {"2", 2}});
  }

  TEST_CASE("eigenvalue counts of S(1,3,3) across its known spectrum") {
    // spectrum: -2, -sqrt2, -1, 0, 0, 1, sqrt2, 2
    const RootedTree tree = starlike_tree(Partition::parse("1,3,3"));
    CHECK(count_eigenvalues(tree, Rational(1)) == EigenvalueCounts{5, 1, 2});
    CHECK(count_eigenvalues(tree, Rational(3, 2)) == EigenvalueCounts{7, 0, 1});
    CHECK(count_eigenvalues(tree, Rational(0)) == EigenvalueCounts{3, 2, 3});
    CHECK(count_eigenvalues(tree, Rational(-1)) == EigenvalueCounts{2, 1, 5});
    CHECK(count_eigenvalues(tree, Rational(2)) == EigenvalueCounts{7, 1, 0});
    CHECK(count_eigenvalues(tree, Rational(5, 2)) == EigenvalueCounts{8, 0, 0});
    CHECK(count_eigenvalues(tree, Rational(-5, 2)) == EigenvalueCounts{0, 0, 8});
  }

  TEST_CASE("counts partition the whole spectrum") {
    const RootedTree tree = starlike_tree(Partition::parse("1,2,2,4"));
    for (int num : {-9, -4, -1, 0, 1, 3, 7, 11}) {
      const EigenvalueCounts counts = count_eigenvalues(tree, dyadic(num, 2));
      CHECK(counts.below + counts.equal + counts.above == tree.vertex_count());
    }
  }

  TEST_CASE("counts agree with a dense eigensolver on a mixed corpus") {
    std::mt19937 rng(2024);
    std::vector<RootedTree> corpus;
    for (const char* text : {"1,1,1", "1,3,3", "2,2,3", "1,1,2,3", "1,2,3,3"})
      corpus.push_back(starlike_tree(Partition::parse(text)));
    for (int n : {2, 5, 9, 12}) corpus.push_back(random_tree(n, rng));

    for (const RootedTree& tree : corpus) {
      const auto spectrum = testing::spectrum_of(tree);
      for (int num = -12; num <= 12; ++num) {
        // quarter-integer grid, skipping probes that sit on an eigenvalue
        const double probe = num / 4.0;
        const bool near_eigenvalue =
            std::any_of(spectrum.begin(), spectrum.end(),
                        [&](double e) { return std::abs(e - probe) < 1e-6; });
        if (near_eigenvalue) continue;
        const auto expected = testing::count_at(spectrum, probe);
        const EigenvalueCounts counts = count_eigenvalues(tree, dyadic(num, 2));
        CHECK(counts.below == expected.below);
        CHECK(counts.equal == expected.equal);
        CHECK(counts.above == expected.above);
      }
    }
  }

  TEST_CASE("b-sequence recurrence and failure mode") {
    CHECK(b_sequence(Rational(-2), 4) ==
          std::vector<Rational>{Rational(-1, 2), Rational(-2, 3), Rational(-3, 4),
                                Rational(-4, 5)});
    CHECK(b_sequence(Rational(3), 1) == std::vector<Rational>{Rational(1, 3)});
    CHECK_THROWS_AS(b_sequence(Rational(0), 3), std::invalid_argument);

    // lambda = -1 is an eigenvalue of the 2-vertex path, so term 2 blows up
    try {
      b_sequence(Rational(-1), 2);
      FAIL("expected a zero denominator");
    } catch (const ZeroDenominatorError& e) {
      CHECK(e.term() == 2);
    }
    CHECK_THROWS_AS(b_sequence(Rational(1), 5), ZeroDenominatorError);
  }

  TEST_CASE("root residual locates the index of S(1,3,3) at exactly 2") {
    const Partition p = Partition::parse("1,3,3");
    CHECK(root_residual(p, Rational(-2)) == 0);
    CHECK(root_residual(p, Rational(-5, 2)) > 0);   // beyond the index
    CHECK(root_residual(p, Rational(-15, 8)) < 0);  // short of the index
  }

  TEST_CASE("root residual equals minus the center diagonal value") {
    for (const char* text : {"1,1,1", "1,2,4", "2,2,3", "1,1,2,3"}) {
      const Partition p = Partition::parse(text);
      // -9/4 is no path eigenvalue, so every branch diagonalizes cleanly
      const Rational lambda(-9, 4);
      const DiagonalProfile profile = diagonalize(starlike_tree(p), lambda);
      CHECK(root_residual(p, lambda) == -profile.values[0]);
    }
  }
}
