#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "starlike/partition.hpp"
#include "starlike/tree.hpp"

namespace starlike {

struct VerificationFailure {
  std::string a;
  std::string b;  // empty for single-subject predicates
  std::string predicate;
};

struct VerificationReport {
  std::string suite;
  int n = 0;
  long pairs_checked = 0;
  long spot_checks = 0;
  long type_i = 0;
  long type_ii = 0;
  long type_iii_alpha = 0;
  long type_iii_reset = 0;
  std::vector<VerificationFailure> failures;
  double wall_time_seconds = 0;

  bool ok() const { return failures.empty(); }
};

// Floating-point estimate of the index by power iteration on A + I (the
// shift keeps the dominant eigenvalue unique in absolute value on bipartite
// spectra). Stops when the Rayleigh quotient moves by less than tol; throws
// after 1e6 iterations without convergence. Independent of the exact
// rational machinery, which is the point: it cross-checks it.
double oracle_index(const RootedTree& tree, double tol);

// Uniform random attachment: vertex v joins a parent drawn from 0..v-1.
RootedTree random_tree(int n, std::mt19937& rng);

// Checks that the enumeration order of the partitions of n-1 agrees with
// the index order of their trees: every consecutive pair must compare
// strictly less with a certified witness (re-verified here with two
// eigenvalue counts), plus spot_pairs random non-consecutive pairs.
// Restricting to a single r checks just that block.
VerificationReport verify_main_theorem(int n, std::optional<int> r = std::nullopt,
                                       int spot_pairs = 1000);

// Checks that successive enumeration steps are exactly the covering moves:
// the successor chain reproduces the full listing, every consecutive pair
// classifies into one covering kind, and each kind's structural equations
// hold (balanced-to-smallest for block jumps, the alpha images, the class
// reset shape with theta >= xi).
VerificationReport verify_covering_theorem(int n);

// At mu = -hi of a 2^-depth bracket: the pendant-path diagonal values must
// all be negative, strictly decreasing, and satisfy mu > b + 1/b.
VerificationReport verify_b_lemma(const Partition& p, int depth = 40);

// The center residual sum_i b_{y_i}(mu) - mu must change sign across the
// bracket: >= 0 at -hi (zero exactly when hi hits the index, which happens
// for indices that are dyadic rationals) and < 0 at -lo.
VerificationReport verify_residual_root(const Partition& p, int depth = 40);

// |index_approx - oracle_index| <= tol over all partition trees of n
// vertices.
VerificationReport verify_oracle_agreement(int n, double tol = 1e-6);

// Verification thread count: STARLIKE_THREADS when set, else the hardware
// concurrency, never more than the job count.
int harness_thread_count(long jobs);

}  // namespace starlike
