#pragma once

#include <optional>

#include "starlike/rational.hpp"
#include "starlike/spectra.hpp"
#include "starlike/tree.hpp"

namespace starlike {

// Certified enclosure of the largest adjacency eigenvalue: lambda_1 lies in
// (lo, hi], with count_eigenvalues(tree, lo).above >= 1 and
// count_eigenvalues(tree, hi).above == 0 as the machine-checkable witness.
struct IndexBracket {
  Rational lo;
  Rational hi;
};

// 2^-40
Rational default_index_tol();

inline constexpr int default_compare_steps = 256;

// Largest dyadic rational with 20 fractional bits at most sqrt(r). Every
// starlike tree with r branches has index at least sqrt(r) (the r-star is a
// subgraph), so this anchors the bracket from below.
Rational lower_bound_star(int r);

// Smallest dyadic rational with 20 fractional bits at least r/sqrt(r-1),
// a strict upper bound on the index of any starlike tree with r branches.
Rational upper_bound_lepovic(int r);

// Bisection on exact eigenvalue counts until hi - lo <= tol. Starlike trees
// start from the bounds above; anything else starts from (0, max degree].
// Requires at least two vertices and tol > 0.
IndexBracket index_bracket(const RootedTree& tree, const Rational& tol);
IndexBracket index_bracket(const RootedTree& tree);

// Midpoint of a bracket of width 2*tol: within tol of the index.
Rational index_approx(const RootedTree& tree, const Rational& tol);

// Re-runs the two count_eigenvalues calls that certify a bracket.
bool bracket_is_valid(const RootedTree& tree, const IndexBracket& bracket);

enum class IndexOrder { less, greater };

// A strict comparison certificate: the witness alpha separates the spectra,
// with count_eigenvalues(smaller, alpha).above == 0 and
// count_eigenvalues(larger, alpha).above >= 1.
struct ComparisonResult {
  IndexOrder verdict;
  Rational witness;
};

// Interleaved bracket refinement until the enclosures separate. Returns
// nullopt when they still overlap after max_steps rounds, which is the
// expected outcome for cospectral-at-the-top pairs such as a tree against
// itself. The returned witness is re-verified before being handed out.
std::optional<ComparisonResult> compare_indices(const RootedTree& a, const RootedTree& b,
                                                int max_steps = default_compare_steps);

}  // namespace starlike
