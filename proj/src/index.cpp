#include "starlike/index.hpp"

#include <stdexcept>

namespace starlike {

namespace {

constexpr unsigned bound_bits = 20;

IndexBracket initial_bracket(const RootedTree& tree) {
  if (tree.vertex_count() < 2)
    throw std::invalid_argument("index bracket needs at least two vertices");
  if (auto r = tree.starlike_branch_count()) {
    // Nudge the closed lower bound open: sqrt(r) itself is attained by the
    // bare star.
    return {lower_bound_star(*r) - dyadic(1, bound_bits), upper_bound_lepovic(*r)};
  }
  return {Rational(0), Rational(tree.max_degree())};
}

void refine(const RootedTree& tree, IndexBracket& bracket) {
  Rational mid = (bracket.lo + bracket.hi) / 2;
  if (count_eigenvalues(tree, mid).above >= 1)
    bracket.lo = std::move(mid);
  else
    bracket.hi = std::move(mid);
}

}  // namespace

Rational default_index_tol() { return dyadic(1, 40); }

Rational lower_bound_star(int r) {
  if (r < 3) throw std::invalid_argument("need r >= 3");
  BigInt target = BigInt(r) << (2 * bound_bits);
  BigInt k = sqrt(target);  // floor, so k^2 <= 2^40 r already holds
  BigInt den = BigInt(1) << bound_bits;
  Rational q(k, den);
  q.canonicalize();
  return q;
}

Rational upper_bound_lepovic(int r) {
  if (r < 3) throw std::invalid_argument("need r >= 3");
  // smallest k with k^2 (r-1) >= 2^40 r^2
  BigInt target = BigInt(r) * r << (2 * bound_bits);
  BigInt k = sqrt(target / (r - 1));
  while (k * k * (r - 1) < target) ++k;
  BigInt den = BigInt(1) << bound_bits;
  Rational q(k, den);
  q.canonicalize();
  return q;
}

IndexBracket index_bracket(const RootedTree& tree, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  IndexBracket bracket = initial_bracket(tree);
  while (bracket.hi - bracket.lo > tol) refine(tree, bracket);
  return bracket;
}

IndexBracket index_bracket(const RootedTree& tree) {
  return index_bracket(tree, default_index_tol());
}

Rational index_approx(const RootedTree& tree, const Rational& tol) {
  const IndexBracket bracket = index_bracket(tree, 2 * tol);
  return (bracket.lo + bracket.hi) / 2;
}

bool bracket_is_valid(const RootedTree& tree, const IndexBracket& bracket) {
  return bracket.lo < bracket.hi && count_eigenvalues(tree, bracket.lo).above >= 1 &&
         count_eigenvalues(tree, bracket.hi).above == 0;
}

std::optional<ComparisonResult> compare_indices(const RootedTree& a, const RootedTree& b,
                                                int max_steps) {
  IndexBracket bracket_a = initial_bracket(a);
  IndexBracket bracket_b = initial_bracket(b);

  auto certify = [&](const RootedTree& smaller, const RootedTree& larger,
                     const Rational& witness) -> ComparisonResult {
    if (count_eigenvalues(smaller, witness).above != 0 ||
        count_eigenvalues(larger, witness).above < 1)
      throw std::logic_error("separating value failed its own certificate");
    return {&smaller == &a ? IndexOrder::less : IndexOrder::greater, witness};
  };

  for (int step = 0;; ++step) {
    if (bracket_a.hi <= bracket_b.lo) return certify(a, b, bracket_a.hi);
    if (bracket_b.hi <= bracket_a.lo) return certify(b, a, bracket_b.hi);
    if (step == max_steps) return std::nullopt;
    refine(a, bracket_a);
    refine(b, bracket_b);
  }
}

}  // namespace starlike
