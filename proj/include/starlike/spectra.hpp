#pragma once

#include <stdexcept>
#include <vector>

#include "starlike/partition.hpp"
#include "starlike/rational.hpp"
#include "starlike/tree.hpp"

namespace starlike {

struct Inertia {
  int neg = 0;
  int zero = 0;
  int pos = 0;
  bool operator==(const Inertia&) const = default;
};

// Output of the tree diagonalization: the final diagonal value of every
// vertex plus the resulting sign counts.
struct DiagonalProfile {
  Rational alpha;
  std::vector<Rational> values;  // indexed by vertex id
  Inertia inertia;
};

// Diagonalizes A(T) + alpha*I without ever forming a matrix. Every vertex
// starts at alpha; in bottom-up order, a vertex with all processed children
// nonzero absorbs -sum(1/d(child)), while a zero child forces the pair
// d(v) = -1/2, d(child) = 2 and cuts v loose from its own parent. The
// resulting diagonal is congruent to A(T) + alpha*I, so the sign counts
// are its inertia. Exact arithmetic throughout.
DiagonalProfile diagonalize(const RootedTree& tree, const Rational& alpha);

// Eigenvalue counts of A(T) relative to the test value a, obtained from
// diagonalize(tree, -a): below = negatives, equal = zeros, above = positives.
struct EigenvalueCounts {
  int below = 0;
  int equal = 0;
  int above = 0;
  bool operator==(const EigenvalueCounts&) const = default;
};

EigenvalueCounts count_eigenvalues(const RootedTree& tree, const Rational& a);

// Raised when the recurrence b_{k+1} = 1/(lambda - b_k) hits a zero
// denominator, which happens exactly when lambda is an eigenvalue of the
// k-vertex path.
class ZeroDenominatorError : public std::runtime_error {
 public:
  explicit ZeroDenominatorError(int term);
  int term() const { return term_; }

 private:
  int term_;
};

// Diagonal values along a pendant path processed leaf to center:
// b_1 = 1/lambda, b_{k+1} = 1/(lambda - b_k). Requires lambda != 0.
std::vector<Rational> b_sequence(const Rational& lambda, int length);

// sum_i b_{y_i}(lambda) - lambda: the negative of the center's diagonal
// value when diagonalizing the partition's tree at shift lambda. Its sign
// change locates -lambda_1.
Rational root_residual(const Partition& p, const Rational& lambda);

}  // namespace starlike
