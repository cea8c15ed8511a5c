#include "starlike/spectra.hpp"

#include <string>

namespace starlike {

DiagonalProfile diagonalize(const RootedTree& tree, const Rational& alpha) {
  const int n = tree.vertex_count();
  DiagonalProfile profile;
  profile.alpha = alpha;
  profile.values.assign(static_cast<std::size_t>(n), alpha);
  auto& d = profile.values;

  // detached[v]: the edge from v to its parent has been removed by an
  // earlier zero-child step, so v is no longer anyone's child.
  std::vector<char> detached(static_cast<std::size_t>(n), 0);

  for (int v : bottom_up_order(tree)) {
    int zero_child = -1;
    Rational sum = 0;
    bool has_active_child = false;
    for (int c : tree.children(v)) {
      if (detached[static_cast<std::size_t>(c)]) continue;
      has_active_child = true;
      if (d[static_cast<std::size_t>(c)] == 0) {
        if (zero_child < 0) zero_child = c;
      } else if (zero_child < 0) {
        sum += 1 / d[static_cast<std::size_t>(c)];
      }
    }
    if (!has_active_child) continue;  // leaf, keeps alpha
    if (zero_child < 0) {
      d[static_cast<std::size_t>(v)] -= sum;
    } else {
      d[static_cast<std::size_t>(v)] = Rational(-1, 2);
      d[static_cast<std::size_t>(zero_child)] = 2;
      if (v != tree.root()) detached[static_cast<std::size_t>(v)] = 1;
    }
  }

  for (const Rational& value : d) {
    const int s = sgn(value);
    if (s < 0)
      ++profile.inertia.neg;
    else if (s > 0)
      ++profile.inertia.pos;
    else
      ++profile.inertia.zero;
  }
  return profile;
}

EigenvalueCounts count_eigenvalues(const RootedTree& tree, const Rational& a) {
  const Inertia inertia = diagonalize(tree, -a).inertia;
  return {inertia.neg, inertia.zero, inertia.pos};
}

ZeroDenominatorError::ZeroDenominatorError(int term)
    : std::runtime_error("zero denominator at term " + std::to_string(term)), term_(term) {}

std::vector<Rational> b_sequence(const Rational& lambda, int length) {
  if (lambda == 0) throw std::invalid_argument("b_sequence needs lambda != 0");
  if (length < 1) throw std::invalid_argument("b_sequence needs length >= 1");
  std::vector<Rational> b;
  b.reserve(static_cast<std::size_t>(length));
  b.push_back(1 / lambda);
  for (int k = 1; k < length; ++k) {
    Rational denom = lambda - b.back();
    if (denom == 0) throw ZeroDenominatorError(k + 1);
    b.push_back(1 / denom);
  }
  return b;
}

Rational root_residual(const Partition& p, const Rational& lambda) {
  const auto b = b_sequence(lambda, p.parts().back());
  Rational residual = -lambda;
  for (int length : p.parts()) residual += b[static_cast<std::size_t>(length - 1)];
  return residual;
}

}  // namespace starlike
