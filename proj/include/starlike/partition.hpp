#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace starlike {

// Nondecreasing positive tuple [y_1 <= ... <= y_r] with r >= 3 parts. A
// partition of n-1 stands for the starlike tree on n vertices whose center
// has r pendant paths of y_1..y_r vertices, so n = 1 + sum(y_i).
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& text);  // "1,3,3"

  const std::vector<int>& parts() const { return parts_; }
  int r() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  std::string str() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Order on partitions of the same n: fewer parts first, then the first
// differing coordinate. Throws when the vertex counts differ.
std::strong_ordering lex_compare(const Partition& p, const Partition& q);

// [1,...,1,n-r], the minimum of the r-part block.
Partition smallest_partition(int n, int r);

// [m,...,m,m+1,...,m+1] with m = floor((n-1)/r), the maximum of the block.
Partition balanced_partition(int n, int r);

// Move one unit from part j to part i (1-based, i < j). Valid iff the
// result is still nondecreasing with all parts >= 1.
bool alpha_valid(const Partition& p, int i, int j);
Partition alpha(const Partition& p, int i, int j);

// The next partition in the combined order, or nullopt for the global
// maximum [1,...,1]. Constructive: find the largest position i < r whose
// increment leaves a feasible nondecreasing tail, refill positions i..r-1
// with the incremented value and dump the remainder into the last part;
// when no position works the block is exhausted and the walk jumps to
// [1,...,1,n-r-1] with one more part.
std::optional<Partition> successor(const Partition& p);

enum class CoveringType { type_i, type_ii, type_iii };
enum class TypeIiiForm { alpha_t1_r, class_reset };

struct CoveringKind {
  CoveringType type;
  std::optional<TypeIiiForm> form;  // engaged exactly when type == type_iii

  std::string str() const;
  bool operator==(const CoveringKind&) const = default;
};

// Classifies a covering pair; requires q == successor(p).
//   TypeI:    r grows by one (balanced -> smallest of the next block)
//   TypeII:   q == alpha(p, r-1, r)
//   TypeIII:  q == alpha(p, t+1, r) for the shared prefix length t, or the
//             class reset [m_1..m_t,k,...,xi] -> [m_1..m_t,k+1,...,theta]
CoveringKind classify_covering(const Partition& p, const Partition& q);

// All partitions of n-1 into exactly r parts, ascending.
std::vector<Partition> enumerate_omega(int n, int r);

// All partitions of n-1 into 3..n-1 parts, ascending throughout.
std::vector<Partition> enumerate_omega_all(int n);

// The orbit of p's class minimum under repeated alpha(r-1, r), in order.
// Every partition lies in exactly one such class.
std::vector<Partition> maximal_class(const Partition& p);

}  // namespace starlike
