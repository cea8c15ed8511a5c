#include "starlike/partition.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace starlike {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 3) throw std::invalid_argument("partition needs at least 3 parts");
  int sum = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] < parts_[i - 1])
      throw std::invalid_argument("partition parts must be nondecreasing");
    sum += parts_[i];
  }
  n_ = 1 + sum;
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? comma : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("bad partition token: '" + token + "'");
    parts.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::strong_ordering lex_compare(const Partition& p, const Partition& q) {
  if (p.n() != q.n())
    throw std::invalid_argument("lex_compare needs partitions of the same total");
  if (p.r() != q.r()) return p.r() <=> q.r();
  return std::lexicographical_compare_three_way(p.parts().begin(), p.parts().end(),
                                                q.parts().begin(), q.parts().end());
}

namespace {

void check_block(int n, int r) {
  if (n < 4) throw std::invalid_argument("need n >= 4");
  if (r < 3 || r > n - 1) throw std::invalid_argument("need 3 <= r <= n-1");
}

}  // namespace

Partition smallest_partition(int n, int r) {
  check_block(n, r);
  std::vector<int> parts(static_cast<std::size_t>(r), 1);
  parts.back() = n - r;
  return Partition(std::move(parts));
}

Partition balanced_partition(int n, int r) {
  check_block(n, r);
  const int m = (n - 1) / r;
  const int l = (n - 1) - r * m;
  std::vector<int> parts(static_cast<std::size_t>(r), m);
  for (int i = r - l; i < r; ++i) parts[static_cast<std::size_t>(i)] = m + 1;
  return Partition(std::move(parts));
}

bool alpha_valid(const Partition& p, int i, int j) {
  const int r = p.r();
  if (i < 1 || j <= i || j > r) return false;
  std::vector<int> parts = p.parts();
  ++parts[static_cast<std::size_t>(i - 1)];
  --parts[static_cast<std::size_t>(j - 1)];
  if (parts[static_cast<std::size_t>(j - 1)] < 1) return false;
  return std::is_sorted(parts.begin(), parts.end());
}

Partition alpha(const Partition& p, int i, int j) {
  if (!alpha_valid(p, i, j))
    throw std::invalid_argument("alpha(" + std::to_string(i) + "," + std::to_string(j) +
                                ") is not defined on [" + p.str() + "]");
  std::vector<int> parts = p.parts();
  ++parts[static_cast<std::size_t>(i - 1)];
  --parts[static_cast<std::size_t>(j - 1)];
  return Partition(std::move(parts));
}

std::optional<Partition> successor(const Partition& p) {
  const auto& y = p.parts();
  const int r = p.r();
  const int total = p.n() - 1;

  int prefix = std::accumulate(y.begin(), y.end() - 1, 0);
  for (int i = r - 1; i >= 1; --i) {
    prefix -= y[static_cast<std::size_t>(i - 1)];
    const int v = y[static_cast<std::size_t>(i - 1)] + 1;
    const int last = total - prefix - (r - i) * v;
    if (last < v) continue;
    std::vector<int> parts(y.begin(), y.begin() + (i - 1));
    parts.insert(parts.end(), static_cast<std::size_t>(r - i), v);
    parts.push_back(last);
    return Partition(std::move(parts));
  }

  // Nothing to bump inside the block, so p is the balanced maximum.
  assert(p == balanced_partition(p.n(), r));
  if (r == p.n() - 1) return std::nullopt;
  return smallest_partition(p.n(), r + 1);
}

std::string CoveringKind::str() const {
  switch (type) {
    case CoveringType::type_i:
      return "TypeI";
    case CoveringType::type_ii:
      return "TypeII";
    case CoveringType::type_iii:
      return *form == TypeIiiForm::alpha_t1_r ? "TypeIII/alpha_t1_r" : "TypeIII/class_reset";
  }
  return "";
}

CoveringKind classify_covering(const Partition& p, const Partition& q) {
  auto next = successor(p);
  if (!next || !(q == *next))
    throw std::invalid_argument("[" + q.str() + "] does not cover [" + p.str() + "]");

  const int r = p.r();
  if (q.r() == r + 1) return {CoveringType::type_i, std::nullopt};
  if (alpha_valid(p, r - 1, r) && alpha(p, r - 1, r) == q)
    return {CoveringType::type_ii, std::nullopt};

  int t = 0;
  while (t < r && p.parts()[static_cast<std::size_t>(t)] == q.parts()[static_cast<std::size_t>(t)])
    ++t;
  if (alpha_valid(p, t + 1, r) && alpha(p, t + 1, r) == q)
    return {CoveringType::type_iii, TypeIiiForm::alpha_t1_r};
  return {CoveringType::type_iii, TypeIiiForm::class_reset};
}

std::vector<Partition> enumerate_omega(int n, int r) {
  check_block(n, r);
  std::vector<Partition> out;
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(r));
  std::function<void(int, int)> extend = [&](int remaining, int minimum) {
    const int open = r - static_cast<int>(parts.size());
    if (open == 1) {
      if (remaining >= minimum) {
        parts.push_back(remaining);
        out.emplace_back(parts);
        parts.pop_back();
      }
      return;
    }
    for (int v = minimum; v * open <= remaining; ++v) {
      parts.push_back(v);
      extend(remaining - v, v);
      parts.pop_back();
    }
  };
  extend(n - 1, 1);
  return out;
}

std::vector<Partition> enumerate_omega_all(int n) {
  if (n < 4) throw std::invalid_argument("need n >= 4");
  std::vector<Partition> out;
  for (int r = 3; r <= n - 1; ++r) {
    auto block = enumerate_omega(n, r);
    out.insert(out.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  }
  return out;
}

std::vector<Partition> maximal_class(const Partition& p) {
  // Walk back with the inverse of alpha(r-1, r) to the class minimum, then
  // forward until the last two parts differ by at most one.
  const int r = p.r();
  std::vector<int> parts = p.parts();
  while (parts[static_cast<std::size_t>(r - 2)] - 1 >= 1 &&
         parts[static_cast<std::size_t>(r - 2)] - 1 >= parts[static_cast<std::size_t>(r - 3)]) {
    --parts[static_cast<std::size_t>(r - 2)];
    ++parts[static_cast<std::size_t>(r - 1)];
  }
  std::vector<Partition> out;
  out.emplace_back(std::move(parts));
  while (alpha_valid(out.back(), r - 1, r)) out.push_back(alpha(out.back(), r - 1, r));
  return out;
}

}  // namespace starlike
