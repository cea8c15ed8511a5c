#include "starlike/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <thread>
#include <utility>

#include "starlike/index.hpp"
#include "starlike/spectra.hpp"

namespace starlike {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs body(k) for k in [0, jobs), striping over worker threads. Each job
// may only touch its own output slot.
template <typename Body>
void parallel_for(long jobs, Body&& body) {
  const int threads = harness_thread_count(jobs);
  if (threads <= 1) {
    for (long k = 0; k < jobs; ++k) body(k);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (long k = next.fetch_add(1); k < jobs; k = next.fetch_add(1)) body(k);
    });
  }
  for (auto& worker : pool) worker.join();
}

// Strict index comparison with the witness re-verified from scratch, so a
// passing pair really is backed by two eigenvalue counts.
std::optional<std::string> check_pair_less(const RootedTree& small, const RootedTree& large) {
  std::optional<ComparisonResult> result;
  try {
    result = compare_indices(small, large);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
  if (!result) return "index_comparison_unresolved";
  if (result->verdict != IndexOrder::less) return "index_order";
  if (count_eigenvalues(small, result->witness).above != 0 ||
      count_eigenvalues(large, result->witness).above < 1)
    return "witness_recheck";
  return std::nullopt;
}

void tally(VerificationReport& report, const CoveringKind& kind) {
  switch (kind.type) {
    case CoveringType::type_i:
      ++report.type_i;
      break;
    case CoveringType::type_ii:
      ++report.type_ii;
      break;
    case CoveringType::type_iii:
      if (*kind.form == TypeIiiForm::alpha_t1_r)
        ++report.type_iii_alpha;
      else
        ++report.type_iii_reset;
      break;
  }
}

}  // namespace

int harness_thread_count(long jobs) {
  long count = 0;
  if (const char* env = std::getenv("STARLIKE_THREADS")) count = std::strtol(env, nullptr, 10);
  if (count < 1) count = static_cast<long>(std::thread::hardware_concurrency());
  if (count < 1) count = 1;
  return static_cast<int>(std::min(count, std::max(jobs, 1L)));
}

double oracle_index(const RootedTree& tree, double tol) {
  const int n = tree.vertex_count();
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    for (int c : tree.children(v)) {
      adjacency(v, c) = 1;
      adjacency(c, v) = 1;
    }
  }
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n).normalized();
  double previous = std::numeric_limits<double>::infinity();
  for (long iteration = 0; iteration < 1000000; ++iteration) {
    Eigen::VectorXd y = adjacency * x + x;
    const double rayleigh = x.dot(y);
    if (std::abs(rayleigh - previous) <= tol) return rayleigh - 1;
    previous = rayleigh;
    const double norm = y.norm();
    if (norm == 0) break;
    x = y / norm;
  }
  throw std::runtime_error("power iteration did not converge");
}

RootedTree random_tree(int n, std::mt19937& rng) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int v = 1; v < n; ++v)
    edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return tree_from_edge_list(n, edges, 0);
}

VerificationReport verify_main_theorem(int n, std::optional<int> r, int spot_pairs) {
  Stopwatch timer;
  VerificationReport report;
  report.suite = "main";
  report.n = n;

  const std::vector<Partition> parts = r ? enumerate_omega(n, *r) : enumerate_omega_all(n);
  std::vector<RootedTree> trees;
  trees.reserve(parts.size());
  for (const auto& p : parts) trees.push_back(starlike_tree(p));
  const long count = static_cast<long>(parts.size());

  const long consecutive = count - 1;
  std::vector<std::optional<std::string>> outcome(static_cast<std::size_t>(consecutive));
  parallel_for(consecutive, [&](long k) {
    outcome[static_cast<std::size_t>(k)] =
        check_pair_less(trees[static_cast<std::size_t>(k)], trees[static_cast<std::size_t>(k) + 1]);
  });
  for (long k = 0; k < consecutive; ++k) {
    ++report.pairs_checked;
    if (const auto& predicate = outcome[static_cast<std::size_t>(k)])
      report.failures.push_back({parts[static_cast<std::size_t>(k)].str(),
                                 parts[static_cast<std::size_t>(k) + 1].str(), *predicate});
    tally(report, classify_covering(parts[static_cast<std::size_t>(k)],
                                    parts[static_cast<std::size_t>(k) + 1]));
  }

  // Spot checks hit pairs the consecutive sweep never touches; transitivity
  // makes them redundant in principle, which is exactly why they are worth
  // probing independently.
  std::vector<std::pair<long, long>> spots;
  const long nonconsecutive = count * (count - 1) / 2 - consecutive;
  if (nonconsecutive <= spot_pairs) {
    for (long i = 0; i < count; ++i)
      for (long j = i + 2; j < count; ++j) spots.emplace_back(i, j);
  } else {
    std::mt19937 rng(static_cast<unsigned>(12345 + 77 * n + (r ? *r : 0)));
    std::set<std::pair<long, long>> chosen;
    std::uniform_int_distribution<long> pick(0, count - 1);
    while (static_cast<long>(chosen.size()) < spot_pairs) {
      long i = pick(rng);
      long j = pick(rng);
      if (i > j) std::swap(i, j);
      if (j - i >= 2) chosen.emplace(i, j);
    }
    spots.assign(chosen.begin(), chosen.end());
  }
  std::vector<std::optional<std::string>> spot_outcome(spots.size());
  parallel_for(static_cast<long>(spots.size()), [&](long k) {
    const auto [i, j] = spots[static_cast<std::size_t>(k)];
    spot_outcome[static_cast<std::size_t>(k)] =
        check_pair_less(trees[static_cast<std::size_t>(i)], trees[static_cast<std::size_t>(j)]);
  });
  for (std::size_t k = 0; k < spots.size(); ++k) {
    ++report.spot_checks;
    if (const auto& predicate = spot_outcome[k])
      report.failures.push_back({parts[static_cast<std::size_t>(spots[k].first)].str(),
                                 parts[static_cast<std::size_t>(spots[k].second)].str(),
                                 *predicate});
  }

  report.wall_time_seconds = timer.seconds();
  return report;
}

VerificationReport verify_covering_theorem(int n) {
  Stopwatch timer;
  VerificationReport report;
  report.suite = "coverings";
  report.n = n;

  const std::vector<Partition> omega = enumerate_omega_all(n);
  if (!(omega.front() == smallest_partition(n, 3)))
    report.failures.push_back({omega.front().str(), "", "chain_start"});
  if (successor(omega.back()))
    report.failures.push_back({omega.back().str(), "", "chain_end"});

  for (std::size_t k = 0; k + 1 < omega.size(); ++k) {
    const Partition& p = omega[k];
    const Partition& q = omega[k + 1];
    ++report.pairs_checked;
    const auto next = successor(p);
    if (!next || !(*next == q)) {
      report.failures.push_back({p.str(), q.str(), "successor_chain"});
      continue;
    }
    const CoveringKind kind = classify_covering(p, q);
    tally(report, kind);

    const int r = p.r();
    bool shape_ok = true;
    switch (kind.type) {
      case CoveringType::type_i:
        shape_ok = p == balanced_partition(n, r) && q == smallest_partition(n, r + 1);
        break;
      case CoveringType::type_ii:
        shape_ok = alpha_valid(p, r - 1, r) && alpha(p, r - 1, r) == q;
        break;
      case CoveringType::type_iii: {
        int t = 0;
        while (t < r && p.parts()[static_cast<std::size_t>(t)] ==
                            q.parts()[static_cast<std::size_t>(t)])
          ++t;
        if (*kind.form == TypeIiiForm::alpha_t1_r) {
          shape_ok = alpha_valid(p, t + 1, r) && alpha(p, t + 1, r) == q;
        } else {
          // [m_1..m_t, k, ..., xi] -> [m_1..m_t, k+1, ..., k+1, theta]
          const int bumped = p.parts()[static_cast<std::size_t>(t)] + 1;
          for (int pos = t; pos < r - 1; ++pos)
            shape_ok = shape_ok && q.parts()[static_cast<std::size_t>(pos)] == bumped;
          shape_ok = shape_ok && q.parts().back() >= p.parts().back();
        }
        break;
      }
    }
    if (!shape_ok) report.failures.push_back({p.str(), q.str(), "covering_shape"});
  }

  report.wall_time_seconds = timer.seconds();
  return report;
}

VerificationReport verify_b_lemma(const Partition& p, int depth) {
  Stopwatch timer;
  VerificationReport report;
  report.suite = "b_lemma";
  report.n = p.n();

  const IndexBracket bracket = index_bracket(starlike_tree(p), dyadic(1, static_cast<unsigned>(depth)));
  const Rational mu = -bracket.hi;
  std::vector<Rational> b;
  try {
    b = b_sequence(mu, p.parts().back());
  } catch (const ZeroDenominatorError&) {
    report.failures.push_back({p.str(), "", "b_sequence_defined"});
    report.wall_time_seconds = timer.seconds();
    return report;
  }

  for (std::size_t k = 0; k < b.size(); ++k) {
    ++report.pairs_checked;
    if (!(b[k] < 0)) {
      report.failures.push_back({p.str(), "", "b_negative"});
      break;
    }
    if (k > 0 && !(b[k] < b[k - 1])) {
      report.failures.push_back({p.str(), "", "b_strictly_decreasing"});
      break;
    }
    if (!(mu > b[k] + 1 / b[k])) {
      report.failures.push_back({p.str(), "", "b_self_bound"});
      break;
    }
  }

  report.wall_time_seconds = timer.seconds();
  return report;
}

VerificationReport verify_residual_root(const Partition& p, int depth) {
  Stopwatch timer;
  VerificationReport report;
  report.suite = "residual_root";
  report.n = p.n();

  const IndexBracket bracket = index_bracket(starlike_tree(p), dyadic(1, static_cast<unsigned>(depth)));
  ++report.pairs_checked;
  try {
    const Rational at_hi = root_residual(p, -bracket.hi);
    const Rational at_lo = root_residual(p, -bracket.lo);
    // at_hi hits zero exactly when the index itself is a dyadic rational.
    if (!(at_hi >= 0 && at_lo < 0))
      report.failures.push_back({p.str(), "", "residual_sign_change"});
  } catch (const ZeroDenominatorError&) {
    report.failures.push_back({p.str(), "", "residual_defined"});
  }

  report.wall_time_seconds = timer.seconds();
  return report;
}

VerificationReport verify_oracle_agreement(int n, double tol) {
  Stopwatch timer;
  VerificationReport report;
  report.suite = "oracle";
  report.n = n;

  const std::vector<Partition> parts = enumerate_omega_all(n);
  const long count = static_cast<long>(parts.size());
  std::vector<std::optional<std::string>> outcome(static_cast<std::size_t>(count));
  parallel_for(count, [&](long k) {
    const RootedTree tree = starlike_tree(parts[static_cast<std::size_t>(k)]);
    try {
      const double certified = index_approx(tree, dyadic(1, 24)).get_d();
      const double estimate = oracle_index(tree, 1e-12);
      if (std::abs(certified - estimate) > tol)
        outcome[static_cast<std::size_t>(k)] = "oracle_agreement";
    } catch (const std::exception& e) {
      outcome[static_cast<std::size_t>(k)] = std::string("exception: ") + e.what();
    }
  });
  for (long k = 0; k < count; ++k) {
    ++report.pairs_checked;
    if (const auto& predicate = outcome[static_cast<std::size_t>(k)])
      report.failures.push_back({parts[static_cast<std::size_t>(k)].str(), "", *predicate});
  }

  report.wall_time_seconds = timer.seconds();
  return report;
}

}  // namespace starlike
