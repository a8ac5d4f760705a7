#pragma once

// Brute-force reference for hidden-Markov quantities, independent of the
// library implementation.  Everything here enumerates state paths
// explicitly in long double arithmetic, so it is exponential in T and
// only usable for toy instances (n^T path evaluations), which is exactly
// what makes it a trustworthy oracle.

#include <cmath>
#include <cstddef>
#include <vector>

#include "zetacast/hmm.hpp"

namespace oracle {

inline long double gauss_density(const zetacast::hmm::GaussianEmission& e,
                                 long double x) {
  const long double z = (x - static_cast<long double>(e.mean)) /
                        static_cast<long double>(e.std);
  return expl(-0.5L * z * z) /
         (static_cast<long double>(e.std) *
          sqrtl(2.0L * 3.14159265358979323846264338327950288L));
}

// Joint weight P(path, obs) of one state path.
inline long double path_weight(const zetacast::hmm::HmmModel& m,
                               const std::vector<std::size_t>& path,
                               const std::vector<double>& obs) {
  long double w = static_cast<long double>(m.initial[path[0]]) *
                  gauss_density(m.emissions[path[0]], obs[0]);
  for (std::size_t t = 1; t < path.size(); ++t) {
    w *= static_cast<long double>(m.transition[path[t - 1]][path[t]]) *
         gauss_density(m.emissions[path[t]], obs[t]);
  }
  return w;
}

// Visits every path of length T over n states.
template <typename Fn>
void for_each_path(std::size_t n, std::size_t T, Fn&& fn) {
  std::vector<std::size_t> path(T, 0);
  while (true) {
    fn(const_cast<const std::vector<std::size_t>&>(path));
    std::size_t pos = T;
    while (pos > 0) {
      --pos;
      if (++path[pos] < n) {
        break;
      }
      path[pos] = 0;
      if (pos == 0) {
        return;
      }
    }
  }
}

// log P(obs) by summing the joint weight over all n^T paths.
inline long double brute_log_likelihood(const zetacast::hmm::HmmModel& m,
                                        const std::vector<double>& obs) {
  long double total = 0.0L;
  for_each_path(m.state_count(), obs.size(),
                [&](const std::vector<std::size_t>& path) {
                  total += path_weight(m, path, obs);
                });
  return logl(total);
}

// Filtered posterior P(s_t = i | obs_0..t): prefix-path enumeration.
inline std::vector<long double> brute_filtered(
    const zetacast::hmm::HmmModel& m, const std::vector<double>& obs,
    std::size_t t) {
  const std::size_t n = m.state_count();
  std::vector<long double> mass(n, 0.0L);
  const std::vector<double> prefix(obs.begin(),
                                   obs.begin() + static_cast<long>(t) + 1);
  for_each_path(n, t + 1, [&](const std::vector<std::size_t>& path) {
    mass[path.back()] += path_weight(m, path, prefix);
  });
  long double total = 0.0L;
  for (const long double x : mass) {
    total += x;
  }
  for (long double& x : mass) {
    x /= total;
  }
  return mass;
}

// Maximum joint log-probability over all paths.
inline long double brute_best_log_prob(const zetacast::hmm::HmmModel& m,
                                       const std::vector<double>& obs) {
  long double best = 0.0L;
  bool first = true;
  for_each_path(m.state_count(), obs.size(),
                [&](const std::vector<std::size_t>& path) {
                  const long double w = path_weight(m, path, obs);
                  if (first || w > best) {
                    best = w;
                    first = false;
                  }
                });
  return logl(best);
}

} // namespace oracle
