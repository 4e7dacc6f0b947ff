#include "hopoly/oracles.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "hopoly/error.hpp"

namespace hopoly {

namespace {

// Height of lambda - mu in the root lattice.
BigRational depth(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  BigRational h = 0;
  const int n = rs.rank();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h += rs.inverse_cartan()[i][j] * (lam[j] - mu[j]);
  }
  return h;
}

}  // namespace

MultiplicityTable freudenthal(const RootSystem& rs, const Weight& lam) {
  if (!lam.is_dominant()) throw DomainError("freudenthal: weight " + to_string(lam) + " is not dominant");
  const int n = rs.rank();
  const auto& roots = rs.positive_roots();

  // Dominant weights below lambda are connected to lambda by subtracting
  // positive roots while staying dominant.
  std::set<Weight> dominant{lam};
  std::vector<Weight> frontier{lam};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      for (std::size_t idx = 0; idx < roots.size(); ++idx) {
        Weight nu = mu - rs.positive_root_weight(idx);
        if (nu.is_dominant() && dominant.insert(nu).second) next.push_back(std::move(nu));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Weight> order(dominant.begin(), dominant.end());
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    const BigRational da = depth(rs, lam, a), db = depth(rs, lam, b);
    if (da != db) return da < db;
    return a > b;
  });

  Weight rho(static_cast<std::size_t>(n));
  for (auto& c : rho.coords) c = 1;
  const Weight lam_rho = lam + rho;
  const BigRational top = rs.pair_inner(lam_rho, lam_rho);

  MultiplicityTable table;
  auto lookup = [&](const Weight& w) -> const BigInt* {
    Weight d = w;
    // Dominant representative by simple reflections.
    while (true) {
      int i = 0;
      while (i < n && d[i] >= 0) ++i;
      if (i == n) break;
      d = rs.reflect(i + 1, d);
    }
    auto it = table.find(d);
    return it == table.end() ? nullptr : &it->second;
  };

  for (const auto& mu : order) {
    if (mu == lam) {
      table.emplace(mu, 1);
      continue;
    }
    BigRational sum = 0;
    for (std::size_t idx = 0; idx < roots.size(); ++idx) {
      const Weight& a = rs.positive_root_weight(idx);
      Weight shifted = mu;
      while (true) {
        shifted += a;
        const BigInt* m = lookup(shifted);
        if (!m) break;
        sum += rs.pair_inner(shifted, a) * BigRational(*m);
      }
    }
    const Weight mu_rho = mu + rho;
    const BigRational denom = top - rs.pair_inner(mu_rho, mu_rho);
    const BigRational m = 2 * sum / denom;
    if (!is_integer(m) || sgn(m) < 0) throw Error("freudenthal produced a non-integral multiplicity");
    if (sgn(m) > 0) table.emplace(mu, m.get_num());
  }
  return table;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lam) {
  if (!lam.is_dominant()) throw DomainError("weyl_dimension: weight " + to_string(lam) + " is not dominant");
  Weight rho(static_cast<std::size_t>(rs.rank()));
  for (auto& c : rho.coords) c = 1;
  const Weight shifted = lam + rho;
  BigRational dim = 1;
  for (const auto& alpha : rs.positive_roots()) {
    dim *= ratio(rs.pair_coroot(alpha, shifted), rs.pair_coroot(alpha, rho));
  }
  if (!is_integer(dim)) throw Error("weyl_dimension produced a non-integer");
  return dim.get_num();
}

BigInt total_dimension(const RootSystem& rs, const MultiplicityTable& table) {
  BigInt total = 0;
  for (const auto& [mu, m] : table) total += BigInt(static_cast<long>(orbit_size(rs, mu))) * m;
  return total;
}

namespace {

// Own copies of the affine action and the alcove test, written against the
// root system only: s_0 lambda = lambda + (1 - (beta^vee, lambda)) beta.
Weight affine_reflect(const RootSystem& rs, int node, const Weight& w) {
  if (node > 0) return rs.reflect(node, w);
  Weight r = w;
  return r.add_scaled(rs.beta_weight(), 1 - rs.pair_coroot(rs.beta(), w));
}

bool in_alcove(const RootSystem& rs, const Weight& w) {
  return w.is_dominant() && rs.pair_coroot(rs.beta(), w) <= 1;
}

}  // namespace

ShortestWord bfs_shortest_word(const RootSystem& rs, const Weight& lam, std::size_t node_limit) {
  std::unordered_set<Weight, WeightHash> seen{lam};
  std::vector<Weight> frontier{lam};
  for (std::size_t dist = 0; !frontier.empty(); ++dist) {
    for (const auto& w : frontier) {
      if (in_alcove(rs, w)) return {dist, w};
    }
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (int node = 0; node <= rs.rank(); ++node) {
        Weight r = affine_reflect(rs, node, w);
        if (seen.insert(r).second) {
          if (seen.size() > node_limit) {
            throw ResourceError("bfs_shortest_word: more than " + std::to_string(node_limit) + " weights visited");
          }
          next.push_back(std::move(r));
        }
      }
    }
    frontier = std::move(next);
  }
  throw Error("bfs_shortest_word: search exhausted without reaching the alcove");
}

}  // namespace hopoly
