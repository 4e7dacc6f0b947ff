#pragma once

#include <set>
#include <vector>

#include "hopoly/exp_sum.hpp"
#include "hopoly/root_system.hpp"

namespace hopoly::testing {

using Matrix = std::vector<std::vector<long>>;

/// Action of s_node on fundamental-weight coordinates as an integer matrix.
inline Matrix reflection_matrix(const RootSystem& rs, int node) {
  const int n = rs.rank();
  Matrix m(n, std::vector<long>(n, 0));
  for (int c = 0; c < n; ++c) {
    Weight e(static_cast<std::size_t>(n));
    e.coords[c] = 1;
    Weight img = rs.reflect(node, e);
    for (int r = 0; r < n; ++r) m[r][c] = img.coords[r];
  }
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Weight apply(const Matrix& m, const Weight& w) {
  Weight out(w.coords.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out.coords[r] += m[r][c] * w.coords[c];
  return out;
}

/// Every element of W_0 as a matrix, by closure under the simple reflections.
inline std::vector<Matrix> enumerate_weyl_group(const RootSystem& rs) {
  const int n = rs.rank();
  Matrix id(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::vector<Matrix> gens;
  for (int node = 1; node <= n; ++node) gens.push_back(reflection_matrix(rs, node));
  std::set<Matrix> seen{id};
  std::vector<Matrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Matrix h = multiply(s, g);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// sum_{w in W_0} w f by literal enumeration.
template <class S>
ExpSum<S> brute_symmetrize(const std::vector<Matrix>& group, const ExpSum<S>& f) {
  ExpSum<S> out;
  for (const auto& g : group)
    for (const auto& [w, c] : f) out.add(apply(g, w), c);
  return out;
}

}  // namespace hopoly::testing
