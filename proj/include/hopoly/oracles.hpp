#pragma once

#include <cstddef>
#include <map>

#include "hopoly/rational.hpp"
#include "hopoly/root_system.hpp"
#include "hopoly/weight.hpp"

namespace hopoly {

/// Dominant weight -> multiplicity, for all dominant weights of V_lambda.
using MultiplicityTable = std::map<Weight, BigInt>;

/// Freudenthal's recursion over the dominant weights below lambda. Shares
/// nothing with the intertwiner engine beyond the root system itself.
MultiplicityTable freudenthal(const RootSystem& rs, const Weight& lam);

/// prod_{alpha>0} (lambda + rho, alpha^vee) / (rho, alpha^vee).
BigInt weyl_dimension(const RootSystem& rs, const Weight& lam);

/// Sum over the table of orbit_size(mu) * m(mu).
BigInt total_dimension(const RootSystem& rs, const MultiplicityTable& table);

struct ShortestWord {
  std::size_t length = 0;
  Weight lambda_bar;
};

inline constexpr std::size_t kBfsNodeLimit = 1'000'000;

/// Breadth-first search from lambda over s_0..s_n until the fundamental
/// alcove is reached. Throws ResourceError past node_limit visited weights.
ShortestWord bfs_shortest_word(const RootSystem& rs, const Weight& lam, std::size_t node_limit = kBfsNodeLimit);

}  // namespace hopoly
