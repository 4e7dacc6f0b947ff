#pragma once

#include <cstddef>
#include <vector>

#include "hopoly/kpoly.hpp"
#include "hopoly/root_system.hpp"
#include "hopoly/weight.hpp"

namespace hopoly {

/// m*delta + alpha^vee, with alpha^vee expanded in the simple coroots.
struct AffineRoot {
  long delta_coeff = 0;
  std::vector<long> finite_coroot;
};

/// a_0 = delta - beta^vee for node 0, a_i = alpha_i^vee for node i >= 1.
AffineRoot simple_affine_root(const RootSystem& rs, int node);

/// Parameter attached to a node: k_0 = k_beta (short), k_i = k_{alpha_i}.
ParamClass node_param(const RootSystem& rs, int node);

/// Deformed weight lambda~ in fundamental-weight coordinates; each entry has
/// degree <= 1 in the parameters.
struct TildeVector {
  std::vector<KPoly> coords;
  bool operator==(const TildeVector&) const = default;
};

long affine_pair(const RootSystem& rs, const AffineRoot& a, const Weight& lam);
KPoly affine_pair(const RootSystem& rs, const AffineRoot& a, const TildeVector& x);

/// s_i . lambda; s_0 . lambda = s_beta lambda + beta.
Weight apply_affine_reflection(const RootSystem& rs, int node, const Weight& lam);
TildeVector apply_affine_reflection(const RootSystem& rs, int node, const TildeVector& x);

/// lambda lies in the closed fundamental alcove: (a_i, lambda) >= 0 for i = 0..n.
bool is_minuscule(const RootSystem& rs, const Weight& lam);

/// lambda + 1/2 sum_{alpha>0} k_alpha eps_{(alpha^vee, lambda)} alpha with
/// eps_t = 1 for t > 0 and -1 for t <= 0.
TildeVector tilde(const RootSystem& rs, const Weight& lam);

enum class DescentRule { SmallestIndex, LargestIndex };

/// Reduced word for w_lambda together with the intertwiner data.
///
/// chain[0] = lambda_bar and chain[j] = s_{word[j-1]} chain[j-1]; applying
/// s_{word[m-1]} to chain[m-1] returns lambda. denominators[j] is
/// d_{j+1} = (a_{word[j]}, tilde(chain[j])) and the coefficient c_{j+1} is
/// k_{numerators[j]} / denominators[j].
struct ReductionChain {
  Weight lambda;
  Weight lambda_bar;
  std::vector<int> word;
  std::vector<Weight> chain;
  std::vector<KPoly> denominators;
  std::vector<ParamClass> numerators;

  std::size_t length() const { return word.size(); }
  /// c_j at numeric k (1-based j). Throws SingularParameterError if d_j vanishes.
  BigRational coefficient(std::size_t j, const KValues& k) const;
  /// Product of all d_j.
  KPoly denominator_product() const;
};

/// Greedy descent to the fundamental alcove. Terminates for every weight.
ReductionChain reduce_to_minuscule(const RootSystem& rs, const Weight& lam,
                                   DescentRule rule = DescentRule::SmallestIndex);

}  // namespace hopoly
