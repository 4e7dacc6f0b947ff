#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hopoly/affine_reduction.hpp"
#include "hopoly/exp_sum.hpp"
#include "hopoly/root_system.hpp"

namespace hopoly {

/// A vector of V_0 in fundamental-weight coordinates.
using Vector = std::vector<BigRational>;

/// Root system plus a parameter assignment: numeric k, or symbolic.
class CherednikContext {
 public:
  /// Numeric mode.
  CherednikContext(RootSystem rs, KValues k);
  /// Symbolic mode; only the cleared operations are available.
  explicit CherednikContext(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  bool is_numeric() const { return k_.has_value(); }
  /// Throws Error in symbolic mode.
  const KValues& k() const;
  bool at_k_one() const;

  /// rho = 1/2 sum_{alpha>0} k_alpha alpha, fundamental-weight coordinates.
  const std::vector<KPoly>& rho() const { return rho_; }
  /// rho at the numeric k. Throws Error in symbolic mode.
  const Vector& rho_numeric() const;

  const BigRational& k_of(ParamClass c) const { return k()[c]; }

 private:
  RootSystem rs_;
  std::optional<KValues> k_;
  std::vector<KPoly> rho_;
  Vector rho_numeric_;
};

// ---------------------------------------------------------------------------
// W-action and the operators N_alpha, D_y, D_v

/// Relabels every e^mu as e^{s_node . mu}; node in 0..n.
template <class S>
ExpSum<S> act_reflection(const CherednikContext& ctx, int node, const ExpSum<S>& f) {
  ExpSum<S> out;
  for (const auto& [w, c] : f) out.add(apply_affine_reflection(ctx.root_system(), node, w), c);
  return out;
}

/// N_alpha = (1 - e^{-alpha})^{-1} (1 - s_alpha) for the positive root with
/// index root_index in positive_roots().
NumericSum act_N(const CherednikContext& ctx, std::size_t root_index, const NumericSum& f);

/// Linear reflection of a vector; node in 1..n.
Vector reflect_vector(const RootSystem& rs, int node, const Vector& y);

/// D_y = d_y + sum_{alpha>0} (y,alpha) k_alpha N_alpha - (y, rho). Numeric mode.
NumericSum cherednik_apply(const CherednikContext& ctx, const Vector& y, const NumericSum& f);

/// v = r*delta + y in V.
struct AffineVector {
  BigRational delta;
  Vector finite;
  bool operator==(const AffineVector&) const = default;
};

/// Dual action on V: s_0 (r delta + y) = (r + (y,beta)) delta + s_beta y,
/// s_i (r delta + y) = r delta + s_i y.
AffineVector apply_affine_reflection(const RootSystem& rs, int node, const AffineVector& v);

/// D_v = D_y + r.
NumericSum affine_cherednik_apply(const CherednikContext& ctx, const AffineVector& v, const NumericSum& f);

// ---------------------------------------------------------------------------
// Nonsymmetric and symmetric polynomials

/// E_lambda = (s_{i_m} + c_m) ... (s_{i_1} + c_1) e^{lambda_bar}. Numeric mode;
/// throws SingularParameterError when some d_j vanishes at k.
NumericSum build_E(const CherednikContext& ctx, const Weight& lam,
                   DescentRule rule = DescentRule::SmallestIndex);
NumericSum build_E(const CherednikContext& ctx, const ReductionChain& chain);

struct ClearedE {
  ClearedSum sum;     // (prod_j d_j) * E_lambda
  KPoly denominator;  // prod_j d_j
};

/// (d_m s_{i_m} + k_{i_m}) ... (d_1 s_{i_1} + k_{i_1}) e^{lambda_bar}. Any mode.
ClearedE build_E_cleared(const CherednikContext& ctx, const Weight& lam);

/// sum_{w in W_0} w f, computed by orbit-stabilizer: each orbit class with
/// dominant representative nu receives |Stab(nu)| times its coefficient sum.
/// The class loop is split over `threads` workers; results are identical for
/// any thread count. Throws ResourceError when |W_0| exceeds the enumeration limit.
NumericSum symmetrize_sum(const CherednikContext& ctx, const NumericSum& f, unsigned threads = 1);
ClearedSum symmetrize_sum(const CherednikContext& ctx, const ClearedSum& f, unsigned threads = 1);

/// (|W_0 lambda| / |W_0|) sum_{w in W_0} w E. lambda dominant.
NumericSum symmetrize(const CherednikContext& ctx, const NumericSum& E, const Weight& lam,
                      unsigned threads = 1);

/// Heckman-Opdam polynomial P_lambda at numeric k. lambda dominant.
NumericSum heckman_opdam(const CherednikContext& ctx, const Weight& lam, unsigned threads = 1);

/// chi_lambda; requires k = 1 and lambda dominant.
NumericSum character(const CherednikContext& ctx, const Weight& lam, unsigned threads = 1);

/// m_lambda(mu) via the character; any mu.
BigInt multiplicity(const CherednikContext& ctx, const Weight& lam, const Weight& mu);

/// Enumeration guard for the subset-sum formula.
inline constexpr std::size_t kSubsetWordLimit = 22;

struct SubsetTerm {
  std::vector<std::size_t> subset;  // J, 1-based positions
  BigRational c_J;
};

struct SubsetSumResult {
  BigRational value;        // orbit_ratio * subset_total
  BigRational orbit_ratio;  // |W_0 lambda| / |W_0 mu|
  BigRational subset_total; // sum of c_J over qualifying J
  std::vector<SubsetTerm> terms;
};

/// m_lambda(mu) as (|W_0 lambda| / |W_0 mu|) sum_J c_J over the subsets J with
/// w_J^{-1} . lambda_bar in W_0 mu. Requires k = 1 and lambda dominant;
/// throws ResourceError when the word is longer than kSubsetWordLimit.
SubsetSumResult multiplicity_subset_sum(const CherednikContext& ctx, const Weight& lam, const Weight& mu,
                                        bool collect_terms = false);

/// All subset sums at once: dominant mu -> m_lambda(mu).
std::map<Weight, BigRational> subset_sum_table(const CherednikContext& ctx, const Weight& lam);

// ---------------------------------------------------------------------------
// Positivity

/// c_lambda = (|W_0| / |W_0 lambda|) prod_j d_j. lambda dominant.
KPoly compute_c_lambda(const CherednikContext& ctx, const Weight& lam);

struct PositivityReport {
  Weight lambda;
  KPoly c_lambda;
  bool c_lambda_in_Zplus = false;
  std::vector<KPoly> denominators;
  bool denominators_in_P1 = false;
  ClearedSum c_lambda_P;  // sum_{w in W_0} w (prod d_j E_lambda)
  std::vector<std::pair<Weight, bool>> coefficient_checks;
  bool leading_matches = false;  // coefficient of e^lambda equals c_lambda
  bool passed = false;
};

PositivityReport verify_positivity(const CherednikContext& ctx, const Weight& lam, unsigned threads = 1);

}  // namespace hopoly
