#include "hopoly/affine_reduction.hpp"

#include <algorithm>

#include "hopoly/error.hpp"

namespace hopoly {

AffineRoot simple_affine_root(const RootSystem& rs, int node) {
  AffineRoot a;
  a.finite_coroot.assign(rs.rank(), 0);
  if (node == 0) {
    // beta short, so beta^vee = sum_k c_k d_k alpha_k^vee.
    a.delta_coeff = 1;
    for (int k = 0; k < rs.rank(); ++k) {
      a.finite_coroot[k] = -rs.beta().simple_coords[k] * rs.root_length(k);
    }
  } else {
    a.finite_coroot[node - 1] = 1;
  }
  return a;
}

ParamClass node_param(const RootSystem& rs, int node) {
  if (node == 0) return param_class(rs.beta().length_class);
  return param_class(rs.simple_length_class(node));
}

long affine_pair(const RootSystem& rs, const AffineRoot& a, const Weight& lam) {
  long s = a.delta_coeff;
  for (int k = 0; k < rs.rank(); ++k) s += a.finite_coroot[k] * lam[k];
  return s;
}

KPoly affine_pair(const RootSystem& rs, const AffineRoot& a, const TildeVector& x) {
  KPoly s(a.delta_coeff);
  for (int k = 0; k < rs.rank(); ++k) {
    if (a.finite_coroot[k] != 0) s += x.coords[k] * BigRational(a.finite_coroot[k]);
  }
  return s;
}

namespace {

// s_i x = x - (a_i, x) v_i with v_0 = -beta and v_i = alpha_i.
const Weight& node_vector_sign(const RootSystem& rs, int node, long& sign) {
  if (node == 0) {
    sign = -1;
    return rs.beta_weight();
  }
  sign = 1;
  return rs.simple_root_weight(node);
}

}  // namespace

Weight apply_affine_reflection(const RootSystem& rs, int node, const Weight& lam) {
  long sign = 1;
  const Weight& v = node_vector_sign(rs, node, sign);
  const long t = affine_pair(rs, simple_affine_root(rs, node), lam);
  Weight r = lam;
  return r.add_scaled(v, -sign * t);
}

TildeVector apply_affine_reflection(const RootSystem& rs, int node, const TildeVector& x) {
  long sign = 1;
  const Weight& v = node_vector_sign(rs, node, sign);
  const KPoly t = affine_pair(rs, simple_affine_root(rs, node), x);
  TildeVector r = x;
  for (int k = 0; k < rs.rank(); ++k) {
    if (v[k] != 0) r.coords[k] -= t * BigRational(sign * v[k]);
  }
  return r;
}

bool is_minuscule(const RootSystem& rs, const Weight& lam) {
  for (int node = 0; node <= rs.rank(); ++node) {
    if (affine_pair(rs, simple_affine_root(rs, node), lam) < 0) return false;
  }
  return true;
}

TildeVector tilde(const RootSystem& rs, const Weight& lam) {
  TildeVector t;
  t.coords.reserve(rs.rank());
  for (long c : lam.coords) t.coords.emplace_back(c);
  const KPoly ks = KPoly::param(ParamClass::Short);
  const KPoly kl = KPoly::param(ParamClass::Long);
  const BigRational half = ratio(1, 2);
  for (std::size_t idx = 0; idx < rs.positive_roots().size(); ++idx) {
    const RootVector& alpha = rs.positive_roots()[idx];
    const long eps = rs.pair_coroot(alpha, lam) > 0 ? 1 : -1;
    const KPoly& k = alpha.length_class == LengthClass::Short ? ks : kl;
    const Weight& aw = rs.positive_root_weight(idx);
    for (int i = 0; i < rs.rank(); ++i) {
      if (aw[i] != 0) t.coords[i] += k * (half * eps * aw[i]);
    }
  }
  return t;
}

BigRational ReductionChain::coefficient(std::size_t j, const KValues& k) const {
  const BigRational d = denominators.at(j - 1).specialize(k);
  if (is_zero(d)) {
    throw SingularParameterError(j, "denominator d_" + std::to_string(j) + " = " +
                                        denominators[j - 1].to_string() + " vanishes at the given k");
  }
  return k[numerators[j - 1]] / d;
}

KPoly ReductionChain::denominator_product() const {
  KPoly p(1L);
  for (const auto& d : denominators) p *= d;
  return p;
}

ReductionChain reduce_to_minuscule(const RootSystem& rs, const Weight& lam, DescentRule rule) {
  std::vector<AffineRoot> simple;
  for (int node = 0; node <= rs.rank(); ++node) simple.push_back(simple_affine_root(rs, node));

  // Each step crosses one wall separating the current weight from the alcove,
  // so the number of steps is bounded by the number of such walls.
  std::vector<int> descent;
  Weight current = lam;
  while (true) {
    int chosen = -1;
    for (int i = 0; i <= rs.rank(); ++i) {
      const int node = rule == DescentRule::SmallestIndex ? i : rs.rank() - i;
      if (affine_pair(rs, simple[node], current) < 0) {
        chosen = node;
        break;
      }
    }
    if (chosen < 0) break;
    current = apply_affine_reflection(rs, chosen, current);
    descent.push_back(chosen);
  }

  ReductionChain rc;
  rc.lambda = lam;
  rc.lambda_bar = current;
  rc.word.assign(descent.rbegin(), descent.rend());
  Weight w = rc.lambda_bar;
  for (int node : rc.word) {
    rc.chain.push_back(w);
    rc.denominators.push_back(affine_pair(rs, simple[node], tilde(rs, w)));
    rc.numerators.push_back(node_param(rs, node));
    w = apply_affine_reflection(rs, node, w);
  }
  if (w != lam) throw Error("reduction chain does not return to lambda");
  return rc;
}

}  // namespace hopoly
