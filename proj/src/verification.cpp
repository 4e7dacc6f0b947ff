#include "hopoly/verification.hpp"

#include <functional>

#include "hopoly/affine_reduction.hpp"
#include "hopoly/oracles.hpp"

namespace hopoly {

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

BigRational Sampler::positive_k() {
  const long den = integer(1, 6);
  return ratio(integer(1, 3 * den), den);
}

KValues Sampler::k_values(const RootSystem& rs) {
  KValues k;
  k.short_k = positive_k();
  k.long_k = rs.simply_laced() ? k.short_k : positive_k();
  return k;
}

BigRational Sampler::small_rational() {
  long num = 0;
  while (num == 0) num = integer(-5, 5);
  return ratio(num, integer(1, 4));
}

Weight Sampler::weight(const RootSystem& rs, long max_abs) {
  Weight w(static_cast<std::size_t>(rs.rank()));
  for (auto& c : w.coords) c = integer(-max_abs, max_abs);
  return w;
}

Weight Sampler::dominant_weight(const RootSystem& rs, long max_coord) {
  Weight w(static_cast<std::size_t>(rs.rank()));
  for (auto& c : w.coords) c = integer(0, max_coord);
  return w;
}

Vector Sampler::vector(const RootSystem& rs) {
  Vector y(rs.rank());
  for (auto& c : y) c = small_rational();
  return y;
}

NumericSum Sampler::small_sum(const RootSystem& rs) {
  NumericSum f;
  const long terms = integer(1, 3);
  for (long t = 0; t < terms; ++t) f.add(weight(rs, 2), small_rational());
  return f;
}

namespace {

using Check = std::function<std::string(Sampler&)>;

SuiteResult run_suite(const std::string& name, std::size_t cases, Sampler& sampler, const Check& check) {
  SuiteResult r{name, cases, 0, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::string failure = check(sampler);
    if (!failure.empty()) {
      if (r.failures == 0) r.first_failure = failure;
      ++r.failures;
    }
  }
  return r;
}

Vector basis_vector(const RootSystem& rs, int i) {
  Vector y(rs.rank());
  y[i] = 1;
  return y;
}

Vector to_vector(const Weight& w) {
  Vector v;
  for (long c : w.coords) v.emplace_back(c);
  return v;
}

}  // namespace

std::vector<SuiteResult> run_verification(const RootSystem& rs, const VerifyOptions& options) {
  Sampler sampler(options.seed);
  std::vector<SuiteResult> results;
  const std::size_t n = options.cases;

  results.push_back(run_suite("commutativity", n, sampler, [&](Sampler& s) -> std::string {
    const CherednikContext ctx(rs, s.k_values(rs));
    const Vector x = s.vector(rs), y = s.vector(rs);
    const NumericSum f = s.small_sum(rs);
    const auto xy = cherednik_apply(ctx, x, cherednik_apply(ctx, y, f));
    const auto yx = cherednik_apply(ctx, y, cherednik_apply(ctx, x, f));
    return xy == yx ? "" : "D_x D_y != D_y D_x";
  }));

  results.push_back(run_suite("finite_intertwiner", n, sampler, [&](Sampler& s) -> std::string {
    const CherednikContext ctx(rs, s.k_values(rs));
    const int node = static_cast<int>(s.integer(1, rs.rank()));
    const Vector y = s.vector(rs);
    const NumericSum f = s.small_sum(rs);
    NumericSum lhs = act_reflection(ctx, node, cherednik_apply(ctx, y, f));
    lhs -= cherednik_apply(ctx, reflect_vector(rs, node, y), act_reflection(ctx, node, f));
    NumericSum rhs = f;
    const BigRational y_alpha = rs.pair_inner(y, to_vector(rs.simple_root_weight(node)));
    rhs.scale(BigRational(-ctx.k_of(node_param(rs, node)) * y_alpha));
    return lhs == rhs ? "" : "s_i D_y - D_{s_i y} s_i != -k_i (y, alpha_i) at node " + std::to_string(node);
  }));

  results.push_back(run_suite("affine_intertwiner", n, sampler, [&](Sampler& s) -> std::string {
    const CherednikContext ctx(rs, s.k_values(rs));
    const AffineVector v{s.small_rational(), s.vector(rs)};
    const NumericSum f = s.small_sum(rs);
    NumericSum lhs = affine_cherednik_apply(ctx, v, act_reflection(ctx, 0, f));
    lhs -= act_reflection(ctx, 0, affine_cherednik_apply(ctx, apply_affine_reflection(rs, 0, v), f));
    NumericSum rhs = f;
    rhs.scale(BigRational(ctx.k_of(node_param(rs, 0)) * rs.pair_root(rs.beta(), v.finite)));
    return lhs == rhs ? "" : "D_v s_0 - s_0 D_{s_0 v} != k_beta (y, beta)";
  }));

  results.push_back(run_suite("eigen_equation", n, sampler, [&](Sampler& s) -> std::string {
    const CherednikContext ctx(rs, s.k_values(rs));
    const Weight lam = s.weight(rs, options.max_coord);
    const NumericSum E = build_E(ctx, lam);
    Vector spectral;
    for (const auto& c : tilde(rs, lam).coords) spectral.push_back(c.specialize(ctx.k()));
    if (E.coefficient(lam) != 1) return "leading coefficient of E_" + to_string(lam) + " is not 1";
    for (int i = 0; i < rs.rank(); ++i) {
      const Vector y = basis_vector(rs, i);
      NumericSum expected = E;
      expected.scale(rs.pair_inner(y, spectral));
      if (cherednik_apply(ctx, y, E) != expected) return "D_y E != (y, lambda~) E for lambda = " + to_string(lam);
    }
    return "";
  }));

  results.push_back(run_suite("tilde_equivariance", n, sampler, [&](Sampler& s) -> std::string {
    const Weight lam = s.weight(rs, options.max_coord + 2);
    const TildeVector t = tilde(rs, lam);
    for (int node = 0; node <= rs.rank(); ++node) {
      const Weight moved = apply_affine_reflection(rs, node, lam);
      if (moved == lam) continue;
      if (tilde(rs, moved) != apply_affine_reflection(rs, node, t)) {
        return "tilde(s_" + std::to_string(node) + " lambda) != s_" + std::to_string(node) + " tilde(lambda)";
      }
    }
    return "";
  }));

  const bool enumerable = rs.w0_order() <= kWeylEnumerationLimit;
  if (enumerable) {
    const CherednikContext one(rs, KValues{});
    results.push_back(run_suite("oracle_equivalence", n, sampler, [&](Sampler& s) -> std::string {
      const Weight lam = s.dominant_weight(rs, options.max_coord);
      const NumericSum chi = character(one, lam);
      const MultiplicityTable table = freudenthal(rs, lam);
      for (const auto& [mu, c] : chi) {
        if (!mu.is_dominant()) continue;
        auto it = table.find(mu);
        if (it == table.end() || BigRational(it->second) != c) {
          return "character and Freudenthal disagree at " + to_string(mu) + " for lambda = " + to_string(lam);
        }
      }
      BigRational total = 0;
      for (const auto& [mu, c] : chi) total += c;
      if (total != BigRational(weyl_dimension(rs, lam))) return "dimension mismatch for " + to_string(lam);
      return "";
    }));

    results.push_back(run_suite("subset_sum_agreement", n, sampler, [&](Sampler& s) -> std::string {
      const Weight lam = s.dominant_weight(rs, options.max_coord);
      if (reduce_to_minuscule(rs, lam).length() > 18) return "";
      const NumericSum chi = character(one, lam);
      const auto table = subset_sum_table(one, lam);
      std::size_t dominant_terms = 0;
      for (const auto& [mu, c] : chi) dominant_terms += mu.is_dominant();
      if (dominant_terms != table.size()) return "subset sum support differs for " + to_string(lam);
      for (const auto& [mu, m] : table) {
        if (chi.coefficient(mu) != m) return "subset sum disagrees at " + to_string(mu);
      }
      return "";
    }));
  }
  return results;
}

}  // namespace hopoly
