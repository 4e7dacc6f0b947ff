#include "hopoly/cherednik.hpp"

#include <functional>
#include <thread>
#include <unordered_map>

#include "hopoly/error.hpp"

namespace hopoly {

// ---------------------------------------------------------------------------
// Context

namespace {

std::vector<KPoly> symbolic_rho(const RootSystem& rs) {
  std::vector<KPoly> rho(rs.rank());
  const BigRational half = ratio(1, 2);
  for (std::size_t idx = 0; idx < rs.positive_roots().size(); ++idx) {
    const KPoly k = KPoly::param(param_class(rs.positive_roots()[idx].length_class));
    const Weight& aw = rs.positive_root_weight(idx);
    for (int i = 0; i < rs.rank(); ++i) {
      if (aw[i] != 0) rho[i] += k * (half * aw[i]);
    }
  }
  return rho;
}

void require_dominant(const Weight& lam) {
  if (!lam.is_dominant()) throw DomainError("weight " + to_string(lam) + " is not dominant");
}

void require_rank(const RootSystem& rs, const Weight& lam) {
  if (lam.size() != static_cast<std::size_t>(rs.rank())) {
    throw DomainError("weight " + to_string(lam) + " has " + std::to_string(lam.size()) +
                      " coordinates, expected " + std::to_string(rs.rank()));
  }
}

}  // namespace

CherednikContext::CherednikContext(RootSystem rs, KValues k)
    : rs_(std::move(rs)), k_(std::move(k)), rho_(symbolic_rho(rs_)) {
  for (const auto& r : rho_) rho_numeric_.push_back(r.specialize(*k_));
}

CherednikContext::CherednikContext(RootSystem rs) : rs_(std::move(rs)), rho_(symbolic_rho(rs_)) {}

const KValues& CherednikContext::k() const {
  if (!k_) throw DomainError("operation requires numeric k");
  return *k_;
}

bool CherednikContext::at_k_one() const { return k_ && k_->short_k == 1 && k_->long_k == 1; }

const Vector& CherednikContext::rho_numeric() const {
  if (!k_) throw DomainError("operation requires numeric k");
  return rho_numeric_;
}

NumericSum specialize(const ClearedSum& f, const KValues& k) {
  NumericSum out;
  for (const auto& [w, c] : f) out.add(w, c.specialize(k));
  return out;
}

// ---------------------------------------------------------------------------
// Operators

NumericSum act_N(const CherednikContext& ctx, std::size_t root_index, const NumericSum& f) {
  const RootSystem& rs = ctx.root_system();
  const RootVector& alpha = rs.positive_roots().at(root_index);
  const Weight& aw = rs.positive_root_weight(root_index);
  NumericSum out;
  for (const auto& [mu, c] : f) {
    const long r = rs.pair_coroot(alpha, mu);
    if (r > 0) {
      Weight w = mu;
      for (long j = 0; j < r; ++j) {
        out.add(w, c);
        w -= aw;
      }
    } else if (r < 0) {
      const BigRational neg = -c;
      Weight w = mu;
      for (long j = 1; j <= -r; ++j) {
        w += aw;
        out.add(w, neg);
      }
    }
  }
  return out;
}

Vector reflect_vector(const RootSystem& rs, int node, const Vector& y) {
  Vector r = y;
  const BigRational t = y[node - 1];
  const Weight& a = rs.simple_root_weight(node);
  for (int k = 0; k < rs.rank(); ++k) {
    if (a[k] != 0) r[k] -= t * a[k];
  }
  return r;
}

NumericSum cherednik_apply(const CherednikContext& ctx, const Vector& y, const NumericSum& f) {
  const RootSystem& rs = ctx.root_system();
  const int n = rs.rank();
  // t[j] = (y, omega_j)
  Vector t(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) t[j] += y[i] * rs.gram(i, j);
  }
  auto pair_weight = [&](const Weight& w) {
    BigRational s = 0;
    for (int j = 0; j < n; ++j) {
      if (w[j] != 0) s += t[j] * w[j];
    }
    return s;
  };
  BigRational y_rho = 0;
  const Vector& rho = ctx.rho_numeric();
  for (int j = 0; j < n; ++j) y_rho += t[j] * rho[j];

  NumericSum out;
  for (const auto& [mu, c] : f) out.add(mu, (pair_weight(mu) - y_rho) * c);
  for (std::size_t idx = 0; idx < rs.positive_roots().size(); ++idx) {
    const BigRational factor =
        pair_weight(rs.positive_root_weight(idx)) * ctx.k_of(param_class(rs.positive_roots()[idx].length_class));
    if (is_zero(factor)) continue;
    out += act_N(ctx, idx, f).scale(factor);
  }
  return out;
}

AffineVector apply_affine_reflection(const RootSystem& rs, int node, const AffineVector& v) {
  if (node != 0) return {v.delta, reflect_vector(rs, node, v.finite)};
  const BigRational y_beta = rs.pair_root(rs.beta(), v.finite);
  AffineVector out{v.delta + y_beta, v.finite};
  const Weight& b = rs.beta_weight();
  // beta short: s_beta y = y - (beta, y) beta
  for (int k = 0; k < rs.rank(); ++k) {
    if (b[k] != 0) out.finite[k] -= y_beta * b[k];
  }
  return out;
}

NumericSum affine_cherednik_apply(const CherednikContext& ctx, const AffineVector& v, const NumericSum& f) {
  NumericSum out = cherednik_apply(ctx, v.finite, f);
  NumericSum shift = f;
  out += shift.scale(v.delta);
  return out;
}

// ---------------------------------------------------------------------------
// E_lambda

NumericSum build_E(const CherednikContext& ctx, const ReductionChain& chain) {
  const KValues& k = ctx.k();
  NumericSum f = NumericSum::monomial(chain.lambda_bar);
  for (std::size_t j = 1; j <= chain.length(); ++j) {
    const BigRational c = chain.coefficient(j, k);
    NumericSum g = act_reflection(ctx, chain.word[j - 1], f);
    g += f.scale(c);
    f = std::move(g);
  }
  return f;
}

NumericSum build_E(const CherednikContext& ctx, const Weight& lam, DescentRule rule) {
  require_rank(ctx.root_system(), lam);
  return build_E(ctx, reduce_to_minuscule(ctx.root_system(), lam, rule));
}

ClearedE build_E_cleared(const CherednikContext& ctx, const Weight& lam) {
  require_rank(ctx.root_system(), lam);
  const ReductionChain chain = reduce_to_minuscule(ctx.root_system(), lam);
  ClearedSum f = ClearedSum::monomial(chain.lambda_bar, KPoly(1L));
  for (std::size_t j = 0; j < chain.length(); ++j) {
    ClearedSum g = act_reflection(ctx, chain.word[j], f);
    g.scale(chain.denominators[j]);
    g += f.scale(KPoly::param(chain.numerators[j]));
    f = std::move(g);
  }
  return {std::move(f), chain.denominator_product()};
}

// ---------------------------------------------------------------------------
// Symmetrization

namespace {

template <class S>
ExpSum<S> symmetrize_sum_impl(const RootSystem& rs, const ExpSum<S>& f, unsigned threads) {
  if (rs.w0_order() > kWeylEnumerationLimit) {
    throw ResourceError("W_0 symmetrization refused for " + rs.cartan_type().name() + ": |W_0| = " +
                        std::to_string(rs.w0_order()) + " exceeds " + std::to_string(kWeylEnumerationLimit));
  }
  std::map<Weight, S> classes;
  for (const auto& [w, c] : f) classes[dominant_representative(rs, w).weight] += c;
  std::vector<std::pair<Weight, S>> work;
  for (auto& [w, c] : classes) {
    if (!is_zero(c)) work.emplace_back(w, c * BigRational(rs.stabilizer_order(w)));
  }

  auto run = [&](std::size_t first, std::size_t stride, ExpSum<S>& out) {
    for (std::size_t i = first; i < work.size(); i += stride) {
      for (const auto& w : finite_weyl_orbit(rs, work[i].first)) out.add(w, work[i].second);
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1 || work.size() < 2) {
    ExpSum<S> out;
    run(0, 1, out);
    return out;
  }
  std::vector<ExpSum<S>> partial(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t, threads, std::ref(partial[t]));
  }
  ExpSum<S> out;
  for (const auto& p : partial) out += p;
  return out;
}

}  // namespace

NumericSum symmetrize_sum(const CherednikContext& ctx, const NumericSum& f, unsigned threads) {
  return symmetrize_sum_impl(ctx.root_system(), f, threads);
}

ClearedSum symmetrize_sum(const CherednikContext& ctx, const ClearedSum& f, unsigned threads) {
  return symmetrize_sum_impl(ctx.root_system(), f, threads);
}

NumericSum symmetrize(const CherednikContext& ctx, const NumericSum& E, const Weight& lam, unsigned threads) {
  require_rank(ctx.root_system(), lam);
  require_dominant(lam);
  NumericSum s = symmetrize_sum(ctx, E, threads);
  return s.scale(ratio(1, ctx.root_system().stabilizer_order(lam)));
}

NumericSum heckman_opdam(const CherednikContext& ctx, const Weight& lam, unsigned threads) {
  require_rank(ctx.root_system(), lam);
  require_dominant(lam);
  return symmetrize(ctx, build_E(ctx, lam), lam, threads);
}

NumericSum character(const CherednikContext& ctx, const Weight& lam, unsigned threads) {
  if (!ctx.at_k_one()) throw DomainError("characters require k = 1");
  return heckman_opdam(ctx, lam, threads);
}

BigInt multiplicity(const CherednikContext& ctx, const Weight& lam, const Weight& mu) {
  require_rank(ctx.root_system(), mu);
  const BigRational m = character(ctx, lam).coefficient(mu);
  if (!is_integer(m)) throw Error("non-integral multiplicity " + to_string(m));
  return m.get_num();
}

// ---------------------------------------------------------------------------
// Subset-sum formula

namespace {

// Visits every J subset of {1..m}: the endpoint w_J^{-1} . lambda_bar and c_J.
// `taken` has bit j-1 set when j is in J.
template <class Visit>
void enumerate_subsets(const RootSystem& rs, const ReductionChain& chain, const std::vector<BigRational>& c,
                       Visit&& visit) {
  const std::size_t m = chain.length();
  std::function<void(std::size_t, const Weight&, const BigRational&, std::uint32_t)> rec =
      [&](std::size_t j, const Weight& w, const BigRational& prod, std::uint32_t taken) {
        if (j == m) {
          visit(w, prod, taken);
          return;
        }
        rec(j + 1, apply_affine_reflection(rs, chain.word[j], w), prod, taken);
        rec(j + 1, w, prod * c[j], taken | (std::uint32_t{1} << j));
      };
  rec(0, chain.lambda_bar, BigRational(1), 0);
}

struct SubsetSetup {
  ReductionChain chain;
  std::vector<BigRational> c;
};

SubsetSetup subset_setup(const CherednikContext& ctx, const Weight& lam) {
  if (!ctx.at_k_one()) throw DomainError("multiplicities require k = 1");
  require_rank(ctx.root_system(), lam);
  require_dominant(lam);
  SubsetSetup s{reduce_to_minuscule(ctx.root_system(), lam), {}};
  if (s.chain.length() > kSubsetWordLimit) {
    throw ResourceError("subset enumeration refused: word length " + std::to_string(s.chain.length()) +
                        " exceeds " + std::to_string(kSubsetWordLimit) + "; use the character path");
  }
  for (std::size_t j = 1; j <= s.chain.length(); ++j) s.c.push_back(s.chain.coefficient(j, ctx.k()));
  return s;
}

BigRational orbit_ratio(const RootSystem& rs, const Weight& lam_dom, const Weight& mu_dom) {
  // |W_0 lambda| / |W_0 mu| = |Stab(mu)| / |Stab(lambda)|
  return ratio(rs.stabilizer_order(mu_dom), rs.stabilizer_order(lam_dom));
}

}  // namespace

std::map<Weight, BigRational> subset_sum_table(const CherednikContext& ctx, const Weight& lam) {
  const RootSystem& rs = ctx.root_system();
  const SubsetSetup s = subset_setup(ctx, lam);
  std::unordered_map<Weight, BigRational, WeightHash> leaves;
  enumerate_subsets(rs, s.chain, s.c,
                    [&](const Weight& w, const BigRational& prod, std::uint32_t) { leaves[w] += prod; });
  std::map<Weight, BigRational> by_class;
  for (const auto& [w, total] : leaves) by_class[dominant_representative(rs, w).weight] += total;
  std::map<Weight, BigRational> table;
  for (const auto& [nu, total] : by_class) {
    if (is_zero(total)) continue;
    table.emplace(nu, orbit_ratio(rs, lam, nu) * total);
  }
  return table;
}

SubsetSumResult multiplicity_subset_sum(const CherednikContext& ctx, const Weight& lam, const Weight& mu,
                                        bool collect_terms) {
  const RootSystem& rs = ctx.root_system();
  require_rank(rs, mu);
  const SubsetSetup s = subset_setup(ctx, lam);
  const Weight target = dominant_representative(rs, mu).weight;

  SubsetSumResult result;
  result.orbit_ratio = orbit_ratio(rs, lam, target);
  std::unordered_map<Weight, bool, WeightHash> in_orbit;
  enumerate_subsets(rs, s.chain, s.c, [&](const Weight& w, const BigRational& prod, std::uint32_t taken) {
    auto [it, inserted] = in_orbit.try_emplace(w, false);
    if (inserted) it->second = dominant_representative(rs, w).weight == target;
    if (!it->second) return;
    result.subset_total += prod;
    if (collect_terms) {
      SubsetTerm term;
      for (std::size_t j = 0; j < s.chain.length(); ++j) {
        if (taken & (std::uint32_t{1} << j)) term.subset.push_back(j + 1);
      }
      term.c_J = prod;
      result.terms.push_back(std::move(term));
    }
  });
  result.value = result.orbit_ratio * result.subset_total;
  return result;
}

// ---------------------------------------------------------------------------
// Positivity

KPoly compute_c_lambda(const CherednikContext& ctx, const Weight& lam) {
  const RootSystem& rs = ctx.root_system();
  require_rank(rs, lam);
  require_dominant(lam);
  KPoly c = reduce_to_minuscule(rs, lam).denominator_product();
  return c *= BigRational(rs.stabilizer_order(lam));
}

PositivityReport verify_positivity(const CherednikContext& ctx, const Weight& lam, unsigned threads) {
  const RootSystem& rs = ctx.root_system();
  require_rank(rs, lam);
  require_dominant(lam);
  PositivityReport report;
  report.lambda = lam;
  const ReductionChain chain = reduce_to_minuscule(rs, lam);
  report.denominators = chain.denominators;
  report.denominators_in_P1 = std::all_of(chain.denominators.begin(), chain.denominators.end(),
                                          [](const KPoly& d) { return is_in_P1(d); });
  report.c_lambda = compute_c_lambda(ctx, lam);
  report.c_lambda_in_Zplus = is_in_Zplus(report.c_lambda);

  const ClearedE cleared = build_E_cleared(ctx, lam);
  report.c_lambda_P = symmetrize_sum(ctx, cleared.sum, threads);
  bool all_ok = true;
  for (const auto& [w, c] : report.c_lambda_P) {
    const bool ok = is_in_Zplus(c);
    all_ok &= ok;
    report.coefficient_checks.emplace_back(w, ok);
  }
  report.leading_matches = report.c_lambda_P.coefficient(lam) == report.c_lambda;
  report.passed = all_ok && report.c_lambda_in_Zplus && report.denominators_in_P1 && report.leading_matches;
  return report;
}

}  // namespace hopoly
