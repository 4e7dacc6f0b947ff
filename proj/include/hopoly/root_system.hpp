#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopoly/kpoly.hpp"
#include "hopoly/rational.hpp"
#include "hopoly/weight.hpp"

namespace hopoly {

enum class Series { A, B, C, D, E, F, G };

struct CartanType {
  Series series = Series::A;
  int rank = 1;

  /// Parses strings like "A2", "g2", "E8". Throws ParseError on syntax and
  /// ConstructionError on an inadmissible rank.
  static CartanType parse(std::string_view text);

  bool admissible() const;
  std::string name() const;
  bool operator==(const CartanType&) const = default;
};

enum class LengthClass { Short, Long };

inline ParamClass param_class(LengthClass c) {
  return c == LengthClass::Short ? ParamClass::Short : ParamClass::Long;
}

/// A root expanded in the simple roots alpha_1..alpha_n.
struct RootVector {
  std::vector<long> simple_coords;
  LengthClass length_class = LengthClass::Short;

  bool is_positive() const;
  bool operator==(const RootVector& other) const { return simple_coords == other.simple_coords; }
};

/// Full orbit enumeration (orbits, W_0 sums) is refused above this |W_0|.
inline constexpr std::int64_t kWeylEnumerationLimit = 2'000'000;

/// Finite irreducible reduced root system, Bourbaki numbering.
///
/// Short roots have (alpha, alpha) = 2, so d_i = (alpha_i, alpha_i) / 2 is 1
/// for short and 2 or 3 for long simple roots. Simple reflections and nodes
/// are numbered 1..n; coordinate vectors are 0-based.
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& cartan_type() const { return type_; }
  int rank() const { return type_.rank; }

  /// A[i][j] = (alpha_i^vee, alpha_j), 0-based.
  long cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<long>>& cartan_matrix() const { return cartan_; }
  const std::vector<std::vector<BigRational>>& inverse_cartan() const { return inverse_cartan_; }
  /// d_i for 0-based simple index i.
  long root_length(int i) const { return lengths_[i]; }
  bool simply_laced() const;

  const std::vector<RootVector>& positive_roots() const { return positive_; }
  /// Fundamental-weight coordinates of positive_roots()[idx].
  const Weight& positive_root_weight(std::size_t idx) const { return positive_weights_[idx]; }
  std::optional<std::size_t> find_positive(const RootVector& r) const;

  const RootVector& beta() const { return positive_[beta_index_]; }
  std::size_t beta_index() const { return beta_index_; }
  const Weight& beta_weight() const { return positive_weights_[beta_index_]; }

  /// alpha_node in fundamental-weight coordinates, node in 1..n.
  const Weight& simple_root_weight(int node) const { return simple_weights_[node - 1]; }
  LengthClass simple_length_class(int node) const;

  std::int64_t w0_order() const { return w0_order_; }

  Weight root_weight(const RootVector& r) const;
  long norm2(const RootVector& r) const;
  /// (alpha^vee, lambda); exact for every lambda in P.
  long pair_coroot(const RootVector& alpha, const Weight& lam) const;
  /// (alpha, x) for x in fundamental-weight coordinates with any scalar type.
  template <class S>
  S pair_root(const RootVector& alpha, const std::vector<S>& x) const {
    S sum{};
    for (int k = 0; k < rank(); ++k) {
      if (alpha.simple_coords[k] != 0) {
        sum += x[k] * BigRational(alpha.simple_coords[k] * lengths_[k]);
      }
    }
    return sum;
  }

  /// Symmetric bilinear form on fundamental-weight coordinate vectors.
  BigRational pair_inner(std::span<const BigRational> x, std::span<const BigRational> y) const;
  BigRational pair_inner(const Weight& x, const Weight& y) const;
  /// (omega_i, omega_j), 0-based.
  const BigRational& gram(int i, int j) const { return gram_[i][j]; }

  /// s_node applied to a weight, node in 1..n.
  Weight reflect(int node, const Weight& lam) const;
  /// s_by applied to a root.
  RootVector reflect_root(const RootVector& by, const RootVector& alpha) const;

  /// |Stab_{W_0}(lambda)| for a dominant weight, via the parabolic subgroup
  /// generated by the simple reflections fixing lambda.
  std::int64_t stabilizer_order(const Weight& dominant) const;

 private:
  CartanType type_;
  std::vector<std::vector<long>> cartan_;
  std::vector<std::vector<BigRational>> inverse_cartan_;
  std::vector<std::vector<BigRational>> gram_;
  std::vector<long> lengths_;
  std::vector<RootVector> positive_;
  std::vector<Weight> positive_weights_;
  std::vector<Weight> simple_weights_;
  std::size_t beta_index_ = 0;
  std::int64_t w0_order_ = 1;
};

/// Order of the Weyl group of a connected root system with the given rank and
/// number of positive roots. Throws ConstructionError if no such type exists.
std::int64_t weyl_group_order(int rank, std::size_t positive_roots, bool simply_laced);

/// R_0^0, R_0^1, R_0^2 by (alpha^vee, beta), and the involution alpha -> alpha'.
/// All entries are indices into rs.positive_roots().
struct BetaPartition {
  std::vector<std::size_t> r0;
  std::vector<std::size_t> r1;
  std::vector<std::size_t> r2;
  std::vector<std::size_t> prime;  // prime[idx] = index of alpha'
};

BetaPartition partition_by_beta(const RootSystem& rs);

/// Throws ResourceError when |W_0| exceeds kWeylEnumerationLimit.
std::vector<Weight> finite_weyl_orbit(const RootSystem& rs, const Weight& lam);

/// |W_0 . lambda| from the stabilizer order; no enumeration.
std::int64_t orbit_size(const RootSystem& rs, const Weight& lam);

struct DominantRepresentative {
  Weight weight;
  std::vector<int> word;  // simple reflections in the order applied
};

DominantRepresentative dominant_representative(const RootSystem& rs, Weight mu);

}  // namespace hopoly
