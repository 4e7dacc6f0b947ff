#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "hopoly/error.hpp"
#include "hopoly/root_system.hpp"
#include "support.hpp"

using namespace hopoly;

namespace {

RootSystem make(const std::string& name) { return RootSystem(CartanType::parse(name)); }

const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2",
                                              "C3", "C4", "D3", "D4", "G2", "F4"};

std::size_t expected_positive(const CartanType& t) {
  const std::size_t n = t.rank;
  switch (t.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return 0;
}

}  // namespace

TEST_CASE("cartan type parsing") {
  CHECK(CartanType::parse("g2").name() == "G2");
  CHECK(CartanType::parse("E8").rank == 8);
  CHECK_THROWS_AS(CartanType::parse("B1"), ConstructionError);
  CHECK_THROWS_AS(CartanType::parse("E5"), ConstructionError);
  CHECK_THROWS_AS(CartanType::parse("D2"), ConstructionError);
  CHECK_THROWS_AS(CartanType::parse("X3"), ParseError);
  CHECK_THROWS_AS(CartanType::parse("A"), ParseError);
}

TEST_CASE("positive root counts match the classical values") {
  for (std::string name : {"A1", "A2", "A5", "B2", "B5", "C3", "C6", "D4", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    CAPTURE(name);
    RootSystem rs = make(name);
    CHECK(rs.positive_roots().size() == expected_positive(rs.cartan_type()));
    for (const auto& r : rs.positive_roots()) {
      CHECK(r.is_positive());
      CHECK((rs.norm2(r) == 2) == (r.length_class == LengthClass::Short));
    }
  }
}

TEST_CASE("small examples") {
  RootSystem a2 = make("A2");
  CHECK(a2.positive_roots().size() == 3);
  CHECK(a2.beta().simple_coords == std::vector<long>{1, 1});
  CHECK(a2.pair_coroot(a2.beta(), Weight{1, 0}) == 1);
  CHECK(a2.pair_coroot(a2.positive_roots()[0], Weight{0, 0}) == 0);

  RootSystem g2 = make("G2");
  CHECK(g2.w0_order() == 12);
  CHECK(g2.beta().simple_coords == std::vector<long>{2, 1});
  CHECK(g2.beta().length_class == LengthClass::Short);

  RootSystem a1 = make("A1");
  CHECK(a1.beta_weight() == Weight{2});
  CHECK(a1.pair_coroot(a1.beta(), Weight{1}) == 1);
  CHECK(a1.pair_inner(Weight{1}, Weight{1}) == ratio(1, 2));
  CHECK(a2.pair_inner(a2.simple_root_weight(1), a2.simple_root_weight(2)) == -1);
  CHECK(a2.pair_inner(Weight{3, -1}, Weight{0, 0}) == 0);
}

TEST_CASE("inner product is symmetric and positive definite") {
  std::mt19937_64 rng(5);
  for (const auto& name : kSmallTypes) {
    CAPTURE(name);
    RootSystem rs = make(name);
    const int n = rs.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(rs.gram(i, j) == rs.gram(j, i));
    for (int t = 0; t < 50; ++t) {
      Weight x(static_cast<std::size_t>(n));
      for (auto& c : x.coords) c = static_cast<long>(rng() % 9) - 4;
      if (x.is_zero()) continue;
      CHECK(rs.pair_inner(x, x) > 0);
    }
    // (alpha_i, alpha_j) = d_j A[j][i]
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        CHECK(rs.pair_inner(rs.simple_root_weight(i), rs.simple_root_weight(j)) ==
              rs.root_length(j - 1) * rs.cartan(j - 1, i - 1));
  }
}

TEST_CASE("beta pairs into {0,1} with every other positive root") {
  for (std::string name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
    CAPTURE(name);
    RootSystem rs = make(name);
    CHECK(rs.beta().length_class == LengthClass::Short);
    for (std::size_t idx = 0; idx < rs.positive_roots().size(); ++idx) {
      if (idx == rs.beta_index()) continue;
      long p = rs.pair_coroot(rs.positive_roots()[idx], rs.beta_weight());
      CHECK((p == 0 || p == 1));
    }
  }
}

TEST_CASE("partition by beta and the prime involution") {
  RootSystem a1 = make("A1");
  BetaPartition p1 = partition_by_beta(a1);
  CHECK(p1.r0.empty());
  CHECK(p1.r1.empty());
  CHECK(p1.r2 == std::vector<std::size_t>{a1.beta_index()});

  RootSystem a2 = make("A2");
  BetaPartition p2 = partition_by_beta(a2);
  CHECK(p2.r0.empty());
  CHECK(p2.r1.size() == 2);
  auto i1 = *a2.find_positive({{1, 0}, LengthClass::Short});
  auto i2 = *a2.find_positive({{0, 1}, LengthClass::Short});
  CHECK(p2.prime[i1] == i2);

  for (const auto& name : kSmallTypes) {
    CAPTURE(name);
    RootSystem rs = make(name);
    BetaPartition p = partition_by_beta(rs);
    CHECK(p.r0.size() + p.r1.size() + p.r2.size() == rs.positive_roots().size());
    CHECK(p.r2 == std::vector<std::size_t>{rs.beta_index()});
    for (auto idx : p.r0) CHECK(p.prime[idx] == idx);
    for (auto idx : p.r2) CHECK(p.prime[idx] == idx);
    std::vector<std::size_t> image;
    for (auto idx : p.r1) {
      CHECK(p.prime[p.prime[idx]] == idx);
      CHECK(std::find(p.r1.begin(), p.r1.end(), p.prime[idx]) != p.r1.end());
      image.push_back(p.prime[idx]);
      // alpha + alpha' = (beta^vee, alpha) beta on R^1
      const auto& alpha = rs.positive_roots()[idx];
      const long m = rs.pair_coroot(rs.beta(), rs.root_weight(alpha));
      const auto& b = rs.positive_roots()[p.prime[idx]].simple_coords;
      for (int k = 0; k < rs.rank(); ++k) CHECK(alpha.simple_coords[k] + b[k] == m * rs.beta().simple_coords[k]);
    }
    std::sort(image.begin(), image.end());
    auto r1 = p.r1;
    std::sort(r1.begin(), r1.end());
    CHECK(image == r1);
  }
}

TEST_CASE("simple reflections permute the other positive roots") {
  for (const auto& name : kSmallTypes) {
    CAPTURE(name);
    RootSystem rs = make(name);
    for (int i = 1; i <= rs.rank(); ++i) {
      RootVector ai{std::vector<long>(rs.rank(), 0), rs.simple_length_class(i)};
      ai.simple_coords[i - 1] = 1;
      std::vector<std::size_t> image;
      for (const auto& r : rs.positive_roots()) {
        if (r == ai) continue;
        RootVector img = rs.reflect_root(ai, r);
        auto found = rs.find_positive(img);
        REQUIRE(found.has_value());
        CHECK(rs.positive_roots()[*found].length_class == r.length_class);
        image.push_back(*found);
      }
      std::sort(image.begin(), image.end());
      CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
    }
  }
}

TEST_CASE("Weyl group order agrees with brute-force enumeration") {
  for (const auto& name : kSmallTypes) {
    CAPTURE(name);
    RootSystem rs = make(name);
    CHECK(static_cast<std::int64_t>(testing::enumerate_weyl_group(rs).size()) == rs.w0_order());
  }
  CHECK(make("E6").w0_order() == 51840);
  CHECK(make("E7").w0_order() == 2903040);
  CHECK(make("E8").w0_order() == 696729600);
}

TEST_CASE("orbits and stabilizers") {
  RootSystem a1 = make("A1");
  CHECK(finite_weyl_orbit(a1, Weight{2}) == std::vector<Weight>{Weight{-2}, Weight{2}});
  RootSystem a2 = make("A2");
  CHECK(orbit_size(a2, Weight{1, 1}) == 6);
  CHECK(finite_weyl_orbit(a2, Weight{1, 1}).size() == 6);
  CHECK(orbit_size(a2, Weight{0, 0}) == 1);

  std::mt19937_64 rng(9);
  for (const auto& name : kSmallTypes) {
    CAPTURE(name);
    RootSystem rs = make(name);
    for (int t = 0; t < 8; ++t) {
      Weight lam(static_cast<std::size_t>(rs.rank()));
      for (auto& c : lam.coords) c = static_cast<long>(rng() % 3);
      CAPTURE(to_string(lam));
      CHECK(orbit_size(rs, lam) * rs.stabilizer_order(lam) == rs.w0_order());
      CHECK(static_cast<std::int64_t>(finite_weyl_orbit(rs, lam).size()) == orbit_size(rs, lam));
    }
  }
  CHECK_THROWS_AS(finite_weyl_orbit(make("E8"), Weight{1, 0, 0, 0, 0, 0, 0, 0}), ResourceError);
}

TEST_CASE("dominant representative") {
  RootSystem a1 = make("A1");
  auto r1 = dominant_representative(a1, Weight{-2});
  CHECK(r1.weight == Weight{2});
  CHECK(r1.word == std::vector<int>{1});

  RootSystem a2 = make("A2");
  auto r2 = dominant_representative(a2, a2.reflect(1, Weight{1, 0}));
  CHECK(r2.weight == Weight{1, 0});
  CHECK(r2.word == std::vector<int>{1});

  auto r3 = dominant_representative(a2, Weight{2, 1});
  CHECK(r3.weight == Weight{2, 1});
  CHECK(r3.word.empty());

  std::mt19937_64 rng(3);
  RootSystem g2 = make("G2");
  for (int t = 0; t < 50; ++t) {
    Weight mu{static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 11) - 5};
    auto rep = dominant_representative(g2, mu);
    CHECK(rep.weight.is_dominant());
    Weight back = mu;
    for (int node : rep.word) back = g2.reflect(node, back);
    CHECK(back == rep.weight);
  }
}
