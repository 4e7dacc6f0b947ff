#include <string>

#include "doctest.h"
#include "hopoly/affine_reduction.hpp"
#include "hopoly/error.hpp"
#include "hopoly/oracles.hpp"

using namespace hopoly;

namespace {

RootSystem make(const std::string& name) { return RootSystem(CartanType::parse(name)); }

}  // namespace

TEST_CASE("Freudenthal tables") {
  RootSystem a1 = make("A1");
  CHECK(freudenthal(a1, Weight{2}) == MultiplicityTable{{Weight{0}, 1}, {Weight{2}, 1}});
  RootSystem a2 = make("A2");
  CHECK(freudenthal(a2, Weight{1, 1}) == MultiplicityTable{{Weight{0, 0}, 2}, {Weight{1, 1}, 1}});
  CHECK(freudenthal(a2, Weight{0, 0}) == MultiplicityTable{{Weight{0, 0}, 1}});
  // adjoint of G2: 14 = 6 long + 6 short + 2 zero
  RootSystem g2 = make("G2");
  MultiplicityTable adj = freudenthal(g2, Weight{0, 1});
  CHECK(adj.at(Weight{0, 0}) == 2);
  CHECK(adj.at(Weight{1, 0}) == 1);
  CHECK(total_dimension(g2, adj) == 14);
  // 7-dimensional representation of B3 (vector)
  RootSystem b3 = make("B3");
  CHECK(freudenthal(b3, Weight{1, 0, 0}).at(Weight{0, 0, 0}) == 1);
  CHECK(total_dimension(b3, freudenthal(b3, Weight{1, 0, 0})) == 7);
  CHECK_THROWS_AS(freudenthal(a2, Weight{-1, 0}), DomainError);
}

TEST_CASE("Weyl dimension formula") {
  RootSystem a1 = make("A1");
  for (long n = 1; n <= 15; ++n) CHECK(weyl_dimension(a1, Weight{n - 1}) == n);
  CHECK(weyl_dimension(make("A2"), Weight{1, 1}) == 8);
  CHECK(weyl_dimension(make("A2"), Weight{0, 0}) == 1);
  CHECK(weyl_dimension(make("G2"), Weight{1, 0}) == 7);
  CHECK(weyl_dimension(make("F4"), Weight{0, 0, 0, 1}) == 26);
  CHECK(weyl_dimension(make("E8"), Weight{0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK(weyl_dimension(make("E6"), Weight{1, 0, 0, 0, 0, 0}) == 27);
}

TEST_CASE("Freudenthal total matches the Weyl dimension") {
  for (std::string name : {"A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    CAPTURE(name);
    RootSystem rs = make(name);
    const int n = rs.rank();
    for (int i = 0; i < n; ++i) {
      Weight lam(static_cast<std::size_t>(n));
      lam.coords[i] = 1;
      lam.coords[0] += 1;
      CAPTURE(to_string(lam));
      CHECK(total_dimension(rs, freudenthal(rs, lam)) == weyl_dimension(rs, lam));
    }
  }
}

TEST_CASE("breadth-first shortest word") {
  RootSystem a1 = make("A1");
  ShortestWord s0 = bfs_shortest_word(a1, Weight{1});
  CHECK(s0.length == 0);
  CHECK(s0.lambda_bar == Weight{1});
  ShortestWord s2 = bfs_shortest_word(a1, Weight{2});
  CHECK(s2.length == 1);
  CHECK(s2.lambda_bar == Weight{0});
  ShortestWord s3 = bfs_shortest_word(a1, Weight{3});
  CHECK(s3.length == 2);
  CHECK(s3.lambda_bar == Weight{1});
  CHECK_THROWS_AS(bfs_shortest_word(make("G2"), Weight{40, -40}, 100), ResourceError);

  for (std::string name : {"A2", "B2", "G2", "A3", "C3"}) {
    RootSystem rs = make(name);
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y) {
        Weight lam(static_cast<std::size_t>(rs.rank()));
        lam.coords[0] = x;
        lam.coords[1] = y;
        ShortestWord s = bfs_shortest_word(rs, lam);
        ReductionChain c = reduce_to_minuscule(rs, lam);
        CHECK(s.length == c.length());
        CHECK(s.lambda_bar == c.lambda_bar);
      }
  }
}
