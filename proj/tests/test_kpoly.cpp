#include <random>

#include "doctest.h"
#include "hopoly/error.hpp"
#include "hopoly/kpoly.hpp"
#include "hopoly/rational.hpp"

using namespace hopoly;

namespace {

const KPoly ks = KPoly::param(ParamClass::Short);
const KPoly kl = KPoly::param(ParamClass::Long);

KPoly random_kpoly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(0, 2), num(-5, 5), den(1, 4);
  KPoly p;
  for (int t = 0; t < 4; ++t) {
    p += KPoly::monomial({exp(rng), exp(rng)}, ratio(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("3/6") == ratio(1, 2));
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK(to_string(ratio(6, -4)) == "-3/2");
  CHECK(ratio(4, 2).get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("kpoly ring identities") {
  CHECK((1 + ks) * (1 - ks) == 1 - ks * ks);
  CHECK((1 + ks).specialize({1, 1}) == 2);
  CHECK((ks * kl).specialize({2, 3}) == 6);
  CHECK((ks - ks).is_zero());
  CHECK(KPoly(0).total_degree() == -1);
  CHECK((ks * kl + 3).total_degree() == 2);
  CHECK_FALSE((2 + ks).uses_long_param());
  CHECK((2 + kl).uses_long_param());
}

TEST_CASE("kpoly canonical text") {
  CHECK(KPoly(0).to_string() == "0");
  CHECK((1 + 2 * ks + ks * kl).to_string() == "1 + 2*k_s + k_s*k_l");
  CHECK((1 + ks).to_string() == "1 + k_s");
  CHECK((kl + ks + 1).to_string() == "1 + k_s + k_l");
  CHECK((ks * ks).to_string() == "k_s^2");
  CHECK((ratio(1, 2) * ks).to_string() == "1/2*k_s");
  CHECK((1 - ks).to_string() == "1 - k_s");
  CHECK((-ks).to_string() == "-k_s");
}

TEST_CASE("membership predicates") {
  CHECK(is_in_P1(1 + ks));
  CHECK_FALSE(is_in_P1(ks));
  CHECK_FALSE(is_in_P1(1 + ks * ks));
  CHECK(is_in_P1(2 + ks + 3 * kl));
  CHECK_FALSE(is_in_P1(1 + ratio(1, 2) * ks));
  CHECK(is_in_Zplus(2 * ks + 3 * ks * ks));
  CHECK_FALSE(is_in_Zplus(ks - 1));
  CHECK(is_in_Zplus(KPoly(0)));
  CHECK_FALSE(is_in_Zplus(KPoly(ratio(1, 2))));
}

TEST_CASE("specialize is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    KPoly a = random_kpoly(rng), b = random_kpoly(rng);
    KValues k{ratio(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)),
              ratio(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3))};
    CHECK((a + b).specialize(k) == a.specialize(k) + b.specialize(k));
    CHECK((a * b).specialize(k) == a.specialize(k) * b.specialize(k));
    CHECK((a - a).is_zero());
    CHECK(a * b == b * a);
    CHECK((a + b) * b == a * b + b * b);
  }
}

TEST_CASE("equal polynomials have identical storage") {
  KPoly p = (1 + ks) * (1 + kl) - ks * kl;
  KPoly q = 1 + kl + ks;
  CHECK(p == q);
  CHECK(p.terms().size() == 3);
  CHECK(p.to_string() == q.to_string());
  for (const auto& [e, c] : p.terms()) {
    CHECK(c != 0);
    CHECK(c.get_den() > 0);
  }
}
