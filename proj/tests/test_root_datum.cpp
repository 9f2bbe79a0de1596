#include <doctest.h>

#include "fixtures.hpp"
#include "mvcrystal/error.hpp"
#include "oracles.hpp"

using namespace mv;

TEST_CASE("pairing of coweights and weights") {
  const RootDatum a2 = RootDatum::type_A(2);
  CHECK(a2.pair(a2.simple_coroot(0), a2.fundamental_weight(0)) == 1);
  CHECK(a2.pair(a2.simple_coroot(0), a2.simple_root(1)) == -1);
  CHECK(a2.pair(a2.simple_coroot(1), a2.fundamental_weight(0)) == 0);

  const RootDatum c3 = RootDatum::type_C(3);
  CHECK(c3.cartan().rows() == std::vector<std::vector<Int>>{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  CHECK(c3.pair(c3.simple_coroot(1), c3.simple_root(2)) == -2);
  CHECK(c3.pair_root(c3.simple_coroot(2), 1) == -1);
}

TEST_CASE("simple roots are Cartan columns") {
  const RootDatum c3 = RootDatum::type_C(3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) CHECK(c3.simple_root(j)[i] == c3.a(i, j));
}

TEST_CASE("simple reflections") {
  const RootDatum a2 = RootDatum::type_A(2);
  CHECK(a2.reflect_weight(0, a2.fundamental_weight(0)) == Weight{-1, 1});
  CHECK(a2.reflect_weight(0, a2.fundamental_weight(1)) == a2.fundamental_weight(1));
  const Weight three = a2.reflect_weight(1, a2.reflect_weight(0, a2.fundamental_weight(0)));
  CHECK(a2.weight_to_classical(three) == std::vector<Int>{0, 0, 1});

  for (const char* name : {"A2", "A3", "C2", "C3"}) {
    const RootDatum d = RootDatum::from_name(name);
    const std::vector<Weight> lams = {Weight(std::vector<Int>(d.rank(), 1)), d.fundamental_weight(0),
                                      d.simple_root(d.rank() - 1)};
    const std::vector<Coweight> mus = {Coweight(std::vector<Int>(d.rank(), 2)), d.simple_coroot(0),
                                       d.two_rho_vee()};
    for (std::size_t i = 0; i < d.rank(); ++i)
      for (const auto& lam : lams) {
        CHECK(d.reflect_weight(i, d.reflect_weight(i, lam)) == lam);
        for (const auto& mu : mus) {
          CHECK(d.reflect_coweight(i, d.reflect_coweight(i, mu)) == mu);
          CHECK(d.pair(d.reflect_coweight(i, mu), d.reflect_weight(i, lam)) == d.pair(mu, lam));
        }
      }
  }
}

TEST_CASE("classical converters") {
  const RootDatum a2 = RootDatum::type_A(2);
  CHECK(a2.coweight_from_classical({-1, 0, 1}) == Coweight{-1, -1});
  CHECK(a2.coweight_to_classical(Coweight{-1, -1}) == std::vector<Int>{-1, 0, 1});
  CHECK(a2.weight_from_classical({1, 1, 0}) == a2.fundamental_weight(1));
  CHECK_THROWS_AS(a2.coweight_from_classical({1, 0, 0}), InvalidArgument);

  const RootDatum c3 = RootDatum::type_C(3);
  CHECK(c3.coweight_from_classical({1, 2, -1}) == Coweight{1, 3, 2});
  const Weight one_minus_two = c3.weight_from_classical({1, -1, 0});
  CHECK(one_minus_two[0] == 2);
  const auto g = make_group(c3);
  const auto id = g->find_chamber(one_minus_two);
  REQUIRE(id.has_value());
  CHECK(g->chamber(*id).level == 1);

  for (const char* name : {"A3", "C3"}) {
    const RootDatum d = RootDatum::from_name(name);
    for (Int a = -2; a <= 2; ++a)
      for (Int b = -2; b <= 2; ++b) {
        const Coweight mu{a, b, a - b};
        CHECK(d.coweight_from_classical(d.coweight_to_classical(mu)) == mu);
        const Weight lam{a, b, b - a};
        CHECK(d.weight_from_classical(d.weight_to_classical(lam)) == lam);
      }
  }
}

TEST_CASE("root systems match a brute-force closure") {
  for (const char* name : {"A1", "A2", "A3", "A4", "C2", "C3", "C4"}) {
    const RootDatum d = RootDatum::from_name(name);
    const auto expected = oracle::positive_roots(d.cartan().rows());
    CHECK(d.positive_roots().size() == expected.size());
    std::set<std::vector<Int>> a(expected.begin(), expected.end());
    std::set<std::vector<Int>> b(d.positive_roots().begin(), d.positive_roots().end());
    CHECK(a == b);
  }
  CHECK(RootDatum::type_A(2).num_roots() == 6);
  CHECK(RootDatum::type_C(3).num_roots() == 18);
}

TEST_CASE("Cartan validation and unsupported types") {
  CHECK_THROWS_AS(CartanMatrix({{2, 1}, {-1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(CartanMatrix({{2, 0}, {-1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(CartanMatrix({{1, -1}, {-1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(RootDatum(CartanMatrix({{2, -1}, {-3, 2}})), UnsupportedType);
  CHECK_THROWS_AS(RootDatum(CartanMatrix({{2, -2}, {-2, 2}})), UnsupportedType);
  CHECK_THROWS_AS(RootDatum(CartanMatrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})), UnsupportedType);
  CHECK_THROWS_AS(RootDatum::from_name("G2"), UnsupportedType);
  CHECK_THROWS_AS(RootDatum::from_name("A9"), UnsupportedType);
  CHECK_THROWS_AS(RootDatum::from_name("nonsense"), ParseError);
  CHECK(RootDatum(CartanMatrix({{2, -1}, {-2, 2}})).num_roots() == 8);
}

TEST_CASE("two rho vee is regular dominant") {
  for (const char* name : {"A2", "A3", "C2", "C3"}) {
    const RootDatum d = RootDatum::from_name(name);
    for (std::size_t i = 0; i < d.rank(); ++i) CHECK(d.pair_root(d.two_rho_vee(), i) == 2);
  }
}
