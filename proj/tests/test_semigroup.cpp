#include <random>

#include "degset/errors.hpp"
#include "degset/semigroup.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace degset;

namespace {
GeneratorMultiset G(std::vector<Int> v) { return GeneratorMultiset(std::move(v)); }
}  // namespace

TEST_CASE("positive_combinations") {
  CHECK(positive_combinations(G({1, 3})) == EPS::at_least(4));
  CHECK(positive_combinations(G({4})) == multiples(4));
  auto p23 = positive_combinations(G({2, 3}));
  CHECK(p23 == set_union(EPS::finite({5, 7}), EPS::at_least(8)));
  CHECK_FALSE(p23.contains(6));
  // duplicates count: two branches of multiplicity 2 need 2a + 2b, a, b >= 1
  CHECK(positive_combinations(G({2, 2})) == intersect(multiples(2), EPS::at_least(4)));
  CHECK_THROWS_AS(G({}), DomainError);
  CHECK_THROWS_AS(G({0, 2}), DomainError);
}

TEST_CASE("monoid_closure") {
  CHECK(monoid_closure(G({2, 10})) == multiples(2));
  CHECK(monoid_closure(G({2, 3})) == EPS::at_least(2));
  auto m310 = monoid_closure(G({3, 10}));
  auto brute = oracle::brute_combinations({3, 10}, 0, 200);
  CHECK(oracle::to_bits(m310, 200) == brute);
  // 17 = (3-1)(10-1) - 1 is the Frobenius number of <3,10>.
  CHECK(m310 == set_union(EPS::finite({3, 6, 9, 10, 12, 13, 15, 16}), EPS::at_least(18)));
  CHECK(monoid_closure(G({6, 9})) == scale(3, monoid_closure(G({2, 3}))));
}

TEST_CASE("frobenius") {
  CHECK(frobenius(G({2, 3})) == 1);
  CHECK(frobenius(G({3, 4})) == 5);
  CHECK(frobenius(G({1})) == 0);
  CHECK(frobenius(G({3, 10})) == 17);
  CHECK(frobenius(G({6, 10, 15})) == 29);
  CHECK_THROWS_AS(frobenius(G({4, 6})), DomainError);
}

TEST_CASE("brute force agreement, up to four generators <= 12") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Int> gen(1, 12), count(1, 4);
  for (int i = 0; i < 400; ++i) {
    std::vector<Int> g(static_cast<std::size_t>(count(rng)));
    for (auto& x : g) x = gen(rng);
    auto pos = positive_combinations(G(g));
    auto mon = monoid_closure(G(g));
    REQUIRE(oracle::to_bits(pos, 500) == oracle::brute_combinations(g, 1, 500));
    REQUIRE(oracle::to_bits(mon, 500) == oracle::brute_combinations(g, 0, 500));
    Int d = 0;
    for (Int x : g) d = std::gcd(d, x);
    REQUIRE(gcd_of(pos) == d);
    const Int h = gen(rng);
    auto g2 = g;
    g2.push_back(h);
    REQUIRE(positive_combinations(G(g2)) == sumset(pos, multiples(h)));
  }
}
