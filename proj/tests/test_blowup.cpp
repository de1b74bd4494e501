#include <functional>
#include <set>

#include "degset/blowup.hpp"
#include "degset/errors.hpp"
#include "degset/semigroup.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace degset;

namespace {

// Every blow-up sequence of length <= depth, interior points of each new
// exceptional line included (one rational one), nothing closed off.
// Returns the collected d(B) (or e(B)) values.
std::set<Int> walk(const Shape& root, Int depth, bool with_degrees) {
  std::set<Int> out;
  std::function<void(const Shape&, Int, Int)> rec = [&](const Shape& s, Int delta, Int left) {
    if (left == 0) return;
    auto step = blow_up({1, s});
    const Int e = step.exceptional_multiplicity;
    out.insert(with_degrees ? delta * e : e);
    for (const auto& c : step.children) rec(c.shape, with_degrees ? delta * c.degree : 1, left - 1);
    rec(Interior{e}, delta, left - 1);
  };
  rec(root, 1, depth);
  return out;
}

oracle::Bits closure_bits(const std::set<Int>& ds, Int n) {
  return oracle::bits_of(n, [&](Int k) {
    for (Int d : ds)
      if (k % d == 0) return true;
    return false;
  });
}

EPS pos(std::vector<Int> g) { return positive_combinations(GeneratorMultiset(std::move(g))); }
EPS mon(std::vector<Int> g) { return monoid_closure(GeneratorMultiset(std::move(g))); }

}  // namespace

TEST_CASE("blow_up rules") {
  CHECK(blow_up({1, Transverse{{2, 3}}}).exceptional_multiplicity == 5);
  CHECK(blow_up({1, Transverse{{2, 3, 5}}}).exceptional_multiplicity == 10);
  auto t = blow_up({1, Tangential2{2, 3}});
  CHECK(t.exceptional_multiplicity == 5);
  REQUIRE(t.children.size() == 1);
  CHECK(t.children[0].shape == Shape{Transverse{{2, 3, 5}}});
  CHECK(blow_up(t.children[0]).exceptional_multiplicity == 10);

  for (Int m = 1; m <= 6; ++m) {
    auto split = blow_up({1, Node{m, Tangents::Split}});
    CHECK(split.exceptional_multiplicity == 2 * m);
    REQUIRE(split.children.size() == 2);
    for (const auto& c : split.children) {
      CHECK(c.degree == 1);
      CHECK(blow_up(c).exceptional_multiplicity == 3 * m);
    }
    auto inert = blow_up({1, Node{m, Tangents::Inert}});
    REQUIRE(inert.children.size() == 1);
    CHECK(inert.children[0].degree == 2);
    auto interior = blow_up({1, Interior{m}});
    CHECK(interior.exceptional_multiplicity == m);
    CHECK(interior.children[0].shape == Shape{Transverse{{m, m}}});
    CHECK(interior.interior_degrees == EPS::naturals());
  }
  CHECK_THROWS_AS(blow_up({1, Transverse{{2}}}), DomainError);
  CHECK_THROWS_AS(blow_up({1, Transverse{{1, 1, 1, 1}}}), DomainError);
  CHECK_THROWS_AS(blow_up({1, Interior{0}}), DomainError);
}

TEST_CASE("exceptional multiplicity is additive over branches") {
  for (Int a = 1; a <= 6; ++a)
    for (Int b = 1; b <= 6; ++b) {
      CHECK(blow_up({1, Transverse{{a, b}}}).exceptional_multiplicity == a + b);
      CHECK(blow_up({1, Tangential2{a, b}}).exceptional_multiplicity == a + b);
      for (Int c = 1; c <= 6; ++c) CHECK(blow_up({1, Transverse{{a, b, c}}}).exceptional_multiplicity == a + b + c);
    }
}

TEST_CASE("node closed forms") {
  for (Int m = 1; m <= 12; ++m) {
    const Node split{m, Tangents::Split}, inert{m, Tangents::Inert};
    for (Int depth = 1; depth <= 6; ++depth) {
      auto ms = enumerate_M({1, split}, FieldKind::Finite, depth);
      auto mi = enumerate_M({1, inert}, FieldKind::Finite, depth);
      CHECK(ms.certified);
      CHECK(ms.set == scale(m, EPS::at_least(2)));
      CHECK(mi.set == multiples(2 * m));
      CHECK(enumerate_M_prime({1, split}, depth).set == scale(m, EPS::at_least(2)));
      CHECK(enumerate_M_prime({1, inert}, depth).set == scale(m, EPS::at_least(2)));
    }
    // Brute-force sequences: inside the closed form, and equal to it below
    // (depth + 2) m, where depth many blow-ups are enough.
    for (Int depth = 3; depth <= 6; ++depth) {
      const Int window = (depth + 2) * m - 1, far = 40 * m;
      for (auto [shape, closed] : {std::pair<Shape, EPS>{split, scale(m, EPS::at_least(2))},
                                   std::pair<Shape, EPS>{inert, multiples(2 * m)}}) {
        auto walked = closure_bits(walk(shape, depth, true), far);
        auto exact = oracle::to_bits(closed, far);
        for (Int n = 1; n <= far; ++n) {
          if (walked[n]) REQUIRE(exact[n]);
          if (n <= window) REQUIRE(walked[n] == exact[n]);
        }
      }
      auto primes = closure_bits(walk(inert, depth, false), window);
      REQUIRE(primes == oracle::to_bits(scale(m, EPS::at_least(2)), window));
    }
  }
  CHECK_THROWS_AS(enumerate_M({1, Node{1, Tangents::Inert}}, FieldKind::AlgebraicallyClosed, 4), DomainError);
  CHECK_THROWS_AS(enumerate_M({1, Node{1, Tangents::Split}}, FieldKind::Finite, 0), DomainError);
}

TEST_CASE("tangential example") {
  auto r = enumerate_M({1, Tangential2{2, 3}}, FieldKind::InfiniteOther, 8);
  CHECK_FALSE(r.certified);
  const EPS bound = set_union(set_union(multiples(5), mon({2, 10})), mon({3, 10}));
  CHECK(is_subset(r.set, bound));
  const EPS n = pos({2, 3});
  CHECK(is_subset(r.set, n));
  CHECK(r.set != n);
  CHECK(first_not_in(n, r.set) == 7);
  // 5N, 10 + ... from the first two blow-ups
  CHECK(r.set.contains(5));
  CHECK(r.set.contains(12));
  CHECK(r.set.contains(13));

  auto walked = closure_bits(walk(Tangential2{2, 3}, 8, true), 600);
  auto got = oracle::to_bits(r.set, 600);
  for (Int k = 1; k <= 600; ++k)
    if (walked[k]) REQUIRE(got[k]);

  auto report = containment_report({1, Tangential2{2, 3}}, 8);
  CHECK(report.witness_N_not_M == 7);
  CHECK(report.M_in_M_prime);
  CHECK(report.M_prime_in_N);

  // depth 1 only sees the first exceptional line
  CHECK(enumerate_M({1, Tangential2{2, 3}}, FieldKind::InfiniteOther, 1).set == multiples(5));
}

TEST_CASE("snc shapes") {
  auto t = enumerate_M({1, Transverse{{2, 3}}}, FieldKind::Finite, 5);
  CHECK(t.certified);
  CHECK(t.set == pos({2, 3}));
  auto tp = enumerate_M_prime({1, Transverse{{2, 3}}}, 5).set;
  for (Int d : {5, 7, 8}) CHECK(is_subset(multiples(d), tp));
  for (Int m = 1; m <= 6; ++m) CHECK(enumerate_M_prime({1, Interior{m}}, 3).set == multiples(m));

  auto rep = containment_report({1, Transverse{{2, 3}}}, 5);
  CHECK(rep.M == rep.N);
  CHECK_FALSE(rep.witness_N_not_M);

  auto node = containment_report({1, Node{1, Tangents::Split}}, 4);
  CHECK(node.M == EPS::at_least(2));
  CHECK(node.M_prime == EPS::at_least(2));
  CHECK(node.N == EPS::naturals());
  CHECK(node.witness_N_not_M_prime == 1);
}

TEST_CASE("sandwich and depth monotonicity") {
  std::vector<Shape> shapes;
  for (Int a = 1; a <= 6; ++a) {
    shapes.push_back(Interior{a});
    shapes.push_back(Node{a, Tangents::Split});
    shapes.push_back(Node{a, Tangents::Inert});
    for (Int b = a; b <= 6; ++b) {
      shapes.push_back(Transverse{{a, b}});
      shapes.push_back(Tangential2{a, b});
      for (Int c = b; c <= 6; ++c) shapes.push_back(Transverse{{a, b, c}});
    }
  }
  for (const auto& s : shapes) {
    EPS prev;
    for (Int depth = 1; depth <= 6; ++depth) {
      auto r = containment_report({1, s}, depth);
      REQUIRE(r.M_in_M_prime);
      REQUIRE(r.M_prime_in_N);
      REQUIRE(is_subset(prev, r.M));
      prev = r.M;
    }
  }
}

TEST_CASE("shape text") {
  CHECK(parse_shape("node:m=2,split") == Shape{Node{2, Tangents::Split}});
  CHECK(parse_shape("node:m=3,inert") == Shape{Node{3, Tangents::Inert}});
  CHECK(parse_shape("tangential2:2,3") == Shape{Tangential2{2, 3}});
  CHECK(parse_shape("transverse:2,3,5") == Shape{Transverse{{2, 3, 5}}});
  CHECK(parse_shape("interior:4") == Shape{Interior{4}});
  for (const char* s : {"node:m=2,split", "tangential2:2,3", "transverse:2,3,5", "interior:4"})
    CHECK(to_string(parse_shape(s)) == s);
  CHECK_THROWS_AS(parse_shape("cusp:2"), ParseError);
  CHECK_THROWS_AS(parse_shape("transverse:2"), ParseError);
  CHECK_THROWS_AS(parse_shape("node:m=2,twisted"), ParseError);
  CHECK_THROWS_AS(parse_shape("interior:x"), ParseError);
}
