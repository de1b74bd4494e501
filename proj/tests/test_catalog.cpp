#include <set>

#include "degset/catalog.hpp"
#include "degset/errors.hpp"
#include "doctest.h"
#include "ff_oracles.hpp"

using namespace degset;

namespace {

EPS two_or_three() { return set_union(multiples(2), multiples(3)); }

const std::vector<ResidueField> kFields = {ResidueField::finite(7), ResidueField::algebraically_closed(),
                                           ResidueField::infinite_other()};

}  // namespace

TEST_CASE("fixture point counts match enumeration over F_7") {
  CHECK(oracle::hyperelliptic_count({3, 0, 0, 0, 0, 0, 3}, 7, 1) == 0);
  CHECK(oracle::hyperelliptic_count({3, 0, 0, 0, 0, 0, 3}, 7, 2) == 46);
  CHECK(oracle::hyperelliptic_count({-1, 0, 0, 0, 0, 1}, 7, 1) == 8);
  CHECK(oracle::hyperelliptic_count({-1, 0, 0, 0, 0, 1}, 7, 2) == 50);
  CHECK(oracle::hyperelliptic_count({1, 0, 0, 1}, 7, 1) == 12);
}

TEST_CASE("NU-IV") {
  for (const auto& f : kFields) {
    auto cfg = build_fixture("NU-IV", {}, f);
    CHECK(validate(cfg).empty());
    CHECK(degree_set(cfg) == two_or_three());
    CHECK(index_of(cfg) == 1);
  }
  auto swapped = build_fixture("NU-IV", {true});
  CHECK(validate(swapped).empty());
  CHECK(degree_set(swapped) == multiples(2));
  CHECK(index_of(swapped) == 2);
  CHECK(swapped.component("E3").constant_field_degree == 2);
  CHECK_THROWS_AS(build_fixture("NU-IV", {true}, ResidueField::algebraically_closed()), ConfigError);
  // P^1 over F_2 has too few rational points for the four crossings on E6
  CHECK_THROWS_AS(degree_set(build_fixture("NU-IV", {}, ResidueField::finite(2))), InconsistentInput);
}

TEST_CASE("NU-III*-II0 and NU-II*-IV-alpha") {
  CHECK(degree_set(build_fixture("NU-III*-II0", {false})) == EPS::at_least(2));
  CHECK(degree_set(build_fixture("NU-III*-II0", {true})) == multiples(2));
  CHECK(genus2_classify(build_fixture("NU-III*-II0", {true})).tag == Genus2Tag::TwoN);
  CHECK(genus2_classify(build_fixture("NU-III*-II0", {false})).tag == Genus2Tag::NAboveOne);

  for (const auto& f : kFields) {
    auto cfg = build_fixture("NU-II*-IV-alpha", {}, f);
    CHECK(validate(cfg).empty());
    auto d = degree_set(cfg);
    CHECK_FALSE(d.contains(1));
    CHECK(is_subset(set_union(sumset(multiples(3), multiples(4)), multiples(5)), d));
    CHECK(genus2_classify(cfg).tag == Genus2Tag::NAboveOne);
  }
}

TEST_CASE("large_field_floor") {
  CHECK(large_field_floor(2) == multiples(2));
  CHECK(large_field_floor(1) == two_or_three());
  CHECK(large_field_floor(1, multiples(2)) == multiples(2));
  CHECK_THROWS_AS(large_field_floor(3), DomainError);
}

TEST_CASE("genus2_classify realizes the menu") {
  std::set<std::string> finite, closed;
  for (const auto& info : fixture_list()) {
    std::vector<FixtureOptions> variants = {{}};
    if (info.has_swap) variants.push_back({true, false});
    if (info.label == "smooth-genus-2") variants.push_back({false, true});
    for (const auto& v : variants) {
      auto cfg = build_fixture(info.label, v);
      REQUIRE(validate(cfg).empty());
      auto c = genus2_classify(cfg);
      CHECK(c.tag != Genus2Tag::SmoothUnion);
      CHECK(c.warnings.empty());
      CHECK(2 % index_of(cfg) == 0);
      finite.insert(to_string(c.tag));
      if (!v.swap && !v.pointless) closed.insert(to_string(genus2_classify(build_fixture(info.label, v, ResidueField::algebraically_closed())).tag));
    }
  }
  CHECK(finite == std::set<std::string>{"2N", "N", "N>1", "2N|3N"});
  CHECK(closed == std::set<std::string>{"N", "N>1", "2N|3N"});

  CHECK(genus2_classify(build_fixture("smooth-genus-2", {false, true})).tag == Genus2Tag::NAboveOne);
  CHECK(genus2_classify(build_fixture("smooth-genus-2")).tag == Genus2Tag::N);
  CHECK(genus2_classify(build_fixture("NU-IV")).tag == Genus2Tag::TwoNOrThreeN);

  auto warn = build_fixture("NU-IV", {}, ResidueField::finite(5));
  CHECK(genus2_classify(warn).warnings.size() == 1);
  CHECK_THROWS_AS(genus2_classify(hyperelliptic_family({5, 7})), ConfigError);

  // a smooth fiber whose own degree set is 2N u 3N
  SpecialFiberConfig odd;
  odd.components.resize(1);
  odd.components[0].id = "C";
  odd.components[0].degree_set = set_union(multiples(2), EPS::finite({3}));
  odd.metadata.genus = 2;
  auto c = genus2_classify(odd, EPS::at_least(2));
  CHECK(c.tag == Genus2Tag::TwoNOrThreeN);
  odd.components[0].degree_set = set_union(EPS::finite({4}), multiples(6));
  c = genus2_classify(odd, set_union(multiples(4), multiples(6)));
  CHECK(c.tag == Genus2Tag::SmoothUnion);
  CHECK(c.set == set_union(multiples(4), multiples(6)));
}

TEST_CASE("hyperelliptic_family") {
  const std::vector<std::vector<Int>> cases = {{3, 3}, {5, 7}, {1, 1, 1, 1, 1, 1}, {2, 4}, {1, 3}};
  for (const auto& degs : cases) {
    EPS expect = multiples(2);
    for (Int n : degs) expect = set_union(expect, multiples(n));
    for (auto f : {ResidueField::infinite_other(), ResidueField::finite(5)}) {
      auto cfg = hyperelliptic_family(degs, f);
      REQUIRE(validate(cfg).empty());
      CHECK(degree_set(cfg) == expect);
    }
  }
  CHECK(degree_set(hyperelliptic_family({3, 3})) == two_or_three());
  CHECK(degree_set(hyperelliptic_family({1, 1, 1, 1, 1, 1})) == EPS::naturals());
  CHECK_THROWS_AS(hyperelliptic_family({3}), DomainError);
  CHECK_THROWS_AS(hyperelliptic_family({}), DomainError);

  // polynomial path over F_5
  auto f = ff::parse_polynomial(5, "x^6+2x^3+2");
  CHECK(degree_set(hyperelliptic_family(f)) == degree_set(hyperelliptic_family({1, 1, 2, 2}, ResidueField::finite(5))));
  CHECK_THROWS_AS(hyperelliptic_family(ff::parse_polynomial(5, "x^2+2x+1")), DomainError);
  CHECK_THROWS_AS(hyperelliptic_family(ff::parse_polynomial(5, "x^3+x+1")), DomainError);
}
