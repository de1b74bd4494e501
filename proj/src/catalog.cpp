#include "degset/catalog.hpp"

#include <numeric>

#include "degset/errors.hpp"
#include "degset/int_math.hpp"

namespace degset {

namespace {

using ff::BigInt;
using ff::CurveCountData;

Int ipow(Int q, Int e) {
  Int r = 1;
  for (Int i = 0; i < e; ++i) r = checked_mul(r, q);
  return r;
}

// A geometrically rational component over a constant field of degree c.
ComponentRecord rational(const std::string& id, Int m, const ResidueField& field, Int c = 1) {
  ComponentRecord e;
  e.id = id;
  e.multiplicity = m;
  if (c != 1) e.constant_field_degree = c;
  e.arithmetic_genus = 0;
  if (field.kind == FieldKind::Finite) {
    e.degree_set = CurveCountData{ipow(field.q, c), 0, {}};
    e.interior = AutoInterior{};
  }
  return e;
}

// A component of positive genus: explicit counts over F_7, else {1} / N.
ComponentRecord curve(const std::string& id, Int genus, const ResidueField& field, std::vector<BigInt> counts) {
  ComponentRecord e;
  e.id = id;
  e.multiplicity = 1;
  e.arithmetic_genus = genus;
  if (field.kind == FieldKind::Finite) {
    if (field.q != 7)
      throw ConfigError("point counts for component '" + id + "' are only tabulated over F_7");
    e.degree_set = CurveCountData{7, genus, std::move(counts)};
    e.interior = AutoInterior{};
  }
  return e;
}

MarkedPoint meet(const std::string& id, Int degree, std::vector<std::string> comps) {
  MarkedPoint x;
  x.id = id;
  x.degree = degree;
  for (auto& c : comps) x.branches.push_back({c, 1});
  return x;
}

SpecialFiberConfig base(const ResidueField& field) {
  SpecialFiberConfig cfg;
  cfg.residue_field = field;
  cfg.metadata.genus = 2;
  cfg.metadata.minimal = true;
  cfg.metadata.hyperelliptic = true;
  return cfg;
}

void no_swap_over_closed(const FixtureOptions& o, const ResidueField& f, const std::string& label) {
  if (o.swap && f.kind == FieldKind::AlgebraicallyClosed)
    throw ConfigError(label + ": the swap variant needs a non-closed residue field");
}

// Six genus 0 components, all crossings transversal and rational:
// 6 meets 2, 3, 3', 4, and 4 meets 2'.
SpecialFiberConfig nu_iv(const FixtureOptions& o, const ResidueField& f) {
  no_swap_over_closed(o, f, "NU-IV");
  auto cfg = base(f);
  cfg.components = {rational("E6", 6, f), rational("E2a", 2, f), rational("E4", 4, f), rational("E2b", 2, f)};
  cfg.points = {meet("p6-2", 1, {"E6", "E2a"}), meet("p6-4", 1, {"E6", "E4"}), meet("p4-2", 1, {"E4", "E2b"})};
  if (o.swap) {
    cfg.components.push_back(rational("E3", 3, f, 2));
    cfg.points.push_back(meet("p6-3", 2, {"E6", "E3"}));
  } else {
    cfg.components.push_back(rational("E3a", 3, f));
    cfg.components.push_back(rational("E3b", 3, f));
    cfg.points.push_back(meet("p6-3a", 1, {"E6", "E3a"}));
    cfg.points.push_back(meet("p6-3b", 1, {"E6", "E3b"}));
  }
  return cfg;
}

// 4 meets 3, 3', 2y; 2x meets 3 and 3'. The two 3s are swapped by the only
// graph automorphism.
SpecialFiberConfig nu_iii_star_ii0(const FixtureOptions& o, const ResidueField& f) {
  no_swap_over_closed(o, f, "NU-III*-II0");
  auto cfg = base(f);
  cfg.components = {rational("C4", 4, f), rational("C2x", 2, f), rational("C2y", 2, f)};
  cfg.points = {meet("p4-2y", 1, {"C4", "C2y"})};
  if (o.swap) {
    cfg.components.push_back(rational("C3", 3, f, 2));
    cfg.points.push_back(meet("p4-3", 2, {"C4", "C3"}));
    cfg.points.push_back(meet("p2x-3", 2, {"C2x", "C3"}));
  } else {
    for (std::string s : {"a", "b"}) {
      cfg.components.push_back(rational("C3" + s, 3, f));
      cfg.points.push_back(meet("p4-3" + s, 1, {"C4", "C3" + s}));
      cfg.points.push_back(meet("p2x-3" + s, 1, {"C2x", "C3" + s}));
    }
  }
  return cfg;
}

// The part of the configuration the argument uses: the long arm of a II*
// fiber without its multiplicity 1 end, so 5 meets 4 and 6 in two rational
// points and 3 meets 4 at a rational snc point.
SpecialFiberConfig nu_ii_star_iv_alpha(const FixtureOptions& o, const ResidueField& f) {
  if (o.swap) throw ConfigError("NU-II*-IV-alpha has no swap variant");
  auto cfg = base(f);
  cfg.components = {rational("A2", 2, f), rational("A3", 3, f), rational("A4", 4, f), rational("A5", 5, f),
                    rational("A6", 6, f), rational("B4", 4, f), rational("B2", 2, f), rational("B3", 3, f)};
  cfg.points = {meet("p2-3", 1, {"A2", "A3"}),  meet("p3-4", 1, {"A3", "A4"}),  meet("p4-5", 1, {"A4", "A5"}),
                meet("p5-6", 1, {"A5", "A6"}),  meet("p6-4", 1, {"A6", "B4"}),  meet("p4-2", 1, {"B4", "B2"}),
                meet("p6-3", 1, {"A6", "B3"})};
  return cfg;
}

SpecialFiberConfig smooth_genus_2(const FixtureOptions& o, const ResidueField& f) {
  if (o.swap) throw ConfigError("smooth-genus-2 has no swap variant");
  if (o.pointless && f.kind != FieldKind::Finite)
    throw ConfigError("smooth-genus-2: the pointless variant needs a finite residue field");
  auto cfg = base(f);
  // over F_7: y^2 = 3x^6 + 3 has no rational point; y^2 = x^5 - 1 has 8
  cfg.components = {curve("C", 2, f, o.pointless ? std::vector<BigInt>{0, 46} : std::vector<BigInt>{8, 50})};
  return cfg;
}

// Two genus 1 curves through one rational point; y^2 = x^3 + 1 over F_7.
SpecialFiberConfig two_elliptic_chain(const FixtureOptions& o, const ResidueField& f) {
  if (o.swap) throw ConfigError("two-elliptic-chain has no swap variant");
  auto cfg = base(f);
  cfg.components = {curve("E1", 1, f, {12}), curve("E2", 1, f, {12})};
  cfg.points = {meet("p", 1, {"E1", "E2"})};
  return cfg;
}

SpecialFiberConfig spine_with(const std::vector<Int>& degrees, const ResidueField& field) {
  if (degrees.empty()) throw DomainError("degree multiset is empty");
  Int total = 0;
  for (Int n : degrees) {
    if (n < 1) throw DomainError("degrees must be positive");
    total = checked_add(total, n);
  }
  if (total % 2 != 0) throw DomainError("total degree " + std::to_string(total) + " is odd");
  SpecialFiberConfig cfg;
  cfg.residue_field = field;
  cfg.metadata.genus = total / 2 - 1;
  cfg.metadata.hyperelliptic = true;
  cfg.metadata.minimal = true;
  cfg.components.push_back(rational("spine", 2, field));
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const std::string id = "R" + std::to_string(i + 1);
    cfg.components.push_back(rational(id, 1, field, degrees[i]));
    cfg.points.push_back(meet("q" + std::to_string(i + 1), degrees[i], {"spine", id}));
  }
  return cfg;
}

std::optional<Int> characteristic(const SpecialFiberConfig& cfg) {
  if (cfg.residue_field.kind == FieldKind::Finite) return prime_power_base(cfg.residue_field.q);
  return cfg.metadata.characteristic;
}

}  // namespace

const std::vector<FixtureInfo>& fixture_list() {
  static const std::vector<FixtureInfo> list = {
      {"NU-IV", "genus 0 components 6,2,3,3,2,4 crossing transversally; degree set 2N u 3N", true},
      {"NU-III*-II0", "components 4,3,3,2,2 with the two 3s exchanged by the graph automorphism", true},
      {"NU-II*-IV-alpha", "genus 0 chain 2-3-4-5-6 with arms 6-4-2 and 6-3, rational crossings, no multiplicity 1 part", false},
      {"smooth-genus-2", "good reduction; --pointless for a curve over F_7 with no rational point", false},
      {"two-elliptic-chain", "two genus 1 curves meeting transversally at a rational point", false},
  };
  return list;
}

SpecialFiberConfig build_fixture(const std::string& label, const FixtureOptions& opts, ResidueField field) {
  if (field.kind == FieldKind::Finite && !prime_power_base(field.q))
    throw ConfigError("residue field size " + std::to_string(field.q) + " is not a prime power");
  if (opts.pointless && label != "smooth-genus-2") throw ConfigError(label + " has no pointless variant");
  if (label == "NU-IV") return nu_iv(opts, field);
  if (label == "NU-III*-II0") return nu_iii_star_ii0(opts, field);
  if (label == "NU-II*-IV-alpha") return nu_ii_star_iv_alpha(opts, field);
  if (label == "smooth-genus-2") return smooth_genus_2(opts, field);
  if (label == "two-elliptic-chain") return two_elliptic_chain(opts, field);
  throw ConfigError("unknown fixture '" + label + "'");
}

EPS large_field_floor(Int index, const EPS& ext_degrees) {
  if (index == 2) return intersect(multiples(2), ext_degrees);
  if (index == 1) return intersect(set_union(multiples(2), multiples(3)), ext_degrees);
  throw DomainError("a genus 2 curve has index 1 or 2, got " + std::to_string(index));
}

std::string to_string(Genus2Tag t) {
  switch (t) {
    case Genus2Tag::TwoN: return "2N";
    case Genus2Tag::N: return "N";
    case Genus2Tag::NAboveOne: return "N>1";
    case Genus2Tag::TwoNOrThreeN: return "2N|3N";
    case Genus2Tag::SmoothUnion: return "union of dN over D(C0)";
  }
  return "?";
}

Genus2Class genus2_classify(const SpecialFiberConfig& cfg, const EPS& ext_degrees) {
  if (cfg.metadata.genus != 2) throw ConfigError("genus 2 metadata required");
  Genus2Class out;
  if (auto p = characteristic(cfg); p && 30 % *p == 0)
    out.warnings.push_back("residue characteristic " + std::to_string(*p) +
                           " divides 30; the genus 2 menu is only guaranteed otherwise");
  else if (!p && cfg.residue_field.kind != FieldKind::Finite)
    out.warnings.push_back("residue characteristic unknown; the genus 2 menu assumes it does not divide 30");

  const EPS d = degree_set(cfg);
  out.set = set_union(d, large_field_floor(index_of(cfg), ext_degrees));
  const std::pair<Genus2Tag, EPS> menu[] = {
      {Genus2Tag::TwoN, multiples(2)},
      {Genus2Tag::N, EPS::naturals()},
      {Genus2Tag::NAboveOne, EPS::at_least(2)},
      {Genus2Tag::TwoNOrThreeN, set_union(multiples(2), multiples(3))},
  };
  for (const auto& [tag, s] : menu)
    if (out.set == s) {
      out.tag = tag;
      return out;
    }
  if (cfg.components.size() == 1 && cfg.components[0].multiplicity == 1 && cfg.points.empty() &&
      cfg.components[0].arithmetic_genus.value_or(2) == 2) {
    const EPS c0 = component_degree_set(cfg.components[0], cfg);
    if (out.set == multiples_closure(c0)) {
      out.tag = Genus2Tag::SmoothUnion;
      return out;
    }
  }
  throw ConfigError("degree set " + to_string(out.set) + " is not on the genus 2 menu");
}

SpecialFiberConfig hyperelliptic_family(const std::vector<Int>& degrees, ResidueField field) {
  return spine_with(degrees, field);
}

SpecialFiberConfig hyperelliptic_family(const ff::PrimePolynomial& f) {
  if (f.degree() % 2 != 0) throw DomainError("polynomial degree " + std::to_string(f.degree()) + " is odd");
  return spine_with(ff::factor_degrees(f), ResidueField::finite(f.p()));
}

}  // namespace degset
