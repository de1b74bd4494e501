#include "degset/fiber.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "degset/errors.hpp"
#include "degset/int_math.hpp"
#include "degset/semigroup.hpp"

namespace degset {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Int ipow(Int q, Int e) {
  Int r = 1;
  for (Int i = 0; i < e; ++i) r = checked_mul(r, q);
  return r;
}

bool on_component(const MarkedPoint& x, const std::string& id) {
  return std::any_of(x.branches.begin(), x.branches.end(),
                     [&](const Branch& b) { return b.component == id; });
}

std::string where(const ComponentRecord& e) { return "component '" + e.id + "'"; }

std::vector<std::string> structural_issues(const SpecialFiberConfig& cfg) {
  std::vector<std::string> out;
  const auto kind = cfg.residue_field.kind;
  if (kind == FieldKind::Finite && !prime_power_base(cfg.residue_field.q))
    out.push_back("residue field size " + std::to_string(cfg.residue_field.q) + " is not a prime power");
  if (cfg.components.empty()) out.push_back("configuration has no components");

  std::map<std::string, const ComponentRecord*> by_id;
  for (const auto& e : cfg.components) {
    if (!by_id.emplace(e.id, &e).second) out.push_back("duplicate component id '" + e.id + "'");
    if (e.multiplicity < 1) out.push_back(where(e) + ": multiplicity must be >= 1");
    const Int c = e.field_degree();
    if (c < 1) {
      out.push_back(where(e) + ": constant field degree must be >= 1");
      continue;
    }
    if (kind == FieldKind::AlgebraicallyClosed && c != 1)
      out.push_back(where(e) + ": constant field degree must be 1 over an algebraically closed field");
    if (e.arithmetic_genus && *e.arithmetic_genus < 0) out.push_back(where(e) + ": negative genus");

    if (const auto* s = std::get_if<EPS>(&e.degree_set)) {
      if (s->is_empty()) out.push_back(where(e) + ": degree set is empty");
      if (!is_subset(*s, multiples(c)))
        out.push_back(where(e) + ": degree set has degrees not divisible by the constant field degree " +
                      std::to_string(c));
      if (kind == FieldKind::AlgebraicallyClosed && !s->is_empty() && *s != EPS::finite({1}))
        out.push_back(where(e) + ": over an algebraically closed field the degree set is {1}");
    } else if (const auto* d = std::get_if<ff::CurveCountData>(&e.degree_set)) {
      if (kind != FieldKind::Finite) {
        out.push_back(where(e) + ": point counts need a finite residue field");
      } else {
        try {
          if (d->q != ipow(cfg.residue_field.q, c))
            out.push_back(where(e) + ": point counts are over F_" + std::to_string(d->q) +
                          " but the constant field has " + std::to_string(cfg.residue_field.q) + "^" +
                          std::to_string(c) + " elements");
        } catch (const Error&) {
          out.push_back(where(e) + ": constant field too large");
        }
      }
    }
    if (const auto* s = std::get_if<EPS>(&e.interior); s && !is_subset(*s, multiples(c)))
      out.push_back(where(e) + ": interior degree set has degrees not divisible by " + std::to_string(c));
    if (std::holds_alternative<AutoInterior>(e.interior) &&
        !std::holds_alternative<ff::CurveCountData>(e.degree_set))
      out.push_back(where(e) + ": interior 'auto' needs point counts");
  }

  std::set<std::string> point_ids;
  for (const auto& x : cfg.points) {
    const std::string px = "point '" + x.id + "'";
    if (!point_ids.insert(x.id).second) out.push_back("duplicate point id '" + x.id + "'");
    if (x.degree < 1) out.push_back(px + ": degree must be >= 1");
    if (kind == FieldKind::AlgebraicallyClosed && x.degree != 1)
      out.push_back(px + ": degree must be 1 over an algebraically closed field");
    if (x.branches.empty()) out.push_back(px + ": no branches");
    std::set<std::string> seen;
    Int total = 0;
    for (const auto& b : x.branches) {
      total += b.count;
      if (b.count < 1) out.push_back(px + ": branch count must be >= 1");
      auto it = by_id.find(b.component);
      if (it == by_id.end()) {
        out.push_back(px + ": unknown component '" + b.component + "'");
        continue;
      }
      if (!seen.insert(b.component).second)
        out.push_back(px + ": component '" + b.component + "' listed twice");
      const Int c = it->second->field_degree();
      if (c >= 1 && x.degree % c != 0)
        out.push_back(px + ": degree " + std::to_string(x.degree) + " is not divisible by the constant field degree of '" +
                      b.component + "'");
      if (x.snc && b.count != 1) out.push_back(px + ": marked snc but has " + std::to_string(b.count) +
                                               " branches on '" + b.component + "'");
    }
    if (x.snc && total > 2) out.push_back(px + ": marked snc but has " + std::to_string(total) + " branches");
    if (x.snc && x.contribution) out.push_back(px + ": an explicit contribution is only for non-snc points");
  }

  if (out.empty()) {
    auto reach = connected_component_ids(cfg);
    if (reach.size() != cfg.components.size()) {
      std::set<std::string> r(reach.begin(), reach.end());
      for (const auto& e : cfg.components)
        if (!r.count(e.id))
          out.push_back(where(e) + " meets no other component through a marked point (the special fiber is connected)");
    }
  }
  return out;
}

void require_structure(const SpecialFiberConfig& cfg) {
  auto issues = structural_issues(cfg);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

EPS union_of_points(const SpecialFiberConfig& cfg) {
  EPS acc;
  for (const auto& x : cfg.points) {
    if (x.snc)
      acc = set_union(acc, point_contribution(x, cfg));
    else if (x.contribution)
      acc = set_union(acc, *x.contribution);
    else
      throw ConfigError("point '" + x.id +
                        "' is not snc: resolve it with the blow-up calculus or supply its contribution");
  }
  return acc;
}

EPS unchecked_degree_set(const SpecialFiberConfig& cfg) {
  EPS acc = union_of_points(cfg);
  for (const auto& e : cfg.components) acc = set_union(acc, interior_contribution(e, cfg));
  return acc;
}

Int unchecked_index(const SpecialFiberConfig& cfg) {
  Int by_components = 0;
  for (const auto& e : cfg.components)
    by_components = std::gcd(by_components, checked_mul(e.multiplicity, gcd_of(component_degree_set(e, cfg))));
  const EPS d = unchecked_degree_set(cfg);
  if (d.is_empty()) throw InconsistentInput("degree set is empty");
  const Int by_degrees = gcd_of(d);
  if (by_components != by_degrees)
    throw InconsistentInput("index mismatch: gcd of m_i * delta(E_i) is " + std::to_string(by_components) +
                            " but the degree set has gcd " + std::to_string(by_degrees) +
                            "; component degree sets contradict the marked points");
  return by_components;
}

}  // namespace

const ComponentRecord& SpecialFiberConfig::component(const std::string& id) const {
  for (const auto& e : components)
    if (e.id == id) return e;
  throw ConfigError("unknown component '" + id + "'");
}

EPS component_degree_set(const ComponentRecord& e, const SpecialFiberConfig& cfg) {
  const Int c = e.field_degree();
  return std::visit(
      overloaded{
          [&](const EPS& s) { return s; },
          [&](const AllDegrees&) {
            return cfg.residue_field.kind == FieldKind::AlgebraicallyClosed ? EPS::finite({1}) : multiples(c);
          },
          [&](const ff::CurveCountData& d) { return scale(c, ff::curve_degree_set(d)); },
      },
      e.degree_set);
}

EPS component_interior_degree_set(const ComponentRecord& e, const SpecialFiberConfig& cfg) {
  return std::visit(overloaded{
                        [&](const EPS& s) { return s; },
                        [&](const SameAsDegreeSet&) { return component_degree_set(e, cfg); },
                        [&](const AutoInterior&) {
                          const auto* d = std::get_if<ff::CurveCountData>(&e.degree_set);
                          if (!d) throw ConfigError(where(e) + ": interior 'auto' needs point counts");
                          const Int c = e.field_degree();
                          std::vector<Int> removed;
                          for (const auto& x : cfg.points)
                            if (on_component(x, e.id)) removed.push_back(x.degree / c);
                          try {
                            return scale(c, ff::curve_degree_set(*d, removed));
                          } catch (const InconsistentInput& err) {
                            throw InconsistentInput(where(e) + ": " + err.what());
                          }
                        },
                    },
                    e.interior);
}

EPS point_contribution(const MarkedPoint& x, const SpecialFiberConfig& cfg) {
  if (!x.snc)
    throw ConfigError("point '" + x.id + "' is not snc; its contribution comes from the blow-up calculus");
  std::vector<Int> mults;
  for (const auto& b : x.branches)
    for (Int k = 0; k < b.count; ++k) mults.push_back(cfg.component(b.component).multiplicity);
  return scale(x.degree, positive_combinations(GeneratorMultiset(mults)));
}

EPS interior_contribution(const ComponentRecord& e, const SpecialFiberConfig& cfg) {
  EPS interior;
  try {
    interior = component_interior_degree_set(e, cfg);
  } catch (const ConfigError&) {
    throw;
  } catch (const RepresentationError& err) {
    throw ConfigError(where(e) + ": interior degree set can't be resolved: " + err.what());
  }
  return scale(e.multiplicity, multiples_closure(interior));
}

EPS degree_set(const SpecialFiberConfig& cfg) {
  require_structure(cfg);
  return unchecked_degree_set(cfg);
}

Int index_of(const SpecialFiberConfig& cfg) {
  require_structure(cfg);
  return unchecked_index(cfg);
}

std::vector<std::string> validate(const SpecialFiberConfig& cfg) {
  auto out = structural_issues(cfg);
  if (!out.empty()) return out;

  for (const auto& e : cfg.components) {
    try {
      if (!is_subset(component_interior_degree_set(e, cfg), component_degree_set(e, cfg)))
        out.push_back(where(e) + ": interior degree set is not contained in the degree set");
    } catch (const Error& err) {
      out.push_back(err.what());
    }
  }
  if (!out.empty()) return out;

  std::optional<Int> index;
  try {
    index = unchecked_index(cfg);
  } catch (const Error& err) {
    out.push_back(err.what());
  }
  const auto& md = cfg.metadata;
  if (index && md.genus && *md.genus != 1) {
    const Int k = 2 * *md.genus - 2;
    if (k != 0 && k % *index != 0)
      out.push_back("index " + std::to_string(*index) + " must divide 2g-2 = " + std::to_string(k));
  }
  if (md.genus && md.minimal && md.hyperelliptic && *md.genus % 2 == 0 &&
      cfg.residue_field.kind == FieldKind::AlgebraicallyClosed) {
    Int m = 0;
    for (const auto& e : cfg.components) m = std::gcd(m, e.multiplicity);
    if ((*md.genus - 1) % m != 0)
      out.push_back("gcd of multiplicities " + std::to_string(m) + " must divide g-1 = " +
                    std::to_string(*md.genus - 1));
  }
  return out;
}

std::vector<std::string> connected_component_ids(const SpecialFiberConfig& cfg) {
  if (cfg.components.empty()) return {};
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& x : cfg.points)
    for (const auto& a : x.branches)
      for (const auto& b : x.branches)
        if (a.component != b.component) adj[a.component].push_back(b.component);
  std::vector<std::string> order{cfg.components.front().id};
  std::set<std::string> seen{order.front()};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& n : adj[order[i]])
      if (seen.insert(n).second) order.push_back(n);
  return order;
}

}  // namespace degset
