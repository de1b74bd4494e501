#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "degset/eps.hpp"
#include "degset/finitefield.hpp"

namespace degset {

/// The component has points of every degree its constant field allows
/// (e.g. a projective line).
struct AllDegrees {
  bool operator==(const AllDegrees&) const = default;
};
/// Interior degree set equal to the full degree set.
struct SameAsDegreeSet {
  bool operator==(const SameAsDegreeSet&) const = default;
};
/// Interior degree set computed from point counts minus the marked points.
struct AutoInterior {
  bool operator==(const AutoInterior&) const = default;
};

/// Degree data of a component. Point counts are over the constant field
/// k_i, so q there is |k_i|; degrees are converted to degrees over k.
using DegreeData = std::variant<EPS, ff::CurveCountData, AllDegrees>;
using InteriorData = std::variant<EPS, SameAsDegreeSet, AutoInterior>;

struct ComponentRecord {
  std::string id;
  Int multiplicity = 1;
  std::optional<Int> constant_field_degree;
  DegreeData degree_set = AllDegrees{};
  InteriorData interior = SameAsDegreeSet{};
  std::optional<Int> arithmetic_genus;

  Int field_degree() const { return constant_field_degree.value_or(1); }
  bool operator==(const ComponentRecord&) const = default;
};

struct Branch {
  std::string component;
  Int count = 1;
  bool operator==(const Branch&) const = default;
};

struct MarkedPoint {
  std::string id;
  Int degree = 1;
  std::vector<Branch> branches;
  bool snc = true;
  /// For a non-SNC point: its contribution, worked out elsewhere (e.g. with
  /// the blow-up calculus).
  std::optional<EPS> contribution;
  bool operator==(const MarkedPoint&) const = default;
};

enum class FieldKind { AlgebraicallyClosed, Finite, InfiniteOther };

struct ResidueField {
  FieldKind kind = FieldKind::InfiniteOther;
  Int q = 0;  // only for Finite

  static ResidueField algebraically_closed() { return {FieldKind::AlgebraicallyClosed, 0}; }
  static ResidueField finite(Int q) { return {FieldKind::Finite, q}; }
  static ResidueField infinite_other() { return {FieldKind::InfiniteOther, 0}; }
  bool operator==(const ResidueField&) const = default;
};

struct FiberMetadata {
  std::optional<Int> genus;
  bool minimal = false;
  bool hyperelliptic = false;
  /// Residue characteristic, when known and not implied by a finite field.
  std::optional<Int> characteristic;
  bool operator==(const FiberMetadata&) const = default;
};

struct SpecialFiberConfig {
  ResidueField residue_field;
  std::vector<ComponentRecord> components;
  std::vector<MarkedPoint> points;
  FiberMetadata metadata;

  const ComponentRecord& component(const std::string& id) const;
  bool operator==(const SpecialFiberConfig&) const = default;
};

/// D(E/k).
EPS component_degree_set(const ComponentRecord& e, const SpecialFiberConfig& cfg);

/// D(E°/k), E° = E minus the marked points on it.
EPS component_interior_degree_set(const ComponentRecord& e, const SpecialFiberConfig& cfg);

/// deg(x) * N(x). ConfigError for a non-SNC point.
EPS point_contribution(const MarkedPoint& x, const SpecialFiberConfig& cfg);

/// m * (union of dN over d in D(E°/k)).
EPS interior_contribution(const ComponentRecord& e, const SpecialFiberConfig& cfg);

/// The degree set of the generic fiber. Throws ValidationError if validate()
/// reports problems, ConfigError for an unresolved non-SNC point.
EPS degree_set(const SpecialFiberConfig& cfg);

/// gcd of m_i * delta(E_i/k), cross-checked against gcd of degree_set(cfg);
/// InconsistentInput when they differ.
Int index_of(const SpecialFiberConfig& cfg);

/// Every problem found, empty when the configuration is usable.
std::vector<std::string> validate(const SpecialFiberConfig& cfg);

/// Component ids reachable from the first one through marked points that
/// lie on two or more components.
std::vector<std::string> connected_component_ids(const SpecialFiberConfig& cfg);

}  // namespace degset
