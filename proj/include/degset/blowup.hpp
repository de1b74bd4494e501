#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "degset/eps.hpp"
#include "degset/fiber.hpp"

namespace degset {

/// Smooth point of the reduced fiber on one component.
struct Interior {
  Int m = 1;
  bool operator==(const Interior&) const = default;
};
/// Pairwise transversal smooth branches on distinct components (2 or 3).
struct Transverse {
  std::vector<Int> m;
  bool operator==(const Transverse&) const = default;
};
/// Two smooth branches meeting with intersection number 2.
struct Tangential2 {
  Int m1 = 1, m2 = 1;
  bool operator==(const Tangential2&) const = default;
};
enum class Tangents { Split, Inert };
/// Ordinary double point of one component.
struct Node {
  Int m = 1;
  Tangents tangents = Tangents::Split;
  bool operator==(const Node&) const = default;
};

using Shape = std::variant<Interior, Transverse, Tangential2, Node>;

struct LocalConfig {
  Int degree = 1;  // deg_k(x), or the degree over the previous center for children
  Shape shape;
  bool operator==(const LocalConfig&) const = default;
};

struct BlowupStep {
  Int exceptional_multiplicity = 0;
  /// Points where the exceptional line meets the strict transforms; each
  /// degree is over the residue field of the blown-up point.
  std::vector<LocalConfig> children;
  /// Degrees of the remaining points of the exceptional line.
  EPS interior_degrees;
};

/// DomainError for malformed shapes (multiplicity < 1, Transverse with
/// fewer than 2 or more than 3 branches).
void check_shape(const LocalConfig& c);

/// True for Interior and two-branch Transverse.
bool is_snc(const Shape& s);

BlowupStep blow_up(const LocalConfig& c);

/// The set N(x): positive combinations of the multiplicities of the
/// components through x (a node counts its component once).
EPS local_N(const Shape& s);

struct MResult {
  EPS set;
  bool certified = false;
};

/// M(x) from blow-up sequences of length <= max_depth. Shapes with a known
/// closed form (Node, Interior, two-branch Transverse) return it and are
/// certified; the rest give a lower bound. DomainError if max_depth < 1, or
/// an inert node over an algebraically closed field.
MResult enumerate_M(const LocalConfig& c, FieldKind field, Int max_depth);

/// Same with exceptional multiplicities only (degrees ignored).
MResult enumerate_M_prime(const LocalConfig& c, Int max_depth);

struct ContainmentReport {
  EPS M, M_prime, N;
  bool M_certified = false, M_prime_certified = false;
  bool M_in_M_prime = false, M_prime_in_N = false;
  std::optional<Int> witness_M_prime_not_M;  // least element of M' \ M
  std::optional<Int> witness_N_not_M_prime;  // least element of N \ M'
  std::optional<Int> witness_N_not_M;        // least element of N \ M
};

ContainmentReport containment_report(const LocalConfig& c, Int max_depth,
                                     FieldKind field = FieldKind::InfiniteOther);

/// Text form, e.g. "node:m=2,split", "tangential2:2,3", "transverse:2,3,5",
/// "interior:4". ParseError on bad input.
Shape parse_shape(std::string_view text);
std::string to_string(const Shape& s);

}  // namespace degset
