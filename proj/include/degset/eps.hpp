#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace degset {

using Int = std::int64_t;

/// Raw field data of an eventually periodic set, before canonicalization.
struct RawEps {
  Int threshold = 1;
  std::vector<Int> explicit_members;
  Int period = 1;
  std::vector<Int> residues;
};

/// A subset S of the positive integers given by a finite part below a
/// threshold T and a periodic tail:
///
///   n in S  <=>  (n < T and n in explicit)  or  (n >= T and n mod p in residues)
///
/// Values are always held in canonical form: p is the minimal period of the
/// tail and T is minimal for that p. Two sets are equal iff their fields are.
class EventuallyPeriodicSet {
 public:
  /// The empty set.
  EventuallyPeriodicSet() = default;

  static EventuallyPeriodicSet empty() { return {}; }
  static EventuallyPeriodicSet naturals();
  /// {r, r+1, r+2, ...}
  static EventuallyPeriodicSet at_least(Int r);
  static EventuallyPeriodicSet finite(std::vector<Int> members);

  bool contains(Int n) const;
  bool is_empty() const { return explicit_.empty() && residues_.empty(); }
  bool is_finite() const { return residues_.empty(); }
  std::optional<Int> min() const;

  /// Members in [1, bound).
  std::vector<Int> members_below(Int bound) const;

  Int threshold() const { return threshold_; }
  const std::vector<Int>& explicit_members() const { return explicit_; }
  Int period() const { return period_; }
  const std::vector<Int>& residues() const { return residues_; }

  RawEps raw() const { return {threshold_, explicit_, period_, residues_}; }

  friend bool operator==(const EventuallyPeriodicSet&,
                         const EventuallyPeriodicSet&) = default;

 private:
  friend EventuallyPeriodicSet canonicalize(const RawEps& raw);

  Int threshold_ = 1;
  std::vector<Int> explicit_;
  Int period_ = 1;
  std::vector<Int> residues_;
};

using EPS = EventuallyPeriodicSet;

/// Validates raw fields and returns the canonical form. Throws
/// ValidationError for malformed data.
EPS canonicalize(const RawEps& raw);

/// Membership; throws DomainError for n < 1.
bool contains(const EPS& s, Int n);

/// {d, 2d, 3d, ...}
EPS multiples(Int d);

EPS set_union(const EPS& a, const EPS& b);
EPS intersect(const EPS& a, const EPS& b);
EPS difference(const EPS& a, const EPS& b);

/// {d*s : s in S}
EPS scale(Int d, const EPS& s);

/// {s + k : s in S} for k >= 0.
EPS translate(const EPS& s, Int k);

/// {s + t : s in S, t in T}. Empty if either operand is empty.
EPS sumset(const EPS& a, const EPS& b);

/// The union of dN over all d in S, i.e. every positive integer having a
/// divisor in S. Throws RepresentationError when the tail of S is not closed
/// enough under multiplication for the result to be certified periodic.
EPS multiples_closure(const EPS& s);

/// gcd of all members; DomainError on the empty set.
Int gcd_of(const EPS& s);

bool is_subset(const EPS& a, const EPS& b);

/// Least member of a \ b, if any.
std::optional<Int> first_not_in(const EPS& a, const EPS& b);

/// Canonical text: the shorthands `N`, `dN`, `N>=r` where they apply,
/// otherwise `eps{explicit=[..]; from=T; period=p; residues=[..]}`.
std::string to_string(const EPS& s);

/// Always the long `eps{...}` form.
std::string to_long_string(const EPS& s);

/// Parses the canonical text, the shorthands, finite sets `{a,b,...}` and
/// unions of those joined by `|` (or U+222A). Throws ParseError.
EPS parse_eps(std::string_view text);

std::ostream& operator<<(std::ostream& os, const EPS& s);

}  // namespace degset
