#pragma once

#include <vector>

#include "degset/eps.hpp"

namespace degset {

/// Multiplicities of the branches through a point. Duplicates are kept: two
/// branches of the same multiplicity each need their own positive coefficient.
class GeneratorMultiset {
 public:
  /// Throws DomainError if empty or if some generator is < 1.
  explicit GeneratorMultiset(std::vector<Int> gens);

  const std::vector<Int>& generators() const { return gens_; }
  Int sum() const;
  Int gcd() const;

 private:
  std::vector<Int> gens_;
};

/// {sum a_i g_i : every a_i >= 1}
EPS positive_combinations(const GeneratorMultiset& g);

/// {sum a_i g_i : a_i >= 0, not all zero}
EPS monoid_closure(const GeneratorMultiset& g);

/// Largest integer outside the monoid; 0 when 1 is a generator.
/// DomainError if gcd(g) != 1.
Int frobenius(const GeneratorMultiset& g);

}  // namespace degset
