#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degset/fiber.hpp"
#include "degset/polynomial.hpp"

namespace degset {

struct FixtureInfo {
  std::string label;
  std::string summary;
  bool has_swap = false;  // whether the galois swap variant exists
};

/// Labels: NU-IV, NU-III*-II0, NU-II*-IV-alpha, smooth-genus-2,
/// two-elliptic-chain.
const std::vector<FixtureInfo>& fixture_list();

struct FixtureOptions {
  /// Conjugate pair of components merged into one with constant field
  /// degree 2 (NU-IV, NU-III*-II0).
  bool swap = false;
  /// smooth-genus-2 only: a curve with no rational point.
  bool pointless = false;
};

/// Over a finite field the fixtures use q = 7 (characteristic prime to 30);
/// any other finite q is accepted, but genus >= 1 components only have
/// counts for q = 7. ConfigError for unknown labels or invalid variants.
SpecialFiberConfig build_fixture(const std::string& label, const FixtureOptions& opts = {},
                                 ResidueField field = ResidueField::finite(7));

/// The set every genus 2 curve over a large field gets for free: 2N (index
/// 2) or 2N u 3N (index 1), intersected with the degrees of finite
/// extensions of K. DomainError for other indices.
EPS large_field_floor(Int index, const EPS& ext_degrees = EPS::naturals());

enum class Genus2Tag { TwoN, N, NAboveOne, TwoNOrThreeN, SmoothUnion };

struct Genus2Class {
  Genus2Tag tag;
  EPS set;
  std::vector<std::string> warnings;
};

std::string to_string(Genus2Tag t);

/// Matches degree_set(cfg) u large_field_floor(index, ext) against the
/// genus 2 menu. ConfigError if the metadata isn't genus 2 or the result is
/// off the menu.
Genus2Class genus2_classify(const SpecialFiberConfig& cfg, const EPS& ext_degrees = EPS::naturals());

/// A multiplicity 2 spine with one multiplicity 1 component of constant
/// field degree n_i per entry, each meeting the spine at a degree n_i point.
/// DomainError for an odd or empty total.
SpecialFiberConfig hyperelliptic_family(const std::vector<Int>& degrees,
                                        ResidueField field = ResidueField::infinite_other());

/// Same, from the factor degrees of f over F_p (residue field F_p).
SpecialFiberConfig hyperelliptic_family(const ff::PrimePolynomial& f);

}  // namespace degset
