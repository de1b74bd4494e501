#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "degset/eps.hpp"
#include "degset/polynomial.hpp"

namespace degset::ff {

using BigInt = boost::multiprecision::cpp_int;

/// Point counts N_r = #C(F_{q^r}) for r = 1..counts.size() of a smooth
/// projective curve of genus g over F_q.
struct CurveCountData {
  Int q = 2;
  Int genus = 0;
  std::vector<BigInt> counts;

  bool operator==(const CurveCountData&) const = default;
};

/// Least r such that the counting inequality guaranteeing a closed point of
/// degree d holds for every d >= r. Always <= 2g + 9.
Int weil_min_degree(Int q, Int g);

/// Whether the inequality holds at this single d.
bool weil_inequality_holds(Int q, Int g, Int d);

/// Number of closed points of degree exactly d, by Moebius inversion.
/// Needs N_r for every r | d. InconsistentInput if the result is negative or
/// not an integer.
BigInt degree_point_count(const std::vector<BigInt>& counts, Int d);

/// N_1..N_bound, recovering the L-polynomial from N_1..N_g. Provided counts
/// beyond g must agree with the recurrence. InconsistentInput on Weil bound
/// violations or non-integral L-polynomial coefficients.
std::vector<BigInt> extend_counts(const CurveCountData& data, Int bound);

/// Degree set of the curve with the given closed points removed (degrees
/// listed with multiplicity). InconsistentInput if more points of some degree
/// are removed than exist.
EPS curve_degree_set(const CurveCountData& data, const std::vector<Int>& removed = {});

/// q^r + 1 for r = 1..n: the counts of a projective line.
std::vector<BigInt> line_counts(Int q, Int n);

}  // namespace degset::ff
