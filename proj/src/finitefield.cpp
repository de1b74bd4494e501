#include "degset/finitefield.hpp"

#include <algorithm>
#include <map>

#include "degset/errors.hpp"
#include "degset/int_math.hpp"

namespace degset::ff {

namespace {

BigInt power(Int q, Int e) {
  BigInt r = 1;
  for (Int i = 0; i < e; ++i) r *= q;
  return r;
}

void check_field(Int q, Int g) {
  if (!prime_power_base(q)) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  if (g < 0) throw DomainError("genus must be nonnegative");
}

// (N_r - q^r - 1)^2 <= 4 g^2 q^r
bool within_weil(Int q, Int g, Int r, const BigInt& n) {
  BigInt dev = n - power(q, r) - 1;
  return dev * dev <= 4 * BigInt(g) * g * power(q, r);
}

}  // namespace

bool weil_inequality_holds(Int q, Int g, Int d) {
  check_field(q, g);
  if (d < 1) throw DomainError("degree must be positive");
  // q^d - sum q^{d/p} + 1 - omega(d) > 2g (q^{d/2} + sum q^{d/2p}).
  // Every exponent on the right is k/2 for an integer k; split it into a
  // rational part I and a part J*sqrt(q).
  const auto primes = prime_factors(d);
  BigInt lhs = power(q, d) + 1 - static_cast<Int>(primes.size());
  BigInt I = 0, J = 0;
  auto half = [&](Int k) {
    if (k % 2 == 0)
      I += power(q, k / 2);
    else
      J += power(q, (k - 1) / 2);
  };
  half(d);
  for (Int p : primes) {
    lhs -= power(q, d / p);
    half(d / p);
  }
  BigInt x = lhs - 2 * BigInt(g) * I;
  BigInt y = 2 * BigInt(g) * J;  // compare x > y sqrt(q)
  if (x <= 0) return false;
  if (y == 0) return true;
  return x * x > y * y * q;
}

Int weil_min_degree(Int q, Int g) {
  check_field(q, g);
  // The inequality holds for every d >= 2g + 9; only smaller d need checking.
  for (Int d = 2 * g + 8; d >= 1; --d)
    if (!weil_inequality_holds(q, g, d)) return d + 1;
  return 1;
}

BigInt degree_point_count(const std::vector<BigInt>& counts, Int d) {
  if (d < 1) throw DomainError("degree must be positive");
  if (static_cast<std::size_t>(d) > counts.size())
    throw DomainError("counts up to N_" + std::to_string(d) + " required");
  BigInt total = 0;
  for (Int r : divisors(d)) total += moebius(d / r) * counts[r - 1];
  if (total < 0 || total % d != 0)
    throw InconsistentInput("point counts give a non-integral or negative number of degree " +
                            std::to_string(d) + " points");
  return total / d;
}

std::vector<BigInt> line_counts(Int q, Int n) {
  std::vector<BigInt> out;
  for (Int r = 1; r <= n; ++r) out.push_back(power(q, r) + 1);
  return out;
}

std::vector<BigInt> extend_counts(const CurveCountData& data, Int bound) {
  const Int q = data.q, g = data.genus;
  check_field(q, g);
  if (bound < 1) throw DomainError("bound must be positive");
  if (static_cast<Int>(data.counts.size()) < g)
    throw DomainError("genus " + std::to_string(g) + " needs at least " + std::to_string(g) +
                      " point counts");
  for (std::size_t i = 0; i < data.counts.size(); ++i)
    if (!within_weil(q, g, static_cast<Int>(i + 1), data.counts[i]))
      throw InconsistentInput("N_" + std::to_string(i + 1) + " violates the Weil bound");

  // Power sums of the Frobenius eigenvalues: s_r = q^r + 1 - N_r.
  // L(T) = 1 + a_1 T + ... + a_2g T^2g, with k a_k = -sum_{i=1..k} s_i a_{k-i}.
  std::vector<BigInt> s(1), a(2 * g + 1);
  a[0] = 1;
  for (Int k = 1; k <= g; ++k) s.push_back(power(q, k) + 1 - data.counts[k - 1]);
  for (Int k = 1; k <= g; ++k) {
    BigInt acc = 0;
    for (Int i = 1; i <= k; ++i) acc += s[i] * a[k - i];
    if (acc % k != 0) throw InconsistentInput("point counts do not come from an L-polynomial");
    a[k] = -acc / k;
  }
  for (Int k = 0; k < g; ++k) a[2 * g - k] = power(q, g - k) * a[k];

  const Int n = std::max<Int>(bound, static_cast<Int>(data.counts.size()));
  for (Int r = g + 1; r <= n; ++r) {
    BigInt acc = r <= 2 * g ? BigInt(r) * a[r] : BigInt(0);
    for (Int i = 1; i < r && i <= 2 * g; ++i) acc += a[i] * s[r - i];
    s.push_back(-acc);
  }

  std::vector<BigInt> out;
  for (Int r = 1; r <= n; ++r) {
    BigInt nr = power(q, r) + 1 - s[r];
    if (r <= static_cast<Int>(data.counts.size()) && nr != data.counts[r - 1])
      throw InconsistentInput("N_" + std::to_string(r) + " disagrees with the counts N_1..N_g");
    if (nr < 0 || !within_weil(q, g, r, nr))
      throw InconsistentInput("point counts extend past the Weil bound at r = " + std::to_string(r));
    out.push_back(nr);
  }
  for (Int r = 1; r <= n; ++r) degree_point_count(out, r);
  out.resize(bound);
  return out;
}

EPS curve_degree_set(const CurveCountData& data, const std::vector<Int>& removed) {
  std::map<Int, Int> removed_at;
  Int top = 0;
  for (Int d : removed) {
    if (d < 1) throw DomainError("removed point degrees must be positive");
    ++removed_at[d];
    top = std::max(top, d);
  }
  const Int r = weil_min_degree(data.q, data.genus);
  // Past both r and the largest removed degree, every degree occurs.
  const Int from = std::max(r, top + 1);
  const auto counts = extend_counts(data, from);
  RawEps raw;
  raw.threshold = from;
  raw.period = 1;
  raw.residues = {0};
  for (Int d = 1; d < from; ++d) {
    BigInt have = degree_point_count(counts, d);
    BigInt gone = removed_at.count(d) ? removed_at[d] : 0;
    if (gone > have)
      throw InconsistentInput("removing " + gone.str() + " points of degree " + std::to_string(d) +
                              " but the curve has only " + have.str());
    if (have > gone) raw.explicit_members.push_back(d);
  }
  return canonicalize(raw);
}

}  // namespace degset::ff
