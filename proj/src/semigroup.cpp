#include "degset/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "degset/errors.hpp"
#include "degset/int_math.hpp"

namespace degset {

GeneratorMultiset::GeneratorMultiset(std::vector<Int> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw DomainError("generator multiset is empty");
  for (Int g : gens_)
    if (g < 1) throw DomainError("generators must be positive, got " + std::to_string(g));
}

Int GeneratorMultiset::sum() const {
  Int s = 0;
  for (Int g : gens_) s = checked_add(s, g);
  return s;
}

Int GeneratorMultiset::gcd() const {
  Int d = 0;
  for (Int g : gens_) d = std::gcd(d, g);
  return d;
}

namespace {

// Monoid generated by coprime gens, as a set with tail N>=F+1. Past the
// Schur bound (min-1)(max-1) every integer is representable.
EPS coprime_monoid(std::vector<Int> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() == 1) return EPS::naturals();
  const Int bound = checked_mul(gens.front() - 1, gens.back() - 1);
  if (bound > (Int{1} << 26)) throw RepresentationError("semigroup generators too large");
  std::vector<char> reach(static_cast<std::size_t>(bound + 1), 0);
  reach[0] = 1;
  for (Int n = 1; n <= bound; ++n)
    for (Int g : gens)
      if (g <= n && reach[n - g]) {
        reach[n] = 1;
        break;
      }
  RawEps raw;
  raw.threshold = bound + 1;
  for (Int n = 1; n <= bound; ++n)
    if (reach[n]) raw.explicit_members.push_back(n);
  raw.period = 1;
  raw.residues = {0};
  return canonicalize(raw);
}

}  // namespace

EPS monoid_closure(const GeneratorMultiset& g) {
  const Int d = g.gcd();
  std::vector<Int> reduced;
  for (Int x : g.generators()) reduced.push_back(x / d);
  return scale(d, coprime_monoid(std::move(reduced)));
}

EPS positive_combinations(const GeneratorMultiset& g) {
  const Int s = g.sum();
  return set_union(EPS::finite({s}), translate(monoid_closure(g), s));
}

Int frobenius(const GeneratorMultiset& g) {
  if (g.gcd() != 1) throw DomainError("no Frobenius number: generators are not coprime");
  return monoid_closure(g).threshold() - 1;
}

}  // namespace degset
