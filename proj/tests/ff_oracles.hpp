// Brute-force finite field arithmetic for checking point counts and
// factorizations. Slow and simple on purpose.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;  // low degree first, over F_p

inline Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_trim(r);
}

/// All monic polynomials of degree n over F_p.
inline std::vector<Poly> monic_polys(std::int64_t p, int n) {
  std::vector<Poly> out;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (std::int64_t code = 0; code < total; ++code) {
    Poly f(n + 1, 0);
    f[n] = 1;
    std::int64_t c = code;
    for (int i = 0; i < n; ++i, c /= p) f[i] = c % p;
    out.push_back(f);
  }
  return out;
}

/// Monic irreducibles of degree n over F_p, by sieving out products.
inline std::vector<Poly> irreducibles(std::int64_t p, int n) {
  std::vector<std::vector<Poly>> irr(n + 1);
  for (int d = 1; d <= n; ++d) {
    std::map<Poly, bool> reducible;
    for (int a = 1; a <= d / 2; ++a)
      for (const auto& f : irr[a])
        for (const auto& g : monic_polys(p, d - a)) reducible[poly_mul(f, g, p)] = true;
    for (const auto& f : monic_polys(p, d))
      if (!reducible.count(f)) irr[d].push_back(f);
  }
  return irr[n];
}

/// Degrees of the irreducible factors of monic f, by trial division.
inline std::vector<std::int64_t> trial_factor_degrees(Poly f, std::int64_t p) {
  std::vector<std::int64_t> out;
  int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n; ++d) {
    for (const auto& g : irreducibles(p, d)) {
      for (;;) {
        // divide f by monic g if possible
        Poly r = f;
        Poly q(r.size() >= g.size() ? r.size() - g.size() + 1 : 0, 0);
        for (int i = static_cast<int>(r.size()) - static_cast<int>(g.size()); i >= 0; --i) {
          std::int64_t c = r[i + g.size() - 1] % p;
          q[i] = c;
          for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = ((r[i + j] - c * g[j]) % p + p) % p;
        }
        if (!poly_trim(r).empty() || q.empty()) break;
        out.push_back(d);
        f = poly_trim(q);
      }
    }
  }
  return out;
}

/// The field with p^n elements; elements are integers in [0, p^n) read as
/// base-p coefficient vectors modulo a fixed irreducible of degree n.
class GF {
 public:
  GF(std::int64_t p, int n) : p_(p), n_(n), mod_(irreducibles(p, n).front()) {
    size_ = 1;
    for (int i = 0; i < n; ++i) size_ *= p;
    mul_.assign(static_cast<std::size_t>(size_ * size_), 0);
    for (std::int64_t a = 0; a < size_; ++a)
      for (std::int64_t b = 0; b < size_; ++b) mul_[a * size_ + b] = encode(reduce(poly_mul(decode(a), decode(b), p_)));
  }

  std::int64_t size() const { return size_; }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    Poly x = decode(a), y = decode(b);
    for (int i = 0; i < n_; ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return mul_[a * size_ + b]; }
  std::int64_t constant(std::int64_t c) const { return ((c % p_) + p_) % p_; }

  /// Evaluates a polynomial with F_p coefficients (low first) at a.
  std::int64_t eval(const Poly& f, std::int64_t a) const {
    std::int64_t r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = add(mul(r, a), constant(*it));
    return r;
  }

 private:
  Poly decode(std::int64_t a) const {
    Poly v(n_, 0);
    for (int i = 0; i < n_; ++i, a /= p_) v[i] = a % p_;
    return v;
  }
  std::int64_t encode(const Poly& v) const {
    std::int64_t a = 0;
    for (int i = n_ - 1; i >= 0; --i) a = a * p_ + (i < static_cast<int>(v.size()) ? v[i] : 0);
    return a;
  }
  Poly reduce(Poly a) const {
    for (int i = static_cast<int>(a.size()) - 1; i >= n_; --i) {
      std::int64_t c = a[i];
      for (int j = 0; j <= n_; ++j) a[i - n_ + j] = ((a[i - n_ + j] - c * mod_[j]) % p_ + p_) % p_;
    }
    a.resize(n_, 0);
    return a;
  }

  std::int64_t p_;
  int n_;
  Poly mod_;
  std::int64_t size_;
  std::vector<std::int64_t> mul_;
};

/// #C(F_{p^n}) for the smooth projective model of y^2 = f(x), p odd,
/// deg f in {5, 6}.
inline std::int64_t hyperelliptic_count(const Poly& f, std::int64_t p, int n) {
  GF F(p, n);
  std::vector<int> roots(static_cast<std::size_t>(F.size()), 0);
  for (std::int64_t y = 0; y < F.size(); ++y) ++roots[F.mul(y, y)];
  std::int64_t total = 0;
  for (std::int64_t x = 0; x < F.size(); ++x) total += roots[F.eval(f, x)];
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg % 2 == 1) return total + 1;
  // two points at infinity if the leading coefficient is a square, else none
  const std::int64_t lead = F.constant(f.back());
  return total + (roots[lead] > 0 ? 2 : 0);
}

/// #E(F_{2^n}) for y^2 + y = x^3, projective.
inline std::int64_t supersingular_count(int n) {
  GF F(2, n);
  std::int64_t total = 1;
  for (std::int64_t x = 0; x < F.size(); ++x)
    for (std::int64_t y = 0; y < F.size(); ++y)
      if (F.add(F.mul(y, y), y) == F.mul(x, F.mul(x, x))) ++total;
  return total;
}

}  // namespace oracle
