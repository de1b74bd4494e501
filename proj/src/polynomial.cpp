#include "degset/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "degset/errors.hpp"
#include "degset/int_math.hpp"

namespace degset::ff {

namespace {

struct Field {
  Int p;
  Int norm(Int a) const { return ((a % p) + p) % p; }
  Int mul(Int a, Int b) const {
    return static_cast<Int>(static_cast<__int128>(a) * b % p);
  }
  Int inv(Int a) const {
    // p is prime: a^(p-2)
    Int r = 1, e = p - 2;
    for (a = norm(a); e > 0; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
};

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

Coeffs sub(const Field& F, Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.norm(a[i] - b[i]);
  trim(a);
  return a;
}

// a mod b, b nonzero; optionally the quotient.
Coeffs divmod(const Field& F, Coeffs a, const Coeffs& b, Coeffs* quot = nullptr) {
  const int db = deg(b);
  const Int lead_inv = F.inv(b.back());
  if (quot) quot->assign(std::max(0, deg(a) - db + 1), 0);
  while (deg(a) >= db) {
    const int shift = deg(a) - db;
    const Int c = F.mul(a.back(), lead_inv);
    if (quot) (*quot)[shift] = c;
    for (int i = 0; i <= db; ++i) a[shift + i] = F.norm(a[shift + i] - F.mul(c, b[i]));
    trim(a);
  }
  return a;
}

Coeffs mulmod(const Field& F, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + F.mul(a[i], b[j])) % F.p;
  trim(r);
  return divmod(F, std::move(r), m);
}

Coeffs powmod(const Field& F, Coeffs base, Int e, const Coeffs& m) {
  Coeffs r{1};
  r = divmod(F, r, m);
  base = divmod(F, std::move(base), m);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mulmod(F, r, base, m);
    if (e > 1) base = mulmod(F, base, base, m);
  }
  return r;
}

Coeffs monic(const Field& F, Coeffs a) {
  if (a.empty()) return a;
  const Int li = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, li);
  return a;
}

Coeffs gcd(const Field& F, Coeffs a, Coeffs b) {
  while (!b.empty()) {
    Coeffs r = divmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, std::move(a));
}

Coeffs derivative(const Field& F, const Coeffs& a) {
  Coeffs d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(F.norm(static_cast<Int>(i)), a[i]));
  trim(d);
  return d;
}

}  // namespace

PrimePolynomial::PrimePolynomial(Int p, Coeffs low_first) : p_(p), c_(std::move(low_first)) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  Field F{p};
  for (auto& c : c_) c = F.norm(c);
  trim(c_);
  if (c_.size() < 2) throw ValidationError({"polynomial must have degree >= 1"});
  if (c_.back() != 1) throw ValidationError({"polynomial must be monic"});
}

PrimePolynomial parse_polynomial(Int p, std::string_view text) {
  auto fail = [&](const std::string& why) -> PrimePolynomial {
    throw ParseError({"polynomial '" + std::string(text) + "': " + why});
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) return fail("empty");

  Coeffs c;
  if (s.find('x') == std::string::npos) {
    std::vector<Int> high;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        high.push_back(std::stoll(tok, &used));
        if (used != tok.size()) return fail("bad coefficient '" + tok + "'");
      } catch (const std::logic_error&) {
        return fail("bad coefficient '" + tok + "'");
      }
    }
    c.assign(high.rbegin(), high.rend());
    return PrimePolynomial(p, c);
  }

  // sum of terms [+-][coef][x[^e]]
  std::size_t i = 0;
  auto number = [&](Int& out) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return false;
    try {
      out = std::stoll(s.substr(start, i - start));
    } catch (const std::out_of_range&) {
      fail("number out of range");
    }
    return true;
  };
  while (i < s.size()) {
    Int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      return fail("expected + or - at offset " + std::to_string(i));
    }
    Int coef = 1, e = 0;
    const bool has_coef = number(coef);
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!number(e)) return fail("missing exponent at offset " + std::to_string(i));
      }
    } else if (!has_coef) {
      return fail("expected a term at offset " + std::to_string(i));
    }
    if (e > 4096) return fail("degree too large");
    if (c.size() <= static_cast<std::size_t>(e)) c.resize(e + 1, 0);
    c[e] += sign * (coef % p);
  }
  return PrimePolynomial(p, c);
}

std::string to_string(const PrimePolynomial& f) {
  std::string out;
  const auto& c = f.coeffs();
  for (int e = f.degree(); e >= 0; --e) {
    if (c[e] == 0) continue;
    if (!out.empty()) out += " + ";
    if (c[e] != 1 || e == 0) out += std::to_string(c[e]);
    if (e >= 1) out += "x";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

bool is_squarefree(const PrimePolynomial& f) {
  Field F{f.p()};
  return deg(gcd(F, f.coeffs(), derivative(F, f.coeffs()))) == 0;
}

std::vector<Int> factor_degrees(const PrimePolynomial& f) {
  if (!is_squarefree(f)) throw DomainError("polynomial " + to_string(f) + " is not squarefree mod " +
                                           std::to_string(f.p()));
  Field F{f.p()};
  const Coeffs x{0, 1};
  Coeffs rest = f.coeffs();
  Coeffs h = divmod(F, x, rest);
  std::vector<Int> out;
  for (int i = 1; 2 * i <= deg(rest); ++i) {
    h = powmod(F, h, F.p, rest);  // x^(p^i) mod rest
    Coeffs g = gcd(F, sub(F, h, x), rest);
    if (deg(g) > 0) {
      for (int k = 0; k < deg(g) / i; ++k) out.push_back(i);
      Coeffs q;
      divmod(F, rest, g, &q);
      rest = q;
      h = divmod(F, h, rest);
    }
  }
  if (deg(rest) > 0) out.push_back(deg(rest));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace degset::ff
