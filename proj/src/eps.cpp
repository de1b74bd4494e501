#include "degset/eps.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>

#include "degset/errors.hpp"
#include "degset/int_math.hpp"

namespace degset {

namespace {

// Periods beyond this are refused rather than materialized.
constexpr Int kMaxPeriod = Int{1} << 24;
constexpr Int kMaxWindow = Int{1} << 26;

void check_period(Int p) {
  if (p > kMaxPeriod)
    throw RepresentationError("period " + std::to_string(p) + " exceeds supported maximum");
}

/// Builds a set from a predicate that is known to be p-periodic from T on.
template <class Pred>
EPS from_predicate(Int threshold, Int period, Pred&& pred) {
  check_period(period);
  RawEps raw;
  raw.threshold = threshold;
  raw.period = period;
  for (Int n = 1; n < threshold; ++n)
    if (pred(n)) raw.explicit_members.push_back(n);
  for (Int n = threshold; n < threshold + period; ++n)
    if (pred(n)) raw.residues.push_back(n % period);
  std::sort(raw.residues.begin(), raw.residues.end());
  return canonicalize(raw);
}

bool tail_has(const EPS& s, Int n) {
  return std::binary_search(s.residues().begin(), s.residues().end(), n % s.period());
}

// Bitset over [0, size) used by sumset.
class Bits {
 public:
  explicit Bits(Int size) : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {}

  void set(Int i) { words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  bool test(Int i) const {
    return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U;
  }

  /// this |= other << shift, truncated to size.
  void or_shifted(const Bits& other, Int shift) {
    const std::size_t word_shift = static_cast<std::size_t>(shift >> 6);
    const unsigned bit_shift = static_cast<unsigned>(shift & 63);
    const std::size_t n = words_.size();
    for (std::size_t i = n; i-- > word_shift;) {
      const std::size_t src = i - word_shift;
      std::uint64_t w = other.words_[src] << bit_shift;
      if (bit_shift != 0 && src > 0) w |= other.words_[src - 1] >> (64 - bit_shift);
      words_[i] |= w;
    }
    // Clear anything past the end.
    if (size_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

 private:
  Int size_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

EPS EventuallyPeriodicSet::naturals() { return at_least(1); }

EPS EventuallyPeriodicSet::at_least(Int r) {
  if (r < 1) throw DomainError("N>=r requires r >= 1");
  return canonicalize(RawEps{r, {}, 1, {0}});
}

EPS EventuallyPeriodicSet::finite(std::vector<Int> members) {
  for (Int m : members)
    if (m < 1) throw DomainError("set members must be positive integers");
  const Int top = members.empty() ? 0 : *std::max_element(members.begin(), members.end());
  return canonicalize(RawEps{checked_add(top, 1), std::move(members), 1, {}});
}

bool EventuallyPeriodicSet::contains(Int n) const {
  if (n < 1) return false;
  if (n < threshold_) return std::binary_search(explicit_.begin(), explicit_.end(), n);
  return std::binary_search(residues_.begin(), residues_.end(), n % period_);
}

std::optional<Int> EventuallyPeriodicSet::min() const {
  if (!explicit_.empty()) return explicit_.front();
  if (residues_.empty()) return std::nullopt;
  for (Int n = threshold_;; ++n)
    if (contains(n)) return n;
}

std::vector<Int> EventuallyPeriodicSet::members_below(Int bound) const {
  std::vector<Int> out;
  for (Int n = 1; n < bound; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

EPS canonicalize(const RawEps& raw) {
  std::vector<std::string> issues;
  if (raw.threshold < 1) issues.push_back("threshold must be >= 1");
  if (raw.period < 1) issues.push_back("period must be >= 1");
  for (Int e : raw.explicit_members)
    if (e < 1 || e >= raw.threshold)
      issues.push_back("explicit member " + std::to_string(e) + " outside [1, threshold)");
  for (Int r : raw.residues)
    if (r < 0 || r >= raw.period)
      issues.push_back("residue " + std::to_string(r) + " outside [0, period)");
  if (!issues.empty()) throw ValidationError(std::move(issues));
  check_period(raw.period);

  std::vector<char> bits(static_cast<std::size_t>(raw.period), 0);
  for (Int r : raw.residues) bits[static_cast<std::size_t>(r)] = 1;

  // Minimal period: the least divisor d with bits[r] == bits[r mod d].
  Int period = raw.period;
  for (Int d : divisors(raw.period)) {
    bool ok = true;
    for (Int r = d; r < raw.period && ok; ++r)
      ok = bits[static_cast<std::size_t>(r)] == bits[static_cast<std::size_t>(r % d)];
    if (ok) {
      period = d;
      break;
    }
  }
  bits.resize(static_cast<std::size_t>(period));

  std::vector<Int> expl = raw.explicit_members;
  std::sort(expl.begin(), expl.end());
  expl.erase(std::unique(expl.begin(), expl.end()), expl.end());

  // Lower the threshold while the explicit part agrees with the tail rule.
  Int threshold = raw.threshold;
  while (threshold > 1) {
    const Int n = threshold - 1;
    const bool in_tail = bits[static_cast<std::size_t>(n % period)] != 0;
    const bool in_explicit = !expl.empty() && expl.back() == n;
    if (in_tail != in_explicit) break;
    if (in_explicit) expl.pop_back();
    --threshold;
  }

  EPS out;
  out.threshold_ = threshold;
  out.explicit_ = std::move(expl);
  out.period_ = period;
  for (Int r = 0; r < period; ++r)
    if (bits[static_cast<std::size_t>(r)]) out.residues_.push_back(r);
  return out;
}

bool contains(const EPS& s, Int n) {
  if (n < 1) throw DomainError("degree sets live in the positive integers; got " + std::to_string(n));
  return s.contains(n);
}

EPS multiples(Int d) {
  if (d < 1) throw DomainError("multiples(d) requires d >= 1");
  return canonicalize(RawEps{1, {}, d, {0}});
}

EPS set_union(const EPS& a, const EPS& b) {
  const Int period = checked_lcm(a.period(), b.period());
  const Int threshold = std::max(a.threshold(), b.threshold());
  return from_predicate(threshold, period, [&](Int n) { return a.contains(n) || b.contains(n); });
}

EPS intersect(const EPS& a, const EPS& b) {
  const Int period = checked_lcm(a.period(), b.period());
  const Int threshold = std::max(a.threshold(), b.threshold());
  return from_predicate(threshold, period, [&](Int n) { return a.contains(n) && b.contains(n); });
}

EPS difference(const EPS& a, const EPS& b) {
  const Int period = checked_lcm(a.period(), b.period());
  const Int threshold = std::max(a.threshold(), b.threshold());
  return from_predicate(threshold, period, [&](Int n) { return a.contains(n) && !b.contains(n); });
}

EPS scale(Int d, const EPS& s) {
  if (d < 1) throw DomainError("scale requires d >= 1");
  RawEps raw;
  raw.threshold = checked_mul(d, s.threshold());
  raw.period = checked_mul(d, s.period());
  for (Int e : s.explicit_members()) raw.explicit_members.push_back(d * e);
  for (Int r : s.residues()) raw.residues.push_back(d * r);
  return canonicalize(raw);
}

EPS translate(const EPS& s, Int k) {
  if (k < 0) throw DomainError("translate requires k >= 0");
  if (s.is_empty()) return s;
  RawEps raw;
  raw.threshold = checked_add(s.threshold(), k);
  raw.period = s.period();
  for (Int e : s.explicit_members()) raw.explicit_members.push_back(e + k);
  for (Int r : s.residues()) raw.residues.push_back((r + k) % s.period());
  std::sort(raw.residues.begin(), raw.residues.end());
  return canonicalize(raw);
}

// Each operand is a finite part plus rays r + pN0 starting below T + p. Sums
// of finite parts end below Ta + Tb; finite part plus ray is a ray starting
// below Ta + Tb + p; ray plus ray is a + b + g<p/g, q/g>, which contains every
// multiple of g from a + b + lcm(p, q) on (two-generator Frobenius bound).
// Every piece is therefore lcm(pa, pb)-periodic from
//   Ta + Tb + pa + pb + lcm(pa, pb),
// and evaluating the sum exactly on one period past that bound certifies the
// whole tail.
EPS sumset(const EPS& a, const EPS& b) {
  if (a.is_empty() || b.is_empty()) return EPS::empty();
  const Int period = checked_lcm(a.period(), b.period());
  const Int bound = checked_add(checked_add(a.threshold(), b.threshold()),
                                checked_add(checked_add(a.period(), b.period()), period));
  const Int window = checked_add(bound, period);
  if (window > kMaxWindow) throw RepresentationError("sumset window too large");

  Bits bits_b(window);
  for (Int n = 1; n < window; ++n)
    if (b.contains(n)) bits_b.set(n);
  Bits sum(window);
  for (Int s = 1; s < window; ++s)
    if (a.contains(s)) sum.or_shifted(bits_b, s);
  return from_predicate(bound, period, [&](Int n) { return sum.test(n); });
}

EPS multiples_closure(const EPS& s) {
  if (s.is_empty()) return s;
  Int cut = s.threshold();
  for (int round = 0; round < 6; ++round) {
    EPS acc = intersect(s, EPS::at_least(cut));
    for (Int d : s.members_below(cut)) acc = set_union(acc, multiples(d));

    // Every multiple of a tail element d >= from must already lie in acc's
    // periodic tail; that depends only on d mod L.
    const Int from = std::max(cut, acc.threshold());
    bool tail_closed = true;
    if (!s.is_finite()) {
      const Int big = checked_lcm(s.period(), acc.period());
      for (Int c = 0; c < big && tail_closed; ++c) {
        if (!tail_has(s, c)) continue;
        const Int span = big / std::gcd(c, big);
        for (Int k = 1; k <= span && tail_closed; ++k)
          tail_closed = tail_has(acc, (c * k) % big);
      }
    }

    bool finite_covered = true;
    for (Int d = cut; d < from && finite_covered; ++d)
      if (s.contains(d)) finite_covered = is_subset(multiples(d), acc);

    if (tail_closed && finite_covered) return acc;
    cut = checked_add(from, s.period());
  }
  throw RepresentationError("union of dN over " + to_string(s) +
                            " is not certified eventually periodic");
}

Int gcd_of(const EPS& s) {
  if (s.is_empty()) throw DomainError("gcd of the empty set is undefined");
  Int g = 0;
  for (Int e : s.explicit_members()) g = std::gcd(g, e);
  if (!s.is_finite()) {
    g = std::gcd(g, s.period());
    for (Int n = s.threshold(); n < s.threshold() + s.period(); ++n)
      if (s.contains(n)) g = std::gcd(g, n);
  }
  return g;
}

bool is_subset(const EPS& a, const EPS& b) { return !first_not_in(a, b).has_value(); }

std::optional<Int> first_not_in(const EPS& a, const EPS& b) {
  const Int period = checked_lcm(a.period(), b.period());
  const Int end = checked_add(std::max(a.threshold(), b.threshold()), period);
  for (Int n = 1; n < end; ++n)
    if (a.contains(n) && !b.contains(n)) return n;
  return std::nullopt;
}

namespace {

void append_list(std::ostringstream& os, const std::vector<Int>& xs) {
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ']';
}

}  // namespace

std::string to_long_string(const EPS& s) {
  std::ostringstream os;
  os << "eps{explicit=";
  append_list(os, s.explicit_members());
  os << "; from=" << s.threshold() << "; period=" << s.period() << "; residues=";
  append_list(os, s.residues());
  os << '}';
  return os.str();
}

std::string to_string(const EPS& s) {
  const bool zero_tail = s.residues().size() == 1 && s.residues().front() == 0;
  if (s.explicit_members().empty() && zero_tail) {
    if (s.period() == 1) {
      if (s.threshold() == 1) return "N";
      return "N>=" + std::to_string(s.threshold());
    }
    if (s.threshold() == 1) return std::to_string(s.period()) + "N";
  }
  return to_long_string(s);
}

std::ostream& operator<<(std::ostream& os, const EPS& s) { return os << to_string(s); }

namespace {

class EpsParser {
 public:
  explicit EpsParser(std::string_view text) : text_(text) {}

  EPS parse() {
    EPS acc = term();
    skip_ws();
    while (!at_end()) {
      if (peek() == '|') {
        ++pos_;
      } else if (text_.substr(pos_, 3) == "\xE2\x88\xAA") {  // U+222A
        pos_ += 3;
      } else {
        fail("expected '|' or end of input");
      }
      acc = set_union(acc, term());
      skip_ws();
    }
    return acc;
  }

 private:
  EPS term() {
    skip_ws();
    if (text_.substr(pos_, 4) == "eps{") {
      pos_ += 4;
      return long_form();
    }
    if (!at_end() && peek() == '{') {
      ++pos_;
      auto xs = int_list('}');
      for (Int x : xs)
        if (x < 1) fail("set members must be positive");
      return EPS::finite(std::move(xs));
    }
    if (!at_end() && peek() == 'N') {
      ++pos_;
      if (text_.substr(pos_, 2) == ">=") {
        pos_ += 2;
        const Int r = integer();
        if (r < 1) fail("N>=r requires r >= 1");
        return EPS::at_least(r);
      }
      if (!at_end() && peek() == '>') {
        ++pos_;
        const Int r = integer();
        if (r < 0) fail("N>r requires r >= 0");
        return EPS::at_least(r + 1);
      }
      return EPS::naturals();
    }
    const Int d = integer();
    skip_ws();
    if (at_end() || peek() != 'N') fail("expected 'N' after multiplier");
    ++pos_;
    if (d < 1) fail("dN requires d >= 1");
    return multiples(d);
  }

  EPS long_form() {
    RawEps raw;
    keyword("explicit");
    expect('[');
    raw.explicit_members = int_list(']');
    expect(';');
    keyword("from");
    raw.threshold = integer();
    expect(';');
    keyword("period");
    raw.period = integer();
    expect(';');
    keyword("residues");
    expect('[');
    raw.residues = int_list(']');
    expect('}');
    try {
      return canonicalize(raw);
    } catch (const ValidationError& e) {
      throw ParseError(e.issues());
    }
  }

  void keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) != kw) fail("expected '" + std::string(kw) + "'");
    pos_ += kw.size();
    expect('=');
  }

  std::vector<Int> int_list(char close) {
    std::vector<Int> xs;
    skip_ws();
    if (!at_end() && peek() == close) {
      ++pos_;
      return xs;
    }
    for (;;) {
      xs.push_back(integer());
      skip_ws();
      if (at_end()) fail("unterminated list");
      if (peek() == close) {
        ++pos_;
        break;
      }
      expect(',');
    }
    for (std::size_t i = 1; i < xs.size(); ++i)
      if (xs[i] <= xs[i - 1]) fail("list must be strictly increasing");
    return xs;
  }

  Int integer() {
    skip_ws();
    Int v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError({"set expression '" + std::string(text_) + "' at offset " +
                      std::to_string(pos_) + ": " + what});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EPS parse_eps(std::string_view text) { return EpsParser(text).parse(); }

}  // namespace degset
