#include "degset/blowup.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "degset/errors.hpp"
#include "degset/int_math.hpp"
#include "degset/semigroup.hpp"

namespace degset {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void positive(Int m, const char* what) {
  if (m < 1) throw DomainError(std::string(what) + " multiplicity must be >= 1");
}

// Shapes compared up to the order of transverse branches.
Shape normalized(Shape s) {
  if (auto* t = std::get_if<Transverse>(&s)) std::sort(t->m.begin(), t->m.end());
  return s;
}

std::string shape_key(const Shape& s) { return to_string(normalized(s)); }

struct SearchResult {
  EPS set;
  bool exhausted = false;
};

// Breadth-first over blow-up sequences. A child that is already an snc point
// y is not expanded: there M(y) = M'(y) = N(y), so its whole subtree
// contributes deg(y) N(y) (or N(y) when degrees are ignored). Interior
// points of an exceptional line of multiplicity e only give multiples of
// e * (their degree), which the blow-up producing the line already covers.
SearchResult search(const Shape& root, Int max_depth, bool with_degrees) {
  SearchResult out;
  std::vector<std::pair<Shape, Int>> frontier{{normalized(root), 1}};
  for (Int level = 1; level <= max_depth && !frontier.empty(); ++level) {
    std::vector<std::pair<Shape, Int>> next;
    std::set<std::pair<std::string, Int>> seen;
    for (const auto& [shape, delta] : frontier) {
      const BlowupStep step = blow_up(LocalConfig{1, shape});
      out.set = set_union(out.set, multiples(checked_mul(delta, step.exceptional_multiplicity)));
      for (const auto& child : step.children) {
        const Int d = with_degrees ? checked_mul(delta, child.degree) : 1;
        if (is_snc(child.shape)) {
          out.set = set_union(out.set, scale(d, local_N(child.shape)));
        } else if (seen.insert({shape_key(child.shape), d}).second) {
          next.emplace_back(normalized(child.shape), d);
        }
      }
    }
    frontier = std::move(next);
  }
  out.exhausted = frontier.empty();
  return out;
}

std::optional<MResult> closed_form(const Shape& s, bool with_degrees) {
  if (is_snc(s)) return MResult{local_N(s), true};
  if (const auto* n = std::get_if<Node>(&s)) {
    const EPS above_one = scale(n->m, EPS::at_least(2));
    if (with_degrees && n->tangents == Tangents::Inert) return MResult{multiples(2 * n->m), true};
    return MResult{above_one, true};
  }
  return std::nullopt;
}

}  // namespace

bool is_snc(const Shape& s) {
  if (std::holds_alternative<Interior>(s)) return true;
  if (const auto* t = std::get_if<Transverse>(&s)) return t->m.size() == 2;
  return false;
}

void check_shape(const LocalConfig& c) {
  if (c.degree < 1) throw DomainError("point degree must be >= 1");
  std::visit(overloaded{
                 [](const Interior& s) { positive(s.m, "interior"); },
                 [](const Transverse& s) {
                   if (s.m.size() < 2 || s.m.size() > 3)
                     throw DomainError("transverse points need 2 or 3 branches, got " + std::to_string(s.m.size()));
                   for (Int m : s.m) positive(m, "transverse");
                 },
                 [](const Tangential2& s) {
                   positive(s.m1, "tangential");
                   positive(s.m2, "tangential");
                 },
                 [](const Node& s) { positive(s.m, "node"); },
             },
             c.shape);
}

BlowupStep blow_up(const LocalConfig& c) {
  check_shape(c);
  BlowupStep step;
  step.interior_degrees = EPS::naturals();
  std::visit(overloaded{
                 [&](const Interior& s) {
                   step.exceptional_multiplicity = s.m;
                   step.children.push_back({1, Transverse{{s.m, s.m}}});
                 },
                 [&](const Transverse& s) {
                   Int e = 0;
                   for (Int m : s.m) e = checked_add(e, m);
                   step.exceptional_multiplicity = e;
                   for (Int m : s.m) step.children.push_back({1, Transverse{{m, e}}});
                 },
                 [&](const Tangential2& s) {
                   const Int e = checked_add(s.m1, s.m2);
                   step.exceptional_multiplicity = e;
                   step.children.push_back({1, Transverse{{s.m1, s.m2, e}}});
                 },
                 [&](const Node& s) {
                   const Int e = checked_mul(2, s.m);
                   step.exceptional_multiplicity = e;
                   if (s.tangents == Tangents::Split) {
                     step.children.push_back({1, Transverse{{s.m, e}}});
                     step.children.push_back({1, Transverse{{s.m, e}}});
                   } else {
                     step.children.push_back({2, Transverse{{s.m, e}}});
                   }
                 },
             },
             c.shape);
  return step;
}

EPS local_N(const Shape& s) {
  return std::visit(overloaded{
                        [](const Interior& x) { return multiples(x.m); },
                        [](const Transverse& x) { return positive_combinations(GeneratorMultiset(x.m)); },
                        [](const Tangential2& x) { return positive_combinations(GeneratorMultiset({x.m1, x.m2})); },
                        [](const Node& x) { return multiples(x.m); },
                    },
                    s);
}

MResult enumerate_M(const LocalConfig& c, FieldKind field, Int max_depth) {
  check_shape(c);
  if (max_depth < 1) throw DomainError("max depth must be >= 1");
  if (const auto* n = std::get_if<Node>(&c.shape);
      n && n->tangents == Tangents::Inert && field == FieldKind::AlgebraicallyClosed)
    throw DomainError("a node over an algebraically closed field has rational tangents");
  if (auto cf = closed_form(c.shape, true)) return *cf;
  return {search(c.shape, max_depth, true).set, false};
}

MResult enumerate_M_prime(const LocalConfig& c, Int max_depth) {
  check_shape(c);
  if (max_depth < 1) throw DomainError("max depth must be >= 1");
  if (auto cf = closed_form(c.shape, false)) return *cf;
  return {search(c.shape, max_depth, false).set, false};
}

ContainmentReport containment_report(const LocalConfig& c, Int max_depth, FieldKind field) {
  ContainmentReport r;
  auto m = enumerate_M(c, field, max_depth);
  auto mp = enumerate_M_prime(c, max_depth);
  r.M = m.set;
  r.M_certified = m.certified;
  r.M_prime = mp.set;
  r.M_prime_certified = mp.certified;
  r.N = local_N(c.shape);
  r.M_in_M_prime = is_subset(r.M, r.M_prime);
  r.M_prime_in_N = is_subset(r.M_prime, r.N);
  r.witness_M_prime_not_M = first_not_in(r.M_prime, r.M);
  r.witness_N_not_M_prime = first_not_in(r.N, r.M_prime);
  r.witness_N_not_M = first_not_in(r.N, r.M);
  return r;
}

std::string to_string(const Shape& s) {
  auto join = [](const std::vector<Int>& v) {
    std::string out;
    for (Int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
  };
  return std::visit(overloaded{
                        [](const Interior& x) { return "interior:" + std::to_string(x.m); },
                        [&](const Transverse& x) { return "transverse:" + join(x.m); },
                        [](const Tangential2& x) {
                          return "tangential2:" + std::to_string(x.m1) + "," + std::to_string(x.m2);
                        },
                        [](const Node& x) {
                          return "node:m=" + std::to_string(x.m) +
                                 (x.tangents == Tangents::Split ? ",split" : ",inert");
                        },
                    },
                    s);
}

Shape parse_shape(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  auto fail = [&](const std::string& why) -> Shape {
    throw ParseError({"shape '" + std::string(text) + "': " + why});
  };
  const auto colon = t.find(':');
  if (colon == std::string::npos) return fail("expected kind:args");
  const std::string kind = t.substr(0, colon);
  std::vector<std::string> args;
  {
    std::string cur;
    for (char ch : t.substr(colon + 1)) {
      if (ch == ',') {
        args.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    args.push_back(cur);
  }
  auto num = [&](std::string a) -> Int {
    if (a.rfind("m=", 0) == 0) a = a.substr(2);
    if (a.empty() || !std::all_of(a.begin(), a.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
        a.size() > 12)
      fail("bad multiplicity '" + a + "'");
    return std::stoll(a);
  };
  Shape s;
  if (kind == "interior") {
    if (args.size() != 1) return fail("interior takes one multiplicity");
    s = Interior{num(args[0])};
  } else if (kind == "transverse") {
    Transverse x;
    for (const auto& a : args) x.m.push_back(num(a));
    s = x;
  } else if (kind == "tangential2" || kind == "tangential") {
    if (args.size() != 2) return fail("tangential2 takes two multiplicities");
    s = Tangential2{num(args[0]), num(args[1])};
  } else if (kind == "node") {
    Node n;
    if (args.empty() || args.size() > 2) return fail("node takes m and split|inert");
    n.m = num(args[0]);
    if (args.size() == 2) {
      if (args[1] == "split")
        n.tangents = Tangents::Split;
      else if (args[1] == "inert")
        n.tangents = Tangents::Inert;
      else
        return fail("node tangents must be split or inert");
    }
    s = n;
  } else {
    return fail("unknown kind '" + kind + "' (interior, transverse, tangential2, node)");
  }
  try {
    check_shape(LocalConfig{1, s});
  } catch (const DomainError& e) {
    return fail(e.what());
  }
  return s;
}

}  // namespace degset
