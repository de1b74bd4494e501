#include "degset/io.hpp"

#include <charconv>
#include <regex>
#include <set>
#include <sstream>

#include "degset/errors.hpp"
#include "degset/int_math.hpp"
#include "json.hpp"

namespace degset {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

Int to_int(std::string_view s) {
  Int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError({"bad integer '" + std::string(s) + "'"});
  return v;
}

// Collects problems with their location instead of stopping at the first.
class Reader {
 public:
  std::vector<std::string> issues;

  void fail(const std::string& where, const std::string& what) { issues.push_back(where + ": " + what); }

  bool object(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) {
      fail(where, "expected an object");
      return false;
    }
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j.begin(); it != j.end(); ++it)
      if (!ok.count(it.key())) fail(where + "/" + it.key(), "unknown key '" + it.key() + "'");
    return true;
  }

  std::optional<Int> integer(const json& j, const std::string& where, Int lo) {
    if (!j.is_number_integer()) {
      fail(where, "expected an integer");
      return std::nullopt;
    }
    Int v = j.get<Int>();
    if (v < lo) {
      fail(where, "must be >= " + std::to_string(lo));
      return std::nullopt;
    }
    return v;
  }

  std::optional<std::string> string(const json& j, const std::string& where) {
    if (!j.is_string()) {
      fail(where, "expected a string");
      return std::nullopt;
    }
    return j.get<std::string>();
  }

  std::optional<bool> boolean(const json& j, const std::string& where) {
    if (!j.is_boolean()) {
      fail(where, "expected true or false");
      return std::nullopt;
    }
    return j.get<bool>();
  }

  template <class F>
  auto guard(const std::string& where, F&& f) -> std::optional<decltype(f())> {
    try {
      return f();
    } catch (const Error& e) {
      fail(where, e.what());
    } catch (const json::exception& e) {
      fail(where, e.what());
    }
    return std::nullopt;
  }

  std::optional<EPS> eps(const json& j, const std::string& where) {
    if (j.is_object()) {
      if (!object(j, where, {"explicit", "from", "period", "residues"})) return std::nullopt;
      return guard(where, [&] {
        RawEps raw;
        raw.threshold = j.at("from").get<Int>();
        raw.explicit_members = j.at("explicit").get<std::vector<Int>>();
        raw.period = j.at("period").get<Int>();
        raw.residues = j.at("residues").get<std::vector<Int>>();
        return canonicalize(raw);
      });
    }
    auto s = string(j, where);
    if (!s) return std::nullopt;
    return guard(where, [&] { return parse_eps(*s); });
  }

  std::optional<ff::CurveCountData> counts(const json& j, const std::string& where) {
    if (j.is_string()) return guard(where, [&] { return parse_curve_counts(j.get<std::string>()); });
    if (!object(j, where, {"q", "genus", "counts"})) return std::nullopt;
    ff::CurveCountData d;
    bool good = true;
    auto q = j.contains("q") ? integer(j["q"], where + "/q", 2) : (fail(where, "missing key 'q'"), std::nullopt);
    auto g = j.contains("genus") ? integer(j["genus"], where + "/genus", 0) : std::optional<Int>(0);
    good = q && g;
    if (good) {
      d.q = *q;
      d.genus = *g;
    }
    if (j.contains("counts")) {
      const auto& c = j["counts"];
      if (!c.is_array()) {
        fail(where + "/counts", "expected a list");
        return std::nullopt;
      }
      for (std::size_t i = 0; i < c.size(); ++i) {
        const std::string at = where + "/counts/" + std::to_string(i);
        if (c[i].is_number_integer())
          d.counts.emplace_back(c[i].get<Int>());
        else if (c[i].is_string())
          try {
            d.counts.emplace_back(ff::BigInt(c[i].get<std::string>()));
          } catch (const std::exception&) {
            fail(at, "bad integer");
            good = false;
          }
        else {
          fail(at, "expected an integer");
          good = false;
        }
      }
    }
    if (!good) return std::nullopt;
    return d;
  }

  std::optional<ComponentRecord> component(const json& j, const std::string& where) {
    if (!object(j, where,
                {"id", "multiplicity", "constant_field_degree", "degree_set", "interior", "arithmetic_genus"}))
      return std::nullopt;
    ComponentRecord e;
    bool good = true;
    auto req = [&](const char* key) {
      if (j.contains(key)) return true;
      fail(where, std::string("missing key '") + key + "'");
      good = false;
      return false;
    };
    if (req("id")) {
      auto s = string(j["id"], where + "/id");
      if (s) e.id = *s; else good = false;
    }
    if (req("multiplicity")) {
      auto m = integer(j["multiplicity"], where + "/multiplicity", 1);
      if (m) e.multiplicity = *m; else good = false;
    }
    if (j.contains("constant_field_degree")) {
      auto c = integer(j["constant_field_degree"], where + "/constant_field_degree", 1);
      if (c) e.constant_field_degree = *c; else good = false;
    }
    if (j.contains("arithmetic_genus")) {
      auto g = integer(j["arithmetic_genus"], where + "/arithmetic_genus", 0);
      if (g) e.arithmetic_genus = *g; else good = false;
    }
    bool has_counts = false;
    if (j.contains("degree_set")) {
      const auto& d = j["degree_set"];
      const std::string at = where + "/degree_set";
      if (d.is_string() && trim(d.get<std::string>()) == "all") {
        e.degree_set = AllDegrees{};
      } else if (d.is_object() || (d.is_string() && trim(d.get<std::string>()).rfind("finite-field", 0) == 0)) {
        auto c = counts(d, at);
        if (c) e.degree_set = *c; else good = false;
        has_counts = true;
      } else {
        auto s = eps(d, at);
        if (s) e.degree_set = *s; else good = false;
      }
    }
    e.interior = has_counts ? InteriorData{AutoInterior{}} : InteriorData{SameAsDegreeSet{}};
    if (j.contains("interior")) {
      const auto& i = j["interior"];
      const std::string at = where + "/interior";
      if (i.is_string() && trim(i.get<std::string>()) == "same")
        e.interior = SameAsDegreeSet{};
      else if (i.is_string() && trim(i.get<std::string>()) == "auto")
        e.interior = AutoInterior{};
      else if (auto s = eps(i, at))
        e.interior = *s;
      else
        good = false;
    }
    if (!good) return std::nullopt;
    return e;
  }

  std::optional<MarkedPoint> point(const json& j, const std::string& where) {
    if (!object(j, where, {"id", "degree", "branches", "snc", "contribution"})) return std::nullopt;
    MarkedPoint x;
    bool good = true;
    if (!j.contains("id")) {
      fail(where, "missing key 'id'");
      good = false;
    } else if (auto s = string(j["id"], where + "/id")) {
      x.id = *s;
    } else {
      good = false;
    }
    if (j.contains("degree")) {
      auto d = integer(j["degree"], where + "/degree", 1);
      if (d) x.degree = *d; else good = false;
    }
    if (j.contains("snc")) {
      auto b = boolean(j["snc"], where + "/snc");
      if (b) x.snc = *b; else good = false;
    }
    if (j.contains("contribution")) {
      auto s = eps(j["contribution"], where + "/contribution");
      if (s) x.contribution = *s; else good = false;
    }
    if (!j.contains("branches")) {
      fail(where, "missing key 'branches'");
      return std::nullopt;
    }
    const auto& bs = j["branches"];
    if (!bs.is_array()) {
      fail(where + "/branches", "expected a list");
      return std::nullopt;
    }
    for (std::size_t i = 0; i < bs.size(); ++i) {
      const std::string at = where + "/branches/" + std::to_string(i);
      const auto& b = bs[i];
      if (b.is_string()) {
        x.branches.push_back({b.get<std::string>(), 1});
        continue;
      }
      if (!object(b, at, {"component", "count"})) {
        good = false;
        continue;
      }
      Branch br;
      if (!b.contains("component")) {
        fail(at, "missing key 'component'");
        good = false;
      } else if (auto s = string(b["component"], at + "/component")) {
        br.component = *s;
      } else {
        good = false;
      }
      if (b.contains("count")) {
        auto c = integer(b["count"], at + "/count", 1);
        if (c) br.count = *c; else good = false;
      }
      x.branches.push_back(br);
    }
    if (!good) return std::nullopt;
    return x;
  }

  std::optional<ResidueField> field(const json& j, const std::string& where) {
    if (j.is_string()) return guard(where, [&] { return parse_residue_field(j.get<std::string>()); });
    if (!object(j, where, {"kind", "q"})) return std::nullopt;
    if (!j.contains("kind")) {
      fail(where, "missing key 'kind'");
      return std::nullopt;
    }
    auto kind = string(j["kind"], where + "/kind");
    if (!kind) return std::nullopt;
    if (*kind == "finite") {
      if (!j.contains("q")) {
        fail(where, "missing key 'q'");
        return std::nullopt;
      }
      auto q = integer(j["q"], where + "/q", 2);
      if (!q) return std::nullopt;
      return guard(where, [&] { return parse_residue_field("finite(q=" + std::to_string(*q) + ")"); });
    }
    if (j.contains("q")) fail(where + "/q", "only a finite field has q");
    return guard(where + "/kind", [&] { return parse_residue_field(*kind); });
  }
};

json eps_json(const EPS& s) {
  return json{{"explicit", s.explicit_members()}, {"from", s.threshold()}, {"period", s.period()},
              {"residues", s.residues()}};
}

}  // namespace

std::string to_string(const ff::CurveCountData& d) {
  std::string out = "finite-field(q=" + std::to_string(d.q) + ",g=" + std::to_string(d.genus) + ",counts=[";
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    if (i) out += ",";
    out += d.counts[i].str();
  }
  return out + "])";
}

ff::CurveCountData parse_curve_counts(std::string_view text) {
  static const std::regex re(
      R"(\s*finite-field\(\s*q\s*=\s*(\d+)\s*,\s*g\s*=\s*(\d+)\s*(?:,\s*counts\s*=\s*\[([\d\s,]*)\]\s*)?\)\s*)");
  std::cmatch m;
  if (!std::regex_match(text.data(), text.data() + text.size(), m, re))
    throw ParseError({"expected finite-field(q=Q,g=G,counts=[N1,...]), got '" + std::string(text) + "'"});
  ff::CurveCountData d;
  d.q = to_int(m.str(1));
  d.genus = to_int(m.str(2));
  if (d.q < 2) throw ParseError({"q must be >= 2"});
  std::stringstream ss(m.str(3));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ParseError({"empty entry in counts"});
    d.counts.emplace_back(ff::BigInt(item));
  }
  return d;
}

std::string to_string(const ResidueField& f) {
  switch (f.kind) {
    case FieldKind::AlgebraicallyClosed: return "algebraically-closed";
    case FieldKind::Finite: return "finite(q=" + std::to_string(f.q) + ")";
    case FieldKind::InfiniteOther: return "infinite";
  }
  return {};
}

ResidueField parse_residue_field(std::string_view text) {
  const std::string t = trim(text);
  if (t == "algebraically-closed" || t == "algebraically_closed") return ResidueField::algebraically_closed();
  if (t == "infinite" || t == "infinite-other" || t == "infinite_other") return ResidueField::infinite_other();
  static const std::regex re(R"(finite\(\s*q\s*=\s*(\d+)\s*\))");
  std::smatch m;
  if (std::regex_match(t, m, re)) {
    Int q = to_int(m.str(1));
    if (!prime_power_base(q)) throw ParseError({"q = " + m.str(1) + " is not a prime power"});
    return ResidueField::finite(q);
  }
  throw ParseError({"unknown residue field '" + t + "' (algebraically-closed, infinite, finite(q=Q))"});
}

SpecialFiberConfig parse_config(std::string_view text, bool check) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError({"byte " + std::to_string(e.byte) + ": syntax error: " + e.what()});
  }
  Reader r;
  SpecialFiberConfig cfg;
  if (!r.object(doc, "/", {"residue_field", "components", "points", "metadata"})) throw ParseError(r.issues);

  if (doc.contains("residue_field")) {
    if (auto f = r.field(doc["residue_field"], "/residue_field")) cfg.residue_field = *f;
  } else {
    r.fail("/", "missing key 'residue_field'");
  }

  if (!doc.contains("components")) {
    r.fail("/", "missing key 'components'");
  } else if (!doc["components"].is_array()) {
    r.fail("/components", "expected a list");
  } else {
    const auto& cs = doc["components"];
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (auto e = r.component(cs[i], "/components/" + std::to_string(i))) cfg.components.push_back(*e);
  }

  if (doc.contains("points")) {
    if (!doc["points"].is_array()) {
      r.fail("/points", "expected a list");
    } else {
      const auto& ps = doc["points"];
      for (std::size_t i = 0; i < ps.size(); ++i)
        if (auto x = r.point(ps[i], "/points/" + std::to_string(i))) cfg.points.push_back(*x);
    }
  }

  if (doc.contains("metadata")) {
    const auto& m = doc["metadata"];
    if (r.object(m, "/metadata", {"genus", "minimal", "hyperelliptic", "characteristic"})) {
      if (m.contains("genus"))
        if (auto g = r.integer(m["genus"], "/metadata/genus", 0)) cfg.metadata.genus = *g;
      if (m.contains("minimal"))
        if (auto b = r.boolean(m["minimal"], "/metadata/minimal")) cfg.metadata.minimal = *b;
      if (m.contains("hyperelliptic"))
        if (auto b = r.boolean(m["hyperelliptic"], "/metadata/hyperelliptic")) cfg.metadata.hyperelliptic = *b;
      if (m.contains("characteristic"))
        if (auto c = r.integer(m["characteristic"], "/metadata/characteristic", 0)) cfg.metadata.characteristic = *c;
    }
  }

  if (!r.issues.empty()) throw ParseError(r.issues);
  if (check) {
    auto issues = validate(cfg);
    if (!issues.empty()) throw ValidationError(issues);
  }
  return cfg;
}

std::string render_config(const SpecialFiberConfig& cfg) {
  json doc;
  doc["residue_field"] = to_string(cfg.residue_field);
  json comps = json::array();
  for (const auto& e : cfg.components) {
    json c;
    c["id"] = e.id;
    c["multiplicity"] = e.multiplicity;
    if (e.constant_field_degree) c["constant_field_degree"] = *e.constant_field_degree;
    std::visit(
        [&](const auto& d) {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, AllDegrees>) c["degree_set"] = "all";
          else if constexpr (std::is_same_v<T, EPS>) c["degree_set"] = to_string(d);
          else c["degree_set"] = to_string(d);
        },
        e.degree_set);
    std::visit(
        [&](const auto& i) {
          using T = std::decay_t<decltype(i)>;
          if constexpr (std::is_same_v<T, SameAsDegreeSet>) c["interior"] = "same";
          else if constexpr (std::is_same_v<T, AutoInterior>) c["interior"] = "auto";
          else c["interior"] = to_string(i);
        },
        e.interior);
    if (e.arithmetic_genus) c["arithmetic_genus"] = *e.arithmetic_genus;
    comps.push_back(c);
  }
  doc["components"] = comps;
  json pts = json::array();
  for (const auto& x : cfg.points) {
    json p;
    p["id"] = x.id;
    p["degree"] = x.degree;
    json bs = json::array();
    for (const auto& b : x.branches) {
      if (b.count == 1) bs.push_back(b.component);
      else bs.push_back(json{{"component", b.component}, {"count", b.count}});
    }
    p["branches"] = bs;
    if (!x.snc) p["snc"] = false;
    if (x.contribution) p["contribution"] = to_string(*x.contribution);
    pts.push_back(p);
  }
  doc["points"] = pts;
  json meta = json::object();
  if (cfg.metadata.genus) meta["genus"] = *cfg.metadata.genus;
  if (cfg.metadata.minimal) meta["minimal"] = true;
  if (cfg.metadata.hyperelliptic) meta["hyperelliptic"] = true;
  if (cfg.metadata.characteristic) meta["characteristic"] = *cfg.metadata.characteristic;
  if (!meta.empty()) doc["metadata"] = meta;
  return doc.dump(2) + "\n";
}

std::string render_result(const EPS& s, ResultFormat format) {
  if (format == ResultFormat::Text) return to_string(s);
  return eps_json(s).dump();
}

}  // namespace degset
