#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "degset/blowup.hpp"
#include "degset/catalog.hpp"
#include "degset/errors.hpp"
#include "degset/finitefield.hpp"
#include "degset/io.hpp"
#include "degset/polynomial.hpp"
#include "degset/semigroup.hpp"

using namespace degset;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ResultFormat format_of(const std::string& s) { return s == "json" ? ResultFormat::Json : ResultFormat::Text; }

// "finite" alone means q = 7, the catalog default.
ResidueField field_of(const std::string& s) {
  if (s == "finite") return ResidueField::finite(7);
  return parse_residue_field(s);
}

FieldKind kind_of(const std::string& s) { return field_of(s).kind; }

void print_issues(const std::vector<std::string>& issues) {
  for (const auto& i : issues) std::cerr << "  " << i << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree sets of curves over Henselian fields"};
  app.require_subcommand(1);
  std::function<void()> run;
  auto bind = [&](CLI::App* sub, std::function<void()> f) { sub->callback([&run, f] { run = f; }); };

  // semigroup
  std::vector<Int> gens;
  std::string mode = "positive";
  auto* sg = app.add_subcommand("semigroup", "positive combinations or monoid of a multiset of generators");
  sg->add_option("--gens", gens, "generators, e.g. 2,3")->required()->delimiter(',');
  sg->add_option("--mode", mode)->check(CLI::IsMember({"positive", "monoid"}));
  bind(sg, [&] {
    GeneratorMultiset g(gens);
    std::cout << to_string(mode == "positive" ? positive_combinations(g) : monoid_closure(g)) << "\n";
  });

  // config commands
  std::string file, format = "text";
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "config file, or - for standard input")->required();
  };
  auto* ds = app.add_subcommand("degset", "degree set of the generic fiber");
  add_file(ds);
  ds->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  bind(ds, [&] { std::cout << render_result(degree_set(parse_config(slurp(file))), format_of(format)) << "\n"; });

  auto* ix = app.add_subcommand("index", "index of the generic fiber");
  add_file(ix);
  bind(ix, [&] { std::cout << index_of(parse_config(slurp(file))) << "\n"; });

  auto* va = app.add_subcommand("validate", "check a config and list every problem");
  add_file(va);
  bind(va, [&] {
    parse_config(slurp(file));
    std::cout << "ok\n";
  });

  // local calculus
  std::string shape, field = "infinite";
  Int depth = 6, degree = 1;
  bool prime = false, report = false;
  auto* ms = app.add_subcommand("mset", "M(x) (or M'(x)) of a local configuration");
  ms->add_option("--shape", shape, "node:m=2,split | node:m=2,inert | tangential2:2,3 | transverse:2,3[,5] | interior:4")
      ->required();
  ms->add_option("--max-depth", depth)->check(CLI::PositiveNumber);
  ms->add_option("--degree", degree, "degree of the point over the residue field")->check(CLI::PositiveNumber);
  ms->add_option("--field", field, "algebraically-closed | infinite | finite(q=Q)");
  ms->add_flag("--prime", prime, "M' instead of M");
  ms->add_flag("--report", report, "M, M', N and the containments between them");
  bind(ms, [&] {
    LocalConfig c{degree, parse_shape(shape)};
    if (report) {
      auto r = containment_report(c, depth, kind_of(field));
      auto w = [](const std::optional<Int>& x) { return x ? std::to_string(*x) : std::string("none"); };
      std::cout << "M  = " << to_string(r.M) << " certified=" << std::boolalpha << r.M_certified << "\n"
                << "M' = " << to_string(r.M_prime) << " certified=" << r.M_prime_certified << "\n"
                << "N  = " << to_string(r.N) << "\n"
                << "M in M': " << r.M_in_M_prime << ", M' in N: " << r.M_prime_in_N << "\n"
                << "least of M'\\M: " << w(r.witness_M_prime_not_M) << ", N\\M': " << w(r.witness_N_not_M_prime)
                << ", N\\M: " << w(r.witness_N_not_M) << "\n";
      return;
    }
    auto r = prime ? enumerate_M_prime(c, depth) : enumerate_M(c, kind_of(field), depth);
    std::cout << to_string(r.set) << " certified=" << std::boolalpha << r.certified << "\n";
  });

  // finite fields
  Int q = 0, g = 0, p = 0;
  std::vector<std::string> counts;
  std::string poly;
  auto* ffq = app.add_subcommand("ffq", "finite field helpers");
  ffq->require_subcommand(1);
  auto* wb = ffq->add_subcommand("weil-bound", "least d from which every degree has a closed point");
  wb->add_option("--q", q)->required();
  wb->add_option("--g", g)->required();
  bind(wb, [&] { std::cout << ff::weil_min_degree(q, g) << "\n"; });
  auto* fd = ffq->add_subcommand("degset", "degree set of a curve from its point counts");
  fd->add_option("--q", q)->required();
  fd->add_option("--g", g)->required();
  fd->add_option("--counts", counts, "N_1,...,N_g")->delimiter(',');
  bind(fd, [&] {
    ff::CurveCountData d{q, g, {}};
    for (const auto& c : counts) d.counts.emplace_back(ff::BigInt(c));
    std::cout << to_string(ff::curve_degree_set(d)) << "\n";
  });
  auto* fx = ffq->add_subcommand("factor-degrees", "degrees of the irreducible factors of a squarefree f over F_p");
  fx->add_option("--p", p)->required();
  fx->add_option("--f", poly, "x^6+2x^3+2, or coefficients highest first")->required();
  bind(fx, [&] {
    auto degs = ff::factor_degrees(ff::parse_polynomial(p, poly));
    for (std::size_t i = 0; i < degs.size(); ++i) std::cout << (i ? "," : "") << degs[i];
    std::cout << "\n";
  });

  // catalog
  std::string type;
  bool swap = false, pointless = false;
  std::string cat_field = "finite";
  auto* cat = app.add_subcommand("catalog", "genus 2 reduction-type fixtures");
  cat->require_subcommand(1);
  auto* cl = cat->add_subcommand("list", "available fixtures");
  bind(cl, [&] {
    for (const auto& f : fixture_list())
      std::cout << f.label << (f.has_swap ? " [--swap]" : "") << "  " << f.summary << "\n";
  });
  auto fixture_opts = [&](CLI::App* sub) {
    sub->add_option("--type", type)->required();
    sub->add_flag("--swap", swap, "conjugate pair of components");
    sub->add_flag("--pointless", pointless, "smooth-genus-2 without rational points");
    sub->add_option("--field", cat_field, "finite | finite(q=Q) | infinite | algebraically-closed");
  };
  auto fixture = [&] { return build_fixture(type, {swap, pointless}, field_of(cat_field)); };
  auto* cd = cat->add_subcommand("degset", "degree set of a fixture");
  fixture_opts(cd);
  cd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  bind(cd, [&] {
    auto cfg = fixture();
    std::cout << render_result(degree_set(cfg), format_of(format)) << "\nindex " << index_of(cfg) << "\n";
  });
  auto* cc = cat->add_subcommand("classify", "genus 2 class of a fixture");
  fixture_opts(cc);
  bind(cc, [&] {
    auto c = genus2_classify(fixture());
    std::cout << to_string(c.tag) << "  " << to_string(c.set) << "\n";
    for (const auto& w : c.warnings) std::cerr << "warning: " << w << "\n";
  });
  auto* cs = cat->add_subcommand("show", "print a fixture as a config document");
  fixture_opts(cs);
  bind(cs, [&] { std::cout << render_config(fixture()); });

  // hyperelliptic family
  std::vector<Int> degrees;
  bool show = false;
  std::string hfield = "infinite";
  auto* he = app.add_subcommand("hyperelliptic", "y^2 = pi f(x) with f squarefree of even degree");
  auto* deg_opt = he->add_option("--degrees", degrees, "degrees of the irreducible factors of f")->delimiter(',');
  auto* p_opt = he->add_option("--p", p, "residue characteristic, with --f");
  auto* f_opt = he->add_option("--f", poly, "f over F_p");
  deg_opt->excludes(p_opt)->excludes(f_opt);
  p_opt->needs(f_opt);
  f_opt->needs(p_opt);
  he->add_option("--field", hfield, "residue field for --degrees");
  he->add_flag("--show", show, "print the config instead of the degree set");
  bind(he, [&] {
    if (degrees.empty() && poly.empty()) throw UsageError("give --degrees or --p with --f");
    auto cfg = degrees.empty() ? hyperelliptic_family(ff::parse_polynomial(p, poly))
                               : hyperelliptic_family(degrees, field_of(hfield));
    if (show)
      std::cout << render_config(cfg);
    else
      std::cout << to_string(degree_set(cfg)) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: invalid input\n";
    print_issues(e.issues());
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
