#include "quadcomp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <functional>
#include <sstream>
#include <variant>

#include "quadcomp/binomial_det.hpp"
#include "quadcomp/decomposition.hpp"
#include "quadcomp/dickson.hpp"
#include "quadcomp/diophantine.hpp"
#include "quadcomp/errors.hpp"
#include "quadcomp/poly_core.hpp"
#include "quadcomp/poly_io.hpp"
#include "quadcomp/standard_pairs.hpp"

namespace quadcomp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  bool include_trivial = false;
  bool switched = false;
  std::string poly;
  std::string second;
  std::string third;
  std::string theorem;
  std::string kind;
  std::vector<std::string> params;
  std::int64_t bound = 0;
  std::int64_t max_bound = kDefaultSearchLimit;
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string tag_text(const CaseTag& tag) {
  return std::visit(Overloaded{[](const case_tag::Cyclic& t) { return "Cyclic(d=" + std::to_string(t.d) + ")"; },
                               [](const case_tag::CaseFour& t) { return "CaseFour(c=" + t.c.to_string() + ")"; },
                               [&](const auto&) { return case_name(tag); }},
                    tag);
}

Json tag_params(const CaseTag& tag) {
  Json params = Json::object();
  if (const auto* cyclic = std::get_if<case_tag::Cyclic>(&tag)) params["d"] = std::to_string(cyclic->d);
  if (const auto* four = std::get_if<case_tag::CaseFour>(&tag)) params["c"] = four->c.to_fraction_string();
  return params;
}

void print_decompositions(const std::vector<Decomposition>& ds, bool json, std::ostream& out) {
  if (json) {
    Json arr = Json::array();
    for (const auto& d : ds) {
      arr.push_back(
          Json{{"g", format_poly(d.g)}, {"h", format_poly(d.h)}, {"case", case_name(d.tag)}, {"params", tag_params(d.tag)}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  if (ds.empty()) {
    out << "no decompositions\n";
    return;
  }
  for (const auto& d : ds) out << "g = " << format_poly(d.g) << "; h = " << format_poly(d.h) << "; case = " << tag_text(d.tag) << '\n';
}

void print_verdict(const FinitenessVerdict& v, bool json, std::ostream& out) {
  if (json) {
    Json conditions = Json::array();
    for (const auto& c : v.conditions) conditions.push_back(Json{{"name", c.name}, {"ok", c.ok}});
    out << Json{{"status", status_name(v.status)}, {"conditions", conditions}}.dump(2) << '\n';
    return;
  }
  out << "status: " << status_name(v.status) << '\n';
  for (const auto& c : v.conditions) out << (c.ok ? "  [ok]   " : "  [FAIL] ") << c.name << '\n';
}

std::uint32_t parse_uint(const std::string& text, const char* what) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + text + "'",
                     static_cast<std::size_t>(ptr - text.data()));
  }
  return value;
}

std::vector<std::uint32_t> parse_sequence(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_uint(item, "sequence entry"));
  return out;
}

StandardPair pair_from_params(const std::string& kind, const std::vector<std::string>& p, bool switched) {
  auto need = [&](std::size_t n, const char* usage) {
    if (p.size() != n) throw ParseError(std::string("pair realize ") + kind + " expects " + usage, 0);
  };
  if (kind == "first") {
    need(4, "<m> <r> <a> <p>");
    return {pair_kind::First{parse_uint(p[0], "m"), parse_uint(p[1], "r"), Rational::parse(p[2]), parse_poly(p[3])},
            switched};
  }
  if (kind == "second") {
    need(3, "<a> <b> <p>");
    return {pair_kind::Second{Rational::parse(p[0]), Rational::parse(p[1]), parse_poly(p[2])}, switched};
  }
  if (kind == "third") {
    need(3, "<m> <n> <a>");
    return {pair_kind::Third{parse_uint(p[0], "m"), parse_uint(p[1], "n"), Rational::parse(p[2])}, switched};
  }
  if (kind == "fourth") {
    need(4, "<m> <n> <a> <b>");
    return {pair_kind::Fourth{parse_uint(p[0], "m"), parse_uint(p[1], "n"), Rational::parse(p[2]), Rational::parse(p[3])},
            switched};
  }
  if (kind == "fifth") {
    need(1, "<a>");
    return {pair_kind::Fifth{Rational::parse(p[0])}, switched};
  }
  throw ParseError("unknown standard pair kind '" + kind + "'", 0);
}

std::string pair_text(const StandardPair& pair) {
  std::ostringstream os;
  os << "kind = " << kind_name(pair) << ", switched = " << (pair.switched ? "true" : "false");
  std::visit(Overloaded{[&](const pair_kind::First& k) {
                          os << ", m = " << k.m << ", r = " << k.r << ", a = " << k.a << ", p = " << format_poly(k.p);
                        },
                        [&](const pair_kind::Second& k) {
                          os << ", a = " << k.a << ", b = " << k.b << ", p = " << format_poly(k.p);
                        },
                        [&](const pair_kind::Third& k) { os << ", m = " << k.m << ", n = " << k.n << ", a = " << k.a; },
                        [&](const pair_kind::Fourth& k) {
                          os << ", m = " << k.m << ", n = " << k.n << ", a = " << k.a << ", b = " << k.b;
                        },
                        [&](const pair_kind::Fifth& k) { os << ", a = " << k.a; }},
             pair.params);
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact decomposition and Diophantine toolkit for lacunary polynomials", "quadcomp"};
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, std::function<void()>>> actions;
  auto add = [&](const std::string& name, const std::string& description, std::function<void()> action) {
    CLI::App* sub = app.add_subcommand(name, description);
    actions.emplace_back(sub, std::move(action));
    return sub;
  };

  auto* decompose = add("decompose", "all decompositions f = g(h(x)) with 1 < deg h < deg f", [&] {
    const SparsePoly f = parse_poly(o.poly);
    auto ds = decompose_oracle(f);
    if (o.include_trivial) {
      auto trivial = trivial_decompositions(f);
      ds.insert(ds.end(), trivial.begin(), trivial.end());
      std::sort(ds.begin(), ds.end(), canonical_less);
    }
    print_decompositions(ds, o.json, out);
  });
  decompose->add_option("poly", o.poly, "polynomial in x")->required();
  decompose->add_flag("--include-trivial", o.include_trivial, "also list the trivial decompositions");
  decompose->add_flag("--json", o.json, "JSON output");

  auto* classify = add("classify", "decompositions of a quadrinomial from its case conditions", [&] {
    print_decompositions(classify_quadrinomial(Quadrinomial::from_poly(parse_poly(o.poly))), o.json, out);
  });
  classify->add_option("poly", o.poly, "quadrinomial A x^n1 + B x^n2 + C x^n3 + D")->required();
  classify->add_flag("--json", o.json, "JSON output");

  auto* dickson_cmd = add("dickson", "Dickson polynomial D_n(x, a)", [&] {
    out << format_poly(dickson({parse_uint(o.poly, "n"), Rational::parse(o.second)})) << '\n';
  });
  dickson_cmd->add_option("n", o.poly, "degree")->required();
  dickson_cmd->add_option("a", o.second, "parameter")->required();

  auto* dmatch = add("dickson-match", "find u, v, gamma with D_n(x, gamma) = f(u x + v)", [&] {
    const auto m = dickson_match(parse_poly(o.poly));
    if (!m) {
      out << "no match\n";
      return;
    }
    out << "u = " << m->u << ", v = " << m->v << ", gamma = " << m->gamma;
    if (m->gamma_zero) out << " (pure power)";
    out << '\n';
  });
  dmatch->add_option("poly", o.poly, "polynomial in x")->required();

  auto* pair = app.add_subcommand("pair", "standard pairs");
  pair->require_subcommand(1);
  auto* realize_cmd = pair->add_subcommand("realize", "materialize a standard pair");
  actions.emplace_back(realize_cmd, [&] {
    const auto [f1, g1] = realize(pair_from_params(o.kind, o.params, o.switched));
    out << "f1 = " << format_poly(f1) << '\n' << "g1 = " << format_poly(g1) << '\n';
  });
  realize_cmd->add_option("kind", o.kind, "first|second|third|fourth|fifth")
      ->required()
      ->check(CLI::IsMember({"first", "second", "third", "fourth", "fifth"}));
  realize_cmd->add_option("params", o.params, "kind parameters (first: m r a p; second: a b p; third: m n a; "
                                              "fourth: m n a b; fifth: a)");
  realize_cmd->add_flag("--switched", o.switched, "swap the two components");
  auto* match_cmd = pair->add_subcommand("match", "recognize a standard pair");
  actions.emplace_back(match_cmd, [&] {
    const auto m = match_standard_pair(parse_poly(o.poly), parse_poly(o.second));
    out << (m ? pair_text(*m) : std::string("no match")) << '\n';
  });
  match_cmd->add_option("f1", o.poly, "first polynomial")->required();
  match_cmd->add_option("g1", o.second, "second polynomial")->required();

  auto* gv = add("gv-det", "binomial determinant det[C(a_i, b_j)]", [&] {
    const auto r = gv_determinant(IndexSequences(parse_sequence(o.poly), parse_sequence(o.second)));
    out << "value = " << r.value.get_str() << '\n' << "dominance = " << (r.dominance ? "true" : "false") << '\n';
  });
  gv->add_option("a_seq", o.poly, "comma-separated, strictly increasing")->required();
  gv->add_option("b_seq", o.second, "comma-separated, strictly increasing")->required();

  auto* dz = add("dziury", "term-count inequality for f = g(u x + v)", [&] {
    const auto r = dziury_check(parse_poly(o.poly), LinearMap(Rational::parse(o.second), Rational::parse(o.third)));
    out << "n = " << r.n << ", k = " << r.k << ", l = " << r.l << ", holds = " << (r.holds ? "true" : "false") << " ("
        << r.n + 2 << " <= " << r.k + r.l << ")\n";
  });
  dz->add_option("poly", o.poly, "g")->required();
  dz->add_option("u", o.second, "scale")->required();
  dz->add_option("v", o.third, "shift")->required();

  auto* fin = add("finiteness", "finiteness verdict for f(x) = g(y)", [&] {
    const SparsePoly f = parse_poly(o.poly);
    const SparsePoly g = parse_poly(o.second);
    if (o.theorem == "A") {
      print_verdict(theorem_a_verdict(Quadrinomial::from_poly(f), Quadrinomial::from_poly(g)), o.json, out);
    } else {
      print_verdict(theorem_b_verdict(LacunaryProfile::from_poly(f), g), o.json, out);
    }
  });
  fin->add_option("theorem", o.theorem, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
  fin->add_option("f", o.poly, "left-hand polynomial")->required();
  fin->add_option("g", o.second, "right-hand polynomial, written in x")->required();
  fin->add_flag("--json", o.json, "JSON output");

  auto* solve = add("solve", "integer solutions of f(x) = g(y) in a box", [&] {
    const auto sols = search_solutions(parse_poly(o.poly), parse_poly(o.second), o.bound, o.max_bound);
    if (o.json) {
      Json arr = Json::array();
      for (const auto& [x, y] : sols) arr.push_back(Json{{"x", std::to_string(x)}, {"y", std::to_string(y)}});
      out << arr.dump(2) << '\n';
      return;
    }
    for (const auto& [x, y] : sols) out << x << ' ' << y << '\n';
  });
  solve->add_option("f", o.poly, "left-hand polynomial")->required();
  solve->add_option("g", o.second, "right-hand polynomial, written in x")->required();
  solve->add_option("--bound", o.bound, "search |x|, |y| <= bound")->required();
  solve->add_option("--max-bound", o.max_bound, "safety limit for --bound")->capture_default_str();
  solve->add_flag("--json", o.json, "JSON output");

  auto* rad = add("radical", "monic squarefree part", [&] { out << format_poly(radical(parse_poly(o.poly))) << '\n'; });
  rad->add_option("poly", o.poly, "polynomial in x")->required();

  auto* ms = add("ms-check", "Mason-Stothers inequality for a + b = c", [&] {
    const auto r = mason_stothers_check(parse_poly(o.poly), parse_poly(o.second), parse_poly(o.third));
    out << "max_deg = " << r.max_deg << ", rad_deg = " << r.rad_deg << ", holds = " << (r.holds ? "true" : "false")
        << '\n';
  });
  ms->add_option("a", o.poly, "a")->required();
  ms->add_option("b", o.second, "b")->required();
  ms->add_option("c", o.third, "c")->required();

  std::vector<std::string> argv_storage{"quadcomp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const auto& [sub, action] : actions) {
      if (sub->parsed()) {
        action();
        return kExitOk;
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace quadcomp::cli
