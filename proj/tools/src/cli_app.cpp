#include "lmc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lmc/cosets.hpp"
#include "lmc/errors.hpp"
#include "lmc/normal.hpp"
#include "lmc/syntax.hpp"
#include "lmc/verify.hpp"

namespace lmc::cli {

namespace {

struct Config {
  std::string format = "text";
  bool assert_flag = false;
  int coeff_bound = 3;
  int m = 2;
  int c = 1;
  int degree = 0;
  std::string expr1;
  std::string expr2;
  std::string file1;
  std::string file2;
  std::string law;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string modulo;
  bool witness = false;
};

// Result of a subcommand: the JSON payload, an optional hand-written text
// rendering, and whether --assert should turn it into exit 2.
struct Outcome {
  Json json;
  std::string text;
  bool negative = false;
};

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render_text(const Json& v, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& val = it.value();
    if (val.is_object()) {
      out << pad << it.key() << ":\n";
      render_text(val, indent + 2, out);
    } else if (val.is_array()) {
      out << pad << it.key() << ":";
      if (val.empty()) out << " (none)";
      out << "\n";
      for (const auto& item : val) {
        if (item.is_array()) {
          std::string row;
          for (const auto& cell : item) row += (row.empty() ? "" : " | ") + scalar_text(cell);
          out << pad << "  - " << row << "\n";
        } else if (item.is_object()) {
          out << pad << "  -\n";
          render_text(item, indent + 4, out);
        } else {
          out << pad << "  - " << scalar_text(item) << "\n";
        }
      }
    } else {
      out << pad << it.key() << ": " << scalar_text(val) << "\n";
    }
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  buf << f.rdbuf();
  return buf.str();
}

Endomorphism load_map(const std::string& path, std::istream& in) { return parse_automorphism(read_input(path, in)); }

void add_context_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--m", cfg.m, "number of generators")->required()->check(CLI::Range(2, kMaxVars));
  sub->add_option("--c", cfg.c, "nilpotency class")->required()->check(CLI::Range(1, 200));
}

Outcome do_eval(const Config& cfg) {
  const Context ctx(cfg.m, cfg.c);
  const LieElement u = parse_element(ctx, cfg.expr1);
  Outcome o;
  o.json = Json{{"m", cfg.m}, {"c", cfg.c}, {"basis", print_element(u)},
                {"wreath", print_element(u, ElementStyle::wreath)}};
  o.text = "basis: " + print_element(u) + "\nwreath: " + print_element(u, ElementStyle::wreath) + "\n";
  return o;
}

Outcome do_bracket(const Config& cfg) {
  const Context ctx(cfg.m, cfg.c);
  const LieElement r = bracket(parse_element(ctx, cfg.expr1), parse_element(ctx, cfg.expr2));
  Outcome o;
  o.json = Json{{"result", print_element(r)}};
  o.text = print_element(r) + "\n";
  return o;
}

Outcome do_basis(const Config& cfg) {
  const Context ctx(cfg.m, cfg.c);
  std::vector<int> degrees;
  if (cfg.degree > 0) {
    degrees.push_back(cfg.degree);
  } else {
    for (int k = 1; k <= cfg.c; ++k) degrees.push_back(k);
  }
  Outcome o;
  o.json = Json{{"m", cfg.m}, {"c", cfg.c}};
  Json rows = Json::array();
  std::ostringstream text;
  for (int k : degrees) {
    const auto tuples = enumerate_basis(ctx, k);
    Json names = Json::array();
    std::string line;
    for (const auto& t : tuples) {
      names.push_back(print_tuple(t));
      line += (line.empty() ? "" : ", ") + print_tuple(t);
    }
    rows.push_back(Json{{"degree", k}, {"dimension", tuples.size()}, {"tuples", names}});
    text << "degree " << k << " (" << tuples.size() << "): " << line << "\n";
  }
  o.json["degrees"] = std::move(rows);
  if (cfg.degree == 0) {
    o.json["total"] = algebra_dimension(ctx);
    text << "total: " << algebra_dimension(ctx) << "\n";
  }
  o.text = text.str();
  return o;
}

Outcome do_aut(const std::string& op, const Config& cfg, std::istream& in) {
  Outcome o;
  const Endomorphism a = load_map(cfg.file1, in);
  if (op == "compose") {
    o.json = automorphism_to_json(compose(a, load_map(cfg.file2, in)));
  } else if (op == "invert") {
    o.json = automorphism_to_json(invert(a));
  } else if (op == "commutator") {
    o.json = automorphism_to_json(group_commutator(a, load_map(cfg.file2, in)));
  } else if (op == "jacobian") {
    o.json = Json{{"m", a.context().m()}, {"c", a.context().c()}, {"jacobian", jacobian_to_json(jacobian(a))}};
  } else {
    const LieElement r = apply(a, parse_element(a.context(), cfg.expr1));
    o.json = Json{{"result", print_element(r)}};
    o.text = print_element(r) + "\n";
  }
  return o;
}

Outcome do_check(const std::string& kind, const Config& cfg, std::istream& in) {
  const Endomorphism phi = load_map(cfg.file1, in);
  Outcome o;
  if (kind == "ia") {
    o.json = Json{{"ia", phi.is_ia()}};
    o.negative = !phi.is_ia();
  } else if (kind == "inner") {
    const auto u = phi.is_ia() ? recognize_inner(phi) : std::nullopt;
    o.json = Json{{"inner", u.has_value()}, {"u", u ? Json(print_element(*u)) : Json(nullptr)}};
    o.negative = !u;
  } else if (kind == "ginner") {
    const auto g = phi.is_ia() ? recognize_ginn(phi) : std::nullopt;
    Json f = Json::array();
    if (g) {
      for (const auto& p : g->f()) f.push_back(print_poly(p));
    }
    o.json = Json{{"ginner", g.has_value()}, {"f", f}};
    o.negative = !g;
  } else {
    const NormalityVerdict v = decide_normal(phi, cfg.witness);
    o.json = verdict_to_json(v);
    o.json["inner"] = phi.is_ia() && recognize_inner(phi).has_value();
    o.json["ia"] = phi.is_ia();
    o.negative = !v.normal;
  }
  return o;
}

Outcome do_reduce(const Config& cfg, std::istream& in) {
  const Endomorphism phi = load_map(cfg.file1, in);
  if (!phi.is_ia()) throw ValidationError("reduce needs an IA automorphism");
  Outcome o;
  if (cfg.modulo == "in") {
    o.json = theta_form_to_json(reduce_mod_in(phi));
  } else {
    const auto g = recognize_ginn(phi);
    if (!g) throw ValidationError("reduce --modulo inn needs a generalized inner automorphism");
    o.json = psi_form_to_json(reduce_mod_inn_normal(*g));
  }
  return o;
}

Outcome do_verify(const Config& cfg) {
  const auto law = parse_law(cfg.law);
  if (!law) throw UsageError("unknown law " + cfg.law);
  const LawReport r = check_law(*law, Context(cfg.m, cfg.c), cfg.trials, cfg.seed, cfg.coeff_bound);
  Outcome o;
  o.json = law_report_to_json(r);
  o.negative = r.passed < r.requested;
  return o;
}

int emit(const Outcome& o, const Config& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    out << o.json.dump(2) << "\n";
  } else if (!o.text.empty()) {
    out << o.text;
  } else {
    render_text(o.json, 0, out);
  }
  return o.negative && cfg.assert_flag ? kExitNegative : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("LMC_FORMAT")) {
    const std::string f(env);
    if (f == "text" || f == "json") cfg.format = f;
  }

  CLI::App app{"Free metabelian nilpotent Lie algebras and their automorphisms", "lmc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--assert", cfg.assert_flag, "exit 2 on a negative verdict");
  app.add_option("--coeff-bound", cfg.coeff_bound, "coefficient bound for sampling")->check(CLI::Range(1, 1000000));

  auto* eval = app.add_subcommand("eval", "print an element in basis and wreath form");
  add_context_options(eval, cfg);
  eval->add_option("expr", cfg.expr1)->required();

  auto* br = app.add_subcommand("bracket", "bracket two elements");
  add_context_options(br, cfg);
  br->add_option("lhs", cfg.expr1)->required();
  br->add_option("rhs", cfg.expr2)->required();

  auto* basis = app.add_subcommand("basis", "basis tuples and dimensions");
  add_context_options(basis, cfg);
  basis->add_option("--degree", cfg.degree, "single degree")->check(CLI::PositiveNumber);

  auto* aut = app.add_subcommand("aut", "automorphism algebra on JSON files");
  aut->require_subcommand(1);
  std::string aut_op;
  for (const char* name : {"compose", "invert", "commutator", "jacobian", "apply"}) {
    auto* sub = aut->add_subcommand(name);
    const std::string n(name);
    sub->add_option("file", cfg.file1)->required();
    if (n == "compose" || n == "commutator") sub->add_option("file2", cfg.file2)->required();
    if (n == "apply") sub->add_option("expr", cfg.expr1)->required();
    sub->callback([&aut_op, n] { aut_op = n; });
  }

  auto* check = app.add_subcommand("check", "ia / inner / generalized inner / normal verdicts");
  check->require_subcommand(1);
  std::string check_kind;
  for (const char* name : {"ia", "inner", "ginner", "normal"}) {
    auto* sub = check->add_subcommand(name);
    const std::string n(name);
    sub->add_option("file", cfg.file1)->required();
    if (n == "normal") sub->add_flag("--witness", cfg.witness, "search principal witness ideals");
    sub->callback([&check_kind, n] { check_kind = n; });
  }

  auto* reduce = app.add_subcommand("reduce", "canonical coset representative");
  reduce->add_option("--modulo", cfg.modulo)->required()->check(CLI::IsMember({"in", "inn"}));
  reduce->add_option("file", cfg.file1)->required();

  auto* verify = app.add_subcommand("verify", "seeded law verification");
  verify->add_option("--law", cfg.law)->required();
  add_context_options(verify, cfg);
  verify->add_option("--trials", cfg.trials)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", cfg.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Outcome o;
    if (eval->parsed()) {
      o = do_eval(cfg);
    } else if (br->parsed()) {
      o = do_bracket(cfg);
    } else if (basis->parsed()) {
      if (cfg.degree > cfg.c) throw UsageError("--degree exceeds the class");
      o = do_basis(cfg);
    } else if (aut->parsed()) {
      o = do_aut(aut_op, cfg, in);
    } else if (check->parsed()) {
      o = do_check(check_kind, cfg, in);
    } else if (reduce->parsed()) {
      o = do_reduce(cfg, in);
    } else {
      o = do_verify(cfg);
      const int code = emit(o, cfg, out);
      return o.negative ? kExitNegative : code;
    }
    return emit(o, cfg, out);
  } catch (const UsageError& e) {
    err << "lmc: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "lmc: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "lmc: error: " << e.what() << "\n";
    return kExitData;
  } catch (const nlohmann::json::exception& e) {
    err << "lmc: error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace lmc::cli
