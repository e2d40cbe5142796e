#include "sbcas/cli.hpp"

#include "sbcas/diff.hpp"
#include "sbcas/factor.hpp"
#include "sbcas/harness.hpp"
#include "sbcas/ratnorm.hpp"
#include "sbcas/syntax.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>

namespace sbcas {

namespace {

std::string show_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

struct Context {
  Format format = Format::Infix;
  std::ostream& out;
  std::ostream& err;

  int undefined() {
    out << "undefined\n";
    return kExitUndefined;
  }
  int term(const Term& t) {
    out << print(t, format) << "\n";
    return kExitOk;
  }
  int value(const std::string& text) {
    if (format == Format::Json) {
      out << nlohmann::json{{"value", text}}.dump() << "\n";
    } else {
      out << text << "\n";
    }
    return kExitOk;
  }
};

int cmd_factor(Context& cx, const std::string& text, bool maple) {
  BigInt n;
  try {
    n = BigInt::parse(text);
  } catch (const std::exception& e) {
    cx.err << "error: not an integer: " << text << "\n";
    return kExitUsage;
  }
  if (maple) {
    if (n.is_zero()) return cx.undefined();
    return cx.value(to_maple_list(factor_int(n)));
  }
  const auto out = factor(Term::int_lit(n));
  if (!out) return cx.undefined();
  return cx.term(*out);
}

int cmd_norm_expr(Context& cx, const std::string& src) {
  const auto out = norm_rat_expr(parse(src, Lang::RatExpr));
  return out ? cx.term(*out) : cx.undefined();
}

int cmd_norm_fun(Context& cx, const std::string& src) {
  const auto out = norm_rat_fun(parse(src, Lang::RatFun));
  return out ? cx.term(*out) : cx.undefined();
}

int cmd_diff(Context& cx, const std::string& src) {
  const auto out = diff(parse(src, Lang::DiffExpr));
  return out ? cx.term(*out) : cx.undefined();
}

// Rational expressions are evaluated exactly and strictly; anything else in
// the differentiable language in floating point.
int cmd_eval(Context& cx, const std::string& src, const std::string& at) {
  BigRat a;
  try {
    a = BigRat::parse(at);
  } catch (const std::exception&) {
    cx.err << "error: not a number: " << at << "\n";
    return kExitUsage;
  }
  std::optional<Term> rat;
  try {
    rat = src.find("fun") != std::string::npos ? *body(parse(src, Lang::RatFun)) : parse(src, Lang::RatExpr);
  } catch (const PredicateViolation&) {
  }
  if (rat) {
    const auto v = eval_rat_at(*rat, a);
    return v ? cx.value(v->to_string()) : cx.undefined();
  }
  const auto v = eval_real(parse(src, Lang::DiffExpr), a.to_double());
  return v ? cx.value(show_real(*v)) : cx.undefined();
}

int cmd_domain(Context& cx, const std::string& src, double lo, double hi, int n) {
  const Term t = parse(src, Lang::DiffExpr);
  if (!(lo < hi) || n < 2) {
    cx.err << "error: domain needs --lo < --hi and --n >= 2\n";
    return kExitUsage;
  }
  const auto pts = domain_sample(t, lo, hi, n);
  if (cx.format == Format::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : pts) {
      j.push_back({{"point", p.point}, {"status", p.status == Definedness::Defined ? "defined" : "undefined"}});
    }
    cx.out << j.dump() << "\n";
  } else {
    for (const auto& p : pts) {
      cx.out << show_real(p.point) << " " << (p.status == Definedness::Defined ? "defined" : "undefined") << "\n";
    }
  }
  return kExitOk;
}

int cmd_check(Context& cx, const std::string& suite, std::uint64_t seed, int cases) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.cases = cases;
  const std::vector<std::pair<std::string, std::function<Report(const GenConfig&)>>> suites = {
      {"factor", check_spec_factor},       {"norm-expr", check_spec_norm_rat_expr},
      {"norm-fun", check_spec_norm_rat_fun}, {"diff", [](const GenConfig& c) { return check_spec_diff(c); }},
      {"disquote", check_disquotation},
  };
  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& [name, run] : suites) {
    if (suite != "all" && suite != name) continue;
    const Report r = run(cfg);
    ok = ok && r.ok();
    if (cx.format == Format::Json) {
      reports.push_back(nlohmann::json::parse(r.json()));
    } else {
      cx.out << r.text();
    }
  }
  if (cx.format == Format::Json) cx.out << (suite == "all" ? reports.dump() : reports.at(0).dump()) << "\n";
  return ok ? kExitOk : kExitCounterexample;
}

// Expressions such as "-x+1" look like options to the parser; move every
// dash-led argument that is not a known option behind "--".
std::vector<std::string> protect_dash_arguments(const std::vector<std::string>& args) {
  static const std::vector<std::string> with_value = {"--format", "--at", "--lo", "--hi", "--n", "--seed", "--cases"};
  static const std::vector<std::string> flags = {"--maple", "-h", "--help", "--help-all"};
  auto known = [](const std::vector<std::string>& names, const std::string& a) {
    for (const auto& n : names) {
      if (a == n || a.rfind(n + "=", 0) == 0) return true;
    }
    return false;
  };
  std::vector<std::string> head, tail;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--") {
      tail.insert(tail.end(), args.begin() + static_cast<std::ptrdiff_t>(i) + 1, args.end());
      break;
    }
    if (known(with_value, a)) {
      head.push_back(a);
      if (a.find('=') == std::string::npos && i + 1 < args.size()) head.push_back(args[++i]);
    } else if (a.size() > 1 && a[0] == '-' && !known(flags, a)) {
      tail.push_back(a);
    } else {
      head.push_back(a);
    }
  }
  if (!tail.empty()) {
    head.push_back("--");
    head.insert(head.end(), tail.begin(), tail.end());
  }
  return head;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Syntax-based algorithms: factoring, rational normalization, differentiation.", "sbcas"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "infix";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"infix", "sexpr", "json"}));

  std::string expr, number, at, suite = "all";
  bool maple = false;
  double lo = 0, hi = 1;
  int n = 11, cases = 500;
  std::uint64_t seed = 1;

  auto* c_factor = app.add_subcommand("factor", "Signed prime decomposition of an integer");
  c_factor->add_option("N", number, "Integer")->required();
  c_factor->add_flag("--maple", maple, "Print [sign, [[p, e], ...]]");

  auto* c_norm_expr = app.add_subcommand("norm-expr", "Normal form of a rational expression in Q(x)");
  c_norm_expr->add_option("E", expr, "Rational expression")->required();

  auto* c_norm_fun = app.add_subcommand("norm-fun", "Quasinormal form of a rational function");
  c_norm_fun->add_option("E", expr, "fun x -> <rational expression>")->required();

  auto* c_diff = app.add_subcommand("diff", "Derivative with respect to x");
  c_diff->add_option("E", expr, "Expression")->required();

  auto* c_eval = app.add_subcommand("eval", "Strict evaluation at a point");
  c_eval->add_option("E", expr, "Expression")->required();
  c_eval->add_option("--at", at, "Point (integer, fraction or decimal)")->required();

  auto* c_domain = app.add_subcommand("domain", "Definedness on an evenly spaced grid");
  c_domain->add_option("E", expr, "Expression")->required();
  c_domain->add_option("--lo", lo, "Left end")->required();
  c_domain->add_option("--hi", hi, "Right end")->required();
  c_domain->add_option("--n", n, "Number of points")->required();

  auto* c_check = app.add_subcommand("check", "Run property checks");
  c_check->add_option("suite", suite, "Suite")
      ->check(CLI::IsMember({"factor", "norm-expr", "norm-fun", "diff", "disquote", "all"}));
  c_check->add_option("--seed", seed, "Random seed");
  c_check->add_option("--cases", cases, "Generated inputs per suite")->check(CLI::PositiveNumber);

  const auto protected_args = protect_dash_arguments(args);
  std::vector<std::string> reversed(protected_args.rbegin(), protected_args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Context cx{*format_from_string(format_name), out, err};
  try {
    if (c_factor->parsed()) return cmd_factor(cx, number, maple);
    if (c_norm_expr->parsed()) return cmd_norm_expr(cx, expr);
    if (c_norm_fun->parsed()) return cmd_norm_fun(cx, expr);
    if (c_diff->parsed()) return cmd_diff(cx, expr);
    if (c_eval->parsed()) return cmd_eval(cx, expr, at);
    if (c_domain->parsed()) return cmd_domain(cx, expr, lo, hi, n);
    if (c_check->parsed()) return cmd_check(cx, suite, seed, cases);
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return kExitUsage;
  } catch (const PredicateViolation& e) {
    err << "predicate violation: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sbcas
