#include "sbcas/syntax.hpp"

#include <json.hpp>

#include <string>

namespace sbcas {

namespace {

// Binding strength of infix forms; an operand printed at a weaker level than
// its context gets parentheses.
enum Level { kLambda = 0, kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

struct Doc {
  std::string text;
  int level;
};

bool is_function_symbol(std::string_view s) {
  return s == sym::kSin || s == sym::kCos || s == sym::kTan || s == sym::kExp || s == sym::kLn ||
         s == sym::kInv;
}

// Nonnegative integers print bare; anything else as a parenthesised literal
// token, which the lexer reads back as a single literal.
std::string literal_text(const BigRat& v) {
  if (v.is_integer() && v.sign() >= 0) return v.to_string();
  return "(" + v.to_string() + ")";
}

std::optional<BigRat> literal_value(const Term& t) {
  if (const auto* i = t.get<IntLit>()) return BigRat(i->value);
  if (const auto* r = t.get<RatLit>()) return r->value;
  return match_real_lit(t);
}

std::string exponent_text(const BigRat& v) {
  if (v.is_integer()) return v.to_string();
  return "(" + v.to_string() + ")";
}

// For a Q-typed left-nested product b * b * ... * b, the base and count.
std::optional<std::pair<Term, long>> product_chain(const Term& t) {
  const Ops& q = rat_ops();
  auto top = q.match_mul(t);
  if (!top) return std::nullopt;
  const Term& base = top->second;
  long n = 1;
  Term left = top->first;
  while (true) {
    ++n;
    if (left == base) return std::make_pair(base, n);
    auto m = q.match_mul(left);
    if (!m || !(m->second == base)) return std::nullopt;
    left = m->first;
  }
}

Doc infix(const Term& t);

std::string wrap(const Term& t, int min_level) {
  Doc d = infix(t);
  if (d.level >= min_level) return d.text;
  // "-3" in parentheses would read back as a literal; keep the negation visible.
  if (d.text.size() > 1 && d.text[0] == '-' && std::isdigit(static_cast<unsigned char>(d.text[1]))) {
    return "(- " + d.text.substr(1) + ")";
  }
  return "(" + d.text + ")";
}

Doc infix(const Term& t) {
  if (auto v = literal_value(t)) {
    return {literal_text(*v), kAtom};
  }
  if (const auto* var = t.get<Var>()) return {var->name, kAtom};
  if (const auto* c = t.get<Const>()) return {c->symbol, kAtom};
  if (const auto* l = t.get<Lambda>()) return {"fun " + l->var + " -> " + infix(l->body).text, kLambda};
  if (const auto* q = t.get<Quote>()) return {"quote(" + infix(q->body).text + ")", kAtom};

  if (auto op = as_op(t)) {
    const auto& a = op->args;
    if (a.size() == 2 && op->type.is_arrow() && op->type.from() == SemType::rational() &&
        op->symbol == sym::kMul) {
      if (auto chain = product_chain(t)) {
        return {wrap(chain->first, kAtom) + "^" + std::to_string(chain->second), kPower};
      }
    }
    if (a.size() == 2) {
      if (op->symbol == sym::kAdd) {
        const std::string lhs = wrap(a[0], kSum);
        if (auto n = as_op(a[1]); n && n->symbol == sym::kNeg && n->args.size() == 1) {
          return {lhs + " - " + wrap(n->args[0], kProduct), kSum};
        }
        return {lhs + " + " + wrap(a[1], kProduct), kSum};
      }
      if (op->symbol == sym::kMul) {
        const std::string lhs = wrap(a[0], kProduct);
        if (auto n = as_op(a[1]); n && n->symbol == sym::kInv && n->args.size() == 1) {
          return {lhs + " / " + wrap(n->args[0], kUnary), kProduct};
        }
        return {lhs + " * " + wrap(a[1], kUnary), kProduct};
      }
      if (op->symbol == sym::kPow) {
        const std::string base = wrap(a[0], kAtom);
        if (auto e = literal_value(a[1])) return {base + "^" + exponent_text(*e), kPower};
        return {base + "^" + wrap(a[1], kAtom + 1), kPower};
      }
    }
    if (a.size() == 1) {
      if (op->symbol == sym::kNeg) return {"-" + wrap(a[0], kUnary), kUnary};
      if (is_function_symbol(op->symbol)) return {op->symbol + "(" + infix(a[0]).text + ")", kAtom};
    }
  }
  const auto* app = t.get<App>();
  return {"apply(" + infix(app->fun).text + ", " + infix(app->arg).text + ")", kAtom};
}

std::string sexpr(const Term& t) {
  if (auto v = literal_value(t)) return v->to_string();
  if (const auto* var = t.get<Var>()) return var->name;
  if (const auto* c = t.get<Const>()) return c->symbol;
  if (const auto* l = t.get<Lambda>()) return "(lambda " + l->var + " " + sexpr(l->body) + ")";
  if (const auto* q = t.get<Quote>()) return "(quote " + sexpr(q->body) + ")";
  if (auto op = as_op(t)) {
    std::string out = "(" + op->symbol;
    for (const Term& a : op->args) out += " " + sexpr(a);
    return out + ")";
  }
  const auto* app = t.get<App>();
  return "(apply " + sexpr(app->fun) + " " + sexpr(app->arg) + ")";
}

nlohmann::json to_json(const Term& t) {
  using nlohmann::json;
  return std::visit(
      [](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return {{"kind", "int"}, {"value", n.value.to_string()}};
        } else if constexpr (std::is_same_v<T, RatLit>) {
          return {{"kind", "rat"}, {"value", n.value.to_string()}};
        } else if constexpr (std::is_same_v<T, Var>) {
          return {{"kind", "var"}, {"name", n.name}, {"type", n.type.to_string()}};
        } else if constexpr (std::is_same_v<T, Const>) {
          return {{"kind", "const"}, {"symbol", n.symbol}, {"type", n.type.to_string()}};
        } else if constexpr (std::is_same_v<T, App>) {
          return {{"kind", "app"}, {"children", json::array({to_json(n.fun), to_json(n.arg)})}};
        } else if constexpr (std::is_same_v<T, Lambda>) {
          return {{"kind", "lambda"},
                  {"name", n.var},
                  {"type", n.var_type.to_string()},
                  {"children", json::array({to_json(n.body)})}};
        } else {
          return {{"kind", "quote"}, {"children", json::array({to_json(n.body)})}};
        }
      },
      t.node().v);
}

}  // namespace

std::string print(const Term& t, Format format) {
  switch (format) {
    case Format::Sexpr:
      return sexpr(t);
    case Format::Json:
      return to_json(t).dump();
    case Format::Infix:
    default:
      return infix(t).text;
  }
}

}  // namespace sbcas
