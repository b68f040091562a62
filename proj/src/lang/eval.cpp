#include "kuifje/lang/eval.hpp"

#include <algorithm>

#include "kuifje/lang/parser.hpp"

namespace kuifje {

void add_atoms(AtomSet& atoms, const Value& v) {
  if (v.is_atom()) atoms.insert(v.as_atom().name);
  if (v.is_array())
    for (const auto& x : v.array()) add_atoms(atoms, x);
}

AtomSet atoms_of(const VarContext& ctx) {
  AtomSet atoms;
  for (const auto& var : ctx.vars())
    for (const auto& v : var.domain) add_atoms(atoms, v);
  return atoms;
}

namespace {

[[noreturn]] void bad(const Expr& e, const std::string& what) { throw TypeError(e.pos, what); }

const Rational& number(const Expr& e, const Value& v) {
  if (!v.is_number()) bad(e, "expected a number, got " + v.str());
  return v.number();
}

const Rational& unit(const Expr& e, const Value& v) {
  const Rational& r = number(e, v);
  if (r < 0 || r > 1) bad(e, "expected a value in [0,1], got " + r.str());
  return r;
}

bool boolean(const Expr& e, const Value& v) {
  const Rational& r = number(e, v);
  if (r != 0 && r != 1) bad(e, "expected a boolean, got " + r.str());
  return r == 1;
}

Integer integer(const Expr& e, const Value& v) {
  const Rational& r = number(e, v);
  if (denominator(r) != 1) bad(e, "expected an integer, got " + r.str());
  return numerator(r);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Value call(const Expr& e, const std::vector<Value>& args) {
  const std::string& fn = e.op;
  auto arity = [&](std::size_t n) {
    if (args.size() != n) bad(e, fn + " expects " + std::to_string(n) + " argument(s)");
  };
  if (fn == "distinct") {
    arity(1);
    if (!args[0].is_array()) bad(e, "distinct expects an array");
    auto xs = args[0].array();
    std::sort(xs.begin(), xs.end());
    return Value::boolean(std::adjacent_find(xs.begin(), xs.end()) == xs.end());
  }
  if (fn == "len") {
    arity(1);
    if (!args[0].is_array()) bad(e, "len expects an array");
    return Value(static_cast<int>(args[0].array().size()));
  }
  if (fn == "min" || fn == "max") {
    if (args.empty()) bad(e, fn + " expects arguments");
    Rational best = number(e, args[0]);
    for (const auto& a : args) {
      const Rational& r = number(e, a);
      if (fn == "min" ? r < best : r > best) best = r;
    }
    return Value(best);
  }
  if (fn == "abs") {
    arity(1);
    return Value(abs(number(e, args[0])));
  }
  bad(e, "unknown function '" + fn + "'");
}

}  // namespace

Value eval_expr(const Expr& e, const Env& env) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return Value(e.number);
    case Expr::Kind::Name: {
      if (auto i = env.ctx.index_of(e.op)) return env.ctx.value(env.state, *i);
      if (env.atoms.count(e.op)) return Value::atom(e.op);
      bad(e, "unbound variable '" + e.op + "'");
    }
    case Expr::Kind::Unary: {
      Value a = eval_expr(*e.args[0], env);
      if (e.op == "not") return Value(Rational(1) - unit(*e.args[0], a));
      return Value(Rational(-number(*e.args[0], a)));
    }
    case Expr::Kind::Binary: {
      const Expr& l = *e.args[0];
      const Expr& r = *e.args[1];
      const std::string& op = e.op;
      if (op == "and") {
        Rational a = unit(l, eval_expr(l, env));
        if (a == 0) return Value(0);
        return Value(Rational(a * unit(r, eval_expr(r, env))));
      }
      if (op == "or") {
        Rational a = unit(l, eval_expr(l, env));
        if (a == 1) return Value(1);
        Rational b = unit(r, eval_expr(r, env));
        return Value(Rational(a + b - a * b));
      }
      Value a = eval_expr(l, env);
      Value b = eval_expr(r, env);
      if (op == "xor") return Value::boolean(boolean(l, a) != boolean(r, b));
      if (op == "=") return Value::boolean(a == b);
      if (op == "!=") return Value::boolean(a != b);
      if (op == "in") {
        if (!b.is_array()) bad(r, "'in' expects an array on the right");
        const auto& xs = b.array();
        return Value::boolean(std::find(xs.begin(), xs.end(), a) != xs.end());
      }
      if (op == "<") return Value::boolean(number(l, a) < number(r, b));
      if (op == "<=") return Value::boolean(number(l, a) <= number(r, b));
      if (op == ">") return Value::boolean(number(l, a) > number(r, b));
      if (op == ">=") return Value::boolean(number(l, a) >= number(r, b));
      if (op == "+") return Value(Rational(number(l, a) + number(r, b)));
      if (op == "-") return Value(Rational(number(l, a) - number(r, b)));
      if (op == "*") return Value(Rational(number(l, a) * number(r, b)));
      if (op == "/") {
        const Rational& d = number(r, b);
        if (d == 0) bad(e, "division by zero");
        return Value(Rational(number(l, a) / d));
      }
      if (op == "div" || op == "mod") {
        Integer x = integer(l, a), y = integer(r, b);
        if (y == 0) bad(e, "division by zero");
        Integer q = floor_div(x, y);
        return Value(Rational(op == "div" ? q : Integer(x - q * y)));
      }
      bad(e, "unknown operator '" + op + "'");
    }
    case Expr::Kind::Call: {
      std::vector<Value> args;
      for (const auto& a : e.args) args.push_back(eval_expr(*a, env));
      return call(e, args);
    }
    case Expr::Kind::Array:
    case Expr::Kind::Tuple: {
      Value::Array xs;
      for (const auto& a : e.args) xs.push_back(eval_expr(*a, env));
      return Value(std::move(xs));
    }
    case Expr::Kind::Index: {
      Value a = eval_expr(*e.args[0], env);
      if (!a.is_array()) bad(*e.args[0], "indexing a non-array " + a.str());
      Integer i = integer(*e.args[1], eval_expr(*e.args[1], env));
      const auto& xs = a.array();
      if (i < 0 || i >= static_cast<long>(xs.size())) bad(e, "index " + i.str() + " out of range");
      return xs[static_cast<std::size_t>(i.convert_to<long>())];
    }
  }
  bad(e, "malformed expression");
}

Rational eval_guard(const Expr& e, const Env& env) { return unit(e, eval_expr(e, env)); }

Predicate pred_from_expr(const CtxPtr& ctx, const Expr& e, const AtomSet& extra_atoms) {
  AtomSet atoms = atoms_of(*ctx);
  atoms.insert(extra_atoms.begin(), extra_atoms.end());
  return Predicate::from(ctx, [&](std::size_t s) {
    Value v = eval_expr(e, Env{*ctx, s, atoms});
    const Rational& r = number(e, v);
    if (r < 0) bad(e, "negative loss value " + r.str() + " at " + ctx->state_str(s));
    return ExtRat(r);
  });
}

Predicate pred_indicator(const CtxPtr& ctx, const Expr& b, const AtomSet& extra_atoms) {
  AtomSet atoms = atoms_of(*ctx);
  atoms.insert(extra_atoms.begin(), extra_atoms.end());
  return Predicate::from(ctx, [&](std::size_t s) { return ExtRat(boolean(b, eval_expr(b, Env{*ctx, s, atoms})) ? 1 : 0); });
}

Predicate pred_indicator(const CtxPtr& ctx, std::string_view bexpr) {
  ExprPtr e = parse_expr(bexpr);
  return pred_indicator(ctx, *e);
}

}  // namespace kuifje
