#include "kuifje/lang/printer.hpp"

#include <sstream>

namespace kuifje {

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Binary:
      if (e.op == "or") return 1;
      if (e.op == "xor") return 2;
      if (e.op == "and") return 3;
      if (e.op == "=" || e.op == "!=" || e.op == "<" || e.op == "<=" || e.op == ">" || e.op == ">=" || e.op == "in")
        return 5;
      if (e.op == "+" || e.op == "-") return 6;
      return 7;
    case Expr::Kind::Unary:
      return e.op == "not" ? 4 : 8;
    case Expr::Kind::Index:
      return 9;
    default:
      return 10;
  }
}

std::string number_text(const Rational& r) {
  if (denominator(r) == 1) return r.str();
  // Decimal when the denominator is of the form 2^a 5^b.
  Integer den = denominator(r);
  unsigned twos = 0, fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1 || r < 0) return "(" + r.str() + ")";
  unsigned digits = std::max(twos, fives);
  Integer scaled = numerator(r) * boost::multiprecision::pow(Integer(10), digits) / denominator(r);
  std::string s = scaled.str();
  while (s.size() <= digits) s = "0" + s;
  return s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
}

std::string wrap(const Expr& e, bool parens) {
  std::string s = print_expr(e);
  return parens ? "(" + s + ")" : s;
}

std::string list(const std::vector<ExprPtr>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += print_expr(*xs[i]);
  }
  return out;
}

void print_stmt(std::ostream& os, const Stmt& s, int indent);

void print_seq(std::ostream& os, const Stmt& s, int indent) {
  if (s.kind == Stmt::Kind::Seq) {
    for (std::size_t i = 0; i < s.body.size(); ++i) {
      print_stmt(os, *s.body[i], indent);
      os << (i + 1 < s.body.size() ? ";\n" : "\n");
    }
  } else {
    print_stmt(os, s, indent);
    os << "\n";
  }
}

void print_block(std::ostream& os, const Stmt& s, int indent) {
  os << "{\n";
  print_seq(os, s, indent + 2);
  os << std::string(static_cast<std::size_t>(indent), ' ') << "}";
}

void print_stmt(std::ostream& os, const Stmt& s, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  os << pad;
  switch (s.kind) {
    case Stmt::Kind::Skip:
      os << "skip";
      break;
    case Stmt::Kind::Abort:
      os << "abort";
      break;
    case Stmt::Kind::Seq:
      os << "{\n";
      print_seq(os, s, indent + 2);
      os << pad << "}";
      break;
    case Stmt::Kind::Assign:
      for (std::size_t i = 0; i < s.names.size(); ++i) os << (i ? ", " : "") << s.names[i];
      os << " := " << print_dist(s.dist);
      break;
    case Stmt::Kind::HidVar:
      os << "hidvar " << s.names[0];
      if (s.domain) os << " : " << print_domain(*s.domain);
      os << " := " << print_dist(s.dist);
      break;
    case Stmt::Kind::Unvar:
      os << "unvar " << s.names[0];
      break;
    case Stmt::Kind::If:
      os << "if " << print_expr(*s.guard) << " ";
      print_block(os, *s.body[0], indent);
      os << " else ";
      print_block(os, *s.body[1], indent);
      break;
    case Stmt::Kind::While:
      os << "while " << print_expr(*s.guard) << " ";
      print_block(os, *s.body[0], indent);
      break;
    case Stmt::Kind::Print:
      os << "print " << print_dist(s.dist);
      break;
    case Stmt::Kind::NonDet:
      print_block(os, *s.body[0], indent);
      os << " [] ";
      print_block(os, *s.body[1], indent);
      break;
    case Stmt::Kind::Assert:
      os << "assert " << print_expr(*s.guard);
      break;
    case Stmt::Kind::Call:
      os << "call " << s.names[0];
      break;
  }
}

}  // namespace

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return number_text(e.number);
    case Expr::Kind::Name:
      return e.op;
    case Expr::Kind::Unary: {
      const Expr& a = *e.args[0];
      if (e.op == "not") return "not " + wrap(a, precedence(a) < 4);
      return "-" + wrap(a, precedence(a) < 8);
    }
    case Expr::Kind::Binary: {
      int p = precedence(e);
      const Expr& a = *e.args[0];
      const Expr& b = *e.args[1];
      bool left = p == 5 ? precedence(a) <= p : precedence(a) < p;
      bool right = precedence(b) <= p;
      return wrap(a, left) + " " + e.op + " " + wrap(b, right);
    }
    case Expr::Kind::Call:
      return e.op + "(" + list(e.args) + ")";
    case Expr::Kind::Array:
      return "[" + list(e.args) + "]";
    case Expr::Kind::Tuple:
      return "(" + list(e.args) + ")";
    case Expr::Kind::Index:
      return wrap(*e.args[0], precedence(*e.args[0]) < 9) + "[" + print_expr(*e.args[1]) + "]";
  }
  return "";
}

std::string print_dist(const DistExpr& d) {
  if (d.branches.size() == 1 && d.branches[0].weight == 1) return print_expr(*d.branches[0].expr);
  std::string out;
  for (std::size_t i = 0; i < d.branches.size(); ++i) {
    if (i) out += " | ";
    const Expr& e = *d.branches[i].expr;
    // `@` binds looser than any expression operator, so no parentheses needed.
    out += print_expr(e) + " @ " + d.branches[i].weight.str();
  }
  return out;
}

std::string print_domain(const std::vector<Value>& domain) {
  std::string out = "{";
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (i) out += ",";
    out += domain[i].str();
  }
  return out + "}";
}

std::string print_decls(const std::vector<Variable>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += " ";
    out += vars[i].name + ":" + print_domain(vars[i].domain);
  }
  return out;
}

std::string print_program(const Stmt& s) {
  std::ostringstream os;
  print_seq(os, s, 0);
  return os.str();
}

std::string print_program_file(const ProgramFile& f) {
  std::string out;
  if (f.context) out += "context " + print_decls(*f.context) + ";\n";
  return out + print_program(*f.body);
}

namespace {
std::string section_body(const Stmt& s) {
  std::ostringstream os;
  print_seq(os, s, 2);
  return os.str();
}
}  // namespace

std::string print_datatype(const Datatype& d) {
  std::string out = "shared: " + print_decls(d.shared) + "\n";
  if (d.encap) out += "encap: " + print_decls(*d.encap) + "\n";
  out += "init:\n" + section_body(*d.init);
  for (const auto& [name, p] : d.ops) out += "op " + name + ":\n" + section_body(*p);
  out += "final:\n" + section_body(*d.final);
  return out;
}

std::string print_context(const ProgramContext& c) {
  std::string out;
  if (c.shared) out += "shared: " + print_decls(*c.shared) + "\n";
  out += "client: " + print_decls(c.client) + "\n";
  out += "body:\n" + section_body(*c.body);
  return out;
}

std::string print_inline(const Stmt& s) {
  std::string out;
  for (char ch : print_program(s)) {
    bool ws = ch == '\n' || ch == ' ';
    if (ws && (out.empty() || out.back() == ' ')) continue;
    out += ws ? ' ' : ch;
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace kuifje
