#include "lieloop/expr.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace lieloop {

bool Value::is_constant() const {
  if (is_vector) {
    for (const auto& [k, v] : vector)
      if (!k.empty() && !is_zero(v)) return false;
  } else {
    for (const auto& [k, v] : scalar)
      if (!k.empty() && !v.is_zero()) return false;
  }
  return true;
}

std::vector<std::string> Value::symbols() const {
  std::vector<std::string> out;
  if (is_vector) {
    for (const auto& [k, v] : vector)
      if (!k.empty() && !is_zero(v)) out.push_back(k);
  } else {
    for (const auto& [k, v] : scalar)
      if (!k.empty() && !v.is_zero()) out.push_back(k);
  }
  return out;
}

namespace {

enum class Tok { Num, Ident, Op, End };

struct Token {
  Tok kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Num, s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i)});
      i = j;
    } else if (std::string("+-*/^()").find(ch) != std::string::npos) {
      out.push_back({Tok::Op, std::string(1, ch)});
      ++i;
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, ch) + "' in \"" + s + "\"");
    }
  }
  out.push_back({Tok::End, ""});
  return out;
}

Value scalar_value(const Num& n) {
  Value v;
  v.scalar[""] = n;
  return v;
}

void prune(Value& v) {
  if (v.is_vector) {
    for (auto it = v.vector.begin(); it != v.vector.end();)
      it = (!it->first.empty() && is_zero(it->second)) ? v.vector.erase(it) : std::next(it);
  } else {
    for (auto it = v.scalar.begin(); it != v.scalar.end();)
      it = (!it->first.empty() && it->second.is_zero()) ? v.scalar.erase(it) : std::next(it);
  }
}

class Parser {
 public:
  Parser(const std::string& text, const ExprEnv& env) : text_(text), toks_(tokenize(text)), env_(env) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Tok::End) fail("trailing input at '" + peek().text + "'");
    return v;
  }

 private:
  const std::string& text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ExprEnv& env_;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument(msg + " in \"" + text_ + "\"");
  }
  const Token& peek() const { return toks_[pos_]; }
  bool at_op(const char* op) const { return peek().kind == Tok::Op && peek().text == op; }
  bool starts_primary() const { return peek().kind == Tok::Num || peek().kind == Tok::Ident || at_op("("); }

  std::size_t dim() const { return env_.algebra ? env_.algebra->dim() : 0; }

  Value expr() {
    Value v = term();
    while (at_op("+") || at_op("-")) {
      bool plus = peek().text == "+";
      ++pos_;
      Value w = term();
      v = plus ? add_values(v, w) : add_values(v, negate(w));
    }
    return v;
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (at_op("*")) {
        ++pos_;
        v = mul(v, unary());
      } else if (at_op("/")) {
        ++pos_;
        v = div(v, unary_no_implicit());
      } else if (starts_primary()) {
        v = mul(v, power());
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (at_op("-")) {
      ++pos_;
      return negate(unary());
    }
    if (at_op("+")) {
      ++pos_;
      return unary();
    }
    return power();
  }

  // Divisors bind only to the next power so that "1/2e1" means (1/2) e1.
  Value unary_no_implicit() {
    if (at_op("-")) {
      ++pos_;
      return negate(unary_no_implicit());
    }
    return power();
  }

  Value power() {
    Value base = primary();
    if (at_op("^")) {
      ++pos_;
      Value e = unary_no_implicit();
      if (e.is_vector || !e.is_constant()) fail("exponent must be a constant");
      Num en = e.scalar[""];
      if (!en.is_rational() || en.a.get_den() != 1) fail("exponent must be an integer");
      long n = en.a.get_num().get_si();
      if (base.is_vector || !base.is_constant()) fail("only constant scalars can be raised to a power");
      Num b = base.scalar[""];
      Num r = 1;
      bool neg = n < 0;
      for (long k = 0; k < (neg ? -n : n); ++k) r = r * b;
      if (neg) r = r.inverse();
      return scalar_value(r);
    }
    return base;
  }

  Value primary() {
    const Token t = peek();
    if (t.kind == Tok::Num) {
      ++pos_;
      return scalar_value(Num(parse_rational(t.text)));
    }
    if (t.kind == Tok::Ident) {
      ++pos_;
      return identifier(t.text);
    }
    if (at_op("(")) {
      ++pos_;
      Value v = expr();
      if (!at_op(")")) fail("missing ')'");
      ++pos_;
      return v;
    }
    fail("unexpected token '" + t.text + "'");
  }

  Value identifier(const std::string& id) {
    if (auto it = env_.named.find(id); it != env_.named.end()) return it->second;
    if (env_.algebra) {
      int idx = env_.algebra->basis_index(id);
      if (idx >= 0) {
        Value v;
        v.is_vector = true;
        v.vector[""] = unit(dim(), static_cast<std::size_t>(idx));
        return v;
      }
    }
    if (auto it = env_.params.find(id); it != env_.params.end()) return scalar_value(Num(it->second));
    if (id == "i") return scalar_value(Num::imag());
    if (id == "r2") return scalar_value(Num::sqrt2());
    if (!env_.allow_symbols) fail("unknown identifier '" + id + "'");
    Value v;
    v.scalar[id] = Num(1);
    return v;
  }

  static Value negate(Value v) {
    for (auto& [k, x] : v.scalar) x = -x;
    for (auto& [k, x] : v.vector) x = scale(Rational(-1), x);
    return v;
  }

  Value add_values(const Value& a, const Value& b) {
    if (a.is_vector != b.is_vector) fail("cannot add a scalar and a vector");
    Value r = a;
    if (a.is_vector) {
      for (const auto& [k, x] : b.vector) {
        auto it = r.vector.find(k);
        if (it == r.vector.end()) r.vector[k] = x;
        else it->second = add(it->second, x);
      }
    } else {
      for (const auto& [k, x] : b.scalar) r.scalar[k] += x;
    }
    prune(r);
    return r;
  }

  // Apply a constant scalar to a vector; i acts through the algebra's complex structure.
  RVec apply(const Num& s, const RVec& v) {
    RVec out = scale(s.a, v);
    if (s.b != 0 || s.d != 0) fail("sqrt(2) multiples of algebra vectors are not representable");
    if (s.c != 0) {
      if (!env_.algebra || !env_.algebra->complex_structure()) fail("i times a vector needs a complex structure");
      RVec jv = (*env_.algebra->complex_structure()) * v;
      axpy(out, s.c, jv);
    }
    return out;
  }

  Value mul(const Value& a, const Value& b) {
    if (a.is_vector && b.is_vector) fail("product of two vectors");
    bool a_sym = !a.is_constant(), b_sym = !b.is_constant();
    if (a_sym && b_sym) fail("product of two symbolic factors is not affine");
    if (a.is_vector || b.is_vector) {
      const Value& vec = a.is_vector ? a : b;
      const Value& sc = a.is_vector ? b : a;
      Value r;
      r.is_vector = true;
      if (!sc.is_constant()) {
        // symbolic scalar times constant vector
        RVec base = vec.vector.count("") ? vec.vector.at("") : zeros(dim());
        for (const auto& [k, s] : sc.scalar) r.vector[k] = apply(s, base);
      } else {
        Num s = sc.scalar.count("") ? sc.scalar.at("") : Num(0);
        for (const auto& [k, x] : vec.vector) r.vector[k] = apply(s, x);
      }
      if (!r.vector.count("")) r.vector[""] = zeros(dim());
      prune(r);
      return r;
    }
    Value r;
    const Value& cst = a_sym ? b : a;
    const Value& other = a_sym ? a : b;
    Num c = cst.scalar.count("") ? cst.scalar.at("") : Num(0);
    for (const auto& [k, x] : other.scalar) r.scalar[k] = c * x;
    if (!r.scalar.count("")) r.scalar[""] = Num(0);
    prune(r);
    return r;
  }

  Value div(const Value& a, const Value& b) {
    if (b.is_vector || !b.is_constant()) fail("division by a non-constant");
    Num d = b.scalar.count("") ? b.scalar.at("") : Num(0);
    if (d.is_zero()) throw std::domain_error("division by zero in \"" + text_ + "\"");
    Num inv = d.inverse();
    if (a.is_vector) {
      Value r = a;
      for (auto& [k, x] : r.vector) x = apply(inv, x);
      return r;
    }
    Value r = a;
    for (auto& [k, x] : r.scalar) x = x * inv;
    return r;
  }
};

}  // namespace

Value parse_expr(const std::string& text, const ExprEnv& env) { return Parser(text, env).parse(); }

RVec eval_vector(const std::string& text, const ExprEnv& env) {
  Value v = parse_expr(text, env);
  if (!v.is_vector) {
    if (v.is_constant() && env.algebra && v.scalar[""].is_zero()) return zeros(env.algebra->dim());
    throw std::invalid_argument("expected a vector: \"" + text + "\"");
  }
  if (!v.is_constant()) throw std::invalid_argument("unexpected free symbol in \"" + text + "\"");
  return v.vector[""];
}

Num eval_scalar(const std::string& text, const ExprEnv& env) {
  Value v = parse_expr(text, env);
  if (v.is_vector) throw std::invalid_argument("expected a scalar: \"" + text + "\"");
  if (!v.is_constant()) throw std::invalid_argument("unexpected free symbol in \"" + text + "\"");
  return v.scalar[""];
}

Rational eval_rational(const std::string& text, const ExprEnv& env) {
  Num n = eval_scalar(text, env);
  if (!n.is_rational()) throw std::invalid_argument("expected a rational: \"" + text + "\"");
  return n.a;
}

LinearVector eval_linear_vector(const std::string& text, const ExprEnv& env) {
  ExprEnv e = env;
  e.allow_symbols = true;
  Value v = parse_expr(text, e);
  if (!v.is_vector) throw std::invalid_argument("expected a vector: \"" + text + "\"");
  LinearVector lv;
  lv.constant = v.vector.count("") ? v.vector[""] : zeros(env.algebra->dim());
  for (const auto& [k, x] : v.vector)
    if (!k.empty()) lv.coeff[k] = x;
  return lv;
}

Condition Condition::parse(const std::string& text) {
  static const char* ops[] = {"!=", "<=", ">=", "=", "<", ">"};
  for (const char* op : ops) {
    auto p = text.find(op);
    if (p == std::string::npos) continue;
    Condition c;
    c.text = text;
    c.op = op;
    c.lhs = text.substr(0, p);
    c.rhs = text.substr(p + std::string(op).size());
    return c;
  }
  throw std::invalid_argument("condition without comparison: " + text);
}

bool Condition::holds(const ExprEnv& env) const {
  Rational d = eval_rational("(" + lhs + ")-(" + rhs + ")", env);
  if (op == "=") return d == 0;
  if (op == "!=") return d != 0;
  if (op == "<") return d < 0;
  if (op == "<=") return d <= 0;
  if (op == ">") return d > 0;
  return d >= 0;
}

}  // namespace lieloop
