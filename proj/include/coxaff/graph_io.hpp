#pragma once

// Text format for decorated graphs. Line-oriented, UTF-8, '#' starts a
// comment. The first payload line is the header, then any number of vertex,
// edge and root lines:
//
//   n=<count> field=[c0,c1,...,1]      # monic minimal polynomial, ascending
//   vertex <i> <name>                  # optional
//   edge <i> <j> p=<label> [alpha=<expr>] [tree] [l=<expr> m=<expr>]
//   root <i>
//
// Vertex numbers are 1-based. alpha may be omitted only for labels 3, 4, 6
// (their parameter polynomial has a single root); label 5 and labels outside
// the built-in table must bind alpha explicitly. Expressions use rational
// literals ("2", "-1/2"), the symbol `theta`, the operators + - * and
// parentheses, and contain no whitespace. Anything else is rejected.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "coxaff/graph.hpp"

namespace coxaff {

class parse_error : public error {
public:
  parse_error(int line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

namespace detail {

// rational | theta | '(' expr ')' with + - * ; no implicit multiplication
class ExprParser {
public:
  ExprParser(std::string_view s, const FieldContext& ctx, int line)
      : s_(s), ctx_(ctx), line_(line) {}

  FieldElement parse() {
    FieldElement v = expr();
    if (pos_ != s_.size()) fail("trailing characters in expression");
    return v;
  }

private:
  FieldElement expr() {
    FieldElement v = term();
    while (peek() == '+' || peek() == '-') {
      char op = take();
      FieldElement r = term();
      v = op == '+' ? v + r : v - r;
    }
    return v;
  }
  FieldElement term() {
    FieldElement v = factor();
    while (peek() == '*') {
      take();
      v = v * factor();
    }
    return v;
  }
  FieldElement factor() {
    if (peek() == '-') {
      take();
      return -factor();
    }
    return atom();
  }
  FieldElement atom() {
    char c = peek();
    if (c == '(') {
      take();
      FieldElement v = expr();
      if (peek() != ')') fail("expected ')'");
      take();
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (s_.substr(pos_, 5) == "theta") {
      pos_ += 5;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        fail("unexpected characters after 'theta'");
      return FieldElement::theta(ctx_);
    }
    fail("expected a rational literal, 'theta' or '('");
    return FieldElement(0);
  }
  FieldElement number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string_view num = s_.substr(start, pos_ - start);
    if (peek() == '/') {
      take();
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == dstart) fail("expected digits after '/'");
      std::string_view den = s_.substr(dstart, pos_ - dstart);
      return FieldElement(Rational(BigInt::from_string(num), BigInt::from_string(den)));
    }
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
      fail("implicit multiplication is not allowed; write '*'");
    return FieldElement(Rational(BigInt::from_string(num)));
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(line_, what + " in expression '" + std::string(s_) + "'");
  }

  std::string_view s_;
  const FieldContext& ctx_;
  int line_;
  std::size_t pos_ = 0;
};

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(const std::string& s, int line, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw parse_error(line, std::string("expected an integer ") + what + ", got '" + s + "'");
  }
}

}  // namespace detail

inline FieldElement parse_field_expression(std::string_view s, const FieldContext& ctx,
                                           int line = 0) {
  return detail::ExprParser(s, ctx, line).parse();
}

inline DecoratedGraph parse_graph(const std::string& text) {
  DecoratedGraph g;
  bool have_header = false, have_root = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> tok = detail::split_ws(raw);
    if (tok.empty()) continue;

    if (!have_header) {
      // header: n=<int> field=[...]
      int n = -1;
      std::string fieldval;
      for (const auto& t : tok) {
        if (t.rfind("n=", 0) == 0)
          n = detail::parse_int(t.substr(2), lineno, "for n");
        else if (t.rfind("field=", 0) == 0)
          fieldval = t.substr(6);
        else
          throw parse_error(lineno, "unexpected token '" + t + "' in header");
      }
      if (n < 1) throw parse_error(lineno, "header needs n=<positive vertex count>");
      if (fieldval.size() < 2 || fieldval.front() != '[' || fieldval.back() != ']')
        throw parse_error(lineno, "header needs field=[c0,c1,...] (monic, ascending)");
      std::vector<BigInt> coeffs;
      std::string body = fieldval.substr(1, fieldval.size() - 2);
      std::istringstream cs(body);
      std::string piece;
      while (std::getline(cs, piece, ',')) {
        if (piece.empty()) throw parse_error(lineno, "empty coefficient in field=[...]");
        try {
          coeffs.push_back(BigInt::from_string(piece));
        } catch (...) {
          throw parse_error(lineno, "bad coefficient '" + piece + "' in field=[...]");
        }
      }
      if (coeffs.empty()) throw parse_error(lineno, "field=[...] must list coefficients");
      try {
        g.field = make_field(MinimalPolynomial{std::move(coeffs)});
      } catch (const error& e) {
        throw parse_error(lineno, e.what());
      }
      g.n = n;
      g.names.resize(n);
      for (int i = 0; i < n; ++i) g.names[i] = "s" + std::to_string(i + 1);
      have_header = true;
      continue;
    }

    if (tok[0] == "vertex") {
      if (tok.size() != 3) throw parse_error(lineno, "vertex line: vertex <i> <name>");
      int i = detail::parse_int(tok[1], lineno, "vertex index");
      if (i < 1 || i > g.n) throw parse_error(lineno, "vertex index out of range");
      g.names[i - 1] = tok[2];
    } else if (tok[0] == "root") {
      if (tok.size() != 2) throw parse_error(lineno, "root line: root <i>");
      if (have_root) throw parse_error(lineno, "duplicate root line");
      int i = detail::parse_int(tok[1], lineno, "root index");
      if (i < 1 || i > g.n) throw parse_error(lineno, "root index out of range");
      g.root = i - 1;
      have_root = true;
    } else if (tok[0] == "edge") {
      if (tok.size() < 4) throw parse_error(lineno, "edge line: edge <i> <j> p=<label> ...");
      GraphEdge e;
      e.u = detail::parse_int(tok[1], lineno, "edge endpoint") - 1;
      e.v = detail::parse_int(tok[2], lineno, "edge endpoint") - 1;
      if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n)
        throw parse_error(lineno, "edge endpoint out of range");
      bool have_alpha = false, have_l = false, have_m = false, have_p = false;
      for (std::size_t k = 3; k < tok.size(); ++k) {
        const std::string& t = tok[k];
        if (t == "tree")
          e.in_tree = true;
        else if (t.rfind("p=", 0) == 0) {
          e.label = detail::parse_int(t.substr(2), lineno, "for p");
          have_p = true;
        } else if (t.rfind("alpha=", 0) == 0) {
          e.alpha = parse_field_expression(t.substr(6), *g.field, lineno);
          have_alpha = true;
        } else if (t.rfind("l=", 0) == 0) {
          e.l = parse_field_expression(t.substr(2), *g.field, lineno);
          have_l = true;
        } else if (t.rfind("m=", 0) == 0) {
          e.m = parse_field_expression(t.substr(2), *g.field, lineno);
          have_m = true;
        } else
          throw parse_error(lineno, "unexpected token '" + t + "' on edge line");
      }
      if (!have_p) throw parse_error(lineno, "edge needs p=<label>");
      if (e.label < 3) throw parse_error(lineno, "edge labels must be >= 3");
      if (!have_alpha) {
        // only unambiguous with a single-root label
        if (e.label == 3 || e.label == 4 || e.label == 6)
          e.alpha = edge_root_values(e.label, *g.field)[0];
        else
          throw parse_error(lineno, "label p=" + std::to_string(e.label) +
                                        " has no default alpha; bind alpha=<expr>");
      }
      if (have_l != have_m) throw parse_error(lineno, "bold edges need both l= and m=");
      if (e.in_tree && have_l) throw parse_error(lineno, "tree edges do not carry l/m");
      g.edges.push_back(std::move(e));
    } else {
      throw parse_error(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!have_header) throw parse_error(lineno, "missing header line n=... field=[...]");
  if (!have_root) throw parse_error(lineno, "missing root line");
  try {
    g.validate();
  } catch (const error& e) {
    throw parse_error(lineno, std::string("validation: ") + e.what());
  }
  return g;
}

inline std::string field_expression(const FieldElement& x) {
  // emitted in the same grammar the parser accepts
  const auto& c = x.coordinates();
  std::string s;
  auto rat = [](const Rational& q) {
    std::string t = q.to_string();
    return q.sign() < 0 || !q.is_integer() ? "(" + t + ")" : t;
  };
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    std::string term = rat(c[i]);
    for (std::size_t k = 0; k < i; ++k) term += "*theta";
    if (!s.empty()) s += "+";
    s += term;
  }
  return s.empty() ? "0" : s;
}

inline std::string serialize_graph(const DecoratedGraph& g) {
  std::string out = "n=" + std::to_string(g.n) + " field=[";
  const auto& mp = g.field->minimal_polynomial().coeffs;
  for (std::size_t i = 0; i < mp.size(); ++i) {
    if (i) out += ",";
    out += mp[i].to_string();
  }
  out += "]\n";
  for (int i = 0; i < g.n; ++i)
    if (g.names[i] != "s" + std::to_string(i + 1))
      out += "vertex " + std::to_string(i + 1) + " " + g.names[i] + "\n";
  for (const auto& e : g.edges) {
    out += "edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) +
           " p=" + std::to_string(e.label) + " alpha=" + field_expression(e.alpha);
    if (e.in_tree) out += " tree";
    if (e.l) out += " l=" + field_expression(*e.l);
    if (e.m) out += " m=" + field_expression(*e.m);
    out += "\n";
  }
  out += "root " + std::to_string(g.root + 1) + "\n";
  return out;
}

}  // namespace coxaff
