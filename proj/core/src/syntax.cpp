#include "lmc/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "lmc/errors.hpp"

namespace lmc {

namespace {

enum class Tok { integer, slash, star, caret, plus, minus, lbracket, rbracket, comma, ident, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(current_.line, current_.column, expected, describe(current_));
  }

  Token expect(Tok kind, const std::string& expected) {
    if (current_.kind != kind) fail(expected);
    return take();
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
    const std::size_t line = line_;
    const std::size_t column = column_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::end, "", line, column};
      return;
    }
    const char ch = text_[pos_];
    auto single = [&](Tok kind) {
      current_ = {kind, std::string(1, ch), line, column};
      bump();
    };
    switch (ch) {
      case '/': return single(Tok::slash);
      case '*': return single(Tok::star);
      case '^': return single(Tok::caret);
      case '+': return single(Tok::plus);
      case '-': return single(Tok::minus);
      case '[': return single(Tok::lbracket);
      case ']': return single(Tok::rbracket);
      case ',': return single(Tok::comma);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits.push_back(text_[pos_]);
        bump();
      }
      current_ = {Tok::integer, digits, line, column};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string word;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        word.push_back(text_[pos_]);
        bump();
      }
      current_ = {Tok::ident, word, line, column};
      return;
    }
    throw ParseError(line, column, "a token", "'" + std::string(1, ch) + "'");
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_{Tok::end, "", 1, 1};
};

Rational parse_rational(Lexer& lex) {
  const Token num = lex.expect(Tok::integer, "a number");
  if (lex.peek().kind != Tok::slash) return Rational::parse(num.text);
  lex.take();
  const Token den = lex.peek();
  lex.expect(Tok::integer, "a denominator");
  if (std::all_of(den.text.begin(), den.text.end(), [](char ch) { return ch == '0'; })) {
    throw ParseError(den.line, den.column, "a nonzero denominator", describe(den));
  }
  return Rational::parse(num.text + "/" + den.text);
}

// Index of an identifier "<letter><digits>" in 1..limit, returned 0-based.
int parse_index(const Token& t, char letter, int limit, const std::string& what) {
  const std::string expected = what + " " + letter + "1.." + letter + std::to_string(limit);
  if (t.kind != Tok::ident || t.text.size() < 2 || t.text[0] != letter) {
    throw ParseError(t.line, t.column, expected, describe(t));
  }
  const std::string digits = t.text.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
      digits.size() > 6) {
    throw ParseError(t.line, t.column, expected, describe(t));
  }
  const int value = std::stoi(digits);
  if (value < 1 || value > limit) throw ParseError(t.line, t.column, expected, describe(t));
  return value - 1;
}

bool is_sign(Tok k) { return k == Tok::plus || k == Tok::minus; }

TruncPoly parse_poly_term(Lexer& lex, int num_vars, int cap) {
  Rational coef(1);
  Monomial mono;
  bool first = true;
  while (true) {
    const Token& t = lex.peek();
    if (t.kind == Tok::integer) {
      coef *= parse_rational(lex);
    } else if (t.kind == Tok::ident) {
      const Token var = lex.take();
      const int j = parse_index(var, 't', num_vars, "a variable");
      int power = 1;
      if (lex.peek().kind == Tok::caret) {
        lex.take();
        const Token e = lex.expect(Tok::integer, "an exponent");
        if (e.text.size() > 3 || std::stoi(e.text) > 255) {
          throw ParseError(e.line, e.column, "an exponent at most 255", describe(e));
        }
        power = std::stoi(e.text);
      }
      if (mono.exponent(j) + power > 255) throw ParseError(var.line, var.column, "a smaller exponent", describe(var));
      mono.set_exponent(j, mono.exponent(j) + power);
    } else {
      lex.fail(first ? "a number or variable" : "a number or variable after '*'");
    }
    first = false;
    if (lex.peek().kind != Tok::star) break;
    lex.take();
  }
  // Degrees above the cap vanish in the quotient ring.
  return TruncPoly::monomial(num_vars, cap, mono, mono.degree() <= cap ? coef : Rational(0));
}

LieElement parse_element_expr(Lexer& lex, const Context& ctx);

LieElement parse_atom(Lexer& lex, const Context& ctx) {
  const Token& t = lex.peek();
  if (t.kind == Tok::ident) {
    const Token g = lex.take();
    return generator(ctx, parse_index(g, 'x', ctx.m(), "a generator"));
  }
  if (t.kind == Tok::lbracket) {
    lex.take();
    std::vector<LieElement> args;
    args.push_back(parse_element_expr(lex, ctx));
    if (lex.peek().kind != Tok::comma) lex.fail("','");
    while (lex.peek().kind == Tok::comma) {
      lex.take();
      args.push_back(parse_element_expr(lex, ctx));
    }
    lex.expect(Tok::rbracket, "',' or ']'");
    return bracket(args);
  }
  lex.fail("a generator or '['");
}

LieElement parse_term(Lexer& lex, const Context& ctx) {
  if (lex.peek().kind == Tok::integer) {
    const Rational coef = parse_rational(lex);
    if (lex.peek().kind != Tok::star) {
      if (coef.is_zero()) return LieElement(ctx);
      lex.fail("'*'");
    }
    lex.take();
    return coef * parse_atom(lex, ctx);
  }
  return parse_atom(lex, ctx);
}

LieElement parse_element_expr(Lexer& lex, const Context& ctx) {
  bool negative = false;
  if (is_sign(lex.peek().kind)) negative = lex.take().kind == Tok::minus;
  LieElement acc = parse_term(lex, ctx);
  if (negative) acc = -acc;
  while (is_sign(lex.peek().kind)) {
    const bool minus = lex.take().kind == Tok::minus;
    const LieElement t = parse_term(lex, ctx);
    if (minus) {
      acc -= t;
    } else {
      acc += t;
    }
  }
  return acc;
}

std::string print_monomial(const Monomial& m, int num_vars) {
  std::string out;
  for (int j = 0; j < num_vars; ++j) {
    const int e = m.exponent(j);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(j + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Joins signed terms as "a - b + c"; body is the term without its sign.
void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

}  // namespace

TruncPoly parse_poly(std::string_view text, int num_vars, int cap) {
  Lexer lex(text);
  TruncPoly acc(num_vars, cap);
  bool negative = false;
  if (is_sign(lex.peek().kind)) negative = lex.take().kind == Tok::minus;
  TruncPoly first = parse_poly_term(lex, num_vars, cap);
  acc += negative ? -first : first;
  while (is_sign(lex.peek().kind)) {
    const bool minus = lex.take().kind == Tok::minus;
    const TruncPoly t = parse_poly_term(lex, num_vars, cap);
    acc += minus ? -t : t;
  }
  if (lex.peek().kind != Tok::end) lex.fail("'+', '-', '*' or end of input");
  return acc;
}

std::string print_poly(const TruncPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, coef] : p.terms()) {
    const Rational mag = coef.sign() < 0 ? -coef : coef;
    std::string body;
    if (mono.degree() == 0) {
      body = mag.to_string();
    } else if (mag.is_one()) {
      body = print_monomial(mono, p.num_vars());
    } else {
      body = mag.to_string() + "*" + print_monomial(mono, p.num_vars());
    }
    append_signed(out, coef.sign() < 0, body);
  }
  return out;
}

LieElement parse_element(const Context& ctx, std::string_view text) {
  Lexer lex(text);
  LieElement u = parse_element_expr(lex, ctx);
  if (lex.peek().kind != Tok::end) lex.fail("'+', '-' or end of input");
  return u;
}

std::string print_tuple(const BasisTuple& t) {
  if (t.size() == 1) return "x" + std::to_string(t[0] + 1);
  std::string out = "[";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k > 0) out += ",";
    out += "x" + std::to_string(t[k] + 1);
  }
  return out + "]";
}

std::string print_element(const LieElement& u, ElementStyle style) {
  if (style == ElementStyle::wreath) {
    std::string beta;
    std::string module;
    for (int i = 0; i < u.context().m(); ++i) {
      if (i > 0) {
        beta += ", ";
        module += ", ";
      }
      beta += u.beta()[static_cast<std::size_t>(i)].to_string();
      module += print_poly(u.module()[static_cast<std::size_t>(i)]);
    }
    return "beta=(" + beta + "); module=(" + module + ")";
  }
  const BasisForm b = to_basis(u);
  std::vector<std::pair<BasisTuple, Rational>> terms;
  for (int i = 0; i < u.context().m(); ++i) {
    if (!b.linear[static_cast<std::size_t>(i)].is_zero()) terms.emplace_back(BasisTuple{i}, b.linear[static_cast<std::size_t>(i)]);
  }
  std::vector<std::pair<BasisTuple, Rational>> comm(b.comm.begin(), b.comm.end());
  std::stable_sort(comm.begin(), comm.end(), [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
  terms.insert(terms.end(), comm.begin(), comm.end());
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [t, coef] : terms) {
    const Rational mag = coef.sign() < 0 ? -coef : coef;
    append_signed(out, coef.sign() < 0, mag.to_string() + "*" + print_tuple(t));
  }
  return out;
}

namespace {

int json_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ValidationError(std::string("automorphism JSON needs an integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

}  // namespace

JacobianMatrix jacobian_from_json(const Context& ctx, const Json& rows) {
  const auto m = static_cast<std::size_t>(ctx.m());
  if (!rows.is_array() || rows.size() != m) throw ValidationError("jacobian must be an m x m array");
  JacobianMatrix jac(ctx);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m) throw ValidationError("jacobian must be an m x m array");
    for (std::size_t j = 0; j < m; ++j) {
      if (!rows[i][j].is_string()) throw ValidationError("jacobian entries must be polynomial strings");
      jac(static_cast<int>(i), static_cast<int>(j)) =
          parse_poly(rows[i][j].get<std::string>(), ctx.m(), ctx.module_cap());
    }
  }
  return jac;
}

Endomorphism automorphism_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("automorphism JSON must be an object");
  const Context ctx(json_int(j, "m"), json_int(j, "c"));
  if (j.contains("images")) {
    const Json& images = j.at("images");
    if (!images.is_array() || images.size() != static_cast<std::size_t>(ctx.m())) {
      throw ValidationError("\"images\" must list one element per generator");
    }
    std::vector<LieElement> parsed;
    for (const auto& s : images) {
      if (!s.is_string()) throw ValidationError("images must be element strings");
      parsed.push_back(parse_element(ctx, s.get<std::string>()));
    }
    Endomorphism phi(ctx, std::move(parsed));
    if (!phi.is_automorphism()) throw ValidationError("map is not an automorphism: linear part is singular");
    return phi;
  }
  if (j.contains("jacobian")) return ia_from_jacobian(jacobian_from_json(ctx, j.at("jacobian")));
  throw ValidationError("automorphism JSON needs \"images\" or \"jacobian\"");
}

Endomorphism parse_automorphism(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, json_text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (json_text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, "valid JSON", stop < json_text.size() ? "'" + std::string(1, json_text[stop]) + "'"
                                                                          : "end of input");
  }
  return automorphism_from_json(j);
}

Json jacobian_to_json(const JacobianMatrix& jac) {
  Json rows = Json::array();
  for (int i = 0; i < jac.context().m(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < jac.context().m(); ++j) row.push_back(print_poly(jac(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json automorphism_to_json(const Endomorphism& phi) {
  Json j;
  j["m"] = phi.context().m();
  j["c"] = phi.context().c();
  Json images = Json::array();
  for (const auto& img : phi.images()) images.push_back(print_element(img));
  j["images"] = std::move(images);
  if (phi.is_ia()) j["jacobian"] = jacobian_to_json(jacobian(phi));
  return j;
}

}  // namespace lmc
