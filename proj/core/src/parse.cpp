#include "liaison/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace liaison {

namespace {

struct Token {
  enum Kind { number, variable, plus, minus, star, caret, lparen, rparen, end } kind;
  int64_t num = 0, den = 1;
  int var = -1;
  int line = 1, col = 1;
};

class Lexer {
 public:
  Lexer(const std::string& text, int line0) : s_(text), line_(line0) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= s_.size()) {
      t.kind = Token::end;
      return t;
    }
    char c = s_[pos_];
    if (c == '+') return simple(Token::plus);
    if (c == '-') return simple(Token::minus);
    if (c == '*') return simple(Token::star);
    if (c == '^') return simple(Token::caret);
    if (c == '(') return simple(Token::lparen);
    if (c == ')') return simple(Token::rparen);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::number;
      t.num = read_int();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        advance();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          throw ParseError("expected denominator after '/'", line_, col_);
        t.den = read_int();
        if (t.den == 0) throw ParseError("zero denominator", t.line, t.col);
      }
      return t;
    }
    if (c == 'x') {
      advance();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected variable index after 'x'", line_, col_);
      t.kind = Token::variable;
      t.var = static_cast<int>(read_int());
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 0;
      }
      advance();
    }
  }
  void advance() {
    ++pos_;
    ++col_;
  }
  Token simple(Token::Kind k) {
    Token t;
    t.kind = k;
    t.line = line_;
    t.col = col_;
    advance();
    return t;
  }
  int64_t read_int() {
    int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      advance();
    }
    return v;
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_, col_ = 1;
};

class Parser {
 public:
  Parser(const PolyRing& r, const std::string& text, int line0)
      : r_(r), lex_(text, line0), cur_(lex_.next()) {}

  Polynomial parse() {
    Polynomial p = expr();
    expect(Token::end, "trailing input");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    while (cur_.kind == Token::plus || cur_.kind == Token::minus) {
      bool neg = cur_.kind == Token::minus;
      eat();
      Polynomial t = term();
      acc = neg ? poly_sub(acc, t) : poly_add(acc, t);
    }
    return acc;
  }

  Polynomial term() {
    bool neg = false;
    while (cur_.kind == Token::minus || cur_.kind == Token::plus) {
      if (cur_.kind == Token::minus) neg = !neg;
      eat();
    }
    Polynomial acc = factor();
    for (;;) {
      if (cur_.kind == Token::star) {
        eat();
        acc = poly_mul(acc, factor());
      } else if (cur_.kind == Token::number || cur_.kind == Token::variable ||
                 cur_.kind == Token::lparen) {
        acc = poly_mul(acc, factor());  // implicit juxtaposition
      } else {
        break;
      }
    }
    return neg ? poly_neg(acc) : acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (cur_.kind == Token::caret) {
      eat();
      if (cur_.kind != Token::number || cur_.den != 1)
        throw ParseError("expected integer exponent", cur_.line, cur_.col);
      int64_t e = cur_.num;
      eat();
      Polynomial acc = Polynomial::constant(r_, r_.field().one());
      for (int64_t k = 0; k < e; ++k) acc = poly_mul(acc, base);
      return acc;
    }
    return base;
  }

  Polynomial primary() {
    if (cur_.kind == Token::number) {
      Polynomial p = Polynomial::constant(r_, r_.field().from_fraction(cur_.num, cur_.den));
      eat();
      return p;
    }
    if (cur_.kind == Token::variable) {
      if (cur_.var >= r_.nvars())
        throw ParseError("variable x" + std::to_string(cur_.var) + " exceeds ring with " +
                             std::to_string(r_.nvars()) + " variables",
                         cur_.line, cur_.col);
      Polynomial p = Polynomial::variable(r_, cur_.var);
      eat();
      return p;
    }
    if (cur_.kind == Token::lparen) {
      eat();
      Polynomial p = expr();
      expect(Token::rparen, "expected ')'");
      eat();
      return p;
    }
    throw ParseError("expected number, variable or '('", cur_.line, cur_.col);
  }

  void eat() { cur_ = lex_.next(); }
  void expect(Token::Kind k, const char* msg) {
    if (cur_.kind != k) throw ParseError(msg, cur_.line, cur_.col);
  }

  const PolyRing& r_;
  Lexer lex_;
  Token cur_;
};

Polynomial parse_polynomial_at(const PolyRing& r, const std::string& text, int line0) {
  return Parser(r, text, line0).parse();
}

}  // namespace

Polynomial parse_polynomial(const PolyRing& r, const std::string& text) {
  return parse_polynomial_at(r, text, 1);
}

const Ideal& IdealFile::get(const std::string& name) const {
  for (const auto& [n, i] : ideals)
    if (n == name) return i;
  throw PreconditionError("no ideal named '" + name + "' in file");
}

IdealFile parse_ideal_file_text(const std::string& text,
                                std::optional<CoefficientField> field_override) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::optional<PolyRing> ring;
  std::vector<std::pair<std::string, std::vector<Polynomial>>> blocks;

  auto strip = [](std::string s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("ring", 0) == 0) {
      std::istringstream ls(t.substr(4));
      std::string fieldspec, varskw;
      int nv = 0;
      ls >> fieldspec >> varskw >> nv;
      if (varskw != "vars" || nv < 2)
        throw ParseError("malformed ring header (expected: ring <field> vars <n>)", lineno, 1);
      CoefficientField F = CoefficientField::rationals();
      if (fieldspec == "QQ") {
        F = CoefficientField::rationals();
      } else if (fieldspec.rfind("GF(", 0) == 0 && fieldspec.back() == ')') {
        F = CoefficientField::prime(std::stoll(fieldspec.substr(3, fieldspec.size() - 4)));
      } else {
        throw ParseError("unknown field '" + fieldspec + "' (use QQ or GF(p))", lineno, 6);
      }
      if (field_override) F = *field_override;
      ring.emplace(F, nv);
      continue;
    }
    if (t.rfind("ideal", 0) == 0) {
      if (!ring) throw ParseError("ideal block before ring header", lineno, 1);
      std::string name = strip(t.substr(5));
      if (name.empty() || name.back() != ':')
        throw ParseError("malformed ideal header (expected: ideal <name>:)", lineno, 1);
      name.pop_back();
      name = strip(name);
      blocks.emplace_back(name, std::vector<Polynomial>{});
      continue;
    }
    if (!ring || blocks.empty()) throw ParseError("generator outside an ideal block", lineno, 1);
    Polynomial p = parse_polynomial_at(*ring, t, lineno);
    if (!p.is_homogeneous()) throw ParseError("inhomogeneous generator '" + t + "'", lineno, 1);
    blocks.back().second.push_back(std::move(p));
  }
  if (!ring) throw ParseError("missing ring header", lineno == 0 ? 1 : lineno, 1);

  IdealFile out{*ring, {}};
  for (auto& [name, gens] : blocks) out.ideals.emplace_back(name, Ideal(*ring, std::move(gens)));
  return out;
}

IdealFile parse_ideal_file(const std::string& path,
                           std::optional<CoefficientField> field_override) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open ideal file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal_file_text(buf.str(), field_override);
}

std::string print_ideal_file(const IdealFile& f) {
  std::string out =
      "ring " + f.ring.field().to_string() + " vars " + std::to_string(f.ring.nvars()) + "\n";
  for (const auto& [name, ideal] : f.ideals) {
    out += "\nideal " + name + ":\n";
    for (const auto& g : ideal.generators()) out += g.to_string() + "\n";
  }
  return out;
}

std::vector<Polynomial> parse_form_list(const PolyRing& r, const std::string& text) {
  std::vector<Polynomial> out;
  std::string cur;
  auto flush = [&]() {
    bool nonspace = false;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) nonspace = true;
    if (nonspace) out.push_back(parse_polynomial(r, cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ';') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

}  // namespace liaison
