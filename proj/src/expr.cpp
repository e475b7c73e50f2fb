#include "sl2chow/expr.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <optional>
#include <vector>

namespace sl2chow {

namespace {

struct Token {
  enum Kind { number, ident, plus, minus, star, slash, caret, hash, lparen, rparen, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
      tokens.push_back({Token::number, num, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        id += text[i++];
      tokens.push_back({Token::ident, id, start});
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::plus; break;
      case '-': kind = Token::minus; break;
      case '*': kind = Token::star; break;
      case '/': kind = Token::slash; break;
      case '^': kind = Token::caret; break;
      case '#': kind = Token::hash; break;
      case '(': kind = Token::lparen; break;
      case ')': kind = Token::rparen; break;
      default:
        fail(Errc::syntax_error,
             "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(start));
    }
    tokens.push_back({kind, std::string(1, c), start});
    ++i;
  }
  tokens.push_back({Token::end, "", text.size()});
  return tokens;
}

class Parser {
 public:
  Parser(const std::string& text, const ProductVariety& variety)
      : tokens_(tokenize(text)), variety_(variety) {}

  CohClass parse() {
    CohClass z = parse_expr();
    expect(Token::end, "end of input");
    return z;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  void expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind)
      fail(Errc::syntax_error, "expected " + what + " at position " + std::to_string(peek().pos));
    take();
  }

  CohClass parse_expr() {
    CohClass z = parse_term();
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      Token op = take();
      CohClass rhs = parse_term();
      z = (op.kind == Token::plus) ? z + rhs : z - rhs;
    }
    return z;
  }

  CohClass parse_term() {
    CohClass z = parse_factor();
    std::optional<bool> pontryagin_chain;  // set by the first product operator
    while (true) {
      Token::Kind k = peek().kind;
      if (k == Token::star || k == Token::slash) {
        if (pontryagin_chain && *pontryagin_chain)
          fail(Errc::mixed_product_ambiguity,
               "'*' and '#' mixed without parentheses at position " + std::to_string(peek().pos));
        pontryagin_chain = false;
        Token op = take();
        CohClass rhs = parse_factor();
        if (op.kind == Token::star) {
          z = z * rhs;
        } else {
          int deg = 0;
          if (!rhs.value.is_homogeneous(&deg) || deg > 0 || rhs.is_zero())
            fail(Errc::division_error,
                 "division needs a nonzero scalar at position " + std::to_string(op.pos));
          z = z.scaled(Rational(1) / rhs.value.coefficient(0));
        }
      } else if (k == Token::hash) {
        if (pontryagin_chain && !*pontryagin_chain)
          fail(Errc::mixed_product_ambiguity,
               "'*' and '#' mixed without parentheses at position " + std::to_string(peek().pos));
        pontryagin_chain = true;
        take();
        CohClass rhs = parse_factor();
        z = pontryagin(z, rhs);
      } else {
        return z;
      }
    }
  }

  CohClass parse_factor() {
    if (peek().kind == Token::minus) {
      take();
      return -parse_factor();
    }
    if (peek().kind == Token::ident && peek().text == "F") {
      take();
      return fourier(parse_factor());
    }
    return parse_power();
  }

  CohClass parse_power() {
    CohClass base = parse_atom();
    if (peek().kind != Token::caret) return base;
    Token op = take();
    if (peek().kind != Token::number)
      fail(Errc::syntax_error,
           "expected a nonnegative integer exponent at position " + std::to_string(op.pos));
    long e = std::stol(take().text);
    CohClass out = one_class(variety_);
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  CohClass parse_atom() {
    Token t = peek();
    if (t.kind == Token::number) {
      take();
      return CohClass{variety_, ExtClass::scalar(variety_.algebra(), rat_from_string(t.text))};
    }
    if (t.kind == Token::lparen) {
      take();
      CohClass z = parse_expr();
      expect(Token::rparen, "')'");
      return z;
    }
    if (t.kind == Token::ident) {
      take();
      return identifier(t);
    }
    fail(Errc::syntax_error, "expected a value at position " + std::to_string(t.pos));
  }

  CohClass identifier(const Token& t) {
    const std::string& id = t.text;
    if (id == "one") return one_class(variety_);
    if (id == "theta") return theta(variety_);
    if (id == "pt") return point_class(variety_);
    if ((id[0] == 'x' || id[0] == 'y') && id.size() > 1) {
      bool digits = true;
      for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) digits = false;
      if (digits) {
        int i = std::stoi(id.substr(1));
        if (i < 1 || i > variety_.context().g)
          fail(Errc::unknown_identifier,
               "generator index out of range at position " + std::to_string(t.pos));
        return CohClass{variety_, variety_.generator(1, id[0], i)};
      }
    }
    fail(Errc::unknown_identifier,
         "unknown identifier '" + id + "' at position " + std::to_string(t.pos));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ProductVariety variety_;
};

}  // namespace

CohClass parse_class(const std::string& text, const ProductVariety& variety) {
  if (variety.factors() != 1)
    fail(Errc::not_single_factor, "expressions are parsed over a single factor");
  return Parser(text, variety).parse();
}

std::string print_rational(const Rational& r) { return r.get_str(); }

namespace {

struct Term {
  Rational coeff;
  std::string monomial;  // empty for scalars
};

std::string join_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms) {
    Rational a = abs(t.coeff);
    bool negative = t.coeff < 0;
    std::string piece;
    if (t.monomial.empty())
      piece = print_rational(a);
    else if (a == 1)
      piece = t.monomial;
    else
      piece = print_rational(a) + "*" + t.monomial;
    if (first) {
      out += negative ? "-" + piece : piece;
      first = false;
    } else {
      out += negative ? " - " + piece : " + " + piece;
    }
  }
  return out;
}

// Tries to express z as sum_k c_k theta^k; empty when not representable.
std::optional<std::vector<Term>> theta_polynomial(const CohClass& z) {
  if (z.variety.factors() != 1) return std::nullopt;
  int g = z.variety.context().g;
  CohClass th = theta(z.variety);
  std::vector<CohClass> powers{one_class(z.variety)};
  for (int k = 1; k <= g; ++k) powers.push_back(powers.back() * th);

  std::vector<Term> terms;
  CohClass rest = z;
  for (int k = 0; k <= g; ++k) {
    CohClass part{rest.variety, rest.value.graded_part(2 * k)};
    if (part.is_zero()) continue;
    Mask lead = powers[static_cast<std::size_t>(k)].value.terms().begin()->first;
    Rational c = part.value.coefficient(lead) /
                 powers[static_cast<std::size_t>(k)].value.coefficient(lead);
    if (c == 0 || !(part == powers[static_cast<std::size_t>(k)].scaled(c))) return std::nullopt;
    std::string mono;
    if (k == 1) mono = "theta";
    if (k >= 2) mono = "theta^" + std::to_string(k);
    terms.push_back({c, mono});
    rest = rest - part;
  }
  if (!rest.is_zero()) return std::nullopt;
  return terms;
}

}  // namespace

std::string print_monomials(const CohClass& z) {
  const auto& labels = z.variety.algebra()->labels;
  std::vector<std::pair<std::pair<int, Mask>, Term>> ordered;
  for (const auto& [m, c] : z.value.terms()) {
    std::string mono;
    Mask rest = m;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      if (!mono.empty()) mono += "*";
      mono += labels[static_cast<std::size_t>(i)];
    }
    ordered.push_back({{mask_degree(m), m}, Term{c, mono}});
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Term> terms;
  for (auto& [key, t] : ordered) terms.push_back(std::move(t));
  return join_terms(terms);
}

std::string print_class(const CohClass& z) {
  if (auto terms = theta_polynomial(z)) return join_terms(*terms);
  return print_monomials(z);
}

}  // namespace sl2chow
