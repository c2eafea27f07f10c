#include <cctype>
#include <optional>
#include <sstream>

#include "ordcalc/text_io.hpp"

namespace ordcalc {

ParseError::ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected)
    : std::runtime_error(message), span_(span), expected_(std::move(expected)) {}

namespace {

enum class Tok {
  Number,
  Omega,     // w
  OmegaSub,  // w_
  SpaceC,    // C
  SpaceK,    // K
  SeqSub,    // l_
  Plus,
  Star,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Slash,
  Dot,
  Invalid,
  End,
};

std::string display(Tok t) {
  switch (t) {
    case Tok::Number: return "natural number";
    case Tok::Omega: return "'w'";
    case Tok::OmegaSub: return "'w_'";
    case Tok::SpaceC: return "'C'";
    case Tok::SpaceK: return "'K'";
    case Tok::SeqSub: return "'l_'";
    case Tok::Plus: return "'+'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Slash: return "'/'";
    case Tok::Dot: return "'.'";
    case Tok::Invalid: return "invalid character";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  SourceSpan span;
  std::string_view text;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back(Token{kind, {i, i + len}, text.substr(i, len)});
    i += len;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::Number, j - i);
      continue;
    }
    const bool underscore = i + 1 < text.size() && text[i + 1] == '_';
    switch (c) {
      case 'w': push(underscore ? Tok::OmegaSub : Tok::Omega, underscore ? 2 : 1); break;
      case 'l':
        if (!underscore) {
          push(Tok::Invalid, 1);
          break;
        }
        push(Tok::SeqSub, 2);
        break;
      case 'C': push(Tok::SpaceC, 1); break;
      case 'K': push(Tok::SpaceK, 1); break;
      case '+': push(Tok::Plus, 1); break;
      case '*': push(Tok::Star, 1); break;
      case '^': push(Tok::Caret, 1); break;
      case '(': push(Tok::LParen, 1); break;
      case ')': push(Tok::RParen, 1); break;
      case '[': push(Tok::LBracket, 1); break;
      case ']': push(Tok::RBracket, 1); break;
      case ',': push(Tok::Comma, 1); break;
      case '/': push(Tok::Slash, 1); break;
      case '.': push(Tok::Dot, 1); break;
      default: push(Tok::Invalid, 1); break;
    }
  }
  out.push_back(Token{Tok::End, {text.size(), text.size()}, {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), tokens_(lex(text)) {}

  OrdinalExpr whole_ordinal() {
    OrdinalExpr e = ordinal();
    expect_end({Tok::Plus, Tok::Star, Tok::Caret});
    return e;
  }

  SpaceExpr whole_space() {
    SpaceExpr s = space();
    expect_end({});
    return s;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail({kind});
    return tokens_[pos_++];
  }

  void expect_end(std::vector<Tok> continuations) {
    if (peek().kind == Tok::End) return;
    continuations.push_back(Tok::End);
    fail(continuations);
  }

  [[noreturn]] void fail(const std::vector<Tok>& expected) const {
    const Token& t = peek();
    std::vector<std::string> names;
    for (Tok k : expected) names.push_back(display(k));
    std::ostringstream msg;
    msg << "syntax error at offset " << t.span.start << ": unexpected "
        << (t.kind == Tok::End ? std::string("end of input") : "'" + std::string(t.text) + "'") << ", expected ";
    for (std::size_t i = 0; i < names.size(); ++i) msg << (i == 0 ? "" : i + 1 == names.size() ? " or " : ", ") << names[i];
    throw ParseError(msg.str(), t.span, std::move(names));
  }

  std::size_t last_end() const { return tokens_[pos_ - 1].span.end; }

  OrdinalExpr ordinal() {
    const std::size_t start = peek().span.start;
    OrdinalExpr lhs = product();
    while (accept(Tok::Plus)) {
      OrdinalExpr rhs = product();
      lhs = OrdinalExpr::add(std::move(lhs), std::move(rhs), {start, last_end()});
    }
    return lhs;
  }

  OrdinalExpr product() {
    const std::size_t start = peek().span.start;
    OrdinalExpr lhs = power();
    while (accept(Tok::Star)) {
      OrdinalExpr rhs = power();
      lhs = OrdinalExpr::mul(std::move(lhs), std::move(rhs), {start, last_end()});
    }
    return lhs;
  }

  OrdinalExpr power() {
    const std::size_t start = peek().span.start;
    OrdinalExpr base = atom();
    if (!accept(Tok::Caret)) return base;
    OrdinalExpr exponent = power();
    return OrdinalExpr::pow(std::move(base), std::move(exponent), {start, last_end()});
  }

  OrdinalExpr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        ++pos_;
        return OrdinalExpr::natural(Natural(std::string(t.text)), t.span);
      case Tok::Omega:
        ++pos_;
        return OrdinalExpr::omega(t.span);
      case Tok::OmegaSub: {
        ++pos_;
        if (peek().kind == Tok::Number) {
          const Token& n = tokens_[pos_++];
          return OrdinalExpr::aleph(OrdinalExpr::natural(Natural(std::string(n.text)), n.span), {t.span.start, n.span.end});
        }
        if (!accept(Tok::LBracket)) fail({Tok::Number, Tok::LBracket});
        OrdinalExpr index = ordinal();
        expect(Tok::RBracket);
        return OrdinalExpr::aleph(std::move(index), {t.span.start, last_end()});
      }
      case Tok::LParen: {
        ++pos_;
        OrdinalExpr inner = ordinal();
        expect(Tok::RParen);
        return inner;
      }
      default:
        fail({Tok::Number, Tok::Omega, Tok::OmegaSub, Tok::LParen});
    }
  }

  struct Located {
    Ordinal value;
    SourceSpan span;
  };

  Located located_ordinal() {
    const std::size_t start = peek().span.start;
    OrdinalExpr e = ordinal();
    SourceSpan span{start, last_end()};
    Ordinal value = normalize(e);
    if (value.is_zero()) throw DomainError(where(span) + "space index must be at least 1");
    return {std::move(value), span};
  }

  std::string where(SourceSpan span) const {
    return "offset " + std::to_string(span.start) + "-" + std::to_string(span.end) + ": ";
  }

  Natural natural_token() {
    const Token& t = expect(Tok::Number);
    return Natural(std::string(t.text));
  }

  // NUMBER ("." NUMBER)? ("/" NUMBER)?
  Exponent exponent() {
    const std::size_t start = peek().span.start;
    Exponent value(natural_token());
    if (accept(Tok::Dot)) {
      const Token& frac = expect(Tok::Number);
      Natural scale = 1;
      for (std::size_t i = 0; i < frac.text.size(); ++i) scale *= 10;
      value += Exponent(Natural(std::string(frac.text)), scale);
    }
    if (accept(Tok::Slash)) {
      const Natural den = natural_token();
      if (den == 0) throw DomainError(where({start, last_end()}) + "zero denominator in exponent");
      value /= Exponent(den);
    }
    if (value <= 1) throw DomainError(where({start, last_end()}) + "exponent must exceed 1");
    return value;
  }

  // "C" "(" ordinal ("," "l_" exponent)? ")"
  std::pair<Located, std::optional<Exponent>> c_space() {
    expect(Tok::SpaceC);
    expect(Tok::LParen);
    Located xi = located_ordinal();
    std::optional<Exponent> p;
    if (accept(Tok::Comma)) {
      expect(Tok::SeqSub);
      p = exponent();
    } else if (peek().kind != Tok::RParen) {
      fail({Tok::Plus, Tok::Star, Tok::Caret, Tok::Comma, Tok::RParen});
    }
    expect(Tok::RParen);
    return {std::move(xi), std::move(p)};
  }

  std::pair<Located, Exponent> c_space_with_lp() {
    const std::size_t start = peek().span.start;
    auto [xi, p] = c_space();
    if (!p) throw ParseError("offset " + std::to_string(start) + ": operator spaces need the form C(ord, l_P)",
                             {start, last_end()}, {display(Tok::Comma)});
    return {std::move(xi), std::move(*p)};
  }

  SpaceExpr space() {
    if (peek().kind == Tok::SpaceK) {
      ++pos_;
      expect(Tok::LParen);
      auto [lambda, p] = c_space_with_lp();
      expect(Tok::Comma);
      auto [xi, q] = c_space_with_lp();
      expect(Tok::RParen);
      return CompactOperatorSpace{lambda.value, p, xi.value, q};
    }
    if (peek().kind != Tok::SpaceC) fail({Tok::SpaceC, Tok::SpaceK});
    auto [xi, p] = c_space();
    if (p) return VectorSpace{xi.value, *p};
    return ScalarSpace{xi.value};
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

OrdinalExpr parse_ordinal(std::string_view text) { return Parser(text).whole_ordinal(); }

SpaceExpr parse_space(std::string_view text) { return Parser(text).whole_space(); }

}  // namespace ordcalc
