#include "dejima/parser.hpp"

#include <cctype>
#include <optional>

#include "dejima/analysis.hpp"
#include "dejima/errors.hpp"

namespace dejima {

namespace {

enum class Tok {
  Ident,      // lowercase-first identifier (symbol constant / predicate name)
  Variable,   // uppercase-first identifier
  Underscore, // bare `_`
  Int,
  Decimal,
  String,
  LParen,
  RParen,
  Comma,
  Dot,
  ColonDash,  // :-
  Colon,
  Plus,
  Minus,
  Star,
  Eq,
  Neq,
  Lt,
  Leq,
  NotKw,
  End,
};

struct Token {
  Tok tok;
  std::string text;
  long long int_value = 0;
  Decimal dec_value;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws_and_comments();
    Token t;
    t.line = line_;
    t.col = col_;
    if (eof()) {
      t.tok = Tok::End;
      return t;
    }
    char c = peek();
    if (c == '(') return advance_as(t, Tok::LParen);
    if (c == ')') return advance_as(t, Tok::RParen);
    if (c == ',') return advance_as(t, Tok::Comma);
    if (c == '.') {
      // A dot starting a number would have been eaten by lex_number via a
      // digit; a bare dot is a statement terminator.
      return advance_as(t, Tok::Dot);
    }
    if (c == ':') {
      get();
      if (!eof() && peek() == '-') {
        get();
        t.tok = Tok::ColonDash;
      } else {
        t.tok = Tok::Colon;
      }
      return t;
    }
    if (c == '+') return advance_as(t, Tok::Plus);
    if (c == '-') return advance_as(t, Tok::Minus);
    if (c == '*') return advance_as(t, Tok::Star);
    if (c == '=') return advance_as(t, Tok::Eq);
    if (c == '<') {
      get();
      if (!eof() && peek() == '>') {
        get();
        t.tok = Tok::Neq;
      } else if (!eof() && peek() == '=') {
        get();
        t.tok = Tok::Leq;
      } else {
        t.tok = Tok::Lt;
      }
      return t;
    }
    if (c == '!') {
      get();
      if (!eof() && peek() == '=') {
        get();
        t.tok = Tok::Neq;
        return t;
      }
      throw ParseError(t.line, t.col, "unexpected '!'");
    }
    if (c == '"' || c == '\'') return lex_string(t);
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(t, false);
    if (c == '_' || std::isalpha(static_cast<unsigned char>(c))) return lex_ident(t);
    throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char get() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  Token advance_as(Token t, Tok tok) {
    get();
    t.tok = tok;
    return t;
  }

  void skip_ws_and_comments() {
    while (!eof()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else if (c == '%' || c == '#') {
        while (!eof() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  Token lex_string(Token t) {
    char quote = get();
    std::string out;
    while (true) {
      if (eof()) throw ParseError(t.line, t.col, "unterminated string literal");
      char c = get();
      if (c == quote) break;
      if (c == '\\') {
        if (eof()) throw ParseError(t.line, t.col, "unterminated string literal");
        char e = get();
        switch (e) {
          case 'n':
            out += '\n';
            break;
          case 't':
            out += '\t';
            break;
          default:
            out += e;
        }
        continue;
      }
      if (c == '\n') throw ParseError(t.line, t.col, "newline in string literal");
      out += c;
    }
    t.tok = Tok::String;
    t.text = std::move(out);
    return t;
  }

  Token lex_number(Token t, bool negative) {
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (!eof() && peek() == '.' && pos_ + 1 < src_.size() &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      digits += get();  // '.'
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
      try {
        t.dec_value = Decimal::parse((negative ? "-" : "") + digits);
      } catch (const std::invalid_argument& e) {
        throw ParseError(t.line, t.col, e.what());
      }
      t.tok = Tok::Decimal;
      return t;
    }
    try {
      t.int_value = std::stoll((negative ? "-" : "") + digits);
    } catch (const std::exception&) {
      throw ParseError(t.line, t.col, "integer literal out of range");
    }
    t.tok = Tok::Int;
    return t;
  }

  Token lex_ident(Token t) {
    std::string name;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                      peek() == '\''))
      name += get();
    if (name == "_") {
      t.tok = Tok::Underscore;
      return t;
    }
    if (name == "not") {
      t.tok = Tok::NotKw;
      return t;
    }
    t.tok = std::isupper(static_cast<unsigned char>(name[0])) ? Tok::Variable : Tok::Ident;
    t.text = std::move(name);
    return t;
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { advance(); }

  Program parse_program_body(bool allow_headers, std::vector<HeaderDecl>* decls) {
    Program prog;
    while (cur_.tok != Tok::End) {
      if (allow_headers && cur_.tok == Tok::Ident && is_header_keyword(cur_.text) &&
          peek_colon()) {
        parse_header_line(*decls);
        continue;
      }
      prog.rules.push_back(parse_rule());
    }
    if (decls) {
      for (const HeaderDecl& d : *decls) prog.schemas[d.predicate] = d.schema;
    }
    return prog;
  }

 private:
  void advance() {
    if (peeked_) {
      cur_ = peeked_tok_;
      peeked_ = false;
    } else {
      cur_ = lex_.next();
    }
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(cur_.line, cur_.col, msg); }

  void expect(Tok tok, const std::string& what) {
    if (cur_.tok != tok) fail("expected " + what);
    advance();
  }

  static bool is_header_keyword(const std::string& s) {
    return s == "view" || s == "source" || s == "sources" || s == "reference" ||
           s == "references";
  }

  bool peek_colon() {
    if (!peeked_) {
      peeked_tok_ = lex_.next();
      peeked_ = true;
    }
    return peeked_tok_.tok == Tok::Colon;
  }

  void parse_header_line(std::vector<HeaderDecl>& decls) {
    HeaderDecl::Role role = HeaderDecl::Role::Source;
    if (cur_.text == "view") role = HeaderDecl::Role::View;
    if (cur_.text == "reference" || cur_.text == "references") role = HeaderDecl::Role::Reference;
    int line = cur_.line;
    advance();  // consume keyword; cur_ is now the buffered ':'
    expect(Tok::Colon, "':'");
    while (true) {
      HeaderDecl d;
      d.role = role;
      d.line = line;
      if (cur_.tok != Tok::Ident) fail("expected predicate name in declaration");
      d.predicate = cur_.text;
      advance();
      expect(Tok::LParen, "'('");
      while (true) {
        bool key = false;
        if (cur_.tok == Tok::Star) {
          key = true;
          advance();
        }
        if (cur_.tok != Tok::Ident && cur_.tok != Tok::Variable)
          fail("expected attribute name");
        if (key) d.schema.key.push_back(d.schema.attrs.size());
        d.schema.attrs.push_back(cur_.text);
        advance();
        if (cur_.tok == Tok::Comma) {
          advance();
          continue;
        }
        break;
      }
      expect(Tok::RParen, "')'");
      decls.push_back(std::move(d));
      if (cur_.tok == Tok::Comma) {
        advance();
        continue;
      }
      break;
    }
    expect(Tok::Dot, "'.'");
  }

  Rule parse_rule() {
    Rule r;
    r.head = parse_head();
    if (cur_.tok == Tok::ColonDash) {
      advance();
      while (true) {
        r.body.push_back(parse_body_literal());
        if (cur_.tok == Tok::Comma) {
          advance();
          continue;
        }
        break;
      }
    }
    expect(Tok::Dot, "'.' at end of rule");
    return r;
  }

  Literal parse_head() {
    DeltaTag delta = DeltaTag::None;
    if (cur_.tok == Tok::Plus) {
      delta = DeltaTag::Insert;
      advance();
    } else if (cur_.tok == Tok::Minus) {
      delta = DeltaTag::Delete;
      advance();
    }
    if (cur_.tok != Tok::Ident) fail("expected predicate name in rule head");
    Literal head = parse_atom(delta);
    for (const Term& t : head.args)
      if (t.is_anon()) fail("anonymous variable not allowed in rule head");
    return head;
  }

  Literal parse_body_literal() {
    if (cur_.tok == Tok::NotKw) {
      advance();
      DeltaTag delta = DeltaTag::None;
      if (cur_.tok == Tok::Plus) {
        delta = DeltaTag::Insert;
        advance();
      }
      if (cur_.tok != Tok::Ident) fail("expected predicate after 'not'");
      Literal l = parse_atom(delta);
      l.negated = true;
      return l;
    }
    if (cur_.tok == Tok::Minus) {
      // In a body, `-p(...)` reads as negation.
      advance();
      if (cur_.tok != Tok::Ident) fail("expected predicate after '-'");
      Literal l = parse_atom(DeltaTag::None);
      l.negated = true;
      return l;
    }
    if (cur_.tok == Tok::Plus) {
      advance();
      if (cur_.tok != Tok::Ident) fail("expected predicate after '+'");
      return parse_atom(DeltaTag::Insert);
    }
    // Either an atom or a comparison; both may start with a term.
    if (cur_.tok == Tok::Ident) {
      // Could be `p(...)` or a symbol constant in a comparison.
      if (!peeked_) {
        peeked_tok_ = lex_.next();
        peeked_ = true;
      }
      if (peeked_tok_.tok == Tok::LParen) return parse_atom(DeltaTag::None);
    }
    Term lhs = parse_term();
    BuiltinOp op;
    switch (cur_.tok) {
      case Tok::Eq:
        op = BuiltinOp::Eq;
        break;
      case Tok::Neq:
        op = BuiltinOp::Neq;
        break;
      case Tok::Lt:
        op = BuiltinOp::Lt;
        break;
      case Tok::Leq:
        op = BuiltinOp::Leq;
        break;
      default:
        fail("expected comparison operator");
    }
    advance();
    Term rhs = parse_term();
    if (lhs.is_anon() || rhs.is_anon())
      fail("anonymous variable not allowed in a comparison");
    return Literal::comparison(op, std::move(lhs), std::move(rhs));
  }

  Literal parse_atom(DeltaTag delta) {
    Literal l;
    l.delta = delta;
    l.predicate = cur_.text;
    advance();
    expect(Tok::LParen, "'('");
    if (cur_.tok != Tok::RParen) {
      while (true) {
        l.args.push_back(parse_term());
        if (cur_.tok == Tok::Comma) {
          advance();
          continue;
        }
        break;
      }
    }
    expect(Tok::RParen, "')'");
    return l;
  }

  Term parse_term() {
    switch (cur_.tok) {
      case Tok::Variable: {
        Term t = Term::variable(cur_.text);
        advance();
        return t;
      }
      case Tok::Underscore:
        advance();
        return Term::anon();
      case Tok::Ident: {
        Term t = Term::constant(Value::string(cur_.text));
        advance();
        return t;
      }
      case Tok::String: {
        Term t = Term::constant(Value::string(cur_.text));
        advance();
        return t;
      }
      case Tok::Int: {
        Term t = Term::constant(Value::integer(cur_.int_value));
        advance();
        return t;
      }
      case Tok::Decimal: {
        Term t = Term::constant(Value::decimal(cur_.dec_value));
        advance();
        return t;
      }
      case Tok::Minus: {
        advance();
        if (cur_.tok == Tok::Int) {
          Term t = Term::constant(Value::integer(-cur_.int_value));
          advance();
          return t;
        }
        if (cur_.tok == Tok::Decimal) {
          Decimal d = cur_.dec_value;
          d.mantissa = -d.mantissa;
          Term t = Term::constant(Value::decimal(d));
          advance();
          return t;
        }
        fail("expected number after '-'");
      }
      default:
        fail("expected term");
    }
  }


  Lexer lex_;
  Token cur_;
  Token peeked_tok_;
  bool peeked_ = false;
};

}  // namespace

Program parse_program(std::string_view text) {
  Parser p(text);
  Program prog = p.parse_program_body(false, nullptr);
  validate_program(prog);
  return prog;
}

StrategyDoc parse_strategy_doc(std::string_view text) {
  StrategyDoc doc;
  Parser p(text);
  doc.program = p.parse_program_body(true, &doc.decls);
  return doc;
}

}  // namespace dejima
