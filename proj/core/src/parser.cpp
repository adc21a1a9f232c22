#include "gra/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gra {

namespace {

struct Token {
  enum Kind { Word, LParen, RParen, Comma, End } kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i_;
      } else {
        break;
      }
    }
    if (i_ >= s_.size()) {
      tok_ = {Token::End, "", i_};
      return;
    }
    std::size_t start = i_;
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      tok_ = {Token::LParen, "(", start};
    } else if (c == ')') {
      ++i_;
      tok_ = {Token::RParen, ")", start};
    } else if (c == ',') {
      ++i_;
      tok_ = {Token::Comma, ",", start};
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      tok_ = {Token::Word, s_.substr(start, i_ - start), start};
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_{Token::End, "", 0};
};

class Parser {
 public:
  Parser(const std::string& text, const Vocabulary& vocab) : lex_(text), vocab_(vocab) {}

  TermPtr parse() {
    TermPtr t = expr();
    const Token& tok = lex_.peek();
    if (tok.kind != Token::End) throw ParseError("trailing input '" + tok.text + "'", tok.pos);
    return t;
  }

 private:
  TermPtr expr() {
    TermPtr acc = unary();
    while (lex_.peek().kind == Token::Word) {
      const std::string& w = lex_.peek().text;
      Op op;
      if (w == "cap") op = Op::Cap;
      else if (w == "cup") op = Op::Cup;
      else if (w == "dotcap") op = Op::DotCap;
      else if (w == "dotcup") op = Op::DotCup;
      else break;
      lex_.next();
      acc = Term::make(op, acc, unary());
    }
    return acc;
  }

  TermPtr unary() {
    const Token& tok = lex_.peek();
    if (tok.kind == Token::Word) {
      const std::string& w = tok.text;
      Op op;
      if (w == "not") op = Op::Neg;
      else if (w == "ex") op = Op::Exists;
      else if (w == "all") op = Op::Forall;
      else if (w == "ex1") op = Op::Exists1;
      else if (w == "all1") op = Op::Forall1;
      else if (w == "ex0") op = Op::Exists0;
      else if (w == "all0") op = Op::Forall0;
      else if (w == "E") op = Op::Eq;
      else if (w == "I") op = Op::Subst;
      else if (w == "s") op = Op::Swap;
      else if (w == "p") op = Op::Cyc;
      else return atom();
      lex_.next();
      return Term::make(op, unary());
    }
    return atom();
  }

  TermPtr atom() {
    Token tok = lex_.next();
    switch (tok.kind) {
      case Token::LParen: {
        TermPtr t = expr();
        expect(Token::RParen, ")");
        return t;
      }
      case Token::Word: {
        if (tok.text == "top") return top();
        if (tok.text == "bot") return bot();
        if (tok.text == "C") {
          expect(Token::LParen, "(");
          TermPtr a = expr();
          expect(Token::Comma, ",");
          TermPtr b = expr();
          expect(Token::RParen, ")");
          return onedimcap(a, b);
        }
        if (!vocab_.contains(tok.text))
          throw ParseError("undeclared relation symbol '" + tok.text + "'", tok.pos);
        return rel(tok.text);
      }
      default:
        throw ParseError("expected a term, got '" + tok.text + "'", tok.pos);
    }
  }

  void expect(Token::Kind kind, const char* what) {
    Token tok = lex_.next();
    if (tok.kind != kind)
      throw ParseError(std::string("expected '") + what + "', got '" + tok.text + "'", tok.pos);
  }

  Lexer lex_;
  const Vocabulary& vocab_;
};

int print_rec(const TermPtr& t, std::ostringstream& out);

// Precedence contexts: 0 = top/infix chain, 1 = operand of a prefix operator
// or right operand of an infix operator.
void print_child(const TermPtr& t, std::ostringstream& out, bool need_atom) {
  bool parens = false;
  if (need_atom) {
    switch (t->op()) {
      case Op::Cap:
      case Op::Cup:
      case Op::DotCap:
      case Op::DotCup:
        parens = true;
        break;
      default:
        break;
    }
  }
  if (parens) {
    out << "(";
    print_rec(t, out);
    out << ")";
  } else {
    print_rec(t, out);
  }
}

int print_rec(const TermPtr& t, std::ostringstream& out) {
  switch (t->op()) {
    case Op::Bot: out << "bot"; break;
    case Op::Top: out << "top"; break;
    case Op::Rel: out << t->rel_name(); break;
    case Op::OneDimCap:
      out << "C(";
      print_rec(t->left(), out);
      out << ", ";
      print_rec(t->right(), out);
      out << ")";
      break;
    case Op::Cap:
    case Op::Cup:
    case Op::DotCap:
    case Op::DotCup:
      // Left-associative: the left child may itself be a chain.
      print_child(t->left(), out, false);
      out << " " << op_name(t->op()) << " ";
      print_child(t->right(), out, true);
      break;
    default:
      out << op_name(t->op()) << " ";
      print_child(t->left(), out, true);
      break;
  }
  return 0;
}

}  // namespace

TermPtr parse_term(const std::string& text, const Vocabulary& vocab) {
  return Parser(text, vocab).parse();
}

std::string print_term(const TermPtr& t) {
  std::ostringstream out;
  print_rec(t, out);
  return out.str();
}

Vocabulary parse_vocabulary(const std::string& text) {
  Vocabulary v;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      ++i;
    std::string name = text.substr(start, i - start);
    skip_ws();
    if (i >= text.size() || text[i] != '/')
      throw ParseError("expected '/<arity>' after symbol name '" + name + "'", i);
    ++i;
    skip_ws();
    start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw ParseError("expected arity digits", i);
    v.add(name, std::stoi(text.substr(start, i - start)));
    skip_ws();
    if (i < text.size()) {
      if (text[i] != ',') throw ParseError("expected ',' between symbol declarations", i);
      ++i;
      skip_ws();
    }
  }
  return v;
}

std::string print_vocabulary(const Vocabulary& vocab) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, ar] : vocab.symbols()) {
    if (!first) out << ", ";
    out << name << "/" << ar;
    first = false;
  }
  return out.str();
}

TermFile parse_term_file(const std::string& contents) {
  std::istringstream in(contents);
  std::string line;
  std::string vocab_text, term_text;
  bool have_vocab = false, have_term = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b);
    if (line.rfind("vocab:", 0) == 0) {
      vocab_text = line.substr(6);
      have_vocab = true;
    } else if (line.rfind("term:", 0) == 0) {
      term_text = line.substr(5);
      have_term = true;
    } else if (have_term) {
      term_text += " " + line;  // allow the term to continue on later lines
    } else {
      throw Error("term file: unexpected line '" + line + "'");
    }
  }
  if (!have_vocab) throw Error("term file: missing 'vocab:' line");
  if (!have_term) throw Error("term file: missing 'term:' line");
  TermFile f;
  f.vocab = parse_vocabulary(vocab_text);
  f.term = parse_term(term_text, f.vocab);
  return f;
}

TermFile load_term_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open term file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_term_file(ss.str());
}

std::string print_term_file(const Vocabulary& vocab, const TermPtr& term) {
  return "vocab: " + print_vocabulary(vocab) + "\nterm: " + print_term(term) + "\n";
}

}  // namespace gra
