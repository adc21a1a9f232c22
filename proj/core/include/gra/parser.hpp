#pragma once

#include <string>

#include "gra/term.hpp"

namespace gra {

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

/// Parses the external term syntax. Every relation symbol must be declared
/// in `vocab`.
TermPtr parse_term(const std::string& text, const Vocabulary& vocab);

/// Prints a term so that parse_term(print_term(t)) is structurally equal to t.
std::string print_term(const TermPtr& t);

/// "R/2, P/1" -> vocabulary.
Vocabulary parse_vocabulary(const std::string& text);
std::string print_vocabulary(const Vocabulary& vocab);

struct TermFile {
  Vocabulary vocab;
  TermPtr term;
};

/// Term file format: `vocab:` line followed by a `term:` line; `#` comments.
TermFile parse_term_file(const std::string& contents);
TermFile load_term_file(const std::string& path);
std::string print_term_file(const Vocabulary& vocab, const TermPtr& term);

}  // namespace gra
