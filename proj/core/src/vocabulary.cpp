#include "gra/vocabulary.hpp"

#include <cctype>
#include <set>

namespace gra {

namespace {
const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {
      "not", "cap", "cup", "dotcap", "dotcup", "ex",  "all", "ex1", "ex0",
      "all1", "all0", "E",  "I",      "s",      "p",   "C",   "top", "bot"};
  return kw;
}
}  // namespace

bool Vocabulary::valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return keywords().count(name) == 0;
}

void Vocabulary::add(const std::string& name, int arity) {
  if (!valid_name(name)) throw Error("invalid relation symbol name: '" + name + "'");
  if (arity < 1) throw Error("relation symbol '" + name + "' must have arity >= 1");
  auto [it, inserted] = symbols_.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw Error("relation symbol '" + name + "' declared twice with different arities");
}

int Vocabulary::arity(const std::string& name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end()) throw Error("undeclared relation symbol: '" + name + "'");
  return it->second;
}

int Vocabulary::max_arity() const {
  int m = 0;
  for (const auto& [n, a] : symbols_) m = std::max(m, a);
  return m;
}

std::vector<std::string> Vocabulary::names() const {
  std::vector<std::string> out;
  out.reserve(symbols_.size());
  for (const auto& [n, a] : symbols_) out.push_back(n);
  return out;
}

std::string Vocabulary::fresh_name(const std::string& base) const {
  if (!contains(base) && valid_name(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!contains(cand)) return cand;
  }
}

}  // namespace gra
