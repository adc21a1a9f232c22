#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gra {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Purely relational vocabulary: relation symbol name -> arity (>= 1).
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::initializer_list<std::pair<std::string, int>> syms) {
    for (const auto& [n, a] : syms) add(n, a);
  }

  void add(const std::string& name, int arity);
  bool contains(const std::string& name) const { return symbols_.count(name) != 0; }
  int arity(const std::string& name) const;
  int max_arity() const;
  std::size_t size() const { return symbols_.size(); }

  const std::map<std::string, int>& symbols() const { return symbols_; }

  /// Symbol names in deterministic (lexicographic) order.
  std::vector<std::string> names() const;

  /// Returns a name of the form `<base>`, `<base>1`, ... not yet declared.
  std::string fresh_name(const std::string& base) const;

  bool operator==(const Vocabulary& o) const { return symbols_ == o.symbols_; }

  static bool valid_name(const std::string& name);

 private:
  std::map<std::string, int> symbols_;
};

}  // namespace gra
