#pragma once

#include <map>
#include <string>

#include "gra/relation.hpp"
#include "gra/vocabulary.hpp"

namespace gra {

/// Finite relational structure: a domain {0..n-1} and one AD-relation per
/// vocabulary symbol. Missing symbols denote empty relations of the declared
/// arity. Immutable by convention after loading.
class Structure {
 public:
  Structure(Vocabulary vocab, int domain_size);

  const Vocabulary& vocab() const { return vocab_; }
  int size() const { return n_; }

  const ADRelation& relation(const std::string& name) const;
  void set_relation(const std::string& name, ADRelation rel);
  void add_tuple(const std::string& name, Tuple t);

  /// Applies a domain permutation pointwise to every relation.
  Structure permuted(const std::vector<int>& perm) const;

  /// Extends the vocabulary with fresh symbols interpreted as empty.
  Structure expanded(const Vocabulary& bigger) const;

  std::string to_json() const;
  static Structure from_json(const std::string& json_text, const Vocabulary& vocab);
  static Structure load_json_file(const std::string& path, const Vocabulary& vocab);

  bool operator==(const Structure& o) const {
    return n_ == o.n_ && vocab_ == o.vocab_ && rels_ == o.rels_;
  }

 private:
  Vocabulary vocab_;
  int n_;
  std::map<std::string, ADRelation> rels_;
};

}  // namespace gra
