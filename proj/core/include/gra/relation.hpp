#pragma once

#include <string>
#include <vector>

#include "gra/vocabulary.hpp"

namespace gra {

using Tuple = std::vector<int>;

/// Arity-definite relation: an explicit arity plus a set of tuples over
/// domain indices 0..n-1. Tuples are kept sorted and deduplicated so that
/// equal relations compare equal.
class ADRelation {
 public:
  explicit ADRelation(int arity) : arity_(arity) {}
  ADRelation(int arity, std::vector<Tuple> tuples);

  int arity() const { return arity_; }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  bool empty() const { return tuples_.empty(); }
  std::size_t size() const { return tuples_.size(); }
  bool contains(const Tuple& t) const;
  void insert(Tuple t);

  bool operator==(const ADRelation& o) const {
    return arity_ == o.arity_ && tuples_ == o.tuples_;
  }

  static ADRelation bottom(int arity) { return ADRelation(arity); }
  static ADRelation top(int arity, int domain_size);
  static ADRelation top0() { return ADRelation(0, {Tuple{}}); }
  static ADRelation bottom0() { return ADRelation(0); }

  std::string to_string() const;

 private:
  int arity_;
  std::vector<Tuple> tuples_;
};

/// The relation operators as plain functions on AD-relations over a domain
/// of the given size.
ADRelation rel_neg(const ADRelation& x, int n);
ADRelation rel_cap(const ADRelation& x, const ADRelation& y);
ADRelation rel_dotcap(const ADRelation& x, const ADRelation& y, int n);
ADRelation rel_exists(const ADRelation& x);
ADRelation rel_exists1(const ADRelation& x);
ADRelation rel_exists0(const ADRelation& x);
ADRelation rel_eq(const ADRelation& x);
ADRelation rel_subst(const ADRelation& x);
ADRelation rel_swap(const ADRelation& x);
ADRelation rel_cyc(const ADRelation& x);
ADRelation rel_onedimcap(const ADRelation& x, const ADRelation& y);

/// All k-tuples over 0..n-1 in lexicographic order (the single empty tuple
/// when k = 0).
std::vector<Tuple> all_tuples(int n, int k);

}  // namespace gra
