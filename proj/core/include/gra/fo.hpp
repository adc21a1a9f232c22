#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gra/structure.hpp"
#include "gra/term.hpp"

namespace gra {

enum class FOKind : std::uint8_t { Atom, Equal, Neg, And, Or, Exists, Forall };

class FOFormula;
using FOPtr = std::shared_ptr<const FOFormula>;

/// First-order formulas over the official variable list v1, v2, ...
/// (variables are their indices). Immutable.
class FOFormula {
 public:
  FOKind kind() const { return kind_; }
  const std::string& rel() const { return rel_; }
  const std::vector<int>& args() const { return args_; }
  int var() const { return var_; }  // bound variable (quantifiers) or lhs of Equal
  int var2() const { return var2_; }
  const FOPtr& left() const { return left_; }
  const FOPtr& right() const { return right_; }

  static FOPtr atom(std::string rel, std::vector<int> args);
  static FOPtr equal(int v1, int v2);
  static FOPtr fneg(FOPtr f);
  static FOPtr fand(FOPtr a, FOPtr b);
  static FOPtr f_or(FOPtr a, FOPtr b);
  static FOPtr fexists(int var, FOPtr f);
  static FOPtr fforall(int var, FOPtr f);

 private:
  FOFormula() = default;
  FOKind kind_;
  std::string rel_;
  std::vector<int> args_;
  int var_ = 0, var2_ = 0;
  FOPtr left_, right_;
};

std::set<int> free_vars(const FOPtr& f);
int max_var_index(const FOPtr& f);
bool is_sentence(const FOPtr& f);
std::string print_fo(const FOPtr& f);

/// Capture-avoiding simultaneous substitution of free variables. Binders
/// that would capture a replacement are renamed to fresh indices.
FOPtr substitute_vars(const FOPtr& f, const std::map<int, int>& sub);

/// FO formula equivalent to the term: free variables among v1..v_k with
/// k = arity(term), and for every structure and k-tuple, the tuple lies in
/// the term's interpretation iff the formula holds under v_i -> a_i.
FOPtr term_to_fo(const TermPtr& term, const Vocabulary& vocab);

/// Standard Tarskian evaluation; throws on unbound free variables.
bool eval_fo(const FOPtr& f, const Structure& structure, const std::map<int, int>& assignment);

}  // namespace gra
