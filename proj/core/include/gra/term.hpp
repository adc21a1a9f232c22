#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gra/vocabulary.hpp"

namespace gra {

/// Relation operators of the general relational algebra, plus the sugar
/// forms (Cup, DotCup, Forall, Forall1, Forall0) that desugar to the core.
enum class Op : std::uint8_t {
  Bot,
  Top,
  Rel,
  Neg,        // complementation
  Cap,        // intersection
  Cup,        // sugar: t cup u == not (not t cap not u)
  DotCap,     // suffix intersection
  DotCup,     // sugar
  Exists,     // projection (drops the last coordinate)
  Forall,     // sugar: not ex not
  Exists1,    // one-dimensional projection to the first coordinate
  Forall1,    // sugar
  Exists0,    // projection to arity 0 (nonemptiness)
  Forall0,    // sugar
  Eq,         // E: keeps tuples whose last two coordinates agree
  Subst,      // I: substitution, (a1..ak-1) with (a1..ak-1,ak-1) in X
  Swap,       // s: swaps the last two coordinates
  Cyc,        // p: cyclic permutation, abar in pX iff (ak,a1..ak-1) in X
  OneDimCap,  // C: one-dimensional intersection
};

bool is_sugar(Op op);
bool is_binary(Op op);
const char* op_name(Op op);

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable term tree. Share freely; construction via the factory helpers.
class Term {
 public:
  Op op() const { return op_; }
  const std::string& rel_name() const { return rel_; }
  const TermPtr& left() const { return left_; }
  const TermPtr& right() const { return right_; }

  static TermPtr make(Op op, TermPtr left = nullptr, TermPtr right = nullptr);
  static TermPtr make_rel(std::string name);

 private:
  Term(Op op, std::string rel, TermPtr left, TermPtr right)
      : op_(op), rel_(std::move(rel)), left_(std::move(left)), right_(std::move(right)) {}

  Op op_;
  std::string rel_;
  TermPtr left_, right_;
};

inline TermPtr bot() { return Term::make(Op::Bot); }
inline TermPtr top() { return Term::make(Op::Top); }
inline TermPtr rel(std::string name) { return Term::make_rel(std::move(name)); }
inline TermPtr neg(TermPtr t) { return Term::make(Op::Neg, std::move(t)); }
inline TermPtr cap(TermPtr a, TermPtr b) { return Term::make(Op::Cap, std::move(a), std::move(b)); }
inline TermPtr cup(TermPtr a, TermPtr b) { return Term::make(Op::Cup, std::move(a), std::move(b)); }
inline TermPtr dotcap(TermPtr a, TermPtr b) { return Term::make(Op::DotCap, std::move(a), std::move(b)); }
inline TermPtr dotcup(TermPtr a, TermPtr b) { return Term::make(Op::DotCup, std::move(a), std::move(b)); }
inline TermPtr exists(TermPtr t) { return Term::make(Op::Exists, std::move(t)); }
inline TermPtr forall(TermPtr t) { return Term::make(Op::Forall, std::move(t)); }
inline TermPtr exists1(TermPtr t) { return Term::make(Op::Exists1, std::move(t)); }
inline TermPtr forall1(TermPtr t) { return Term::make(Op::Forall1, std::move(t)); }
inline TermPtr exists0(TermPtr t) { return Term::make(Op::Exists0, std::move(t)); }
inline TermPtr forall0(TermPtr t) { return Term::make(Op::Forall0, std::move(t)); }
inline TermPtr eq(TermPtr t) { return Term::make(Op::Eq, std::move(t)); }
inline TermPtr subst(TermPtr t) { return Term::make(Op::Subst, std::move(t)); }
inline TermPtr swap(TermPtr t) { return Term::make(Op::Swap, std::move(t)); }
inline TermPtr cyc(TermPtr t) { return Term::make(Op::Cyc, std::move(t)); }
inline TermPtr onedimcap(TermPtr a, TermPtr b) {
  return Term::make(Op::OneDimCap, std::move(a), std::move(b));
}

TermPtr exists_n(TermPtr t, int n);
TermPtr forall_n(TermPtr t, int n);

/// Intersection of a nonempty list, left-associated; empty list yields top.
TermPtr cap_all(const std::vector<TermPtr>& ts);
TermPtr dotcap_all(const std::vector<TermPtr>& ts);

bool structurally_equal(const TermPtr& a, const TermPtr& b);

/// Structure-independent output arity (the operators' sharp functions).
/// Total on well-formed terms; throws Error on undeclared symbols.
int arity(const TermPtr& t, const Vocabulary& vocab);

/// Checks every relation symbol is declared; throws Error otherwise.
void check_wellformed(const TermPtr& t, const Vocabulary& vocab);

/// Rewrites sugar nodes (cup, dotcup, all, all1, all0) into the core operators.
TermPtr desugar(const TermPtr& t);

/// Core operator symbols for fragment classification.
enum class OpSym : std::uint8_t {
  Neg,
  Cap,
  DotCap,
  Exists,
  Exists1,
  Exists0,
  Eq,
  Subst,
  Swap,
  Cyc,
  OneDimCap,
};

const char* opsym_name(OpSym s);

class OpSet {
 public:
  OpSet() = default;
  OpSet(std::initializer_list<OpSym> syms) {
    for (OpSym s : syms) insert(s);
  }
  void insert(OpSym s) { bits_ |= bit(s); }
  bool contains(OpSym s) const { return bits_ & bit(s); }
  bool subset_of(const OpSet& o) const { return (bits_ & ~o.bits_) == 0; }
  bool superset_of(const OpSet& o) const { return o.subset_of(*this); }
  bool operator==(const OpSet& o) const { return bits_ == o.bits_; }
  std::vector<OpSym> elements() const;
  std::string to_string() const;

 private:
  static std::uint16_t bit(OpSym s) { return std::uint16_t(1u << static_cast<unsigned>(s)); }
  std::uint16_t bits_ = 0;
};

/// Core operators occurring in the desugared tree (sugar attributed to its
/// expansion; bot/top/relation symbols excluded).
OpSet operators_used(const TermPtr& t);

}  // namespace gra
