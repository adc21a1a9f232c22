#include "gra/term.hpp"

#include <algorithm>

namespace gra {

bool is_sugar(Op op) {
  switch (op) {
    case Op::Cup:
    case Op::DotCup:
    case Op::Forall:
    case Op::Forall1:
    case Op::Forall0:
      return true;
    default:
      return false;
  }
}

bool is_binary(Op op) {
  switch (op) {
    case Op::Cap:
    case Op::Cup:
    case Op::DotCap:
    case Op::DotCup:
    case Op::OneDimCap:
      return true;
    default:
      return false;
  }
}

const char* op_name(Op op) {
  switch (op) {
    case Op::Bot: return "bot";
    case Op::Top: return "top";
    case Op::Rel: return "rel";
    case Op::Neg: return "not";
    case Op::Cap: return "cap";
    case Op::Cup: return "cup";
    case Op::DotCap: return "dotcap";
    case Op::DotCup: return "dotcup";
    case Op::Exists: return "ex";
    case Op::Forall: return "all";
    case Op::Exists1: return "ex1";
    case Op::Forall1: return "all1";
    case Op::Exists0: return "ex0";
    case Op::Forall0: return "all0";
    case Op::Eq: return "E";
    case Op::Subst: return "I";
    case Op::Swap: return "s";
    case Op::Cyc: return "p";
    case Op::OneDimCap: return "C";
  }
  return "?";
}

TermPtr Term::make(Op op, TermPtr left, TermPtr right) {
  if (op == Op::Rel) throw Error("Term::make: use make_rel for relation symbols");
  bool binary = is_binary(op);
  bool nullary = (op == Op::Bot || op == Op::Top);
  if (nullary && (left || right)) throw Error("Term::make: nullary operator given children");
  if (!nullary && !left) throw Error("Term::make: missing operand");
  if (binary != static_cast<bool>(right) && !nullary)
    throw Error("Term::make: operand count does not match operator");
  return TermPtr(new Term(op, "", std::move(left), std::move(right)));
}

TermPtr Term::make_rel(std::string name) {
  return TermPtr(new Term(Op::Rel, std::move(name), nullptr, nullptr));
}

TermPtr exists_n(TermPtr t, int n) {
  for (int i = 0; i < n; ++i) t = exists(std::move(t));
  return t;
}

TermPtr forall_n(TermPtr t, int n) {
  for (int i = 0; i < n; ++i) t = forall(std::move(t));
  return t;
}

TermPtr cap_all(const std::vector<TermPtr>& ts) {
  if (ts.empty()) return top();
  TermPtr acc = ts[0];
  for (std::size_t i = 1; i < ts.size(); ++i) acc = cap(acc, ts[i]);
  return acc;
}

TermPtr dotcap_all(const std::vector<TermPtr>& ts) {
  if (ts.empty()) return top();
  TermPtr acc = ts[0];
  for (std::size_t i = 1; i < ts.size(); ++i) acc = dotcap(acc, ts[i]);
  return acc;
}

bool structurally_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op() != b->op()) return false;
  if (a->op() == Op::Rel) return a->rel_name() == b->rel_name();
  return structurally_equal(a->left(), b->left()) && structurally_equal(a->right(), b->right());
}

int arity(const TermPtr& t, const Vocabulary& vocab) {
  switch (t->op()) {
    case Op::Bot:
    case Op::Top:
      return 0;
    case Op::Rel:
      return vocab.arity(t->rel_name());
    case Op::Neg:
    case Op::Eq:
    case Op::Swap:
    case Op::Cyc:
      return arity(t->left(), vocab);
    case Op::Subst: {
      int k = arity(t->left(), vocab);
      return k <= 1 ? k : k - 1;
    }
    case Op::Exists:
    case Op::Forall: {
      int k = arity(t->left(), vocab);
      return k == 0 ? 0 : k - 1;
    }
    case Op::Exists1:
    case Op::Forall1: {
      int k = arity(t->left(), vocab);
      return k < 2 ? k : 1;
    }
    case Op::Exists0:
    case Op::Forall0:
      return 0;
    case Op::Cap:
    case Op::Cup: {
      int k = arity(t->left(), vocab);
      int l = arity(t->right(), vocab);
      return k == l ? k : 0;
    }
    case Op::DotCap:
    case Op::DotCup:
      return std::max(arity(t->left(), vocab), arity(t->right(), vocab));
    case Op::OneDimCap: {
      int k = arity(t->left(), vocab);
      int l = arity(t->right(), vocab);
      if (k == 1 && l >= 1) return l;
      if (l == 1 && k >= 1) return k;
      return 0;
    }
  }
  throw Error("arity: unreachable");
}

void check_wellformed(const TermPtr& t, const Vocabulary& vocab) {
  if (t->op() == Op::Rel) {
    vocab.arity(t->rel_name());
    return;
  }
  if (t->left()) check_wellformed(t->left(), vocab);
  if (t->right()) check_wellformed(t->right(), vocab);
}

TermPtr desugar(const TermPtr& t) {
  switch (t->op()) {
    case Op::Bot:
    case Op::Top:
    case Op::Rel:
      return t;
    case Op::Cup:
      return neg(cap(neg(desugar(t->left())), neg(desugar(t->right()))));
    case Op::DotCup:
      return neg(dotcap(neg(desugar(t->left())), neg(desugar(t->right()))));
    case Op::Forall:
      return neg(exists(neg(desugar(t->left()))));
    case Op::Forall1:
      return neg(exists1(neg(desugar(t->left()))));
    case Op::Forall0:
      return neg(exists0(neg(desugar(t->left()))));
    default: {
      TermPtr l = t->left() ? desugar(t->left()) : nullptr;
      TermPtr r = t->right() ? desugar(t->right()) : nullptr;
      if (l == t->left() && r == t->right()) return t;
      if (t->right()) return Term::make(t->op(), l, r);
      return Term::make(t->op(), l);
    }
  }
}

const char* opsym_name(OpSym s) {
  switch (s) {
    case OpSym::Neg: return "not";
    case OpSym::Cap: return "cap";
    case OpSym::DotCap: return "dotcap";
    case OpSym::Exists: return "ex";
    case OpSym::Exists1: return "ex1";
    case OpSym::Exists0: return "ex0";
    case OpSym::Eq: return "E";
    case OpSym::Subst: return "I";
    case OpSym::Swap: return "s";
    case OpSym::Cyc: return "p";
    case OpSym::OneDimCap: return "C";
  }
  return "?";
}

std::vector<OpSym> OpSet::elements() const {
  std::vector<OpSym> out;
  for (unsigned i = 0; i <= static_cast<unsigned>(OpSym::OneDimCap); ++i) {
    OpSym s = static_cast<OpSym>(i);
    if (contains(s)) out.push_back(s);
  }
  return out;
}

std::string OpSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (OpSym s : elements()) {
    if (!first) out += ",";
    out += opsym_name(s);
    first = false;
  }
  out += "}";
  return out;
}

namespace {
void collect_ops(const TermPtr& t, OpSet& out) {
  switch (t->op()) {
    case Op::Bot:
    case Op::Top:
    case Op::Rel:
      return;
    case Op::Neg: out.insert(OpSym::Neg); break;
    case Op::Cap: out.insert(OpSym::Cap); break;
    case Op::Cup:
      out.insert(OpSym::Neg);
      out.insert(OpSym::Cap);
      break;
    case Op::DotCap: out.insert(OpSym::DotCap); break;
    case Op::DotCup:
      out.insert(OpSym::Neg);
      out.insert(OpSym::DotCap);
      break;
    case Op::Exists: out.insert(OpSym::Exists); break;
    case Op::Forall:
      out.insert(OpSym::Neg);
      out.insert(OpSym::Exists);
      break;
    case Op::Exists1: out.insert(OpSym::Exists1); break;
    case Op::Forall1:
      out.insert(OpSym::Neg);
      out.insert(OpSym::Exists1);
      break;
    case Op::Exists0: out.insert(OpSym::Exists0); break;
    case Op::Forall0:
      out.insert(OpSym::Neg);
      out.insert(OpSym::Exists0);
      break;
    case Op::Eq: out.insert(OpSym::Eq); break;
    case Op::Subst: out.insert(OpSym::Subst); break;
    case Op::Swap: out.insert(OpSym::Swap); break;
    case Op::Cyc: out.insert(OpSym::Cyc); break;
    case Op::OneDimCap: out.insert(OpSym::OneDimCap); break;
  }
  if (t->left()) collect_ops(t->left(), out);
  if (t->right()) collect_ops(t->right(), out);
}
}  // namespace

OpSet operators_used(const TermPtr& t) {
  OpSet out;
  collect_ops(t, out);
  return out;
}

}  // namespace gra
