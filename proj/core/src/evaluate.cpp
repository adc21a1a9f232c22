#include "gra/evaluate.hpp"

#include <unordered_map>

namespace gra {

namespace {

ADRelation eval_core(const TermPtr& t, const Structure& A,
                     std::unordered_map<const Term*, ADRelation>& memo) {
  auto it = memo.find(t.get());
  if (it != memo.end()) return it->second;
  int n = A.size();
  ADRelation out = ADRelation::bottom0();
  switch (t->op()) {
    case Op::Bot: out = ADRelation::bottom0(); break;
    case Op::Top: out = ADRelation::top0(); break;
    case Op::Rel: out = A.relation(t->rel_name()); break;
    case Op::Neg: out = rel_neg(eval_core(t->left(), A, memo), n); break;
    case Op::Cap:
      out = rel_cap(eval_core(t->left(), A, memo), eval_core(t->right(), A, memo));
      break;
    case Op::DotCap:
      out = rel_dotcap(eval_core(t->left(), A, memo), eval_core(t->right(), A, memo), n);
      break;
    case Op::Exists: out = rel_exists(eval_core(t->left(), A, memo)); break;
    case Op::Exists1: out = rel_exists1(eval_core(t->left(), A, memo)); break;
    case Op::Exists0: out = rel_exists0(eval_core(t->left(), A, memo)); break;
    case Op::Eq: out = rel_eq(eval_core(t->left(), A, memo)); break;
    case Op::Subst: out = rel_subst(eval_core(t->left(), A, memo)); break;
    case Op::Swap: out = rel_swap(eval_core(t->left(), A, memo)); break;
    case Op::Cyc: out = rel_cyc(eval_core(t->left(), A, memo)); break;
    case Op::OneDimCap:
      out = rel_onedimcap(eval_core(t->left(), A, memo), eval_core(t->right(), A, memo));
      break;
    default:
      throw Error("evaluate: sugar operator after desugaring");
  }
  memo.emplace(t.get(), out);
  return out;
}

}  // namespace

ADRelation evaluate(const TermPtr& term, const Structure& structure) {
  check_wellformed(term, structure.vocab());
  TermPtr core = desugar(term);
  std::unordered_map<const Term*, ADRelation> memo;
  return eval_core(core, structure, memo);
}

bool satisfied(const Structure& structure, const TermPtr& term) {
  if (arity(term, structure.vocab()) != 0)
    throw Error("satisfied: term has positive arity");
  return !evaluate(term, structure).empty();
}

}  // namespace gra
