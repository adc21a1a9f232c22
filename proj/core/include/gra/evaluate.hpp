#pragma once

#include "gra/structure.hpp"
#include "gra/term.hpp"

namespace gra {

/// Bottom-up interpretation of a term over a finite structure. Pure; the
/// result arity always equals arity(term, structure.vocab()).
ADRelation evaluate(const TermPtr& term, const Structure& structure);

/// True iff the 0-ary term evaluates to the nonempty 0-ary relation.
/// Rejects terms of positive arity.
bool satisfied(const Structure& structure, const TermPtr& term);

}  // namespace gra
