#include "gra/classify.hpp"

#include <algorithm>

namespace gra {

namespace {
using enum OpSym;

std::vector<FragmentRow> make_rows() {
  std::vector<FragmentRow> rows;
  // Decidable rows, ranked NP < PSPACE < NEXPTIME < TOWER.
  rows.push_back({{Eq, Neg, Cap, Exists1, Exists0}, "NP-complete", SatStatus::Decidable, 0});
  rows.push_back({{Eq, Neg, Cap, Exists}, "PSPACE-complete", SatStatus::Decidable, 1});
  rows.push_back({{Swap, Neg, OneDimCap, Cap, Exists}, "NEXPTIME-complete", SatStatus::Decidable, 2});
  rows.push_back({{Eq, Neg, OneDimCap, Cap, Exists}, "NEXPTIME-complete", SatStatus::Decidable, 2});
  rows.push_back({{Swap, Eq, Neg, DotCap, Exists1, Exists0}, "NEXPTIME-complete", SatStatus::Decidable, 2});
  rows.push_back({{Cyc, Swap, Eq, Neg, OneDimCap, Cap, Exists1, Exists0}, "NEXPTIME-complete",
                  SatStatus::Decidable, 2});
  rows.push_back({{Neg, DotCap, Exists}, "TOWER-complete", SatStatus::Decidable, 3});
  rows.push_back({{Eq, Neg, DotCap, Exists}, "TOWER-complete", SatStatus::Decidable, 3});
  // Hardness known, decidability open.
  rows.push_back({{Swap, Eq, Neg, OneDimCap, Cap, Exists}, "NEXPTIME-hard (decidability open)",
                  SatStatus::Open, 4});
  // Undecidable rows.
  rows.push_back({{Cyc, Neg, Cap, Exists}, "undecidable (Pi^0_1)", SatStatus::Undecidable, 5});
  rows.push_back({{Cyc, Neg, DotCap, Exists1, Exists0}, "undecidable (Pi^0_1)", SatStatus::Undecidable, 5});
  rows.push_back({{Swap, Neg, DotCap, Exists}, "undecidable (Pi^0_1)", SatStatus::Undecidable, 5});
  return rows;
}
}  // namespace

const std::vector<FragmentRow>& fragment_rows() {
  static const std::vector<FragmentRow> rows = make_rows();
  return rows;
}

FragmentVerdict classify(const TermPtr& term, const Vocabulary& vocab) {
  check_wellformed(term, vocab);
  FragmentVerdict v;
  v.used = operators_used(term);

  // A superset of an undecidable row is undecidable regardless of any
  // decidable row it might also fit under.
  for (const FragmentRow& row : fragment_rows()) {
    if (row.status == SatStatus::Undecidable && v.used.superset_of(row.ops)) {
      v.row = row;
      v.status = SatStatus::Undecidable;
      v.complexity = row.label;
      static const OpSet fluted_swap = {Swap, Neg, DotCap, Exists};
      if (row.ops == fluted_swap && vocab.max_arity() <= 2)
        v.note = "decidable over vocabularies with at most binary relation symbols";
      return v;
    }
  }

  const FragmentRow* best = nullptr;
  for (const FragmentRow& row : fragment_rows()) {
    if (row.status != SatStatus::Decidable) continue;
    if (!v.used.subset_of(row.ops)) continue;
    if (!best || row.rank < best->rank) best = &row;
  }
  if (best) {
    v.row = *best;
    v.status = SatStatus::Decidable;
    v.complexity = best->label;
    return v;
  }

  for (const FragmentRow& row : fragment_rows()) {
    if (row.status == SatStatus::Open && v.used.subset_of(row.ops)) {
      v.row = row;
      v.status = SatStatus::Open;
      v.complexity = row.label;
      return v;
    }
  }

  v.status = SatStatus::Unknown;
  return v;
}

std::string to_string(SatStatus s) {
  switch (s) {
    case SatStatus::Decidable: return "decidable";
    case SatStatus::Undecidable: return "undecidable";
    case SatStatus::Open: return "open";
    case SatStatus::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace gra
