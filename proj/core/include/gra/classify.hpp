#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gra/term.hpp"

namespace gra {

enum class SatStatus : std::uint8_t {
  Decidable,
  Undecidable,
  Open,     // hardness known, decidability open
  Unknown,  // operator set matches no known row
};

struct FragmentRow {
  OpSet ops;
  std::string label;       // complexity label, e.g. "PSPACE-complete"
  SatStatus status;
  int rank;                // for picking the least decidable row
};

/// The known classification rows (Table 1 plus the rows discussed around it).
const std::vector<FragmentRow>& fragment_rows();

struct FragmentVerdict {
  OpSet used;
  std::optional<FragmentRow> row;
  SatStatus status = SatStatus::Unknown;
  std::string complexity;  // label of the matched row, empty if unknown
  std::string note;        // extra annotation (e.g. binary-vocabulary decidability)
};

FragmentVerdict classify(const TermPtr& term, const Vocabulary& vocab);

std::string to_string(SatStatus s);

}  // namespace gra
