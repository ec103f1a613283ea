#pragma once

#include <string>
#include <vector>

#include "partbij/partition.hpp"

namespace partbij {

/// One character per box: '2'/'1' carry 2-modular labels, '#' is a plain box.
struct DiagramRow {
  long long offset = 0;
  std::string cells;
  friend bool operator==(const DiagramRow&, const DiagramRow&) = default;
};

struct Diagram {
  std::vector<DiagramRow> rows;

  long long cell_count() const;
  long long label_sum() const;  // '1' and '2' by value, '#' counts 0
  std::vector<long long> column_lengths() const;
  std::string to_text() const;  // newline-terminated rows, offsets as spaces

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram render_young(const Partition& p);
Diagram render_two_modular(const Partition& p);

/// Centered layout split one column right of center: each row of width 2k-1
/// has k boxes left of the split and k-1 right of it.
Diagram render_sylvester_centered(const Partition& odd);

/// Alternating alignment: each even row ends one column left of the row
/// above, each odd row starts where the row above starts. With modular=true
/// rows are 2-modular rows of the parts. The whole diagram is translated so
/// the smallest offset is 0.
Diagram render_shifted(const Partition& distinct, bool modular);

}  // namespace partbij
