#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "partbij/partition.hpp"

namespace partbij {

/// d = max{ j : lambda_j >= 2j-1 }, epsilon = 1 exactly when lambda_d = 2d-1.
struct SylvesterAnchor {
  long long d = 0;
  int epsilon = 0;
  friend bool operator==(const SylvesterAnchor&, const SylvesterAnchor&) = default;
};
SylvesterAnchor sylvester_anchor(const Partition& odd);  // odd, nonempty

// Odd parts grouped by multiplicity; each binary digit of a multiplicity
// becomes one distinct part.
Partition glaisher_forward(const Partition& odd);
Partition glaisher_inverse(const Partition& distinct);

Partition sylvester_forward(const Partition& odd);   // closed formula
Partition sylvester_pairwise(const Partition& odd);  // prepend-and-interchange form
Partition sylvester_inverse(const Partition& distinct);

/// The pairing/doubling composition of an odd-distinct partition: run terms
/// are paired off largest-first and an odd leftover is doubled.
PairedComposition bressoud_pairing(const Partition& odd_distinct);

/// Rewrite (a+1,a | 2b+1,2b-1) -> (2b+3,2b+1 | a-1,a-2) at pair j (1-based),
/// applicable when 2 <= a <= 2b+1. Preserves entry sum, pair count,
/// alternating sum and the number of odd entries.
bool interchange_applicable(const PairedComposition& c, std::size_t j);
PairedComposition pair_interchange(const PairedComposition& c, std::size_t j);

/// Rewrite (2b+1,2b-1 | a+1,a) -> (a+3,a+2 | 2b-1,2b-3), applicable when
/// 2a+1 >= 2b-1 and b >= 2.
bool reverse_interchange_applicable(const PairedComposition& c, std::size_t j);
PairedComposition reverse_pair_interchange(const PairedComposition& c, std::size_t j);

Partition bressoud_forward(const Partition& odd_distinct);
/// Same map computed by the subtract/sort/add-back schedule.
Partition bressoud_forward_original(const Partition& odd_distinct);
Partition bressoud_inverse(const Partition& splitting);

/// Inserts the pair odd_part^2 into gamma (closed insertion form). gamma must
/// satisfy the insertion preconditions: pair gaps 1 or 2 below the insertion
/// size, and every pair with sum = 2 (mod 4) large enough to absorb it.
Partition pair_insert(const Partition& gamma, Part odd_part);

/// Extension of the pairing map to all odd partitions: split off the distinct
/// core beta, map it, then insert the doubled values of alpha largest-first.
Partition extend_forward(const Partition& odd);
Partition extend_inverse(const Partition& distinct);

// ---- displayed intermediates (consumed by tests and the CLI) ----

struct BressoudOriginalStages {
  PairedComposition paired;          // the pairing composition
  PairedComposition reduced;         // staircase subtracted
  PairedComposition sorted_reduced;  // pairs sorted by sum (desc, first desc)
  Partition result;                  // staircase added back
};
BressoudOriginalStages bressoud_forward_original_stages(const Partition& odd_distinct);

struct ExtendForwardStages {
  Partition alpha, beta;
  std::vector<Partition> gammas;  // gamma^(0) .. gamma^(t), last one = image
};
ExtendForwardStages extend_forward_stages(const Partition& odd);

struct ExtendInverseStages {
  Partition staircase_conjugate;     // subtracted in stage 1
  std::vector<Part> gap_pairs;       // parts recovered from pair gaps (stage 1)
  Partition after_subtraction;       // gamma entering stage 2
  std::vector<Part> inserted_pairs;  // parts recovered from even pairs (stage 2)
  Partition splitting_core;          // terminal gamma, a splitting partition
  Partition beta;                    // its preimage under the pairing map
  Partition result;
};
ExtendInverseStages extend_inverse_stages(const Partition& distinct);

// ---- derivation traces ----

enum class TraceRule {
  pair_interchange,
  reverse_pair_interchange,
  insertion_interchange,
  exceptional_merge,
  doubling,
  prepend,
  add_two_prefix,
};
std::string_view trace_rule_name(TraceRule r);  // "pair-interchange", ...

/// One rewrite step. Entry sums of before/after agree except for prepend.
/// position is the 1-based left pair of a local rewrite, 0 for global steps.
struct TraceStep {
  PairedComposition before;
  PairedComposition after;
  TraceRule rule = TraceRule::pair_interchange;
  std::size_t position = 0;
};

enum class BijectionKind { glaisher, sylvester, bressoud, extended };
std::optional<BijectionKind> bijection_from_name(std::string_view name);  // "new" = extended
std::string_view bijection_name(BijectionKind k);

/// Records the rewrite derivation of a map; the final state equals the map's
/// output. Supported: sylvester, bressoud, extended (forward) and bressoud
/// (inverse). glaisher has no rewrite derivation.
std::vector<TraceStep> trace(BijectionKind kind, const Partition& input, bool inverse = false);

namespace detail {

/// Insertion by interchange hops; agrees with pair_insert everywhere.
Partition pair_insert_iterative(const Partition& gamma, Part odd_part,
                                std::vector<TraceStep>* steps = nullptr);

/// Column decomposition of the alternating shifted layout: the leading
/// odd-length columns and the left-justified residual row widths.
struct ShiftedColumns {
  std::vector<Part> odd_column_lengths;
  std::vector<Part> residual_rows;
};
ShiftedColumns shifted_columns(const Partition& distinct);

}  // namespace detail

}  // namespace partbij
