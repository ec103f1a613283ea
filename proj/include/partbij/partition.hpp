#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partbij {

using Part = long long;

/// A partition: non-increasing sequence of positive parts. Immutable value;
/// part(j) is 1-based and reads 0 past the end.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts);

  /// Adopts a sequence that is already non-increasing and positive.
  static Partition from_sorted(std::vector<Part> parts);

  const std::vector<Part>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  long long weight() const noexcept { return weight_; }
  Part largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  Part part(std::size_t j) const noexcept {
    return j >= 1 && j <= parts_.size() ? parts_[j - 1] : 0;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<Part> parts_;
  long long weight_ = 0;
};

/// An even-length sequence of non-negative entries read as consecutive pairs
/// (entries[0],entries[1] | entries[2],entries[3] | ...). Construction pads
/// odd-length content with one trailing zero. Rewrite intermediates may hold
/// a zero elsewhere; finished values keep zeros in the last entry only.
class PairedComposition {
public:
  PairedComposition() = default;
  explicit PairedComposition(std::vector<Part> entries);
  PairedComposition(std::initializer_list<Part> entries);
  static PairedComposition of(const Partition& p);

  const std::vector<Part>& entries() const noexcept { return entries_; }
  std::size_t pair_count() const noexcept { return entries_.size() / 2; }
  /// 1-based entry access; reads 0 past the end.
  Part entry(std::size_t i) const noexcept {
    return i >= 1 && i <= entries_.size() ? entries_[i - 1] : 0;
  }
  /// 1-based pair access; reads (0,0) past the end.
  std::pair<Part, Part> pair(std::size_t j) const noexcept {
    return {entry(2 * j - 1), entry(2 * j)};
  }

  long long sum() const noexcept;
  long long alt_sum() const noexcept;
  long long odd_entries() const noexcept;

  /// True when the entries read as a strict partition: strictly decreasing
  /// and positive, except for at most one trailing zero.
  bool reads_as_strict_partition() const noexcept;
  /// Strips the trailing zero; throws std::invalid_argument when the entries
  /// do not read as a strict partition.
  Partition to_partition() const;

  std::string to_string() const;  // "15,14 | 21,19 | ..."

  friend bool operator==(const PairedComposition&, const PairedComposition&) = default;

private:
  std::vector<Part> entries_;
};

struct PartitionStats {
  long long length = 0;
  long long odd_parts = 0;       // parts of odd size
  long long alt_sum = 0;         // p1 - p2 + p3 - ...
  long long odd_mult_parts = 0;  // distinct values occurring an odd number of times
  long long odd_runs = 0;
  friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

/// Maximal chain largest, largest-2, ... of consecutive odd values, each
/// occurring with odd multiplicity. The chain has `count` terms. A run is
/// "odd" when count is odd and the chain stops short of 1.
struct Run {
  Part largest = 0;
  long long count = 0;
  bool is_odd_run() const noexcept { return count % 2 == 1 && count < (largest + 1) / 2; }
  friend bool operator==(const Run&, const Run&) = default;
};

enum class PartitionClass {
  odd,                 // O: every part odd
  distinct,            // D: strictly decreasing
  odd_distinct,        // OD = O and D
  splitting,           // S: pair gaps 1 or 2, pair sums != 2 (mod 4), distinct
  spin_regular,        // SR: distinct, gaps >= 4 and >= 6 between even parts
  tightly_paired,      // Dle2: distinct with pair gaps 1 or 2 (doubles of SR)
  odd_distinct_small,  // ODS: odd, no repeated value below length + odd runs - 1
};

inline constexpr std::array<PartitionClass, 7> kAllClasses = {
    PartitionClass::odd,          PartitionClass::distinct,
    PartitionClass::odd_distinct, PartitionClass::splitting,
    PartitionClass::spin_regular, PartitionClass::tightly_paired,
    PartitionClass::odd_distinct_small};

std::string_view class_tag(PartitionClass c);  // O, D, OD, S, SR, Dle2, ODS
std::optional<PartitionClass> class_from_tag(std::string_view tag);

Partition conjugate(const Partition& p);
PartitionStats stats(const Partition& p);
std::vector<Run> runs(const Partition& p);
long long multiplicity(const Partition& p, Part value);
Partition concat(const Partition& a, const Partition& b);
Partition squared(const Partition& a);  // a concat a
Partition scaled(const Partition& a, Part factor);

/// Unique decomposition lambda = squared(alpha) concat beta with beta
/// distinct: beta takes one copy of every odd-multiplicity value, alpha
/// floor(m/2) copies of each value.
std::pair<Partition, Partition> split_square_free(const Partition& p);

/// Replaces every part by a pair: odd p -> ((p+1)/2, (p-1)/2),
/// even p -> (p/2+1, p/2-1). The pair gap is 1 or 2 as p is odd or even.
PairedComposition double_parts(const Partition& p);

/// Membership test on a non-increasing span of positive parts. Pair-indexed
/// conditions read indices past the end as 0 and cover the padded pair.
bool is_member(std::span<const Part> parts, PartitionClass c);
bool is_member(const Partition& p, PartitionClass c);

}  // namespace partbij
