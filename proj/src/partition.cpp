#include "partbij/partition.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partbij {

namespace {

long long sum_of(std::span<const Part> v) {
  return std::accumulate(v.begin(), v.end(), 0LL);
}

Part at(std::span<const Part> v, std::size_t j) {  // 1-based, 0 past the end
  return j >= 1 && j <= v.size() ? v[j - 1] : 0;
}

[[maybe_unused]] bool non_increasing(std::span<const Part> v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

}  // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (Part p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = sum_of(parts_);
}

Partition::Partition(std::initializer_list<Part> parts)
    : Partition(std::vector<Part>(parts)) {}

Partition Partition::from_sorted(std::vector<Part> parts) {
  assert(non_increasing(parts) && (parts.empty() || parts.back() > 0));
  Partition p;
  p.parts_ = std::move(parts);
  p.weight_ = sum_of(p.parts_);
  return p;
}

PairedComposition::PairedComposition(std::vector<Part> entries)
    : entries_(std::move(entries)) {
  for (Part e : entries_)
    if (e < 0) throw std::invalid_argument("paired composition entries must be non-negative");
  if (entries_.size() % 2) entries_.push_back(0);
}

PairedComposition::PairedComposition(std::initializer_list<Part> entries)
    : PairedComposition(std::vector<Part>(entries)) {}

PairedComposition PairedComposition::of(const Partition& p) {
  return PairedComposition(p.parts());
}

long long PairedComposition::sum() const noexcept { return sum_of(entries_); }

long long PairedComposition::alt_sum() const noexcept {
  long long s = 0;
  long long sign = 1;
  for (Part e : entries_) {
    s += sign * e;
    sign = -sign;
  }
  return s;
}

long long PairedComposition::odd_entries() const noexcept {
  return std::count_if(entries_.begin(), entries_.end(),
                       [](Part e) { return e % 2 != 0; });
}

bool PairedComposition::reads_as_strict_partition() const noexcept {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i - 1] <= entries_[i]) return false;
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
    if (entries_[i] <= 0) return false;
  return true;
}

Partition PairedComposition::to_partition() const {
  if (!reads_as_strict_partition())
    throw std::invalid_argument("paired composition does not read as a strict partition");
  std::vector<Part> parts = entries_;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition::from_sorted(std::move(parts));
}

std::string PairedComposition::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out << (i % 2 == 0 ? " | " : ",");
    out << entries_[i];
  }
  return out.str();
}

std::string_view class_tag(PartitionClass c) {
  switch (c) {
    case PartitionClass::odd: return "O";
    case PartitionClass::distinct: return "D";
    case PartitionClass::odd_distinct: return "OD";
    case PartitionClass::splitting: return "S";
    case PartitionClass::spin_regular: return "SR";
    case PartitionClass::tightly_paired: return "Dle2";
    case PartitionClass::odd_distinct_small: return "ODS";
  }
  return "?";
}

std::optional<PartitionClass> class_from_tag(std::string_view tag) {
  for (PartitionClass c : kAllClasses)
    if (class_tag(c) == tag) return c;
  return std::nullopt;
}

Partition conjugate(const Partition& p) {
  std::vector<Part> out;
  out.reserve(static_cast<std::size_t>(p.largest()));
  std::size_t ge = p.length();  // number of parts >= i
  for (Part i = 1; i <= p.largest(); ++i) {
    while (ge > 0 && p.parts()[ge - 1] < i) --ge;
    out.push_back(static_cast<Part>(ge));
  }
  return Partition::from_sorted(std::move(out));
}

namespace {

// Distinct odd values of odd multiplicity, descending; parts sorted desc.
std::vector<Part> odd_support(std::span<const Part> parts) {
  std::vector<Part> vals;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % 2 == 1 && (j - i) % 2 == 1) vals.push_back(parts[i]);
    i = j;
  }
  return vals;
}

std::vector<Run> runs_of(std::span<const Part> parts) {
  std::vector<Part> vals = odd_support(parts);
  std::vector<Run> out;
  for (std::size_t i = 0; i < vals.size();) {
    std::size_t j = i;
    while (j + 1 < vals.size() && vals[j + 1] == vals[j] - 2) ++j;
    out.push_back({vals[i], static_cast<long long>(j - i + 1)});
    i = j + 1;
  }
  return out;
}

long long odd_runs_of(std::span<const Part> parts) {
  long long n = 0;
  for (const Run& r : runs_of(parts))
    if (r.is_odd_run()) ++n;
  return n;
}

long long odd_mult_values(std::span<const Part> parts) {
  long long n = 0;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if ((j - i) % 2 == 1) ++n;
    i = j;
  }
  return n;
}

}  // namespace

PartitionStats stats(const Partition& p) {
  PartitionStats s;
  s.length = static_cast<long long>(p.length());
  long long sign = 1;
  for (Part q : p.parts()) {
    if (q % 2 != 0) ++s.odd_parts;
    s.alt_sum += sign * q;
    sign = -sign;
  }
  s.odd_mult_parts = odd_mult_values(p.parts());
  s.odd_runs = odd_runs_of(p.parts());
  return s;
}

std::vector<Run> runs(const Partition& p) { return runs_of(p.parts()); }

long long multiplicity(const Partition& p, Part value) {
  if (value < 1) throw std::invalid_argument("multiplicity: value must be positive");
  auto [lo, hi] = std::equal_range(p.parts().begin(), p.parts().end(), value, std::greater<>());
  return hi - lo;
}

Partition concat(const Partition& a, const Partition& b) {
  std::vector<Part> out;
  out.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(out), std::greater<>());
  return Partition::from_sorted(std::move(out));
}

Partition squared(const Partition& a) {
  std::vector<Part> out;
  out.reserve(2 * a.length());
  for (Part q : a.parts()) {
    out.push_back(q);
    out.push_back(q);
  }
  return Partition::from_sorted(std::move(out));
}

Partition scaled(const Partition& a, Part factor) {
  if (factor < 1) throw std::invalid_argument("scaled: factor must be positive");
  std::vector<Part> out;
  out.reserve(a.length());
  for (Part q : a.parts()) out.push_back(q * factor);
  return Partition::from_sorted(std::move(out));
}

std::pair<Partition, Partition> split_square_free(const Partition& p) {
  std::vector<Part> alpha, beta;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    std::size_t m = j - i;
    alpha.insert(alpha.end(), m / 2, parts[i]);
    if (m % 2) beta.push_back(parts[i]);
    i = j;
  }
  return {Partition::from_sorted(std::move(alpha)), Partition::from_sorted(std::move(beta))};
}

PairedComposition double_parts(const Partition& p) {
  std::vector<Part> out;
  out.reserve(2 * p.length());
  for (Part q : p.parts()) {
    if (q % 2 != 0) {
      out.push_back((q + 1) / 2);
      out.push_back((q - 1) / 2);
    } else {
      out.push_back(q / 2 + 1);
      out.push_back(q / 2 - 1);
    }
  }
  return PairedComposition(std::move(out));
}

namespace {

bool all_odd(std::span<const Part> v) {
  return std::all_of(v.begin(), v.end(), [](Part p) { return p % 2 != 0; });
}

bool strictly_decreasing(std::span<const Part> v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] <= v[i]) return false;
  return true;
}

// Pair conditions run over 0 < 2j <= len+1, so an odd length contributes the
// padded pair (v_len, 0).
bool tight_pairs(std::span<const Part> v) {
  std::size_t t = (v.size() + 1) / 2;
  for (std::size_t j = 1; j <= t; ++j) {
    Part gap = at(v, 2 * j - 1) - at(v, 2 * j);
    if (gap != 1 && gap != 2) return false;
  }
  return true;
}

bool splitting_sums(std::span<const Part> v) {
  std::size_t t = (v.size() + 1) / 2;
  for (std::size_t j = 1; j <= t; ++j)
    if ((at(v, 2 * j - 1) + at(v, 2 * j)) % 4 == 2) return false;
  return true;
}

bool spin_regular_gaps(std::span<const Part> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    Part gap = v[i - 1] - v[i];
    if (gap < 4) return false;
    if (v[i - 1] % 2 == 0 && v[i] % 2 == 0 && gap < 6) return false;
  }
  return true;
}

bool small_values_distinct(std::span<const Part> v) {
  // no repeated value at or below length + odd runs - 2; the bound can be
  // non-positive, in which case the condition is vacuous
  long long hi = static_cast<long long>(v.size()) + odd_runs_of(v) - 2;
  if (hi <= 0) return true;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1] && v[i] <= hi) return false;
  return true;
}

}  // namespace

bool is_member(std::span<const Part> parts, PartitionClass c) {
  switch (c) {
    case PartitionClass::odd:
      return all_odd(parts);
    case PartitionClass::distinct:
      return strictly_decreasing(parts);
    case PartitionClass::odd_distinct:
      return all_odd(parts) && strictly_decreasing(parts);
    case PartitionClass::splitting:
      return strictly_decreasing(parts) && tight_pairs(parts) && splitting_sums(parts);
    case PartitionClass::spin_regular:
      return strictly_decreasing(parts) && spin_regular_gaps(parts);
    case PartitionClass::tightly_paired:
      return strictly_decreasing(parts) && tight_pairs(parts);
    case PartitionClass::odd_distinct_small:
      return all_odd(parts) && small_values_distinct(parts);
  }
  return false;
}

bool is_member(const Partition& p, PartitionClass c) { return is_member(p.parts(), c); }

}  // namespace partbij
