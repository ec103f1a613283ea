#pragma once

#include <string>
#include <vector>

#include "partbij/partition.hpp"

namespace partbij {

/// Streams the partitions of n in reverse-lexicographic order, (n) first and
/// (1,...,1) last. The view returned by current() is valid until the next
/// call to next().
class PartitionStream {
public:
  explicit PartitionStream(long long n);
  bool next();
  std::span<const Part> current() const noexcept { return parts_; }

private:
  long long n_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<Part> parts_;
};

template <typename F>
void for_each_partition(long long n, F&& f) {
  PartitionStream stream(n);
  while (stream.next()) f(stream.current());
}

long long count_partitions(long long n);  // by enumeration

/// p(0..max_n) from the pentagonal-number recurrence.
std::vector<long long> pentagonal_counts(long long max_n);

std::vector<Partition> class_members(long long n, PartitionClass c);

struct ClassCountRow {
  long long n = 0;
  std::array<long long, kAllClasses.size()> counts{};  // indexed like kAllClasses
  long long count(PartitionClass c) const;
  /// |O| = |D|, |OD| = |S|, |SR| = |Dle2| = |ODS|.
  bool invariants_hold() const;
};
std::vector<ClassCountRow> counting_table(long long max_n);

struct VerificationFailure {
  Partition input;
  std::string property;  // expectation that was violated
  std::string observed;
};

struct VerificationReport {
  std::string label;
  long long max_n = 0;
  long long checked = 0;
  std::vector<VerificationFailure> failures;  // capped; see failures_total
  long long failures_total = 0;
};

const std::vector<std::string>& verification_labels();
/// Runs one named exhaustive check over all weights <= max_n. Accepts the
/// aliases sylvester-formula-vs-pairwise and bressoud-vs-original. Throws
/// std::invalid_argument for unknown labels.
VerificationReport verify(const std::string& label, long long max_n);
std::vector<VerificationReport> verify_all(long long max_n);

}  // namespace partbij
