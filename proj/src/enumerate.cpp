#include "partbij/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "partbij/bijections.hpp"
#include "partbij/notation.hpp"

namespace partbij {

PartitionStream::PartitionStream(long long n) : n_(n) {
  if (n < 0) throw std::invalid_argument("PartitionStream: n must be non-negative");
  parts_.reserve(static_cast<std::size_t>(n));
}

bool PartitionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (n_ > 0) parts_.push_back(n_);
    return true;
  }
  // reverse-lex successor: decrement the rightmost part > 1 and refill
  std::size_t h = parts_.size();
  while (h > 0 && parts_[h - 1] == 1) --h;
  if (h == 0) {
    done_ = true;
    return false;
  }
  const Part cap = parts_[h - 1] - 1;
  long long rem = static_cast<long long>(parts_.size() - h) + parts_[h - 1];
  parts_.resize(h - 1);
  while (rem > 0) {
    const Part take = std::min<long long>(cap, rem);
    parts_.push_back(take);
    rem -= take;
  }
  return true;
}

long long count_partitions(long long n) {
  long long c = 0;
  for_each_partition(n, [&](std::span<const Part>) { ++c; });
  return c;
}

std::vector<long long> pentagonal_counts(long long max_n) {
  if (max_n < 0) throw std::invalid_argument("pentagonal_counts: max_n must be non-negative");
  std::vector<long long> p(static_cast<std::size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (long long n = 1; n <= max_n; ++n) {
    long long total = 0;
    for (long long k = 1;; ++k) {
      const long long g1 = k * (3 * k - 1) / 2;
      const long long g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      const long long sign = k % 2 == 1 ? 1 : -1;
      if (g1 <= n) total += sign * p[n - g1];
      if (g2 <= n) total += sign * p[n - g2];
    }
    p[n] = total;
  }
  return p;
}

std::vector<Partition> class_members(long long n, PartitionClass c) {
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const Part> parts) {
    if (is_member(parts, c))
      out.push_back(Partition::from_sorted(std::vector<Part>(parts.begin(), parts.end())));
  });
  return out;
}

long long ClassCountRow::count(PartitionClass c) const {
  for (std::size_t i = 0; i < kAllClasses.size(); ++i)
    if (kAllClasses[i] == c) return counts[i];
  return 0;
}

bool ClassCountRow::invariants_hold() const {
  return count(PartitionClass::odd) == count(PartitionClass::distinct) &&
         count(PartitionClass::odd_distinct) == count(PartitionClass::splitting) &&
         count(PartitionClass::spin_regular) == count(PartitionClass::tightly_paired) &&
         count(PartitionClass::spin_regular) == count(PartitionClass::odd_distinct_small);
}

std::vector<ClassCountRow> counting_table(long long max_n) {
  if (max_n < 0) throw std::invalid_argument("counting_table: max_n must be non-negative");
  std::vector<ClassCountRow> table(static_cast<std::size_t>(max_n) + 1);
  for (long long n = 0; n <= max_n; ++n) {
    ClassCountRow& row = table[static_cast<std::size_t>(n)];
    row.n = n;
    for_each_partition(n, [&](std::span<const Part> parts) {
      for (std::size_t i = 0; i < kAllClasses.size(); ++i)
        if (is_member(parts, kAllClasses[i])) ++row.counts[i];
    });
  }
  return table;
}

// ------------------------------------------------------------ verification

namespace {

constexpr std::size_t kMaxStoredFailures = 25;

void fail(VerificationReport& rep, const Partition& input, std::string property,
          std::string observed) {
  ++rep.failures_total;
  if (rep.failures.size() < kMaxStoredFailures)
    rep.failures.push_back({input, std::move(property), std::move(observed)});
}

template <typename F>
void sweep(long long max_n, PartitionClass domain, F&& f) {
  for (long long n = 0; n <= max_n; ++n)
    for_each_partition(n, [&](std::span<const Part> parts) {
      if (!is_member(parts, domain)) return;
      f(n, Partition::from_sorted(std::vector<Part>(parts.begin(), parts.end())));
    });
}

std::string notation_or_empty(const Partition& p) {
  return p.empty() ? std::string("()") : to_notation(p);
}

void check_glaisher(long long max_n, VerificationReport& rep) {
  sweep(max_n, PartitionClass::odd, [&](long long n, const Partition& lam) {
    ++rep.checked;
    const Partition nu = glaisher_forward(lam);
    if (!is_member(nu, PartitionClass::distinct) || nu.weight() != n)
      fail(rep, lam, "image lies in the distinct class of the same weight", notation_or_empty(nu));
    if (glaisher_inverse(nu) != lam)
      fail(rep, lam, "round trip is the identity", notation_or_empty(glaisher_inverse(nu)));
    if (stats(nu).odd_parts != stats(lam).odd_mult_parts)
      fail(rep, lam, "odd parts of the image = odd-multiplicity values of the input",
           notation_or_empty(nu));
  });
}

void check_sylvester(long long max_n, VerificationReport& rep) {
  sweep(max_n, PartitionClass::odd, [&](long long n, const Partition& lam) {
    ++rep.checked;
    const Partition mu = sylvester_forward(lam);
    if (!is_member(mu, PartitionClass::distinct) || mu.weight() != n)
      fail(rep, lam, "image lies in the distinct class of the same weight", notation_or_empty(mu));
    if (stats(mu).alt_sum != static_cast<long long>(lam.length()))
      fail(rep, lam, "alternating sum of the image = length of the input", notation_or_empty(mu));
    const Partition back = sylvester_inverse(mu);
    if (back != lam)
      fail(rep, lam, "round trip is the identity", notation_or_empty(back));
  });
}

void check_sylvester_agreement(long long max_n, VerificationReport& rep) {
  sweep(max_n, PartitionClass::odd, [&](long long, const Partition& lam) {
    ++rep.checked;
    const Partition a = sylvester_forward(lam);
    const Partition b = sylvester_pairwise(lam);
    if (a != b)
      fail(rep, lam, "formula and pairwise methods agree",
           notation_or_empty(a) + " vs " + notation_or_empty(b));
  });
}

void check_bressoud(long long max_n, VerificationReport& rep) {
  sweep(max_n, PartitionClass::odd_distinct, [&](long long n, const Partition& lam) {
    ++rep.checked;
    const Partition mu = bressoud_forward(lam);
    const PartitionStats ms = stats(mu);
    const PartitionStats ls = stats(lam);
    if (!is_member(mu, PartitionClass::splitting) || mu.weight() != n)
      fail(rep, lam, "image is a splitting partition of the same weight", notation_or_empty(mu));
    if (ms.alt_sum != ls.length || ms.odd_parts != ls.length)
      fail(rep, lam, "alternating sum and odd parts of the image = length of the input",
           notation_or_empty(mu));
    if (ms.length != ls.length + ls.odd_runs)
      fail(rep, lam, "length of the image = length + odd runs of the input",
           notation_or_empty(mu));
    const Partition back = bressoud_inverse(mu);
    if (back != lam)
      fail(rep, lam, "round trip is the identity", notation_or_empty(back));
  });
}

void check_bressoud_agreement(long long max_n, VerificationReport& rep) {
  sweep(max_n, PartitionClass::odd_distinct, [&](long long, const Partition& lam) {
    ++rep.checked;
    const Partition a = bressoud_forward(lam);
    const Partition b = bressoud_forward_original(lam);
    if (a != b)
      fail(rep, lam, "interchange and subtract/sort/add methods agree",
           notation_or_empty(a) + " vs " + notation_or_empty(b));
  });
}

void check_extended(long long max_n, VerificationReport& rep) {
  sweep(max_n, PartitionClass::odd, [&](long long n, const Partition& lam) {
    ++rep.checked;
    const Partition mu = extend_forward(lam);
    if (!is_member(mu, PartitionClass::distinct) || mu.weight() != n)
      fail(rep, lam, "image lies in the distinct class of the same weight", notation_or_empty(mu));
    const PartitionStats ms = stats(mu);
    const PartitionStats ls = stats(lam);
    if (ms.alt_sum != ls.length)
      fail(rep, lam, "alternating sum of the image = length of the input", notation_or_empty(mu));
    if (ms.odd_parts != ls.odd_mult_parts)
      fail(rep, lam, "odd parts of the image = odd-multiplicity values of the input",
           notation_or_empty(mu));
    const Partition back = extend_inverse(mu);
    if (back != lam)
      fail(rep, lam, "round trip is the identity", notation_or_empty(back));
  });
}

void check_extension_property(long long max_n, VerificationReport& rep) {
  sweep(max_n, PartitionClass::odd_distinct, [&](long long, const Partition& lam) {
    ++rep.checked;
    const Partition a = extend_forward(lam);
    const Partition b = bressoud_forward(lam);
    if (a != b)
      fail(rep, lam, "the extended map restricts to the pairing map on odd-distinct inputs",
           notation_or_empty(a) + " vs " + notation_or_empty(b));
  });
}

void check_square_doubling(long long max_n, VerificationReport& rep) {
  sweep(max_n / 2, PartitionClass::odd, [&](long long, const Partition& lam) {
    ++rep.checked;
    const Partition lhs = extend_forward(squared(lam));
    const Partition rhs = scaled(sylvester_forward(lam), 2);
    if (lhs != rhs)
      fail(rep, lam, "extended map of the square = doubled sylvester image",
           notation_or_empty(lhs) + " vs " + notation_or_empty(rhs));
  });
}

void check_images(long long max_n, VerificationReport& rep) {
  for (long long n = 0; n <= max_n; ++n) {
    ++rep.checked;
    std::set<Partition> dist, split, ext_img, bre_img;
    for_each_partition(n, [&](std::span<const Part> parts) {
      Partition p = Partition::from_sorted(std::vector<Part>(parts.begin(), parts.end()));
      if (is_member(parts, PartitionClass::distinct)) dist.insert(p);
      if (is_member(parts, PartitionClass::splitting)) split.insert(p);
      if (is_member(parts, PartitionClass::odd)) ext_img.insert(extend_forward(p));
      if (is_member(parts, PartitionClass::odd_distinct)) bre_img.insert(bressoud_forward(p));
    });
    if (ext_img != dist)
      fail(rep, Partition{{n == 0 ? 1 : n}}, "extended map is onto the distinct class",
           "weight " + std::to_string(n));
    if (bre_img != split)
      fail(rep, Partition{{n == 0 ? 1 : n}}, "pairing map is onto the splitting class",
           "weight " + std::to_string(n));
  }
}

void check_ods_image(long long max_n, VerificationReport& rep) {
  for (long long n = 0; n <= max_n; ++n) {
    ++rep.checked;
    std::set<Partition> tight, img;
    for_each_partition(n, [&](std::span<const Part> parts) {
      Partition p = Partition::from_sorted(std::vector<Part>(parts.begin(), parts.end()));
      if (is_member(parts, PartitionClass::tightly_paired)) tight.insert(p);
      if (is_member(parts, PartitionClass::odd_distinct_small)) img.insert(extend_forward(p));
    });
    if (img != tight)
      fail(rep, Partition{{n == 0 ? 1 : n}},
           "extended map restricted to ODS is onto Dle2", "weight " + std::to_string(n));
  }
}

void check_glaisher_alt_negative(long long /*max_n*/, VerificationReport& rep) {
  // negative control with a fixed search bound: some odd partition of weight
  // at most 16 must break the alternating-sum law
  bool found = false;
  sweep(16, PartitionClass::odd, [&](long long, const Partition& lam) {
    ++rep.checked;
    if (stats(glaisher_forward(lam)).alt_sum != static_cast<long long>(lam.length()))
      found = true;
  });
  if (!found)
    fail(rep, Partition{}, "some image has alternating sum != input length", "none found");
}

void check_counts(long long max_n, VerificationReport& rep) {
  const std::vector<long long> pent = pentagonal_counts(max_n);
  for (const ClassCountRow& row : counting_table(max_n)) {
    ++rep.checked;
    if (!row.invariants_hold())
      fail(rep, Partition{}, "class count identities at weight " + std::to_string(row.n),
           "O=" + std::to_string(row.count(PartitionClass::odd)) +
               " D=" + std::to_string(row.count(PartitionClass::distinct)) +
               " OD=" + std::to_string(row.count(PartitionClass::odd_distinct)) +
               " S=" + std::to_string(row.count(PartitionClass::splitting)) +
               " SR=" + std::to_string(row.count(PartitionClass::spin_regular)) +
               " Dle2=" + std::to_string(row.count(PartitionClass::tightly_paired)) +
               " ODS=" + std::to_string(row.count(PartitionClass::odd_distinct_small)));
    const long long enumerated = count_partitions(row.n);
    if (enumerated != pent[static_cast<std::size_t>(row.n)])
      fail(rep, Partition{}, "enumeration matches the pentagonal recurrence",
           std::to_string(enumerated) + " vs " +
               std::to_string(pent[static_cast<std::size_t>(row.n)]));
  }
}

struct CheckEntry {
  const char* label;
  void (*run)(long long, VerificationReport&);
};

constexpr CheckEntry kChecks[] = {
    {"glaisher", check_glaisher},
    {"sylvester", check_sylvester},
    {"sylvester-agreement", check_sylvester_agreement},
    {"bressoud", check_bressoud},
    {"bressoud-agreement", check_bressoud_agreement},
    {"new", check_extended},
    {"extension", check_extension_property},
    {"square-doubling", check_square_doubling},
    {"images", check_images},
    {"ods-image", check_ods_image},
    {"glaisher-alt-negative", check_glaisher_alt_negative},
    {"counts", check_counts},
};

std::string resolve_alias(const std::string& label) {
  if (label == "sylvester-formula-vs-pairwise") return "sylvester-agreement";
  if (label == "bressoud-vs-original") return "bressoud-agreement";
  return label;
}

}  // namespace

const std::vector<std::string>& verification_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> v;
    for (const CheckEntry& e : kChecks) v.push_back(e.label);
    return v;
  }();
  return labels;
}

VerificationReport verify(const std::string& label, long long max_n) {
  if (max_n < 0) throw std::invalid_argument("verify: max_n must be non-negative");
  const std::string resolved = resolve_alias(label);
  for (const CheckEntry& e : kChecks) {
    if (resolved == e.label) {
      VerificationReport rep;
      rep.label = e.label;
      rep.max_n = max_n;
      e.run(max_n, rep);
      return rep;
    }
  }
  throw std::invalid_argument("verify: unknown label '" + label + "'");
}

std::vector<VerificationReport> verify_all(long long max_n) {
  std::vector<VerificationReport> out;
  for (const CheckEntry& e : kChecks) out.push_back(verify(e.label, max_n));
  return out;
}

}  // namespace partbij
