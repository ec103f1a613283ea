#include "partbij/bijections.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace partbij {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_class(const Partition& p, PartitionClass c, const char* who) {
  if (!is_member(p, c))
    throw std::invalid_argument(std::string(who) + ": input is not in class " +
                                std::string(class_tag(c)));
}

void emit(std::vector<TraceStep>* sink, const std::vector<Part>& before,
          const std::vector<Part>& after, TraceRule rule, std::size_t position) {
  if (!sink) return;
  sink->push_back({PairedComposition(before), PairedComposition(after), rule, position});
}

std::vector<Part> strip_trailing_zeros(std::vector<Part> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

Partition strict_partition_from(std::vector<Part> v, const char* who) {
  v = strip_trailing_zeros(std::move(v));
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] <= v[i])
      throw std::logic_error(std::string(who) + ": result is not strictly decreasing");
  if (!v.empty() && v.back() <= 0)
    throw std::logic_error(std::string(who) + ": result has a non-positive part");
  return Partition::from_sorted(std::move(v));
}

}  // namespace

// ---------------------------------------------------------------- glaisher

Partition glaisher_forward(const Partition& lam) {
  require_class(lam, PartitionClass::odd, "glaisher_forward");
  std::vector<Part> out;
  const auto& parts = lam.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    unsigned long long m = j - i;
    for (int b = 0; (1ULL << b) <= m; ++b)
      if (m & (1ULL << b)) out.push_back(parts[i] << b);
    i = j;
  }
  return Partition(std::move(out));
}

Partition glaisher_inverse(const Partition& nu) {
  require_class(nu, PartitionClass::distinct, "glaisher_inverse");
  std::vector<Part> out;
  for (Part p : nu.parts()) {
    long long copies = 1;
    while (p % 2 == 0) {
      p /= 2;
      copies *= 2;
    }
    out.insert(out.end(), copies, p);
  }
  return Partition(std::move(out));
}

// --------------------------------------------------------------- sylvester

SylvesterAnchor sylvester_anchor(const Partition& lam) {
  require_class(lam, PartitionClass::odd, "sylvester_anchor");
  require(!lam.empty(), "sylvester_anchor: the empty partition has no anchor");
  long long d = 0;
  while (lam.part(d + 1) >= 2 * (d + 1) - 1) ++d;
  return {d, lam.part(d) == 2 * d - 1 ? 1 : 0};
}

Partition sylvester_forward(const Partition& lam) {
  require_class(lam, PartitionClass::odd, "sylvester_forward");
  if (lam.empty()) return {};
  const auto [d, eps] = sylvester_anchor(lam);
  const Partition conj = conjugate(lam);
  std::vector<Part> mu(static_cast<std::size_t>(2 * d - eps));
  for (long long j = 1; j <= d; ++j)
    mu[2 * j - 2] = (lam.part(j) + 1) / 2 + conj.part(2 * j - 1) - 2 * j + 1;
  for (long long j = 1; j <= d - eps; ++j)
    mu[2 * j - 1] = (lam.part(j) - 1) / 2 + conj.part(2 * j + 1) - 2 * j + 1;
  return strict_partition_from(std::move(mu), "sylvester_forward");
}

namespace {

// Bubble the freshly prepended gap-1 pair rightwards:
//   (a,a-1 | b,c) -> (b+1,c+1 | a-1,a-2),  (1,0 | b,c) -> (b+1,c).
// seq has even length (trailing zero pad); stops once the read is a partition.
std::vector<Part> bubble_prepended(std::vector<Part> seq, std::vector<TraceStep>* sink) {
  std::size_t k = 0;
  for (;;) {
    const Part x = seq[2 * k];
    const Part y = seq[2 * k + 1];
    if (2 * k + 2 >= seq.size()) break;
    const Part b = seq[2 * k + 2];
    const Part c = seq[2 * k + 3];
    if (y > b) break;
    const std::vector<Part> before = seq;
    if (x == 1 && y == 0) {
      seq[2 * k] = b + 1;
      seq[2 * k + 1] = c;
      seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(2 * k + 2),
                seq.begin() + static_cast<std::ptrdiff_t>(2 * k + 4));
      emit(sink, before, seq, TraceRule::exceptional_merge, k + 1);
      break;
    }
    seq[2 * k] = b + 1;
    seq[2 * k + 1] = c + 1;
    seq[2 * k + 2] = x - 1;
    seq[2 * k + 3] = x - 2;
    emit(sink, before, seq, TraceRule::pair_interchange, k + 1);
    ++k;
  }
  return seq;
}

Partition sylvester_pairwise_impl(const Partition& lam, std::vector<TraceStep>* sink) {
  require_class(lam, PartitionClass::odd, "sylvester_pairwise");
  std::vector<Part> nu;
  for (Part p : lam.parts()) {
    std::vector<Part> seq = {(p + 1) / 2, (p - 1) / 2};
    seq.insert(seq.end(), nu.begin(), nu.end());
    if (seq.size() % 2) seq.push_back(0);
    emit(sink, nu, seq, TraceRule::prepend, 0);
    nu = strip_trailing_zeros(bubble_prepended(std::move(seq), sink));
  }
  return strict_partition_from(std::move(nu), "sylvester_pairwise");
}

}  // namespace

Partition sylvester_pairwise(const Partition& lam) {
  return sylvester_pairwise_impl(lam, nullptr);
}

namespace detail {

ShiftedColumns shifted_columns(const Partition& mu) {
  ShiftedColumns out;
  if (mu.empty()) return out;
  // Row intervals [left, right] of the alternating layout. For distinct mu
  // the lefts never cross the origin: left_2 = mu_1 - mu_2 - 1 >= 0.
  std::vector<std::pair<Part, Part>> rows;
  rows.reserve(mu.length());
  for (std::size_t i = 0; i < mu.length(); ++i) {
    const Part w = mu.parts()[i];
    Part left = 0;
    if (i > 0) left = i % 2 == 1 ? rows.back().second - w : rows.back().first;
    rows.push_back({left, left + w - 1});
  }
  // Leading odd-length columns come off whole; their lengths are parts.
  Part k = 0;
  for (;; ++k) {
    Part len = 0;
    for (auto [l, r] : rows)
      if (l <= k && k <= r) ++len;
    if (len == 0 || len % 2 == 0) break;
    out.odd_column_lengths.push_back(len);
  }
  for (auto [l, r] : rows) {
    if (r < k) continue;
    if (l > k)
      throw std::logic_error("shifted_columns: residue is not left-justified");
    out.residual_rows.push_back(r - k + 1);
  }
  return out;
}

}  // namespace detail

Partition sylvester_inverse(const Partition& mu) {
  require_class(mu, PartitionClass::distinct, "sylvester_inverse");
  detail::ShiftedColumns cols = detail::shifted_columns(mu);
  std::vector<Part> lam = cols.odd_column_lengths;
  std::vector<Part> delta = cols.residual_rows;
  // Peel the residue: first column plus the last two rows form one part.
  while (delta.size() > 2) {
    lam.push_back(static_cast<Part>(delta.size()) + delta[delta.size() - 2] +
                  delta.back() - 2);
    delta.resize(delta.size() - 2);
    for (Part& d : delta) --d;
    while (!delta.empty() && delta.back() == 0) delta.pop_back();
  }
  if (delta.size() == 2)
    lam.push_back(delta[0] + delta[1]);
  else if (delta.size() == 1)
    lam.push_back(delta[0]);
  Partition out{std::vector<Part>(lam)};
  if (!is_member(out, PartitionClass::odd))
    throw std::logic_error("sylvester_inverse: recovered parts are not all odd");
  return out;
}

// ---------------------------------------------------------------- bressoud

PairedComposition bressoud_pairing(const Partition& lam) {
  require_class(lam, PartitionClass::odd_distinct, "bressoud_pairing");
  std::vector<Part> seq;
  seq.reserve(2 * lam.length());
  for (const Run& r : runs(lam)) {
    Part v = r.largest;
    for (long long i = 0; i + 1 < r.count; i += 2, v -= 4) {
      seq.push_back(v);
      seq.push_back(v - 2);
    }
    if (r.count % 2) {
      seq.push_back((v + 1) / 2);
      seq.push_back((v - 1) / 2);
    }
  }
  return PairedComposition(std::move(seq));
}

bool interchange_applicable(const PairedComposition& c, std::size_t j) {
  if (j < 1 || j + 1 > c.pair_count()) return false;
  const auto [p, q] = c.pair(j);
  const auto [r, s] = c.pair(j + 1);
  return p == q + 1 && q >= 2 && r % 2 != 0 && r == s + 2 && s >= 1 && q <= r;
}

PairedComposition pair_interchange(const PairedComposition& c, std::size_t j) {
  require(interchange_applicable(c, j),
          "pair_interchange: pairs do not match (a+1,a | 2b+1,2b-1) with a <= 2b+1");
  const auto [p, q] = c.pair(j);
  const auto [r, s] = c.pair(j + 1);
  std::vector<Part> e = c.entries();
  e[2 * j - 2] = r + 2;
  e[2 * j - 1] = s + 2;
  e[2 * j] = q - 1;
  e[2 * j + 1] = q - 2;
  return PairedComposition(std::move(e));
}

bool reverse_interchange_applicable(const PairedComposition& c, std::size_t j) {
  if (j < 1 || j + 1 > c.pair_count()) return false;
  const auto [r, s] = c.pair(j);
  const auto [p, q] = c.pair(j + 1);
  return r % 2 != 0 && r == s + 2 && s >= 3 && p == q + 1 && 2 * q + 1 >= s;
}

PairedComposition reverse_pair_interchange(const PairedComposition& c, std::size_t j) {
  require(reverse_interchange_applicable(c, j),
          "reverse_pair_interchange: pairs do not match (2b+1,2b-1 | a+1,a) with 2a+1 >= 2b-1");
  const auto [r, s] = c.pair(j);
  const auto [p, q] = c.pair(j + 1);
  std::vector<Part> e = c.entries();
  e[2 * j - 2] = q + 3;
  e[2 * j - 1] = q + 2;
  e[2 * j] = s;
  e[2 * j + 1] = s - 2;
  return PairedComposition(std::move(e));
}

namespace {

Partition bressoud_forward_impl(const Partition& lam, std::vector<TraceStep>* sink) {
  PairedComposition cur = bressoud_pairing(lam);
  emit(sink, PairedComposition::of(lam).entries(), cur.entries(), TraceRule::doubling, 0);
  for (;;) {
    std::size_t j = 1;
    while (j + 1 <= cur.pair_count() && !interchange_applicable(cur, j)) ++j;
    if (j + 1 > cur.pair_count()) break;
    PairedComposition next = pair_interchange(cur, j);
    emit(sink, cur.entries(), next.entries(), TraceRule::pair_interchange, j);
    cur = std::move(next);
  }
  return cur.to_partition();
}

Partition bressoud_inverse_impl(const Partition& mu, std::vector<TraceStep>* sink) {
  require_class(mu, PartitionClass::splitting, "bressoud_inverse");
  PairedComposition cur = PairedComposition::of(mu);
  for (;;) {
    std::size_t j = 1;
    while (j + 1 <= cur.pair_count() && !reverse_interchange_applicable(cur, j)) ++j;
    if (j + 1 > cur.pair_count()) break;
    PairedComposition next = reverse_pair_interchange(cur, j);
    emit(sink, cur.entries(), next.entries(), TraceRule::reverse_pair_interchange, j);
    cur = std::move(next);
  }
  // Read the terminal composition: a gap-2 pair of odd entries holds two
  // parts, a gap-1 pair (a+1,a) is the doubled part 2a+1.
  std::vector<Part> lam;
  for (std::size_t j = 1; j <= cur.pair_count(); ++j) {
    const auto [a, b] = cur.pair(j);
    if (a == b + 2 && a % 2 != 0) {
      lam.push_back(a);
      lam.push_back(b);
    } else if (a == b + 1) {
      lam.push_back(2 * b + 1);
    } else {
      throw std::logic_error("bressoud_inverse: terminal composition has an unreadable pair");
    }
  }
  Partition out{std::move(lam)};
  if (!is_member(out, PartitionClass::odd_distinct))
    throw std::logic_error("bressoud_inverse: recovered partition is not odd-distinct");
  return out;
}

}  // namespace

Partition bressoud_forward(const Partition& lam) {
  return bressoud_forward_impl(lam, nullptr);
}

BressoudOriginalStages bressoud_forward_original_stages(const Partition& lam) {
  BressoudOriginalStages st;
  st.paired = bressoud_pairing(lam);
  const long long t = static_cast<long long>(st.paired.pair_count());
  std::vector<std::pair<Part, Part>> pairs(t);
  for (long long i = 0; i < t; ++i) {
    const auto [a, b] = st.paired.pair(i + 1);
    pairs[i] = {a - 2 * (t - 1 - i), b - 2 * (t - 1 - i)};
  }
  std::vector<Part> reduced;
  for (auto [a, b] : pairs) {
    reduced.push_back(a);
    reduced.push_back(b);
  }
  st.reduced = PairedComposition(std::move(reduced));
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    if (x.first + x.second != y.first + y.second)
      return x.first + x.second > y.first + y.second;
    return x.first > y.first;
  });
  std::vector<Part> sorted_flat, restored;
  for (long long i = 0; i < t; ++i) {
    sorted_flat.push_back(pairs[i].first);
    sorted_flat.push_back(pairs[i].second);
    restored.push_back(pairs[i].first + 2 * (t - 1 - i));
    restored.push_back(pairs[i].second + 2 * (t - 1 - i));
  }
  st.sorted_reduced = PairedComposition(std::move(sorted_flat));
  st.result = PairedComposition(std::move(restored)).to_partition();
  return st;
}

Partition bressoud_forward_original(const Partition& lam) {
  return bressoud_forward_original_stages(lam).result;
}

Partition bressoud_inverse(const Partition& mu) {
  return bressoud_inverse_impl(mu, nullptr);
}

// --------------------------------------------------------- pair insertion

namespace {

// Preconditions for inserting (2a-1)^2: pair gaps 1 or 2 below the insertion
// size, and any pair with sum = 2 (mod 4) must start at >= 2(a+1-j).
bool insertion_preconditions_hold(const Partition& g, long long a) {
  const long long len = static_cast<long long>(g.length());
  for (long long j = 1; j < a && 2 * j - 1 <= len; ++j) {
    const Part gap = g.part(2 * j - 1) - g.part(2 * j);
    if (gap != 1 && gap != 2) return false;
  }
  const long long t = (len + 1) / 2;
  for (long long j = 1; j <= std::min(a, t); ++j) {
    const Part x = g.part(2 * j - 1);
    if ((x + g.part(2 * j)) % 4 == 2 && x < 2 * (a + 1 - j)) return false;
  }
  return true;
}

}  // namespace

Partition pair_insert(const Partition& gamma, Part odd_part) {
  require(odd_part >= 1 && odd_part % 2 != 0, "pair_insert: inserted part must be odd");
  const long long a = (odd_part + 1) / 2;
  require(insertion_preconditions_hold(gamma, a),
          "pair_insert: gamma violates the insertion preconditions");
  const long long len = static_cast<long long>(gamma.length());
  std::vector<Part> out;
  if (2 * a - 1 <= len + 1) {
    // the pair dissolves into +2 on the first 2a-1 parts
    out.reserve(std::max(len, 2 * a - 1));
    for (long long i = 1; i <= 2 * a - 1; ++i) out.push_back(gamma.part(i) + 2);
    for (long long i = 2 * a; i <= len; ++i) out.push_back(gamma.part(i));
  } else {
    // unique landing site j with gamma_{2j} > 2a-2j-2 > gamma_{2j+1}
    long long j = 0;
    const Part inf = std::numeric_limits<Part>::max();
    while (j <= a) {
      const Part upper = j == 0 ? inf : gamma.part(2 * j);
      if (upper > 2 * a - 2 * j - 2 && 2 * a - 2 * j - 2 > gamma.part(2 * j + 1)) break;
      ++j;
    }
    require(j <= a, "pair_insert: no landing site (preconditions violated)");
    out.reserve(len + 2);
    for (long long i = 1; i <= 2 * j; ++i) out.push_back(gamma.part(i) + 2);
    out.push_back(2 * a - 2 * j);
    out.push_back(2 * a - 2 * j - 2);
    for (long long i = 2 * j + 1; i <= len; ++i) out.push_back(gamma.part(i));
  }
  return strict_partition_from(std::move(out), "pair_insert");
}

namespace detail {

Partition pair_insert_iterative(const Partition& gamma, Part odd_part,
                                std::vector<TraceStep>* steps) {
  require(odd_part >= 1 && odd_part % 2 != 0, "pair_insert: inserted part must be odd");
  const long long a = (odd_part + 1) / 2;
  std::vector<Part> seq = {2 * a, 2 * a - 2};
  seq.insert(seq.end(), gamma.parts().begin(), gamma.parts().end());
  if (seq.size() % 2) seq.push_back(0);
  emit(steps, PairedComposition::of(gamma).entries(), seq, TraceRule::prepend, 0);
  // Hop the gap-2 pair rightwards: (x,x-2 | b,c) -> (b+2,c+2 | x-2,x-4),
  // with the degenerate (2,0 | b,c) -> (b+2,c).
  std::size_t k = 0;
  for (;;) {
    const Part x = seq[2 * k];
    if (2 * k + 2 >= seq.size()) break;
    const Part b = seq[2 * k + 2];
    const Part c = seq[2 * k + 3];
    if (x - 2 > b) break;
    const std::vector<Part> before = seq;
    if (x == 2) {
      seq[2 * k] = b + 2;
      seq[2 * k + 1] = c;
      seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(2 * k + 2),
                seq.begin() + static_cast<std::ptrdiff_t>(2 * k + 4));
      emit(steps, before, seq, TraceRule::exceptional_merge, k + 1);
      break;
    }
    seq[2 * k] = b + 2;
    seq[2 * k + 1] = c + 2;
    seq[2 * k + 2] = x - 2;
    seq[2 * k + 3] = x - 4;
    emit(steps, before, seq, TraceRule::insertion_interchange, k + 1);
    ++k;
  }
  return strict_partition_from(std::move(seq), "pair_insert_iterative");
}

}  // namespace detail

// ------------------------------------------------------------- extension

ExtendForwardStages extend_forward_stages(const Partition& lam) {
  require_class(lam, PartitionClass::odd, "extend_forward");
  ExtendForwardStages st;
  std::tie(st.alpha, st.beta) = split_square_free(lam);
  st.gammas.push_back(bressoud_forward(st.beta));
  for (Part p : st.alpha.parts())
    st.gammas.push_back(pair_insert(st.gammas.back(), p));
  return st;
}

Partition extend_forward(const Partition& lam) {
  require_class(lam, PartitionClass::odd, "extend_forward");
  auto [alpha, beta] = split_square_free(lam);
  Partition g = bressoud_forward(beta);
  for (Part p : alpha.parts()) g = pair_insert(g, p);
  return g;
}

ExtendInverseStages extend_inverse_stages(const Partition& mu) {
  require_class(mu, PartitionClass::distinct, "extend_inverse");
  ExtendInverseStages st;
  const long long t = (static_cast<long long>(mu.length()) + 1) / 2;

  // Stage 1: each pair gap of 2m+1 or 2m+2 hides m inserted pairs (2j-1)^2;
  // subtracting the conjugate of the hidden staircase removes them all.
  std::vector<Part> staircase;
  for (long long j = t; j >= 1; --j) {
    const Part gap = mu.part(2 * j - 1) - mu.part(2 * j);
    const long long m = (gap - 1) / 2;
    staircase.insert(staircase.end(), 2 * m, 2 * j - 1);
    st.gap_pairs.insert(st.gap_pairs.end(), 2 * m, 2 * j - 1);
  }
  st.staircase_conjugate = conjugate(Partition::from_sorted(std::move(staircase)));
  std::vector<Part> g;
  for (long long i = 1; i <= 2 * t; ++i) {
    const Part v = mu.part(i) - st.staircase_conjugate.part(i);
    if (v < 0) throw std::logic_error("extend_inverse: staircase subtraction went negative");
    g.push_back(v);
  }
  g = strip_trailing_zeros(std::move(g));
  for (std::size_t i = 1; i < g.size(); ++i)
    if (g[i - 1] < g[i])
      throw std::logic_error("extend_inverse: stage 1 left a non-partition");
  st.after_subtraction = Partition::from_sorted(g);

  // Stage 2: while some pair is all even, the last such pair is an inserted
  // pair; peel it and take back the +2 prefix it deposited.
  while (!is_member(std::span<const Part>(g), PartitionClass::splitting)) {
    const std::size_t pairs = (g.size() + 1) / 2;
    long long j = -1;
    for (std::size_t p = 0; p < pairs; ++p) {
      const Part x = g[2 * p];
      const Part y = 2 * p + 1 < g.size() ? g[2 * p + 1] : 0;
      if (x > 0 && x % 2 == 0 && y % 2 == 0) j = static_cast<long long>(p);
    }
    if (j < 0) throw std::logic_error("extend_inverse: no even pair in a non-splitting gamma");
    const Part recovered = g[2 * j] + 2 * j - 1;
    st.inserted_pairs.push_back(recovered);
    st.inserted_pairs.push_back(recovered);
    std::vector<Part> next(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(2 * j));
    for (Part& v : next) v -= 2;
    next.insert(next.end(),
                g.begin() + static_cast<std::ptrdiff_t>(
                                std::min<std::size_t>(2 * j + 2, g.size())),
                g.end());
    g = strip_trailing_zeros(std::move(next));
    for (std::size_t i = 1; i < g.size(); ++i)
      if (g[i - 1] < g[i])
        throw std::logic_error("extend_inverse: stage 2 left a non-partition");
  }
  st.splitting_core = Partition::from_sorted(std::vector<Part>(g));

  st.beta = bressoud_inverse(st.splitting_core);
  std::vector<Part> all = st.gap_pairs;
  all.insert(all.end(), st.inserted_pairs.begin(), st.inserted_pairs.end());
  all.insert(all.end(), st.beta.parts().begin(), st.beta.parts().end());
  st.result = Partition(std::move(all));
  return st;
}

Partition extend_inverse(const Partition& mu) {
  return extend_inverse_stages(mu).result;
}

// ----------------------------------------------------------------- traces

std::string_view trace_rule_name(TraceRule r) {
  switch (r) {
    case TraceRule::pair_interchange: return "pair-interchange";
    case TraceRule::reverse_pair_interchange: return "reverse-pair-interchange";
    case TraceRule::insertion_interchange: return "insertion-interchange";
    case TraceRule::exceptional_merge: return "exceptional-merge";
    case TraceRule::doubling: return "double";
    case TraceRule::prepend: return "prepend";
    case TraceRule::add_two_prefix: return "add-two-prefix";
  }
  return "?";
}

std::optional<BijectionKind> bijection_from_name(std::string_view name) {
  if (name == "glaisher") return BijectionKind::glaisher;
  if (name == "sylvester") return BijectionKind::sylvester;
  if (name == "bressoud") return BijectionKind::bressoud;
  if (name == "new") return BijectionKind::extended;
  return std::nullopt;
}

std::string_view bijection_name(BijectionKind k) {
  switch (k) {
    case BijectionKind::glaisher: return "glaisher";
    case BijectionKind::sylvester: return "sylvester";
    case BijectionKind::bressoud: return "bressoud";
    case BijectionKind::extended: return "new";
  }
  return "?";
}

std::vector<TraceStep> trace(BijectionKind kind, const Partition& input, bool inverse) {
  std::vector<TraceStep> steps;
  switch (kind) {
    case BijectionKind::glaisher:
      throw std::invalid_argument("trace: glaisher has no rewrite derivation");
    case BijectionKind::sylvester:
      require(!inverse, "trace: the sylvester inverse has no pair-rewrite derivation");
      sylvester_pairwise_impl(input, &steps);
      break;
    case BijectionKind::bressoud:
      if (inverse)
        bressoud_inverse_impl(input, &steps);
      else
        bressoud_forward_impl(input, &steps);
      break;
    case BijectionKind::extended: {
      require(!inverse, "trace: the extended inverse has no pair-rewrite derivation");
      require_class(input, PartitionClass::odd, "trace");
      auto [alpha, beta] = split_square_free(input);
      Partition g = bressoud_forward_impl(beta, &steps);
      for (Part p : alpha.parts()) {
        const long long a = (p + 1) / 2;
        const Partition next = pair_insert(g, p);
        if (2 * a - 1 <= static_cast<long long>(g.length()) + 1) {
          // displayed as one bulk step: the pair dissolves into the prefix
          std::vector<Part> mid = {2 * a, 2 * a - 2};
          mid.insert(mid.end(), g.parts().begin(), g.parts().end());
          if (mid.size() % 2) mid.push_back(0);
          emit(&steps, PairedComposition::of(g).entries(), mid, TraceRule::prepend, 0);
          emit(&steps, mid, PairedComposition::of(next).entries(),
               TraceRule::add_two_prefix, 0);
        } else {
          const Partition hopped = detail::pair_insert_iterative(g, p, &steps);
          if (hopped != next)
            throw std::logic_error("trace: iterative insertion disagrees with the closed form");
        }
        g = next;
      }
      break;
    }
  }
  return steps;
}

}  // namespace partbij
