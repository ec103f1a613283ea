// Command-line front end: map, trace, diagram, count, verify.
// Exit codes: 0 success, 1 verification/invariant failure, 2 usage or domain error.

#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "partbij/bijections.hpp"
#include "partbij/diagram.hpp"
#include "partbij/enumerate.hpp"
#include "partbij/notation.hpp"
#include "partbij/partition.hpp"

namespace {

using namespace partbij;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition read_input(const std::string& text) {
  std::string source = text;
  if (source == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    source = buffer.str();
    while (!source.empty() && (source.back() == '\n' || source.back() == '\r'))
      source.pop_back();
  }
  try {
    return parse_notation(source);
  } catch (const NotationError& e) {
    throw UsageError(std::string("bad partition notation at position ") +
                     std::to_string(e.position) + ": " + e.what());
  }
}

PartitionClass domain_of(BijectionKind kind, bool inverse) {
  switch (kind) {
    case BijectionKind::glaisher:
    case BijectionKind::sylvester:
    case BijectionKind::extended:
      return inverse ? PartitionClass::distinct : PartitionClass::odd;
    case BijectionKind::bressoud:
      return inverse ? PartitionClass::splitting : PartitionClass::odd_distinct;
  }
  return PartitionClass::odd;
}

Partition apply_map(BijectionKind kind, bool inverse, const Partition& in) {
  switch (kind) {
    case BijectionKind::glaisher:
      return inverse ? glaisher_inverse(in) : glaisher_forward(in);
    case BijectionKind::sylvester:
      return inverse ? sylvester_inverse(in) : sylvester_forward(in);
    case BijectionKind::bressoud:
      return inverse ? bressoud_inverse(in) : bressoud_forward(in);
    case BijectionKind::extended:
      return inverse ? extend_inverse(in) : extend_forward(in);
  }
  throw UsageError("unknown bijection");
}

json stats_json(const PartitionStats& s) {
  return json{{"length", s.length},
              {"odd_parts", s.odd_parts},
              {"alt_sum", s.alt_sum},
              {"odd_mult_parts", s.odd_mult_parts},
              {"odd_runs", s.odd_runs}};
}

std::string stats_line(const PartitionStats& s) {
  std::ostringstream out;
  out << "length=" << s.length << " odd_parts=" << s.odd_parts
      << " alt_sum=" << s.alt_sum << " odd_mult_parts=" << s.odd_mult_parts
      << " odd_runs=" << s.odd_runs;
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

int run_map(const std::string& name, bool inverse, const std::string& input,
            bool with_stats, bool as_json) {
  const auto kind = bijection_from_name(name);
  if (!kind) throw UsageError("unknown bijection '" + name + "'");
  const Partition in = read_input(input);
  const PartitionClass domain = domain_of(*kind, inverse);
  if (!is_member(in, domain)) {
    std::cerr << "error: input is not in class " << class_tag(domain) << " (bijection "
              << name << (inverse ? " --inverse" : "") << " requires it)\n";
    return kExitUsage;
  }
  const Partition out = apply_map(*kind, inverse, in);
  if (as_json) {
    json j{{"input", in.parts()},
           {"output", out.parts()},
           {"stats_in", stats_json(stats(in))},
           {"stats_out", stats_json(stats(out))}};
    std::cout << j.dump() << '\n';
    return kExitOk;
  }
  std::cout << to_notation(out) << '\n';
  if (with_stats) {
    std::cout << "in:  " << stats_line(stats(in)) << '\n';
    std::cout << "out: " << stats_line(stats(out)) << '\n';
  }
  return kExitOk;
}

int run_trace(const std::string& name, bool inverse, const std::string& input) {
  const auto kind = bijection_from_name(name);
  if (!kind) throw UsageError("unknown bijection '" + name + "'");
  const Partition in = read_input(input);
  if (!is_member(in, domain_of(*kind, inverse))) {
    std::cerr << "error: input is not in class " << class_tag(domain_of(*kind, inverse))
              << " (bijection " << name << (inverse ? " --inverse" : "")
              << " requires it)\n";
    return kExitUsage;
  }
  std::vector<TraceStep> steps;
  try {
    steps = trace(*kind, in, inverse);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool first = true;
  for (const TraceStep& step : steps) {
    if (step.rule == TraceRule::prepend && !first) std::cout << '\n';
    std::cout << step.after.to_string() << '\n';
    first = false;
  }
  return kExitOk;
}

int run_diagram(const std::string& style, const std::string& input) {
  const Partition in = read_input(input);
  Diagram d;
  if (style == "young") {
    d = render_young(in);
  } else if (style == "2modular") {
    d = render_two_modular(in);
  } else if (style == "sylvester") {
    if (!is_member(in, PartitionClass::odd)) {
      std::cerr << "error: input is not in class O (style sylvester requires it)\n";
      return kExitUsage;
    }
    d = render_sylvester_centered(in);
  } else if (style == "shifted" || style == "shifted2") {
    if (!is_member(in, PartitionClass::distinct)) {
      std::cerr << "error: input is not in class D (style " << style << " requires it)\n";
      return kExitUsage;
    }
    d = render_shifted(in, style == "shifted2");
  } else {
    throw UsageError("unknown style '" + style + "'");
  }
  std::cout << d.to_text();
  return kExitOk;
}

int run_count(long long max_n, const std::string& classes_csv, const std::string& format) {
  std::vector<PartitionClass> classes;
  if (classes_csv.empty()) {
    classes.assign(kAllClasses.begin(), kAllClasses.end());
  } else {
    std::stringstream ss(classes_csv);
    std::string tag;
    while (std::getline(ss, tag, ',')) {
      const auto c = class_from_tag(tag);
      if (!c) throw UsageError("unknown class tag '" + tag + "'");
      classes.push_back(*c);
    }
  }
  const std::vector<ClassCountRow> table = counting_table(max_n);
  if (format == "text") {
    std::cout << "n";
    for (PartitionClass c : classes) std::cout << '\t' << class_tag(c);
    std::cout << '\n';
    for (const ClassCountRow& row : table) {
      std::cout << row.n;
      for (PartitionClass c : classes) std::cout << '\t' << row.count(c);
      std::cout << '\n';
    }
  } else if (format == "csv") {
    std::cout << "n";
    for (PartitionClass c : classes) std::cout << ',' << csv_field(std::string(class_tag(c)));
    std::cout << "\r\n";
    for (const ClassCountRow& row : table) {
      std::cout << row.n;
      for (PartitionClass c : classes) std::cout << ',' << row.count(c);
      std::cout << "\r\n";
    }
  } else if (format == "json") {
    json rows = json::array();
    for (const ClassCountRow& row : table) {
      json counts;
      for (PartitionClass c : classes)
        counts[std::string(class_tag(c))] = row.count(c);
      rows.push_back(json{{"n", row.n}, {"counts", counts}});
    }
    std::cout << rows.dump() << '\n';
  } else {
    throw UsageError("unknown format '" + format + "'");
  }
  for (const ClassCountRow& row : table) {
    if (!row.invariants_hold()) {
      std::cerr << "error: class count identities fail at n=" << row.n << '\n';
      return kExitVerification;
    }
  }
  return kExitOk;
}

int run_verify(long long max_n, const std::string& labels_csv) {
  std::vector<std::string> labels;
  if (labels_csv.empty()) {
    labels = verification_labels();
  } else {
    std::stringstream ss(labels_csv);
    std::string label;
    while (std::getline(ss, label, ',')) labels.push_back(label);
  }
  long long total_failures = 0;
  for (const std::string& label : labels) {
    VerificationReport rep;
    try {
      rep = verify(label, max_n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::cout << rep.label << ": checked=" << rep.checked
              << " failures=" << rep.failures_total << '\n';
    if (!rep.failures.empty()) {
      const VerificationFailure& f = rep.failures.front();
      std::cout << "  first counterexample: input="
                << (f.input.empty() ? "()" : to_notation(f.input))
                << " expected: " << f.property << " observed: " << f.observed << '\n';
    }
    total_failures += rep.failures_total;
  }
  return total_failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integer partition bijections: maps, traces, diagrams, counts, verification"};
  app.require_subcommand(1);

  std::string bijection, input, style, classes, format = "text";
  bool inverse = false, with_stats = false, as_json = false;
  long long max_n = 0;

  CLI::App* map_cmd = app.add_subcommand("map", "apply a bijection to a partition");
  map_cmd->add_option("--bijection", bijection, "glaisher|sylvester|bressoud|new")->required();
  map_cmd->add_flag("--inverse", inverse, "apply the inverse map");
  map_cmd->add_option("--input", input, "partition in multiset notation ('-' for stdin)")
      ->required();
  map_cmd->add_flag("--stats", with_stats, "print both statistic bundles");
  map_cmd->add_flag("--json", as_json, "emit a JSON object instead of text");

  CLI::App* trace_cmd = app.add_subcommand("trace", "print the rewrite derivation of a map");
  trace_cmd->add_option("--bijection", bijection, "sylvester|bressoud|new")->required();
  trace_cmd->add_flag("--inverse", inverse, "trace the inverse map (bressoud only)");
  trace_cmd->add_option("--input", input, "partition in multiset notation ('-' for stdin)")
      ->required();

  CLI::App* diagram_cmd = app.add_subcommand("diagram", "print a partition diagram");
  diagram_cmd->add_option("--style", style, "young|2modular|sylvester|shifted|shifted2")
      ->required();
  diagram_cmd->add_option("--input", input, "partition in multiset notation ('-' for stdin)")
      ->required();

  CLI::App* count_cmd = app.add_subcommand("count", "class counting table for n = 0..N");
  count_cmd->add_option("--max-n", max_n, "largest weight")->required();
  count_cmd->add_option("--classes", classes, "comma list of O,D,OD,S,SR,Dle2,ODS");
  count_cmd->add_option("--format", format, "text|csv|json");

  CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustive verification sweeps");
  verify_cmd->add_option("--max-n", max_n, "largest weight")->required();
  verify_cmd->add_option("--bijection", classes, "comma list of check labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*map_cmd) return run_map(bijection, inverse, input, with_stats, as_json);
    if (*trace_cmd) return run_trace(bijection, inverse, input);
    if (*diagram_cmd) return run_diagram(style, input);
    if (*count_cmd) return run_count(max_n, classes, format);
    if (*verify_cmd) return run_verify(max_n, classes);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}
