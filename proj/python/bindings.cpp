#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "partbij/bijections.hpp"
#include "partbij/diagram.hpp"
#include "partbij/enumerate.hpp"
#include "partbij/notation.hpp"
#include "partbij/partition.hpp"

namespace py = pybind11;
using namespace partbij;

namespace {

using PartList = std::vector<Part>;

Partition as_partition(const PartList& parts) { return Partition(parts); }

py::dict stats_dict(const PartitionStats& s) {
  py::dict d;
  d["length"] = s.length;
  d["odd_parts"] = s.odd_parts;
  d["alt_sum"] = s.alt_sum;
  d["odd_mult_parts"] = s.odd_mult_parts;
  d["odd_runs"] = s.odd_runs;
  return d;
}

PartitionClass tag_to_class(const std::string& tag) {
  const auto c = class_from_tag(tag);
  if (!c) throw std::invalid_argument("unknown class tag '" + tag + "'");
  return *c;
}

py::list counting_rows(long long max_n) {
  py::list rows;
  for (const ClassCountRow& row : counting_table(max_n)) {
    py::dict counts;
    for (PartitionClass c : kAllClasses)
      counts[py::str(std::string(class_tag(c)))] = row.count(c);
    py::dict d;
    d["n"] = row.n;
    d["counts"] = counts;
    rows.append(d);
  }
  return rows;
}

py::dict report_dict(const VerificationReport& rep) {
  py::list failures;
  for (const VerificationFailure& f : rep.failures) {
    py::dict fd;
    fd["input"] = f.input.parts();
    fd["property"] = f.property;
    fd["observed"] = f.observed;
    failures.append(fd);
  }
  py::dict d;
  d["label"] = rep.label;
  d["max_n"] = rep.max_n;
  d["checked"] = rep.checked;
  d["failures"] = failures;
  d["failures_total"] = rep.failures_total;
  return d;
}

py::list trace_list(const std::string& name, const PartList& parts, bool inverse) {
  const auto kind = bijection_from_name(name);
  if (!kind) throw std::invalid_argument("unknown bijection '" + name + "'");
  py::list out;
  for (const TraceStep& step : trace(*kind, as_partition(parts), inverse)) {
    py::dict d;
    d["rule"] = std::string(trace_rule_name(step.rule));
    d["position"] = step.position;
    d["before"] = step.before.entries();
    d["after"] = step.after.entries();
    out.append(d);
  }
  return out;
}

std::string render(const PartList& parts, const std::string& style) {
  const Partition p = as_partition(parts);
  if (style == "young") return render_young(p).to_text();
  if (style == "2modular") return render_two_modular(p).to_text();
  if (style == "sylvester") return render_sylvester_centered(p).to_text();
  if (style == "shifted") return render_shifted(p, false).to_text();
  if (style == "shifted2") return render_shifted(p, true).to_text();
  throw std::invalid_argument("unknown style '" + style + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bijections between odd and distinct integer partitions";

  m.def("conjugate", [](const PartList& p) { return conjugate(as_partition(p)).parts(); },
        py::arg("parts"));
  m.def("stats", [](const PartList& p) { return stats_dict(stats(as_partition(p))); },
        py::arg("parts"),
        "length, odd_parts, alt_sum, odd_mult_parts and odd_runs of a partition");
  m.def("runs",
        [](const PartList& p) {
          py::list out;
          for (const Run& r : runs(as_partition(p)))
            out.append(py::make_tuple(r.largest, r.count, r.is_odd_run()));
          return out;
        },
        py::arg("parts"), "maximal chains of consecutive odd values of odd multiplicity");
  m.def("multiplicity",
        [](const PartList& p, Part value) { return multiplicity(as_partition(p), value); },
        py::arg("parts"), py::arg("value"));
  m.def("concat",
        [](const PartList& a, const PartList& b) {
          return concat(as_partition(a), as_partition(b)).parts();
        },
        py::arg("a"), py::arg("b"));
  m.def("split_square_free",
        [](const PartList& p) {
          const auto [alpha, beta] = split_square_free(as_partition(p));
          return py::make_tuple(alpha.parts(), beta.parts());
        },
        py::arg("parts"), "unique (alpha, beta) with alpha^2 + beta = parts, beta distinct");
  m.def("double_parts",
        [](const PartList& p) { return double_parts(as_partition(p)).entries(); },
        py::arg("parts"));
  m.def("is_member",
        [](const PartList& p, const std::string& tag) {
          return is_member(as_partition(p), tag_to_class(tag));
        },
        py::arg("parts"), py::arg("class_tag"),
        "membership in one of O, D, OD, S, SR, Dle2, ODS");

  m.def("glaisher_forward",
        [](const PartList& p) { return glaisher_forward(as_partition(p)).parts(); });
  m.def("glaisher_inverse",
        [](const PartList& p) { return glaisher_inverse(as_partition(p)).parts(); });
  m.def("sylvester_forward",
        [](const PartList& p) { return sylvester_forward(as_partition(p)).parts(); });
  m.def("sylvester_pairwise",
        [](const PartList& p) { return sylvester_pairwise(as_partition(p)).parts(); });
  m.def("sylvester_inverse",
        [](const PartList& p) { return sylvester_inverse(as_partition(p)).parts(); });
  m.def("bressoud_pairing",
        [](const PartList& p) { return bressoud_pairing(as_partition(p)).entries(); });
  m.def("bressoud_forward",
        [](const PartList& p) { return bressoud_forward(as_partition(p)).parts(); });
  m.def("bressoud_forward_original",
        [](const PartList& p) { return bressoud_forward_original(as_partition(p)).parts(); });
  m.def("bressoud_inverse",
        [](const PartList& p) { return bressoud_inverse(as_partition(p)).parts(); });
  m.def("pair_insert",
        [](const PartList& gamma, Part part) {
          return pair_insert(as_partition(gamma), part).parts();
        },
        py::arg("gamma"), py::arg("part"));
  m.def("extend_forward",
        [](const PartList& p) { return extend_forward(as_partition(p)).parts(); });
  m.def("extend_inverse",
        [](const PartList& p) { return extend_inverse(as_partition(p)).parts(); });

  m.def("partitions_of",
        [](long long n) {
          py::list out;
          for_each_partition(n, [&](std::span<const Part> parts) {
            out.append(PartList(parts.begin(), parts.end()));
          });
          return out;
        },
        py::arg("n"), "all partitions of n in reverse-lexicographic order");
  m.def("count_partitions", &count_partitions, py::arg("n"));
  m.def("pentagonal_counts", &pentagonal_counts, py::arg("max_n"));
  m.def("class_members",
        [](long long n, const std::string& tag) {
          py::list out;
          for (const Partition& p : class_members(n, tag_to_class(tag)))
            out.append(p.parts());
          return out;
        },
        py::arg("n"), py::arg("class_tag"));
  m.def("counting_table", &counting_rows, py::arg("max_n"));
  m.def("verification_labels", [] { return verification_labels(); });
  m.def("verify",
        [](const std::string& label, long long max_n) {
          return report_dict(verify(label, max_n));
        },
        py::arg("label"), py::arg("max_n"));

  m.def("parse", [](const std::string& text) { return parse_notation(text).parts(); },
        py::arg("text"), "parse multiset notation such as '13^4,11^2,9'");
  m.def("to_notation", [](const PartList& p) { return to_notation(as_partition(p)); },
        py::arg("parts"));
  m.def("render", &render, py::arg("parts"), py::arg("style"),
        "text diagram: young, 2modular, sylvester, shifted or shifted2");
  m.def("trace", &trace_list, py::arg("bijection"), py::arg("parts"),
        py::arg("inverse") = false);

  m.attr("__version__") = "0.1.0";
}
