#include "partbij/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace partbij {

namespace {

void require_class(const Partition& p, PartitionClass c, const char* who) {
  if (!is_member(p, c))
    throw std::invalid_argument(std::string(who) + ": input is not in class " +
                                std::string(class_tag(c)));
}

std::string modular_cells(Part part) {
  std::string cells(static_cast<std::size_t>((part + 1) / 2), '2');
  if (part % 2 != 0) cells.back() = '1';
  return cells;
}

}  // namespace

long long Diagram::cell_count() const {
  long long n = 0;
  for (const DiagramRow& r : rows) n += static_cast<long long>(r.cells.size());
  return n;
}

long long Diagram::label_sum() const {
  long long n = 0;
  for (const DiagramRow& r : rows)
    for (char c : r.cells)
      if (c == '1' || c == '2') n += c - '0';
  return n;
}

std::vector<long long> Diagram::column_lengths() const {
  long long width = 0;
  for (const DiagramRow& r : rows)
    width = std::max(width, r.offset + static_cast<long long>(r.cells.size()));
  std::vector<long long> cols(static_cast<std::size_t>(width), 0);
  for (const DiagramRow& r : rows)
    for (std::size_t i = 0; i < r.cells.size(); ++i)
      ++cols[static_cast<std::size_t>(r.offset) + i];
  return cols;
}

std::string Diagram::to_text() const {
  std::string out;
  for (const DiagramRow& r : rows) {
    out.append(static_cast<std::size_t>(r.offset), ' ');
    out += r.cells;
    out += '\n';
  }
  return out;
}

Diagram render_young(const Partition& p) {
  Diagram d;
  for (Part q : p.parts())
    d.rows.push_back({0, std::string(static_cast<std::size_t>(q), '#')});
  return d;
}

Diagram render_two_modular(const Partition& p) {
  Diagram d;
  for (Part q : p.parts()) d.rows.push_back({0, modular_cells(q)});
  return d;
}

Diagram render_sylvester_centered(const Partition& lam) {
  require_class(lam, PartitionClass::odd, "render_sylvester_centered");
  Diagram d;
  const Part mid = (lam.largest() + 1) / 2;
  for (Part q : lam.parts())
    d.rows.push_back({mid - (q + 1) / 2, std::string(static_cast<std::size_t>(q), '#')});
  return d;
}

Diagram render_shifted(const Partition& mu, bool modular) {
  require_class(mu, PartitionClass::distinct, "render_shifted");
  Diagram d;
  long long left = 0, right = -1, min_left = 0;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    const Part q = mu.parts()[i];
    const long long w = modular ? (q + 1) / 2 : q;
    if (i == 0)
      left = 0;
    else if (i % 2 == 1)
      left = right - w;  // end one column left of the row above
    // odd rows (3rd, 5th, ...) keep the previous left
    right = left + w - 1;
    min_left = std::min(min_left, left);
    d.rows.push_back({left, modular ? modular_cells(q)
                                    : std::string(static_cast<std::size_t>(w), '#')});
  }
  if (min_left < 0)
    for (DiagramRow& r : d.rows) r.offset -= min_left;
  return d;
}

}  // namespace partbij
