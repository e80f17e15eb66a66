#include "sqcx/cost.hpp"

#include <nlohmann/json.hpp>

#include "sqcx/library.hpp"

namespace sqcx {

CostReport CostReport::operator+(const CostReport& o) const {
  return {adders + o.adders,         squarers + o.squarers,
          multipliers + o.multipliers, dividers + o.dividers,
          shifts + o.shifts,         const_multipliers + o.const_multipliers};
}

std::string CostReport::str() const {
  return "adders=" + std::to_string(adders) +
         " squarers=" + std::to_string(squarers) +
         " multipliers=" + std::to_string(multipliers) +
         " dividers=" + std::to_string(dividers) +
         " shifts=" + std::to_string(shifts) +
         " const_multipliers=" + std::to_string(const_multipliers);
}

CostReport audit(const Scheme& s) {
  Circuit c = elaborate(s);
  return {c.count(NodeKind::Add),   c.count(NodeKind::Square),
          c.count(NodeKind::Mul),   c.count(NodeKind::Div),
          c.count(NodeKind::Shift), c.count(NodeKind::ConstMul)};
}

const std::vector<TableColumn>& published_unit_counts() {
  static const std::vector<TableColumn> columns = {
      {"1", "squaring", "square_direct", {1, 2, 1, 0}},
      {"1", "multiplication", "mul_direct", {2, 0, 4, 0}},
      {"1", "division", "div_direct", {3, 2, 4, 2}},
      {"2", "squaring", "square_eq6_as_printed", {3, 3, 0, 0}},
      {"2", "multiplication", "mul_eq7", {14, 6, 0, 0}},
      {"2", "division", "div_eq8_as_printed", {11, 8, 0, 2}},
  };
  return columns;
}

bool ColumnComparison::all_match() const {
  return cell_match[0] && cell_match[1] && cell_match[2] && cell_match[3];
}

bool TableComparison::all_match() const {
  for (const auto& col : columns)
    if (!col.all_match()) return false;
  return true;
}

namespace {

std::array<int, 4> core_counts(const CostReport& r) {
  return {r.adders, r.squarers, r.multipliers, r.dividers};
}

constexpr const char* kUnitNames[4] = {"adders", "squarers", "multipliers",
                                       "dividers"};

} // namespace

TableComparison compare_tables() {
  TableComparison tc;
  for (const auto& col : published_unit_counts()) {
    ColumnComparison cc;
    cc.reference = col;
    cc.actual = audit(builtin(col.scheme).scheme);
    auto actual4 = core_counts(cc.actual);
    for (int i = 0; i < 4; ++i) cc.cell_match[i] = actual4[i] == col.expected[i];
    tc.columns.push_back(std::move(cc));
  }
  for (const char* name :
       {"square_logan_corrected", "div_logan_corrected", "div_via_conjugate_mul"})
    tc.informational.emplace_back(name, audit(builtin(name).scheme));
  return tc;
}

std::string format_table_comparison(const TableComparison& tc) {
  std::string out;
  for (const char* table : {"1", "2"}) {
    out += table == std::string("1")
               ? "Table 1 (direct methods)\n"
               : "Table 2 (squarer-based schemes)\n";
    std::vector<const ColumnComparison*> cols;
    for (const auto& c : tc.columns)
      if (c.reference.table == table) cols.push_back(&c);

    out += "  unit         ";
    for (const auto* c : cols) {
      std::string head = c->reference.column + " (" + c->reference.scheme + ")";
      out += head;
      out += std::string(head.size() < 36 ? 36 - head.size() : 1, ' ');
    }
    out += "\n";
    for (int u = 0; u < 4; ++u) {
      std::string row = "  ";
      row += kUnitNames[u];
      row += std::string(13 - std::string(kUnitNames[u]).size(), ' ');
      for (const auto* c : cols) {
        auto actual4 = core_counts(c->actual);
        std::string cell = std::to_string(actual4[u]);
        cell += c->cell_match[u]
                    ? " [ok]"
                    : " [MISMATCH, expected " +
                          std::to_string(c->reference.expected[u]) + "]";
        row += cell;
        row += std::string(cell.size() < 36 ? 36 - cell.size() : 1, ' ');
      }
      out += row + "\n";
    }
    out += "\n";
  }
  out += tc.all_match() ? "all cells match\n" : "MISMATCHES FOUND\n";
  out += "\ncorrected variants (no published column):\n";
  for (const auto& [name, cost] : tc.informational)
    out += "  " + name + ": " + cost.str() + "\n";
  return out;
}

std::string table_comparison_json(const TableComparison& tc) {
  nlohmann::ordered_json j;
  j["all_match"] = tc.all_match();
  nlohmann::ordered_json cols = nlohmann::ordered_json::array();
  for (const auto& c : tc.columns) {
    nlohmann::ordered_json col;
    col["table"] = c.reference.table;
    col["column"] = c.reference.column;
    col["scheme"] = c.reference.scheme;
    auto actual4 = core_counts(c.actual);
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (int u = 0; u < 4; ++u) {
      nlohmann::ordered_json cell;
      cell["unit"] = kUnitNames[u];
      cell["expected"] = c.reference.expected[u];
      cell["actual"] = actual4[u];
      cell["match"] = c.cell_match[u];
      cells.push_back(std::move(cell));
    }
    col["cells"] = std::move(cells);
    cols.push_back(std::move(col));
  }
  j["columns"] = std::move(cols);
  nlohmann::ordered_json info = nlohmann::ordered_json::array();
  for (const auto& [name, cost] : tc.informational) {
    nlohmann::ordered_json entry;
    entry["scheme"] = name;
    entry["adders"] = cost.adders;
    entry["squarers"] = cost.squarers;
    entry["multipliers"] = cost.multipliers;
    entry["dividers"] = cost.dividers;
    entry["shifts"] = cost.shifts;
    entry["const_multipliers"] = cost.const_multipliers;
    info.push_back(std::move(entry));
  }
  j["corrected_variants"] = std::move(info);
  return j.dump(2) + "\n";
}

} // namespace sqcx
