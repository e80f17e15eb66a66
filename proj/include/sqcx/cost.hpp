#pragma once

#include <array>
#include <string>
#include <vector>

#include "sqcx/circuit.hpp"
#include "sqcx/scheme.hpp"

namespace sqcx {

/// Hardware unit counts implied by a scheme. Shifts and constant
/// multipliers are tracked informationally; copies and negations are
/// free and not reported.
struct CostReport {
  int adders = 0;
  int squarers = 0;
  int multipliers = 0;
  int dividers = 0;
  int shifts = 0;
  int const_multipliers = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
  CostReport operator+(const CostReport& o) const;

  std::string str() const;
};

/// Counts units by elaborating the scheme: a linear row with k nonzero
/// entries costs k-1 two-input adders (subtraction included), each
/// +/-2^j entry one shift, other non-unit entries one constant
/// multiplier; Square/Mul/Div cost one unit each. Requires a valid
/// scheme.
CostReport audit(const Scheme& s);

/// Published per-column unit counts (adders, squarers, multipliers,
/// dividers) for the direct methods and the squarer-based schemes.
struct TableColumn {
  std::string table;  // "1" (direct) or "2" (squarer-based)
  std::string column; // operation name as the tables label it
  std::string scheme; // catalog scheme audited against this column
  std::array<int, 4> expected{};
};

const std::vector<TableColumn>& published_unit_counts();

struct ColumnComparison {
  TableColumn reference;
  CostReport actual;
  std::array<bool, 4> cell_match{};

  bool all_match() const;
};

struct TableComparison {
  std::vector<ColumnComparison> columns;
  /// Audited costs of the corrected variants, which have no published
  /// column to compare against.
  std::vector<std::pair<std::string, CostReport>> informational;

  bool all_match() const;
};

/// Audits the three direct baselines and the three as-printed schemes
/// against the published tables, cell by cell, and reports the corrected
/// variants' costs alongside.
TableComparison compare_tables();

std::string format_table_comparison(const TableComparison& tc);
std::string table_comparison_json(const TableComparison& tc);

} // namespace sqcx
