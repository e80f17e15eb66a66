#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqcx/cost.hpp"
#include "sqcx/scheme.hpp"
#include "sqcx/verify.hpp"

namespace sqcx {

/// One catalog entry: the scheme, the reference it claims to compute,
/// whether that claim actually holds, and the published unit counts
/// when the scheme has a table column.
struct BuiltinEntry {
  Scheme scheme;
  std::string description;
  ReferenceKind reference{};
  bool expect_pass = true;
  /// For expected failures: what the nonzero residual is.
  std::string expected_residual_note;
  /// Published (adders, squarers, multipliers, dividers); nullopt for
  /// schemes without a table column.
  std::optional<std::array<int, 4>> published_cost;
};

/// Catalog order: direct baselines, as-printed schemes, corrected
/// variants, scalar identities.
const std::vector<std::string>& list_builtins();

/// Throws UnknownSchemeError for names not in the catalog.
const BuiltinEntry& builtin(const std::string& name);

bool is_builtin(const std::string& name);

} // namespace sqcx
