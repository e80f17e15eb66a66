#include <doctest.h>

#include <algorithm>
#include <random>

#include "sqcx/cost.hpp"
#include "sqcx/library.hpp"

using namespace sqcx;

TEST_CASE("published columns reproduce") {
  CHECK(audit(builtin("square_direct").scheme) ==
        CostReport{1, 2, 1, 0, 1, 0}); // one shift: the doubling
  CHECK(audit(builtin("mul_direct").scheme) == CostReport{2, 0, 4, 0, 0, 0});
  CHECK(audit(builtin("div_direct").scheme) == CostReport{3, 2, 4, 2, 0, 0});
  CHECK(audit(builtin("square_eq6_as_printed").scheme) ==
        CostReport{3, 3, 0, 0, 0, 0});
  CHECK(audit(builtin("mul_eq7").scheme) == CostReport{14, 6, 0, 0, 2, 0});
  CHECK(audit(builtin("div_eq8_as_printed").scheme) ==
        CostReport{11, 8, 0, 2, 1, 0});
}

TEST_CASE("gauss multiplication uses five adders and three multipliers") {
  CHECK(audit(builtin("mul_gauss").scheme) == CostReport{5, 0, 3, 0, 0, 0});
}

TEST_CASE("corrected variants cost what the catalog says") {
  CHECK(audit(builtin("square_logan_corrected").scheme) ==
        CostReport{4, 3, 0, 0, 0, 0});
  CHECK(audit(builtin("div_logan_corrected").scheme) ==
        CostReport{13, 8, 0, 2, 1, 0});
  CHECK(audit(builtin("div_via_conjugate_mul").scheme) ==
        CostReport{15, 8, 0, 2, 2, 0});
}

TEST_CASE("scalar identity schemes") {
  CHECK(audit(builtin("scalar_logan").scheme) == CostReport{3, 3, 0, 0, 1, 0});
  CHECK(audit(builtin("scalar_quarter_square").scheme) ==
        CostReport{3, 2, 0, 0, 1, 0});
}

TEST_CASE("scalings by powers of two are shifts, never multipliers") {
  for (const char* name : {"mul_eq7", "square_direct", "div_eq8_as_printed",
                           "div_logan_corrected", "scalar_logan",
                           "scalar_quarter_square"}) {
    CostReport r = audit(builtin(name).scheme);
    CHECK(r.const_multipliers == 0);
  }
  // the only multipliers anywhere come from Binary Mul ops
  CHECK(audit(builtin("mul_eq7").scheme).multipliers == 0);
}

TEST_CASE("audit is additive under composition") {
  auto pairs = {
      std::pair{"mul_eq7", "square_logan_corrected"},
      std::pair{"square_eq6_as_printed", "scalar_logan"},
      std::pair{"mul_direct", "square_direct"},
  };
  for (auto [f, g] : pairs) {
    const Scheme& a = builtin(f).scheme;
    const Scheme& b = builtin(g).scheme;
    CHECK(audit(compose(a, b)) == audit(a) + audit(b));
  }
}

TEST_CASE("audit ignores op order and row order") {
  Scheme s = builtin("div_direct").scheme;
  CostReport before = audit(s);

  auto& bin = std::get<BinaryStage>(s.stages[0]);
  std::reverse(bin.ops.begin(), bin.ops.end());
  // fix downstream references after the permutation
  auto& un = std::get<UnaryStage>(s.stages[1]);
  for (auto& op : un.ops) op.src = 5 - op.src;
  auto& lin = std::get<LinearStage>(s.stages[2]);
  lin.matrix = lin.matrix * mat({{0, 0, 0, 0, 0, 1},
                                 {0, 0, 0, 0, 1, 0},
                                 {0, 0, 0, 1, 0, 0},
                                 {0, 0, 1, 0, 0, 0},
                                 {0, 1, 0, 0, 0, 0},
                                 {1, 0, 0, 0, 0, 0}});
  require_valid(s);
  CHECK(audit(s) == before);

  // row permutation of a linear stage
  Scheme t = builtin("square_logan_corrected").scheme;
  auto& first = std::get<LinearStage>(t.stages[0]);
  RMatrix perm = mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  first.matrix = perm * first.matrix;
  auto& squares = std::get<UnaryStage>(t.stages[1]);
  squares.ops = {UnaryOp::square(1), UnaryOp::square(2), UnaryOp::square(0)};
  require_valid(t);
  CHECK(audit(t) == audit(builtin("square_logan_corrected").scheme));
}

TEST_CASE("table comparison matches every cell and lists corrected variants") {
  TableComparison tc = compare_tables();
  CHECK(tc.all_match());
  REQUIRE(tc.columns.size() == 6);
  int cells = 0;
  for (const auto& col : tc.columns)
    for (bool m : col.cell_match) {
      CHECK(m);
      ++cells;
    }
  CHECK(cells == 24);

  REQUIRE(tc.informational.size() == 3);
  CHECK(tc.informational[0].first == "square_logan_corrected");
  CHECK(tc.informational[0].second.adders == 4);
  CHECK(tc.informational[0].second.squarers == 3);
  CHECK(tc.informational[1].first == "div_logan_corrected");
  CHECK(tc.informational[1].second.adders == 13);
  CHECK(tc.informational[2].first == "div_via_conjugate_mul");
  CHECK(tc.informational[2].second.adders == 15);
}

TEST_CASE("formatted output carries the verdict") {
  TableComparison tc = compare_tables();
  std::string text = format_table_comparison(tc);
  CHECK(text.find("all cells match") != std::string::npos);
  CHECK(text.find("MISMATCH") == std::string::npos);
  std::string json = table_comparison_json(tc);
  CHECK(json.find("\"all_match\": true") != std::string::npos);
}

TEST_CASE("a doctored scheme shows up as a mismatch against its column") {
  // remove one squarer from the printed squaring scheme and re-audit
  Scheme s = builtin("square_eq6_as_printed").scheme;
  auto& squares = std::get<UnaryStage>(s.stages[1]);
  squares.ops[2] = UnaryOp::copy(2);
  CostReport r = audit(s);
  CHECK(r.squarers == 2);
  const auto& col = published_unit_counts()[3]; // table 2, squaring
  CHECK(col.scheme == "square_eq6_as_printed");
  CHECK(r.squarers != col.expected[1]);
}
