#pragma once

#include <string>
#include <vector>

#include "sqcx/scheme.hpp"

namespace sqcx {

/// Primitive hardware units a scheme elaborates into. Add covers both
/// addition and subtraction (the sign lives on the edge); Neg and Zero
/// are cost-free bookkeeping nodes.
enum class NodeKind {
  Input,
  Output,
  Add,
  Square,
  Mul,
  Div,
  Shift,    // multiply by +/-2^k
  ConstMul, // multiply by a general constant
  Neg,      // multiply by -1
  Zero,     // all-zero linear row
};

struct CircuitNode {
  NodeKind kind;
  std::string label;
};

struct CircuitEdge {
  int from = 0;
  int to = 0;
  bool negate = false;      // operand enters an adder subtracted
  bool denominator = false; // operand is the divisor of a Div node
};

/// Flat unit-level dataflow graph. Node ids are assigned in a fixed
/// traversal order, so two elaborations of the same scheme are identical.
struct Circuit {
  std::vector<CircuitNode> nodes;
  std::vector<CircuitEdge> edges;

  int count(NodeKind k) const;
};

/// Expands every stage into two-input adders, squarers, multipliers,
/// dividers, shifts and constant multipliers. A linear row with k
/// nonzero entries becomes a left-to-right chain of k-1 adders. This is
/// the single expansion both the DOT export and the cost audit use.
/// Requires a valid scheme.
Circuit elaborate(const Scheme& s);

/// Graphviz rendering of elaborate(s), left-to-right. Deterministic.
std::string export_dot(const Scheme& s);

} // namespace sqcx
