#include "sqcx/circuit.hpp"

#include <utility>

namespace sqcx {

int Circuit::count(NodeKind k) const {
  int n = 0;
  for (const auto& node : nodes)
    if (node.kind == k) ++n;
  return n;
}

namespace {

class Builder {
public:
  explicit Builder(Circuit& c) : c_(c) {}

  int node(NodeKind kind, std::string label) {
    c_.nodes.push_back({kind, std::move(label)});
    return static_cast<int>(c_.nodes.size()) - 1;
  }

  void edge(int from, int to, bool negate = false, bool denominator = false) {
    c_.edges.push_back({from, to, negate, denominator});
  }

  /// Wire carrying c * (value of `src`). For |c| = 1 the sign is
  /// returned to the caller to fold into an adder edge; otherwise a
  /// shift / constant-multiplier node absorbs the magnitude.
  std::pair<int, bool> scaled_operand(int src, const Rational& c) {
    ConstClass cls = classify_constant(c);
    if (cls.kind == ConstClass::Kind::PlusMinusOne) return {src, cls.negative};
    NodeKind kind = cls.kind == ConstClass::Kind::PowerOfTwo
                        ? NodeKind::Shift
                        : NodeKind::ConstMul;
    int id = node(kind, "*" + abs(c).str());
    edge(src, id);
    return {id, cls.negative};
  }

  /// Wire carrying c * (value of `src`) with the sign kept on the node
  /// itself, for pass-through rows and unary scalings.
  int scale_node(int src, const Rational& c) {
    ConstClass cls = classify_constant(c);
    switch (cls.kind) {
      case ConstClass::Kind::Zero:
        return node(NodeKind::Zero, "0");
      case ConstClass::Kind::PlusMinusOne: {
        if (!cls.negative) return src;
        int id = node(NodeKind::Neg, "*-1");
        edge(src, id);
        return id;
      }
      case ConstClass::Kind::PowerOfTwo:
      case ConstClass::Kind::General: {
        NodeKind kind = cls.kind == ConstClass::Kind::PowerOfTwo
                            ? NodeKind::Shift
                            : NodeKind::ConstMul;
        int id = node(kind, "*" + c.str());
        edge(src, id);
        return id;
      }
    }
    return src;
  }

  /// Sequential chain of two-input adders over signed operands.
  int adder_chain(const std::vector<std::pair<int, bool>>& operands) {
    int acc = node(NodeKind::Add, "+");
    edge(operands[0].first, acc, operands[0].second);
    edge(operands[1].first, acc, operands[1].second);
    for (std::size_t k = 2; k < operands.size(); ++k) {
      int next = node(NodeKind::Add, "+");
      edge(acc, next);
      edge(operands[k].first, next, operands[k].second);
      acc = next;
    }
    return acc;
  }

private:
  Circuit& c_;
};

} // namespace

Circuit elaborate(const Scheme& s) {
  require_valid(s);

  Circuit c;
  Builder b(c);

  std::vector<int> wires;
  for (const auto& label : s.input_labels)
    wires.push_back(b.node(NodeKind::Input, label));

  for (const auto& stage : s.stages) {
    std::vector<int> next;

    if (const auto* lin = std::get_if<LinearStage>(&stage)) {
      const RMatrix& m = lin->matrix;
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        std::vector<Eigen::Index> cols;
        for (Eigen::Index col = 0; col < m.cols(); ++col)
          if (!m(r, col).is_zero()) cols.push_back(col);

        if (cols.empty()) {
          next.push_back(b.node(NodeKind::Zero, "0"));
        } else if (cols.size() == 1) {
          // pass-through row: the whole signed constant on one node
          next.push_back(b.scale_node(wires[cols[0]], m(r, cols[0])));
        } else {
          std::vector<std::pair<int, bool>> operands;
          for (Eigen::Index col : cols)
            operands.push_back(b.scaled_operand(wires[col], m(r, col)));
          next.push_back(b.adder_chain(operands));
        }
      }
    } else if (const auto* un = std::get_if<UnaryStage>(&stage)) {
      for (const auto& op : un->ops) {
        switch (op.kind) {
          case UnaryOp::Kind::Copy:
            next.push_back(wires[op.src]);
            break;
          case UnaryOp::Kind::Square: {
            int id = b.node(NodeKind::Square, "^2");
            b.edge(wires[op.src], id);
            next.push_back(id);
            break;
          }
          case UnaryOp::Kind::Scale:
            next.push_back(b.scale_node(wires[op.src], op.factor));
            break;
        }
      }
    } else {
      const auto& bin = std::get<BinaryStage>(stage);
      for (const auto& op : bin.ops) {
        switch (op.kind) {
          case BinaryOp::Kind::Copy:
            next.push_back(wires[op.a]);
            break;
          case BinaryOp::Kind::Mul: {
            int id = b.node(NodeKind::Mul, "*");
            b.edge(wires[op.a], id);
            b.edge(wires[op.b], id);
            next.push_back(id);
            break;
          }
          case BinaryOp::Kind::Div: {
            int id = b.node(NodeKind::Div, "/");
            b.edge(wires[op.a], id);
            b.edge(wires[op.b], id, false, true);
            next.push_back(id);
            break;
          }
        }
      }
    }
    wires = std::move(next);
  }

  for (std::size_t k = 0; k < s.output_labels.size(); ++k) {
    int id = b.node(NodeKind::Output, s.output_labels[k]);
    b.edge(wires[k], id);
  }
  return c;
}

namespace {

const char* node_shape(NodeKind k) {
  switch (k) {
    case NodeKind::Input:
    case NodeKind::Output:
    case NodeKind::Zero:
      return "plaintext";
    case NodeKind::Add:
    case NodeKind::Shift:
    case NodeKind::ConstMul:
    case NodeKind::Neg:
      return "circle";
    case NodeKind::Square:
    case NodeKind::Mul:
    case NodeKind::Div:
      return "box";
  }
  return "ellipse";
}

std::string escape_label(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

} // namespace

std::string export_dot(const Scheme& s) {
  Circuit c = elaborate(s);
  std::string out;
  out += "digraph \"" + escape_label(s.name) + "\" {\n";
  out += "  rankdir=LR;\n";
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const auto& n = c.nodes[i];
    out += "  n" + std::to_string(i) + " [shape=" + node_shape(n.kind) +
           ", label=\"" + escape_label(n.label) + "\"];\n";
  }
  for (const auto& e : c.edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to);
    if (e.negate)
      out += " [label=\"-\"]";
    else if (e.denominator)
      out += " [label=\"d\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

} // namespace sqcx
