#include "sqcx/evaluate.hpp"

#include <string>

namespace sqcx {

namespace mp = boost::multiprecision;

namespace {

void check_input_arity(const Scheme& s, std::size_t n) {
  if (n != s.input_labels.size())
    throw DimensionError("scheme \"" + s.name + "\" takes " +
                         std::to_string(s.input_labels.size()) +
                         " inputs, got " + std::to_string(n));
}

} // namespace

std::vector<Rational> eval_exact(const Scheme& s,
                                 std::span<const Rational> inputs) {
  require_valid(s);
  check_input_arity(s, inputs.size());

  std::vector<Rational> wires(inputs.begin(), inputs.end());
  for (std::size_t i = 0; i < s.stages.size(); ++i) {
    const int stage = static_cast<int>(i);
    std::vector<Rational> next;

    if (const auto* lin = std::get_if<LinearStage>(&s.stages[i])) {
      RVector in(static_cast<Eigen::Index>(wires.size()));
      for (std::size_t k = 0; k < wires.size(); ++k)
        in(static_cast<Eigen::Index>(k)) = wires[k];
      RVector out = lin->matrix * in;
      next.assign(out.data(), out.data() + out.size());
    } else if (const auto* un = std::get_if<UnaryStage>(&s.stages[i])) {
      for (const auto& op : un->ops) {
        switch (op.kind) {
          case UnaryOp::Kind::Copy:
            next.push_back(wires[op.src]);
            break;
          case UnaryOp::Kind::Square:
            next.push_back(wires[op.src] * wires[op.src]);
            break;
          case UnaryOp::Kind::Scale:
            next.push_back(wires[op.src] * op.factor);
            break;
        }
      }
    } else {
      const auto& bin = std::get<BinaryStage>(s.stages[i]);
      for (std::size_t k = 0; k < bin.ops.size(); ++k) {
        const auto& op = bin.ops[k];
        switch (op.kind) {
          case BinaryOp::Kind::Copy:
            next.push_back(wires[op.a]);
            break;
          case BinaryOp::Kind::Mul:
            next.push_back(wires[op.a] * wires[op.b]);
            break;
          case BinaryOp::Kind::Div:
            if (wires[op.b].is_zero())
              throw EvalError(EvalError::Kind::ZeroDivide, stage,
                              static_cast<int>(k),
                              "zero divisor at stage " + std::to_string(stage) +
                                  ", wire " + std::to_string(k));
            next.push_back(wires[op.a] / wires[op.b]);
            break;
        }
      }
    }
    wires = std::move(next);
  }
  return wires;
}

std::vector<RationalFn> eval_symbolic(const Scheme& s) {
  require_valid(s);
  const std::size_t nvars = s.input_labels.size();

  std::vector<RationalFn> wires;
  for (std::size_t k = 0; k < nvars; ++k)
    wires.emplace_back(Polynomial::variable(nvars, k));

  for (std::size_t i = 0; i < s.stages.size(); ++i) {
    const int stage = static_cast<int>(i);
    std::vector<RationalFn> next;

    if (const auto* lin = std::get_if<LinearStage>(&s.stages[i])) {
      const RMatrix& m = lin->matrix;
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        RationalFn acc{Polynomial(nvars)};
        for (Eigen::Index col = 0; col < m.cols(); ++col)
          if (!m(r, col).is_zero())
            acc = acc + wires[col].scaled(m(r, col));
        next.push_back(std::move(acc));
      }
    } else if (const auto* un = std::get_if<UnaryStage>(&s.stages[i])) {
      for (const auto& op : un->ops) {
        switch (op.kind) {
          case UnaryOp::Kind::Copy:
            next.push_back(wires[op.src]);
            break;
          case UnaryOp::Kind::Square:
            next.push_back(wires[op.src].squared());
            break;
          case UnaryOp::Kind::Scale:
            next.push_back(wires[op.src].scaled(op.factor));
            break;
        }
      }
    } else {
      const auto& bin = std::get<BinaryStage>(s.stages[i]);
      for (std::size_t k = 0; k < bin.ops.size(); ++k) {
        const auto& op = bin.ops[k];
        switch (op.kind) {
          case BinaryOp::Kind::Copy:
            next.push_back(wires[op.a]);
            break;
          case BinaryOp::Kind::Mul:
            next.push_back(wires[op.a] * wires[op.b]);
            break;
          case BinaryOp::Kind::Div:
            if (wires[op.b].num().is_zero())
              throw EvalError(EvalError::Kind::ZeroDivide, stage,
                              static_cast<int>(k),
                              "identically zero divisor at stage " +
                                  std::to_string(stage) + ", wire " +
                                  std::to_string(k));
            next.push_back(wires[op.a] / wires[op.b]);
            break;
        }
      }
    }
    wires = std::move(next);
  }
  return wires;
}

void WidthReport::record(int stage, int wire, int bits) {
  auto key = std::make_pair(stage, wire);
  auto it = max_bits.find(key);
  if (it == max_bits.end())
    max_bits.emplace(key, bits);
  else if (bits > it->second)
    it->second = bits;
}

void WidthReport::merge(const WidthReport& o) {
  for (const auto& [key, bits] : o.max_bits) record(key.first, key.second, bits);
}

namespace {

int magnitude_bits(const Int& v) {
  if (v == 0) return 0;
  Int a = v < 0 ? Int(-v) : v;
  return static_cast<int>(mp::msb(a)) + 1;
}

// Integer division truncating toward zero (cpp_int's native behavior).
Int div_trunc(const Int& a, const Int& b) { return a / b; }

} // namespace

FixedResult eval_fixed(const Scheme& s, const FixedPointConfig& cfg,
                       std::span<const Rational> inputs) {
  require_valid(s);
  check_input_arity(s, inputs.size());
  if (cfg.word_bits < 2 || cfg.frac_bits < 0 || cfg.frac_bits >= cfg.word_bits)
    throw Error("fixed-point config requires W >= 2 and 0 <= f < W");

  const Int scale = Int(1) << cfg.frac_bits;
  const Int limit = Int(1) << (cfg.word_bits - 1);

  FixedResult result;

  auto check = [&](Int v, int stage, int wire) -> Int {
    if (v >= limit || v <= -limit)
      throw EvalError(EvalError::Kind::Overflow, stage, wire,
                      "overflow at stage " + std::to_string(stage) + ", wire " +
                          std::to_string(wire) + ": |" + v.str() + "| >= 2^" +
                          std::to_string(cfg.word_bits - 1));
    result.widths.record(stage, wire, magnitude_bits(v));
    return v;
  };

  // Exact rational -> scaled integer, truncating toward zero.
  auto apply_factor = [&](const Int& v, const Rational& c) {
    return div_trunc(v * c.num(), c.den());
  };

  std::vector<Int> wires;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const Rational& x = inputs[k];
    Int scaled_num = x.num() * scale;
    if (scaled_num % x.den() != 0)
      throw EvalError(EvalError::Kind::UnrepresentableInput, -1,
                      static_cast<int>(k),
                      "input " + std::to_string(k) + " = " + x.str() +
                          " is not representable with " +
                          std::to_string(cfg.frac_bits) + " fraction bits");
    Int v = scaled_num / x.den();
    if (v >= limit || v <= -limit)
      throw EvalError(EvalError::Kind::UnrepresentableInput, -1,
                      static_cast<int>(k),
                      "input " + std::to_string(k) + " = " + x.str() +
                          " exceeds the " + std::to_string(cfg.word_bits) +
                          "-bit word");
    result.widths.record(-1, static_cast<int>(k), magnitude_bits(v));
    wires.push_back(std::move(v));
  }

  for (std::size_t i = 0; i < s.stages.size(); ++i) {
    const int stage = static_cast<int>(i);
    std::vector<Int> next;

    if (const auto* lin = std::get_if<LinearStage>(&s.stages[i])) {
      const RMatrix& m = lin->matrix;
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Int acc = 0;
        for (Eigen::Index col = 0; col < m.cols(); ++col) {
          const Rational& c = m(r, col);
          if (c.is_zero()) continue;
          acc += apply_factor(wires[col], c);
        }
        next.push_back(check(std::move(acc), stage, static_cast<int>(r)));
      }
    } else if (const auto* un = std::get_if<UnaryStage>(&s.stages[i])) {
      for (std::size_t k = 0; k < un->ops.size(); ++k) {
        const auto& op = un->ops[k];
        Int v;
        switch (op.kind) {
          case UnaryOp::Kind::Copy:
            v = wires[op.src];
            break;
          case UnaryOp::Kind::Square:
            v = div_trunc(wires[op.src] * wires[op.src], scale);
            break;
          case UnaryOp::Kind::Scale:
            v = apply_factor(wires[op.src], op.factor);
            break;
        }
        next.push_back(check(std::move(v), stage, static_cast<int>(k)));
      }
    } else {
      const auto& bin = std::get<BinaryStage>(s.stages[i]);
      for (std::size_t k = 0; k < bin.ops.size(); ++k) {
        const auto& op = bin.ops[k];
        Int v;
        switch (op.kind) {
          case BinaryOp::Kind::Copy:
            v = wires[op.a];
            break;
          case BinaryOp::Kind::Mul:
            v = div_trunc(wires[op.a] * wires[op.b], scale);
            break;
          case BinaryOp::Kind::Div:
            if (wires[op.b] == 0)
              throw EvalError(EvalError::Kind::ZeroDivide, stage,
                              static_cast<int>(k),
                              "zero divisor at stage " + std::to_string(stage) +
                                  ", wire " + std::to_string(k));
            v = div_trunc(wires[op.a] * scale, wires[op.b]);
            break;
        }
        next.push_back(check(std::move(v), stage, static_cast<int>(k)));
      }
    }
    wires = std::move(next);
  }

  for (const Int& v : wires) result.outputs.emplace_back(v, scale);
  return result;
}

} // namespace sqcx
