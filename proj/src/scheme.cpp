#include "sqcx/scheme.hpp"

#include <unordered_set>

namespace sqcx {

bool operator==(const LinearStage& a, const LinearStage& b) {
  return mat_eq(a.matrix, b.matrix);
}

bool stage_eq(const Stage& a, const Stage& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        return lhs == std::get<T>(b);
      },
      a);
}

int stage_output_width(const Stage& s) {
  return std::visit(
      [](const auto& st) -> int {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, LinearStage>)
          return static_cast<int>(st.matrix.rows());
        else
          return static_cast<int>(st.ops.size());
      },
      s);
}

bool operator==(const Scheme& a, const Scheme& b) {
  if (a.name != b.name || a.input_labels != b.input_labels ||
      a.output_labels != b.output_labels || a.known_erratum != b.known_erratum ||
      a.stages.size() != b.stages.size())
    return false;
  for (std::size_t i = 0; i < a.stages.size(); ++i)
    if (!stage_eq(a.stages[i], b.stages[i])) return false;
  return true;
}

std::string ValidationIssue::message() const {
  switch (kind) {
    case Kind::DuplicateInput:
      return "duplicate input label";
    case Kind::EmptyStage:
      return "stage " + std::to_string(stage) + " has no outputs";
    case Kind::WidthMismatch:
      return "stage " + std::to_string(stage) + " expects " +
             std::to_string(expected) + " inputs, got " + std::to_string(actual);
    case Kind::WireOutOfRange:
      return "stage " + std::to_string(stage) + " references wire " +
             std::to_string(wire) + " but only " + std::to_string(actual) +
             " inputs exist";
    case Kind::OutputMismatch:
      return "scheme ends with " + std::to_string(actual) +
             " wires but declares " + std::to_string(expected) +
             " output labels";
  }
  return "unknown issue";
}

ValidationReport validate(const Scheme& s) {
  auto fail = [](ValidationIssue issue) {
    return ValidationReport{std::move(issue)};
  };

  std::unordered_set<std::string> seen;
  for (const auto& label : s.input_labels)
    if (!seen.insert(label).second)
      return fail({ValidationIssue::Kind::DuplicateInput, -1, 0, 0, -1});

  int width = static_cast<int>(s.input_labels.size());
  for (std::size_t i = 0; i < s.stages.size(); ++i) {
    const int idx = static_cast<int>(i);
    const Stage& st = s.stages[i];

    if (stage_output_width(st) < 1)
      return fail({ValidationIssue::Kind::EmptyStage, idx, 0, 0, -1});

    if (const auto* lin = std::get_if<LinearStage>(&st)) {
      if (static_cast<int>(lin->matrix.cols()) != width)
        return fail({ValidationIssue::Kind::WidthMismatch, idx,
                     static_cast<int>(lin->matrix.cols()), width, -1});
    } else if (const auto* un = std::get_if<UnaryStage>(&st)) {
      for (const auto& op : un->ops)
        if (op.src < 0 || op.src >= width)
          return fail({ValidationIssue::Kind::WireOutOfRange, idx, 0, width,
                       op.src});
    } else if (const auto* bin = std::get_if<BinaryStage>(&st)) {
      for (const auto& op : bin->ops) {
        if (op.a < 0 || op.a >= width)
          return fail({ValidationIssue::Kind::WireOutOfRange, idx, 0, width,
                       op.a});
        bool uses_b = op.kind != BinaryOp::Kind::Copy;
        if (uses_b && (op.b < 0 || op.b >= width))
          return fail({ValidationIssue::Kind::WireOutOfRange, idx, 0, width,
                       op.b});
      }
    }
    width = stage_output_width(st);
  }

  if (width != static_cast<int>(s.output_labels.size()))
    return fail({ValidationIssue::Kind::OutputMismatch,
                 static_cast<int>(s.stages.size()),
                 static_cast<int>(s.output_labels.size()), width, -1});
  return {};
}

void require_valid(const Scheme& s) {
  auto report = validate(s);
  if (!report.ok())
    throw ValidationError("scheme \"" + s.name +
                          "\" is invalid: " + report.issue->message());
}

Scheme compose(const Scheme& first, const Scheme& second) {
  if (first.output_labels.size() != second.input_labels.size())
    throw DimensionError("compose: \"" + first.name + "\" produces " +
                         std::to_string(first.output_labels.size()) +
                         " wires but \"" + second.name + "\" takes " +
                         std::to_string(second.input_labels.size()));
  Scheme out;
  out.name = first.name + "+" + second.name;
  out.input_labels = first.input_labels;
  out.output_labels = second.output_labels;
  out.stages = first.stages;
  out.stages.insert(out.stages.end(), second.stages.begin(),
                    second.stages.end());
  if (first.known_erratum && second.known_erratum)
    out.known_erratum = *first.known_erratum + "; " + *second.known_erratum;
  else if (first.known_erratum)
    out.known_erratum = first.known_erratum;
  else
    out.known_erratum = second.known_erratum;
  return out;
}

Scheme identity_scheme(int n) {
  Scheme s;
  s.name = "identity" + std::to_string(n);
  for (int i = 0; i < n; ++i) {
    s.input_labels.push_back("x" + std::to_string(i + 1));
    s.output_labels.push_back("y" + std::to_string(i + 1));
  }
  s.stages.push_back(LinearStage{identity(n)});
  return s;
}

} // namespace sqcx
