#include "sqcx/scheme_json.hpp"

#include <nlohmann/json.hpp>

namespace sqcx {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json stage_to_json(const Stage& stage) {
  ordered_json j;
  if (const auto* lin = std::get_if<LinearStage>(&stage)) {
    j["kind"] = "linear";
    j["rows"] = lin->matrix.rows();
    j["cols"] = lin->matrix.cols();
    ordered_json entries = ordered_json::array();
    for (Eigen::Index r = 0; r < lin->matrix.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index c = 0; c < lin->matrix.cols(); ++c)
        row.push_back(lin->matrix(r, c).str());
      entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
  } else if (const auto* un = std::get_if<UnaryStage>(&stage)) {
    j["kind"] = "unary";
    ordered_json ops = ordered_json::array();
    for (const auto& op : un->ops) {
      ordered_json o;
      switch (op.kind) {
        case UnaryOp::Kind::Copy:
          o["op"] = "copy";
          o["src"] = op.src;
          break;
        case UnaryOp::Kind::Square:
          o["op"] = "square";
          o["src"] = op.src;
          break;
        case UnaryOp::Kind::Scale:
          o["op"] = "scale";
          o["src"] = op.src;
          o["c"] = op.factor.str();
          break;
      }
      ops.push_back(std::move(o));
    }
    j["ops"] = std::move(ops);
  } else {
    const auto& bin = std::get<BinaryStage>(stage);
    j["kind"] = "binary";
    ordered_json ops = ordered_json::array();
    for (const auto& op : bin.ops) {
      ordered_json o;
      switch (op.kind) {
        case BinaryOp::Kind::Copy:
          o["op"] = "copy";
          o["src"] = op.a;
          break;
        case BinaryOp::Kind::Mul:
          o["op"] = "mul";
          o["lhs"] = op.a;
          o["rhs"] = op.b;
          break;
        case BinaryOp::Kind::Div:
          o["op"] = "div";
          o["num"] = op.a;
          o["den"] = op.b;
          break;
      }
      ops.push_back(std::move(o));
    }
    j["ops"] = std::move(ops);
  }
  return j;
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError("scheme document: " + where + ": " + what);
}

const ordered_json& field(const ordered_json& obj, const char* key,
                          const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    bad(where, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

std::string get_string(const ordered_json& obj, const char* key,
                       const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_string()) bad(where + "." + key, "expected a string");
  return v.get<std::string>();
}

int get_index(const ordered_json& obj, const char* key,
              const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    bad(where + "." + key, "expected a non-negative integer");
  return static_cast<int>(v.get<long long>());
}

Rational get_rational(const ordered_json& v, const std::string& where) {
  if (!v.is_string()) bad(where, "expected a rational string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    bad(where, e.what());
  }
}

std::vector<std::string> get_label_list(const ordered_json& obj,
                                        const char* key) {
  const auto& v = field(obj, key, "document");
  if (!v.is_array()) bad(key, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string())
      bad(std::string(key) + "[" + std::to_string(i) + "]",
          "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

Stage stage_from_json(const ordered_json& j, const std::string& where) {
  std::string kind = get_string(j, "kind", where);
  if (kind == "linear") {
    int rows = get_index(j, "rows", where);
    int cols = get_index(j, "cols", where);
    if (rows < 1 || cols < 1) bad(where, "rows and cols must be >= 1");
    const auto& entries = field(j, "entries", where);
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
      bad(where + ".entries", "expected " + std::to_string(rows) + " rows");
    RMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      const auto& row = entries[r];
      std::string row_where = where + ".entries[" + std::to_string(r) + "]";
      if (!row.is_array() || static_cast<int>(row.size()) != cols)
        bad(row_where, "expected " + std::to_string(cols) + " entries");
      for (int c = 0; c < cols; ++c)
        m(r, c) = get_rational(row[c], row_where + "[" + std::to_string(c) + "]");
    }
    return LinearStage{std::move(m)};
  }

  if (kind == "unary") {
    const auto& ops = field(j, "ops", where);
    if (!ops.is_array() || ops.empty()) bad(where + ".ops", "expected a non-empty array");
    UnaryStage st;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      std::string op_where = where + ".ops[" + std::to_string(k) + "]";
      std::string op = get_string(ops[k], "op", op_where);
      if (op == "copy")
        st.ops.push_back(UnaryOp::copy(get_index(ops[k], "src", op_where)));
      else if (op == "square")
        st.ops.push_back(UnaryOp::square(get_index(ops[k], "src", op_where)));
      else if (op == "scale")
        st.ops.push_back(UnaryOp::scale(
            get_index(ops[k], "src", op_where),
            get_rational(field(ops[k], "c", op_where), op_where + ".c")));
      else
        bad(op_where + ".op", "unknown unary op \"" + op + "\"");
    }
    return st;
  }

  if (kind == "binary") {
    const auto& ops = field(j, "ops", where);
    if (!ops.is_array() || ops.empty()) bad(where + ".ops", "expected a non-empty array");
    BinaryStage st;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      std::string op_where = where + ".ops[" + std::to_string(k) + "]";
      std::string op = get_string(ops[k], "op", op_where);
      if (op == "copy")
        st.ops.push_back(BinaryOp::copy(get_index(ops[k], "src", op_where)));
      else if (op == "mul")
        st.ops.push_back(BinaryOp::mul(get_index(ops[k], "lhs", op_where),
                                       get_index(ops[k], "rhs", op_where)));
      else if (op == "div")
        st.ops.push_back(BinaryOp::div(get_index(ops[k], "num", op_where),
                                       get_index(ops[k], "den", op_where)));
      else
        bad(op_where + ".op", "unknown binary op \"" + op + "\"");
    }
    return st;
  }

  bad(where + ".kind", "unknown stage kind \"" + kind + "\"");
}

} // namespace

std::string scheme_to_json(const Scheme& s) {
  ordered_json j;
  j["name"] = s.name;
  j["inputs"] = s.input_labels;
  j["outputs"] = s.output_labels;
  if (s.known_erratum) j["erratum"] = *s.known_erratum;
  ordered_json stages = ordered_json::array();
  for (const auto& st : s.stages) stages.push_back(stage_to_json(st));
  j["stages"] = std::move(stages);
  return j.dump(2) + "\n";
}

Scheme scheme_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("scheme document: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("scheme document: expected an object");

  Scheme s;
  s.name = get_string(j, "name", "document");
  s.input_labels = get_label_list(j, "inputs");
  s.output_labels = get_label_list(j, "outputs");
  if (j.contains("erratum")) {
    if (!j["erratum"].is_string()) bad("erratum", "expected a string");
    s.known_erratum = j["erratum"].get<std::string>();
  }
  const auto& stages = field(j, "stages", "document");
  if (!stages.is_array()) bad("stages", "expected an array");
  for (std::size_t i = 0; i < stages.size(); ++i)
    s.stages.push_back(
        stage_from_json(stages[i], "stages[" + std::to_string(i) + "]"));
  return s;
}

} // namespace sqcx
