#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sqcx/circuit.hpp"
#include "sqcx/cost.hpp"
#include "sqcx/evaluate.hpp"
#include "sqcx/library.hpp"
#include "sqcx/scheme_json.hpp"
#include "sqcx/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct UsageError : sqcx::Error {
  using Error::Error;
};

// Accepts a built-in name or "@file.json".
sqcx::Scheme resolve_scheme(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::string path = arg.substr(1);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read scheme file \"" + path + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    sqcx::Scheme s = sqcx::scheme_from_json(buf.str());
    sqcx::require_valid(s);
    return s;
  }
  return sqcx::builtin(arg).scheme;
}

std::vector<sqcx::Rational> parse_inputs(const std::string& arg,
                                         bool allow_decimal) {
  std::vector<sqcx::Rational> out;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto first = tok.find_first_not_of(" \t");
    auto last = tok.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw sqcx::ParseError("empty input value");
    tok = tok.substr(first, last - first + 1);
    out.push_back(allow_decimal ? sqcx::Rational::parse_allow_decimal(tok)
                                : sqcx::Rational::parse(tok));
  }
  if (out.empty()) throw sqcx::ParseError("no input values given");
  return out;
}

sqcx::FixedPointConfig parse_fixed(const std::string& arg) {
  auto comma = arg.find(',');
  if (comma == std::string::npos)
    throw UsageError("--fixed expects W,f (e.g. 32,8)");
  try {
    sqcx::FixedPointConfig cfg;
    cfg.word_bits = std::stoi(arg.substr(0, comma));
    cfg.frac_bits = std::stoi(arg.substr(comma + 1));
    if (cfg.word_bits < 2 || cfg.frac_bits < 0 ||
        cfg.frac_bits >= cfg.word_bits)
      throw UsageError("--fixed requires W >= 2 and 0 <= f < W");
    return cfg;
  } catch (const std::logic_error&) {
    throw UsageError("--fixed expects W,f (e.g. 32,8)");
  }
}

std::string join_rationals(const std::vector<sqcx::Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out;
}

void print_widths(const sqcx::Scheme& s, const sqcx::WidthReport& widths) {
  std::cout << "widths (bits of scaled magnitude):\n";
  for (const auto& [key, bits] : widths.max_bits) {
    auto [stage, wire] = key;
    if (stage < 0) {
      std::cout << "  input " << wire << " [" << s.input_labels[wire]
                << "]: " << bits << "\n";
    } else {
      std::cout << "  stage " << stage << " wire " << wire << ": " << bits
                << "\n";
    }
  }
}

void warn_erratum(const sqcx::Scheme& s) {
  if (s.known_erratum)
    std::cerr << "warning: " << s.name << ": " << *s.known_erratum << "\n";
}

int cmd_list() {
  for (const auto& name : sqcx::list_builtins()) {
    std::string pad(name.size() < 24 ? 24 - name.size() : 1, ' ');
    std::cout << name << pad << sqcx::builtin(name).description << "\n";
  }
  return kExitOk;
}

std::string format_matrix(const sqcx::RMatrix& m) {
  std::vector<std::size_t> width(m.cols(), 0);
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      width[c] = std::max(width[c], m(r, c).str().size());
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out += "      [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::string cell = m(r, c).str();
      out += std::string(width[c] - cell.size() + (c ? 1 : 0), ' ') + cell;
    }
    out += "]\n";
  }
  return out;
}

int cmd_show(const std::string& scheme_arg) {
  sqcx::Scheme s = resolve_scheme(scheme_arg);
  bool from_file = !scheme_arg.empty() && scheme_arg.front() == '@';
  std::cout << "name: " << s.name << "\n";
  if (!from_file && sqcx::is_builtin(s.name))
    std::cout << "description: " << sqcx::builtin(s.name).description << "\n";
  std::cout << "inputs:  ";
  for (std::size_t i = 0; i < s.input_labels.size(); ++i)
    std::cout << (i ? ", " : "") << s.input_labels[i];
  std::cout << "\noutputs: ";
  for (std::size_t i = 0; i < s.output_labels.size(); ++i)
    std::cout << (i ? ", " : "") << s.output_labels[i];
  std::cout << "\n";
  if (s.known_erratum) std::cout << "erratum: " << *s.known_erratum << "\n";
  std::cout << "stages:\n";
  int width = static_cast<int>(s.input_labels.size());
  for (std::size_t i = 0; i < s.stages.size(); ++i) {
    const auto& st = s.stages[i];
    int out_width = sqcx::stage_output_width(st);
    std::cout << "  " << i << ": ";
    if (const auto* lin = std::get_if<sqcx::LinearStage>(&st)) {
      std::cout << "linear " << lin->matrix.rows() << "x" << lin->matrix.cols()
                << "\n"
                << format_matrix(lin->matrix);
    } else if (const auto* un = std::get_if<sqcx::UnaryStage>(&st)) {
      std::cout << "unary:";
      for (const auto& op : un->ops) {
        switch (op.kind) {
          case sqcx::UnaryOp::Kind::Copy:
            std::cout << " copy(" << op.src << ")";
            break;
          case sqcx::UnaryOp::Kind::Square:
            std::cout << " square(" << op.src << ")";
            break;
          case sqcx::UnaryOp::Kind::Scale:
            std::cout << " scale(" << op.src << ", " << op.factor.str() << ")";
            break;
        }
      }
      std::cout << "\n";
    } else {
      const auto& bin = std::get<sqcx::BinaryStage>(st);
      std::cout << "binary:";
      for (const auto& op : bin.ops) {
        switch (op.kind) {
          case sqcx::BinaryOp::Kind::Copy:
            std::cout << " copy(" << op.a << ")";
            break;
          case sqcx::BinaryOp::Kind::Mul:
            std::cout << " mul(" << op.a << ", " << op.b << ")";
            break;
          case sqcx::BinaryOp::Kind::Div:
            std::cout << " div(" << op.a << ", " << op.b << ")";
            break;
        }
      }
      std::cout << "\n";
    }
    std::cout << "     width " << width << " -> " << out_width << "\n";
    width = out_width;
  }
  return kExitOk;
}

int cmd_eval(const std::string& scheme_arg, const std::string& inputs_arg,
             const std::string& fixed_arg) {
  sqcx::Scheme s = resolve_scheme(scheme_arg);
  warn_erratum(s);
  bool fixed_mode = !fixed_arg.empty();
  auto inputs = parse_inputs(inputs_arg, fixed_mode);
  if (fixed_mode) {
    auto cfg = parse_fixed(fixed_arg);
    auto result = sqcx::eval_fixed(s, cfg, inputs);
    std::cout << join_rationals(result.outputs) << "\n";
    print_widths(s, result.widths);
  } else {
    std::cout << join_rationals(sqcx::eval_exact(s, inputs)) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& scheme_arg, const std::string& against,
               int radius) {
  sqcx::Scheme s = resolve_scheme(scheme_arg);
  sqcx::ReferenceKind kind = sqcx::reference_from_name(against);
  sqcx::ReferenceId ref = sqcx::bind_reference(kind, s);

  bool all_pass = true;
  auto symbolic = sqcx::verify_symbolic(s, ref);
  if (symbolic.pass) {
    std::cout << "PASS (symbolic)\n";
  } else {
    all_pass = false;
    std::cout << "FAIL (symbolic)\n";
    for (std::size_t k = 0; k < symbolic.residuals.size(); ++k)
      std::cout << "  residual[" << s.output_labels[k]
                << "] = " << symbolic.residuals[k].str(s.input_labels) << "\n";
  }

  if (radius > 0) {
    auto grid = sqcx::verify_exhaustive(s, ref, radius);
    if (grid.pass) {
      std::cout << "PASS (exhaustive R=" << radius << "): " << grid.points_tested
                << " points tested, " << grid.points_skipped << " skipped\n";
    } else {
      all_pass = false;
      std::cout << "FAIL (exhaustive R=" << radius << "): " << grid.points_tested
                << " points tested, " << grid.points_skipped << " skipped, "
                << grid.mismatches << " mismatches\n";
      if (grid.counterexample) {
        const auto& ce = *grid.counterexample;
        std::cout << "  counterexample: inputs (" << join_rationals(ce.inputs)
                  << ") -> scheme (" << join_rationals(ce.scheme_value)
                  << "), reference (" << join_rationals(ce.reference_value)
                  << ")\n";
      }
    }
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_audit(const std::string& scheme_arg) {
  std::cout << sqcx::audit(resolve_scheme(scheme_arg)).str() << "\n";
  return kExitOk;
}

int cmd_tables(bool as_json) {
  auto tc = sqcx::compare_tables();
  std::cout << (as_json ? sqcx::table_comparison_json(tc)
                        : sqcx::format_table_comparison(tc));
  return tc.all_match() ? kExitOk : kExitVerifyFail;
}

int cmd_export(const std::string& scheme_arg, const std::string& format,
               const std::string& out_path) {
  sqcx::Scheme s = resolve_scheme(scheme_arg);
  std::string text;
  if (format == "dot")
    text = sqcx::export_dot(s);
  else if (format == "json")
    text = sqcx::scheme_to_json(s);
  else
    throw UsageError("--format must be dot or json");
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write \"" + out_path + "\"");
    out << text;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& scheme_arg, const std::string& fixed_arg,
              int radius) {
  sqcx::Scheme s = resolve_scheme(scheme_arg);
  auto cfg = parse_fixed(fixed_arg);
  if (radius < 1) throw UsageError("--range must be >= 1");

  const std::size_t n = s.input_labels.size();
  std::vector<int> point(n, -radius);
  std::vector<sqcx::Rational> inputs(n);

  long long total = 0, evaluated = 0, skipped = 0, overflowed = 0;
  std::vector<sqcx::Rational> max_err(s.output_labels.size(), sqcx::Rational(0));
  sqcx::WidthReport widths;
  std::vector<std::string> overflow_notes;

  bool done = false;
  while (!done) {
    ++total;
    for (std::size_t i = 0; i < n; ++i) inputs[i] = sqcx::Rational(point[i]);

    bool have_exact = true;
    std::vector<sqcx::Rational> exact;
    try {
      exact = sqcx::eval_exact(s, inputs);
    } catch (const sqcx::EvalError&) {
      have_exact = false;
      ++skipped;
    }

    if (have_exact) {
      try {
        auto fixed = sqcx::eval_fixed(s, cfg, inputs);
        widths.merge(fixed.widths);
        for (std::size_t k = 0; k < exact.size(); ++k) {
          sqcx::Rational err = sqcx::abs(fixed.outputs[k] - exact[k]);
          if (err > max_err[k]) max_err[k] = err;
        }
        ++evaluated;
      } catch (const sqcx::EvalError& e) {
        ++overflowed;
        if (overflow_notes.size() < 5)
          overflow_notes.push_back("  overflow at inputs (" +
                                   join_rationals(inputs) + "): " + e.what());
      }
    }

    done = true;
    for (std::size_t i = n; i-- > 0;) {
      if (point[i] < radius) {
        ++point[i];
        std::fill(point.begin() + static_cast<long>(i) + 1, point.end(),
                  -radius);
        done = false;
        break;
      }
    }
  }

  std::cout << "sweep " << s.name << ": W=" << cfg.word_bits
            << " f=" << cfg.frac_bits << " range=" << radius << "\n";
  std::cout << "grid points: " << total << ", evaluated: " << evaluated
            << ", skipped (zero divisor): " << skipped
            << ", overflowed: " << overflowed << "\n";
  std::cout << "max |fixed - exact| per output:\n";
  for (std::size_t k = 0; k < max_err.size(); ++k)
    std::cout << "  " << s.output_labels[k] << ": " << max_err[k].str() << "\n";
  for (const auto& note : overflow_notes) std::cout << note << "\n";
  if (overflowed > 5)
    std::cout << "  (" << (overflowed - 5) << " more overflow points)\n";
  print_widths(s, widths);
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sqcx: exact analysis of squarer-based complex arithmetic schemes"};
  app.require_subcommand(1);

  std::string scheme_arg, inputs_arg, fixed_arg, against, format = "dot",
              out_path;
  int radius = 0;
  bool as_json = false;

  auto* list_cmd = app.add_subcommand("list", "list built-in schemes");

  auto* show_cmd = app.add_subcommand("show", "print a scheme's stages");
  show_cmd->add_option("scheme", scheme_arg, "built-in name or @file.json")
      ->required();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a scheme");
  eval_cmd->add_option("scheme", scheme_arg, "built-in name or @file.json")
      ->required();
  eval_cmd
      ->add_option("--inputs", inputs_arg,
                   "comma-separated rationals, e.g. 1,2,3/2,-4")
      ->required();
  eval_cmd->add_option("--fixed", fixed_arg,
                       "evaluate in W,f fixed point instead of exactly");

  auto* verify_cmd =
      app.add_subcommand("verify", "check a scheme against a reference");
  verify_cmd->add_option("scheme", scheme_arg, "built-in name or @file.json")
      ->required();
  verify_cmd
      ->add_option("--against", against, "square | mul | div | product")
      ->required();
  verify_cmd
      ->add_option("--exhaustive", radius,
                   "also compare on the integer grid [-R..R]^n")
      ->check(CLI::Range(1, 1 << 20));

  auto* audit_cmd = app.add_subcommand("audit", "count hardware units");
  audit_cmd->add_option("scheme", scheme_arg, "built-in name or @file.json")
      ->required();

  auto* tables_cmd = app.add_subcommand(
      "tables", "compare audited costs against the published unit counts");
  tables_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* export_cmd = app.add_subcommand("export", "emit DOT or JSON");
  export_cmd->add_option("scheme", scheme_arg, "built-in name or @file.json")
      ->required();
  export_cmd->add_option("--format", format, "dot | json");
  export_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "fixed-point error and width survey over an integer grid");
  sweep_cmd->add_option("scheme", scheme_arg, "built-in name or @file.json")
      ->required();
  sweep_cmd->add_option("--fixed", fixed_arg, "W,f format")->required();
  sweep_cmd->add_option("--range", radius, "grid radius R")
      ->required()
      ->check(CLI::Range(1, 1 << 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(list_cmd)) return cmd_list();
    if (app.got_subcommand(show_cmd)) return cmd_show(scheme_arg);
    if (app.got_subcommand(eval_cmd))
      return cmd_eval(scheme_arg, inputs_arg, fixed_arg);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(scheme_arg, against, radius);
    if (app.got_subcommand(audit_cmd)) return cmd_audit(scheme_arg);
    if (app.got_subcommand(tables_cmd)) return cmd_tables(as_json);
    if (app.got_subcommand(export_cmd))
      return cmd_export(scheme_arg, format, out_path);
    if (app.got_subcommand(sweep_cmd))
      return cmd_sweep(scheme_arg, fixed_arg, radius);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sqcx::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const sqcx::UnknownSchemeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sqcx::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sqcx::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sqcx::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sqcx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
