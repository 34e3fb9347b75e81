#include "rookmn/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rookmn/census.hpp"
#include "rookmn/diagram.hpp"
#include "rookmn/element.hpp"
#include "rookmn/enumerate.hpp"
#include "rookmn/json_io.hpp"
#include "rookmn/matrix.hpp"
#include "rookmn/verify.hpp"

namespace rookmn {

namespace {

// Hard ceilings for commands that materialize their output; the library
// itself is not capped, but the CLI refuses jobs that cannot end well.
constexpr Int max_enumerate_n = 300;
constexpr std::size_t max_cayley_elements = 1024;
constexpr Int max_render_n = 200;

// Accepts the text form ("0", "<d,k,m>") or the JSON form ({"d":..}, "zero").
Element parse_element_arg(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '"')) {
    return nlohmann::json::parse(text).get<Element>();
  }
  return parse_element(text);
}

Ambient resolve_ambient(bool n_given, Int n) {
  return n_given ? Ambient::finite(n) : Ambient::unbounded();
}

void require_in_ambient(const Element& x, const Ambient& ambient) {
  if (!is_valid(x, ambient)) {
    throw ValidationError(to_string(x) + " is not valid for n=" + std::to_string(ambient.n()));
  }
}

void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot open '" + path + "' for writing");
  file << content;
  if (!file.good()) throw ValidationError("failed while writing '" + path + "'");
}

void print_element(std::ostream& out, const Element& x, const std::string& format) {
  if (format == "json") {
    out << nlohmann::json(x).dump() << '\n';
  } else {
    out << to_string(x) << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"triplet calculus for the rook-matrix monoid: exact element algebra,\n"
               "subsemigroup enumeration, pair censuses, and diagram rendering"};
  app.name("rookmn");
  app.require_subcommand(1);

  const std::string text_json = "output format";
  const std::string dim_help = "ambient dimension n (>= 2)";

  // --- element operations ---------------------------------------------------
  struct OpArgs {
    std::string x, y;
    Int j = 0;
    Int n = 0;
    CLI::Option* n_opt = nullptr;
    std::string format = "text";
  };

  const auto add_ambient = [&](CLI::App* sub, OpArgs& a) {
    a.n_opt = sub->add_option("-n,--dim", a.n, dim_help);
    CLI::Option* unbounded = sub->add_flag("--unbounded", "no dimension bound (the default)");
    a.n_opt->excludes(unbounded);
  };
  const auto add_format = [&](CLI::App* sub, std::string& fmt,
                              const std::vector<std::string>& allowed) {
    sub->add_option("--format", fmt, text_json)->check(CLI::IsMember(allowed));
  };

  OpArgs mul_args;
  CLI::App* mul = app.add_subcommand("mul", "product x*y");
  mul->add_option("x", mul_args.x, "left factor")->required();
  mul->add_option("y", mul_args.y, "right factor")->required();
  add_ambient(mul, mul_args);
  add_format(mul, mul_args.format, {"text", "json"});

  OpArgs pow_args;
  CLI::App* pow = app.add_subcommand("pow", "power x^j");
  pow->add_option("x", pow_args.x, "base element")->required();
  pow->add_option("j", pow_args.j, "exponent (>= 1)")->required();
  add_ambient(pow, pow_args);
  add_format(pow, pow_args.format, {"text", "json"});

  OpArgs root_args;
  CLI::App* root_cmd = app.add_subcommand("root", "the unique j-th root of x, if one exists");
  root_cmd->add_option("x", root_args.x, "nonzero element")->required();
  root_cmd->add_option("j", root_args.j, "root degree (>= 1)")->required();
  add_ambient(root_cmd, root_args);
  add_format(root_cmd, root_args.format, {"text", "json"});

  OpArgs classify_args;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "zero / identity / idempotent / nilpotent with index");
  classify_cmd->add_option("x", classify_args.x, "element")->required();
  add_ambient(classify_cmd, classify_args);
  add_format(classify_cmd, classify_args.format, {"text", "json"});

  OpArgs transpose_args;
  CLI::App* transpose_cmd = app.add_subcommand("transpose", "matrix transpose of x");
  transpose_cmd->add_option("x", transpose_args.x, "element")->required();
  add_ambient(transpose_cmd, transpose_args);
  add_format(transpose_cmd, transpose_args.format, {"text", "json"});

  OpArgs commutes_args;
  CLI::App* commutes_cmd = app.add_subcommand("commutes", "whether x*y equals y*x");
  commutes_cmd->add_option("x", commutes_args.x, "first element")->required();
  commutes_cmd->add_option("y", commutes_args.y, "second element")->required();
  add_ambient(commutes_cmd, commutes_args);

  // --- enumeration ------------------------------------------------------------
  Int enum_n = 0;
  std::string enum_family = "Mn";
  std::string enum_format = "text";
  bool enum_count = false;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "list a family's elements in canonical order");
  enum_cmd->add_option("-n,--dim", enum_n, dim_help)->required();
  enum_cmd->add_option("--family", enum_family, "family name (see below)");
  add_format(enum_cmd, enum_format, {"text", "json"});
  enum_cmd->add_flag("--count", enum_count, "print only the number of elements");
  enum_cmd->footer("families: Mn, Sn, UT, SUT, UF, SUF, LT, SLT, LF, SLF, D, B,\n"
                   "          MultipleOfD0(q), AtLeastD0(q), ZeroFirstRowCol,\n"
                   "          ZeroFirstRowLastCol, AtMostJOnes(q)");

  Int cayley_n = 0;
  std::string cayley_family = "Mn";
  std::string cayley_format = "ascii";
  std::string cayley_out;
  CLI::App* cayley_cmd = app.add_subcommand("cayley", "full multiplication table of a family");
  cayley_cmd->add_option("-n,--dim", cayley_n, dim_help)->required();
  cayley_cmd->add_option("--family", cayley_family, "family name");
  add_format(cayley_cmd, cayley_format, {"ascii", "csv"});
  cayley_cmd->add_option("-o,--output", cayley_out, "write to a file instead of stdout");

  // --- census -------------------------------------------------------------------
  Int census_min = 0;
  Int census_max = 0;
  Int census_budget = default_direct_budget;
  int census_jobs = 0;
  std::string census_csv_path;
  std::string census_gnuplot_path;
  CLI::App* census_cmd =
      app.add_subcommand("census", "count nonzero-product pairs for a range of n, three ways");
  census_cmd->add_option("n_min", census_min, "first dimension (>= 2)")->required();
  census_cmd->add_option("n_max", census_max, "last dimension")->required();
  census_cmd->add_option("--budget-direct", census_budget,
                         "largest n for the quadratic route (0 disables it)");
  census_cmd->add_option("--jobs", census_jobs, "worker threads (0 = all available)");
  census_cmd->add_option("--csv", census_csv_path, "also write the CSV to a file");
  census_cmd->add_option("--gnuplot", census_gnuplot_path,
                         "write two-column n/ratio data for plotting");
  census_cmd->footer("the ratio_closed_form column is conditional: it is exact only where\n"
                     "the degree-7 pair-count polynomial holds, as recorded by conjecture_ok");

  // --- verify ----------------------------------------------------------------------
  std::string verify_suite = "all";
  Int verify_n_max = 6;
  int verify_jobs = 0;
  CLI::App* verify_cmd = app.add_subcommand("verify", "re-run the internal consistency checks");
  verify_cmd->add_option("--suite", verify_suite, "algebra, oracle, counts, roots, generators, "
                                                  "census, diagrams, or all");
  verify_cmd->add_option("--n-max", verify_n_max, "largest dimension to cover (>= 2)");
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads (0 = all available)");

  // --- render -----------------------------------------------------------------------
  std::string render_x;
  std::string render_y;
  Int render_n = 0;
  std::string render_format;
  std::string render_out;
  CLI::App* render_cmd =
      app.add_subcommand("render", "draw an element (or a product x*y) as a two-row diagram");
  render_cmd->add_option("x", render_x, "element")->required();
  render_cmd->add_option("y", render_y, "optional right factor: render the product trace");
  render_cmd->add_option("-n,--dim", render_n, dim_help)->required();
  render_cmd->add_option("--format", render_format, "ascii or svg (default: ascii, svg for products)")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("-o,--output", render_out, "write to a file instead of stdout");

  // --- from-matrix --------------------------------------------------------------------
  std::string matrix_path = "-";
  std::string matrix_format = "text";
  CLI::App* matrix_cmd = app.add_subcommand(
      "from-matrix", "recognize a 0/1 matrix (n lines of n characters) as an element");
  matrix_cmd->add_option("file", matrix_path, "path to the matrix text, or '-' for stdin");
  add_format(matrix_cmd, matrix_format, {"text", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Normalize CLI11's many exit codes to the 0 (help) / 1 (usage) contract.
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (mul->parsed()) {
      const Ambient amb = resolve_ambient(mul_args.n_opt->count() > 0, mul_args.n);
      const Element x = parse_element_arg(mul_args.x);
      const Element y = parse_element_arg(mul_args.y);
      require_in_ambient(x, amb);
      require_in_ambient(y, amb);
      print_element(out, multiply(x, y, amb), mul_args.format);
    } else if (pow->parsed()) {
      const Ambient amb = resolve_ambient(pow_args.n_opt->count() > 0, pow_args.n);
      const Element x = parse_element_arg(pow_args.x);
      require_in_ambient(x, amb);
      print_element(out, power(x, pow_args.j, amb), pow_args.format);
    } else if (root_cmd->parsed()) {
      const Ambient amb = resolve_ambient(root_args.n_opt->count() > 0, root_args.n);
      const Element x = parse_element_arg(root_args.x);
      require_in_ambient(x, amb);
      const std::optional<Element> y = root(x, root_args.j, amb);
      if (!y) {
        out << (root_args.format == "json" ? "null" : "none") << '\n';
      } else {
        print_element(out, *y, root_args.format);
      }
    } else if (classify_cmd->parsed()) {
      const Ambient amb = resolve_ambient(classify_args.n_opt->count() > 0, classify_args.n);
      const Element x = parse_element_arg(classify_args.x);
      require_in_ambient(x, amb);
      const Classification c = classify(x, amb);
      if (classify_args.format == "json") {
        const char* kind = c.kind == ElementKind::zero_elem  ? "zero"
                           : c.kind == ElementKind::identity ? "identity"
                           : c.kind == ElementKind::idempotent ? "idempotent"
                                                               : "nilpotent";
        nlohmann::json j{{"kind", kind}};
        if (c.kind == ElementKind::nilpotent) j["index"] = c.index;
        out << j.dump() << '\n';
      } else {
        out << to_string(c) << '\n';
      }
    } else if (transpose_cmd->parsed()) {
      const Ambient amb = resolve_ambient(transpose_args.n_opt->count() > 0, transpose_args.n);
      const Element x = parse_element_arg(transpose_args.x);
      require_in_ambient(x, amb);
      print_element(out, transpose(x), transpose_args.format);
    } else if (commutes_cmd->parsed()) {
      const Ambient amb = resolve_ambient(commutes_args.n_opt->count() > 0, commutes_args.n);
      const Element x = parse_element_arg(commutes_args.x);
      const Element y = parse_element_arg(commutes_args.y);
      require_in_ambient(x, amb);
      require_in_ambient(y, amb);
      out << (commutes(x, y, amb) ? "true" : "false") << '\n';
    } else if (enum_cmd->parsed()) {
      const FamilyId family = FamilyId::parse(enum_family);
      if (enum_count) {
        check_family(family, enum_n);
        if (const auto order = order_formula(enum_n, family)) {
          out << *order << '\n';
          return 0;
        }
      }
      if (enum_n > max_enumerate_n) {
        throw ValidationError("enumerate materializes every element; n is capped at " +
                              std::to_string(max_enumerate_n));
      }
      const std::vector<Element> elems = enumerate(enum_n, family);
      if (enum_count) {
        out << elems.size() << '\n';
      } else if (enum_format == "json") {
        out << nlohmann::json(elems).dump() << '\n';
      } else {
        for (const Element& x : elems) out << to_string(x) << '\n';
      }
    } else if (cayley_cmd->parsed()) {
      const FamilyId family = FamilyId::parse(cayley_family);
      if (cayley_n > max_enumerate_n) {
        throw ValidationError("cayley tables are materialized; n is capped at " +
                              std::to_string(max_enumerate_n));
      }
      const std::vector<Element> elems = enumerate(cayley_n, family);
      if (elems.size() > max_cayley_elements) {
        throw ValidationError("table would have " + std::to_string(elems.size()) + "^2 cells; " +
                              "pick n or a family giving at most " +
                              std::to_string(max_cayley_elements) + " elements");
      }
      const CayleyTable table = make_cayley_table(elems, Ambient::finite(cayley_n));
      emit(out, cayley_out, cayley_format == "csv" ? cayley_csv(table) : cayley_ascii(table));
    } else if (census_cmd->parsed()) {
      SweepOptions options;
      options.direct_budget = census_budget;
      options.threads = census_jobs;
      const std::vector<CensusRow> rows = census_sweep(census_min, census_max, options);
      const std::string csv = census_csv(rows);
      out << csv;
      if (!census_csv_path.empty()) emit(out, census_csv_path, csv);
      if (!census_gnuplot_path.empty()) emit(out, census_gnuplot_path, census_gnuplot(rows));
      const Int direct_hi = std::min(census_max, census_budget);
      if (direct_hi >= census_min) {
        err << "direct route ran for n=" << census_min << ".." << direct_hi
            << " and agreed with the reduced route\n";
      }
      err << "ratio_closed_form is conditional on the degree-7 pair-count polynomial;\n"
             "conjecture_ok records where that polynomial was verified by counting\n";
      for (const CensusRow& row : rows) {
        if (!row.conjecture_ok) {
          err << "pair-count polynomial mismatch at n=" << row.n << '\n';
          return 2;
        }
      }
    } else if (verify_cmd->parsed()) {
      const std::vector<CheckResult> results =
          run_verify_suite(verify_suite, verify_n_max, verify_jobs);
      bool all_ok = true;
      for (const CheckResult& r : results) {
        if (r.ok) {
          out << "[ ok ] " << r.name << " (" << r.detail << ")\n";
        } else {
          all_ok = false;
          out << "[FAIL] " << r.name << ": " << r.detail << '\n';
        }
      }
      out << (all_ok ? "all checks passed" : "CHECKS FAILED") << '\n';
      if (!all_ok) return 2;
    } else if (render_cmd->parsed()) {
      if (render_n > max_render_n) {
        throw ValidationError("render is capped at n <= " + std::to_string(max_render_n));
      }
      const Element x = parse_element_arg(render_x);
      if (render_cmd->count("y") > 0) {
        const Element y = parse_element_arg(render_y);
        if (render_format == "ascii") {
          throw ValidationError("product rendering is svg-only; drop --format ascii");
        }
        emit(out, render_out, render_product(x, y, render_n));
      } else if (render_format == "svg") {
        emit(out, render_out, render_svg(x, render_n));
      } else {
        emit(out, render_out, render_ascii(x, render_n));
      }
    } else if (matrix_cmd->parsed()) {
      std::string text;
      if (matrix_path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
      } else {
        std::ifstream file(matrix_path, std::ios::binary);
        if (!file) throw ValidationError("cannot open '" + matrix_path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
      }
      const DenseRookMatrix M = DenseRookMatrix::parse(text);
      const std::optional<Element> x = from_matrix(M);
      if (!x) {
        out << (matrix_format == "json" ? "null" : "none") << '\n';
      } else {
        print_element(out, *x, matrix_format);
      }
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rookmn
