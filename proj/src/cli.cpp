// Copyright 2026 The mextree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mextree/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "mextree/pipeline.hpp"
#include "mextree/service.hpp"

namespace mextree {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(file), {});
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path);
  file << data;
  if (!file) throw IoError("failed writing " + path);
}

struct RenderFlags {
  std::string format = "json";
  std::string out;
  std::string caret = "^";
  std::optional<int> max_depth;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "svg"}))
        ->capture_default_str();
    cmd->add_option("--out", out, "Output file (default: stdout)");
    cmd->add_option("--caret", caret, "Glyph for power: ^ or ∧")
        ->check(CLI::IsMember({"^", "∧"}))
        ->capture_default_str();
    cmd->add_option("--max-depth", max_depth, "Leave out nodes below this depth (SVG)")
        ->check(CLI::NonNegativeNumber);
  }

  RenderOptions options(RenderOptions base) const {
    base.caret_style = caret;
    base.max_depth = max_depth;
    return base;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"mextree: expression trees, similarity and rendering for parallel MathML",
               "mextree"};
  app.require_subcommand(1);

  ServiceConfig config;

  std::string parse_input = "-";
  bool parse_latex = false;
  std::optional<std::string> converter_url;
  RenderFlags parse_flags;
  auto* parse = app.add_subcommand("parse", "Build the expression tree of a MathML document");
  parse->add_option("input", parse_input, "MathML file, or - for stdin");
  parse->add_flag("--latex", parse_latex, "Input is LaTeX; convert it with the converter");
  parse->add_option("--converter-url", converter_url, "LaTeX converter URL");
  parse_flags.add_to(parse);

  std::string file_a;
  std::string file_b;
  std::string spec_path;
  std::string measure;
  bool no_collapse = false;
  RenderFlags compare_flags;
  auto* compare = app.add_subcommand("compare", "Merge the trees of two documents");
  compare->add_option("fileA", file_a, "First MathML document")->required();
  compare->add_option("fileB", file_b, "Second MathML document")->required();
  auto* spec_opt = compare->add_option("--spec", spec_path, "Similarity spec JSON file");
  auto* measure_opt = compare->add_option("--measure", measure, "Computed measure")
                          ->check(CLI::IsMember({"identical", "taxonomic"}));
  spec_opt->excludes(measure_opt);
  compare->add_flag("--no-collapse", no_collapse, "Keep unmarked subtrees expanded");
  compare_flags.add_to(compare);

  std::string host = config.host;
  std::optional<int> port;
  std::size_t body_limit = config.body_limit;
  std::optional<std::string> serve_converter;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--host", host, "Listen address")->capture_default_str();
  serve->add_option("--port", port, "Listen port (default: MEXTREE_PORT or 8080)");
  serve->add_option("--converter-url", serve_converter, "LaTeX converter URL");
  serve->add_option("--body-limit", body_limit, "Request size limit in bytes")
      ->capture_default_str();

  std::string convert_input = "-";
  std::string convert_out;
  std::optional<std::string> convert_converter;
  auto* convert = app.add_subcommand("convert", "Convert LaTeX to MathML via the converter");
  convert->add_option("input", convert_input, "LaTeX file, or - for stdin");
  convert->add_option("--converter-url", convert_converter, "LaTeX converter URL");
  convert->add_option("--out", convert_out, "Output file (default: stdout)");

  std::vector<const char*> argv{"mextree"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (compare->parsed() && spec_opt->count() == 0 && measure_opt->count() == 0) {
      throw CLI::ValidationError("compare needs one of --spec or --measure");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << dump_json(error_json("Usage", e.what()));
    return 2;
  }

  try {
    config = ServiceConfig::from_environment(config);

    if (parse->parsed()) {
      if (converter_url) config.converter_url = converter_url;
      RenderOptions options = parse_flags.options(config.render);
      std::string source = read_input(parse_input, in);
      if (parse_latex) source = convert_latex(source, config);
      ExpressionTree tree = tree_for(source, options);
      write_output(parse_flags.out,
                   parse_flags.format == "svg" ? tree_svg(tree, options) : tree_json(tree), out);
      return 0;
    }

    if (compare->parsed()) {
      RenderOptions options = compare_flags.options(config.render);
      CompareRequest request;
      request.mathml_a = read_input(file_a, in);
      request.mathml_b = read_input(file_b, in);
      if (!spec_path.empty()) {
        request.spec = spec_from_json(read_input(spec_path, in));
      } else {
        request.measure = parse_measure(measure);
      }
      request.collapse = !no_collapse;
      CompareResult result = run_compare(request, options);
      write_output(compare_flags.out,
                   compare_flags.format == "svg" ? merged_svg(result.merged, options)
                                                 : merged_json(result.merged),
                   out);
      return 0;
    }

    if (convert->parsed()) {
      if (convert_converter) config.converter_url = convert_converter;
      write_output(convert_out, convert_latex(read_input(convert_input, in), config), out);
      return 0;
    }

    if (serve->parsed()) {
      config.host = host;
      if (port) config.port = *port;
      if (serve_converter) config.converter_url = serve_converter;
      config.body_limit = body_limit;
      HttpService service(config);
      if (service.bind() < 0) {
        err << dump_json(error_json("BindFailed", "cannot listen on " + config.host + ":" +
                                                      std::to_string(config.port)));
        return 1;
      }
      err << "listening on " << config.host << ":" << config.port << "\n";
      return service.listen() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << dump_json(error_json(e));
    return e.code() == ErrorCode::kInvalidOptions ? 2 : 1;
  } catch (const IoError& e) {
    err << dump_json(error_json("IOError", e.what()));
    return 1;
  }
  return 2;
}

}  // namespace mextree
