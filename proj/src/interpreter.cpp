// Copyright 2026 The fockgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fockgraph/edge_ops.hpp"
#include "fockgraph/errors.hpp"
#include "fockgraph/interpreter.hpp"

namespace fockgraph {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

std::string quoted_labels(const Command& command) {
  std::string out;
  for (const auto& label : command.labels) {
    out += (out.empty() ? "" : ", ") + ("\"" + label + "\"");
  }
  return out;
}

std::string transfer_text(const Transfer& t) {
  std::string arrow = t.direction == TransferDirection::kOutgoing   ? "->"
                      : t.direction == TransferDirection::kIncoming ? "<-"
                                                                    : "--";
  return arrow + t.neighbor + "x" + std::to_string(t.multiplicity);
}

std::string report_text(const ContractionReport& report) {
  std::string out = "contract kept=" + report.kept + " removed=" + report.removed +
                    " transferred=";
  if (report.transferred.empty()) out += "-";
  for (std::size_t k = 0; k < report.transferred.size(); ++k) {
    out += (k ? "," : "") + transfer_text(report.transferred[k]);
  }
  out += " saturated=";
  if (report.saturated.empty()) out += "-";
  for (std::size_t k = 0; k < report.saturated.size(); ++k) {
    out += (k ? "," : "") + report.saturated[k];
  }
  return out + "\n";
}

}  // namespace

std::optional<Emit> parse_emit(std::string_view text) {
  if (text == "matrix") return Emit::kMatrix;
  if (text == "state") return Emit::kState;
  if (text == "trace") return Emit::kTrace;
  return std::nullopt;
}

GraphState apply_command(const GraphState& graph, const Command& command,
                         ContractionReport* report) {
  switch (command.verb) {
    case Verb::kMatrix:
    case Verb::kDump:
      return graph;
    case Verb::kAddVertex:
      return add_vertex(graph, command.labels.at(0));
    case Verb::kDeleteVertex:
      return delete_vertex(graph, graph.require_index(command.labels.at(0)));
    case Verb::kAddEdges: {
      const std::size_t i = graph.require_index(command.labels.at(0));
      const std::size_t j = graph.require_index(command.labels.at(1));
      return add_edges(graph, i, j, command.count);
    }
    case Verb::kDeleteEdges: {
      const std::size_t i = graph.require_index(command.labels.at(0));
      const std::size_t j = graph.require_index(command.labels.at(1));
      return delete_edges(graph, i, j, command.count);
    }
    case Verb::kContract: {
      const std::size_t i = graph.require_index(command.labels.at(0));
      const std::size_t j = graph.require_index(command.labels.at(1));
      auto [next, contraction] = contract(graph, i, j);
      if (report) *report = std::move(contraction);
      return std::move(next);
    }
  }
  return graph;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream emitted;

  // Emitted output is flushed on every exit path after loading, so commands
  // that ran before a failure keep their MATRIX/DUMP output.
  auto flush = [&](int code) {
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
      file << emitted.str();
      file.flush();
      if (!file) {
        err << "error: cannot write output file " << *config.output_path << '\n';
        return static_cast<int>(kExitIo);
      }
    } else {
      out << emitted.str();
      out.flush();
    }
    return code;
  };

  const auto input_text = read_file(config.input_path);
  if (!input_text) {
    err << "error: cannot read input file " << config.input_path << '\n';
    return kExitIo;
  }
  std::string script_text;
  if (config.script_path) {
    auto text = read_file(*config.script_path);
    if (!text) {
      err << "error: cannot read script file " << *config.script_path << '\n';
      return kExitIo;
    }
    script_text = std::move(*text);
  }

  GraphState graph;
  try {
    graph = parse_graph_file(*input_text, config.format);
  } catch (const Error& e) {
    err << "error: " << config.input_path << ": " << e.what() << '\n';
    return kExitInputParse;
  }
  if (config.mode && *config.mode != graph.mode()) {
    err << "error: " << config.input_path << ": input line 1: mode is "
        << to_string(graph.mode()) << ", expected " << to_string(*config.mode)
        << '\n';
    return kExitInputParse;
  }
  if (config.orientation && *config.orientation != graph.orientation()) {
    err << "error: " << config.input_path << ": input line 1: orientation is "
        << to_string(graph.orientation()) << ", expected "
        << to_string(*config.orientation) << '\n';
    return kExitInputParse;
  }

  std::vector<Command> commands;
  try {
    commands = parse_script(script_text);
  } catch (const Error& e) {
    err << "error: " << config.script_path.value_or("<script>") << ": "
        << e.what() << '\n';
    return kExitScriptParse;
  }

  const bool trace = config.emit == Emit::kTrace;
  if (trace) emitted << "step 0 load\n" << dump_state(graph);

  for (std::size_t step = 0; step < commands.size(); ++step) {
    const Command& command = commands[step];
    ContractionReport report;
    try {
      graph = apply_command(graph, command, &report);
    } catch (const Error& e) {
      err << "error: script line " << command.line << ": " << to_string(command)
          << ": " << to_string(e.kind()) << ": " << e.what();
      if (!command.labels.empty()) err << " [vertices " << quoted_labels(command) << "]";
      err << '\n';
      return flush(kExitOperation);
    }
    if (command.verb == Verb::kMatrix) emitted << write_matrix(graph);
    if (command.verb == Verb::kDump) emitted << dump_state(graph);
    if (trace) {
      emitted << "step " << step + 1 << " line " << command.line << ' '
              << to_string(command) << '\n';
      if (command.verb == Verb::kContract) emitted << report_text(report);
      emitted << dump_state(graph);
    }
  }

  if (config.emit == Emit::kMatrix) emitted << write_matrix(graph);
  if (config.emit == Emit::kState) emitted << dump_state(graph);
  return flush(kExitOk);
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Graphs as occupation-number states: load, transform, emit."};
  app.name("fockgraph");

  RunConfig config;
  std::string format = "matrix";
  std::string emit = "matrix";
  std::string mode;
  std::string orientation;
  std::string script;
  std::string output;

  app.add_option("--input", config.input_path, "Graph file")->required();
  app.add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"matrix", "edges"}));
  app.add_option("--script", script, "Transformation script");
  app.add_option("--output", output, "Output path (default: standard output)");
  app.add_option("--emit", emit, "Final emission")
      ->check(CLI::IsMember({"matrix", "state", "trace"}));
  app.add_option("--mode", mode, "Require this mode in the input header")
      ->check(CLI::IsMember({"fermion", "boson"}));
  app.add_option("--orientation", orientation,
                 "Require this orientation in the input header")
      ->check(CLI::IsMember({"directed", "undirected"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.format = *parse_format(format);
  config.emit = *parse_emit(emit);
  if (!mode.empty()) config.mode = parse_mode(mode);
  if (!orientation.empty()) config.orientation = parse_orientation(orientation);
  if (!script.empty()) config.script_path = script;
  if (!output.empty()) config.output_path = output;
  return execute(config, out, err);
}

}  // namespace fockgraph
