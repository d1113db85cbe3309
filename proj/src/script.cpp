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

#include <charconv>
#include <string>

#include "fockgraph/errors.hpp"
#include "fockgraph/script.hpp"

namespace fockgraph {

namespace {

struct VerbShape {
  std::string_view name;
  Verb verb;
  std::size_t labels;
  bool has_count;
};

constexpr VerbShape kVerbs[] = {
    {"ADDV", Verb::kAddVertex, 1, false},
    {"DELV", Verb::kDeleteVertex, 1, false},
    {"ADDE", Verb::kAddEdges, 2, true},
    {"DELE", Verb::kDeleteEdges, 2, true},
    {"CONTRACT", Verb::kContract, 2, false},
    {"MATRIX", Verb::kMatrix, 0, false},
    {"DUMP", Verb::kDump, 0, false},
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  raise(ErrorKind::kScriptParse,
        "script line " + std::to_string(line) + ": " + message);
}

}  // namespace

std::string_view verb_name(Verb verb) {
  for (const auto& shape : kVerbs) {
    if (shape.verb == verb) return shape.name;
  }
  return "?";
}

std::string to_string(const Command& command) {
  std::string out(verb_name(command.verb));
  for (const auto& label : command.labels) out += " " + label;
  if (command.verb == Verb::kAddEdges || command.verb == Verb::kDeleteEdges) {
    out += " " + std::to_string(command.count);
  }
  return out;
}

bool parse_count(std::string_view token, Occupation& out) {
  if (token.empty() || token.front() == '+' || token.front() == '-') {
    return false;
  }
  unsigned long value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return false;
  if (value < 1 || value > kMaxCount) return false;
  out = static_cast<Occupation>(value);
  return true;
}

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) tokens.emplace_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    pos = end + 1;
  }
  return lines;
}

std::vector<Command> parse_script(std::string_view text) {
  std::vector<Command> commands;
  const std::vector<std::string> lines = split_lines(text);
  for (std::size_t index = 0; index < lines.size(); ++index) {
    const std::size_t line_no = index + 1;
    std::string_view line = lines[index];
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string> tokens = split_tokens(line);
    if (tokens.empty()) continue;

    const VerbShape* shape = nullptr;
    for (const auto& candidate : kVerbs) {
      if (candidate.name == tokens.front()) shape = &candidate;
    }
    if (shape == nullptr) fail(line_no, "unknown verb \"" + tokens.front() + "\"");

    const std::size_t arity = shape->labels + (shape->has_count ? 1 : 0);
    if (tokens.size() - 1 != arity) {
      fail(line_no, std::string(shape->name) + " takes " +
                        std::to_string(arity) + " argument(s), got " +
                        std::to_string(tokens.size() - 1));
    }

    Command command;
    command.verb = shape->verb;
    command.line = line_no;
    command.labels.assign(tokens.begin() + 1,
                          tokens.begin() + 1 + static_cast<long>(shape->labels));
    if (shape->has_count && !parse_count(tokens.back(), command.count)) {
      fail(line_no, "count must be an integer in [1, " +
                        std::to_string(kMaxCount) + "], got \"" +
                        tokens.back() + "\"");
    }
    commands.push_back(std::move(command));
  }
  return commands;
}

}  // namespace fockgraph
