// Copyright 2026 The crsm Authors
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

#include "machine_io.hpp"

#include <algorithm>      // for all_of, min
#include <cctype>         // for isspace
#include <charconv>       // for from_chars
#include <fstream>        // for ifstream
#include <optional>       // for optional
#include <sstream>        // for ostringstream
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "crsm/errors.hpp"
#include "json.hpp"

namespace crsm::cli {

  ParseError::ParseError(Kind               kind,
                         std::size_t        line,
                         std::size_t        column,
                         std::string const& what)
      : std::runtime_error(line == 0 ? what
                                     : std::to_string(line) + ":"
                                           + std::to_string(column) + ": "
                                           + what),
        _kind(kind),
        _line(line),
        _column(column) {}

  namespace {
    struct Token {
      std::string text;
      std::size_t column;  // 1-based
    };

    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    // Splits [first, last) of a line on whitespace.
    std::vector<Token> tokenize(std::string const& line,
                                std::size_t        first,
                                std::size_t        last) {
      std::vector<Token> tokens;
      std::size_t        i = first;
      while (i < last) {
        while (i < last && is_space(line[i])) {
          ++i;
        }
        std::size_t const start = i;
        while (i < last && !is_space(line[i])) {
          ++i;
        }
        if (i > start) {
          tokens.push_back({line.substr(start, i - start), start + 1});
        }
      }
      return tokens;
    }

    std::optional<std::size_t> to_number(std::string const& s) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
      }
      return value;
    }

    bool is_valid_label(std::string const& label) {
      if (label.empty()) {
        return false;
      }
      for (char c : label) {
        if (is_space(c) || c == ':' || c == '#') {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Machine parse_machine(std::string const& text) {
    using Kind = ParseError::Kind;
    std::optional<std::size_t>      n;
    std::size_t                     states_line = 0;
    std::vector<Generator>          generators;
    std::unordered_set<std::string> labels;

    std::istringstream in(text);
    std::string        line;
    std::size_t        line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      auto const end    = std::min(line.find('#'), line.size());
      auto const tokens = tokenize(line, 0, end);
      if (tokens.empty()) {
        continue;
      }
      if (!n) {
        if (tokens[0].text != "states") {
          throw ParseError(Kind::syntax, line_no, tokens[0].column,
                           "expected 'states <n>'");
        }
        if (tokens.size() != 2) {
          throw ParseError(Kind::syntax, line_no,
                           tokens.size() < 2 ? end + 1 : tokens[2].column,
                           "expected exactly one state count");
        }
        auto value = to_number(tokens[1].text);
        if (!value || *value == 0) {
          throw ParseError(Kind::syntax, line_no, tokens[1].column,
                           "state count must be a positive integer, got '"
                               + tokens[1].text + "'");
        }
        n           = value;
        states_line = line_no;
        continue;
      }
      if (tokens[0].text != "input") {
        throw ParseError(Kind::syntax, line_no, tokens[0].column,
                         "expected 'input <label>: <states>'");
      }
      // label runs from after the keyword up to the first ':'
      auto const after_keyword = tokens[0].column - 1 + tokens[0].text.size();
      auto const colon         = line.find(':', after_keyword);
      if (colon == std::string::npos || colon >= end) {
        throw ParseError(Kind::syntax, line_no, after_keyword + 1,
                         "missing ':' after the input label");
      }
      auto const label_tokens = tokenize(line, after_keyword, colon);
      if (label_tokens.size() != 1 || !is_valid_label(label_tokens[0].text)) {
        throw ParseError(Kind::syntax, line_no, after_keyword + 1,
                         "expected a single input label before ':'");
      }
      auto const& label = label_tokens[0];
      if (!labels.insert(label.text).second) {
        throw ParseError(Kind::duplicate_label, line_no, label.column,
                         "duplicate input label '" + label.text + "'");
      }
      auto const entries = tokenize(line, colon + 1, end);
      if (entries.size() != *n) {
        throw ParseError(Kind::syntax, line_no,
                         entries.size() > *n ? entries[*n].column : end + 1,
                         "input '" + label.text + "' lists "
                             + std::to_string(entries.size())
                             + " next states, expected " + std::to_string(*n));
      }
      std::vector<state_type> image;
      for (auto const& entry : entries) {
        auto value = to_number(entry.text);
        if (!value) {
          throw ParseError(Kind::syntax, line_no, entry.column,
                           "expected a state index, got '" + entry.text + "'");
        }
        if (*value >= *n) {
          throw ParseError(Kind::out_of_range, line_no, entry.column,
                           "state " + entry.text + " out of range [0, "
                               + std::to_string(*n) + ")");
        }
        image.push_back(static_cast<state_type>(*value));
      }
      generators.push_back({label.text, StateTransform(std::move(image))});
    }
    if (!n) {
      throw ParseError(Kind::syntax, line_no + 1, 1,
                       "missing 'states <n>' line");
    }
    if (generators.empty()) {
      throw ParseError(Kind::no_inputs, states_line, 1,
                       "machine has no input lines");
    }
    return Machine(std::move(generators));
  }

  Machine parse_machine_json(std::string const& text) {
    using Kind = ParseError::Kind;
    using json = nlohmann::ordered_json;
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      // translate the byte offset into line and column
      std::size_t line = 1, column = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      throw ParseError(Kind::syntax, line, column, "invalid JSON");
    }
    if (!doc.is_object() || !doc.contains("states")
        || !doc["states"].is_number_unsigned() || doc["states"] == 0) {
      throw ParseError(Kind::syntax, 0, 0,
                       "expected a positive integer under \"states\"");
    }
    auto const n = doc["states"].get<std::size_t>();
    if (!doc.contains("inputs") || !doc["inputs"].is_object()) {
      throw ParseError(Kind::syntax, 0, 0,
                       "expected an object under \"inputs\"");
    }
    if (doc["inputs"].empty()) {
      throw ParseError(Kind::no_inputs, 0, 0, "machine has no inputs");
    }
    std::vector<Generator> generators;
    for (auto const& [label, entries] : doc["inputs"].items()) {
      if (!is_valid_label(label)) {
        throw ParseError(Kind::syntax, 0, 0,
                         "invalid input label '" + label + "'");
      }
      if (!entries.is_array() || entries.size() != n) {
        throw ParseError(Kind::syntax, 0, 0,
                         "input '" + label + "' must list " + std::to_string(n)
                             + " next states");
      }
      std::vector<state_type> image;
      for (auto const& q : entries) {
        if (!q.is_number_unsigned()) {
          throw ParseError(Kind::syntax, 0, 0,
                           "input '" + label + "' has a non-state entry");
        }
        if (q.get<std::size_t>() >= n) {
          throw ParseError(Kind::out_of_range, 0, 0,
                           "state " + q.dump() + " out of range [0, "
                               + std::to_string(n) + ")");
        }
        image.push_back(q.get<state_type>());
      }
      generators.push_back({label, StateTransform(std::move(image))});
    }
    if (doc.contains("state_names")) {
      auto const& names = doc["state_names"];
      if (!names.is_array() || names.size() != n
          || !std::all_of(names.begin(), names.end(), [](auto const& x) {
               return x.is_string();
             })) {
        throw ParseError(Kind::syntax, 0, 0,
                         "\"state_names\" must list " + std::to_string(n)
                             + " strings");
      }
      return Machine(names.get<std::vector<std::string>>(),
                     std::move(generators));
    }
    return Machine(std::move(generators));
  }

  Machine load_machine(std::string const& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      throw ParseError(ParseError::Kind::io, 0, 0,
                       "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    auto const json_file = path.size() >= 5
                           && path.compare(path.size() - 5, 5, ".json") == 0;
    return json_file ? parse_machine_json(buffer.str())
                     : parse_machine(buffer.str());
  }

  std::string serialize_machine(Machine const& m) {
    std::ostringstream os;
    os << "states " << m.number_of_states() << '\n';
    for (auto const& g : m.generators()) {
      if (!is_valid_label(g.label)) {
        throw DomainError("input label '" + g.label
                          + "' cannot be written to a machine file");
      }
      os << "input " << g.label << ':';
      for (auto q : g.transform.image()) {
        os << ' ' << q;
      }
      os << '\n';
    }
    return os.str();
  }

  std::string serialize_machine_json(Machine const& m) {
    nlohmann::ordered_json doc;
    doc["states"] = m.number_of_states();
    doc["inputs"] = nlohmann::ordered_json::object();
    for (auto const& g : m.generators()) {
      doc["inputs"][g.label]
          = std::vector<state_type>(g.transform.image().begin(),
                                    g.transform.image().end());
    }
    doc["state_names"] = m.state_names();
    return doc.dump(2) + "\n";
  }

}  // namespace crsm::cli
