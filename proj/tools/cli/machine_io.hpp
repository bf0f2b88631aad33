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

// Machine files.
//
// Text form (UTF-8, '#' starts a comment, blank lines are ignored):
//
//   states 3
//   input a: 0 1 1
//   input b: 0 1 0
//
// Entry k of an input line is the next state of state k. The JSON form, used
// for files ending in ".json", carries the same content:
//
//   {"states": 3, "inputs": {"a": [0, 1, 1], "b": [0, 1, 0]}}
//
// with an optional "state_names" array.

#ifndef CRSM_TOOLS_CLI_MACHINE_IO_HPP_
#define CRSM_TOOLS_CLI_MACHINE_IO_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

#include "crsm/machine.hpp"

namespace crsm::cli {

  class ParseError : public std::runtime_error {
   public:
    enum class Kind { syntax, out_of_range, duplicate_label, no_inputs, io };

    //! line and column are 1-based; 0 means unknown.
    ParseError(Kind kind, std::size_t line, std::size_t column,
               std::string const& what);

    Kind kind() const noexcept {
      return _kind;
    }

    std::size_t line() const noexcept {
      return _line;
    }

    std::size_t column() const noexcept {
      return _column;
    }

   private:
    Kind        _kind;
    std::size_t _line;
    std::size_t _column;
  };

  Machine parse_machine(std::string const& text);
  Machine parse_machine_json(std::string const& text);

  //! Reads a machine file, picking the JSON reader for ".json" files.
  Machine load_machine(std::string const& path);

  //! Text form. Throws DomainError when a label cannot be written (contains
  //! whitespace, ':' or '#'). State names are not part of the text form.
  std::string serialize_machine(Machine const& m);
  std::string serialize_machine_json(Machine const& m);

}  // namespace crsm::cli

#endif  // CRSM_TOOLS_CLI_MACHINE_IO_HPP_
