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

#ifndef CRSM_TOOLS_CLI_APP_HPP_
#define CRSM_TOOLS_CLI_APP_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace crsm::cli {

  enum ExitStatus : int {
    exit_ok           = 0,
    exit_input_error  = 1,  // unreadable file, parse error, bad arguments
    exit_precondition = 2,  // closure not simple where a decomposition is needed
    exit_budget       = 3,  // closure larger than --max-closure
    exit_internal     = 4   // a library self-check failed
  };

  //! Runs `crsm <analyze|decompose|classify|verify> <file> [--json]
  //! [--max-closure N]`. `args` excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace crsm::cli

#endif  // CRSM_TOOLS_CLI_APP_HPP_
