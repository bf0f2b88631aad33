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

#include "app.hpp"

#include <algorithm>  // for reverse
#include <ostream>    // for ostream

#include "CLI11.hpp"
#include "crsm/errors.hpp"
#include "json.hpp"
#include "machine_io.hpp"
#include "report.hpp"

namespace crsm::cli {

  namespace {
    struct Options {
      std::string file;
      bool        json        = false;
      std::size_t max_closure = default_closure_limit;
    };

    void print(std::ostream& out, AnalysisReport const& report, bool json) {
      if (json) {
        out << nlohmann::json(report).dump(2) << '\n';
      } else {
        out << to_text(report);
      }
    }

    // simple and constant rank must agree on every closure
    bool consistent(MachineReport const& r, std::ostream& err) {
      if (r.simple != r.constant_rank) {
        err << "internal error: simple = " << std::boolalpha << r.simple
            << " but constant rank = " << r.constant_rank << '\n';
        return false;
      }
      return true;
    }

    int analyze(Options const& opts, std::ostream& out, std::ostream& err) {
      auto const m = load_machine(opts.file);
      auto const r = decompose_machine(m, opts.max_closure);
      print(out, make_report(m, r), opts.json);
      return consistent(r, err) ? exit_ok : exit_internal;
    }

    int decompose(Options const& opts, std::ostream& out, std::ostream& err) {
      auto const m = load_machine(opts.file);
      auto const r = decompose_machine(m, opts.max_closure);
      if (!consistent(r, err)) {
        return exit_internal;
      }
      if (!r.simple) {
        err << "closure is not simple: rank spectrum " << to_string(r.spectrum)
            << '\n';
        return exit_precondition;
      }
      print(out, make_report(m, r), opts.json);
      return exit_ok;
    }

    int classify(Options const& opts, std::ostream& out, std::ostream&) {
      auto const m    = load_machine(opts.file);
      auto const s    = generate_closure(m, opts.max_closure);
      auto const type = classify_basic(s);
      if (opts.json) {
        out << nlohmann::json{{"basic_type", type.name()},
                              {"closure_size", s.size()}}
                   .dump(2)
            << '\n';
      } else {
        out << type.name() << '\n';
      }
      return exit_ok;
    }

    int verify(Options const& opts, std::ostream& out, std::ostream& err) {
      auto const m = load_machine(opts.file);
      auto const r = decompose_machine(m, opts.max_closure);
      if (!consistent(r, err)) {
        return exit_internal;
      }
      if (!r.simple) {
        err << "closure is not simple: rank spectrum " << to_string(r.spectrum)
            << '\n';
        return exit_precondition;
      }
      auto const& v  = r.decomposition->verification;
      bool const  ok = v.passed && r.decomposition->component_check.all();
      if (opts.json) {
        nlohmann::json j{{"passed", ok},
                         {"m", v.m},
                         {"n", v.n},
                         {"group_order", v.group_order},
                         {"components_verified",
                          r.decomposition->component_check.all()},
                         {"message", v.message}};
        if (v.first_mismatch) {
          j["first_mismatch"] = {v.first_mismatch->first,
                                 v.first_mismatch->second};
        }
        out << j.dump(2) << '\n';
      } else {
        out << (ok ? "pass" : "FAIL") << ": " << v.message << '\n';
      }
      if (!ok) {
        err << "decomposition failed verification\n";
        return exit_internal;
      }
      return exit_ok;
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Sequential closure analysis and decomposition of constant "
                 "rank state machines",
                 "crsm"};
    app.require_subcommand(1);
    Options opts;

    struct Command {
      char const* name;
      char const* help;
      int (*action)(Options const&, std::ostream&, std::ostream&);
    };
    Command const commands[] = {
        {"analyze", "closure and structure report", analyze},
        {"decompose",
         "full decomposition (exit 2 when the closure is not simple)",
         decompose},
        {"classify", "basic type of the closure", classify},
        {"verify", "decompose and check by recomposition", verify}};
    for (auto const& c : commands) {
      auto* sub = app.add_subcommand(c.name, c.help);
      sub->add_option("file", opts.file, "machine file")
          ->required()
          ->check(CLI::ExistingFile);
      sub->add_flag("--json", opts.json, "structured output");
      sub->add_option("--max-closure",
                      opts.max_closure,
                      "maximum number of closure elements")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err) == 0 ? exit_ok : exit_input_error;
    }

    try {
      for (auto const& c : commands) {
        if (app.got_subcommand(c.name)) {
          return c.action(opts, out, err);
        }
      }
    } catch (ParseError const& e) {
      err << opts.file << (e.line() == 0 ? ": " : ":") << e.what() << '\n';
      return exit_input_error;
    } catch (BudgetExceeded const& e) {
      err << e.what() << '\n';
      return exit_budget;
    } catch (PreconditionError const& e) {
      err << e.what() << '\n';
      return exit_precondition;
    } catch (InvariantViolation const& e) {
      err << "internal error: " << e.what() << '\n';
      return exit_internal;
    } catch (std::exception const& e) {
      err << e.what() << '\n';
      return exit_input_error;
    }
    return exit_input_error;
  }

}  // namespace crsm::cli
