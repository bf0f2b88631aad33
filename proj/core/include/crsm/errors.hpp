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

#ifndef CRSM_ERRORS_HPP_
#define CRSM_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error, logic_error
#include <string>     // for string

namespace crsm {

  //! Transforms (or machines) of different state counts were combined.
  class SizeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! An argument is outside the domain of an operation, e.g. a
  //! non-idempotent element passed where an idempotent is required.
  class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  //! A structural precondition does not hold (e.g. decomposing a closure
  //! that is not simple).
  class PreconditionError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  //! A self-check inside the library failed. Seeing one of these means a
  //! bug, or an input that violates a documented precondition.
  class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  //! Closure enumeration produced more elements than allowed.
  class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(std::size_t limit, std::size_t partial_count)
        : std::runtime_error("closure exceeds the limit of "
                             + std::to_string(limit) + " elements ("
                             + std::to_string(partial_count)
                             + " enumerated so far)"),
          _limit(limit),
          _partial_count(partial_count) {}

    std::size_t limit() const noexcept {
      return _limit;
    }

    std::size_t partial_count() const noexcept {
      return _partial_count;
    }

   protected:
    BudgetExceeded(std::string const& what,
                   std::size_t        limit,
                   std::size_t        partial_count)
        : std::runtime_error(what),
          _limit(limit),
          _partial_count(partial_count) {}

   private:
    std::size_t _limit;
    std::size_t _partial_count;
  };

  //! The closure is within the element limit but too large for a full
  //! multiplication table.
  class TableTooLarge : public BudgetExceeded {
   public:
    TableTooLarge(std::size_t limit, std::size_t partial_count)
        : BudgetExceeded("closure has more than " + std::to_string(limit)
                             + " elements, too many for a multiplication "
                               "table ("
                             + std::to_string(partial_count)
                             + " enumerated so far)",
                         limit,
                         partial_count) {}
  };

}  // namespace crsm

#endif  // CRSM_ERRORS_HPP_
