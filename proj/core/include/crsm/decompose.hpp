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

// Decomposition of simple (constant rank) closures into Rees coordinates
// (row, column, group element) with a sandwich matrix, and synthesis of the
// branch, reset and permutation machines those coordinates run on.
//
// With e(i, j) the idempotent in row i and column j of the idempotent grid
// and e = e(0, 0) the reference idempotent:
//
//   coords(x)  = (row of x, column of x, e x e)
//   P[j][i]    = e(0, j) e(i, 0)
//   x y        = (i(x), j(y), g(x) P[j(x)][i(y)] g(y))
//
// Row 0 and column 0 of P are the identity of G_e by construction.

#ifndef CRSM_DECOMPOSE_HPP_
#define CRSM_DECOMPOSE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "crsm/algebra.hpp"
#include "crsm/closure.hpp"
#include "crsm/machine.hpp"

namespace crsm {

  struct ReesCoordinates {
    std::size_t   row;
    std::size_t   col;
    element_index group_element;  // an element of the reference group

    bool operator==(ReesCoordinates const&) const = default;
  };

  enum class ProductKind { direct, semidirect };

  std::string to_string(ProductKind k);

  struct ReesDecomposition {
    std::size_t                  m;  // rows, the size of the left-copy part
    std::size_t                  n;  // columns, the size of the right-copy part
    element_index                reference;
    MaxSubgroup                  group;
    IdempotentGrid               grid;
    std::vector<ReesCoordinates> coords;  // indexed by element
    //! n x m, entries are elements of the reference group
    std::vector<std::vector<element_index>> sandwich;
    ProductKind                             kind;
    //! Every product of two idempotents is idempotent. Expected to hold
    //! exactly when kind is direct; both are reported so a disagreement shows.
    bool idempotents_closed;

    //! The element with the given coordinates.
    element_index element_at(ReesCoordinates const& c) const;

    //! Rees multiplication law on coordinates, evaluated with the closure's
    //! own group multiplication.
    ReesCoordinates multiply(SemigroupClosure const& s,
                             ReesCoordinates const&  x,
                             ReesCoordinates const&  y) const;
  };

  //! Throws PreconditionError unless s is simple, and InvariantViolation if
  //! the multiplication law fails for some pair.
  ReesDecomposition decompose(SemigroupClosure const& s);

  struct ComponentSet {
    Machine branch;       // m inputs, m + 1 states
    Machine reset;        // n inputs, n states
    Machine permutation;  // right-regular action of the reference group
  };

  //! Branch machine with m inputs: input i fixes 0..m-1 and sends the
  //! initial state m to i. For m == 1 a single-state machine.
  Machine branch_machine(std::size_t m);

  //! Reset machine with n inputs: input j is the constant map to j.
  Machine reset_machine(std::size_t n);

  //! Right-regular representation of g on |g| states (state k is
  //! g.members[k]), one input per element of a generating set of g.
  Machine permutation_machine(SemigroupClosure const& s, MaxSubgroup const& g);

  //! A small generating set of g, chosen greedily in member order.
  std::vector<element_index> group_generators(SemigroupClosure const& s,
                                              MaxSubgroup const&      g);

  ComponentSet synthesize_components(SemigroupClosure const&  s,
                                     ReesDecomposition const& d);

  //! Closure checks on synthesized components: branch closes to Lm, reset to
  //! Rn, permutation to a group isomorphic to G via the regular action.
  struct ComponentCheck {
    bool branch;
    bool reset;
    bool permutation;

    bool all() const noexcept {
      return branch && reset && permutation;
    }
  };

  ComponentCheck check_components(SemigroupClosure const&  s,
                                  ReesDecomposition const& d,
                                  ComponentSet const&      c);

  struct VerificationReport {
    bool        passed;
    std::size_t m;
    std::size_t n;
    std::size_t group_order;
    //! First failing pair (lowest x, then y) when the tables disagree.
    std::optional<std::pair<element_index, element_index>> first_mismatch;
    std::string                                            message;
  };

  //! Rebuilds the abstract semigroup on triples (i, j, g) from the sandwich
  //! matrix and compares its Cayley table with that of s through the
  //! coordinate bijection. Never throws on a failed comparison.
  VerificationReport recompose_verify(SemigroupClosure const&  s,
                                      ReesDecomposition const& d);

  struct BasicType {
    enum class Label { C2, U2, H2, L2, R2, Cp, other };

    Label       label;
    std::size_t order;

    //! "C2", ..., "C5" for a cyclic group of prime order 5, "other".
    std::string name() const;

    bool operator==(BasicType const&) const = default;
  };

  //! Matches order-2 closures against the five basic tables, and prime order
  //! periodic cyclic closures against Cp.
  BasicType classify_basic(SemigroupClosure const& s);

  struct Decomposition {
    ReesDecomposition  rees;
    ComponentSet       components;
    ComponentCheck     component_check;
    VerificationReport verification;
  };

  struct MachineReport {
    SemigroupClosure                closure;
    RankSpectrum                    spectrum;
    bool                            simple;
    bool                            constant_rank;
    IdempotentGrid                  grid;
    std::vector<ElementPeriodicity> periodicity;
    BasicType                       basic_type;
    //! Present iff the closure is simple.
    std::optional<Decomposition> decomposition;
    //! Elements of minimum rank; present iff the closure is not simple.
    std::optional<std::vector<element_index>> minimal_ideal;
  };

  //! generate_closure, then either the full decomposition (simple closures)
  //! or the diagnostic fields. Throws BudgetExceeded from the enumeration.
  MachineReport decompose_machine(Machine const& m,
                                  std::size_t    limit = default_closure_limit);

}  // namespace crsm

#endif  // CRSM_DECOMPOSE_HPP_
