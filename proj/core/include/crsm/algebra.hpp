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

// Idempotent structure of a closure: ordering of commuting idempotents, the
// left/right/diagonal equivalences, rectangular bands, and maximal subgroups.
//
// Conventions follow the left-to-right composition of the closure, so for
// idempotents a and b:
//
//   a L b  iff  ab = a and ba = b   (same column of the idempotent grid)
//   a R b  iff  ab = b and ba = a   (same row of the idempotent grid)

#ifndef CRSM_ALGEBRA_HPP_
#define CRSM_ALGEBRA_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "crsm/closure.hpp"
#include "crsm/transform.hpp"

namespace crsm {

  //! All e with ee = e, in canonical order.
  std::vector<element_index> idempotents(SemigroupClosure const& s);

  enum class Order {
    unordered,       // commuting, ez = ze is a third idempotent
    greater,         // e >= z
    less,            // z >= e
    equal,           // e == z
    non_commuting    // ez != ze
  };

  std::string to_string(Order o);

  //! Throws DomainError unless e and z are idempotent.
  Order order_invariants(SemigroupClosure const& s,
                         element_index           e,
                         element_index           z);

  //! Both sides of "z <= e iff range(z) is a subset of range(e)".
  struct RangeOrderingCheck {
    bool ordered;          // ez = ze = z
    bool range_contained;  // range(z) within range(e)

    bool consistent() const noexcept {
      return ordered == range_contained;
    }
  };

  //! Throws DomainError unless e and z are commuting idempotents.
  RangeOrderingCheck check_range_ordering(StateTransform const& e,
                                          StateTransform const& z);

  enum class Equivalence { L, R, D, none };

  std::string to_string(Equivalence e);

  //! L and R are the direct relations (L is reported when both hold, i.e.
  //! a == b). D holds when neither does but a and b are joined by a chain of
  //! L and R steps through idempotents of s. Throws DomainError unless both
  //! are idempotent.
  Equivalence equivalence(SemigroupClosure const& s,
                          element_index           a,
                          element_index           b);

  //! Idempotents arranged by R-class (rows) and L-class (columns), both in
  //! order of first appearance.
  struct IdempotentGrid {
    std::vector<element_index>                             idempotents;
    std::vector<std::vector<element_index>>                rows;
    std::vector<std::vector<element_index>>                cols;
    std::vector<std::vector<std::optional<element_index>>> cells;

    std::size_t number_of_rows() const noexcept {
      return rows.size();
    }

    std::size_t number_of_cols() const noexcept {
      return cols.size();
    }

    //! Every (row, col) cell holds an idempotent.
    bool is_full() const;

    //! Throws DomainError when e is not an idempotent of the grid.
    std::pair<std::size_t, std::size_t> cell_of(element_index e) const;

    element_index at(std::size_t row, std::size_t col) const;
  };

  IdempotentGrid idempotent_grid(SemigroupClosure const& s);

  //! Every element is idempotent and aba = a for all a, b.
  bool is_rectangular_band(SemigroupClosure const& s);

  //! ab = ba implies a = b.
  bool is_anti_commutative(SemigroupClosure const& s);

  //! True iff s is all-idempotent and the map e(i, j) -> (i, j) read off its
  //! idempotent grid is an isomorphism onto Lm x Rn, where
  //! (i, j)(k, l) = (i, l).
  bool is_rectangular_product(SemigroupClosure const& s);

  struct ElementPeriodicity {
    std::size_t   tail;
    std::size_t   period;
    element_index invariant;

    bool operator==(ElementPeriodicity const&) const = default;
  };

  //! Tail, period, and idempotent power of x, computed on the Cayley table.
  ElementPeriodicity element_periodicity(SemigroupClosure const& s,
                                         element_index           x);

  std::vector<ElementPeriodicity> periodicity_report(SemigroupClosure const& s);

  //! The group H_e of all periodic elements whose idempotent power is e.
  //! Members list the identity first, then the rest in canonical order.
  struct MaxSubgroup {
    element_index              identity;
    std::vector<element_index> members;

    std::size_t order() const noexcept {
      return members.size();
    }

    bool contains(element_index x) const;

    //! Position of x within members, or throws DomainError.
    std::size_t index_of(element_index x) const;
  };

  //! Throws DomainError unless e is idempotent. The group axioms are checked
  //! on the result, and when s is simple so is members == eSe; a failure
  //! raises InvariantViolation.
  MaxSubgroup max_subgroup(SemigroupClosure const& s, element_index e);

  //! Inverse of x inside the maximal subgroup containing it.
  element_index group_inverse(SemigroupClosure const& s, element_index x);

  //! A verified isomorphism G_b -> G_a given by the map attached to the
  //! equivalence of a and b: x -> ax (L), x -> xa (R), x -> axc (D), where c
  //! is the idempotent with bRc and cLa. In a closure whose sandwich entries
  //! are all the identity, axc = axa.
  struct SubgroupIsomorphism {
    Equivalence                                       kind;
    element_index                                     via;  // c for D, else a
    std::vector<std::pair<element_index, element_index>> mapping;
  };

  //! Throws DomainError when a and b are not equivalent idempotents and
  //! InvariantViolation when the map is not an isomorphism.
  SubgroupIsomorphism subgroup_isomorphism(SemigroupClosure const& s,
                                           element_index           a,
                                           element_index           b);

  //! Coarse invariants of an abstract group. Naming the group is out of reach
  //! in general, these are enough to tell small groups apart in reports.
  struct GroupSummary {
    std::size_t              order;
    bool                     abelian;
    std::vector<std::size_t> element_orders;  // sorted

    bool operator==(GroupSummary const&) const = default;
  };

  GroupSummary group_summary(SemigroupClosure const& s, MaxSubgroup const& g);

}  // namespace crsm

#endif  // CRSM_ALGEBRA_HPP_
