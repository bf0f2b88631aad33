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

// The sequential closure of a machine: every distinct transform produced by a
// non-empty input word, with its Cayley table and shortest witness words.

#ifndef CRSM_CLOSURE_HPP_
#define CRSM_CLOSURE_HPP_

#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t
#include <map>            // for map
#include <optional>       // for optional
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "crsm/machine.hpp"
#include "crsm/transform.hpp"

namespace crsm {

  using element_index = std::size_t;
  using word_type     = std::vector<std::size_t>;

  inline constexpr std::size_t default_closure_limit = 1'000'000;

  //! Hard cap on closure size from the |S| x |S| table (1 GiB at the cap).
  inline constexpr std::size_t max_closure_table_size = std::size_t{1} << 14;

  class SemigroupClosure {
   public:
    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::size_t number_of_states() const noexcept {
      return _elements.front().size();
    }

    StateTransform const& element(element_index i) const {
      return _elements.at(i);
    }

    std::vector<StateTransform> const& elements() const noexcept {
      return _elements;
    }

    //! Index of elements[i] composed with elements[j] (i first).
    element_index product(element_index i, element_index j) const {
      return _cayley[i * _elements.size() + j];
    }

    //! Length-then-lexicographically least generator word for element i.
    word_type const& witness(element_index i) const {
      return _witness.at(i);
    }

    //! Element index of each machine generator, in generator order. Two
    //! generators with the same transform share an index.
    std::vector<element_index> const& generator_indices() const noexcept {
      return _generator_indices;
    }

    std::vector<std::string> const& generator_labels() const noexcept {
      return _generator_labels;
    }

    std::size_t rank(element_index i) const {
      return _ranks.at(i);
    }

    std::optional<element_index> position(StateTransform const& x) const;

    //! Witness word rendered with generator labels. Labels are concatenated
    //! when all are one character long and joined by '.' otherwise.
    std::string witness_string(element_index i) const;

   private:
    friend SemigroupClosure generate_closure(Machine const&, std::size_t);

    SemigroupClosure() = default;

    std::vector<StateTransform>                       _elements;
    std::vector<std::uint32_t>                        _cayley;
    std::vector<word_type>                            _witness;
    std::vector<element_index>                        _generator_indices;
    std::vector<std::string>                          _generator_labels;
    std::vector<std::size_t>                          _ranks;
    std::unordered_map<StateTransform, element_index> _index;
  };

  //! Breadth-first enumeration by word length. Throws BudgetExceeded when
  //! more than `limit` distinct elements appear, and TableTooLarge (also a
  //! BudgetExceeded) past max_closure_table_size.
  SemigroupClosure generate_closure(Machine const& m,
                                    std::size_t    limit
                                    = default_closure_limit);

  struct RankSpectrum {
    //! rank -> number of elements of that rank
    std::map<std::size_t, std::size_t> counts;
    std::size_t                        min_rank = 0;
    std::size_t                        max_rank = 0;

    bool operator==(RankSpectrum const&) const = default;
  };

  RankSpectrum rank_spectrum(SemigroupClosure const& s);

  //! "{2:1, 1:1}", highest rank first.
  std::string to_string(RankSpectrum const& spectrum);

  //! All elements of rank at most k, in canonical order. The result is checked
  //! to be a two-sided ideal; InvariantViolation otherwise.
  std::vector<element_index> ideal_at_most(SemigroupClosure const& s,
                                           std::size_t             k);

  //! S^1 x S^1, the smallest ideal containing x, in canonical order.
  std::vector<element_index> principal_ideal(SemigroupClosure const& s,
                                             element_index           x);

  //! True iff every principal ideal is the whole closure.
  bool is_simple(SemigroupClosure const& s);

  bool is_constant_rank(SemigroupClosure const& s);

}  // namespace crsm

#endif  // CRSM_CLOSURE_HPP_
