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

#include "crsm/closure.hpp"

#include <algorithm>  // for all_of, any_of
#include <sstream>    // for ostringstream

#include "crsm/errors.hpp"

namespace crsm {

  namespace {
    constexpr element_index no_parent = static_cast<element_index>(-1);
  }  // namespace

  std::optional<element_index> SemigroupClosure::position(
      StateTransform const& x) const {
    auto it = _index.find(x);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::string SemigroupClosure::witness_string(element_index i) const {
    bool const short_labels
        = std::all_of(_generator_labels.begin(),
                      _generator_labels.end(),
                      [](auto const& label) { return label.size() == 1; });
    std::string result;
    for (auto g : witness(i)) {
      if (!short_labels && !result.empty()) {
        result += '.';
      }
      result += _generator_labels[g];
    }
    return result;
  }

  SemigroupClosure generate_closure(Machine const& m, std::size_t limit) {
    if (limit == 0) {
      throw DomainError("the closure limit must be at least 1");
    }
    SemigroupClosure s;
    std::vector<element_index> parent;    // witness minus its last letter
    std::vector<std::size_t>   last;      // last letter of the witness
    auto add = [&](StateTransform x, word_type w, element_index from) {
      auto [it, inserted] = s._index.try_emplace(x, s._elements.size());
      if (inserted) {
        if (s._elements.size() == limit) {
          throw BudgetExceeded(limit, s._elements.size() + 1);
        }
        if (s._elements.size() == max_closure_table_size) {
          throw TableTooLarge(max_closure_table_size,
                              s._elements.size() + 1);
        }
        parent.push_back(from);
        last.push_back(w.back());
        s._elements.push_back(std::move(x));
        s._witness.push_back(std::move(w));
      }
      return it->second;
    };

    auto const                         k = m.number_of_generators();
    std::vector<StateTransform const*> gens;
    for (std::size_t g = 0; g < k; ++g) {
      s._generator_labels.push_back(m.generator(g).label);
      gens.push_back(&m.generator(g).transform);
      s._generator_indices.push_back(
          add(m.generator(g).transform, {g}, no_parent));
    }

    // Elements are appended in word-length order, so scanning them in order
    // visits every frontier before the next one. right[i * k + g] is the
    // index of element i followed by generator g.
    std::vector<element_index> right;
    for (element_index i = 0; i < s._elements.size(); ++i) {
      for (std::size_t g = 0; g < k; ++g) {
        auto w = s._witness[i];
        w.push_back(g);
        right.push_back(add(compose(s._elements[i], *gens[g]), std::move(w), i));
      }
    }

    // x * (w g) = (x * w) g, filled in witness order so x * w is known
    auto const n = s._elements.size();
    s._cayley.resize(n * n);
    for (element_index j = 0; j < n; ++j) {
      for (element_index i = 0; i < n; ++i) {
        auto const xw = parent[j] == no_parent ? i : s._cayley[i * n + parent[j]];
        s._cayley[i * n + j] = static_cast<std::uint32_t>(right[xw * k + last[j]]);
      }
    }
    s._ranks.reserve(n);
    for (auto const& x : s._elements) {
      s._ranks.push_back(crsm::rank(x));
    }
    return s;
  }

  RankSpectrum rank_spectrum(SemigroupClosure const& s) {
    RankSpectrum result;
    for (element_index i = 0; i < s.size(); ++i) {
      ++result.counts[s.rank(i)];
    }
    result.min_rank = result.counts.begin()->first;
    result.max_rank = result.counts.rbegin()->first;
    return result;
  }

  std::string to_string(RankSpectrum const& spectrum) {
    std::ostringstream os;
    os << '{';
    for (auto it = spectrum.counts.rbegin(); it != spectrum.counts.rend();
         ++it) {
      os << (it == spectrum.counts.rbegin() ? "" : ", ") << it->first << ':'
         << it->second;
    }
    os << '}';
    return os.str();
  }

  std::vector<element_index> ideal_at_most(SemigroupClosure const& s,
                                           std::size_t             k) {
    std::vector<bool>          member(s.size(), false);
    std::vector<element_index> result;
    for (element_index i = 0; i < s.size(); ++i) {
      if (s.rank(i) <= k) {
        member[i] = true;
        result.push_back(i);
      }
    }
    for (auto z : result) {
      for (element_index x = 0; x < s.size(); ++x) {
        if (!member[s.product(x, z)] || !member[s.product(z, x)]) {
          throw InvariantViolation("elements of rank <= " + std::to_string(k)
                                   + " do not form an ideal");
        }
      }
    }
    return result;
  }

  namespace {
    // Elements reachable from `start` by multiplying with generators on the
    // left and on the right (or, with `reverse`, the elements from which
    // `start` is reachable). Every element is a product of generators, so
    // the forward set is exactly S^1 start S^1.
    std::vector<bool> reachable(SemigroupClosure const& s,
                                element_index           start,
                                bool                    reverse) {
      std::vector<std::vector<element_index>> edges;
      if (reverse) {
        edges.resize(s.size());
        for (element_index x = 0; x < s.size(); ++x) {
          for (auto g : s.generator_indices()) {
            edges[s.product(x, g)].push_back(x);
            edges[s.product(g, x)].push_back(x);
          }
        }
      }
      std::vector<bool>          seen(s.size(), false);
      std::vector<element_index> stack{start};
      seen[start] = true;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        auto visit = [&](element_index y) {
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        };
        if (reverse) {
          for (auto y : edges[x]) {
            visit(y);
          }
        } else {
          for (auto g : s.generator_indices()) {
            visit(s.product(x, g));
            visit(s.product(g, x));
          }
        }
      }
      return seen;
    }
  }  // namespace

  std::vector<element_index> principal_ideal(SemigroupClosure const& s,
                                             element_index           x) {
    if (x >= s.size()) {
      throw DomainError("element " + std::to_string(x)
                        + " is not in the closure");
    }
    auto const                 seen = reachable(s, x, false);
    std::vector<element_index> result;
    for (element_index y = 0; y < s.size(); ++y) {
      if (seen[y]) {
        result.push_back(y);
      }
    }
    return result;
  }

  bool is_simple(SemigroupClosure const& s) {
    // Every principal ideal is S iff the two-sided multiplication graph is
    // strongly connected, i.e. element 0 reaches everything and everything
    // reaches element 0.
    auto all = [](std::vector<bool> const& v) {
      return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    };
    return all(reachable(s, 0, false)) && all(reachable(s, 0, true));
  }

  bool is_constant_rank(SemigroupClosure const& s) {
    auto const spectrum = rank_spectrum(s);
    return spectrum.min_rank == spectrum.max_rank;
  }

}  // namespace crsm
