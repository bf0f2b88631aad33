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

#include "crsm/algebra.hpp"

#include <algorithm>      // for find, includes, sort
#include <deque>          // for deque
#include <unordered_map>  // for unordered_map

#include "crsm/errors.hpp"

namespace crsm {

  namespace {
    bool is_idempotent_element(SemigroupClosure const& s, element_index e) {
      return s.product(e, e) == e;
    }

    void require_idempotent(SemigroupClosure const& s, element_index e) {
      if (e >= s.size()) {
        throw DomainError("element " + std::to_string(e)
                          + " is not in the closure");
      }
      if (!is_idempotent_element(s, e)) {
        throw DomainError("element " + std::to_string(e)
                          + " is not idempotent");
      }
    }

    bool left_equivalent(SemigroupClosure const& s,
                         element_index           a,
                         element_index           b) {
      return s.product(a, b) == a && s.product(b, a) == b;
    }

    bool right_equivalent(SemigroupClosure const& s,
                          element_index           a,
                          element_index           b) {
      return s.product(a, b) == b && s.product(b, a) == a;
    }

    // Groups idempotents into the classes of an equivalence relation, in
    // order of first appearance.
    template <typename Relation>
    std::vector<std::vector<element_index>> classes_of(
        std::vector<element_index> const& ids,
        Relation&&                        related) {
      std::vector<std::vector<element_index>> result;
      for (auto e : ids) {
        auto it = std::find_if(result.begin(), result.end(), [&](auto& cls) {
          return related(cls.front(), e);
        });
        if (it == result.end()) {
          result.push_back({e});
        } else {
          it->push_back(e);
        }
      }
      return result;
    }
  }  // namespace

  std::vector<element_index> idempotents(SemigroupClosure const& s) {
    std::vector<element_index> result;
    for (element_index e = 0; e < s.size(); ++e) {
      if (is_idempotent_element(s, e)) {
        result.push_back(e);
      }
    }
    return result;
  }

  std::string to_string(Order o) {
    switch (o) {
      case Order::unordered:
        return "unordered";
      case Order::greater:
        return "e>=z";
      case Order::less:
        return "z>=e";
      case Order::equal:
        return "equal";
      case Order::non_commuting:
        return "non-commuting";
    }
    return "?";
  }

  Order order_invariants(SemigroupClosure const& s,
                         element_index           e,
                         element_index           z) {
    require_idempotent(s, e);
    require_idempotent(s, z);
    auto const ez = s.product(e, z);
    if (ez != s.product(z, e)) {
      return Order::non_commuting;
    } else if (e == z) {
      return Order::equal;
    } else if (ez == z) {
      return Order::greater;
    } else if (ez == e) {
      return Order::less;
    }
    return Order::unordered;
  }

  RangeOrderingCheck check_range_ordering(StateTransform const& e,
                                          StateTransform const& z) {
    if (!is_idempotent(e) || !is_idempotent(z)) {
      throw DomainError("range ordering is defined for idempotents only");
    }
    auto const ez = compose(e, z);
    if (ez != compose(z, e)) {
      throw DomainError("range ordering needs commuting idempotents");
    }
    auto const re = range(e);
    auto const rz = range(z);
    return {ez == z, std::includes(re.begin(), re.end(), rz.begin(), rz.end())};
  }

  std::string to_string(Equivalence e) {
    switch (e) {
      case Equivalence::L:
        return "L";
      case Equivalence::R:
        return "R";
      case Equivalence::D:
        return "D";
      case Equivalence::none:
        return "none";
    }
    return "?";
  }

  Equivalence equivalence(SemigroupClosure const& s,
                          element_index           a,
                          element_index           b) {
    require_idempotent(s, a);
    require_idempotent(s, b);
    if (left_equivalent(s, a, b)) {
      return Equivalence::L;
    } else if (right_equivalent(s, a, b)) {
      return Equivalence::R;
    }
    auto const                ids = idempotents(s);
    std::vector<bool>         seen(s.size(), false);
    std::deque<element_index> queue{a};
    seen[a] = true;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto y : ids) {
        if (!seen[y]
            && (left_equivalent(s, x, y) || right_equivalent(s, x, y))) {
          if (y == b) {
            return Equivalence::D;
          }
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return Equivalence::none;
  }

  bool IdempotentGrid::is_full() const {
    return std::all_of(cells.begin(), cells.end(), [](auto const& row) {
      return std::all_of(
          row.begin(), row.end(), [](auto const& c) { return c.has_value(); });
    });
  }

  std::pair<std::size_t, std::size_t> IdempotentGrid::cell_of(
      element_index e) const {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = 0; j < cells[i].size(); ++j) {
        if (cells[i][j] == e) {
          return {i, j};
        }
      }
    }
    throw DomainError("element " + std::to_string(e)
                      + " is not an idempotent of the grid");
  }

  element_index IdempotentGrid::at(std::size_t row, std::size_t col) const {
    auto const& c = cells.at(row).at(col);
    if (!c) {
      throw DomainError("grid cell (" + std::to_string(row) + ", "
                        + std::to_string(col) + ") is empty");
    }
    return *c;
  }

  IdempotentGrid idempotent_grid(SemigroupClosure const& s) {
    IdempotentGrid grid;
    grid.idempotents = idempotents(s);
    grid.rows        = classes_of(grid.idempotents, [&](auto a, auto b) {
      return right_equivalent(s, a, b);
    });
    grid.cols        = classes_of(grid.idempotents, [&](auto a, auto b) {
      return left_equivalent(s, a, b);
    });
    std::unordered_map<element_index, std::size_t> col_of;
    for (std::size_t j = 0; j < grid.cols.size(); ++j) {
      for (auto e : grid.cols[j]) {
        col_of[e] = j;
      }
    }
    grid.cells.assign(grid.rows.size(),
                      std::vector<std::optional<element_index>>(
                          grid.cols.size(), std::nullopt));
    for (std::size_t i = 0; i < grid.rows.size(); ++i) {
      for (auto e : grid.rows[i]) {
        auto& cell = grid.cells[i][col_of.at(e)];
        if (cell) {
          throw InvariantViolation("two idempotents are both L- and "
                                   "R-equivalent");
        }
        cell = e;
      }
    }
    return grid;
  }

  bool is_rectangular_band(SemigroupClosure const& s) {
    for (element_index a = 0; a < s.size(); ++a) {
      if (!is_idempotent_element(s, a)) {
        return false;
      }
      for (element_index b = 0; b < s.size(); ++b) {
        if (s.product(s.product(a, b), a) != a) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_anti_commutative(SemigroupClosure const& s) {
    for (element_index a = 0; a < s.size(); ++a) {
      for (element_index b = a + 1; b < s.size(); ++b) {
        if (s.product(a, b) == s.product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_rectangular_product(SemigroupClosure const& s) {
    auto const grid = idempotent_grid(s);
    if (grid.idempotents.size() != s.size() || !grid.is_full()) {
      return false;
    }
    auto const m = grid.number_of_rows();
    auto const n = grid.number_of_cols();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            if (s.product(grid.at(i, j), grid.at(k, l)) != grid.at(i, l)) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  ElementPeriodicity element_periodicity(SemigroupClosure const& s,
                                         element_index           x) {
    if (x >= s.size()) {
      throw DomainError("element " + std::to_string(x)
                        + " is not in the closure");
    }
    // powers[k] is x^(k + 1)
    std::vector<element_index>                     powers{x};
    std::unordered_map<element_index, std::size_t> seen{{x, 0}};
    while (true) {
      auto next = s.product(powers.back(), x);
      auto it   = seen.find(next);
      if (it != seen.end()) {
        std::size_t const tail     = it->second;
        std::size_t const period   = powers.size() - tail;
        std::size_t const exponent = (tail / period + 1) * period;
        return {tail, period, powers[exponent - 1]};
      }
      seen.emplace(next, powers.size());
      powers.push_back(next);
    }
  }

  std::vector<ElementPeriodicity> periodicity_report(
      SemigroupClosure const& s) {
    std::vector<ElementPeriodicity> result;
    result.reserve(s.size());
    for (element_index x = 0; x < s.size(); ++x) {
      result.push_back(element_periodicity(s, x));
    }
    return result;
  }

  bool MaxSubgroup::contains(element_index x) const {
    return std::find(members.begin(), members.end(), x) != members.end();
  }

  std::size_t MaxSubgroup::index_of(element_index x) const {
    auto it = std::find(members.begin(), members.end(), x);
    if (it == members.end()) {
      throw DomainError("element " + std::to_string(x)
                        + " is not in the subgroup");
    }
    return static_cast<std::size_t>(it - members.begin());
  }

  MaxSubgroup max_subgroup(SemigroupClosure const& s, element_index e) {
    require_idempotent(s, e);
    MaxSubgroup g{e, {e}};
    for (element_index x = 0; x < s.size(); ++x) {
      if (x == e) {
        continue;
      }
      auto const p = element_periodicity(s, x);
      if (p.tail == 0 && p.invariant == e) {
        g.members.push_back(x);
      }
    }

    std::vector<bool> member(s.size(), false);
    for (auto x : g.members) {
      member[x] = true;
    }
    for (auto x : g.members) {
      if (s.product(e, x) != x || s.product(x, e) != x) {
        throw InvariantViolation("idempotent is not an identity of its group");
      }
      bool has_inverse = false;
      for (auto y : g.members) {
        if (!member[s.product(x, y)]) {
          throw InvariantViolation("maximal subgroup is not closed");
        }
        has_inverse = has_inverse || s.product(x, y) == e;
      }
      if (!has_inverse) {
        throw InvariantViolation("maximal subgroup element has no inverse");
      }
    }
    if (is_simple(s)) {
      std::vector<bool> in_ese(s.size(), false);
      for (element_index x = 0; x < s.size(); ++x) {
        in_ese[s.product(s.product(e, x), e)] = true;
      }
      if (in_ese != member) {
        throw InvariantViolation("maximal subgroup differs from eSe");
      }
    }
    return g;
  }

  element_index group_inverse(SemigroupClosure const& s, element_index x) {
    auto const p = element_periodicity(s, x);
    if (p.tail != 0) {
      throw DomainError("element " + std::to_string(x)
                        + " has a tail and lies in no subgroup");
    }
    // x^p is the identity, so x^(p - 1) is the inverse (x itself when p = 1)
    element_index result = x;
    for (std::size_t k = 2; k < p.period; ++k) {
      result = s.product(result, x);
    }
    return result;
  }

  SubgroupIsomorphism subgroup_isomorphism(SemigroupClosure const& s,
                                           element_index           a,
                                           element_index           b) {
    auto const kind = equivalence(s, a, b);
    if (kind == Equivalence::none) {
      throw DomainError("idempotents " + std::to_string(a) + " and "
                        + std::to_string(b) + " are not equivalent");
    }
    auto const ga = max_subgroup(s, a);
    auto const gb = max_subgroup(s, b);

    // For D, go through the idempotent c with bRc and cLa: x -> xc -> a(xc).
    // Plain axa is only a bijection once the sandwich entries are not all
    // the identity.
    element_index c = a;
    if (kind == Equivalence::D) {
      bool found = false;
      for (auto z : idempotents(s)) {
        if (s.product(b, z) == z && s.product(z, b) == b
            && s.product(z, a) == z && s.product(a, z) == a) {
          c     = z;
          found = true;
          break;
        }
      }
      if (!found) {
        throw InvariantViolation("no idempotent links " + std::to_string(b)
                                 + " to " + std::to_string(a));
      }
    }
    auto f = [&](element_index x) {
      switch (kind) {
        case Equivalence::L:
          return s.product(a, x);
        case Equivalence::R:
          return s.product(x, a);
        default:
          return s.product(a, s.product(x, c));
      }
    };

    SubgroupIsomorphism result{kind, c, {}};
    std::vector<bool>   hit(s.size(), false);
    for (auto x : gb.members) {
      auto const y = f(x);
      if (!ga.contains(y) || hit[y]) {
        throw InvariantViolation("subgroup map is not a bijection");
      }
      hit[y] = true;
      result.mapping.emplace_back(x, y);
    }
    if (ga.order() != gb.order()) {
      throw InvariantViolation("equivalent idempotents have subgroups of "
                               "different orders");
    }
    for (auto x : gb.members) {
      for (auto y : gb.members) {
        if (f(s.product(x, y)) != s.product(f(x), f(y))) {
          throw InvariantViolation("subgroup map does not preserve products");
        }
      }
    }
    return result;
  }

  GroupSummary group_summary(SemigroupClosure const& s, MaxSubgroup const& g) {
    GroupSummary result{g.order(), true, {}};
    for (auto x : g.members) {
      result.element_orders.push_back(element_periodicity(s, x).period);
      for (auto y : g.members) {
        if (s.product(x, y) != s.product(y, x)) {
          result.abelian = false;
        }
      }
    }
    std::sort(result.element_orders.begin(), result.element_orders.end());
    return result;
  }

}  // namespace crsm
