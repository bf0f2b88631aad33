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

#include "crsm/decompose.hpp"

#include <algorithm>      // for all_of
#include <unordered_map>  // for unordered_map

#include "crsm/errors.hpp"

namespace crsm {

  std::string to_string(ProductKind k) {
    return k == ProductKind::direct ? "direct" : "semidirect";
  }

  element_index ReesDecomposition::element_at(ReesCoordinates const& c) const {
    for (element_index x = 0; x < coords.size(); ++x) {
      if (coords[x] == c) {
        return x;
      }
    }
    throw DomainError("no element has coordinates (" + std::to_string(c.row)
                      + ", " + std::to_string(c.col) + ", "
                      + std::to_string(c.group_element) + ")");
  }

  ReesCoordinates ReesDecomposition::multiply(SemigroupClosure const& s,
                                              ReesCoordinates const&  x,
                                              ReesCoordinates const&  y) const {
    auto const middle = sandwich.at(x.col).at(y.row);
    return {x.row,
            y.col,
            s.product(s.product(x.group_element, middle), y.group_element)};
  }

  ReesDecomposition decompose(SemigroupClosure const& s) {
    if (!is_simple(s)) {
      throw PreconditionError("closure is not simple: rank spectrum "
                              + to_string(rank_spectrum(s)));
    }
    auto grid = idempotent_grid(s);
    if (!grid.is_full()) {
      throw InvariantViolation("idempotent grid of a simple closure has an "
                               "empty cell");
    }
    auto const     e     = grid.at(0, 0);
    auto           group = max_subgroup(s, e);
    auto const     m     = grid.number_of_rows();
    auto const     n     = grid.number_of_cols();
    ReesDecomposition d{m, n, e, std::move(group), std::move(grid), {}, {}, {}, false};

    std::unordered_map<element_index, std::pair<std::size_t, std::size_t>>
        cell;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        cell.emplace(d.grid.at(i, j), std::pair{i, j});
      }
    }

    // coordinate triple -> element, to check the bijection
    std::vector<bool> hit(m * n * d.group.order(), false);
    d.coords.reserve(s.size());
    for (element_index x = 0; x < s.size(); ++x) {
      auto const p = element_periodicity(s, x);
      if (p.tail != 0) {
        throw InvariantViolation("element of a simple closure has a tail");
      }
      auto const [i, j] = cell.at(p.invariant);
      auto const g      = s.product(s.product(e, x), e);
      auto const slot   = (i * n + j) * d.group.order() + d.group.index_of(g);
      if (hit[slot]) {
        throw InvariantViolation("two elements share Rees coordinates");
      }
      hit[slot] = true;
      d.coords.push_back({i, j, g});
    }
    if (s.size() != m * n * d.group.order()) {
      throw InvariantViolation("closure size " + std::to_string(s.size())
                               + " differs from m * n * |G|");
    }

    d.sandwich.assign(n, std::vector<element_index>(m, e));
    bool direct = true;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        d.sandwich[j][i] = s.product(d.grid.at(0, j), d.grid.at(i, 0));
        direct           = direct && d.sandwich[j][i] == e;
      }
    }
    for (std::size_t k = 0; k < std::max(m, n); ++k) {
      if ((k < m && d.sandwich[0][k] != e) || (k < n && d.sandwich[k][0] != e)) {
        throw InvariantViolation("sandwich matrix is not normalized");
      }
    }
    d.kind = direct ? ProductKind::direct : ProductKind::semidirect;

    // Decided from the products themselves, independently of the sandwich.
    auto const idem = idempotents(s);
    d.idempotents_closed = std::all_of(idem.begin(), idem.end(), [&](auto a) {
      return std::all_of(idem.begin(), idem.end(), [&](auto b) {
        return is_idempotent(s.element(s.product(a, b)));
      });
    });

    for (element_index x = 0; x < s.size(); ++x) {
      for (element_index y = 0; y < s.size(); ++y) {
        if (d.coords[s.product(x, y)]
            != d.multiply(s, d.coords[x], d.coords[y])) {
          throw InvariantViolation("Rees multiplication law fails for "
                                   "elements "
                                   + std::to_string(x) + " and "
                                   + std::to_string(y));
        }
      }
    }
    return d;
  }

  Machine branch_machine(std::size_t m) {
    if (m <= 1) {
      return make_machine({StateTransform::identity(1)});
    }
    std::vector<StateTransform> gens;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<state_type> image(m + 1);
      for (std::size_t q = 0; q < m; ++q) {
        image[q] = static_cast<state_type>(q);
      }
      image[m] = static_cast<state_type>(i);
      gens.emplace_back(std::move(image));
    }
    return make_machine(std::move(gens));
  }

  Machine reset_machine(std::size_t n) {
    std::vector<StateTransform> gens;
    for (std::size_t j = 0; j < std::max<std::size_t>(n, 1); ++j) {
      gens.push_back(StateTransform::constant(std::max<std::size_t>(n, 1),
                                              static_cast<state_type>(j)));
    }
    return make_machine(std::move(gens));
  }

  std::vector<element_index> group_generators(SemigroupClosure const& s,
                                              MaxSubgroup const&      g) {
    if (g.order() == 1) {
      return {g.identity};
    }
    std::vector<element_index> gens;
    std::vector<bool>          generated(s.size(), false);
    generated[g.identity] = true;
    for (auto x : g.members) {
      if (generated[x]) {
        continue;
      }
      gens.push_back(x);
      std::vector<element_index> stack;
      for (auto y : g.members) {
        if (generated[y]) {
          stack.push_back(y);
        }
      }
      while (!stack.empty()) {
        auto y = stack.back();
        stack.pop_back();
        for (auto h : gens) {
          auto z = s.product(y, h);
          if (!generated[z]) {
            generated[z] = true;
            stack.push_back(z);
          }
        }
      }
    }
    return gens;
  }

  namespace {
    StateTransform right_regular(SemigroupClosure const& s,
                                 MaxSubgroup const&      g,
                                 element_index           h) {
      std::vector<state_type> image;
      image.reserve(g.order());
      for (auto x : g.members) {
        image.push_back(static_cast<state_type>(g.index_of(s.product(x, h))));
      }
      return StateTransform(std::move(image));
    }
  }  // namespace

  Machine permutation_machine(SemigroupClosure const& s, MaxSubgroup const& g) {
    std::vector<StateTransform> gens;
    for (auto h : group_generators(s, g)) {
      gens.push_back(right_regular(s, g, h));
    }
    return make_machine(std::move(gens));
  }

  ComponentSet synthesize_components(SemigroupClosure const&  s,
                                     ReesDecomposition const& d) {
    return {branch_machine(d.m),
            reset_machine(d.n),
            permutation_machine(s, d.group)};
  }

  ComponentCheck check_components(SemigroupClosure const&  s,
                                  ReesDecomposition const& d,
                                  ComponentSet const&      c) {
    auto copy_semigroup = [](Machine const& machine, std::size_t k, bool left) {
      auto const t = generate_closure(machine);
      if (t.size() != k) {
        return false;
      }
      for (element_index a = 0; a < t.size(); ++a) {
        for (element_index b = 0; b < t.size(); ++b) {
          if (t.product(a, b) != (left ? a : b)) {
            return false;
          }
        }
      }
      return true;
    };

    ComponentCheck result{copy_semigroup(c.branch, d.m, true),
                          copy_semigroup(c.reset, d.n, false),
                          false};

    auto const t = generate_closure(c.permutation);
    if (t.size() == d.group.order()) {
      // g -> its right-regular transform must be a bijection onto the
      // closure and preserve products
      std::vector<element_index> image;
      std::vector<bool>          hit(t.size(), false);
      bool                       ok = true;
      for (auto x : d.group.members) {
        auto pos = t.position(right_regular(s, d.group, x));
        if (!pos || hit[*pos]) {
          ok = false;
          break;
        }
        hit[*pos] = true;
        image.push_back(*pos);
      }
      for (std::size_t a = 0; ok && a < d.group.order(); ++a) {
        for (std::size_t b = 0; ok && b < d.group.order(); ++b) {
          auto ab = d.group.index_of(
              s.product(d.group.members[a], d.group.members[b]));
          ok = image[ab] == t.product(image[a], image[b]);
        }
      }
      result.permutation = ok;
    }
    return result;
  }

  VerificationReport recompose_verify(SemigroupClosure const&  s,
                                      ReesDecomposition const& d) {
    auto const         k = d.group.order();
    VerificationReport report{false, d.m, d.n, k, std::nullopt, ""};

    if (d.coords.size() != s.size() || s.size() != d.m * d.n * k) {
      report.message = "closure size " + std::to_string(s.size())
                       + " differs from m * n * |G| = "
                       + std::to_string(d.m * d.n * k);
      return report;
    }

    // abstract group on 0..k-1
    std::vector<std::size_t> gtab(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        gtab[a * k + b] = d.group.index_of(
            s.product(d.group.members[a], d.group.members[b]));
      }
    }
    std::vector<std::vector<std::size_t>> sandwich(d.n,
                                                   std::vector<std::size_t>(d.m));
    for (std::size_t j = 0; j < d.n; ++j) {
      for (std::size_t i = 0; i < d.m; ++i) {
        sandwich[j][i] = d.group.index_of(d.sandwich[j][i]);
      }
    }

    auto triple = [&](element_index x) {
      auto const& c = d.coords[x];
      return (c.row * d.n + c.col) * k + d.group.index_of(c.group_element);
    };
    auto const          total = d.m * d.n * k;
    std::vector<bool>   hit(total, false);
    std::vector<size_t> of_element(s.size());
    for (element_index x = 0; x < s.size(); ++x) {
      of_element[x] = triple(x);
      if (hit[of_element[x]]) {
        report.message = "coordinates are not a bijection";
        return report;
      }
      hit[of_element[x]] = true;
    }

    // Cayley table of the triple semigroup
    std::vector<std::size_t> table(total * total);
    for (std::size_t t1 = 0; t1 < total; ++t1) {
      auto const i1 = t1 / (d.n * k), j1 = (t1 / k) % d.n, g1 = t1 % k;
      for (std::size_t t2 = 0; t2 < total; ++t2) {
        auto const i2 = t2 / (d.n * k), j2 = (t2 / k) % d.n, g2 = t2 % k;
        auto const g  = gtab[gtab[g1 * k + sandwich[j1][i2]] * k + g2];
        table[t1 * total + t2] = (i1 * d.n + j2) * k + g;
      }
    }

    for (element_index x = 0; x < s.size(); ++x) {
      for (element_index y = 0; y < s.size(); ++y) {
        if (of_element[s.product(x, y)]
            != table[of_element[x] * total + of_element[y]]) {
          report.first_mismatch = std::pair{x, y};
          report.message        = "product of elements " + std::to_string(x)
                           + " and " + std::to_string(y)
                           + " disagrees with the triple semigroup";
          return report;
        }
      }
    }
    report.passed  = true;
    report.message = "closure is isomorphic to the Rees product on "
                     + std::to_string(d.m) + " x " + std::to_string(d.n)
                     + " x " + std::to_string(k) + " triples";
    return report;
  }

  std::string BasicType::name() const {
    switch (label) {
      case Label::C2:
        return "C2";
      case Label::U2:
        return "U2";
      case Label::H2:
        return "H2";
      case Label::L2:
        return "L2";
      case Label::R2:
        return "R2";
      case Label::Cp:
        return "C" + std::to_string(order);
      case Label::other:
        return "other";
    }
    return "other";
  }

  namespace {
    bool is_prime(std::size_t p) {
      if (p < 2) {
        return false;
      }
      for (std::size_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  BasicType classify_basic(SemigroupClosure const& s) {
    using Label = BasicType::Label;
    auto const order = s.size();
    if (order == 2) {
      element_index const x = 0, y = 1;
      bool const          ix = s.product(x, x) == x;
      bool const          iy = s.product(y, y) == y;
      auto const          xy = s.product(x, y);
      auto const          yx = s.product(y, x);
      if (ix && iy) {
        if (xy == yx) {
          return {Label::H2, order};
        } else if (xy == x && yx == y) {
          return {Label::L2, order};
        } else if (xy == y && yx == x) {
          return {Label::R2, order};
        }
      } else if (ix != iy) {
        auto const e = ix ? x : y;
        auto const a = ix ? y : x;
        if (s.product(a, a) == e) {
          if (s.product(e, a) == a && s.product(a, e) == a) {
            return {Label::C2, order};
          } else if (s.product(e, a) == e && s.product(a, e) == e) {
            return {Label::U2, order};
          }
        }
      }
      return {Label::other, order};
    }
    if (is_prime(order)) {
      for (element_index x = 0; x < order; ++x) {
        auto const p = element_periodicity(s, x);
        if (p.tail == 0 && p.period == order) {
          return {Label::Cp, order};
        }
      }
    }
    return {Label::other, order};
  }

  MachineReport decompose_machine(Machine const& m, std::size_t limit) {
    auto       closure  = generate_closure(m, limit);
    auto       spectrum = rank_spectrum(closure);
    bool const simple   = is_simple(closure);
    bool const cr       = spectrum.min_rank == spectrum.max_rank;
    auto       grid     = idempotent_grid(closure);
    auto       periods  = periodicity_report(closure);
    auto const basic    = classify_basic(closure);

    MachineReport report{std::move(closure),
                         std::move(spectrum),
                         simple,
                         cr,
                         std::move(grid),
                         std::move(periods),
                         basic,
                         std::nullopt,
                         std::nullopt};
    auto const& s = report.closure;
    if (simple) {
      auto rees       = decompose(s);
      auto components = synthesize_components(s, rees);
      auto check      = check_components(s, rees, components);
      auto verify     = recompose_verify(s, rees);
      report.decomposition.emplace(Decomposition{std::move(rees),
                                                 std::move(components),
                                                 check,
                                                 std::move(verify)});
    } else {
      report.minimal_ideal = ideal_at_most(s, report.spectrum.min_rank);
    }
    return report;
  }

}  // namespace crsm
