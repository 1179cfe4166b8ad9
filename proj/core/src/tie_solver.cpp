// Copyright 2026 The supertropical Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tie_solver.hpp"

#include <algorithm>

#include "supertropical/errors.hpp"

namespace supertropical::detail {
namespace {

struct Bound {
  bool inf = true;
  Rational v;
};

bool less(const Bound& a, const Bound& b) {
  if (a.inf) return false;
  if (b.inf) return true;
  return a.v < b.v;
}

// Difference-bound matrix over nodes 0..n-1; d(u,v) bounds x_v - x_u from above.
class Dbm {
 public:
  explicit Dbm(std::size_t n) : n_(n), d_(n * n) {
    for (std::size_t i = 0; i < n; ++i) d_[i * n + i] = Bound{false, Rational(0)};
  }

  const Bound& at(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }

  // Adds x_v - x_u <= c and restores closure; false on a negative cycle.
  bool add(std::size_t u, std::size_t v, const Rational& c) {
    const Bound& cur = at(u, v);
    if (!cur.inf && cur.v <= c) return true;
    const Bound& back = at(v, u);
    if (!back.inf && back.v + c < 0) return false;
    std::vector<Bound> col_u(n_), row_v(n_);
    for (std::size_t a = 0; a < n_; ++a) col_u[a] = at(a, u);
    for (std::size_t b = 0; b < n_; ++b) row_v[b] = at(v, b);
    for (std::size_t a = 0; a < n_; ++a) {
      if (col_u[a].inf) continue;
      Rational left = col_u[a].v + c;
      for (std::size_t b = 0; b < n_; ++b) {
        if (row_v[b].inf) continue;
        Bound cand{false, left + row_v[b].v};
        Bound& slot = d_[a * n_ + b];
        if (less(cand, slot)) slot = std::move(cand);
      }
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Bound> d_;
};

struct Term {
  std::size_t node;
  Rational c;
  bool ghost;
};

// One way to make a component ghost: either a ghost term on top, or two terms tied on top.
struct Option {
  std::size_t top;
  std::optional<std::size_t> tie;
};

struct Component {
  std::vector<Term> terms;
  std::vector<Option> options;
};

std::vector<Component> build(const std::vector<Vec>& gens, const Vec* target) {
  const std::size_t n = target ? target->size() : (gens.empty() ? 0 : gens.front().size());
  for (const auto& g : gens)
    if (g.size() != n) throw ShapeMismatch();
  std::vector<Component> comps;
  for (std::size_t j = 0; j < n; ++j) {
    Component comp;
    if (target && !(*target)[j].is_zero())
      comp.terms.push_back({0, (*target)[j].value(), (*target)[j].is_ghost()});
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (!gens[i][j].is_zero()) comp.terms.push_back({i + 1, gens[i][j].value(), gens[i][j].is_ghost()});
    if (comp.terms.empty()) continue;
    for (std::size_t a = 0; a < comp.terms.size(); ++a) {
      if (comp.terms[a].ghost) comp.options.push_back({a, std::nullopt});
    }
    for (std::size_t a = 0; a < comp.terms.size(); ++a)
      for (std::size_t b = a + 1; b < comp.terms.size(); ++b)
        if (!comp.terms[a].ghost && !comp.terms[b].ghost) comp.options.push_back({a, b});
    comps.push_back(std::move(comp));
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const Component& x, const Component& y) { return x.options.size() < y.options.size(); });
  return comps;
}

// Term p >= term q  <=>  x_q - x_p <= c_p - c_q.
bool apply_option(Dbm& dbm, const Component& comp, const Option& opt) {
  const Term& top = comp.terms[opt.top];
  for (std::size_t q = 0; q < comp.terms.size(); ++q) {
    if (q == opt.top) continue;
    const Term& t = comp.terms[q];
    if (!dbm.add(top.node, t.node, top.c - t.c)) return false;
  }
  if (opt.tie) {
    const Term& t = comp.terms[*opt.tie];
    if (!dbm.add(t.node, top.node, t.c - top.c)) return false;
  }
  return true;
}

class Search {
 public:
  Search(std::vector<Component> comps, std::size_t nodes, bool greatest)
      : comps_(std::move(comps)), nodes_(nodes), greatest_(greatest) {}

  std::optional<std::vector<Rational>> run() {
    for (const auto& c : comps_)
      if (c.options.empty()) return std::nullopt;
    dfs(0, Dbm(nodes_));
    return best_;
  }

 private:
  // Shortest paths from a virtual source joined to every node by 0-weight edges.
  std::vector<Rational> any_point(const Dbm& dbm) const {
    std::vector<Rational> x(nodes_);
    for (std::size_t r = 0; r < nodes_; ++r) {
      Rational m(0);
      for (std::size_t u = 0; u < nodes_; ++u) {
        const Bound& b = dbm.at(u, r);
        if (!b.inf && b.v < m) m = b.v;
      }
      x[r] = m;
    }
    std::vector<Rational> out;
    for (std::size_t r = 1; r < nodes_; ++r) out.push_back(x[r] - x[0]);
    return out;
  }

  bool dominated(const Dbm& dbm) const {
    if (!best_) return false;
    for (std::size_t r = 1; r < nodes_; ++r) {
      const Bound& b = dbm.at(0, r);
      if (b.inf || b.v > (*best_)[r - 1]) return false;
    }
    return true;
  }

  bool dfs(std::size_t level, const Dbm& dbm) {
    if (greatest_ && dominated(dbm)) return false;
    if (level == comps_.size()) {
      if (!greatest_) {
        best_ = any_point(dbm);
        return true;
      }
      std::vector<Rational> top;
      for (std::size_t r = 1; r < nodes_; ++r) {
        const Bound& b = dbm.at(0, r);
        if (b.inf) throw InvalidInput("coefficients are unbounded: the generators are dependent on this support");
        top.push_back(b.v);
      }
      if (!best_) {
        best_ = std::move(top);
      } else {
        for (std::size_t r = 0; r < top.size(); ++r) (*best_)[r] = std::max((*best_)[r], top[r]);
      }
      return false;
    }
    const Component& comp = comps_[level];
    for (const auto& opt : comp.options) {
      Dbm next = dbm;
      if (!apply_option(next, comp, opt)) continue;
      if (dfs(level + 1, next)) return true;
    }
    return false;
  }

  std::vector<Component> comps_;
  std::size_t nodes_;
  bool greatest_;
  std::optional<std::vector<Rational>> best_;
};

}  // namespace

std::optional<std::vector<Rational>> tie_feasible(const std::vector<Vec>& gens, const std::optional<Vec>& target) {
  Search s(build(gens, target ? &*target : nullptr), gens.size() + 1, false);
  return s.run();
}

std::optional<std::vector<Rational>> tie_greatest(const std::vector<Vec>& gens, const Vec& target) {
  Search s(build(gens, &target), gens.size() + 1, true);
  return s.run();
}

}  // namespace supertropical::detail
