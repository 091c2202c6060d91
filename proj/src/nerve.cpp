#include "cobcat/nerve.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <stdexcept>

#include "cobcat/errors.hpp"
#include "cobcat/union_find.hpp"

namespace cobcat {

namespace {

using Tuple = std::vector<int>;
using SparseColumn = std::vector<std::pair<std::size_t, int>>;

void extend_chains(const FinCat& c, const std::vector<Tuple>& prev, std::vector<Tuple>& next,
                   std::size_t budget) {
  for (const auto& t : prev) {
    for (int g : c.out(c.tgt(t.back()))) {
      if (c.is_identity(g)) continue;
      if (next.size() >= budget) throw ResourceError("nerve cell count exceeds the configured ceiling");
      Tuple u = t;
      u.push_back(g);
      next.push_back(std::move(u));
    }
  }
}

}  // namespace

NerveComplex build_nerve(const FinCat& c, std::size_t cap, std::size_t max_cells) {
  NerveComplex n;
  n.cap = cap;
  n.cells.resize(cap + 1);
  std::size_t total = c.object_count();
  if (total > max_cells) throw ResourceError("nerve cell count exceeds the configured ceiling");
  for (int x = 0; x < static_cast<int>(c.object_count()); ++x) n.cells[0].push_back({x});
  if (cap >= 1) {
    for (int f = 0; f < static_cast<int>(c.morphism_count()); ++f)
      if (!c.is_identity(f)) {
        if (++total > max_cells) throw ResourceError("nerve cell count exceeds the configured ceiling");
        n.cells[1].push_back({f});
      }
  }
  for (std::size_t p = 2; p <= cap; ++p) {
    extend_chains(c, n.cells[p - 1], n.cells[p], max_cells - total);
    total += n.cells[p].size();
  }

  // Sparse boundaries first; ∂∂ = 0 is checked on them.
  std::vector<std::vector<SparseColumn>> sparse(cap + 1);
  for (std::size_t p = 1; p <= cap; ++p) {
    std::map<Tuple, std::size_t> index;
    for (std::size_t i = 0; i < n.cells[p - 1].size(); ++i) index.emplace(n.cells[p - 1][i], i);
    auto& cols = sparse[p];
    cols.resize(n.cells[p].size());
    for (std::size_t j = 0; j < n.cells[p].size(); ++j) {
      const Tuple& t = n.cells[p][j];
      std::map<std::size_t, int> acc;
      if (p == 1) {
        acc[static_cast<std::size_t>(c.tgt(t[0]))] += 1;
        acc[static_cast<std::size_t>(c.src(t[0]))] -= 1;
      } else {
        for (std::size_t i = 0; i <= p; ++i) {
          Tuple face;
          if (i == 0) {
            face.assign(t.begin() + 1, t.end());
          } else if (i == p) {
            face.assign(t.begin(), t.end() - 1);
          } else {
            const int h = *c.compose(t[i - 1], t[i]);
            if (c.is_identity(h)) continue;  // degenerate face
            face.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
            face.push_back(h);
            face.insert(face.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end());
          }
          acc[index.at(face)] += (i % 2 == 0) ? 1 : -1;
        }
      }
      for (auto [row, coeff] : acc)
        if (coeff != 0) cols[j].emplace_back(row, coeff);
    }
  }
  for (std::size_t p = 2; p <= cap; ++p)
    for (const auto& col : sparse[p]) {
      std::map<std::size_t, long> acc;
      for (auto [mid, a] : col)
        for (auto [row, b] : sparse[p - 1][mid]) acc[row] += static_cast<long>(a) * b;
      for (auto [row, v] : acc)
        if (v != 0) throw std::logic_error("nerve boundary does not square to zero");
    }

  n.boundary.resize(cap + 1);
  n.boundary[0] = IntMatrix(0, n.cells[0].size());
  for (std::size_t p = 1; p <= cap; ++p) {
    IntMatrix m(n.cells[p - 1].size(), n.cells[p].size());
    for (std::size_t j = 0; j < sparse[p].size(); ++j)
      for (auto [row, coeff] : sparse[p][j]) m(row, j) = coeff;
    n.boundary[p] = std::move(m);
  }
  return n;
}

std::vector<AbelianInvariants> homology(const NerveComplex& n) {
  const std::size_t cap = n.cap;
  if (cap == 0) return {};
  // Invariant factors of ∂₁ … ∂_cap, one task per degree.
  std::vector<std::future<std::vector<Integer>>> jobs;
  for (std::size_t p = 1; p <= cap; ++p)
    jobs.push_back(std::async(std::launch::async,
                              [&m = n.boundary[p]] { return invariant_factors(m); }));
  std::vector<std::vector<Integer>> factors(cap + 1);
  for (std::size_t p = 1; p <= cap; ++p) factors[p] = jobs[p - 1].get();

  auto rank_of = [](const std::vector<Integer>& d) {
    return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const Integer& v) { return v != 0; }));
  };
  std::vector<AbelianInvariants> out;
  for (std::size_t p = 0; p < cap; ++p) {
    AbelianInvariants h;
    const std::size_t dim = n.cells[p].size();
    const std::size_t r_in = p == 0 ? 0 : rank_of(factors[p]);
    const std::size_t r_out = rank_of(factors[p + 1]);
    h.rank = dim - r_in - r_out;
    for (const auto& d : factors[p + 1])
      if (d > 1) h.torsion.push_back(d);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<std::vector<int>> pi0(const FinCat& c) {
  UnionFind uf(c.object_count());
  for (int f = 0; f < static_cast<int>(c.morphism_count()); ++f)
    uf.unite(static_cast<std::size_t>(c.src(f)), static_cast<std::size_t>(c.tgt(f)));
  std::map<std::size_t, std::vector<int>> groups;
  for (int x = 0; x < static_cast<int>(c.object_count()); ++x)
    groups[uf.find(static_cast<std::size_t>(x))].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

EdgePathData spanning_forest(const FinCat& c, int preferred_root) {
  const std::size_t n = c.object_count();
  EdgePathData d;
  d.parent_edge.assign(n, -1);
  d.basepoint.assign(n, -1);
  // Undirected adjacency in morphism-id order.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int f = 0; f < static_cast<int>(c.morphism_count()); ++f) {
    if (c.is_identity(f)) continue;
    adj[static_cast<std::size_t>(c.src(f))].emplace_back(f, c.tgt(f));
    if (c.src(f) != c.tgt(f)) adj[static_cast<std::size_t>(c.tgt(f))].emplace_back(f, c.src(f));
  }
  auto grow = [&](int root) {
    d.basepoint[static_cast<std::size_t>(root)] = root;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (auto [f, y] : adj[static_cast<std::size_t>(x)]) {
        if (d.basepoint[static_cast<std::size_t>(y)] >= 0) continue;
        d.basepoint[static_cast<std::size_t>(y)] = root;
        d.parent_edge[static_cast<std::size_t>(y)] = f;
        d.tree_edges.push_back(f);
        queue.push_back(y);
      }
    }
  };
  if (preferred_root >= 0) grow(preferred_root);
  for (int x = 0; x < static_cast<int>(n); ++x)
    if (d.basepoint[static_cast<std::size_t>(x)] < 0) grow(x);
  return d;
}

EdgePathPresentation fundamental_group(const FinCat& c, int base) {
  if (base < 0 || base >= static_cast<int>(c.object_count()))
    throw DomainError("unknown basepoint");
  EdgePathPresentation out;
  out.forest = spanning_forest(c, base);
  const auto& bp = out.forest.basepoint;
  out.morphism_generator.assign(c.morphism_count(), -1);
  auto& pres = out.presentation;
  for (int f = 0; f < static_cast<int>(c.morphism_count()); ++f) {
    if (c.is_identity(f) || bp[static_cast<std::size_t>(c.src(f))] != base) continue;
    out.morphism_generator[static_cast<std::size_t>(f)] = static_cast<int>(pres.generators.size());
    out.generator_morphism.push_back(f);
    pres.generators.push_back(c.morphism(f).name);
  }
  auto gen = [&](int f) { return static_cast<std::size_t>(out.morphism_generator[static_cast<std::size_t>(f)]); };
  for (int e : out.forest.tree_edges)
    if (bp[static_cast<std::size_t>(c.src(e))] == base) pres.relators.push_back({letter(gen(e))});
  for (int f : out.generator_morphism)
    for (int g : c.out(c.tgt(f))) {
      if (c.is_identity(g)) continue;
      const int h = *c.compose(f, g);
      Word w{letter(gen(g)), letter(gen(f))};
      if (!c.is_identity(h)) w.push_back(letter(gen(h), true));
      pres.relators.push_back(std::move(w));
    }
  return out;
}

}  // namespace cobcat
