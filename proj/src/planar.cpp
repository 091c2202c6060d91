#include "cobcat/planar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cobcat/errors.hpp"
#include "cobcat/union_find.hpp"

namespace cobcat {

PlanarDiagram::PlanarDiagram(int m, std::vector<Slice> slices) : m_(m), slices_(std::move(slices)) {
  if (m < 0) throw DomainError("diagram: negative strand count");
  int k = m;
  for (std::size_t s = 0; s < slices_.size(); ++s) {
    const Slice& e = slices_[s];
    if (e.kind == Slice::Kind::Cup) {
      if (e.index < 0 || e.index > k)
        throw DomainError("diagram: cup index out of range at slice " + std::to_string(s));
      k += 2;
    } else {
      if (e.index < 0 || e.index + 1 >= k)
        throw DomainError("diagram: cap index out of range at slice " + std::to_string(s));
      k -= 2;
    }
  }
  n_ = k;
}

PlanarDiagram compose_planar(const PlanarDiagram& w, const PlanarDiagram& w2) {
  if (w.n() != w2.m()) throw DomainError("compose: interface mismatch");
  std::vector<Slice> s = w.slices();
  s.insert(s.end(), w2.slices().begin(), w2.slices().end());
  return PlanarDiagram(w.m(), std::move(s));
}

std::int64_t f_invariant(const PlanarDiagram& w) {
  // Gap j (above j strands) is red iff j is odd. Red regions are born as
  // discs and every merge of two red gaps glues along an interval, so
  // χ(X) = initial red gaps + births − merges. Same- and cross-component
  // merges both lower χ by one.
  const std::int64_t initial_red = (w.m() + 1) / 2;
  std::int64_t births = 0, merges = 0;
  for (const Slice& e : w.slices()) {
    if (e.kind == Slice::Kind::Cup && e.index % 2 == 0) ++births;
    if (e.kind == Slice::Kind::Cap && e.index % 2 == 1) ++merges;
  }
  const std::int64_t chi_x = initial_red + births - merges;
  return chi_x - initial_red;
}

DValue functor_to_D(const PlanarDiagram& w) {
  return {w.m() % 2, w.n() % 2, f_invariant(w)};
}

std::int64_t reduce_endomorphism(const PlanarDiagram& w) {
  if (w.m() != 0 || w.n() != 0) throw DomainError("reduce: diagram is not an endomorphism of the empty set");
  return f_invariant(w);
}

namespace {

// Far end of an open strand: a boundary point, or another open strand.
struct FarEnd {
  bool boundary = true;
  int id = 0;
};

struct SweepResult {
  Matching1D matching;
  std::vector<std::size_t> gap_regions;            // boundary gaps, region roots
  std::vector<std::vector<std::size_t>> circles;   // per circle: its two side regions
};

SweepResult sweep(const PlanarDiagram& w) {
  const int m = w.m();
  UnionFind regions, comps;
  std::vector<std::pair<std::size_t, std::size_t>> sides;
  std::vector<bool> touches_boundary;
  std::vector<std::size_t> gaps, strands;
  std::vector<int> strand_ids;  // unique id per open strand
  std::map<int, FarEnd> far;
  int next_strand = 0;

  for (int j = 0; j <= m; ++j) gaps.push_back(regions.add());
  for (int i = 0; i < m; ++i) {
    const std::size_t c = comps.add();
    sides.emplace_back(gaps[static_cast<std::size_t>(i)], gaps[static_cast<std::size_t>(i + 1)]);
    touches_boundary.push_back(true);
    strands.push_back(c);
    strand_ids.push_back(next_strand);
    far[next_strand++] = {true, i};
  }
  std::vector<std::size_t> boundary_gaps = gaps;
  std::vector<std::pair<int, int>> pairs;
  std::int64_t loops = 0;

  for (const Slice& e : w.slices()) {
    const auto i = static_cast<std::size_t>(e.index);
    if (e.kind == Slice::Kind::Cup) {
      const std::size_t g = gaps[i];
      const std::size_t r = regions.add();
      const std::size_t c = comps.add();
      sides.emplace_back(g, r);
      touches_boundary.push_back(false);
      gaps.insert(gaps.begin() + static_cast<std::ptrdiff_t>(i) + 1, {r, g});
      strands.insert(strands.begin() + static_cast<std::ptrdiff_t>(i), {c, c});
      const int a = next_strand++, b = next_strand++;
      far[a] = {false, b};
      far[b] = {false, a};
      strand_ids.insert(strand_ids.begin() + static_cast<std::ptrdiff_t>(i), {a, b});
    } else {
      comps.unite(strands[i], strands[i + 1]);
      regions.unite(gaps[i], gaps[i + 2]);
      const int a = strand_ids[i], b = strand_ids[i + 1];
      const FarEnd fa = far.at(a), fb = far.at(b);
      if (!fa.boundary && fa.id == b) {
        ++loops;
      } else if (fa.boundary && fb.boundary) {
        pairs.emplace_back(fa.id, fb.id);
      } else if (fa.boundary) {
        far[fb.id] = fa;
      } else if (fb.boundary) {
        far[fa.id] = fb;
      } else {
        far[fa.id] = fb;
        far[fb.id] = fa;
      }
      far.erase(a);
      far.erase(b);
      gaps.erase(gaps.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                 gaps.begin() + static_cast<std::ptrdiff_t>(i) + 3);
      strands.erase(strands.begin() + static_cast<std::ptrdiff_t>(i),
                    strands.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      strand_ids.erase(strand_ids.begin() + static_cast<std::ptrdiff_t>(i),
                       strand_ids.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    }
  }
  const int n = static_cast<int>(strands.size());
  for (int j = 0; j < n; ++j) {
    const int sid = strand_ids[static_cast<std::size_t>(j)];
    const FarEnd fe = far.at(sid);
    if (fe.boundary) {
      pairs.emplace_back(fe.id, m + j);
    } else {
      // Both ends outgoing; record once from the lower strand.
      auto it = std::find(strand_ids.begin(), strand_ids.end(), fe.id);
      const int k = static_cast<int>(it - strand_ids.begin());
      if (j < k) pairs.emplace_back(m + j, m + k);
    }
  }
  for (std::size_t c : strands) touches_boundary[comps.find(c)] = true;
  boundary_gaps.insert(boundary_gaps.end(), gaps.begin(), gaps.end());

  SweepResult out{Matching1D::from_pairs(m, n, pairs, loops), {}, {}};
  for (std::size_t g : boundary_gaps) out.gap_regions.push_back(regions.find(g));
  std::vector<bool> boundary_comp(comps.size(), false);
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (touches_boundary[c]) boundary_comp[comps.find(c)] = true;
  std::set<std::size_t> seen;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::size_t root = comps.find(c);
    if (boundary_comp[root] || !seen.insert(root).second) continue;
    out.circles.push_back({regions.find(sides[c].first), regions.find(sides[c].second)});
  }
  return out;
}

// Forest of circles hanging in `region`, entered without crossing `via`.
std::string forest_below(const std::vector<std::vector<std::size_t>>& circles,
                         const std::multimap<std::size_t, std::size_t>& adjacency,
                         std::size_t region, std::size_t via) {
  std::vector<std::string> trees;
  auto [lo, hi] = adjacency.equal_range(region);
  for (auto it = lo; it != hi; ++it) {
    const std::size_t c = it->second;
    if (c == via) continue;
    const auto& s = circles[c];
    const std::size_t inner = s[0] == region ? s[1] : s[0];
    trees.push_back("(" + forest_below(circles, adjacency, inner, c) + ")");
  }
  std::sort(trees.begin(), trees.end());
  std::string out;
  for (const auto& t : trees) out += t;
  return out;
}

std::multimap<std::size_t, std::size_t> circle_adjacency(const SweepResult& r) {
  std::multimap<std::size_t, std::size_t> adj;
  for (std::size_t c = 0; c < r.circles.size(); ++c) {
    adj.emplace(r.circles[c][0], c);
    adj.emplace(r.circles[c][1], c);
  }
  return adj;
}

}  // namespace

Matching1D underlying_matching(const PlanarDiagram& w) { return sweep(w).matching; }

PlanarSignature planar_signature(const PlanarDiagram& w) {
  const SweepResult r = sweep(w);
  PlanarSignature sig;
  sig.m = w.m();
  sig.n = w.n();
  sig.pairs = r.matching.pairs();
  sig.circles = r.matching.circles();
  const auto adj = circle_adjacency(r);
  std::map<std::size_t, int> label;
  std::vector<std::size_t> label_region;
  for (std::size_t g : r.gap_regions) {
    auto [it, fresh] = label.emplace(g, static_cast<int>(label.size()));
    if (fresh) label_region.push_back(g);
    sig.gap_regions.push_back(it->second);
  }
  const std::size_t none = r.circles.size();
  for (std::size_t region : label_region) sig.forests.push_back(forest_below(r.circles, adj, region, none));
  return sig;
}

std::vector<std::string> closed_forest(const PlanarDiagram& w) {
  if (w.m() != 0 || w.n() != 0) throw DomainError("closed_forest: diagram has boundary");
  const SweepResult r = sweep(w);
  const auto adj = circle_adjacency(r);
  const std::string forest = forest_below(r.circles, adj, r.gap_regions.front(), r.circles.size());
  std::vector<std::string> trees;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < forest.size(); ++i) {
    depth += forest[i] == '(' ? 1 : -1;
    if (depth == 0) {
      trees.push_back(forest.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  return trees;
}

std::int64_t tree_f_value(const std::string& tree) {
  // Region inside a circle at odd depth is red; its χ is 1 − #children.
  std::int64_t value = 0;
  std::vector<int> children;  // per open node
  for (char ch : tree) {
    if (ch == '(') {
      if (!children.empty()) ++children.back();
      children.push_back(0);
    } else if (ch == ')') {
      if (children.empty()) throw DomainError("tree: unbalanced parentheses");
      const std::size_t depth = children.size();
      if (depth % 2 == 1) value += 1 - children.back();
      children.pop_back();
    } else {
      throw DomainError("tree: unexpected character");
    }
  }
  if (!children.empty()) throw DomainError("tree: unbalanced parentheses");
  return value;
}

PlanarDiagram diagram_from_forest(const std::string& forest) {
  std::vector<Slice> slices;
  std::vector<int> stack;  // gap index where each open circle was cupped
  for (char ch : forest) {
    if (ch == '(') {
      const int at = stack.empty() ? 0 : stack.back() + 1;
      slices.push_back(cup_at(at));
      stack.push_back(at);
    } else if (ch == ')') {
      if (stack.empty()) throw DomainError("forest: unbalanced parentheses");
      slices.push_back(cap_at(stack.back()));
      stack.pop_back();
    } else {
      throw DomainError("forest: unexpected character");
    }
  }
  if (!stack.empty()) throw DomainError("forest: unbalanced parentheses");
  return PlanarDiagram(0, std::move(slices));
}

}  // namespace cobcat
