#include "cobcat/localize.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "cobcat/errors.hpp"
#include "cobcat/matching.hpp"
#include "cobcat/planar.hpp"
#include "cobcat/union_find.hpp"

namespace cobcat {

LocalizationPresentation::LocalizationPresentation(const FinCat& c) : base_(&c) {
  components_ = pi0(c);
  component_of_.assign(c.object_count(), -1);
  for (std::size_t k = 0; k < components_.size(); ++k)
    for (int x : components_[k]) component_of_[static_cast<std::size_t>(x)] = static_cast<int>(k);
  aut_.reserve(c.object_count());
  for (int x = 0; x < static_cast<int>(c.object_count()); ++x) aut_.push_back(fundamental_group(c, x));
}

const EdgePathPresentation& LocalizationPresentation::aut_data(int x) const {
  if (x < 0 || static_cast<std::size_t>(x) >= aut_.size()) throw DomainError("unknown object");
  return aut_[static_cast<std::size_t>(x)];
}

Word LocalizationPresentation::tree_path(int object, int x) const {
  const auto& data = aut_data(x);
  Word w;
  // Walk up to the root, prepending: later edges are applied last.
  for (int o = object; o != x;) {
    const int e = data.forest.parent_edge[static_cast<std::size_t>(o)];
    const auto g = static_cast<std::size_t>(data.morphism_generator[static_cast<std::size_t>(e)]);
    if (base_->tgt(e) == o) {
      w.push_back(letter(g));
      o = base_->src(e);
    } else {
      w.push_back(letter(g, true));
      o = base_->tgt(e);
    }
  }
  return w;
}

Word LocalizationPresentation::gamma(int f, int x) const {
  const auto& data = aut_data(x);
  if (f < 0 || static_cast<std::size_t>(f) >= base_->morphism_count()) throw DomainError("unknown morphism");
  if (component_of(base_->src(f)) != component_of(x)) throw DomainError("morphism lies in another component");
  if (base_->is_identity(f)) return {};
  Word w = inverse(tree_path(base_->tgt(f), x));
  w.push_back(letter(static_cast<std::size_t>(data.morphism_generator[static_cast<std::size_t>(f)])));
  const Word p = tree_path(base_->src(f), x);
  w.insert(w.end(), p.begin(), p.end());
  return free_reduce(w);
}

LocalizationPresentation localize(const FinCat& c) { return LocalizationPresentation(c); }

Word relation_word(const LocalizationPresentation& l, const RelationInstance& r) {
  const FinCat& c = l.base();
  auto typed = [&](int f, int s, int t) {
    return f >= 0 && static_cast<std::size_t>(f) < c.morphism_count() && c.src(f) == s && c.tgt(f) == t;
  };
  if (!typed(r.w1, r.y, r.x) || !typed(r.w2, r.y, r.x) || !typed(r.w3, r.x, r.y) || !typed(r.w4, r.x, r.y))
    throw DomainError("relation instance: w1, w2 must map y to x and w3, w4 must map x to y");
  const int a = *c.compose(r.w3, r.w1);
  const int b = *c.compose(r.w3, r.w2);
  const int cc = *c.compose(r.w4, r.w1);
  const int d = *c.compose(r.w4, r.w2);
  Word w = l.gamma(a, r.x);
  for (const Word& part : {inverse(l.gamma(b, r.x)), l.gamma(d, r.x), inverse(l.gamma(cc, r.x))})
    w.insert(w.end(), part.begin(), part.end());
  return free_reduce(w);
}

std::vector<RelationInstance> relation_instances(const FinCat& c, std::size_t limit) {
  std::vector<RelationInstance> out;
  const int n = static_cast<int>(c.object_count());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto in = c.hom(y, x);
      auto back = c.hom(x, y);
      for (int w1 : in)
        for (int w2 : in)
          for (int w3 : back)
            for (int w4 : back) {
              if (out.size() >= limit) throw ResourceError("relation instance limit exceeded");
              out.push_back({x, y, w1, w2, w3, w4});
            }
    }
  return out;
}

// ---------------------------------------------------------------- surfaces

SurfaceRelation surface_relation(const SurfaceCobordism& w1, const SurfaceCobordism& w2,
                                 const SurfaceCobordism& w3, const SurfaceCobordism& w4) {
  if (!w1.tgt().empty() || !w2.tgt().empty() || !w3.src().empty() || !w4.src().empty())
    throw DomainError("relation instance: w1, w2 must end at the empty set and w3, w4 start there");
  SurfaceRelation r;
  r.a = closed_part(compose_surface(w3, w1));
  r.b = closed_part(compose_surface(w3, w2));
  r.c = closed_part(compose_surface(w4, w1));
  r.d = closed_part(compose_surface(w4, w2));
  auto add = [&](const ClosedSurfaceClass& s, std::int64_t sign) {
    for (const auto& c : s) r.exponents[c] += sign;
  };
  add(r.a, 1);
  add(r.b, -1);
  add(r.d, 1);
  add(r.c, -1);
  std::erase_if(r.exponents, [](const auto& kv) { return kv.second == 0; });
  return r;
}

namespace {

// Pieces with one boundary circle: orientable genus g or h crosscaps.
std::vector<SurfaceComponent> one_circle_pieces(int max_complexity, bool incoming) {
  std::vector<SurfaceComponent> out;
  auto side = [&](bool orientable, int genus) {
    return incoming ? make_component(orientable, genus, {0}, {}) : make_component(orientable, genus, {}, {0});
  };
  for (int g = 0; 1 - 2 * g >= -max_complexity; ++g) out.push_back(side(true, g));
  for (int h = 1; 1 - h >= -max_complexity; ++h) out.push_back(side(false, h));
  return out;
}

// All ∅ → y (incoming = false) or y → ∅ morphisms with y = `circles`
// circles, no closed components, and every component of χ ≥ −max.
std::vector<SurfaceCobordism> surface_pieces(std::size_t circles, int max_complexity, bool incoming) {
  const auto ys = circle_ids(circles, "y");
  std::vector<SurfaceCobordism> out;
  auto make = [&](std::vector<SurfaceComponent> comps) {
    if (incoming) out.emplace_back(ys, std::vector<std::string>{}, std::move(comps));
    else out.emplace_back(std::vector<std::string>{}, ys, std::move(comps));
  };
  if (circles == 0) {
    make({});
  } else if (circles == 1) {
    for (auto& p : one_circle_pieces(max_complexity, incoming)) make({p});
  } else if (circles == 2) {
    const std::vector<int> both{0, 1};
    for (int g = 0; -2 * g >= -max_complexity; ++g)
      for (int e : {1, -1}) {
        if (incoming) make({make_component(true, g, both, {}, {1, e})});
        else make({make_component(true, g, {}, both, {1, e})});
      }
    for (int h = 1; -h >= -max_complexity; ++h) {
      if (incoming) make({make_component(false, h, both, {})});
      else make({make_component(false, h, {}, both)});
    }
    const auto singles = one_circle_pieces(max_complexity, incoming);
    for (const auto& p : singles)
      for (auto q : singles) {
        auto& slots = incoming ? q.in : q.out;
        slots[0] = 1;
        make({p, q});
      }
  } else {
    throw std::logic_error("surface_pieces: unsupported circle count");
  }
  return out;
}

struct LatticeBuilder {
  std::set<std::vector<std::int64_t>> rows;
  void add(std::vector<std::int64_t> row) {
    if (std::all_of(row.begin(), row.end(), [](std::int64_t v) { return v == 0; })) return;
    // fix a sign so r and −r dedupe together
    auto lead = std::find_if(row.begin(), row.end(), [](std::int64_t v) { return v != 0; });
    if (*lead < 0)
      for (auto& v : row) v = -v;
    rows.insert(std::move(row));
  }
  IntMatrix matrix(std::size_t cols) const {
    IntMatrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Integer(static_cast<long>(row[c]));
      ++r;
    }
    return m;
  }
};

// Pivoted instances M[i][j] − M[0][j] − M[i][0] + M[0][0]; these span the
// same lattice as all quadruples.
void add_pivoted(LatticeBuilder& lattice, const std::vector<std::vector<std::optional<std::vector<std::int64_t>>>>& m) {
  if (m.empty() || m[0].empty() || !m[0][0]) return;
  const std::size_t cols = m[0][0]->size();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (!m[i][j] || !m[0][j] || !m[i][0]) continue;
      std::vector<std::int64_t> row(cols);
      for (std::size_t k = 0; k < cols; ++k) row[k] = (*m[i][j])[k] - (*m[0][j])[k] - (*m[i][0])[k] + (*m[0][0])[k];
      lattice.add(std::move(row));
    }
}

std::int64_t single_coordinate(const AbelianInvariants& group, const std::vector<Integer>& cls) {
  if (group.rank != 1 || !group.torsion.empty() || cls.size() != 1)
    throw DomainError("integer class requested but the group is " + group.to_string());
  if (!fits_int64(cls[0])) throw ResourceError("class does not fit in 64 bits");
  return to_int64(cls[0]);
}

}  // namespace

std::int64_t SurfaceLocalization::integer_class(const ConnectedSurface& s) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), s);
  if (it == generators.end() || *it != s) throw DomainError(s.name() + " is outside the enumerated range");
  return single_coordinate(group, classes[static_cast<std::size_t>(it - generators.begin())]);
}

SurfaceLocalization surface_localization_group(int max_complexity) {
  if (max_complexity < 0) throw DomainError("max complexity must be non-negative");
  SurfaceLocalization out;
  for (int g = 0; 2 - 2 * g >= -max_complexity; ++g) out.generators.push_back({true, g});
  for (int h = 1; 2 - h >= -max_complexity; ++h) out.generators.push_back({false, h});
  std::sort(out.generators.begin(), out.generators.end());
  const std::size_t cols = out.generators.size();
  auto index = [&](const ConnectedSurface& s) -> std::optional<std::size_t> {
    auto it = std::lower_bound(out.generators.begin(), out.generators.end(), s);
    if (it == out.generators.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - out.generators.begin());
  };

  LatticeBuilder lattice;
  // y = ∅ admits only the empty w_i here and contributes nothing.
  for (std::size_t y = 1; y <= 2; ++y) {
    const auto cups = surface_pieces(y, max_complexity, false);
    const auto caps = surface_pieces(y, max_complexity, true);
    std::vector<std::vector<std::optional<std::vector<std::int64_t>>>> m(caps.size());
    for (std::size_t i = 0; i < caps.size(); ++i) {
      m[i].resize(cups.size());
      for (std::size_t j = 0; j < cups.size(); ++j) {
        std::vector<std::int64_t> v(cols, 0);
        bool ok = true;
        for (const auto& s : closed_part(compose_surface(cups[j], caps[i]))) {
          auto k = index(s);
          if (!k) {
            ok = false;
            break;
          }
          ++v[*k];
        }
        if (ok) m[i][j] = std::move(v);
      }
    }
    add_pivoted(lattice, m);
  }
  out.relators = lattice.rows.size();
  auto q = abelian_quotient(lattice.matrix(cols), cols);
  out.group = q.invariants;
  out.classes = std::move(q.classes);
  // orient the free coordinate so that RP² is positive
  if (out.group.rank == 1 && out.group.torsion.empty()) {
    const auto rp2 = index(ConnectedSurface::projective_plane());
    if (rp2 && out.classes[*rp2][0] < 0)
      for (auto& c : out.classes) c[0] = -c[0];
  }
  return out;
}

// ---------------------------------------------------------------- planar Cob₁

namespace {

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<Slice> s;
  for (auto it = d.slices().rbegin(); it != d.slices().rend(); ++it)
    s.push_back({it->kind == Slice::Kind::Cup ? Slice::Kind::Cap : Slice::Kind::Cup, it->index});
  return PlanarDiagram(d.n(), std::move(s));
}

// Breadth-first over isotopy classes of ∅ → k diagrams, k ≤ max_strands.
std::vector<PlanarDiagram> planar_cups(int y, int max_cups, int max_strands) {
  std::vector<PlanarDiagram> found;
  std::set<PlanarSignature> seen;
  std::vector<PlanarDiagram> frontier{PlanarDiagram(0, {})};
  seen.insert(planar_signature(frontier[0]));
  for (int len = 0; !frontier.empty(); ++len) {
    std::vector<PlanarDiagram> next;
    for (const auto& d : frontier) {
      if (d.n() == y) found.push_back(d);
      const int cups = static_cast<int>(std::count_if(d.slices().begin(), d.slices().end(),
                                                      [](const Slice& s) { return s.kind == Slice::Kind::Cup; }));
      std::vector<Slice> options;
      if (cups < max_cups && d.n() + 2 <= max_strands)
        for (int i = 0; i <= d.n(); ++i) options.push_back(cup_at(i));
      for (int i = 0; i + 1 < d.n(); ++i) options.push_back(cap_at(i));
      for (const Slice& s : options) {
        auto slices = d.slices();
        slices.push_back(s);
        PlanarDiagram e(0, std::move(slices));
        if (seen.insert(planar_signature(e)).second) next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const PlanarDiagram& a, const PlanarDiagram& b) { return a.length() < b.length(); });
  return found;
}

}  // namespace

std::int64_t PlanarLocalization::integer_class(const std::string& tree) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), tree);
  if (it == generators.end() || *it != tree) throw DomainError("tree " + tree + " is outside the enumerated range");
  return single_coordinate(group, classes[static_cast<std::size_t>(it - generators.begin())]);
}

PlanarLocalization planar_localization_group(int max_circles) {
  if (max_circles < 1) throw DomainError("max circles must be positive");
  PlanarLocalization out;

  // rooted trees with at most max_circles nodes, as sorted parenthesizations
  std::vector<std::set<std::string>> by_size(static_cast<std::size_t>(max_circles) + 1);
  std::vector<std::set<std::string>> forests(static_cast<std::size_t>(max_circles) + 1);
  forests[0].insert("");
  for (int n = 1; n <= max_circles; ++n) {
    for (const auto& f : forests[static_cast<std::size_t>(n - 1)]) by_size[static_cast<std::size_t>(n)].insert("(" + f + ")");
    // forests of size n: canonical sorted multisets of trees
    std::set<std::string> fs;
    std::function<void(int, std::vector<std::string>&, const std::string&)> build =
        [&](int remaining, std::vector<std::string>& acc, const std::string& floor) {
          if (remaining == 0) {
            std::string s;
            for (const auto& t : acc) s += t;
            fs.insert(s);
            return;
          }
          for (int k = 1; k <= remaining; ++k)
            for (const auto& t : by_size[static_cast<std::size_t>(k)]) {
              if (t < floor) continue;
              acc.push_back(t);
              build(remaining - k, acc, std::string(t));
              acc.pop_back();
            }
        };
    std::vector<std::string> acc;
    build(n, acc, std::string());
    forests[static_cast<std::size_t>(n)] = std::move(fs);
  }
  for (const auto& s : by_size) out.generators.insert(out.generators.end(), s.begin(), s.end());
  std::sort(out.generators.begin(), out.generators.end());
  const std::size_t cols = out.generators.size();

  LatticeBuilder lattice;
  for (int y : {0, 2, 4}) {
    const auto cups = planar_cups(y, max_circles + y / 2, y + 2 * ((max_circles + 1) / 2));
    out.diagrams += cups.size();
    std::vector<PlanarDiagram> caps;
    for (const auto& d : cups) caps.push_back(mirror(d));
    std::vector<std::vector<std::optional<std::vector<std::int64_t>>>> m(caps.size());
    for (std::size_t i = 0; i < caps.size(); ++i) {
      m[i].resize(cups.size());
      for (std::size_t j = 0; j < cups.size(); ++j) {
        std::vector<std::int64_t> v(cols, 0);
        bool ok = true;
        for (const auto& t : closed_forest(compose_planar(cups[j], caps[i]))) {
          auto it = std::lower_bound(out.generators.begin(), out.generators.end(), t);
          if (it == out.generators.end() || *it != t) {
            ok = false;
            break;
          }
          ++v[static_cast<std::size_t>(it - out.generators.begin())];
        }
        if (ok) m[i][j] = std::move(v);
      }
    }
    add_pivoted(lattice, m);
  }
  out.relators = lattice.rows.size();
  auto q = abelian_quotient(lattice.matrix(cols), cols);
  out.group = q.invariants;
  out.classes = std::move(q.classes);
  if (out.group.rank == 1 && out.group.torsion.empty()) {
    auto it = std::lower_bound(out.generators.begin(), out.generators.end(), std::string("()"));
    if (out.classes[static_cast<std::size_t>(it - out.generators.begin())][0] < 0)
      for (auto& c : out.classes) c[0] = -c[0];
  }

  // π₀ over objects 0..4 points, joined by single cups
  const int top = 4;
  UnionFind uf(top + 1);
  for (int k = 0; k + 2 <= top; ++k) uf.unite(static_cast<std::size_t>(k), static_cast<std::size_t>(k + 2));
  LatticeBuilder objects;  // one generator: the point
  for (int a = 0; a <= top; ++a)
    for (int b = a + 1; b <= top; ++b)
      if (uf.same(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) objects.add({b - a});
  // a point count 0 means the component of ∅ is the unit, hence the quotient
  out.pi0 = abelian_quotient(objects.matrix(1), 1).invariants;
  return out;
}

AbstractCob1Localization abstract_cob1_localization() {
  AbstractCob1Localization out;
  LatticeBuilder lattice;  // one generator: the circle
  for (int y : {0, 2, 4}) {
    // perfect matchings on y points
    std::vector<std::vector<int>> matchings;
    std::vector<int> partner(static_cast<std::size_t>(y), -1);
    std::function<void()> rec = [&] {
      auto it = std::find(partner.begin(), partner.end(), -1);
      if (it == partner.end()) {
        matchings.push_back(partner);
        return;
      }
      const int p = static_cast<int>(it - partner.begin());
      for (int q = p + 1; q < y; ++q) {
        if (partner[static_cast<std::size_t>(q)] != -1) continue;
        partner[static_cast<std::size_t>(p)] = q;
        partner[static_cast<std::size_t>(q)] = p;
        rec();
        partner[static_cast<std::size_t>(p)] = partner[static_cast<std::size_t>(q)] = -1;
      }
    };
    rec();
    std::vector<std::vector<std::optional<std::vector<std::int64_t>>>> m(matchings.size());
    for (std::size_t i = 0; i < matchings.size(); ++i)
      for (std::size_t j = 0; j < matchings.size(); ++j) {
        const Matching1D cap(y, 0, matchings[i]);
        const Matching1D cup(0, y, matchings[j]);
        m[i].push_back(std::vector<std::int64_t>{compose_abstract(cup, cap).circles()});
      }
    add_pivoted(lattice, m);
  }
  out.aut_empty = abelian_quotient(lattice.matrix(1), 1).invariants;
  // same object graph as the planar model
  LatticeBuilder objects;
  objects.add({2});
  out.pi0 = abelian_quotient(objects.matrix(1), 1).invariants;
  out.k_invariant = transport_swap_to_empty().circle_difference;
  return out;
}

}  // namespace cobcat
