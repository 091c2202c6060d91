#include "cobcat/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "cobcat/errors.hpp"
#include "cobcat/union_find.hpp"

namespace cobcat {

std::string ConnectedSurface::name() const {
  if (orientable) {
    if (genus == 0) return "S2";
    if (genus == 1) return "T2";
    return "Sigma_" + std::to_string(genus);
  }
  if (genus == 1) return "RP2";
  if (genus == 2) return "K";
  return "N_" + std::to_string(genus);
}

ConnectedSurface parse_surface_name(const std::string& name) {
  if (name == "S2") return ConnectedSurface::sphere();
  if (name == "T2") return ConnectedSurface::torus();
  if (name == "RP2") return ConnectedSurface::projective_plane();
  if (name == "K") return ConnectedSurface::klein_bottle();
  auto parse_tail = [&](std::size_t from) {
    const std::string tail = name.substr(from);
    if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        tail.size() > 6)
      throw DomainError("unknown surface name '" + name + "'");
    return std::stoi(tail);
  };
  if (name.rfind("Sigma_", 0) == 0) return {true, parse_tail(6)};
  if (name.rfind("N_", 0) == 0) {
    const int h = parse_tail(2);
    if (h < 1) throw DomainError("N_h needs h >= 1");
    return {false, h};
  }
  throw DomainError("unknown surface name '" + name + "'");
}

namespace {

void check_connected(const ConnectedSurface& s) {
  if (s.genus < 0 || (!s.orientable && s.genus < 1)) throw DomainError("invalid connected surface");
}

}  // namespace

ConnectedSurface connected_sum(const ConnectedSurface& a, const ConnectedSurface& b) {
  check_connected(a);
  check_connected(b);
  if (a.orientable && b.orientable) return {true, a.genus + b.genus};
  // A handle turns into two crosscaps once a crosscap is present.
  const int ha = a.orientable ? 2 * a.genus : a.genus;
  const int hb = b.orientable ? 2 * b.genus : b.genus;
  return {false, ha + hb};
}

ClosedSurfaceClass canonical(ClosedSurfaceClass s) {
  for (const auto& c : s) check_connected(c);
  std::sort(s.begin(), s.end());
  return s;
}

int unoriented_class(const ClosedSurfaceClass& s) {
  std::int64_t chi = 0;
  for (const auto& c : s) {
    check_connected(c);
    chi += c.euler();
  }
  return static_cast<int>(((chi % 2) + 2) % 2);
}

bool is_nullbordant(const ClosedSurfaceClass& s) { return unoriented_class(s) == 0; }

int oriented_class(const ClosedSurfaceClass& s) {
  for (const auto& c : s) {
    check_connected(c);
    if (!c.orientable) throw DomainError("oriented_class: " + c.name() + " is not orientable");
  }
  return 0;
}

int unoriented_class_points(std::size_t points) { return static_cast<int>(points % 2); }

std::int64_t oriented_class_points(std::span<const int> signs) {
  std::int64_t total = 0;
  for (int s : signs) {
    if (s != 1 && s != -1) throw DomainError("point orientation must be +1 or -1");
    total += s;
  }
  return total;
}

int unoriented_class_circles(std::size_t) { return 0; }

int oriented_class_circles(std::span<const int> orientations) {
  for (int s : orientations)
    if (s != 1 && s != -1) throw DomainError("circle orientation must be +1 or -1");
  return 0;
}

std::int64_t SurfaceComponent::euler() const {
  const auto b = static_cast<std::int64_t>(boundary_count());
  return orientable ? 2 - 2 * std::int64_t{genus} - b : 2 - std::int64_t{genus} - b;
}

namespace {

void canonicalize(SurfaceComponent& c) {
  if (c.genus < 0 || (!c.orientable && c.genus < 1)) throw DomainError("component has invalid genus/crosscaps");
  const std::size_t b = c.boundary_count();
  if (!c.orientable || b == 0) {
    c.eps.clear();
    std::sort(c.in.begin(), c.in.end());
    std::sort(c.out.begin(), c.out.end());
    return;
  }
  if (c.eps.size() != b) throw DomainError("orientable component needs one eps sign per boundary circle");
  for (int e : c.eps)
    if (e != 1 && e != -1) throw DomainError("eps signs must be +1 or -1");
  auto sort_side = [&](std::vector<int>& slots, std::size_t offset) {
    std::vector<std::size_t> order(slots.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return slots[x] < slots[y]; });
    std::vector<int> s2, e2;
    for (std::size_t i : order) {
      s2.push_back(slots[i]);
      e2.push_back(c.eps[offset + i]);
    }
    slots = std::move(s2);
    std::copy(e2.begin(), e2.end(), c.eps.begin() + static_cast<std::ptrdiff_t>(offset));
  };
  sort_side(c.in, 0);
  sort_side(c.out, c.in.size());
  if (c.eps.front() == -1)
    for (int& e : c.eps) e = -e;
}

}  // namespace

SurfaceCobordism::SurfaceCobordism(std::vector<std::string> src, std::vector<std::string> tgt,
                                   std::vector<SurfaceComponent> components)
    : src_(std::move(src)), tgt_(std::move(tgt)), components_(std::move(components)) {
  std::vector<int> seen_in(src_.size(), 0), seen_out(tgt_.size(), 0);
  for (auto& c : components_) {
    for (int s : c.in) {
      if (s < 0 || static_cast<std::size_t>(s) >= src_.size()) throw DomainError("component names an unknown source circle");
      ++seen_in[static_cast<std::size_t>(s)];
    }
    for (int s : c.out) {
      if (s < 0 || static_cast<std::size_t>(s) >= tgt_.size()) throw DomainError("component names an unknown target circle");
      ++seen_out[static_cast<std::size_t>(s)];
    }
    canonicalize(c);
  }
  for (std::size_t i = 0; i < src_.size(); ++i)
    if (seen_in[i] != 1) throw DomainError("source circle '" + src_[i] + "' must lie in exactly one component");
  for (std::size_t i = 0; i < tgt_.size(); ++i)
    if (seen_out[i] != 1) throw DomainError("target circle '" + tgt_[i] + "' must lie in exactly one component");
  std::sort(components_.begin(), components_.end());
}

SurfaceCobordism SurfaceCobordism::identity(const std::vector<std::string>& circles) {
  std::vector<SurfaceComponent> comps;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const int s = static_cast<int>(i);
    comps.push_back({true, 0, {s}, {s}, {1, -1}});
  }
  return SurfaceCobordism(circles, circles, std::move(comps));
}

SurfaceCobordism SurfaceCobordism::closed(const ClosedSurfaceClass& s) {
  std::vector<SurfaceComponent> comps;
  for (const auto& c : s) comps.push_back({c.orientable, c.genus, {}, {}, {}});
  return SurfaceCobordism({}, {}, std::move(comps));
}

SurfaceCobordism compose_surface(const SurfaceCobordism& w, const SurfaceCobordism& w2) {
  if (w.tgt() != w2.src()) throw DomainError("compose: target of the first cobordism differs from source of the second");
  const auto& A = w.components();
  const auto& B = w2.components();
  const std::size_t na = A.size(), total = A.size() + B.size();
  auto comp = [&](std::size_t v) -> const SurfaceComponent& { return v < na ? A[v] : B[v - na]; };

  // Per glued circle: owning node and eps on each side.
  const std::size_t k = w.tgt().size();
  std::vector<std::size_t> a_node(k), b_node(k);
  std::vector<int> a_eps(k, 0), b_eps(k, 0);
  for (std::size_t v = 0; v < na; ++v)
    for (std::size_t j = 0; j < A[v].out.size(); ++j) {
      const auto s = static_cast<std::size_t>(A[v].out[j]);
      a_node[s] = v;
      if (!A[v].eps.empty()) a_eps[s] = A[v].eps[A[v].in.size() + j];
    }
  for (std::size_t v = 0; v < B.size(); ++v)
    for (std::size_t j = 0; j < B[v].in.size(); ++j) {
      const auto s = static_cast<std::size_t>(B[v].in[j]);
      b_node[s] = na + v;
      if (!B[v].eps.empty()) b_eps[s] = B[v].eps[j];
    }

  UnionFind uf(total);
  // adjacency: (neighbour, relative flip) where o_other = flip · o_this
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(total);
  for (std::size_t s = 0; s < k; ++s) {
    uf.unite(a_node[s], b_node[s]);
    if (a_eps[s] != 0 && b_eps[s] != 0) {
      const int flip = -a_eps[s] * b_eps[s];
      adj[a_node[s]].push_back({b_node[s], flip});
      adj[b_node[s]].push_back({a_node[s], flip});
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < total; ++v) groups[uf.find(v)].push_back(v);

  std::vector<SurfaceComponent> out;
  std::vector<int> sign(total, 0);
  for (const auto& [root, members] : groups) {
    bool orientable = true;
    std::int64_t chi = 0;
    for (std::size_t v : members) {
      orientable = orientable && comp(v).orientable;
      chi += comp(v).euler();
    }
    if (orientable) {
      // 2-colour the orientation flips; an odd cycle makes the result non-orientable
      std::queue<std::size_t> q;
      sign[members.front()] = 1;
      q.push(members.front());
      while (!q.empty() && orientable) {
        const std::size_t v = q.front();
        q.pop();
        for (auto [u, flip] : adj[v]) {
          if (sign[u] == 0) {
            sign[u] = flip * sign[v];
            q.push(u);
          } else if (sign[u] != flip * sign[v]) {
            orientable = false;
            break;
          }
        }
      }
    }
    SurfaceComponent r;
    r.orientable = orientable;
    for (std::size_t v : members) {
      const auto& c = comp(v);
      if (v < na) {
        for (std::size_t j = 0; j < c.in.size(); ++j) {
          r.in.push_back(c.in[j]);
          if (orientable && !c.eps.empty()) r.eps.push_back(sign[v] * c.eps[j]);
        }
      }
    }
    for (std::size_t v : members) {
      const auto& c = comp(v);
      if (v >= na) {
        for (std::size_t j = 0; j < c.out.size(); ++j) {
          r.out.push_back(c.out[j]);
          if (orientable && !c.eps.empty()) r.eps.push_back(sign[v] * c.eps[c.in.size() + j]);
        }
      }
    }
    const auto b = static_cast<std::int64_t>(r.boundary_count());
    if (orientable) {
      const std::int64_t twice_g = 2 - chi - b;
      if (twice_g < 0 || twice_g % 2 != 0) throw std::logic_error("compose: non-integral genus");
      r.genus = static_cast<int>(twice_g / 2);
    } else {
      const std::int64_t h = 2 - chi - b;
      if (h < 1) throw std::logic_error("compose: crosscap count below one");
      r.genus = static_cast<int>(h);
      r.eps.clear();
    }
    out.push_back(std::move(r));
  }
  return SurfaceCobordism(w.src(), w2.tgt(), std::move(out));
}

SurfaceCobordism disjoint_union(const SurfaceCobordism& a, const SurfaceCobordism& b) {
  auto src = a.src();
  auto tgt = a.tgt();
  src.insert(src.end(), b.src().begin(), b.src().end());
  tgt.insert(tgt.end(), b.tgt().begin(), b.tgt().end());
  auto check_unique = [](std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw DomainError("disjoint union: circle ids clash");
  };
  check_unique(src);
  check_unique(tgt);
  auto comps = a.components();
  const int ds = static_cast<int>(a.src().size()), dt = static_cast<int>(a.tgt().size());
  for (auto c : b.components()) {
    for (int& s : c.in) s += ds;
    for (int& s : c.out) s += dt;
    comps.push_back(std::move(c));
  }
  return SurfaceCobordism(std::move(src), std::move(tgt), std::move(comps));
}

std::int64_t euler_tqft(const SurfaceCobordism& w) {
  std::int64_t chi = 0;
  for (const auto& c : w.components()) chi += c.euler();
  return chi;
}

ClosedSurfaceClass closed_part(const SurfaceCobordism& w) {
  ClosedSurfaceClass s;
  for (const auto& c : w.components())
    if (c.boundary_count() == 0) s.push_back({c.orientable, c.genus});
  return canonical(std::move(s));
}

bool is_k_connected(const SurfaceCobordism& w, int k) {
  if (k == -1) return true;
  if (k != 0) throw DomainError("connectivity is only modelled for k = -1 and k = 0");
  return std::all_of(w.components().begin(), w.components().end(),
                     [](const SurfaceComponent& c) { return !c.out.empty(); });
}

SurfaceCobordism act_boundary(const SurfaceCobordism& w, std::span<const int> perm, const std::vector<bool>& reflect) {
  const std::size_t n = w.src().size();
  if (perm.size() != n || reflect.size() != n) throw DomainError("boundary action: size mismatch");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || hit[static_cast<std::size_t>(p)])
      throw DomainError("boundary action: not a permutation");
    hit[static_cast<std::size_t>(p)] = true;
  }
  std::vector<std::string> src(n);
  for (std::size_t i = 0; i < n; ++i) src[static_cast<std::size_t>(perm[i])] = w.src()[i];
  auto comps = w.components();
  for (auto& c : comps) {
    for (std::size_t j = 0; j < c.in.size(); ++j) {
      const auto old = static_cast<std::size_t>(c.in[j]);
      if (!c.eps.empty() && reflect[old]) c.eps[j] = -c.eps[j];
      c.in[j] = perm[old];
    }
  }
  return SurfaceCobordism(std::move(src), w.tgt(), std::move(comps));
}

SurfaceCobordism forget_orientation(const OrientedSurfaceCobordism& w) {
  if (w.src_orientation.size() != w.src.size() || w.tgt_orientation.size() != w.tgt.size())
    throw DomainError("oriented cobordism: one orientation per circle required");
  std::vector<SurfaceComponent> comps;
  for (const auto& c : w.components) {
    SurfaceComponent r{true, c.genus, c.in, c.out, {}};
    for (int s : c.in) {
      if (s < 0 || static_cast<std::size_t>(s) >= w.src.size()) throw DomainError("unknown source circle");
      r.eps.push_back(w.src_orientation[static_cast<std::size_t>(s)]);
    }
    for (int s : c.out) {
      if (s < 0 || static_cast<std::size_t>(s) >= w.tgt.size()) throw DomainError("unknown target circle");
      r.eps.push_back(-w.tgt_orientation[static_cast<std::size_t>(s)]);
    }
    comps.push_back(std::move(r));
  }
  return SurfaceCobordism(w.src, w.tgt, std::move(comps));
}

SurfaceComponent make_component(bool orientable, int genus, std::vector<int> in, std::vector<int> out,
                                std::vector<int> eps) {
  SurfaceComponent c{orientable, genus, std::move(in), std::move(out), std::move(eps)};
  if (orientable && c.eps.empty()) {
    c.eps.assign(c.in.size(), 1);
    c.eps.insert(c.eps.end(), c.out.size(), -1);
  }
  return c;
}

SurfaceCobordism random_surface(const std::vector<std::string>& src, const std::vector<std::string>& tgt,
                                std::mt19937_64& rng, int max_genus, int max_closed) {
  const std::size_t b = src.size() + tgt.size();
  // random partition of the boundary circles into components
  std::vector<int> block(b);
  int blocks = 0;
  for (std::size_t i = 0; i < b; ++i) {
    const int choice = static_cast<int>(rng() % static_cast<std::uint64_t>(blocks + 1));
    block[i] = choice;
    if (choice == blocks) ++blocks;
  }
  std::vector<SurfaceComponent> comps(static_cast<std::size_t>(blocks));
  for (std::size_t i = 0; i < b; ++i) {
    auto& c = comps[static_cast<std::size_t>(block[i])];
    if (i < src.size()) c.in.push_back(static_cast<int>(i));
    else c.out.push_back(static_cast<int>(i - src.size()));
  }
  auto fill = [&](SurfaceComponent& c) {
    c.orientable = rng() % 3 != 0;
    c.genus = static_cast<int>(rng() % static_cast<std::uint64_t>(max_genus + 1));
    if (!c.orientable && c.genus == 0) c.genus = 1;
    c.eps.clear();
    if (c.orientable)
      for (std::size_t j = 0; j < c.boundary_count(); ++j) c.eps.push_back(rng() % 2 ? 1 : -1);
  };
  for (auto& c : comps) fill(c);
  const int closed = max_closed > 0 ? static_cast<int>(rng() % static_cast<std::uint64_t>(max_closed + 1)) : 0;
  for (int i = 0; i < closed; ++i) {
    SurfaceComponent c;
    fill(c);
    comps.push_back(std::move(c));
  }
  return SurfaceCobordism(src, tgt, std::move(comps));
}

std::vector<ZigZagStep> connectivity_zigzag(std::size_t from, std::size_t to) {
  auto all = [](std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
  };
  const auto a = circle_ids(from, "a");
  const auto b = circle_ids(to, "b");
  if (from == 0 && to == 0) return {{SurfaceCobordism::identity({}), true}};
  if (to > 0) {
    // one connected piece; every circle on the out side is reached
    return {{SurfaceCobordism(a, b, {make_component(true, 0, all(from), all(to))}), true}};
  }
  // n → 1 ← 0: both legs have outgoing boundary
  const auto mid = circle_ids(1, "m");
  SurfaceCobordism up(a, mid, {make_component(true, 0, all(from), {0})});
  SurfaceCobordism disc({}, mid, {make_component(true, 0, {}, {0})});
  return {{up, true}, {disc, false}};
}

std::vector<std::string> circle_ids(std::size_t count, const std::string& prefix) {
  std::vector<std::string> ids;
  ids.reserve(count);
  for (std::size_t i = 0; i < count; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

}  // namespace cobcat
