#include <numeric>
#include <optional>

#include "doctest.h"
#include "support.hpp"

#include "cobcat/errors.hpp"
#include "cobcat/surface.hpp"

using namespace cobcat;
using namespace cobcat::testing;

namespace {

// Composition by brute force: pieces joined along middle circles, χ added,
// orientability decided by trying every sign assignment on the pieces.
SurfaceCobordism oracle_compose(const SurfaceCobordism& w, const SurfaceCobordism& w2) {
  struct Piece {
    const SurfaceComponent* c;
    bool second;
  };
  std::vector<Piece> ps;
  for (const auto& c : w.components()) ps.push_back({&c, false});
  for (const auto& c : w2.components()) ps.push_back({&c, true});
  const std::size_t mid = w.tgt().size();
  // (piece, eps) on each side of middle circle j
  std::vector<std::pair<int, int>> left(mid), right(mid);
  for (int p = 0; p < int(ps.size()); ++p) {
    const SurfaceComponent& c = *ps[std::size_t(p)].c;
    auto eps_at = [&](std::size_t k) { return c.eps.empty() ? 0 : c.eps[k]; };
    if (!ps[std::size_t(p)].second)
      for (std::size_t k = 0; k < c.out.size(); ++k)
        left[std::size_t(c.out[k])] = {p, eps_at(c.in.size() + k)};
    else
      for (std::size_t k = 0; k < c.in.size(); ++k) right[std::size_t(c.in[k])] = {p, eps_at(k)};
  }
  std::vector<int> label(ps.size(), -1);
  int groups = 0;
  for (int p = 0; p < int(ps.size()); ++p) {
    if (label[std::size_t(p)] >= 0) continue;
    std::vector<int> stack{p};
    label[std::size_t(p)] = groups;
    while (!stack.empty()) {
      const int q = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < mid; ++j) {
        int other = -1;
        if (left[j].first == q) other = right[j].first;
        if (right[j].first == q) other = left[j].first;
        if (other >= 0 && label[std::size_t(other)] < 0) {
          label[std::size_t(other)] = groups;
          stack.push_back(other);
        }
      }
    }
    ++groups;
  }
  std::vector<SurfaceComponent> out;
  for (int g = 0; g < groups; ++g) {
    std::vector<int> members;
    for (int p = 0; p < int(ps.size()); ++p)
      if (label[std::size_t(p)] == g) members.push_back(p);
    std::int64_t chi = 0;
    bool all_orientable = true;
    for (int p : members) {
      chi += ps[std::size_t(p)].c->euler();
      all_orientable = all_orientable && ps[std::size_t(p)].c->orientable;
    }
    std::optional<std::vector<int>> signs;
    if (all_orientable) {
      for (std::uint64_t mask = 0; mask < (1ull << members.size()) && !signs; ++mask) {
        std::vector<int> s(ps.size(), 1);
        for (std::size_t i = 0; i < members.size(); ++i)
          s[std::size_t(members[i])] = (mask >> i) & 1 ? -1 : 1;
        bool ok = true;
        for (std::size_t j = 0; j < mid; ++j)
          if (label[std::size_t(left[j].first)] == g &&
              s[std::size_t(left[j].first)] * left[j].second != -s[std::size_t(right[j].first)] * right[j].second)
            ok = false;
        if (ok) signs = s;
      }
    }
    SurfaceComponent r;
    std::vector<std::pair<int, int>> in_eps, out_eps;
    for (int p : members) {
      const SurfaceComponent& c = *ps[std::size_t(p)].c;
      const int s = signs ? (*signs)[std::size_t(p)] : 0;
      if (!ps[std::size_t(p)].second)
        for (std::size_t k = 0; k < c.in.size(); ++k) in_eps.push_back({c.in[k], signs ? s * c.eps[k] : 0});
      else
        for (std::size_t k = 0; k < c.out.size(); ++k)
          out_eps.push_back({c.out[k], signs ? s * c.eps[c.in.size() + k] : 0});
    }
    std::sort(in_eps.begin(), in_eps.end());
    std::sort(out_eps.begin(), out_eps.end());
    for (auto [slot, e] : in_eps) r.in.push_back(slot);
    for (auto [slot, e] : out_eps) r.out.push_back(slot);
    const std::int64_t b = std::int64_t(r.boundary_count());
    r.orientable = signs.has_value();
    r.genus = int(r.orientable ? (2 - chi - b) / 2 : 2 - chi - b);
    if (r.orientable && b > 0) {
      for (auto [slot, e] : in_eps) r.eps.push_back(e);
      for (auto [slot, e] : out_eps) r.eps.push_back(e);
      if (r.eps[0] < 0)
        for (int& e : r.eps) e = -e;
    }
    out.push_back(r);
  }
  return SurfaceCobordism(w.src(), w2.tgt(), std::move(out));
}

SurfaceCobordism cob(std::size_t m, std::size_t n, std::vector<SurfaceComponent> comps) {
  return SurfaceCobordism(circle_ids(m), circle_ids(n), std::move(comps));
}

const ConnectedSurface S2 = ConnectedSurface::sphere(), T2 = ConnectedSurface::torus(),
                       RP2 = ConnectedSurface::projective_plane(), K = ConnectedSurface::klein_bottle();

}  // namespace

TEST_CASE("composition matches the brute-force gluing oracle") {
  Rng rng(51);
  for (int t = 0; t < 5000; ++t) {
    const std::size_t a = std::size_t(uniform(rng, 0, 4)), b = std::size_t(uniform(rng, 0, 4)),
                      c = std::size_t(uniform(rng, 0, 4));
    const SurfaceCobordism w = gen_surface(rng, a, b), w2 = gen_surface(rng, b, c);
    REQUIRE(compose_surface(w, w2) == oracle_compose(w, w2));
  }
}

TEST_CASE("associativity and unit laws") {
  Rng rng(52);
  for (int t = 0; t < 10000; ++t) {
    std::size_t n[4];
    for (auto& k : n) k = std::size_t(uniform(rng, 0, 4));
    const SurfaceCobordism f = gen_surface(rng, n[0], n[1]), g = gen_surface(rng, n[1], n[2]),
                           h = gen_surface(rng, n[2], n[3]);
    REQUIRE(compose_surface(compose_surface(f, g), h) == compose_surface(f, compose_surface(g, h)));
    CHECK(compose_surface(SurfaceCobordism::identity(f.src()), f) == f);
    CHECK(compose_surface(f, SurfaceCobordism::identity(f.tgt())) == f);
    CHECK(euler_tqft(compose_surface(f, g)) == euler_tqft(f) + euler_tqft(g));
  }
}

TEST_CASE("library generator also satisfies the laws") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 2000; ++t) {
    const auto a = circle_ids(rng() % 4), b = circle_ids(rng() % 4), c = circle_ids(rng() % 4);
    const SurfaceCobordism w = random_surface(a, b, rng), w2 = random_surface(b, c, rng);
    CHECK(compose_surface(w, w2) == oracle_compose(w, w2));
  }
}

TEST_CASE("interface mismatch is rejected") {
  CHECK_THROWS_AS(compose_surface(SurfaceCobordism::identity(circle_ids(1)),
                                  SurfaceCobordism::identity(circle_ids(2))),
                  DomainError);
  CHECK_THROWS_AS(cob(1, 1, {make_component(true, 0, {0}, {})}), DomainError);
  CHECK_THROWS_AS(cob(1, 0, {make_component(true, 0, {0}, {}), make_component(true, 0, {0}, {})}),
                  DomainError);
}

TEST_CASE("torus or Klein bottle from the eps parity") {
  const auto annulus_out = cob(0, 2, {make_component(true, 0, {}, {0, 1}, {1, -1})});
  const auto annulus_in = cob(2, 0, {make_component(true, 0, {0, 1}, {}, {1, -1})});
  const auto twisted_in = cob(2, 0, {make_component(true, 0, {0, 1}, {}, {1, 1})});
  CHECK(closed_part(compose_surface(annulus_out, annulus_in)) == ClosedSurfaceClass{T2});
  CHECK(closed_part(compose_surface(annulus_out, twisted_in)) == ClosedSurfaceClass{K});
  // reflecting one incoming circle swaps the two
  const std::vector<int> id{0, 1};
  CHECK(act_boundary(annulus_in, id, {false, true}) == twisted_in);
  CHECK(act_boundary(annulus_in, id, {true, true}) == annulus_in);
  CHECK(act_boundary(annulus_in, std::vector<int>{1, 0}, {false, false}).components() ==
        annulus_in.components());
  const auto disc = cob(0, 1, {make_component(true, 0, {}, {0})});
  const auto cap = cob(1, 0, {make_component(true, 0, {0}, {})});
  const auto mobius = cob(1, 0, {make_component(false, 1, {0}, {})});
  CHECK(closed_part(compose_surface(disc, cap)) == ClosedSurfaceClass{S2});
  CHECK(closed_part(compose_surface(disc, mobius)) == ClosedSurfaceClass{RP2});
  CHECK(euler_tqft(compose_surface(annulus_out, twisted_in)) == 0);
}

TEST_CASE("boundary action is an action") {
  Rng rng(54);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t m = std::size_t(uniform(rng, 1, 4));
    const SurfaceCobordism w = gen_surface(rng, m, std::size_t(uniform(rng, 0, 3)));
    std::vector<int> p(m), q(m);
    std::iota(p.begin(), p.end(), 0);
    std::iota(q.begin(), q.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    std::vector<bool> r(m), s(m), none(m, false);
    for (std::size_t i = 0; i < m; ++i) {
      r[i] = uniform(rng, 0, 1);
      s[i] = uniform(rng, 0, 1);
    }
    const std::vector<int> id = [&] {
      std::vector<int> v(m);
      std::iota(v.begin(), v.end(), 0);
      return v;
    }();
    CHECK(act_boundary(w, id, none) == w);
    // (q, s) after (p, r): old slot i goes to q[p[i]], reflected r[i] xor s[p[i]]
    std::vector<int> qp(m);
    std::vector<bool> rs(m);
    for (std::size_t i = 0; i < m; ++i) {
      qp[i] = q[std::size_t(p[i])];
      rs[i] = r[i] != s[std::size_t(p[i])];
    }
    CHECK(act_boundary(act_boundary(w, p, r), q, s) == act_boundary(w, qp, rs));
    CHECK(euler_tqft(act_boundary(w, p, r)) == euler_tqft(w));
  }
}

TEST_CASE("disjoint union interchanges with composition") {
  Rng rng(55);
  for (int t = 0; t < 1000; ++t) {
    auto rename = [](const SurfaceCobordism& w, const std::string& pre) {
      auto ren = [&](const std::vector<std::string>& ids) {
        std::vector<std::string> out;
        for (const auto& id : ids) out.push_back(pre + id);
        return out;
      };
      return SurfaceCobordism(ren(w.src()), ren(w.tgt()), w.components());
    };
    const std::size_t a = std::size_t(uniform(rng, 0, 2)), b = std::size_t(uniform(rng, 0, 2)),
                      c = std::size_t(uniform(rng, 0, 2)), d = std::size_t(uniform(rng, 0, 2)),
                      e = std::size_t(uniform(rng, 0, 2)), f = std::size_t(uniform(rng, 0, 2));
    const auto v1 = rename(gen_surface(rng, a, b), "x"), w1 = rename(gen_surface(rng, b, c), "x");
    const auto v2 = rename(gen_surface(rng, d, e), "y"), w2 = rename(gen_surface(rng, e, f), "y");
    CHECK(compose_surface(disjoint_union(v1, v2), disjoint_union(w1, w2)) ==
          disjoint_union(compose_surface(v1, w1), compose_surface(v2, w2)));
    CHECK(euler_tqft(disjoint_union(v1, v2)) == euler_tqft(v1) + euler_tqft(v2));
  }
  CHECK_THROWS_AS(disjoint_union(SurfaceCobordism::identity(circle_ids(1)),
                                 SurfaceCobordism::identity(circle_ids(1))),
                  DomainError);
}

TEST_CASE("connected sums and closed classes") {
  CHECK(connected_sum(T2, RP2) == ConnectedSurface{false, 3});
  CHECK(connected_sum(T2, T2) == ConnectedSurface{true, 2});
  CHECK(connected_sum(RP2, RP2) == K);
  CHECK(connected_sum(S2, K) == K);
  CHECK(parse_surface_name("Sigma_3") == ConnectedSurface{true, 3});
  CHECK(parse_surface_name("N_4") == ConnectedSurface{false, 4});
  CHECK_THROWS_AS(parse_surface_name("banana"), DomainError);
  CHECK(unoriented_class({RP2}) == 1);
  CHECK(unoriented_class({K}) == 0);
  CHECK(unoriented_class({RP2, RP2}) == 0);
  CHECK(is_nullbordant({T2, S2}));
  CHECK_FALSE(is_nullbordant({connected_sum(RP2, K)}));
  CHECK(oriented_class({T2}) == 0);
  CHECK_THROWS_AS(oriented_class({RP2}), DomainError);
  CHECK(unoriented_class_points(3) == 1);
  CHECK(oriented_class_points(std::vector<int>{1, 1, -1}) == 1);
  CHECK(unoriented_class_circles(5) == 0);
}

TEST_CASE("connected sum fuzzing: χ and orientability determine the result") {
  Rng rng(56);
  for (int t = 0; t < 10000; ++t) {
    const int n = uniform(rng, 1, 6);
    ConnectedSurface acc = S2;
    std::int64_t chi = 2;
    bool orientable = true;
    std::vector<ConnectedSurface> parts;
    for (int i = 0; i < n; ++i) {
      const bool o = uniform(rng, 0, 1);
      const ConnectedSurface s{o, o ? uniform(rng, 0, 3) : uniform(rng, 1, 3)};
      parts.push_back(s);
      acc = connected_sum(acc, s);
      chi += s.euler() - 2;
      orientable = orientable && o;
    }
    REQUIRE(acc.euler() == chi);
    REQUIRE(acc.orientable == orientable);
    // any order gives the same surface
    std::shuffle(parts.begin(), parts.end(), rng);
    ConnectedSurface again = S2;
    for (const auto& s : parts) again = connected_sum(again, s);
    CHECK(again == acc);
    CHECK(parse_surface_name(acc.name()) == acc);
    // disjoint unions are free commutative: canonical forms agree iff multisets agree
    ClosedSurfaceClass u = parts, v = parts;
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(canonical(u) == canonical(v));
    std::int64_t total_chi = 0;
    for (const auto& s : parts) total_chi += s.euler();
    CHECK(unoriented_class(u) == int((total_chi % 2 + 2) % 2));
  }
}

TEST_CASE("0-connected morphisms are closed under composition") {
  Rng rng(57);
  std::size_t both = 0;
  for (int t = 0; t < 5000; ++t) {
    const std::size_t a = std::size_t(uniform(rng, 0, 3)), b = std::size_t(uniform(rng, 1, 3)),
                      c = std::size_t(uniform(rng, 1, 3));
    const SurfaceCobordism w = gen_surface(rng, a, b, 0), w2 = gen_surface(rng, b, c, 0);
    CHECK(is_k_connected(w, -1));
    if (is_k_connected(w, 0) && is_k_connected(w2, 0)) {
      ++both;
      CHECK(is_k_connected(compose_surface(w, w2), 0));
    }
  }
  CHECK(both > 100);
  CHECK(is_k_connected(SurfaceCobordism::identity(circle_ids(3)), 0));
  CHECK_FALSE(is_k_connected(cob(1, 0, {make_component(true, 0, {0}, {})}), 0));
  CHECK_THROWS_AS(is_k_connected(SurfaceCobordism::identity(circle_ids(1)), 1), DomainError);
}

TEST_CASE("zig-zags connect every object: pi0 of the 0-connected category is trivial") {
  for (std::size_t from = 0; from <= 4; ++from)
    for (std::size_t to = 0; to <= 4; ++to) {
      std::size_t cur = from;
      for (const ZigZagStep& s : connectivity_zigzag(from, to)) {
        CHECK(is_k_connected(s.morphism, 0));
        const std::size_t start = s.forward ? s.morphism.src().size() : s.morphism.tgt().size();
        const std::size_t end = s.forward ? s.morphism.tgt().size() : s.morphism.src().size();
        CHECK(start == cur);
        cur = end;
      }
      CHECK(cur == to);
    }
}

TEST_CASE("forgetting orientations") {
  OrientedSurfaceCobordism keep{{"a"}, {"a"}, {1}, {1}, {{0, {0}, {0}}}};
  CHECK(forget_orientation(keep) == SurfaceCobordism::identity({"a"}));
  OrientedSurfaceCobordism flip{{"a"}, {"a"}, {1}, {-1}, {{0, {0}, {0}}}};
  const SurfaceCobordism r = forget_orientation(flip);
  CHECK_FALSE(r == SurfaceCobordism::identity({"a"}));
  CHECK(compose_surface(r, r) == SurfaceCobordism::identity({"a"}));
  // an oriented pair of pants stays orientable after gluing
  OrientedSurfaceCobordism pants{{"a", "b"}, {"a"}, {1, -1}, {1}, {{0, {0, 1}, {0}}}};
  OrientedSurfaceCobordism copants{{"a"}, {"a", "b"}, {1}, {1, -1}, {{0, {0}, {0, 1}}}};
  const auto glued = compose_surface(forget_orientation(copants), forget_orientation(pants));
  REQUIRE(glued.components().size() == 1);
  CHECK(glued.components()[0].orientable);
  CHECK(glued.components()[0].genus == 1);
}
