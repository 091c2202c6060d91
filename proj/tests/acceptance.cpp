// Acceptance run: one PASS/FAIL line per criterion. Sample sizes, seeds and
// time limits are fixed here; a criterion that overruns its limit fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "support.hpp"

#include "cobcat/errors.hpp"
#include "cobcat/fincat.hpp"
#include "cobcat/frobenius.hpp"
#include "cobcat/localize.hpp"
#include "cobcat/nerve.hpp"
#include "cobcat/picard.hpp"
#include "cobcat/presentation.hpp"

using namespace cobcat;
using namespace cobcat::testing;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

const AbelianInvariants kZ{1, {}};
const AbelianInvariants kZero{};
const AbelianInvariants kZ2{0, {2}};

// Poset on n+1 elements with random relations below a top (or above a
// bottom) element.
FinCat poset_with_extremum(Rng& rng, int n, bool top) {
  const auto N = std::size_t(n + 1);
  std::vector<std::vector<bool>> leq(N, std::vector<bool>(N, false));
  for (std::size_t i = 0; i < N; ++i) leq[i][i] = true;
  for (std::size_t i = 0; i < std::size_t(n); ++i) {
    if (top) leq[i][std::size_t(n)] = true;
    else leq[std::size_t(n)][i] = true;
    for (std::size_t j = i + 1; j < std::size_t(n); ++j)
      if (uniform(rng, 0, 1)) leq[i][j] = true;
  }
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < N; ++i) names.push_back(std::to_string(i));
  return poset_category(names, leq);
}

std::string criterion1() {
  expect(homology(build_nerve(proper_subset_poset(4), 3)) == std::vector{kZ, kZero, kZ},
         "proper subsets of {0,1,2,3}: H != (Z, 0, Z)");
  const GroupPresentation pi1 =
      simplify_presentation(fundamental_group(parallel_arrows_category(), 0).presentation, 16);
  expect(pi1.generators.size() == 1 && pi1.relators.empty(), "parallel arrows: pi1 is not free on one generator");
  Rng rng(101);
  int samples = 0;
  for (int t = 0; t < 60; ++t) {
    const FinCat c = poset_with_extremum(rng, uniform(rng, 1, 6), t % 2 == 0);
    expect(homology(build_nerve(c, 4)) == std::vector{kZ, kZero, kZero, kZero},
           "category with a terminal/initial object has non-trivial homology");
    ++samples;
  }
  expect(homology(build_nerve(terminal_category(), 4)) == std::vector{kZ, kZero, kZero, kZero},
         "terminal category");
  return "S2 poset (Z,0,Z); pi1(parallel) = <g | >; " + std::to_string(samples) +
         " categories with terminal/initial object contractible through H3";
}

std::string criterion2() {
  // dimension 0: unoriented class is the parity of the count, oriented the signed count
  for (std::size_t a = 0; a < 12; ++a)
    for (std::size_t b = 0; b < 12; ++b)
      expect(unoriented_class_points(a + b) == (unoriented_class_points(a) + unoriented_class_points(b)) % 2,
             "N0 class not additive");
  expect(unoriented_class_points(1) == 1 && unoriented_class_points(2) == 0, "N0 is not Z/2");
  std::vector<int> signs;
  for (int n = 1; n <= 10; ++n) {
    signs.push_back(1);
    expect(oriented_class_points(signs) == n, "Omega0: n positive points must have class n");
  }
  Rng rng(102);
  for (int t = 0; t < 1000; ++t) {
    std::vector<int> s, u;
    for (int k = uniform(rng, 0, 6); k > 0; --k) s.push_back(uniform(rng, 0, 1) ? 1 : -1);
    for (int k = uniform(rng, 0, 6); k > 0; --k) u.push_back(uniform(rng, 0, 1) ? 1 : -1);
    std::vector<int> su = s;
    su.insert(su.end(), u.begin(), u.end());
    expect(oriented_class_points(su) == oriented_class_points(s) + oriented_class_points(u),
           "Omega0 class not additive");
  }
  // dimension 1: every closed 1-manifold bounds
  for (std::size_t n = 0; n < 10; ++n) {
    expect(unoriented_class_circles(n) == 0, "N1 != 0");
    std::vector<int> o(n, 1);
    expect(oriented_class_circles(o) == 0, "Omega1 != 0");
  }
  // dimension 2
  expect(unoriented_class({ConnectedSurface::projective_plane()}) == 1, "RP2 should generate N2");
  expect(is_nullbordant({ConnectedSurface::klein_bottle()}), "Klein bottle must be nullbordant");
  for (int t = 0; t < 2000; ++t) {
    ClosedSurfaceClass u, v;
    for (int k = uniform(rng, 0, 4); k > 0; --k) {
      const bool o = uniform(rng, 0, 1);
      u.push_back({o, o ? uniform(rng, 0, 3) : uniform(rng, 1, 5)});
    }
    for (int k = uniform(rng, 0, 4); k > 0; --k) v.push_back(ConnectedSurface{false, uniform(rng, 1, 5)});
    ClosedSurfaceClass uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    expect(unoriented_class(uv) == (unoriented_class(u) + unoriented_class(v)) % 2, "N2 class not additive");
    ClosedSurfaceClass orientable;
    for (const auto& s : u)
      if (s.orientable) orientable.push_back(s);
    expect(oriented_class(orientable) == 0, "Omega2 != 0");
  }
  bool threw = false;
  try {
    oriented_class({ConnectedSurface::projective_plane()});
  } catch (const DomainError&) {
    threw = true;
  }
  expect(threw, "oriented class accepted RP2");
  return "N0 = Z/2, N1 = 0, N2 = Z/2 (RP2 generator, K nullbordant), Omega0 = Z, Omega1 = Omega2 = 0";
}

std::string criterion3() {
  std::ostringstream detail;
  for (int m : {4, 6, 8}) {
    const SurfaceLocalization s = surface_localization_group(m);
    expect(s.group == kZ, "max-chi " + std::to_string(m) + ": group is " + s.group.to_string());
    for (const auto& g : s.generators)
      expect(s.integer_class(g) == g.euler(), "class(" + g.name() + ") != chi");
    expect(s.integer_class(ConnectedSurface::torus()) == 0 && s.integer_class(ConnectedSurface::klein_bottle()) == 0,
           "torus and Klein bottle classes differ from the empty surface");
    detail << "max-chi " << m << ": Z, " << s.generators.size() << " generators, " << s.relators << " relators; ";
  }
  detail << "class = chi, class(T2) = class(K) = class(empty) = 0";
  return detail.str();
}

std::string criterion4() {
  Rng rng(104);
  for (int t = 0; t < 10000; ++t) {
    const PlanarDiagram a = random_diagram(rng, uniform(rng, 0, 4), uniform(rng, 0, 40));
    const PlanarDiagram b = random_diagram(rng, a.n(), uniform(rng, 0, 40));
    expect(f_invariant(compose_planar(a, b)) == f_invariant(a) + f_invariant(b), "f not additive");
  }
  expect(f_invariant(PlanarDiagram(0, {cup_at(0), cap_at(0)})) == 1, "f(circle) != 1");
  expect(f_invariant(PlanarDiagram(0, {cup_at(0), cup_at(1), cap_at(1), cap_at(0)})) == 0, "f(nested pair) != 0");
  // Exhaustive where the word count allows, then a random sample up to length 12.
  std::size_t exhaustive = 0;
  std::vector<Slice> cur;
  std::function<void(int, int, int)> rec = [&](int m, int k, int left) {
    const PlanarDiagram w(m, cur);
    expect(raster_f(w) == f_invariant(w), "raster oracle disagrees");
    ++exhaustive;
    if (left == 0) return;
    for (int i = 0; i <= k; ++i) {
      cur.push_back(cup_at(i));
      rec(m, k + 2, left - 1);
      cur.pop_back();
    }
    for (int i = 0; i + 2 <= k; ++i) {
      cur.push_back(cap_at(i));
      rec(m, k - 2, left - 1);
      cur.pop_back();
    }
  };
  for (int m = 0; m <= 2; ++m) rec(m, m, 6);
  const int sampled = 100000;
  for (int t = 0; t < sampled; ++t) {
    const PlanarDiagram w = random_diagram(rng, uniform(rng, 0, 4), uniform(rng, 7, 12), 12);
    expect(raster_f(w) == f_invariant(w), "raster oracle disagrees on a sampled word");
  }
  return "10^4 composable pairs (length <= 40) additive; f(circle) = 1, f(nested) = 0; raster oracle agrees on all " +
         std::to_string(exhaustive) + " words of length <= 6 from 0-2 points and " + std::to_string(sampled) +
         " random words of length 7-12 (exhaustive length 12 is ~5e12 words)";
}

std::string criterion5() {
  Rng rng(105);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t a = std::size_t(uniform(rng, 0, 4)), b = std::size_t(uniform(rng, 0, 4)),
                      c = std::size_t(uniform(rng, 0, 4));
    const SurfaceCobordism w = gen_surface(rng, a, b, 2), w2 = gen_surface(rng, b, c, 2);
    expect(euler_tqft(compose_surface(w, w2)) == euler_tqft(w) + euler_tqft(w2), "E(w2 o w1) != E(w1) + E(w2)");
  }
  std::size_t checked = 0;
  for (int t = 0; t < 10000; ++t) {
    int m = uniform(rng, 0, 6), n = uniform(rng, 0, 6);
    if ((m + n) % 2) ++n;
    const Matching1D w = random_matching(rng, m, n, uniform(rng, 0, 3));
    int k = uniform(rng, 0, 6);
    if ((n + k) % 2) ++k;
    const Matching1D w2 = random_matching(rng, n, k, 0);
    for (const Matching1D& x : {w, w2, compose_abstract(w, w2)}) {
      expect(euler_functor_1d(x) == triviality_witness(x.n()) - triviality_witness(x.m()),
             "E1 != eta(tgt) - eta(src)");
      ++checked;
    }
  }
  return "10^4 composable surface pairs additive; E1 = eta o tgt - eta o src on " + std::to_string(checked) +
         " matchings";
}

std::string criterion6() {
  Rng rng(106);
  std::size_t integrality_failures = 0;
  for (int t = 0; t < 10000; ++t) {
    std::size_t n[4];
    for (auto& k : n) k = std::size_t(uniform(rng, 0, 4));
    const SurfaceCobordism f = gen_surface(rng, n[0], n[1]), g = gen_surface(rng, n[1], n[2]),
                           h = gen_surface(rng, n[2], n[3]);
    try {
      expect(compose_surface(compose_surface(f, g), h) == compose_surface(f, compose_surface(g, h)),
             "associativity");
      expect(compose_surface(SurfaceCobordism::identity(f.src()), f) == f, "left unit");
      expect(compose_surface(f, SurfaceCobordism::identity(f.tgt())) == f, "right unit");
    } catch (const std::logic_error&) {
      ++integrality_failures;
    }
  }
  expect(integrality_failures == 0, "genus/crosscap bookkeeping failed");
  // annulus ∅ → 2 glued to annulus 2 → ∅ for every eps choice
  int tori = 0, kleins = 0;
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int c : {1, -1})
        for (int d : {1, -1}) {
          const SurfaceCobordism out(circle_ids(0), circle_ids(2), {make_component(true, 0, {}, {0, 1}, {a, b})});
          const SurfaceCobordism in(circle_ids(2), circle_ids(0), {make_component(true, 0, {0, 1}, {}, {c, d})});
          const ClosedSurfaceClass got = closed_part(compose_surface(out, in));
          const bool parity = a * c == b * d;
          expect(got == ClosedSurfaceClass{parity ? ConnectedSurface::torus() : ConnectedSurface::klein_bottle()},
                 "cylinder gluing ignores eps parity");
          (parity ? tori : kleins) += 1;
        }
  return "10^4 triples associative, unit laws hold, no integrality failures; annulus gluings: " +
         std::to_string(tori) + " tori, " + std::to_string(kleins) + " Klein bottles by eps parity";
}

std::string criterion7() {
  Rng rng(107);
  for (int t = 0; t < 10000; ++t) {
    ClosedSurfaceClass parts;
    for (int k = uniform(rng, 1, 6); k > 0; --k) {
      const bool o = uniform(rng, 0, 1);
      parts.push_back({o, o ? uniform(rng, 0, 3) : uniform(rng, 1, 4)});
    }
    // build the endomorphism of ∅ by composing the pieces in a random order
    ClosedSurfaceClass order = parts;
    std::shuffle(order.begin(), order.end(), rng);
    SurfaceCobordism acc = SurfaceCobordism::identity({});
    for (const auto& s : order) acc = compose_surface(acc, SurfaceCobordism::closed({s}));
    ClosedSurfaceClass sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    expect(closed_part(acc) == sorted, "factorization differs from the multiset of pieces");
    expect(acc == SurfaceCobordism::closed(parts), "composite depends on the order");
    // a different multiset gives a different morphism
    ClosedSurfaceClass other = parts;
    other[std::size_t(uniform(rng, 0, int(other.size()) - 1))].genus += 1;
    expect(!(SurfaceCobordism::closed(other) == acc), "distinct factorizations collide");
  }
  return "10^4 random factorizations recovered exactly; order-independent; distinct multisets distinct";
}

std::string criterion8() {
  Rng rng(108);
  const std::vector<Field> fields{Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5),
                                  Field::prime(7)};
  int yes = 0, no = 0;
  for (int t = 0; t < 100; ++t) {
    const Field f = fields[std::size_t(t % 5)];
    const std::size_t dim = std::size_t(1 + t % 4);
    FrobeniusDatum d{f, dim, FieldMatrix(dim, dim)};
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j) d.pairing(i, j) = d.pairing(j, i) = uniform(rng, -1, 1);
    d.check();
    const ExtensionVerdict e = extend_to_full(d);
    const bool nondegenerate = laplace(f, d.pairing) != 0;
    expect(e.extends == nondegenerate, "extension verdict disagrees with det B");
    (e.extends ? yes : no) += 1;
    if (!e.extends) continue;
    const Matching1D zig = compose_abstract(tensor(Matching1D::identity(1), Matching1D::cup()),
                                            tensor(Matching1D::cap(), Matching1D::identity(1)));
    expect(e.theory->evaluate(zig) == FieldMatrix::identity(dim), "zig-zag is not the identity");
  }
  for (const Field& f : fields)
    for (std::size_t dim = 1; dim <= 4; ++dim) {
      FrobeniusDatum d{f, dim, FieldMatrix::identity(dim)};
      d.check();
      expect(extend_to_full(d).theory->circle_value() == f.normalize(Rational(long(dim))),
             "Z(circle) != dim X");
    }
  return "100 random B over Q, F2, F3, F5, F7 (dim <= 4): " + std::to_string(yes) + " extend, " +
         std::to_string(no) + " degenerate, all matching det B; zig-zag = id; Z(circle) = dim";
}

std::string criterion9() {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 101u}) {
    const PicardData s = svect_picard(p);
    const std::int64_t e = k_invariant(s, {1})[0];
    // g^e must be −1 mod p for the generator g of π₁
    std::uint64_t x = 1;
    for (std::int64_t i = 0; i < e; ++i) x = x * primitive_root(p) % p;
    expect(x == p - 1, "k(sVect) != -1 over F_" + std::to_string(p));
    const PicardData v = vect_picard(p);
    expect(v.pi0.size() == 0, "Vect has nontrivial pi0");
  }
  const PlanarLocalization planar = planar_localization_group(4);
  expect(planar.pi0 == kZ2 && planar.group == kZ, "planar Cob1 model is not (Z/2, Z)");
  Rng rng(109);
  std::size_t samples = 0;
  for (const PicardData& p : {svect_picard(5), svect_picard(7), graded_vect_picard(5), cob1_picard(),
                              svect_picard(2)}) {
    for (int t = 0; t < 200; ++t) {
      std::vector<std::int64_t> x(p.pi0.size()), y(p.pi0.size());
      for (auto& c : x) c = uniform(rng, -4, 4);
      for (auto& c : y) c = uniform(rng, -4, 4);
      x = p.pi0.reduce(x);
      y = p.pi0.reduce(y);
      expect(symmetry(p, x, y) == p.pi1.scale(-1, symmetry(p, y, x)), "c not antisymmetric");
      expect(k_invariant(p, p.pi0.add(x, y)) == p.pi1.add(k_invariant(p, x), k_invariant(p, y)), "k not linear");
      expect(p.pi1.is_zero(p.pi1.scale(2, k_invariant(p, x))), "k does not factor through mod 2");
      ++samples;
    }
  }
  return "k(sVect) = -1 for 8 primes, Vect trivial; planar Cob1 model (pi0, pi1) = (Z/2, Z); " +
         std::to_string(samples) + " samples antisymmetric, k linear mod 2";
}

// Tube every component without outgoing boundary into one that has some.
SurfaceCobordism repair(const SurfaceCobordism& w) {
  std::vector<SurfaceComponent> keep, loose;
  for (const auto& c : w.components()) (c.out.empty() ? loose : keep).push_back(c);
  SurfaceComponent& host = keep.front();
  for (const auto& c : loose) {
    const std::int64_t chi = host.euler() + c.euler() - 2;
    std::vector<std::pair<int, int>> in;  // slot, eps
    const bool orientable = host.orientable && c.orientable;
    for (std::size_t k = 0; k < host.in.size(); ++k) in.push_back({host.in[k], orientable ? host.eps[k] : 0});
    for (std::size_t k = 0; k < c.in.size(); ++k) in.push_back({c.in[k], orientable ? c.eps[k] : 0});
    std::sort(in.begin(), in.end());
    SurfaceComponent merged;
    merged.orientable = orientable;
    for (auto [slot, e] : in) {
      merged.in.push_back(slot);
      if (orientable) merged.eps.push_back(e);
    }
    merged.out = host.out;
    if (orientable)
      for (std::size_t k = 0; k < host.out.size(); ++k) merged.eps.push_back(host.eps[host.in.size() + k]);
    const std::int64_t b = std::int64_t(merged.boundary_count());
    merged.genus = int(orientable ? (2 - chi - b) / 2 : 2 - chi - b);
    host = merged;
  }
  return SurfaceCobordism(w.src(), w.tgt(), keep);
}

std::string criterion10() {
  Rng rng(110);
  std::size_t pairs = 0, draws = 0;
  while (pairs < 10000) {
    ++draws;
    const std::size_t a = std::size_t(uniform(rng, 0, 3)), b = std::size_t(uniform(rng, 1, 4)),
                      c = std::size_t(uniform(rng, 1, 4));
    const SurfaceCobordism w = gen_surface(rng, a, b, 0), w2 = gen_surface(rng, b, c, 0);
    if (!is_k_connected(w, 0) || !is_k_connected(w2, 0)) continue;
    expect(is_k_connected(compose_surface(w, w2), 0), "0-connected morphisms not closed under composition");
    ++pairs;
  }
  // Truncated category: objects of 0-4 circles. Every object is joined to
  // every other by a zig-zag of 0-connected morphisms, and every sampled
  // morphism with nonempty target has a 0-connected partner on the same
  // endpoints.
  for (std::size_t from = 0; from <= 4; ++from)
    for (std::size_t to = 0; to <= 4; ++to) {
      std::size_t cur = from;
      for (const ZigZagStep& s : connectivity_zigzag(from, to)) {
        expect(is_k_connected(s.morphism, 0), "zig-zag step is not 0-connected");
        expect((s.forward ? s.morphism.src() : s.morphism.tgt()).size() == cur, "zig-zag does not chain");
        cur = (s.forward ? s.morphism.tgt() : s.morphism.src()).size();
      }
      expect(cur == to, "zig-zag ends at the wrong object");
    }
  std::size_t repaired = 0;
  for (int t = 0; t < 2000; ++t) {
    const SurfaceCobordism w = gen_surface(rng, std::size_t(uniform(rng, 0, 4)), std::size_t(uniform(rng, 1, 4)), 2);
    const SurfaceCobordism r = repair(w);
    expect(is_k_connected(r, 0), "repair left a component without outgoing boundary");
    expect(r.src() == w.src() && r.tgt() == w.tgt(), "repair moved the endpoints");
    std::int64_t chi_w = 0, chi_r = 0, loose = 0;
    for (const auto& c : w.components()) {
      chi_w += c.euler();
      loose += c.out.empty();
    }
    for (const auto& c : r.components()) chi_r += c.euler();
    expect(chi_r == chi_w - 2 * loose, "tubing did not lower chi by 2 per merged component");
    repaired += loose > 0;
  }
  return std::to_string(pairs) + " 0-connected pairs (of " + std::to_string(draws) +
         " draws) compose to 0-connected morphisms; objects 0-4 circles pairwise joined by 0-connected zig-zags; " +
         std::to_string(repaired) + " non-0-connected samples tubed to 0-connected partners";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no limit
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "nerve homology", 5, criterion1},
      {2, "cobordism groups", 0, criterion2},
      {3, "surface localization", 60, criterion3},
      {4, "planar f functor", 0, criterion4},
      {5, "Euler TQFT", 0, criterion5},
      {6, "composition laws", 0, criterion6},
      {7, "free commutative monoid", 0, criterion7},
      {8, "restricted/extended theories", 0, criterion8},
      {9, "Picard data", 0, criterion9},
      {10, "connectivity subcategory", 30, criterion10},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      ok = false;
      detail = "over time limit; " + detail;
    }
    char timing[64];
    if (c.limit_seconds > 0) std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_seconds);
    else std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::printf("%s criterion %2d  %-29s [%s] %s\n", ok ? "PASS" : "FAIL", c.id, c.name, timing, detail.c_str());
    std::fflush(stdout);
    failed += !ok;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
