#pragma once
// Shared generators and independent oracles for the test binaries.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cobcat/field.hpp"
#include "cobcat/int_matrix.hpp"
#include "cobcat/matching.hpp"
#include "cobcat/planar.hpp"
#include "cobcat/surface.hpp"

namespace cobcat::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -bound, bound);
  return m;
}

// Random morphism: slots dealt into a random number of components, each
// orientable or not, with random eps signs.
inline SurfaceCobordism gen_surface(Rng& rng, std::size_t m, std::size_t n, int max_closed = 1) {
  const int slots = int(m + n);
  const int pieces = std::max(1, uniform(rng, 1, std::max(1, slots)));
  std::vector<SurfaceComponent> comps(static_cast<std::size_t>(pieces));
  for (int s = 0; s < slots; ++s) {
    auto& c = comps[std::size_t(uniform(rng, 0, pieces - 1))];
    if (s < int(m)) c.in.push_back(s);
    else c.out.push_back(s - int(m));
  }
  std::vector<SurfaceComponent> kept;
  for (auto& c : comps)
    if (c.boundary_count() > 0) kept.push_back(c);
  for (int k = uniform(rng, 0, max_closed); k > 0; --k) kept.push_back({});
  for (auto& c : kept) {
    c.orientable = uniform(rng, 0, 2) != 0;
    c.genus = c.orientable ? uniform(rng, 0, 2) : uniform(rng, 1, 3);
    if (c.orientable)
      for (std::size_t i = 0; i < c.boundary_count(); ++i) c.eps.push_back(uniform(rng, 0, 1) ? 1 : -1);
  }
  return SurfaceCobordism(circle_ids(m), circle_ids(n), std::move(kept));
}

// Laplace expansion over the field, independent of the elimination routine.
inline Rational laplace(const Field& f, const FieldMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return f.normalize(a(0, 0));
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    FieldMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) sub(r - 1, k++) = a(r, c);
    const Rational term = f.mul(a(0, j), laplace(f, sub));
    total = j % 2 == 0 ? f.add(total, term) : f.sub(total, term);
  }
  return total;
}

inline Matching1D random_matching(Rng& rng, int m, int n, int circles) {
  std::vector<int> pts(static_cast<std::size_t>(m + n));
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<int> partner(pts.size());
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
    partner[std::size_t(pts[i])] = pts[i + 1];
    partner[std::size_t(pts[i + 1])] = pts[i];
  }
  return Matching1D(m, n, partner, circles);
}

/// Random slice word from m points, at most `max_strands` strands alive.
inline PlanarDiagram random_diagram(Rng& rng, int m, int length, int max_strands = 8) {
  std::vector<Slice> s;
  int k = m;
  for (int i = 0; i < length; ++i) {
    const bool can_cap = k >= 2;
    const bool can_cup = k + 2 <= max_strands;
    bool cup = can_cup && (!can_cap || uniform(rng, 0, 1) == 0);
    if (!cup && !can_cap) break;
    if (cup) {
      s.push_back(cup_at(uniform(rng, 0, k)));
      k += 2;
    } else {
      s.push_back(cap_at(uniform(rng, 0, k - 2)));
      k -= 2;
    }
  }
  return PlanarDiagram(m, std::move(s));
}

/// Rasterizes the strip picture of `w` and computes χ(X) − χ(X ∩ {t=0})
/// by pixel counting. Strands are 4-connected pixel paths with constant
/// height over their lifetime; cups and caps are vertical segments. The
/// red set X is the union of non-strand pixels with an odd number of
/// strands below them in their column.
inline std::int64_t raster_f(const PlanarDiagram& w) {
  struct Strand {
    double h;
    int born;
    int died;  // column, or -1 while alive
  };
  std::vector<Strand> strands;
  std::vector<int> alive;  // bottom to top, indices into strands
  for (int i = 0; i < w.m(); ++i) {
    strands.push_back({double(i + 1), 0, -1});
    alive.push_back(i);
  }
  struct Bar {
    int col;
    int a, b;  // strand indices joined
  };
  std::vector<Bar> bars;
  int col = 2;
  for (const Slice& s : w.slices()) {
    if (s.kind == Slice::Kind::Cup) {
      double lo = 0.0, hi = 2.0;
      if (!alive.empty()) {
        lo = s.index == 0 ? strands[alive.front()].h - 1.0 : strands[alive[s.index - 1]].h;
        hi = s.index == int(alive.size()) ? strands[alive.back()].h + 1.0
                                          : strands[alive[s.index]].h;
      }
      const int a = int(strands.size());
      strands.push_back({lo + (hi - lo) / 3, col, -1});
      strands.push_back({lo + 2 * (hi - lo) / 3, col, -1});
      alive.insert(alive.begin() + s.index, {a, a + 1});
      bars.push_back({col, a, a + 1});
    } else {
      const int a = alive[s.index], b = alive[s.index + 1];
      strands[a].died = strands[b].died = col;
      alive.erase(alive.begin() + s.index, alive.begin() + s.index + 2);
      bars.push_back({col, a, b});
    }
    col += 2;
  }
  const int width = col + 1;
  for (int i : alive) strands[i].died = width - 1;

  std::vector<double> hs;
  for (const Strand& s : strands) hs.push_back(s.h);
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  auto row_of = [&](double h) {
    return 2 * int(std::lower_bound(hs.begin(), hs.end(), h) - hs.begin()) + 2;
  };
  const int height = 2 * int(hs.size()) + 3;

  std::vector<std::vector<char>> strand_px(height, std::vector<char>(width, 0));
  for (const Strand& s : strands) {
    const int r = row_of(s.h);
    for (int c = s.born; c <= s.died; ++c) strand_px[r][c] = 1;
  }
  for (const Bar& b : bars) {
    int r0 = row_of(strands[b.a].h), r1 = row_of(strands[b.b].h);
    if (r0 > r1) std::swap(r0, r1);
    for (int r = r0; r <= r1; ++r) strand_px[r][b.col] = 1;
  }
  // Colour each column bottom-up by the parity of horizontal strand runs
  // crossed; vertical bars are strand pixels themselves.
  std::vector<std::vector<char>> red(height, std::vector<char>(width, 0));
  for (int c = 0; c < width; ++c) {
    int parity = 0;
    for (int r = 0; r < height; ++r) {
      if (strand_px[r][c]) {
        // Count every horizontal-crossing pixel run of length one;
        // a vertical run separates colours only via its endpoints' arms.
        if (r == 0 || !strand_px[r - 1][c]) {
          int e = r;
          while (e + 1 < height && strand_px[e + 1][c]) ++e;
          // A run of length one is a horizontal strand. A longer run is a
          // bar joining two adjacent strands: crossing it flips twice.
          if (e == r) parity ^= 1;
        }
        continue;
      }
      red[r][c] = char(parity);
    }
  }

  auto count_components = [&](auto inside, bool eight, bool interior_only) {
    std::vector<std::vector<char>> seen(height, std::vector<char>(width, 0));
    std::int64_t n = 0;
    for (int r = 0; r < height; ++r)
      for (int c = 0; c < width; ++c) {
        if (seen[r][c] || !inside(r, c)) continue;
        bool touches = false;
        std::vector<std::pair<int, int>> stack{{r, c}};
        seen[r][c] = 1;
        while (!stack.empty()) {
          auto [y, x] = stack.back();
          stack.pop_back();
          if (y == 0 || x == 0 || y == height - 1 || x == width - 1) touches = true;
          for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
              if ((dy == 0 && dx == 0) || (!eight && dy != 0 && dx != 0)) continue;
              const int yy = y + dy, xx = x + dx;
              if (yy < 0 || xx < 0 || yy >= height || xx >= width) continue;
              if (seen[yy][xx] || !inside(yy, xx)) continue;
              seen[yy][xx] = 1;
              stack.push_back({yy, xx});
            }
        }
        if (!interior_only || !touches) ++n;
      }
    return n;
  };
  const std::int64_t comps = count_components([&](int r, int c) { return red[r][c] == 1; },
                                              false, false);
  const std::int64_t holes = count_components([&](int r, int c) { return red[r][c] == 0; },
                                              true, true);
  std::int64_t runs = 0;
  for (int r = 0; r < height; ++r)
    if (red[r][0] && (r == 0 || !red[r - 1][0])) ++runs;
  return comps - holes - runs;
}

}  // namespace cobcat::testing
