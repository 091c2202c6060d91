#include "cobcat/matching.hpp"

#include <algorithm>

#include "cobcat/errors.hpp"

namespace cobcat {

Matching1D::Matching1D(int m, int n, std::vector<int> partner, std::int64_t circles)
    : m_(m), n_(n), partner_(std::move(partner)), circles_(circles) {
  if (m < 0 || n < 0) throw DomainError("matching: negative boundary size");
  if ((m + n) % 2 != 0) throw DomainError("matching: m + n must be even");
  if (partner_.size() != static_cast<std::size_t>(m + n))
    throw DomainError("matching: partner table has the wrong size");
  if (circles < 0) throw DomainError("matching: negative circle count");
  for (int p = 0; p < m + n; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= m + n || q == p || partner_[static_cast<std::size_t>(q)] != p)
      throw DomainError("matching: partner table is not a perfect matching");
  }
}

Matching1D Matching1D::from_pairs(int m, int n, std::span<const std::pair<int, int>> pairs,
                                  std::int64_t circles) {
  if (m < 0 || n < 0) throw DomainError("matching: negative boundary size");
  std::vector<int> partner(static_cast<std::size_t>(m + n), -1);
  for (auto [p, q] : pairs) {
    if (p < 0 || q < 0 || p >= m + n || q >= m + n || p == q ||
        partner[static_cast<std::size_t>(p)] >= 0 || partner[static_cast<std::size_t>(q)] >= 0)
      throw DomainError("matching: invalid pair list");
    partner[static_cast<std::size_t>(p)] = q;
    partner[static_cast<std::size_t>(q)] = p;
  }
  return Matching1D(m, n, std::move(partner), circles);
}

Matching1D Matching1D::identity(int k) {
  std::vector<int> partner(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) {
    partner[static_cast<std::size_t>(i)] = k + i;
    partner[static_cast<std::size_t>(k + i)] = i;
  }
  return Matching1D(k, k, std::move(partner));
}

Matching1D Matching1D::cup() { return Matching1D(0, 2, {1, 0}); }
Matching1D Matching1D::cap() { return Matching1D(2, 0, {1, 0}); }
Matching1D Matching1D::swap() { return Matching1D(2, 2, {3, 2, 1, 0}); }
Matching1D Matching1D::circle() { return Matching1D(0, 0, {}, 1); }

std::vector<std::pair<int, int>> Matching1D::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < m_ + n_; ++p)
    if (p < partner(p)) out.emplace_back(p, partner(p));
  return out;
}

Matching1D compose_abstract(const Matching1D& w, const Matching1D& w2) {
  if (w.n() != w2.m()) throw DomainError("compose: interface size mismatch");
  const int m = w.m(), k = w.n(), n = w2.n();
  // Outer points: w sources 0..m-1 and w2 targets (relabelled m..m+n-1).
  std::vector<int> partner(static_cast<std::size_t>(m + n), -1);
  std::vector<bool> middle_seen(static_cast<std::size_t>(k), false);

  // Walk from an outer point until another outer point is reached.
  auto walk = [&](bool in_w, int p) -> int {
    for (;;) {
      if (in_w) {
        const int q = w.partner(p);
        if (q < m) return q;
        middle_seen[static_cast<std::size_t>(q - m)] = true;
        in_w = false;
        p = q - m;
      } else {
        const int q = w2.partner(p);
        if (q >= k) return m + (q - k);
        middle_seen[static_cast<std::size_t>(q)] = true;
        in_w = true;
        p = m + q;
      }
    }
  };
  for (int p = 0; p < m; ++p)
    if (partner[static_cast<std::size_t>(p)] < 0) {
      const int q = walk(true, p);
      partner[static_cast<std::size_t>(p)] = q;
      partner[static_cast<std::size_t>(q)] = p;
    }
  for (int j = 0; j < n; ++j)
    if (partner[static_cast<std::size_t>(m + j)] < 0) {
      const int q = walk(false, k + j);
      partner[static_cast<std::size_t>(m + j)] = q;
      partner[static_cast<std::size_t>(q)] = m + j;
    }
  std::int64_t loops = 0;
  for (int j = 0; j < k; ++j) {
    if (middle_seen[static_cast<std::size_t>(j)]) continue;
    ++loops;
    // Trace the closed loop through the middle points.
    int p = j;
    do {
      middle_seen[static_cast<std::size_t>(p)] = true;
      const int a = w2.partner(p);  // a < k since the loop never leaves
      middle_seen[static_cast<std::size_t>(a)] = true;
      p = w.partner(m + a) - m;
    } while (p != j);
  }
  return Matching1D(m, n, std::move(partner), w.circles() + w2.circles() + loops);
}

Matching1D tensor(const Matching1D& a, const Matching1D& b) {
  const int m = a.m() + b.m(), n = a.n() + b.n();
  auto map_a = [&](int p) { return p < a.m() ? p : m + (p - a.m()); };
  auto map_b = [&](int p) { return p < b.m() ? a.m() + p : m + a.n() + (p - b.m()); };
  std::vector<int> partner(static_cast<std::size_t>(m + n));
  for (int p = 0; p < a.m() + a.n(); ++p) partner[static_cast<std::size_t>(map_a(p))] = map_a(a.partner(p));
  for (int p = 0; p < b.m() + b.n(); ++p) partner[static_cast<std::size_t>(map_b(p))] = map_b(b.partner(p));
  return Matching1D(m, n, std::move(partner), a.circles() + b.circles());
}

std::int64_t euler_functor_1d(const Matching1D& w) {
  return static_cast<std::int64_t>(w.arcs()) - w.m();
}

std::int64_t triviality_witness(int points) { return (points - points % 2) / 2; }

Matching1D act_boundary(const Matching1D& w, std::span<const int> perm) {
  const int m = w.m();
  if (perm.size() != static_cast<std::size_t>(m)) throw DomainError("act_boundary: size mismatch");
  std::vector<bool> hit(static_cast<std::size_t>(m), false);
  for (int v : perm) {
    if (v < 0 || v >= m || hit[static_cast<std::size_t>(v)])
      throw DomainError("act_boundary: not a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
  auto sigma = [&](int p) { return p < m ? perm[static_cast<std::size_t>(p)] : p; };
  std::vector<int> partner(static_cast<std::size_t>(m + w.n()));
  for (int p = 0; p < m + w.n(); ++p) partner[static_cast<std::size_t>(sigma(p))] = sigma(w.partner(p));
  return Matching1D(m, w.n(), std::move(partner), w.circles());
}

void RestrictedMorphism::check() const {
  if (m < 0 || n < 0) throw DomainError("restricted morphism: negative size");
  if (injection.size() != static_cast<std::size_t>(m))
    throw DomainError("restricted morphism: injection has the wrong size");
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int v : injection) {
    if (v < 0 || v >= n || used[static_cast<std::size_t>(v)])
      throw DomainError("restricted morphism: injection is not injective");
    used[static_cast<std::size_t>(v)] = true;
  }
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b || used[static_cast<std::size_t>(a)] ||
        used[static_cast<std::size_t>(b)])
      throw DomainError("restricted morphism: matching overlaps the image");
    used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw DomainError("restricted morphism: matching does not cover the complement");
}

Matching1D RestrictedMorphism::to_matching() const {
  check();
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < m; ++i) all.emplace_back(i, m + injection[static_cast<std::size_t>(i)]);
  for (auto [a, b] : pairs) all.emplace_back(m + a, m + b);
  return Matching1D::from_pairs(m, n, all);
}

RestrictedMorphism compose_restricted(const RestrictedMorphism& w, const RestrictedMorphism& w2) {
  if (w.n != w2.m) throw DomainError("compose: interface size mismatch");
  RestrictedMorphism out{w.m, w2.n, {}, w2.pairs};
  for (int v : w.injection) out.injection.push_back(w2.injection[static_cast<std::size_t>(v)]);
  for (auto [a, b] : w.pairs)
    out.pairs.emplace_back(w2.injection[static_cast<std::size_t>(a)], w2.injection[static_cast<std::size_t>(b)]);
  return out;
}

RestrictedMorphism tensor(const RestrictedMorphism& a, const RestrictedMorphism& b) {
  RestrictedMorphism out{a.m + b.m, a.n + b.n, a.injection, a.pairs};
  for (int v : b.injection) out.injection.push_back(a.n + v);
  for (auto [p, q] : b.pairs) out.pairs.emplace_back(a.n + p, a.n + q);
  return out;
}

SwapTransport transport_swap_to_empty() {
  const Matching1D cup = Matching1D::cup(), cap = Matching1D::cap();
  SwapTransport t;
  t.swap_closure_circles = compose_abstract(compose_abstract(cup, Matching1D::swap()), cap).circles();
  t.unit_closure_circles = compose_abstract(cup, cap).circles();
  t.circle_difference = t.swap_closure_circles - t.unit_closure_circles;
  return t;
}

}  // namespace cobcat
