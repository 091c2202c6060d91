#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cobcat {

/// Abstract 1-cobordism m → n: a perfect matching on the m + n boundary
/// points plus a count of closed circles. Source points are 0 … m-1,
/// target points m … m+n-1.
class Matching1D {
 public:
  Matching1D() = default;
  /// Throws DomainError unless `partner` is a fixed-point-free involution
  /// on m + n points and circles ≥ 0.
  Matching1D(int m, int n, std::vector<int> partner, std::int64_t circles = 0);
  static Matching1D from_pairs(int m, int n, std::span<const std::pair<int, int>> pairs,
                               std::int64_t circles = 0);

  static Matching1D identity(int k);
  static Matching1D cup();   // 0 → 2
  static Matching1D cap();   // 2 → 0
  static Matching1D swap();  // 2 → 2, crossing
  static Matching1D circle();

  int m() const { return m_; }
  int n() const { return n_; }
  int partner(int p) const { return partner_[static_cast<std::size_t>(p)]; }
  std::int64_t circles() const { return circles_; }
  /// Pairs (p, q) with p < q, sorted.
  std::vector<std::pair<int, int>> pairs() const;
  std::size_t arcs() const { return partner_.size() / 2; }

  friend bool operator==(const Matching1D&, const Matching1D&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<int> partner_;
  std::int64_t circles_ = 0;
};

/// w2 ∘ w: splice through the middle boundary; closed loops become circles.
/// Throws DomainError when w.n() != w2.m().
Matching1D compose_abstract(const Matching1D& w, const Matching1D& w2);

/// Disjoint union, `a` on the low-numbered points of each side.
Matching1D tensor(const Matching1D& a, const Matching1D& b);

/// χ(W) − χ(M₀) = #arcs − m = (n − m)/2.
std::int64_t euler_functor_1d(const Matching1D& w);

/// η(M) = ⌊|M|/2⌋; euler_functor_1d(w) = η(n) − η(m).
std::int64_t triviality_witness(int points);

/// Relabels source points: old source point i becomes point perm[i].
Matching1D act_boundary(const Matching1D& w, std::span<const int> perm);

/// Morphism of the connectivity-restricted category: an injection
/// M₀ ↪ M₁ plus a matching on the complement of its image.
struct RestrictedMorphism {
  int m = 0;
  int n = 0;
  std::vector<int> injection;                 // size m, values in [0, n)
  std::vector<std::pair<int, int>> pairs;     // target points, disjoint from the image

  /// Throws DomainError when malformed.
  void check() const;
  Matching1D to_matching() const;
  friend bool operator==(const RestrictedMorphism&, const RestrictedMorphism&) = default;
};

RestrictedMorphism compose_restricted(const RestrictedMorphism& w, const RestrictedMorphism& w2);
RestrictedMorphism tensor(const RestrictedMorphism& a, const RestrictedMorphism& b);

/// The unoriented 1-dimensional Picard data read off the abstract model:
/// the symmetry of pt ⊔ pt transported to Aut(∅) as
/// [cap ∘ swap ∘ cup] − [cap ∘ cup], in circle counts.
struct SwapTransport {
  std::int64_t swap_closure_circles = 0;
  std::int64_t unit_closure_circles = 0;
  std::int64_t circle_difference = 0;
};
SwapTransport transport_swap_to_empty();

}  // namespace cobcat
