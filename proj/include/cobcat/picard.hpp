#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cobcat/smith.hpp"

namespace cobcat {

/// ⊕ᵢ ℤ/orders[i], with order 0 meaning ℤ. Elements are coordinate
/// vectors, reduced into [0, order) on torsion coordinates.
struct FgAbelianGroup {
  std::vector<std::string> generators;
  std::vector<std::int64_t> orders;

  std::size_t size() const { return orders.size(); }
  /// Throws DomainError on negative orders or a name/order count mismatch.
  void check() const;
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> x) const;
  std::vector<std::int64_t> add(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const;
  std::vector<std::int64_t> scale(std::int64_t k, const std::vector<std::int64_t>& a) const;
  std::vector<std::int64_t> zero() const { return std::vector<std::int64_t>(orders.size(), 0); }
  bool is_zero(const std::vector<std::int64_t>& x) const;
  AbelianInvariants invariants() const;
};

/// Skeletal Picard groupoid data: π₀, π₁, a bilinear symmetry c and a
/// trilinear associator h, both given on generators.
struct PicardData {
  FgAbelianGroup pi0;
  FgAbelianGroup pi1;
  /// c[i][j] = c(eᵢ, eⱼ) ∈ π₁.
  std::vector<std::vector<std::vector<std::int64_t>>> c;
  /// h[i][j][k]; empty means h = 0.
  std::vector<std::vector<std::vector<std::vector<std::int64_t>>>> h;

  /// Fills missing tables with zeros and reduces entries. Throws
  /// DomainError when c is not antisymmetric or a table entry is not
  /// compatible with the generator orders.
  void check();
};

std::vector<std::int64_t> symmetry(const PicardData& p, const std::vector<std::int64_t>& x,
                                   const std::vector<std::int64_t>& y);
/// k(x) = c(x, x).
std::vector<std::int64_t> k_invariant(const PicardData& p, const std::vector<std::int64_t>& x);

inline constexpr std::uint64_t kDefaultSearchBound = 1'000'000;

/// Searches for isomorphisms α: π₀ → π₀′ and β: π₁ → π₁′ with
/// k′∘α = β∘k. Free generators are sent to coordinate vectors with
/// entries in {−1, 0, 1}. Throws ResourceError when the candidate count
/// exceeds `search_bound`.
bool picard_equivalent(const PicardData& p, const PicardData& q, std::uint64_t search_bound = kDefaultSearchBound);

/// Invertible vector spaces over 𝔽_p: π₀ = 0, π₁ = 𝔽_p^× ≅ ℤ/(p−1).
PicardData vect_picard(std::uint64_t p);
/// Invertible super vector spaces over 𝔽_p: π₀ = ℤ/2, π₁ = ℤ/(p−1),
/// c(1, 1) = −1, written through a primitive root.
PicardData svect_picard(std::uint64_t p);
/// ℤ/2-graded lines over 𝔽_p with the unsigned symmetry.
PicardData graded_vect_picard(std::uint64_t p);
/// The planar 1-dimensional model: π₀ = ℤ/2, π₁ = ℤ, and c read off the
/// abstract model's swap transport (which is 0).
PicardData cob1_picard();

/// Smallest primitive root mod p.
std::uint64_t primitive_root(std::uint64_t p);

}  // namespace cobcat
