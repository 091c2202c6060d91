#pragma once

#include <cstddef>
#include <vector>

#include "cobcat/fincat.hpp"
#include "cobcat/presentation.hpp"
#include "cobcat/smith.hpp"

namespace cobcat {

inline constexpr std::size_t kDefaultNerveCap = 3;
inline constexpr std::size_t kDefaultMaxCells = 1'000'000;

/// Normalized chain complex of the nerve: p-cells are composable p-tuples
/// (f₁, …, f_p) of non-identity morphisms, f₁ applied first. 0-cells are
/// objects, stored as one-element tuples holding the object id.
struct NerveComplex {
  std::size_t cap = 0;
  std::vector<std::vector<std::vector<int>>> cells;
  /// boundary[p] is |cells[p-1]| × |cells[p]|; boundary[0] is 0 × |cells[0]|.
  std::vector<IntMatrix> boundary;
};

/// Throws ResourceError when the total cell count would exceed `max_cells`.
/// Asserts ∂∘∂ = 0 before returning.
NerveComplex build_nerve(const FinCat& c, std::size_t cap = kDefaultNerveCap,
                         std::size_t max_cells = kDefaultMaxCells);

/// H₀ … H_{cap-1}. Degrees are reduced concurrently; the result does not
/// depend on scheduling.
std::vector<AbelianInvariants> homology(const NerveComplex& n);

/// Connected components of BC, each sorted, ordered by smallest member.
std::vector<std::vector<int>> pi0(const FinCat& c);

/// Spanning forest of the underlying undirected graph (non-identity
/// morphisms as edges), built breadth-first from the smallest object of
/// each component.
struct EdgePathData {
  std::vector<int> tree_edges;
  std::vector<int> parent_edge;  // per object; -1 at a basepoint
  std::vector<int> basepoint;    // per object
};

EdgePathData spanning_forest(const FinCat& c, int preferred_root = -1);

/// Edge-path presentation of π₁(BC, base).
///
/// Generators are the non-identity morphisms in the component of `base`.
/// Relators are the spanning-tree edges and, for every composable pair
/// (f, g) with h = g∘f, the word g·f·h⁻¹ (written in composition order; the
/// h⁻¹ letter is omitted when h is an identity).
struct EdgePathPresentation {
  GroupPresentation presentation;
  std::vector<int> generator_morphism;  // generator index ↦ morphism id
  std::vector<int> morphism_generator;  // morphism id ↦ generator, or -1
  EdgePathData forest;
};

/// Throws DomainError for an unknown basepoint.
EdgePathPresentation fundamental_group(const FinCat& c, int base);

}  // namespace cobcat
