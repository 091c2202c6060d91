#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cobcat/fincat.hpp"
#include "cobcat/nerve.hpp"
#include "cobcat/presentation.hpp"
#include "cobcat/smith.hpp"
#include "cobcat/surface.hpp"

namespace cobcat {

/// Automorphism groups of the universal groupoid C[C⁻¹], one per object,
/// read off the edge-path presentation of π₁(BC, x).
class LocalizationPresentation {
 public:
  explicit LocalizationPresentation(const FinCat& c);

  const FinCat& base() const { return *base_; }
  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of(int x) const { return component_of_[static_cast<std::size_t>(x)]; }

  const EdgePathPresentation& aut_data(int x) const;
  const GroupPresentation& aut(int x) const { return aut_data(x).presentation; }

  /// γ(f) transported to a loop at x: the tree path to src f, then f, then
  /// back along the tree from tgt f. Identities map to the empty word.
  /// Throws DomainError when f lies in another component.
  Word gamma(int f, int x) const;

 private:
  Word tree_path(int object, int x) const;  // base of x's component → object

  const FinCat* base_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_;
  std::vector<EdgePathPresentation> aut_;
};

/// The per-object presentations; `c` must outlive the result.
LocalizationPresentation localize(const FinCat& c);

/// w1, w2: y → x and w3, w4: x → y, with a = w1∘w3, b = w2∘w3, c = w1∘w4,
/// d = w2∘w4 endomorphisms of x.
struct RelationInstance {
  int x = 0;
  int y = 0;
  int w1 = 0, w2 = 0, w3 = 0, w4 = 0;
};

/// a·b⁻¹·d·c⁻¹ over the generators of aut(x), freely reduced. Throws
/// DomainError when the four morphisms are not typed as above.
Word relation_word(const LocalizationPresentation& l, const RelationInstance& r);

/// Every instance of the base category, in lexicographic order of
/// (x, y, w1, w2, w3, w4). Stops with ResourceError past `limit`.
std::vector<RelationInstance> relation_instances(const FinCat& c, std::size_t limit = 1'000'000);

// Cob₂: Aut(∅) after inverting every morphism.

/// The four composites of a relation instance with y some circles, as
/// closed classes, plus the relator a·b⁻¹·d·c⁻¹ as exponents per
/// connected class (zero entries dropped).
struct SurfaceRelation {
  ClosedSurfaceClass a, b, c, d;
  std::map<ConnectedSurface, std::int64_t> exponents;
};
/// w1, w2: y → ∅ and w3, w4: ∅ → y. Throws DomainError on a type mismatch.
SurfaceRelation surface_relation(const SurfaceCobordism& w1, const SurfaceCobordism& w2,
                                 const SurfaceCobordism& w3, const SurfaceCobordism& w4);

struct SurfaceLocalization {
  AbelianInvariants group;
  std::vector<ConnectedSurface> generators;     // χ ≥ −max_complexity, sorted
  std::vector<std::vector<Integer>> classes;    // per generator, AbelianQuotient coordinates
  std::size_t relators = 0;                     // distinct nonzero relator rows
  /// Integer class of a generator when the group is ℤ, oriented so that
  /// ℝP² ↦ 1. Throws DomainError otherwise.
  std::int64_t integer_class(const ConnectedSurface& s) const;
};

/// Generators: connected closed surfaces with χ ≥ −max_complexity.
/// Relators: instances with y ∈ {∅, S¹, S¹⊔S¹} whose w_i have no closed
/// components and whose components have χ ≥ −max_complexity; an instance
/// is skipped when a composite leaves the generator range.
SurfaceLocalization surface_localization_group(int max_complexity);

// Cob₁: planar and abstract models.

struct PlanarLocalization {
  AbelianInvariants group;
  std::vector<std::string> generators;           // rooted circle trees, sorted
  std::vector<std::vector<Integer>> classes;
  std::size_t diagrams = 0;                      // distinct ∅ → y diagrams used
  std::size_t relators = 0;
  AbelianInvariants pi0;                         // over the enumerated objects
  std::int64_t integer_class(const std::string& tree) const;
};

/// Truncated model of the planar 1-dimensional cobordism category:
/// generators are circle trees with at most `max_circles` circles,
/// relators come from ∅ → y diagrams for y ∈ {0, 2, 4} points with at
/// most `max_circles` cups beyond those reaching y and at most
/// y + 2⌈max_circles/2⌉ strands at any time.
PlanarLocalization planar_localization_group(int max_circles);

struct AbstractCob1Localization {
  AbelianInvariants pi0;
  AbelianInvariants aut_empty;
  std::int64_t k_invariant = 0;  // in circle counts, from transport_swap_to_empty
};

/// The abstract (unembedded) 1-dimensional model with y up to 4 points.
AbstractCob1Localization abstract_cob1_localization();

}  // namespace cobcat
