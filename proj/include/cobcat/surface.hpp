#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace cobcat {

/// A connected closed surface: S², #g T², or #h ℝP².
struct ConnectedSurface {
  bool orientable = true;
  int genus = 0;  // handles if orientable, crosscaps (≥ 1) otherwise

  static ConnectedSurface sphere() { return {true, 0}; }
  static ConnectedSurface torus() { return {true, 1}; }
  static ConnectedSurface projective_plane() { return {false, 1}; }
  static ConnectedSurface klein_bottle() { return {false, 2}; }

  std::int64_t euler() const { return orientable ? 2 - 2 * genus : 2 - genus; }
  /// "S2", "T2", "Sigma_g", "RP2", "K", "N_h".
  std::string name() const;

  friend bool operator==(const ConnectedSurface&, const ConnectedSurface&) = default;
  friend auto operator<=>(const ConnectedSurface&, const ConnectedSurface&) = default;
};

/// Parses a name produced by ConnectedSurface::name().
ConnectedSurface parse_surface_name(const std::string& name);

/// Throws DomainError unless both are valid connected surfaces.
ConnectedSurface connected_sum(const ConnectedSurface& a, const ConnectedSurface& b);

/// Canonical (sorted) multiset of connected closed surfaces.
using ClosedSurfaceClass = std::vector<ConnectedSurface>;
ClosedSurfaceClass canonical(ClosedSurfaceClass s);

/// χ mod 2, a complete invariant of unoriented cobordism in dimension 2.
int unoriented_class(const ClosedSurfaceClass& s);
bool is_nullbordant(const ClosedSurfaceClass& s);
/// Every closed oriented surface bounds, so the class is always 0.
/// Throws DomainError on a non-orientable component.
int oriented_class(const ClosedSurfaceClass& s);

/// Dimension 0: points mod 2, and signed count for oriented points.
int unoriented_class_points(std::size_t points);
std::int64_t oriented_class_points(std::span<const int> signs);
/// Dimension 1: every closed 1-manifold bounds (discs), oriented or not.
int unoriented_class_circles(std::size_t circles);
int oriented_class_circles(std::span<const int> orientations);

/// One connected component of a 2-cobordism. Boundary circles are slots of
/// the source (`in`) and target (`out`) lists. `eps` holds the induced
/// boundary-orientation signs, `in` slots first then `out` slots, only for
/// orientable components with boundary; it is stored modulo a global flip
/// with the first entry +1.
struct SurfaceComponent {
  bool orientable = true;
  int genus = 0;
  std::vector<int> in;
  std::vector<int> out;
  std::vector<int> eps;

  std::size_t boundary_count() const { return in.size() + out.size(); }
  std::int64_t euler() const;

  friend bool operator==(const SurfaceComponent&, const SurfaceComponent&) = default;
  friend auto operator<=>(const SurfaceComponent&, const SurfaceComponent&) = default;
};

/// A morphism of the 2-dimensional cobordism category up to diffeomorphism
/// rel boundary, kept in canonical form (components sorted, eps normalized).
class SurfaceCobordism {
 public:
  SurfaceCobordism() = default;
  /// Validates and canonicalizes. Throws DomainError when a boundary circle
  /// is missing, repeated, or a component is malformed.
  SurfaceCobordism(std::vector<std::string> src, std::vector<std::string> tgt,
                   std::vector<SurfaceComponent> components);

  static SurfaceCobordism identity(const std::vector<std::string>& circles);
  /// ∅ → ∅ realizing a closed class.
  static SurfaceCobordism closed(const ClosedSurfaceClass& s);

  const std::vector<std::string>& src() const { return src_; }
  const std::vector<std::string>& tgt() const { return tgt_; }
  const std::vector<SurfaceComponent>& components() const { return components_; }

  friend bool operator==(const SurfaceCobordism&, const SurfaceCobordism&) = default;

 private:
  std::vector<std::string> src_;
  std::vector<std::string> tgt_;
  std::vector<SurfaceComponent> components_;
};

/// w2 ∘ w, glued along w.tgt() = w2.src(). Orientable pieces glue
/// orientably iff signs can be flipped per piece so that every glued circle
/// has o_A·ε_A = −o_B·ε_B. Throws DomainError on an interface mismatch and
/// std::logic_error if the genus bookkeeping ever fails to be integral.
SurfaceCobordism compose_surface(const SurfaceCobordism& w, const SurfaceCobordism& w2);

/// Disjoint union; circle ids must not clash.
SurfaceCobordism disjoint_union(const SurfaceCobordism& a, const SurfaceCobordism& b);

/// Σ χ(components); χ of the incoming circles is zero.
std::int64_t euler_tqft(const SurfaceCobordism& w);

/// The closed components, as a canonical class.
ClosedSurfaceClass closed_part(const SurfaceCobordism& w);

/// k = -1: always true; k = 0: every component has outgoing boundary.
/// Other k throw DomainError.
bool is_k_connected(const SurfaceCobordism& w, int k);

/// Reparametrizes the incoming circles: old slot i moves to slot perm[i],
/// and reflect[i] reverses its parametrization.
SurfaceCobordism act_boundary(const SurfaceCobordism& w, std::span<const int> perm,
                              const std::vector<bool>& reflect);

/// Oriented variant: circles carry orientation signs, components are
/// orientable and their orientations induce the given ones (outgoing) or
/// their reverses (incoming).
struct OrientedSurfaceCobordism {
  struct Component {
    int genus = 0;
    std::vector<int> in;
    std::vector<int> out;
  };
  std::vector<std::string> src;
  std::vector<std::string> tgt;
  std::vector<int> src_orientation;  // ±1 per source circle
  std::vector<int> tgt_orientation;
  std::vector<Component> components;
};

SurfaceCobordism forget_orientation(const OrientedSurfaceCobordism& w);

// Builders used by tests, enumeration, and the CLI.

/// One connected component with the given boundary on each side. For
/// orientable pieces, `eps` defaults to the identity-cylinder convention
/// (+1 on incoming, −1 on outgoing circles).
SurfaceComponent make_component(bool orientable, int genus, std::vector<int> in, std::vector<int> out,
                                std::vector<int> eps = {});

/// Random morphism between the given circle lists: up to `max_pieces`
/// extra closed components, genus/crosscaps ≤ max_genus.
SurfaceCobordism random_surface(const std::vector<std::string>& src, const std::vector<std::string>& tgt,
                                std::mt19937_64& rng, int max_genus = 3, int max_closed = 1);

/// Zig-zag of 0-connected cobordisms joining `from` circles to `to`
/// circles; each step is (morphism, forward?) where backward steps are
/// traversed against their direction.
struct ZigZagStep {
  SurfaceCobordism morphism;
  bool forward = true;
};
std::vector<ZigZagStep> connectivity_zigzag(std::size_t from, std::size_t to);

/// Circle ids "c0", "c1", … (prefix configurable).
std::vector<std::string> circle_ids(std::size_t count, const std::string& prefix = "c");

}  // namespace cobcat
