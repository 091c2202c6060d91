#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cobcat/matching.hpp"

namespace cobcat {

/// One event of a slice word. With k strands present, Cup(i) (0 ≤ i ≤ k)
/// inserts a new adjacent pair at positions i, i+1; Cap(i) (0 ≤ i ≤ k-2)
/// joins strands i and i+1. Position 0 is the −∞ side of the strip.
struct Slice {
  enum class Kind { Cup, Cap };
  Kind kind = Kind::Cup;
  int index = 0;
  friend bool operator==(const Slice&, const Slice&) = default;
};

inline Slice cup_at(int i) { return {Slice::Kind::Cup, i}; }
inline Slice cap_at(int i) { return {Slice::Kind::Cap, i}; }

/// A planar 1-cobordism in a strip, read left to right as a slice word.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  /// Throws DomainError when an event index leaves the running strand range.
  PlanarDiagram(int m, std::vector<Slice> slices);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Slice>& slices() const { return slices_; }
  std::size_t length() const { return slices_.size(); }

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Slice> slices_;
};

/// w followed by w2 (slice-word concatenation). Throws DomainError when
/// w.n() != w2.m().
PlanarDiagram compose_planar(const PlanarDiagram& w, const PlanarDiagram& w2);

/// χ(X) − χ(X ∩ incoming boundary), X the union of regions lying above an
/// odd number of strands.
std::int64_t f_invariant(const PlanarDiagram& w);

struct DValue {
  int src_class = 0;  // m mod 2
  int tgt_class = 0;  // n mod 2
  std::int64_t value = 0;
};
DValue functor_to_D(const PlanarDiagram& w);

/// Class of a closed diagram in the automorphism group of ∅ after
/// inverting all morphisms, as an integer (the signed circle count of its
/// normal form). Throws DomainError for nonempty boundary.
std::int64_t reduce_endomorphism(const PlanarDiagram& w);

/// The underlying abstract cobordism.
Matching1D underlying_matching(const PlanarDiagram& w);

/// Isotopy data read off a sweep: the boundary matching, which boundary
/// gaps share a region, and the forest of circles hanging in each boundary
/// region (rooted trees written as balanced parentheses, sorted).
struct PlanarSignature {
  int m = 0;
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> gap_regions;          // m+1 incoming gaps, then n+1 outgoing
  std::vector<std::string> forests;      // indexed by region label
  std::int64_t circles = 0;
  friend bool operator==(const PlanarSignature&, const PlanarSignature&) = default;
  friend auto operator<=>(const PlanarSignature&, const PlanarSignature&) = default;
};
PlanarSignature planar_signature(const PlanarDiagram& w);

/// For a closed diagram: its circles as a sorted list of rooted trees.
std::vector<std::string> closed_forest(const PlanarDiagram& w);

/// f of the circle-tree written as balanced parentheses.
std::int64_t tree_f_value(const std::string& tree);

/// A closed diagram realizing the forest given as concatenated trees.
PlanarDiagram diagram_from_forest(const std::string& forest);

}  // namespace cobcat
