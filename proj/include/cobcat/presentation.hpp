#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cobcat/smith.hpp"

namespace cobcat {

/// A word in the free group. Letter `k > 0` is generator k-1, `-k` its inverse.
using Word = std::vector<int>;

inline int letter(std::size_t generator, bool inverse = false) {
  const int k = static_cast<int>(generator) + 1;
  return inverse ? -k : k;
}

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
/// Cancels adjacent x x⁻¹ pairs.
Word free_reduce(const Word& w);
/// Free reduction followed by cancellation across the ends.
Word cyclic_reduce(const Word& w);

/// Finitely presented group ⟨generators | relators⟩.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Throws DomainError when a relator letter names no generator.
  void check() const;
  std::string word_to_string(const Word& w) const;
  std::string to_string() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Exponent-sum matrix, one row per relator.
IntMatrix exponent_matrix(const GroupPresentation& p);

AbelianInvariants abelianize(const GroupPresentation& p);

/// True when `w` maps to the identity of the abelianization of `p`.
bool trivial_in_abelianization(const GroupPresentation& p, const Word& w);

/// Best-effort Tietze simplification: reduce relators, drop duplicates and
/// empty relators, and eliminate generators pinned down by a relator of
/// length 1 or 2. At most `effort` passes; deterministic.
GroupPresentation simplify_presentation(const GroupPresentation& p, std::size_t effort);

}  // namespace cobcat
