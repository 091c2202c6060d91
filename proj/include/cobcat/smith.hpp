#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cobcat/int_matrix.hpp"

namespace cobcat {

/// A finitely generated abelian group ℤ^rank ⊕ ℤ/d₁ ⊕ … with d₁ | d₂ | …, every dᵢ ≥ 2.
struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Invariants of ℤ^generators modulo a lattice with the given Smith diagonal.
AbelianInvariants invariants_from_diagonal(const std::vector<Integer>& diagonal,
                                           std::size_t generators);

struct SmithForm {
  /// min(rows, cols) entries, non-negative, each dividing the next nonzero one;
  /// zeros trail.
  std::vector<Integer> diagonal;
  IntMatrix left;   // rows × rows, unimodular
  IntMatrix right;  // cols × cols, unimodular
};

/// left · m · right = diag(diagonal). Pivot: smallest nonzero |entry| in the
/// active block, ties broken by row-major position.
SmithForm smith_normal_form(const IntMatrix& m);

/// Diagonal of the Smith form without accumulating the transforms.
std::vector<Integer> invariant_factors(const IntMatrix& m);

/// ℤ^n modulo the row span of `relations` (an r × n matrix), with the image
/// of each basis vector written in the canonical decomposition: one
/// coordinate per torsion factor (reduced into [0, d)), then one per free
/// summand.
struct AbelianQuotient {
  AbelianInvariants invariants;
  std::vector<std::vector<Integer>> classes;
};

AbelianQuotient abelian_quotient(const IntMatrix& relations, std::size_t generators);

}  // namespace cobcat
