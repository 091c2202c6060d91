#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cobcat/field.hpp"
#include "cobcat/matching.hpp"

namespace cobcat {

/// A vector space X = field^dim with a symmetric element ω ∈ X ⊗ X, given
/// by its coefficient matrix B (ω = Σ B_ab e_a ⊗ e_b).
struct FrobeniusDatum {
  Field field;
  std::size_t dim = 0;
  FieldMatrix pairing;

  /// Normalizes entries into the field. Throws DomainError unless B is
  /// dim × dim and symmetric.
  void check();
};

/// Matrix of X^{⊗m} → X^{⊗n}, rows indexed by output basis words (first
/// tensor factor most significant). Through strands act as identities and
/// each matched pair inserts ω.
FieldMatrix evaluate_restricted(const FrobeniusDatum& theory, const RestrictedMorphism& w);

/// A theory on all of the abstract 1-dimensional cobordisms: cups insert ω,
/// caps contract with the copairing C = B⁻¹, circles give tr(B Cᵀ).
class FullTheory {
 public:
  FullTheory(FrobeniusDatum datum, FieldMatrix copairing);

  const FrobeniusDatum& datum() const { return datum_; }
  const Field& field() const { return datum_.field; }
  const FieldMatrix& copairing() const { return copairing_; }

  std::size_t object_dimension(int points) const;
  /// Throws ResourceError when the matrix would exceed 2²⁰ entries.
  FieldMatrix evaluate(const Matching1D& w) const;
  /// Z(circle), the scalar of the closed loop.
  Rational circle_value() const;

 private:
  FrobeniusDatum datum_;
  FieldMatrix copairing_;
};

struct ExtensionVerdict {
  bool extends = false;
  Rational determinant;
  std::optional<FullTheory> theory;
};

/// Extends iff det B ≠ 0 (X is then dualizable via ω).
ExtensionVerdict extend_to_full(const FrobeniusDatum& theory);

/// The Euler theory E(W) = χ(W) − χ(M₀) as the one-dimensional theory
/// over ℚ sending W to base^E(W).
FrobeniusDatum euler_theory(long base = 2);

/// True iff every object met by the samples has dimension 1 and every
/// sample evaluates to an invertible matrix.
bool invertibility_check(const FullTheory& theory, std::span<const Matching1D> samples);

/// Evaluates independent morphisms concurrently; order of the result
/// follows the input.
std::vector<FieldMatrix> evaluate_all(const FullTheory& theory, std::span<const Matching1D> samples);

}  // namespace cobcat
