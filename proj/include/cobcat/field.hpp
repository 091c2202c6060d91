#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cobcat {

using Rational = mpq_class;

/// ℚ (characteristic 0) or 𝔽_p. Elements are rationals; over 𝔽_p they are
/// kept as integers in [0, p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  /// Throws DomainError unless p is a prime below 2³¹.
  static Field prime(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  /// Over 𝔽_p, maps a/b to a·b⁻¹ mod p; throws DomainError when p | b.
  Rational normalize(const Rational& x) const;
  Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
  Rational neg(const Rational& a) const { return normalize(-a); }
  /// Throws DomainError on zero.
  Rational inv(const Rational& a) const;
  Rational pow(const Rational& a, std::int64_t e) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint64_t p_ = 0;
};

/// Dense row-major matrix over a Field.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static FieldMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

FieldMatrix multiply(const Field& f, const FieldMatrix& a, const FieldMatrix& b);
/// Kronecker product, `a` on the most significant index.
FieldMatrix kronecker(const Field& f, const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix transpose(const FieldMatrix& a);
Rational determinant(const Field& f, const FieldMatrix& a);
std::size_t rank(const Field& f, const FieldMatrix& a);
/// std::nullopt when singular or not square.
std::optional<FieldMatrix> inverse(const Field& f, const FieldMatrix& a);
std::string to_string(const FieldMatrix& a);

}  // namespace cobcat
