#include "cobcat/field.hpp"

#include <sstream>
#include <utility>

#include "cobcat/errors.hpp"

namespace cobcat {

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) throw DomainError("field characteristic out of range");
  mpz_class z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) throw DomainError(std::to_string(p) + " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Rational Field::normalize(const Rational& x) const {
  if (p_ == 0) return x;
  const mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = x.get_num(), den = x.get_den();
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw DomainError("denominator vanishes in " + name());
  mpz_class r = num * den_inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  return Rational(r);
}

Rational Field::inv(const Rational& a) const {
  const Rational x = normalize(a);
  if (x == 0) throw DomainError("division by zero in " + name());
  Rational r(x.get_den(), x.get_num());
  r.canonicalize();  // the numerator may have been negative
  return normalize(r);
}

Rational Field::pow(const Rational& a, std::int64_t e) const {
  Rational base = e < 0 ? inv(a) : normalize(a);
  std::uint64_t k = e < 0 ? 0 - static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  Rational out = 1;
  while (k) {
    if (k & 1) out = mul(out, base);
    base = mul(base, base);
    k >>= 1;
  }
  return out;
}

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix multiply(const Field& f, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: shape mismatch");
  FieldMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = f.normalize(out(i, j));
  return out;
}

FieldMatrix kronecker(const Field& f, const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
  return out;
}

FieldMatrix transpose(const FieldMatrix& a) {
  FieldMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

namespace {

// Row-reduces in place; returns rank and the determinant of the leading
// square block when square.
std::pair<std::size_t, Rational> eliminate(const Field& f, FieldMatrix& a, FieldMatrix* track) {
  std::size_t r = 0;
  Rational det = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) {
      det = 0;
      continue;
    }
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
      if (track)
        for (std::size_t j = 0; j < track->cols(); ++j) std::swap((*track)(r, j), (*track)(piv, j));
      det = f.neg(det);
    }
    const Rational p = a(r, c);
    det = f.mul(det, p);
    const Rational pinv = f.inv(p);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), pinv);
    if (track)
      for (std::size_t j = 0; j < track->cols(); ++j) (*track)(r, j) = f.mul((*track)(r, j), pinv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational q = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(q, a(r, j)));
      if (track)
        for (std::size_t j = 0; j < track->cols(); ++j)
          (*track)(i, j) = f.sub((*track)(i, j), f.mul(q, (*track)(r, j)));
    }
    ++r;
  }
  if (r < a.cols()) det = 0;
  return {r, det};
}

}  // namespace

Rational determinant(const Field& f, const FieldMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  FieldMatrix m = a;
  return eliminate(f, m, nullptr).second;
}

std::size_t rank(const Field& f, const FieldMatrix& a) {
  FieldMatrix m = a;
  return eliminate(f, m, nullptr).first;
}

std::optional<FieldMatrix> inverse(const Field& f, const FieldMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  FieldMatrix m = a;
  FieldMatrix inv = FieldMatrix::identity(a.rows());
  auto [r, det] = eliminate(f, m, &inv);
  if (r < a.rows()) return std::nullopt;
  return inv;
}

std::string to_string(const FieldMatrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace cobcat
