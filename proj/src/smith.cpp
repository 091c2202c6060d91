#include "cobcat/smith.hpp"

#include <sstream>

namespace cobcat {

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (rank == 1) {
    sep();
    os << "Z";
  } else if (rank > 1) {
    sep();
    os << "Z^" << rank;
  }
  for (const auto& d : torsion) {
    sep();
    os << "Z/" << d.get_str();
  }
  if (first) os << "0";
  return os.str();
}

AbelianInvariants invariants_from_diagonal(const std::vector<Integer>& diagonal,
                                           std::size_t generators) {
  AbelianInvariants out;
  std::size_t nonzero = 0;
  for (const auto& d : diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (abs(d) > 1) out.torsion.push_back(abs(d));
  }
  out.rank = generators - nonzero;
  return out;
}

namespace {

// Shared elimination loop. Transforms are only touched when `track` is set;
// `left` may then still be null.
template <bool track>
std::vector<Integer> reduce(IntMatrix& a, IntMatrix* left, IntMatrix* right) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t steps = std::min(rows, cols);
  std::vector<Integer> diagonal(steps);

  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          const Integer& v = a(r, c);
          if (v == 0) continue;
          if (pr == rows || mpz_cmpabs(v.get_mpz_t(), a(pr, pc).get_mpz_t()) < 0) {
            pr = r;
            pc = c;
          }
        }
      if (pr == rows) {
        exhausted = true;
        break;
      }
      a.swap_rows(t, pr);
      a.swap_cols(t, pc);
      if constexpr (track) {
        if (left) left->swap_rows(t, pr);
        right->swap_cols(t, pc);
      }

      bool clean = true;
      Integer q;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        q = -q;
        a.add_row_multiple(r, t, q);
        if constexpr (track) if (left) left->add_row_multiple(r, t, q);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        q = -q;
        a.add_col_multiple(c, t, q);
        if constexpr (track) right->add_col_multiple(c, t, q);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: pull an offending row into the pivot row and retry.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) != 0 && !mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      a.add_row_multiple(t, bad, 1);
      if constexpr (track) if (left) left->add_row_multiple(t, bad, 1);
    }
    if (exhausted) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      if constexpr (track) if (left) left->negate_row(t);
    }
    diagonal[t] = a(t, t);
  }
  return diagonal;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out;
  IntMatrix a = m;
  out.left = IntMatrix::identity(m.rows());
  out.right = IntMatrix::identity(m.cols());
  out.diagonal = reduce<true>(a, &out.left, &out.right);
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  IntMatrix a = m;
  return reduce<false>(a, nullptr, nullptr);
}

AbelianQuotient abelian_quotient(const IntMatrix& relations, std::size_t generators) {
  // The left transform is never read here, so it is not accumulated.
  IntMatrix a = relations.rows() == 0 ? IntMatrix(0, generators) : relations;
  SmithForm snf;
  snf.right = IntMatrix::identity(generators);
  snf.diagonal = reduce<true>(a, nullptr, &snf.right);
  AbelianQuotient out;
  out.invariants = invariants_from_diagonal(snf.diagonal, generators);

  // Column i of `right` is the i-th new basis direction; factor i is ℤ/dᵢ
  // (dropped when dᵢ = 1) or free when i is past the nonzero diagonal.
  std::vector<std::size_t> torsion_cols, free_cols;
  for (std::size_t i = 0; i < generators; ++i) {
    const bool has_diag = i < snf.diagonal.size() && snf.diagonal[i] != 0;
    if (!has_diag)
      free_cols.push_back(i);
    else if (snf.diagonal[i] > 1)
      torsion_cols.push_back(i);
  }
  out.classes.resize(generators);
  for (std::size_t g = 0; g < generators; ++g) {
    auto& cls = out.classes[g];
    for (std::size_t i : torsion_cols) {
      Integer v;
      mpz_fdiv_r(v.get_mpz_t(), snf.right(g, i).get_mpz_t(), snf.diagonal[i].get_mpz_t());
      cls.push_back(v);
    }
    for (std::size_t i : free_cols) cls.push_back(snf.right(g, i));
  }
  return out;
}

}  // namespace cobcat
