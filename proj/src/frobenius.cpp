#include "cobcat/frobenius.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "cobcat/errors.hpp"

namespace cobcat {

void FrobeniusDatum::check() {
  if (pairing.rows() != dim || pairing.cols() != dim) throw DomainError("pairing must be dim x dim");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) pairing(i, j) = field.normalize(pairing(i, j));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (pairing(i, j) != pairing(j, i)) throw DomainError("pairing must be symmetric");
}

namespace {

constexpr std::size_t kMaxEntries = std::size_t{1} << 20;

std::size_t power(std::size_t base, int e) {
  std::size_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && out > kMaxEntries / base) throw ResourceError("tensor power too large");
    out *= base;
  }
  return out;
}

// Digits of a basis word, most significant first.
void digits(std::size_t index, std::size_t base, std::vector<std::size_t>& out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = index % base;
    index /= base;
  }
}

}  // namespace

FieldMatrix evaluate_restricted(const FrobeniusDatum& theory, const RestrictedMorphism& w) {
  w.check();
  const std::size_t d = theory.dim;
  const std::size_t rows = power(d, w.n), cols = power(d, w.m);
  if (rows * std::max<std::size_t>(cols, 1) > kMaxEntries) throw ResourceError("evaluation matrix too large");
  FieldMatrix out(rows, cols);
  std::vector<std::size_t> j(static_cast<std::size_t>(w.n));
  for (std::size_t r = 0; r < rows; ++r) {
    digits(r, d, j);
    Rational v = 1;
    for (auto [p, q] : w.pairs) {
      v = theory.field.mul(v, theory.pairing(j[static_cast<std::size_t>(p)], j[static_cast<std::size_t>(q)]));
      if (v == 0) break;
    }
    if (v == 0) continue;
    // the input word is forced by the through strands
    std::size_t c = 0;
    for (int s = 0; s < w.m; ++s) c = c * d + j[static_cast<std::size_t>(w.injection[static_cast<std::size_t>(s)])];
    out(r, c) = v;
  }
  return out;
}

FullTheory::FullTheory(FrobeniusDatum datum, FieldMatrix copairing)
    : datum_(std::move(datum)), copairing_(std::move(copairing)) {
  datum_.check();
  if (copairing_.rows() != datum_.dim || copairing_.cols() != datum_.dim) throw DomainError("copairing shape mismatch");
}

std::size_t FullTheory::object_dimension(int points) const { return power(datum_.dim, points); }

Rational FullTheory::circle_value() const {
  const Field& f = datum_.field;
  Rational v = 0;
  for (std::size_t a = 0; a < datum_.dim; ++a)
    for (std::size_t b = 0; b < datum_.dim; ++b) v = f.add(v, f.mul(datum_.pairing(a, b), copairing_(a, b)));
  return v;
}

FieldMatrix FullTheory::evaluate(const Matching1D& w) const {
  const Field& f = datum_.field;
  const std::size_t d = datum_.dim;
  const int m = w.m(), n = w.n();
  const std::size_t rows = power(d, n), cols = power(d, m);
  if (rows * cols > kMaxEntries) throw ResourceError("evaluation matrix too large");
  FieldMatrix out(rows, cols);
  const Rational loops = f.pow(circle_value(), w.circles());
  const auto pairs = w.pairs();
  std::vector<std::size_t> in(static_cast<std::size_t>(m)), outw(static_cast<std::size_t>(n));
  std::vector<std::size_t> at(static_cast<std::size_t>(m + n));
  for (std::size_t r = 0; r < rows; ++r) {
    digits(r, d, outw);
    for (std::size_t c = 0; c < cols; ++c) {
      digits(c, d, in);
      for (int p = 0; p < m; ++p) at[static_cast<std::size_t>(p)] = in[static_cast<std::size_t>(p)];
      for (int p = 0; p < n; ++p) at[static_cast<std::size_t>(m + p)] = outw[static_cast<std::size_t>(p)];
      Rational v = loops;
      for (auto [p, q] : pairs) {
        const std::size_t a = at[static_cast<std::size_t>(p)], b = at[static_cast<std::size_t>(q)];
        if (q < m)
          v = f.mul(v, copairing_(a, b));           // both ends incoming
        else if (p >= m)
          v = f.mul(v, datum_.pairing(a, b));       // both ends outgoing
        else if (a != b)
          v = 0;                                    // through strand
        if (v == 0) break;
      }
      out(r, c) = v;
    }
  }
  return out;
}

ExtensionVerdict extend_to_full(const FrobeniusDatum& theory) {
  FrobeniusDatum t = theory;
  t.check();
  ExtensionVerdict v;
  v.determinant = determinant(t.field, t.pairing);
  auto inv = inverse(t.field, t.pairing);
  if (!inv) return v;
  v.extends = true;
  v.theory.emplace(std::move(t), std::move(*inv));
  return v;
}

FrobeniusDatum euler_theory(long base) {
  if (base == 0) throw DomainError("Euler theory base must be nonzero");
  FrobeniusDatum t{Field::rationals(), 1, FieldMatrix(1, 1)};
  t.pairing(0, 0) = base;
  return t;
}

bool invertibility_check(const FullTheory& theory, std::span<const Matching1D> samples) {
  for (const auto& w : samples) {
    if ((w.m() > 0 && theory.object_dimension(w.m()) != 1) || (w.n() > 0 && theory.object_dimension(w.n()) != 1))
      return false;
    const FieldMatrix z = theory.evaluate(w);
    if (z.rows() != z.cols() || determinant(theory.field(), z) == 0) return false;
  }
  return true;
}

std::vector<FieldMatrix> evaluate_all(const FullTheory& theory, std::span<const Matching1D> samples) {
  const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<FieldMatrix> out(samples.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < samples.size(); i += workers) out[i] = theory.evaluate(samples[i]);
    }));
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace cobcat
