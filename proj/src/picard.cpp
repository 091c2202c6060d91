#include "cobcat/picard.hpp"

#include "cobcat/errors.hpp"
#include "cobcat/field.hpp"
#include "cobcat/matching.hpp"

namespace cobcat {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

void FgAbelianGroup::check() const {
  if (!generators.empty() && generators.size() != orders.size())
    throw DomainError("group: one name per generator order required");
  for (auto o : orders)
    if (o < 0) throw DomainError("group: negative order");
}

std::vector<std::int64_t> FgAbelianGroup::reduce(std::vector<std::int64_t> x) const {
  if (x.size() != orders.size()) throw DomainError("group element has the wrong number of coordinates");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (orders[i] > 0) x[i] = mod(x[i], orders[i]);
  return x;
}

std::vector<std::int64_t> FgAbelianGroup::add(const std::vector<std::int64_t>& a,
                                              const std::vector<std::int64_t>& b) const {
  if (a.size() != orders.size() || b.size() != orders.size()) throw DomainError("group element size mismatch");
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return reduce(std::move(out));
}

std::vector<std::int64_t> FgAbelianGroup::scale(std::int64_t k, const std::vector<std::int64_t>& a) const {
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return reduce(std::move(out));
}

bool FgAbelianGroup::is_zero(const std::vector<std::int64_t>& x) const {
  for (auto v : reduce(x))
    if (v != 0) return false;
  return true;
}

AbelianInvariants FgAbelianGroup::invariants() const {
  IntMatrix rel(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = Integer(static_cast<long>(orders[i]));
  return invariants_from_diagonal(invariant_factors(rel), orders.size());
}

void PicardData::check() {
  pi0.check();
  pi1.check();
  const std::size_t n = pi0.size();
  if (c.empty()) c.assign(n, std::vector<std::vector<std::int64_t>>(n, pi1.zero()));
  if (c.size() != n) throw DomainError("symmetry table has the wrong size");
  for (auto& row : c) {
    if (row.size() != n) throw DomainError("symmetry table has the wrong size");
    for (auto& v : row) v = pi1.reduce(v);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!pi1.is_zero(pi1.add(c[i][j], c[j][i])))
        throw DomainError("symmetry is not antisymmetric on generators " + std::to_string(i) + ", " + std::to_string(j));
      for (std::size_t k : {i, j})
        if (pi0.orders[k] > 0 && !pi1.is_zero(pi1.scale(pi0.orders[k], c[i][j])))
          throw DomainError("symmetry value is incompatible with the order of generator " + std::to_string(k));
    }
  if (h.empty()) return;
  if (h.size() != n) throw DomainError("associator table has the wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i].size() != n) throw DomainError("associator table has the wrong size");
    for (std::size_t j = 0; j < n; ++j) {
      if (h[i][j].size() != n) throw DomainError("associator table has the wrong size");
      for (std::size_t k = 0; k < n; ++k) {
        h[i][j][k] = pi1.reduce(h[i][j][k]);
        for (std::size_t g : {i, j, k})
          if (pi0.orders[g] > 0 && !pi1.is_zero(pi1.scale(pi0.orders[g], h[i][j][k])))
            throw DomainError("associator value is incompatible with generator orders");
      }
    }
  }
}

std::vector<std::int64_t> symmetry(const PicardData& p, const std::vector<std::int64_t>& x,
                                   const std::vector<std::int64_t>& y) {
  const std::size_t n = p.pi0.size();
  if (x.size() != n || y.size() != n) throw DomainError("element of the wrong group");
  auto out = p.pi1.zero();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out = p.pi1.add(out, p.pi1.scale(x[i] * y[j], p.c[i][j]));
  return out;
}

std::vector<std::int64_t> k_invariant(const PicardData& p, const std::vector<std::int64_t>& x) {
  return symmetry(p, x, x);
}

namespace {

// Candidate images of one generator: all residues on torsion coordinates,
// {−1, 0, 1} on free ones. Enumerated as a mixed-radix counter.
struct Candidates {
  std::vector<std::int64_t> radix;
  explicit Candidates(const FgAbelianGroup& g) {
    for (auto o : g.orders) radix.push_back(o > 0 ? o : 3);
  }
  std::uint64_t count() const {
    std::uint64_t n = 1;
    for (auto r : radix) n *= static_cast<std::uint64_t>(r);
    return n;
  }
  std::vector<std::int64_t> element(const FgAbelianGroup& g, std::uint64_t index) const {
    std::vector<std::int64_t> x(radix.size());
    for (std::size_t i = radix.size(); i-- > 0;) {
      const auto r = static_cast<std::uint64_t>(radix[i]);
      x[i] = static_cast<std::int64_t>(index % r);
      index /= r;
      if (g.orders[i] == 0) x[i] -= 1;
    }
    return x;
  }
};

bool saturating_mul(std::uint64_t& acc, std::uint64_t factor, std::uint64_t bound) {
  if (factor != 0 && acc > bound / factor) return false;
  acc *= factor;
  return acc <= bound;
}

// Homomorphism on generators that is well defined and onto.
bool is_iso(const FgAbelianGroup& from, const FgAbelianGroup& to, const std::vector<std::vector<std::int64_t>>& images) {
  for (std::size_t i = 0; i < from.size(); ++i)
    if (from.orders[i] > 0 && !to.is_zero(to.scale(from.orders[i], images[i]))) return false;
  // image together with the relations of `to` must span everything; equal
  // invariants then make the surjection an isomorphism
  IntMatrix rel(images.size() + to.size(), to.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = 0; j < to.size(); ++j) rel(i, j) = Integer(static_cast<long>(images[i][j]));
  for (std::size_t j = 0; j < to.size(); ++j) rel(images.size() + j, j) = Integer(static_cast<long>(to.orders[j]));
  return invariants_from_diagonal(invariant_factors(rel), to.size()).is_trivial();
}

std::vector<std::int64_t> apply(const FgAbelianGroup& to, const std::vector<std::vector<std::int64_t>>& images,
                                const std::vector<std::int64_t>& x) {
  auto out = to.zero();
  for (std::size_t i = 0; i < x.size(); ++i) out = to.add(out, to.scale(x[i], images[i]));
  return out;
}

}  // namespace

bool picard_equivalent(const PicardData& p_in, const PicardData& q_in, std::uint64_t search_bound) {
  PicardData p = p_in, q = q_in;
  p.check();
  q.check();
  if (!(p.pi0.invariants() == q.pi0.invariants()) || !(p.pi1.invariants() == q.pi1.invariants())) return false;

  const Candidates c0(q.pi0), c1(q.pi1);
  std::uint64_t total = 1;
  bool within = true;
  for (std::size_t i = 0; i < p.pi0.size() && within; ++i) within = saturating_mul(total, c0.count(), search_bound);
  for (std::size_t i = 0; i < p.pi1.size() && within; ++i) within = saturating_mul(total, c1.count(), search_bound);
  if (!within) throw ResourceError("Picard equivalence search exceeds the bound of " + std::to_string(search_bound));

  auto k_on_generators = [](const PicardData& d) {
    std::vector<std::vector<std::int64_t>> k;
    for (std::size_t i = 0; i < d.pi0.size(); ++i) k.push_back(d.pi1.reduce(d.c[i][i]));
    return k;
  };
  const auto kp = k_on_generators(p);

  std::vector<std::vector<std::int64_t>> alpha(p.pi0.size()), beta(p.pi1.size());
  std::uint64_t alpha_count = 1, beta_count = 1;
  for (std::size_t i = 0; i < p.pi0.size(); ++i) alpha_count *= c0.count();
  for (std::size_t i = 0; i < p.pi1.size(); ++i) beta_count *= c1.count();

  for (std::uint64_t a = 0; a < alpha_count; ++a) {
    std::uint64_t rest = a;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      alpha[i] = c0.element(q.pi0, rest % c0.count());
      rest /= c0.count();
    }
    if (!is_iso(p.pi0, q.pi0, alpha)) continue;
    // k is linear, so the square commutes iff it does on generators
    std::vector<std::vector<std::int64_t>> target;
    for (const auto& img : alpha) target.push_back(k_invariant(q, img));
    for (std::uint64_t b = 0; b < beta_count; ++b) {
      std::uint64_t r = b;
      for (std::size_t i = 0; i < beta.size(); ++i) {
        beta[i] = c1.element(q.pi1, r % c1.count());
        r /= c1.count();
      }
      bool commutes = true;
      for (std::size_t i = 0; i < kp.size() && commutes; ++i)
        commutes = apply(q.pi1, beta, kp[i]) == target[i];
      if (commutes && is_iso(p.pi1, q.pi1, beta)) return true;
    }
  }
  return false;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p < 2) throw DomainError("primitive root needs a prime");
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t n = p - 1;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) factors.push_back(n);
  auto powmod = [p](std::uint64_t b, std::uint64_t e) {
    unsigned __int128 r = 1, x = b % p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
  };
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : factors)
      if (powmod(g, (p - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw DomainError(std::to_string(p) + " has no primitive root");
}

namespace {

FgAbelianGroup units(std::uint64_t p) {
  Field::prime(p);  // validates
  return {{"g"}, {static_cast<std::int64_t>(p - 1)}};
}

}  // namespace

PicardData vect_picard(std::uint64_t p) {
  PicardData d{{{}, {}}, units(p), {}, {}};
  d.check();
  return d;
}

PicardData svect_picard(std::uint64_t p) {
  PicardData d{{{"odd"}, {2}}, units(p), {}, {}};
  // −1 = g^((p−1)/2); in characteristic 2 it is the unit itself
  const auto minus_one = static_cast<std::int64_t>(p == 2 ? 0 : (p - 1) / 2);
  d.c = {{{minus_one}}};
  d.check();
  return d;
}

PicardData graded_vect_picard(std::uint64_t p) {
  PicardData d{{{"odd"}, {2}}, units(p), {}, {}};
  d.check();
  return d;
}

PicardData cob1_picard() {
  PicardData d{{{"pt"}, {2}}, {{"circle"}, {0}}, {}, {}};
  d.c = {{{transport_swap_to_empty().circle_difference}}};
  d.check();
  return d;
}

}  // namespace cobcat
