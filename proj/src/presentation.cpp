#include "cobcat/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "cobcat/errors.hpp"

namespace cobcat {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo),
              r.begin() + static_cast<std::ptrdiff_t>(hi));
}

void GroupPresentation::check() const {
  const int n = static_cast<int>(generators.size());
  for (const auto& r : relators)
    for (int l : r)
      if (l == 0 || std::abs(l) > n)
        throw DomainError("relator letter " + std::to_string(l) + " names no generator");
}

std::string GroupPresentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << generators.at(static_cast<std::size_t>(std::abs(w[i]) - 1));
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

std::string GroupPresentation::to_string() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
  os << " | ";
  for (std::size_t i = 0; i < relators.size(); ++i)
    os << (i ? ", " : "") << word_to_string(relators[i]);
  os << " >";
  return os.str();
}

IntMatrix exponent_matrix(const GroupPresentation& p) {
  p.check();
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int l : p.relators[r]) {
      auto g = static_cast<std::size_t>(std::abs(l) - 1);
      m(r, g) += (l > 0 ? 1 : -1);
    }
  return m;
}

AbelianInvariants abelianize(const GroupPresentation& p) {
  IntMatrix m = exponent_matrix(p);
  return invariants_from_diagonal(invariant_factors(m), p.generators.size());
}

bool trivial_in_abelianization(const GroupPresentation& p, const Word& w) {
  // A finitely generated abelian group is not isomorphic to a proper
  // quotient of itself, so adding w changes the invariants iff w ≠ 0.
  GroupPresentation extended = p;
  extended.relators.push_back(w);
  return abelianize(extended) == abelianize(p);
}

namespace {

// Replaces generator `g` by `replacement` in every relator and renumbers.
GroupPresentation eliminate(const GroupPresentation& p, std::size_t g, const Word& replacement) {
  const int gl = static_cast<int>(g) + 1;
  auto renumber = [gl](int l) {
    const int a = std::abs(l);
    const int shifted = a > gl ? a - 1 : a;
    return l > 0 ? shifted : -shifted;
  };
  GroupPresentation out;
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    if (i != g) out.generators.push_back(p.generators[i]);
  const Word rep_inv = inverse(replacement);
  for (const auto& r : p.relators) {
    Word w;
    for (int l : r) {
      if (l == gl)
        w.insert(w.end(), replacement.begin(), replacement.end());
      else if (l == -gl)
        w.insert(w.end(), rep_inv.begin(), rep_inv.end());
      else
        w.push_back(l);
    }
    for (int& l : w) l = renumber(l);
    out.relators.push_back(std::move(w));
  }
  return out;
}

void tidy(GroupPresentation& p) {
  std::set<Word> seen;
  std::vector<Word> kept;
  for (auto& r : p.relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    Word inv = cyclic_reduce(inverse(c));
    if (seen.count(c) || seen.count(inv)) continue;
    seen.insert(c);
    kept.push_back(std::move(c));
  }
  p.relators = std::move(kept);
}

}  // namespace

GroupPresentation simplify_presentation(const GroupPresentation& p, std::size_t effort) {
  p.check();
  GroupPresentation cur = p;
  for (std::size_t pass = 0; pass < effort; ++pass) {
    tidy(cur);
    bool changed = false;
    for (std::size_t ri = 0; ri < cur.relators.size() && !changed; ++ri) {
      const Word& r = cur.relators[ri];
      if (r.size() == 1) {
        auto g = static_cast<std::size_t>(std::abs(r[0]) - 1);
        cur = eliminate(cur, g, {});
        changed = true;
      } else if (r.size() == 2 && std::abs(r[0]) != std::abs(r[1])) {
        // x^a y^b = 1 with a, b = ±1: eliminate the later generator x,
        // x = y^(-a·b).
        const bool first_later = std::abs(r[0]) > std::abs(r[1]);
        const int x = first_later ? r[0] : r[1];
        const int y = first_later ? r[1] : r[0];
        auto g = static_cast<std::size_t>(std::abs(x) - 1);
        cur = eliminate(cur, g, {x > 0 ? -y : y});
        changed = true;
      }
    }
    if (!changed) {
      tidy(cur);
      break;
    }
  }
  return cur;
}

}  // namespace cobcat
