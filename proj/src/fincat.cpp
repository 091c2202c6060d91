#include "cobcat/fincat.hpp"

#include <algorithm>

#include "cobcat/errors.hpp"

namespace cobcat {

namespace {

std::string triple_name(const FinCat& c, int f, int g, int h) {
  return "(" + c.morphism(f).name + ", " + c.morphism(g).name + ", " + c.morphism(h).name + ")";
}

}  // namespace

int FinCat::Builder::add_object(std::string name, std::string identity_name) {
  if (object_ids_.count(name)) throw DomainError("duplicate object '" + name + "'");
  const int id = static_cast<int>(objects_.size());
  if (identity_name.empty()) identity_name = "id_" + name;
  object_ids_.emplace(name, id);
  objects_.push_back(std::move(name));
  identities_.push_back(add_morphism(std::move(identity_name), id, id));
  return id;
}

int FinCat::Builder::add_morphism(std::string name, std::string_view src, std::string_view tgt) {
  return add_morphism(std::move(name), object_id(src), object_id(tgt));
}

int FinCat::Builder::add_morphism(std::string name, int src, int tgt) {
  const int n = static_cast<int>(objects_.size());
  if (src < 0 || src >= n || tgt < 0 || tgt >= n)
    throw DomainError("morphism '" + name + "' has an unknown endpoint");
  if (morphism_ids_.count(name)) throw DomainError("duplicate morphism '" + name + "'");
  const int id = static_cast<int>(morphisms_.size());
  morphism_ids_.emplace(name, id);
  morphisms_.push_back({std::move(name), src, tgt});
  return id;
}

void FinCat::Builder::set_compose(std::string_view f, std::string_view g, std::string_view h) {
  set_compose(morphism_id(f), morphism_id(g), morphism_id(h));
}

void FinCat::Builder::set_compose(int f, int g, int h) {
  const int n = static_cast<int>(morphisms_.size());
  if (f < 0 || f >= n || g < 0 || g >= n || h < 0 || h >= n)
    throw DomainError("composition entry names an unknown morphism");
  if (morphisms_[static_cast<std::size_t>(f)].tgt != morphisms_[static_cast<std::size_t>(g)].src)
    throw DomainError("composition entry (" + morphisms_[static_cast<std::size_t>(f)].name + ", " +
                      morphisms_[static_cast<std::size_t>(g)].name + ") is not composable");
  auto [it, inserted] = compose_.emplace(std::pair{f, g}, h);
  if (!inserted && it->second != h)
    throw DomainError("conflicting composition entries for (" +
                      morphisms_[static_cast<std::size_t>(f)].name + ", " +
                      morphisms_[static_cast<std::size_t>(g)].name + ")");
}

int FinCat::Builder::object_id(std::string_view name) const {
  auto it = object_ids_.find(name);
  if (it == object_ids_.end()) throw DomainError("unknown object '" + std::string(name) + "'");
  return it->second;
}

int FinCat::Builder::morphism_id(std::string_view name) const {
  auto it = morphism_ids_.find(name);
  if (it == morphism_ids_.end()) throw DomainError("unknown morphism '" + std::string(name) + "'");
  return it->second;
}

FinCat FinCat::Builder::build() && {
  FinCat c;
  c.objects_ = std::move(objects_);
  c.morphisms_ = std::move(morphisms_);
  c.identities_ = std::move(identities_);
  const std::size_t n = c.objects_.size();
  const std::size_t m = c.morphisms_.size();
  c.out_.assign(n, {});
  c.out_pos_.assign(m, 0);
  c.hom_.assign(n * n, {});
  for (std::size_t f = 0; f < m; ++f) {
    const auto& mor = c.morphisms_[f];
    auto& bucket = c.out_[static_cast<std::size_t>(mor.src)];
    c.out_pos_[f] = bucket.size();
    bucket.push_back(static_cast<int>(f));
    c.hom_[static_cast<std::size_t>(mor.src) * n + static_cast<std::size_t>(mor.tgt)].push_back(
        static_cast<int>(f));
  }
  c.compose_.assign(m, {});
  for (std::size_t f = 0; f < m; ++f) {
    const int fi = static_cast<int>(f);
    const int y = c.morphisms_[f].tgt;
    const auto& outs = c.out_[static_cast<std::size_t>(y)];
    auto& row = c.compose_[f];
    row.assign(outs.size(), -1);
    for (std::size_t k = 0; k < outs.size(); ++k) {
      const int g = outs[k];
      auto it = compose_.find({fi, g});
      if (it != compose_.end())
        row[k] = it->second;
      else if (g == c.identities_[static_cast<std::size_t>(y)])
        row[k] = fi;
      else if (fi == c.identities_[static_cast<std::size_t>(c.morphisms_[f].src)])
        row[k] = g;
      else
        throw DomainError("composition table is missing " + c.morphisms_[static_cast<std::size_t>(g)].name +
                          " o " + c.morphisms_[f].name);
    }
  }
  return c;
}

std::optional<int> FinCat::compose(int f, int g) const {
  if (tgt(f) != src(g)) return std::nullopt;
  return compose_[static_cast<std::size_t>(f)][out_pos_[static_cast<std::size_t>(g)]];
}

std::span<const int> FinCat::hom(int x, int y) const {
  return hom_[static_cast<std::size_t>(x) * objects_.size() + static_cast<std::size_t>(y)];
}

std::optional<int> FinCat::find_object(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> FinCat::find_morphism(std::string_view name) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

ValidationReport validate_category(const FinCat& c) {
  ValidationReport report;
  const int m = static_cast<int>(c.morphism_count());
  const int n = static_cast<int>(c.object_count());

  for (int x = 0; x < n; ++x) {
    const int id = c.identity(x);
    if (c.src(id) != x || c.tgt(id) != x)
      report.push_back({"identity", "identity of " + c.object_name(x) + " is not an endomorphism"});
  }
  for (int f = 0; f < m; ++f)
    for (int g : c.out(c.tgt(f))) {
      const int h = *c.compose(f, g);
      if (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g))
        report.push_back({"endpoints", "composite " + triple_name(c, f, g, h) +
                                           " does not run from src f to tgt g"});
    }
  if (!report.empty()) return report;

  for (int f = 0; f < m; ++f) {
    if (*c.compose(c.identity(c.src(f)), f) != f)
      report.push_back({"unit", c.morphism(f).name + " o id != " + c.morphism(f).name});
    if (*c.compose(f, c.identity(c.tgt(f))) != f)
      report.push_back({"unit", "id o " + c.morphism(f).name + " != " + c.morphism(f).name});
  }
  for (int f = 0; f < m; ++f)
    for (int g : c.out(c.tgt(f))) {
      const int gf = *c.compose(f, g);
      for (int k : c.out(c.tgt(g))) {
        const int lhs = *c.compose(gf, k);
        const int rhs = *c.compose(f, *c.compose(g, k));
        if (lhs != rhs)
          report.push_back({"associativity", "triple (" + c.morphism(f).name + ", " +
                                                 c.morphism(g).name + ", " + c.morphism(k).name +
                                                 ") is not associative"});
      }
    }
  return report;
}

std::optional<std::vector<int>> is_groupoid(const FinCat& c) {
  const int m = static_cast<int>(c.morphism_count());
  std::vector<int> inv(static_cast<std::size_t>(m), -1);
  for (int f = 0; f < m; ++f) {
    for (int g : c.hom(c.tgt(f), c.src(f)))
      if (*c.compose(f, g) == c.identity(c.src(f)) && *c.compose(g, f) == c.identity(c.tgt(f))) {
        inv[static_cast<std::size_t>(f)] = g;
        break;
      }
    if (inv[static_cast<std::size_t>(f)] < 0) return std::nullopt;
  }
  return inv;
}

FinCat product(const FinCat& c, const FinCat& d) {
  FinCat::Builder b;
  const int nc = static_cast<int>(c.object_count()), nd = static_cast<int>(d.object_count());
  const int mc = static_cast<int>(c.morphism_count()), md = static_cast<int>(d.morphism_count());
  auto pair_name = [](const std::string& a, const std::string& z) { return "(" + a + "," + z + ")"; };
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < nd; ++y)
      b.add_object(pair_name(c.object_name(x), d.object_name(y)),
                   pair_name(c.morphism(c.identity(x)).name, d.morphism(d.identity(y)).name));
  std::vector<int> ids(static_cast<std::size_t>(mc * md), -1);
  auto at = [&](int f, int g) -> int& { return ids[static_cast<std::size_t>(f * md + g)]; };
  for (int f = 0; f < mc; ++f)
    for (int g = 0; g < md; ++g) {
      if (c.is_identity(f) && d.is_identity(g)) {
        at(f, g) = b.morphism_id(pair_name(c.morphism(f).name, d.morphism(g).name));
        continue;
      }
      at(f, g) = b.add_morphism(pair_name(c.morphism(f).name, d.morphism(g).name),
                                c.src(f) * nd + d.src(g), c.tgt(f) * nd + d.tgt(g));
    }
  for (int f = 0; f < mc; ++f)
    for (int g = 0; g < md; ++g)
      for (int f2 : c.out(c.tgt(f)))
        for (int g2 : d.out(d.tgt(g)))
          b.set_compose(at(f, g), at(f2, g2), at(*c.compose(f, f2), *d.compose(g, g2)));
  return std::move(b).build();
}

FinCat disjoint_union(const FinCat& c, const FinCat& d) {
  FinCat::Builder b;
  std::vector<int> cm(c.morphism_count()), dm(d.morphism_count());
  auto tag = [](const std::string& s, char side) { return std::string(1, side) + ":" + s; };
  for (std::size_t x = 0; x < c.object_count(); ++x)
    b.add_object(tag(c.object_name(static_cast<int>(x)), 'L'),
                 tag(c.morphism(c.identity(static_cast<int>(x))).name, 'L'));
  const int shift = static_cast<int>(c.object_count());
  for (std::size_t x = 0; x < d.object_count(); ++x)
    b.add_object(tag(d.object_name(static_cast<int>(x)), 'R'),
                 tag(d.morphism(d.identity(static_cast<int>(x))).name, 'R'));
  for (int f = 0; f < static_cast<int>(c.morphism_count()); ++f)
    cm[static_cast<std::size_t>(f)] =
        c.is_identity(f) ? b.morphism_id(tag(c.morphism(f).name, 'L'))
                         : b.add_morphism(tag(c.morphism(f).name, 'L'), c.src(f), c.tgt(f));
  for (int f = 0; f < static_cast<int>(d.morphism_count()); ++f)
    dm[static_cast<std::size_t>(f)] =
        d.is_identity(f) ? b.morphism_id(tag(d.morphism(f).name, 'R'))
                         : b.add_morphism(tag(d.morphism(f).name, 'R'), d.src(f) + shift, d.tgt(f) + shift);
  for (int f = 0; f < static_cast<int>(c.morphism_count()); ++f)
    for (int g : c.out(c.tgt(f)))
      b.set_compose(cm[static_cast<std::size_t>(f)], cm[static_cast<std::size_t>(g)],
                    cm[static_cast<std::size_t>(*c.compose(f, g))]);
  for (int f = 0; f < static_cast<int>(d.morphism_count()); ++f)
    for (int g : d.out(d.tgt(f)))
      b.set_compose(dm[static_cast<std::size_t>(f)], dm[static_cast<std::size_t>(g)],
                    dm[static_cast<std::size_t>(*d.compose(f, g))]);
  return std::move(b).build();
}

FinCat full_subcategory(const FinCat& c, std::span<const int> objects) {
  FinCat::Builder b;
  std::vector<int> local(c.object_count(), -1);
  for (int x : objects) local[static_cast<std::size_t>(x)] =
      b.add_object(c.object_name(x), c.morphism(c.identity(x)).name);
  std::vector<int> mor(c.morphism_count(), -1);
  for (int x : objects)
    for (int f : c.out(x)) {
      if (local[static_cast<std::size_t>(c.tgt(f))] < 0) continue;
      mor[static_cast<std::size_t>(f)] =
          c.is_identity(f) ? b.morphism_id(c.morphism(f).name)
                           : b.add_morphism(c.morphism(f).name, local[static_cast<std::size_t>(c.src(f))],
                                            local[static_cast<std::size_t>(c.tgt(f))]);
    }
  for (int f = 0; f < static_cast<int>(c.morphism_count()); ++f) {
    if (mor[static_cast<std::size_t>(f)] < 0) continue;
    for (int g : c.out(c.tgt(f)))
      if (mor[static_cast<std::size_t>(g)] >= 0)
        b.set_compose(mor[static_cast<std::size_t>(f)], mor[static_cast<std::size_t>(g)],
                      mor[static_cast<std::size_t>(*c.compose(f, g))]);
  }
  return std::move(b).build();
}

FinCat relabel_objects(const FinCat& c, std::span<const int> perm) {
  if (perm.size() != c.object_count()) throw DomainError("relabel: permutation size mismatch");
  return full_subcategory(c, perm);
}

ValidationReport check_functor(const Functor& fn) {
  ValidationReport report;
  const FinCat& s = *fn.source;
  const FinCat& t = *fn.target;
  if (fn.object_map.size() != s.object_count() || fn.morphism_map.size() != s.morphism_count()) {
    report.push_back({"shape", "object/morphism map sizes do not match the source"});
    return report;
  }
  auto F = [&](int f) { return fn.morphism_map[static_cast<std::size_t>(f)]; };
  auto Fo = [&](int x) { return fn.object_map[static_cast<std::size_t>(x)]; };
  for (int f = 0; f < static_cast<int>(s.morphism_count()); ++f) {
    const int img = F(f);
    if (img < 0 || img >= static_cast<int>(t.morphism_count())) {
      report.push_back({"range", "image of " + s.morphism(f).name + " is not a morphism"});
      return report;
    }
    if (t.src(img) != Fo(s.src(f)) || t.tgt(img) != Fo(s.tgt(f)))
      report.push_back({"endpoints", "image of " + s.morphism(f).name + " has wrong endpoints"});
  }
  for (int x = 0; x < static_cast<int>(s.object_count()); ++x)
    if (F(s.identity(x)) != t.identity(Fo(x)))
      report.push_back({"identity", "identity of " + s.object_name(x) + " not preserved"});
  if (!report.empty()) return report;
  for (int f = 0; f < static_cast<int>(s.morphism_count()); ++f)
    for (int g : s.out(s.tgt(f)))
      if (F(*s.compose(f, g)) != *t.compose(F(f), F(g)))
        report.push_back({"composition", "pair (" + s.morphism(f).name + ", " + s.morphism(g).name +
                                             ") not preserved"});
  return report;
}

ValidationReport check_nat_trans(const NatTrans& nt) {
  ValidationReport report;
  const Functor& F = *nt.from;
  const Functor& G = *nt.to;
  if (F.source != G.source || F.target != G.target) {
    report.push_back({"shape", "functors do not share source and target"});
    return report;
  }
  const FinCat& s = *F.source;
  const FinCat& t = *F.target;
  if (nt.components.size() != s.object_count()) {
    report.push_back({"shape", "component count does not match the source"});
    return report;
  }
  for (int x = 0; x < static_cast<int>(s.object_count()); ++x) {
    const int eta = nt.components[static_cast<std::size_t>(x)];
    if (eta < 0 || eta >= static_cast<int>(t.morphism_count()) ||
        t.src(eta) != F.object_map[static_cast<std::size_t>(x)] ||
        t.tgt(eta) != G.object_map[static_cast<std::size_t>(x)])
      report.push_back({"endpoints", "component at " + s.object_name(x) + " is not F(x) -> G(x)"});
  }
  if (!report.empty()) return report;
  for (int f = 0; f < static_cast<int>(s.morphism_count()); ++f) {
    const int ex = nt.components[static_cast<std::size_t>(s.src(f))];
    const int ey = nt.components[static_cast<std::size_t>(s.tgt(f))];
    const int lhs = *t.compose(ex, G.morphism_map[static_cast<std::size_t>(f)]);
    const int rhs = *t.compose(F.morphism_map[static_cast<std::size_t>(f)], ey);
    if (lhs != rhs)
      report.push_back({"naturality", "square for " + s.morphism(f).name + " does not commute"});
  }
  return report;
}

Functor identity_functor(const FinCat& c) {
  Functor f{&c, &c, {}, {}};
  for (int x = 0; x < static_cast<int>(c.object_count()); ++x) f.object_map.push_back(x);
  for (int m = 0; m < static_cast<int>(c.morphism_count()); ++m) f.morphism_map.push_back(m);
  return f;
}

FinCat terminal_category() {
  FinCat::Builder b;
  b.add_object("*");
  return std::move(b).build();
}

FinCat poset_category(const std::vector<std::string>& names,
                      const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = names.size();
  if (leq.size() != n) throw DomainError("poset: relation size mismatch");
  FinCat::Builder b;
  for (const auto& name : names) b.add_object(name);
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n || !leq[i][i]) throw DomainError("poset: relation not reflexive");
    arrow[i][i] = b.morphism_id("id_" + names[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq[i][j]) {
        if (leq[j][i]) throw DomainError("poset: relation not antisymmetric");
        arrow[i][j] = b.add_morphism(names[i] + "<" + names[j], static_cast<int>(i), static_cast<int>(j));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (arrow[i][j] >= 0 && arrow[j][k] >= 0) {
          if (arrow[i][k] < 0) throw DomainError("poset: relation not transitive");
          b.set_compose(arrow[i][j], arrow[j][k], arrow[i][k]);
        }
  return std::move(b).build();
}

FinCat interval_category() { return poset_category({"0", "1"}, {{true, true}, {false, true}}); }

FinCat cyclic_group_category(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  FinCat::Builder b;
  b.add_object("*", "g^0");
  for (int k = 1; k < n; ++k) b.add_morphism("g^" + std::to_string(k), 0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.set_compose(i, j, (i + j) % n);
  return std::move(b).build();
}

FinCat parallel_arrows_category() {
  FinCat::Builder b;
  b.add_object("a");
  b.add_object("b");
  b.add_morphism("f", "a", "b");
  b.add_morphism("g", "a", "b");
  return std::move(b).build();
}

FinCat proper_subset_poset(int n) {
  if (n < 2 || n > 16) throw DomainError("proper_subset_poset: n out of range");
  std::vector<unsigned> sets;
  for (unsigned s = 1; s + 1 < (1u << n); ++s) sets.push_back(s);
  std::sort(sets.begin(), sets.end(), [](unsigned a, unsigned b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::string> names;
  for (unsigned s : sets) {
    std::string name = "{";
    for (int i = 0; i < n; ++i)
      if (s & (1u << i)) name += (name.size() > 1 ? "," : "") + std::to_string(i);
    names.push_back(name + "}");
  }
  std::vector<std::vector<bool>> leq(sets.size(), std::vector<bool>(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) leq[i][j] = (sets[i] & ~sets[j]) == 0;
  return poset_category(names, leq);
}

}  // namespace cobcat
