#include "cobcat/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cobcat/errors.hpp"

namespace cobcat::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw DomainError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw DomainError(std::string("missing field '") + key + "'");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  if (!j.is_object()) throw DomainError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw DomainError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw DomainError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

int as_small(const Json& j, const char* what) {
  const auto v = as_int(j, what);
  if (v < -(1 << 30) || v > (1 << 30)) throw DomainError(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array");
  return j;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  std::vector<std::string> out;
  for (const auto& e : as_array(j, what)) out.push_back(as_string(e, what));
  return out;
}

std::map<std::string, int> unique_index(const std::vector<std::string>& ids, const char* what) {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (!out.emplace(ids[i], static_cast<int>(i)).second)
      throw DomainError(std::string("duplicate ") + what + " '" + ids[i] + "'");
  return out;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

Json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw DomainError("invalid integer string");
    return v;
  }
  throw DomainError("expected an integer");
}

Json to_json(const AbelianInvariants& a) {
  Json t = Json::array();
  for (const auto& d : a.torsion) t.push_back(integer_to_json(d));
  return {{"rank", a.rank}, {"torsion", t}};
}

AbelianInvariants invariants_from_json(const Json& j) {
  AbelianInvariants a;
  const auto r = as_int(field(j, "rank"), "rank");
  if (r < 0) throw DomainError("rank must be non-negative");
  a.rank = static_cast<std::size_t>(r);
  for (const auto& d : as_array(field(j, "torsion"), "torsion")) a.torsion.push_back(integer_from_json(d));
  return a;
}

Json to_json(const GroupPresentation& p) {
  Json rels = Json::array();
  for (const auto& w : p.relators) {
    Json letters = Json::array();
    for (int l : w) {
      const auto& g = p.generators.at(static_cast<std::size_t>(std::abs(l) - 1));
      letters.push_back(l > 0 ? g : g + "^-1");
    }
    rels.push_back(letters);
  }
  return {{"generators", p.generators}, {"relators", rels}};
}

GroupPresentation presentation_from_json(const Json& j) {
  GroupPresentation p;
  p.generators = string_list(field(j, "generators"), "generator");
  const auto index = unique_index(p.generators, "generator");
  for (const auto& r : as_array(field(j, "relators"), "relators")) {
    Word w;
    for (const auto& l : as_array(r, "relator")) {
      std::string s = as_string(l, "relator letter");
      bool inv = false;
      if (s.size() > 3 && s.compare(s.size() - 3, 3, "^-1") == 0) {
        inv = true;
        s.resize(s.size() - 3);
      }
      auto it = index.find(s);
      if (it == index.end()) throw DomainError("relator names unknown generator '" + s + "'");
      w.push_back(letter(static_cast<std::size_t>(it->second), inv));
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

Json to_json(const FinCat& c) {
  Json objects = Json::array(), morphisms = Json::array(), identities = Json::object(), compose = Json::array();
  for (int x = 0; x < static_cast<int>(c.object_count()); ++x) {
    objects.push_back(c.object_name(x));
    identities[c.object_name(x)] = c.morphism(c.identity(x)).name;
  }
  for (int f = 0; f < static_cast<int>(c.morphism_count()); ++f) {
    const auto& m = c.morphism(f);
    morphisms.push_back({{"id", m.name}, {"src", c.object_name(m.src)}, {"tgt", c.object_name(m.tgt)}});
  }
  for (int f = 0; f < static_cast<int>(c.morphism_count()); ++f)
    for (int g : c.out(c.tgt(f)))
      compose.push_back({c.morphism(f).name, c.morphism(g).name, c.morphism(*c.compose(f, g)).name});
  return {{"objects", objects}, {"morphisms", morphisms}, {"identities", identities}, {"compose", compose}};
}

FinCat fincat_from_json(const Json& j) {
  FinCat::Builder b;
  const auto objects = string_list(field(j, "objects"), "object");
  const Json* ids = optional_field(j, "identities");
  std::map<std::string, std::string> identity_owner;
  for (const auto& o : objects) {
    std::string id;
    if (ids) {
      if (!ids->is_object()) throw DomainError("identities must be an object");
      auto it = ids->find(o);
      if (it != ids->end()) id = as_string(*it, "identity");
    }
    b.add_object(o, id);
    identity_owner[id.empty() ? "id_" + o : id] = o;
  }
  for (const auto& m : as_array(field(j, "morphisms"), "morphisms")) {
    const auto id = as_string(field(m, "id"), "morphism id");
    const auto src = as_string(field(m, "src"), "morphism src");
    const auto tgt = as_string(field(m, "tgt"), "morphism tgt");
    if (auto owner = identity_owner.find(id); owner != identity_owner.end()) {
      // identities were added with their objects
      if (src != owner->second || tgt != owner->second)
        throw DomainError("identity '" + id + "' does not match its object");
      continue;
    }
    b.add_morphism(id, src, tgt);
  }
  if (const Json* comp = optional_field(j, "compose"))
    for (const auto& t : as_array(*comp, "compose")) {
      if (!t.is_array() || t.size() != 3) throw DomainError("compose entries are [f, g, h] triples");
      b.set_compose(as_string(t[0], "compose entry"), as_string(t[1], "compose entry"), as_string(t[2], "compose entry"));
    }
  return std::move(b).build();
}

Json to_json(const PlanarDiagram& d) {
  Json slices = Json::array();
  for (const auto& s : d.slices()) slices.push_back({s.kind == Slice::Kind::Cup ? "cup" : "cap", s.index});
  return {{"m", d.m()}, {"slices", slices}};
}

PlanarDiagram diagram_from_json(const Json& j) {
  std::vector<Slice> slices;
  for (const auto& s : as_array(field(j, "slices"), "slices")) {
    if (!s.is_array() || s.size() != 2) throw DomainError("slices are [kind, index] pairs");
    const auto kind = as_string(s[0], "slice kind");
    const int idx = as_small(s[1], "slice index");
    if (kind == "cup") slices.push_back(cup_at(idx));
    else if (kind == "cap") slices.push_back(cap_at(idx));
    else throw DomainError("slice kind must be 'cup' or 'cap'");
  }
  return PlanarDiagram(as_small(field(j, "m"), "m"), std::move(slices));
}

namespace {

std::vector<std::pair<int, int>> pair_list(const Json& j) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : as_array(j, "pairs")) {
    if (!p.is_array() || p.size() != 2) throw DomainError("pairs are [p, q]");
    out.emplace_back(as_small(p[0], "pair end"), as_small(p[1], "pair end"));
  }
  return out;
}

Json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  Json out = Json::array();
  for (auto [p, q] : pairs) out.push_back({p, q});
  return out;
}

}  // namespace

Json to_json(const Matching1D& w) {
  return {{"m", w.m()}, {"n", w.n()}, {"pairs", pairs_to_json(w.pairs())}, {"circles", w.circles()}};
}

Matching1D matching_from_json(const Json& j) {
  const auto pairs = pair_list(field(j, "pairs"));
  std::int64_t circles = 0;
  if (const Json* c = optional_field(j, "circles")) circles = as_int(*c, "circles");
  return Matching1D::from_pairs(as_small(field(j, "m"), "m"), as_small(field(j, "n"), "n"), pairs, circles);
}

Json to_json(const RestrictedMorphism& w) {
  return {{"m", w.m}, {"n", w.n}, {"injection", w.injection}, {"pairs", pairs_to_json(w.pairs)}};
}

RestrictedMorphism restricted_from_json(const Json& j) {
  RestrictedMorphism w;
  w.m = as_small(field(j, "m"), "m");
  w.n = as_small(field(j, "n"), "n");
  for (const auto& v : as_array(field(j, "injection"), "injection")) w.injection.push_back(as_small(v, "injection"));
  w.pairs = pair_list(field(j, "pairs"));
  w.check();
  return w;
}

Json to_json(const SurfaceCobordism& w) {
  const std::set<std::string> src(w.src().begin(), w.src().end());
  const std::set<std::string> tgt(w.tgt().begin(), w.tgt().end());
  Json comps = Json::array();
  for (const auto& c : w.components()) {
    Json in = Json::array(), out = Json::array();
    for (int s : c.in) in.push_back(w.src()[static_cast<std::size_t>(s)]);
    for (int s : c.out) out.push_back(w.tgt()[static_cast<std::size_t>(s)]);
    Json comp = {{"orientable", c.orientable}, {"genus", c.genus}, {"in", in}, {"out", out}};
    if (!c.eps.empty()) {
      Json eps = Json::object();
      for (std::size_t k = 0; k < c.boundary_count(); ++k) {
        const bool incoming = k < c.in.size();
        const auto& id = incoming ? w.src()[static_cast<std::size_t>(c.in[k])]
                                  : w.tgt()[static_cast<std::size_t>(c.out[k - c.in.size()])];
        const bool clash = src.count(id) && tgt.count(id);
        eps[clash ? (incoming ? "in:" : "out:") + id : id] = c.eps[k];
      }
      comp["eps"] = eps;
    }
    comps.push_back(comp);
  }
  return {{"src", w.src()}, {"tgt", w.tgt()}, {"components", comps}};
}

SurfaceCobordism surface_from_json(const Json& j) {
  auto src = string_list(field(j, "src"), "source circle");
  auto tgt = string_list(field(j, "tgt"), "target circle");
  const auto src_index = unique_index(src, "source circle");
  const auto tgt_index = unique_index(tgt, "target circle");
  std::vector<SurfaceComponent> comps;
  for (const auto& cj : as_array(field(j, "components"), "components")) {
    SurfaceComponent c;
    if (!field(cj, "orientable").is_boolean()) throw DomainError("orientable must be a boolean");
    c.orientable = field(cj, "orientable").get<bool>();
    c.genus = as_small(field(cj, "genus"), "genus");
    std::vector<std::string> in_ids, out_ids;
    for (const auto& id : string_list(field(cj, "in"), "circle id")) {
      auto it = src_index.find(id);
      if (it == src_index.end()) throw DomainError("component names unknown source circle '" + id + "'");
      c.in.push_back(it->second);
      in_ids.push_back(id);
    }
    for (const auto& id : string_list(field(cj, "out"), "circle id")) {
      auto it = tgt_index.find(id);
      if (it == tgt_index.end()) throw DomainError("component names unknown target circle '" + id + "'");
      c.out.push_back(it->second);
      out_ids.push_back(id);
    }
    const Json* eps = optional_field(cj, "eps");
    if (c.orientable && c.boundary_count() > 0) {
      if (!eps || !eps->is_object()) throw DomainError("orientable component with boundary needs an eps map");
      c.eps.assign(c.boundary_count(), 0);
      for (auto it = eps->begin(); it != eps->end(); ++it) {
        std::string key = it.key();
        int side = 0;  // 0 unknown, 1 in, 2 out
        if (key.rfind("in:", 0) == 0) {
          side = 1;
          key = key.substr(3);
        } else if (key.rfind("out:", 0) == 0) {
          side = 2;
          key = key.substr(4);
        }
        auto pos_in = std::find(in_ids.begin(), in_ids.end(), key);
        auto pos_out = std::find(out_ids.begin(), out_ids.end(), key);
        const bool on_in = pos_in != in_ids.end(), on_out = pos_out != out_ids.end();
        if (side == 0) {
          if (on_in && on_out) throw DomainError("eps key '" + key + "' is ambiguous; prefix it with in: or out:");
          side = on_in ? 1 : on_out ? 2 : 0;
        }
        std::size_t slot;
        if (side == 1 && on_in) slot = static_cast<std::size_t>(pos_in - in_ids.begin());
        else if (side == 2 && on_out) slot = in_ids.size() + static_cast<std::size_t>(pos_out - out_ids.begin());
        else throw DomainError("eps key '" + it.key() + "' is not a boundary circle of its component");
        const auto v = as_int(it.value(), "eps sign");
        if (v != 1 && v != -1) throw DomainError("eps signs must be +1 or -1");
        c.eps[slot] = static_cast<int>(v);
      }
      for (int e : c.eps)
        if (e == 0) throw DomainError("eps map must cover every boundary circle of the component");
    }
    comps.push_back(std::move(c));
  }
  return SurfaceCobordism(std::move(src), std::move(tgt), std::move(comps));
}

Json to_json(const ClosedSurfaceClass& s) {
  Json out = Json::array();
  for (const auto& c : s) out.push_back(c.name());
  return out;
}

Json to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return {{"p", f.characteristic()}};
}

Field field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  const auto p = as_int(field(j, "p"), "characteristic");
  if (p < 2) throw DomainError("characteristic must be a prime");
  return Field::prime(static_cast<std::uint64_t>(p));
}

Json scalar_to_json(const Rational& x) {
  if (x.get_den() == 1) return integer_to_json(x.get_num());
  return x.get_str();
}

Rational scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational v;
    if (v.set_str(j.get<std::string>(), 10) != 0 || v.get_den() == 0) throw DomainError("invalid rational");
    v.canonicalize();
    return v;
  }
  throw DomainError("scalars are integers or \"a/b\" strings");
}

Json to_json(const FieldMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const FrobeniusDatum& t) {
  return {{"field", to_json(t.field)}, {"dim", t.dim}, {"pairing", to_json(t.pairing)}};
}

FrobeniusDatum frobenius_from_json(const Json& j) {
  FrobeniusDatum t;
  t.field = field_from_json(field(j, "field"));
  const auto dim = as_int(field(j, "dim"), "dim");
  if (dim < 0 || dim > 64) throw DomainError("dim out of range");
  t.dim = static_cast<std::size_t>(dim);
  const auto& rows = as_array(field(j, "pairing"), "pairing");
  if (rows.size() != t.dim) throw DomainError("pairing must have dim rows");
  t.pairing = FieldMatrix(t.dim, t.dim);
  for (std::size_t i = 0; i < t.dim; ++i) {
    if (!rows[i].is_array() || rows[i].size() != t.dim) throw DomainError("pairing must be dim x dim");
    for (std::size_t k = 0; k < t.dim; ++k) t.pairing(i, k) = scalar_from_json(rows[i][k]);
  }
  t.check();
  return t;
}

Json to_json(const FgAbelianGroup& g) {
  std::vector<std::string> names = g.generators;
  if (names.empty())
    for (std::size_t i = 0; i < g.size(); ++i) names.push_back("e" + std::to_string(i));
  return {{"generators", names}, {"orders", g.orders}};
}

FgAbelianGroup group_from_json(const Json& j) {
  FgAbelianGroup g;
  for (const auto& o : as_array(field(j, "orders"), "orders")) g.orders.push_back(as_int(o, "order"));
  if (const Json* names = optional_field(j, "generators")) g.generators = string_list(*names, "generator");
  else
    for (std::size_t i = 0; i < g.size(); ++i) g.generators.push_back("e" + std::to_string(i));
  g.check();
  unique_index(g.generators, "generator");
  return g;
}

std::vector<std::int64_t> element_from_json(const FgAbelianGroup& g, const Json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    for (std::size_t i = 0; i < g.generators.size(); ++i)
      if (g.generators[i] == name) {
        auto x = g.zero();
        x[i] = 1;
        return g.reduce(x);
      }
    throw DomainError("unknown generator '" + name + "'");
  }
  std::vector<std::int64_t> x;
  for (const auto& v : as_array(j, "element")) x.push_back(as_int(v, "coordinate"));
  return g.reduce(x);
}

Json element_to_json(const std::vector<std::int64_t>& x) { return x; }

Json to_json(const PicardData& p) {
  Json c = Json::array(), h = Json::array();
  const auto names = to_json(p.pi0)["generators"];
  for (std::size_t i = 0; i < p.c.size(); ++i)
    for (std::size_t k = 0; k < p.c[i].size(); ++k)
      if (!p.pi1.is_zero(p.c[i][k])) c.push_back({names[i], names[k], p.c[i][k]});
  for (std::size_t i = 0; i < p.h.size(); ++i)
    for (std::size_t k = 0; k < p.h[i].size(); ++k)
      for (std::size_t l = 0; l < p.h[i][k].size(); ++l)
        if (!p.pi1.is_zero(p.h[i][k][l])) h.push_back({names[i], names[k], names[l], p.h[i][k][l]});
  return {{"pi0", to_json(p.pi0)}, {"pi1", to_json(p.pi1)}, {"c", c}, {"h", h}};
}

PicardData picard_from_json(const Json& j) {
  PicardData p;
  p.pi0 = group_from_json(field(j, "pi0"));
  p.pi1 = group_from_json(field(j, "pi1"));
  const std::size_t n = p.pi0.size();
  auto gen = [&](const Json& name) {
    const auto s = as_string(name, "pi0 generator");
    for (std::size_t i = 0; i < n; ++i)
      if (p.pi0.generators[i] == s) return i;
    throw DomainError("unknown pi0 generator '" + s + "'");
  };
  p.c.assign(n, std::vector<std::vector<std::int64_t>>(n, p.pi1.zero()));
  if (const Json* c = optional_field(j, "c"))
    for (const auto& e : as_array(*c, "c")) {
      if (!e.is_array() || e.size() != 3) throw DomainError("c entries are [x, y, value]");
      p.c[gen(e[0])][gen(e[1])] = element_from_json(p.pi1, e[2]);
    }
  if (const Json* h = optional_field(j, "h"); h && !h->empty()) {
    p.h.assign(n, std::vector<std::vector<std::vector<std::int64_t>>>(
                      n, std::vector<std::vector<std::int64_t>>(n, p.pi1.zero())));
    for (const auto& e : as_array(*h, "h")) {
      if (!e.is_array() || e.size() != 4) throw DomainError("h entries are [x, y, z, value]");
      p.h[gen(e[0])][gen(e[1])][gen(e[2])] = element_from_json(p.pi1, e[3]);
    }
  }
  p.check();
  return p;
}

}  // namespace cobcat::json_io
