#include "cobcat/cobcat.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cobcat/errors.hpp"
#include "cobcat/json_io.hpp"
#include "cobcat/localize.hpp"
#include "cobcat/nerve.hpp"

using cobcat::json_io::Json;
namespace jio = cobcat::json_io;

struct cobcat_category {
  cobcat::FinCat value;
};
struct cobcat_diagram {
  cobcat::PlanarDiagram value;
};
struct cobcat_surface {
  cobcat::SurfaceCobordism value;
};
struct cobcat_picard {
  cobcat::PicardData value;
};
struct cobcat_theory {
  cobcat::FrobeniusDatum value;
};

namespace {

thread_local std::string last_error;

template <class F>
cobcat_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return COBCAT_OK;
  } catch (const cobcat::DomainError& e) {
    last_error = e.what();
    return COBCAT_INVALID_INPUT;
  } catch (const cobcat::ResourceError& e) {
    last_error = e.what();
    return COBCAT_RESOURCE_LIMIT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return COBCAT_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return COBCAT_INTERNAL_ERROR;
  } catch (...) {
    last_error = "internal error";
    return COBCAT_INTERNAL_ERROR;
  }
}

cobcat_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return COBCAT_NULL_ARGUMENT;
}

#define COBCAT_REQUIRE(p) \
  if (!(p)) return null_arg(#p)

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) { *out = dup(j.dump()); }

int object_named(const cobcat::FinCat& c, const char* name) {
  auto x = c.find_object(name);
  if (!x) throw cobcat::DomainError(std::string("unknown object '") + name + "'");
  return *x;
}

}  // namespace

extern "C" {

const char* cobcat_version(void) { return "1.0.0"; }
const char* cobcat_last_error(void) { return last_error.c_str(); }
void cobcat_string_free(char* s) { std::free(s); }

cobcat_status cobcat_category_from_json(const char* json, cobcat_category** out) {
  COBCAT_REQUIRE(json);
  COBCAT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new cobcat_category{jio::fincat_from_json(jio::parse(json))}; });
}

void cobcat_category_free(cobcat_category* c) { delete c; }

cobcat_status cobcat_category_to_json(const cobcat_category* c, char** out) {
  COBCAT_REQUIRE(c);
  COBCAT_REQUIRE(out);
  return guarded([&] { emit(jio::to_json(c->value), out); });
}

cobcat_status cobcat_category_validate(const cobcat_category* c, char** out) {
  COBCAT_REQUIRE(c);
  COBCAT_REQUIRE(out);
  return guarded([&] {
    Json issues = Json::array();
    for (const auto& i : cobcat::validate_category(c->value)) issues.push_back({{"kind", i.kind}, {"detail", i.detail}});
    emit({{"valid", issues.empty()}, {"issues", issues}}, out);
  });
}

cobcat_status cobcat_category_homology(const cobcat_category* c, size_t cap, size_t max_cells, char** out) {
  COBCAT_REQUIRE(c);
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const auto n = cobcat::build_nerve(c->value, cap, max_cells ? max_cells : cobcat::kDefaultMaxCells);
    Json h = Json::array();
    for (const auto& a : cobcat::homology(n)) h.push_back(jio::to_json(a));
    emit({{"H", h}}, out);
  });
}

cobcat_status cobcat_category_pi1(const cobcat_category* c, const char* base, char** out) {
  COBCAT_REQUIRE(c);
  COBCAT_REQUIRE(base);
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const auto& cat = c->value;
    const auto p = cobcat::fundamental_group(cat, object_named(cat, base));
    Json comps = Json::array();
    for (const auto& comp : cobcat::pi0(cat)) {
      Json names = Json::array();
      for (int x : comp) names.push_back(cat.object_name(x));
      comps.push_back(names);
    }
    emit({{"base", base},
          {"pi0", comps},
          {"pi1", jio::to_json(p.presentation)},
          {"simplified", jio::to_json(cobcat::simplify_presentation(p.presentation, 16))},
          {"abelianization", jio::to_json(cobcat::abelianize(p.presentation))}},
         out);
  });
}

cobcat_status cobcat_localize_aut(const cobcat_category* c, const char* base, char** out) {
  COBCAT_REQUIRE(c);
  COBCAT_REQUIRE(base);
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const auto& cat = c->value;
    const int x = object_named(cat, base);
    const cobcat::LocalizationPresentation l(cat);
    const auto& aut = l.aut(x);
    Json component = Json::array();
    for (int y : l.components()[static_cast<std::size_t>(l.component_of(x))]) component.push_back(cat.object_name(y));
    Json gamma = Json::object();
    // every morphism of the component, transported to a loop at x
    for (int f = 0; f < static_cast<int>(cat.morphism_count()); ++f) {
      if (l.component_of(cat.src(f)) != l.component_of(x)) continue;
      Json letters = Json::array();
      for (int k : l.gamma(f, x)) {
        const auto& g = aut.generators[static_cast<std::size_t>(std::abs(k) - 1)];
        letters.push_back(k > 0 ? g : g + "^-1");
      }
      gamma[cat.morphism(f).name] = letters;
    }
    emit({{"base", base},
          {"component", component},
          {"aut", jio::to_json(aut)},
          {"simplified", jio::to_json(cobcat::simplify_presentation(aut, 16))},
          {"abelianization", jio::to_json(cobcat::abelianize(aut))},
          {"gamma", gamma}},
         out);
  });
}

cobcat_status cobcat_relations_check(const cobcat_category* c, size_t limit, char** out) {
  COBCAT_REQUIRE(c);
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const auto& cat = c->value;
    const cobcat::LocalizationPresentation l(cat);
    const auto instances = cobcat::relation_instances(cat, limit ? limit : 1'000'000);
    std::size_t trivial = 0;
    Json failures = Json::array();
    for (const auto& r : instances) {
      const auto w = cobcat::relation_word(l, r);
      if (cobcat::trivial_in_abelianization(l.aut(r.x), w)) {
        ++trivial;
      } else if (failures.size() < 16) {
        failures.push_back({{"x", cat.object_name(r.x)},
                            {"y", cat.object_name(r.y)},
                            {"w", {cat.morphism(r.w1).name, cat.morphism(r.w2).name, cat.morphism(r.w3).name,
                                   cat.morphism(r.w4).name}}});
      }
    }
    emit({{"instances", instances.size()}, {"trivial", trivial}, {"all_trivial", trivial == instances.size()},
          {"failures", failures}},
         out);
  });
}

cobcat_status cobcat_surface_localization(int max_complexity, char** out) {
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const auto s = cobcat::surface_localization_group(max_complexity);
    Json classes = Json::object();
    const bool cyclic = s.group.rank == 1 && s.group.torsion.empty();
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
      if (cyclic) {
        classes[s.generators[i].name()] = s.integer_class(s.generators[i]);
      } else {
        Json coords = Json::array();
        for (const auto& v : s.classes[i]) coords.push_back(jio::integer_to_json(v));
        classes[s.generators[i].name()] = coords;
      }
    }
    classes["empty"] = cyclic ? Json(0) : Json::array();
    emit({{"pi1", jio::to_json(s.group)},
          {"pi1_name", s.group.to_string()},
          {"classes", classes},
          {"max_chi", max_complexity},
          {"relators", s.relators}},
         out);
  });
}

cobcat_status cobcat_planar_localization(int max_circles, char** out) {
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const auto p = cobcat::planar_localization_group(max_circles);
    Json classes = Json::object();
    const bool cyclic = p.group.rank == 1 && p.group.torsion.empty();
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      if (cyclic) {
        classes[p.generators[i]] = p.integer_class(p.generators[i]);
      } else {
        Json coords = Json::array();
        for (const auto& v : p.classes[i]) coords.push_back(jio::integer_to_json(v));
        classes[p.generators[i]] = coords;
      }
    }
    emit({{"pi0", jio::to_json(p.pi0)},
          {"pi1", jio::to_json(p.group)},
          {"pi1_name", p.group.to_string()},
          {"classes", classes},
          {"max_circles", max_circles},
          {"diagrams", p.diagrams},
          {"relators", p.relators}},
         out);
  });
}

cobcat_status cobcat_abstract_cob1_localization(char** out) {
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const auto a = cobcat::abstract_cob1_localization();
    const auto t = cobcat::transport_swap_to_empty();
    emit({{"pi0", jio::to_json(a.pi0)},
          {"pi1", jio::to_json(a.aut_empty)},
          {"k", a.k_invariant},
          {"swap_transport",
           {{"swap_closure_circles", t.swap_closure_circles},
            {"unit_closure_circles", t.unit_closure_circles},
            {"circle_difference", t.circle_difference}}}},
         out);
  });
}

cobcat_status cobcat_diagram_from_json(const char* json, cobcat_diagram** out) {
  COBCAT_REQUIRE(json);
  COBCAT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new cobcat_diagram{jio::diagram_from_json(jio::parse(json))}; });
}

void cobcat_diagram_free(cobcat_diagram* d) { delete d; }

cobcat_status cobcat_diagram_to_json(const cobcat_diagram* d, char** out) {
  COBCAT_REQUIRE(d);
  COBCAT_REQUIRE(out);
  return guarded([&] { emit(jio::to_json(d->value), out); });
}

cobcat_status cobcat_diagram_f(const cobcat_diagram* d, int64_t* out) {
  COBCAT_REQUIRE(d);
  COBCAT_REQUIRE(out);
  return guarded([&] { *out = cobcat::f_invariant(d->value); });
}

cobcat_status cobcat_diagram_compose(const cobcat_diagram* w, const cobcat_diagram* w2, cobcat_diagram** out) {
  COBCAT_REQUIRE(w);
  COBCAT_REQUIRE(w2);
  COBCAT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new cobcat_diagram{cobcat::compose_planar(w->value, w2->value)}; });
}

cobcat_status cobcat_diagram_reduce(const cobcat_diagram* d, char** out) {
  COBCAT_REQUIRE(d);
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const auto cls = cobcat::reduce_endomorphism(d->value);
    emit({{"class", cls}, {"forest", cobcat::closed_forest(d->value)}}, out);
  });
}

cobcat_status cobcat_surface_from_json(const char* json, cobcat_surface** out) {
  COBCAT_REQUIRE(json);
  COBCAT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new cobcat_surface{jio::surface_from_json(jio::parse(json))}; });
}

void cobcat_surface_free(cobcat_surface* s) { delete s; }

cobcat_status cobcat_surface_to_json(const cobcat_surface* s, char** out) {
  COBCAT_REQUIRE(s);
  COBCAT_REQUIRE(out);
  return guarded([&] { emit(jio::to_json(s->value), out); });
}

cobcat_status cobcat_surface_compose(const cobcat_surface* w, const cobcat_surface* w2, cobcat_surface** out) {
  COBCAT_REQUIRE(w);
  COBCAT_REQUIRE(w2);
  COBCAT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new cobcat_surface{cobcat::compose_surface(w->value, w2->value)}; });
}

cobcat_status cobcat_surface_euler(const cobcat_surface* s, int64_t* out) {
  COBCAT_REQUIRE(s);
  COBCAT_REQUIRE(out);
  return guarded([&] { *out = cobcat::euler_tqft(s->value); });
}

cobcat_status cobcat_surface_class(const cobcat_surface* s, char** out) {
  COBCAT_REQUIRE(s);
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const auto& w = s->value;
    if (!w.src().empty() || !w.tgt().empty()) throw cobcat::DomainError("class needs a closed surface (empty source and target)");
    const auto closed = cobcat::closed_part(w);
    const bool orientable =
        std::all_of(closed.begin(), closed.end(), [](const cobcat::ConnectedSurface& c) { return c.orientable; });
    emit({{"closed", jio::to_json(closed)},
          {"euler", cobcat::euler_tqft(w)},
          {"unoriented_class", cobcat::unoriented_class(closed)},
          {"nullbordant", cobcat::is_nullbordant(closed)},
          {"oriented_class", orientable ? Json(cobcat::oriented_class(closed)) : Json(nullptr)}},
         out);
  });
}

cobcat_status cobcat_surface_k_connected(const cobcat_surface* s, int k, int* out) {
  COBCAT_REQUIRE(s);
  COBCAT_REQUIRE(out);
  return guarded([&] { *out = cobcat::is_k_connected(s->value, k) ? 1 : 0; });
}

cobcat_status cobcat_surface_relation(const cobcat_surface* w1, const cobcat_surface* w2, const cobcat_surface* w3,
                                      const cobcat_surface* w4, char** out) {
  COBCAT_REQUIRE(w1);
  COBCAT_REQUIRE(w2);
  COBCAT_REQUIRE(w3);
  COBCAT_REQUIRE(w4);
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const auto r = cobcat::surface_relation(w1->value, w2->value, w3->value, w4->value);
    Json exps = Json::object();
    for (const auto& [s, e] : r.exponents) exps[s.name()] = e;
    emit({{"a", jio::to_json(r.a)},
          {"b", jio::to_json(r.b)},
          {"c", jio::to_json(r.c)},
          {"d", jio::to_json(r.d)},
          {"relator", exps}},
         out);
  });
}

cobcat_status cobcat_picard_from_json(const char* json, cobcat_picard** out) {
  COBCAT_REQUIRE(json);
  COBCAT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new cobcat_picard{jio::picard_from_json(jio::parse(json))}; });
}

cobcat_status cobcat_picard_builtin(const char* name, uint64_t p, cobcat_picard** out) {
  COBCAT_REQUIRE(name);
  COBCAT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const std::string n = name;
    if (n == "vect") *out = new cobcat_picard{cobcat::vect_picard(p)};
    else if (n == "svect") *out = new cobcat_picard{cobcat::svect_picard(p)};
    else if (n == "graded") *out = new cobcat_picard{cobcat::graded_vect_picard(p)};
    else if (n == "cob1") *out = new cobcat_picard{cobcat::cob1_picard()};
    else throw cobcat::DomainError("unknown Picard model '" + n + "'");
  });
}

void cobcat_picard_free(cobcat_picard* p) { delete p; }

cobcat_status cobcat_picard_to_json(const cobcat_picard* p, char** out) {
  COBCAT_REQUIRE(p);
  COBCAT_REQUIRE(out);
  return guarded([&] { emit(jio::to_json(p->value), out); });
}

cobcat_status cobcat_picard_k(const cobcat_picard* p, const char* element_json, char** out) {
  COBCAT_REQUIRE(p);
  COBCAT_REQUIRE(element_json);
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const auto x = jio::element_from_json(p->value.pi0, jio::parse(element_json));
    emit({{"element", jio::element_to_json(x)}, {"k", jio::element_to_json(cobcat::k_invariant(p->value, x))}}, out);
  });
}

cobcat_status cobcat_picard_equivalent(const cobcat_picard* p, const cobcat_picard* q, uint64_t search_bound,
                                       int* out) {
  COBCAT_REQUIRE(p);
  COBCAT_REQUIRE(q);
  COBCAT_REQUIRE(out);
  return guarded([&] {
    *out = cobcat::picard_equivalent(p->value, q->value, search_bound ? search_bound : cobcat::kDefaultSearchBound) ? 1 : 0;
  });
}

cobcat_status cobcat_theory_from_json(const char* json, cobcat_theory** out) {
  COBCAT_REQUIRE(json);
  COBCAT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new cobcat_theory{jio::frobenius_from_json(jio::parse(json))}; });
}

void cobcat_theory_free(cobcat_theory* t) { delete t; }

cobcat_status cobcat_theory_extend(const cobcat_theory* t, char** out) {
  COBCAT_REQUIRE(t);
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const auto v = cobcat::extend_to_full(t->value);
    Json j = {{"extends", v.extends}, {"determinant", jio::scalar_to_json(v.determinant)}};
    if (v.theory) {
      j["circle"] = jio::scalar_to_json(v.theory->circle_value());
      j["copairing"] = jio::to_json(v.theory->copairing());
    } else {
      j["circle"] = nullptr;
      j["copairing"] = nullptr;
    }
    emit(j, out);
  });
}

cobcat_status cobcat_theory_eval(const cobcat_theory* t, const char* morphism_json, char** out) {
  COBCAT_REQUIRE(t);
  COBCAT_REQUIRE(morphism_json);
  COBCAT_REQUIRE(out);
  return guarded([&] {
    const Json m = jio::parse(morphism_json);
    if (m.is_object() && m.contains("injection")) {
      const auto w = jio::restricted_from_json(m);
      emit({{"kind", "restricted"}, {"matrix", jio::to_json(cobcat::evaluate_restricted(t->value, w))}}, out);
      return;
    }
    const auto w = jio::matching_from_json(m);
    const auto v = cobcat::extend_to_full(t->value);
    if (!v.theory) throw cobcat::DomainError("the pairing is degenerate, so the theory does not extend to caps");
    emit({{"kind", "full"}, {"matrix", jio::to_json(v.theory->evaluate(w))}}, out);
  });
}

}  // extern "C"
