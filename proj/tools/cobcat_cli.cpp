// Command-line front end. Talks to the library only through cobcat.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "cobcat/cobcat.h"

using Json = nlohmann::json;

namespace {

struct Failure {
  cobcat_status status;
  std::string message;
};

void check(cobcat_status s) {
  if (s != COBCAT_OK) throw Failure{s, cobcat_last_error()};
}

Json take(char* s) {
  std::unique_ptr<char, decltype(&cobcat_string_free)> owned(s, cobcat_string_free);
  return Json::parse(owned.get());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{COBCAT_INVALID_INPUT, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using Category = Handle<cobcat_category, cobcat_category_free>;
using Diagram = Handle<cobcat_diagram, cobcat_diagram_free>;
using Surface = Handle<cobcat_surface, cobcat_surface_free>;
using Picard = Handle<cobcat_picard, cobcat_picard_free>;
using Theory = Handle<cobcat_theory, cobcat_theory_free>;

void load(Category& c, const std::string& path) { check(cobcat_category_from_json(slurp(path).c_str(), c.out())); }
void load(Diagram& d, const std::string& path) { check(cobcat_diagram_from_json(slurp(path).c_str(), d.out())); }
void load(Surface& s, const std::string& path) { check(cobcat_surface_from_json(slurp(path).c_str(), s.out())); }
void load(Theory& t, const std::string& path) { check(cobcat_theory_from_json(slurp(path).c_str(), t.out())); }

std::size_t env_max_cells() {
  if (const char* v = std::getenv("COBCAT_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long long n = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
    throw Failure{COBCAT_INVALID_INPUT, "COBCAT_MAX_CELLS must be a positive integer"};
  }
  return 0;
}

const char* status_name(cobcat_status s) {
  switch (s) {
    case COBCAT_OK: return "ok";
    case COBCAT_INVALID_INPUT: return "invalid_input";
    case COBCAT_RESOURCE_LIMIT: return "resource_limit";
    case COBCAT_NULL_ARGUMENT: return "null_argument";
    default: return "internal_error";
  }
}

int exit_code(cobcat_status s) {
  switch (s) {
    case COBCAT_OK: return 0;
    case COBCAT_INVALID_INPUT: return 1;
    case COBCAT_RESOURCE_LIMIT: return 2;
    default: return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite categories, nerves, localization and low-dimensional cobordism computations"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Add wall-clock seconds to the report");

  std::string command;
  std::function<Json()> action;
  auto leaf = [&](CLI::App* sub, std::string name, std::function<Json()> fn) {
    sub->callback([&command, &action, name = std::move(name), fn = std::move(fn)] {
      command = name;
      action = fn;
    });
  };

  std::string file, file2, base, element, picard_input, builtin;
  std::string w1, w2, w3, w4;
  std::size_t cap = 3, max_cells = 0, limit = 0;
  int max_chi = 4, max_circles = 4, k = 0;
  std::uint64_t search_bound = 0, prime = 5;

  // cat
  auto* cat = app.add_subcommand("cat", "Finite categories and their nerves");
  cat->require_subcommand(1);
  auto* homology = cat->add_subcommand("homology", "Homology of the nerve");
  homology->add_option("--cap", cap, "Nerve dimension cap; reports H_0 .. H_{cap-1}")
      ->capture_default_str();
  homology->add_option("--max-cells", max_cells, "Cell-count ceiling (default 10^6 or $COBCAT_MAX_CELLS)");
  homology->add_option("file", file, "Category JSON")->required();
  leaf(homology, "cat homology", [&] {
    Category c;
    load(c, file);
    const std::size_t ceiling = max_cells ? max_cells : env_max_cells();
    char* out = nullptr;
    check(cobcat_category_homology(c.get(), cap, ceiling, &out));
    return take(out);
  });
  auto* pi1 = cat->add_subcommand("pi1", "Edge-path presentation of the fundamental group");
  pi1->add_option("--base", base, "Basepoint object")->required();
  pi1->add_option("file", file, "Category JSON")->required();
  leaf(pi1, "cat pi1", [&] {
    Category c;
    load(c, file);
    char* out = nullptr;
    check(cobcat_category_pi1(c.get(), base.c_str(), &out));
    return take(out);
  });
  auto* validate = cat->add_subcommand("validate", "Check the category laws");
  validate->add_option("file", file, "Category JSON")->required();
  leaf(validate, "cat validate", [&] {
    Category c;
    load(c, file);
    char* out = nullptr;
    check(cobcat_category_validate(c.get(), &out));
    return take(out);
  });

  // localize
  auto* loc = app.add_subcommand("localize", "Groupoid localization");
  loc->require_subcommand(1);
  auto* aut = loc->add_subcommand("aut", "Automorphism group of an object after inverting everything");
  aut->add_option("--base", base, "Object")->required();
  aut->add_option("file", file, "Category JSON")->required();
  leaf(aut, "localize aut", [&] {
    Category c;
    load(c, file);
    char* out = nullptr;
    check(cobcat_localize_aut(c.get(), base.c_str(), &out));
    return take(out);
  });
  auto* surfaces = loc->add_subcommand("surfaces", "Aut of the empty surface in the 2-dimensional model");
  surfaces->add_option("--max-chi", max_chi, "Bound on -chi of enumerated pieces")->capture_default_str();
  leaf(surfaces, "localize surfaces", [&] {
    char* out = nullptr;
    check(cobcat_surface_localization(max_chi, &out));
    return take(out);
  });
  auto* planar = loc->add_subcommand("planar", "Truncated planar 1-dimensional model");
  planar->add_option("--max-circles", max_circles, "Largest circle tree used as a generator")->capture_default_str();
  leaf(planar, "localize planar", [&] {
    char* out = nullptr;
    check(cobcat_planar_localization(max_circles, &out));
    return take(out);
  });
  auto* abstract = loc->add_subcommand("abstract", "Unembedded 1-dimensional model");
  leaf(abstract, "localize abstract", [&] {
    char* out = nullptr;
    check(cobcat_abstract_cob1_localization(&out));
    return take(out);
  });

  // cob1
  auto* cob1 = app.add_subcommand("cob1", "Planar 1-cobordisms given as slice words");
  cob1->require_subcommand(1);
  auto* f = cob1->add_subcommand("f", "Region-colouring invariant");
  f->add_option("file", file, "Diagram JSON")->required();
  leaf(f, "cob1 f", [&] {
    Diagram d;
    load(d, file);
    std::int64_t v = 0;
    check(cobcat_diagram_f(d.get(), &v));
    return Json{{"f", v}};
  });
  auto* c1compose = cob1->add_subcommand("compose", "First diagram followed by the second");
  c1compose->add_option("first", file, "Diagram JSON")->required();
  c1compose->add_option("second", file2, "Diagram JSON")->required();
  leaf(c1compose, "cob1 compose", [&] {
    Diagram a, b, r;
    load(a, file);
    load(b, file2);
    check(cobcat_diagram_compose(a.get(), b.get(), r.out()));
    char* out = nullptr;
    check(cobcat_diagram_to_json(r.get(), &out));
    std::int64_t v = 0;
    check(cobcat_diagram_f(r.get(), &v));
    return Json{{"diagram", take(out)}, {"f", v}};
  });
  auto* reduce = cob1->add_subcommand("reduce", "Class of a closed diagram");
  reduce->add_option("file", file, "Diagram JSON")->required();
  leaf(reduce, "cob1 reduce", [&] {
    Diagram d;
    load(d, file);
    char* out = nullptr;
    check(cobcat_diagram_reduce(d.get(), &out));
    return take(out);
  });

  // cob2
  auto* cob2 = app.add_subcommand("cob2", "Surface cobordisms");
  cob2->require_subcommand(1);
  auto* c2compose = cob2->add_subcommand("compose", "Glue the second after the first");
  c2compose->add_option("first", file, "Surface JSON")->required();
  c2compose->add_option("second", file2, "Surface JSON")->required();
  leaf(c2compose, "cob2 compose", [&] {
    Surface a, b, r;
    load(a, file);
    load(b, file2);
    check(cobcat_surface_compose(a.get(), b.get(), r.out()));
    char* out = nullptr;
    check(cobcat_surface_to_json(r.get(), &out));
    return take(out);
  });
  auto* euler = cob2->add_subcommand("euler", "Euler characteristic invariant");
  euler->add_option("file", file, "Surface JSON")->required();
  leaf(euler, "cob2 euler", [&] {
    Surface s;
    load(s, file);
    std::int64_t v = 0;
    check(cobcat_surface_euler(s.get(), &v));
    return Json{{"euler", v}};
  });
  auto* cls = cob2->add_subcommand("class", "Cobordism class of a closed surface");
  cls->add_option("file", file, "Surface JSON")->required();
  leaf(cls, "cob2 class", [&] {
    Surface s;
    load(s, file);
    char* out = nullptr;
    check(cobcat_surface_class(s.get(), &out));
    return take(out);
  });
  auto* kcheck = cob2->add_subcommand("kcheck", "Connectivity predicate");
  kcheck->add_option("--k", k, "-1 or 0")->capture_default_str();
  kcheck->add_option("file", file, "Surface JSON")->required();
  leaf(kcheck, "cob2 kcheck", [&] {
    Surface s;
    load(s, file);
    int v = 0;
    check(cobcat_surface_k_connected(s.get(), k, &v));
    return Json{{"k", k}, {"connected", v != 0}};
  });

  // picard
  auto* pic = app.add_subcommand("picard", "Picard groupoid data");
  pic->require_subcommand(1);
  auto* pk = pic->add_subcommand("k", "k-invariant of an element of pi0");
  auto* input_opt = pk->add_option("--input", picard_input, "Picard JSON");
  pk->add_option("--builtin", builtin, "vect, svect, graded or cob1")->excludes(input_opt);
  pk->add_option("--p", prime, "Prime for the built-in models")->capture_default_str();
  pk->add_option("--element", element, "Generator name or JSON coordinate array")->required();
  leaf(pk, "picard k", [&] {
    Picard p;
    if (!picard_input.empty()) check(cobcat_picard_from_json(slurp(picard_input).c_str(), p.out()));
    else if (!builtin.empty()) check(cobcat_picard_builtin(builtin.c_str(), prime, p.out()));
    else throw Failure{COBCAT_INVALID_INPUT, "give --input or --builtin"};
    std::string elem = element;
    if (elem.empty() || (elem.front() != '[' && elem.front() != '"')) elem = Json(element).dump();
    char* out = nullptr;
    check(cobcat_picard_k(p.get(), elem.c_str(), &out));
    return take(out);
  });
  auto* equiv = pic->add_subcommand("equiv", "Search for an equivalence of Picard data");
  equiv->add_option("first", file, "Picard JSON")->required();
  equiv->add_option("second", file2, "Picard JSON")->required();
  equiv->add_option("--search-bound", search_bound, "Largest number of candidate maps to try");
  leaf(equiv, "picard equiv", [&] {
    Picard a, b;
    check(cobcat_picard_from_json(slurp(file).c_str(), a.out()));
    check(cobcat_picard_from_json(slurp(file2).c_str(), b.out()));
    int v = 0;
    check(cobcat_picard_equivalent(a.get(), b.get(), search_bound, &v));
    return Json{{"equivalent", v != 0}};
  });

  // frob
  auto* frob = app.add_subcommand("frob", "1-dimensional theories from a symmetric pairing");
  frob->require_subcommand(1);
  auto* eval = frob->add_subcommand("eval", "Evaluate a morphism");
  eval->add_option("theory", file, "Theory JSON")->required();
  eval->add_option("morphism", file2, "Restricted morphism or matching JSON")->required();
  leaf(eval, "frob eval", [&] {
    Theory t;
    load(t, file);
    char* out = nullptr;
    check(cobcat_theory_eval(t.get(), slurp(file2).c_str(), &out));
    return take(out);
  });
  auto* extend = frob->add_subcommand("extend", "Extension to all 1-dimensional cobordisms");
  extend->add_option("theory", file, "Theory JSON")->required();
  leaf(extend, "frob extend", [&] {
    Theory t;
    load(t, file);
    char* out = nullptr;
    check(cobcat_theory_extend(t.get(), &out));
    return take(out);
  });

  // relations
  auto* rel = app.add_subcommand("relations", "The four-morphism relation in the localization");
  rel->require_subcommand(1);
  auto* rcheck = rel->add_subcommand("check", "Verify every instance of a finite category");
  rcheck->add_option("file", file, "Category JSON")->required();
  rcheck->add_option("--limit", limit, "Largest number of instances");
  leaf(rcheck, "relations check", [&] {
    Category c;
    load(c, file);
    char* out = nullptr;
    check(cobcat_relations_check(c.get(), limit, &out));
    return take(out);
  });
  auto* rsurf = rel->add_subcommand("surface", "Relator of a surface instance (w1, w2: y to empty; w3, w4: empty to y)");
  rsurf->add_option("w1", w1, "Surface JSON")->required();
  rsurf->add_option("w2", w2, "Surface JSON")->required();
  rsurf->add_option("w3", w3, "Surface JSON")->required();
  rsurf->add_option("w4", w4, "Surface JSON")->required();
  leaf(rsurf, "relations surface", [&] {
    Surface a, b, c, d;
    load(a, w1);
    load(b, w2);
    load(c, w3);
    load(d, w4);
    char* out = nullptr;
    check(cobcat_surface_relation(a.get(), b.get(), c.get(), d.get(), &out));
    return take(out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  Json report = {{"command", command}};
  const auto start = std::chrono::steady_clock::now();
  cobcat_status status = COBCAT_OK;
  try {
    report["result"] = action();
  } catch (const Failure& e) {
    status = e.status;
    report["error"] = e.message;
    std::cerr << "error: " << e.message << "\n";
  } catch (const Json::exception& e) {
    status = COBCAT_INTERNAL_ERROR;
    report["error"] = e.what();
    std::cerr << "error: " << e.what() << "\n";
  }
  report["status"] = status_name(status);
  if (timing) report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << report.dump(2) << "\n";
  return exit_code(status);
}
