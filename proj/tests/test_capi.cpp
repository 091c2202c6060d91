// Exercises the shared library through its C header only.
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cobcat/cobcat.h"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

std::string data(const std::string& name) {
  const char* dir = std::getenv("COBCAT_TEST_DATA");
  REQUIRE(dir != nullptr);
  std::ifstream in(std::string(dir) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Takes ownership of a library string.
json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  cobcat_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("version and null arguments") {
  CHECK(std::string(cobcat_version()).size() > 0);
  cobcat_category* c = nullptr;
  CHECK(cobcat_category_from_json(nullptr, &c) == COBCAT_NULL_ARGUMENT);
  CHECK(std::string(cobcat_last_error()).size() > 0);
  CHECK(cobcat_category_homology(nullptr, 3, 100, nullptr) == COBCAT_NULL_ARGUMENT);
  cobcat_category_free(nullptr);
  cobcat_string_free(nullptr);
}

TEST_CASE("category calls") {
  cobcat_category* c = nullptr;
  REQUIRE(cobcat_category_from_json(data("s2poset.json").c_str(), &c) == COBCAT_OK);
  char* out = nullptr;
  REQUIRE(cobcat_category_homology(c, 3, 1000000, &out) == COBCAT_OK);
  const json h = take(out)["H"];
  REQUIRE(h.size() == 3);
  CHECK(h[0]["rank"] == 1);
  CHECK(h[1]["rank"] == 0);
  CHECK(h[2]["rank"] == 1);
  CHECK(cobcat_category_homology(c, 3, 10, &out) == COBCAT_RESOURCE_LIMIT);
  REQUIRE(cobcat_category_validate(c, &out) == COBCAT_OK);
  CHECK(take(out)["valid"] == true);
  REQUIRE(cobcat_category_to_json(c, &out) == COBCAT_OK);
  CHECK(take(out)["objects"].size() == 14);
  cobcat_category_free(c);

  REQUIRE(cobcat_category_from_json(data("parallel.json").c_str(), &c) == COBCAT_OK);
  REQUIRE(cobcat_category_pi1(c, "a", &out) == COBCAT_OK);
  CHECK(take(out)["abelianization"]["rank"] == 1);
  CHECK(cobcat_category_pi1(c, "nowhere", &out) == COBCAT_INVALID_INPUT);
  REQUIRE(cobcat_localize_aut(c, "a", &out) == COBCAT_OK);
  take(out);
  REQUIRE(cobcat_relations_check(c, 1000, &out) == COBCAT_OK);
  CHECK(take(out)["all_trivial"] == true);
  cobcat_category_free(c);

  CHECK(cobcat_category_from_json(data("bad_category.json").c_str(), &c) == COBCAT_INVALID_INPUT);
  CHECK(c == nullptr);
  CHECK(cobcat_category_from_json("{not json", &c) == COBCAT_INVALID_INPUT);
}

TEST_CASE("diagram calls") {
  cobcat_diagram *cup = nullptr, *cap = nullptr, *both = nullptr;
  REQUIRE(cobcat_diagram_from_json(data("cup.json").c_str(), &cup) == COBCAT_OK);
  REQUIRE(cobcat_diagram_from_json(data("cap.json").c_str(), &cap) == COBCAT_OK);
  REQUIRE(cobcat_diagram_compose(cup, cap, &both) == COBCAT_OK);
  std::int64_t f = 0;
  REQUIRE(cobcat_diagram_f(both, &f) == COBCAT_OK);
  CHECK(f == 1);
  char* out = nullptr;
  REQUIRE(cobcat_diagram_reduce(both, &out) == COBCAT_OK);
  CHECK(take(out)["class"] == 1);
  CHECK(cobcat_diagram_reduce(cup, &out) == COBCAT_INVALID_INPUT);
  cobcat_diagram* bad = nullptr;
  CHECK(cobcat_diagram_compose(cup, cup, &bad) == COBCAT_INVALID_INPUT);
  cobcat_diagram_free(cup);
  cobcat_diagram_free(cap);
  cobcat_diagram_free(both);
}

TEST_CASE("surface calls") {
  cobcat_surface *a = nullptr, *b = nullptr, *ab = nullptr;
  REQUIRE(cobcat_surface_from_json(data("cyl10.json").c_str(), &a) == COBCAT_OK);
  REQUIRE(cobcat_surface_from_json(data("cyl01.json").c_str(), &b) == COBCAT_OK);
  REQUIRE(cobcat_surface_compose(a, b, &ab) == COBCAT_OK);
  std::int64_t chi = 1;
  REQUIRE(cobcat_surface_euler(ab, &chi) == COBCAT_OK);
  CHECK(chi == 0);
  int k = 0;
  REQUIRE(cobcat_surface_k_connected(ab, 0, &k) == COBCAT_OK);
  CHECK(k == 1);
  cobcat_surface_free(a);
  cobcat_surface_free(b);
  cobcat_surface_free(ab);

  cobcat_surface* klein = nullptr;
  REQUIRE(cobcat_surface_from_json(data("klein.json").c_str(), &klein) == COBCAT_OK);
  char* out = nullptr;
  REQUIRE(cobcat_surface_class(klein, &out) == COBCAT_OK);
  const json cls = take(out);
  CHECK(cls["euler"] == 0);
  CHECK(cls["nullbordant"] == true);
  CHECK(cls["oriented_class"].is_null());
  cobcat_surface_free(klein);

  cobcat_surface *d_in = nullptr, *m_in = nullptr, *d_out = nullptr, *m_out = nullptr;
  REQUIRE(cobcat_surface_from_json(data("disc_in.json").c_str(), &d_in) == COBCAT_OK);
  REQUIRE(cobcat_surface_from_json(data("mobius_in.json").c_str(), &m_in) == COBCAT_OK);
  REQUIRE(cobcat_surface_from_json(data("disc_out.json").c_str(), &d_out) == COBCAT_OK);
  REQUIRE(cobcat_surface_from_json(data("mobius_out.json").c_str(), &m_out) == COBCAT_OK);
  REQUIRE(cobcat_surface_relation(d_in, m_in, d_out, m_out, &out) == COBCAT_OK);
  const json rel = take(out);
  CHECK(rel["relator"] == json{{"K", 1}, {"RP2", -2}, {"S2", 1}});
  CHECK(cobcat_surface_relation(d_out, m_in, d_out, m_out, &out) == COBCAT_INVALID_INPUT);
  for (auto* s : {d_in, m_in, d_out, m_out}) cobcat_surface_free(s);
}

TEST_CASE("localization calls") {
  char* out = nullptr;
  REQUIRE(cobcat_surface_localization(4, &out) == COBCAT_OK);
  const json s = take(out);
  CHECK(s["pi1"]["rank"] == 1);
  CHECK(s["pi1"]["torsion"].empty());
  REQUIRE(cobcat_planar_localization(3, &out) == COBCAT_OK);
  CHECK(take(out)["pi1"]["rank"] == 1);
  REQUIRE(cobcat_abstract_cob1_localization(&out) == COBCAT_OK);
  CHECK(take(out)["k"] == 0);
  CHECK(cobcat_surface_localization(-1, &out) == COBCAT_INVALID_INPUT);
}

TEST_CASE("picard and theory calls") {
  cobcat_picard *s = nullptr, *g = nullptr, *file = nullptr;
  REQUIRE(cobcat_picard_builtin("svect", 5, &s) == COBCAT_OK);
  REQUIRE(cobcat_picard_builtin("graded", 5, &g) == COBCAT_OK);
  REQUIRE(cobcat_picard_from_json(data("svect_f5.json").c_str(), &file) == COBCAT_OK);
  char* out = nullptr;
  REQUIRE(cobcat_picard_k(s, "[1]", &out) == COBCAT_OK);
  CHECK(take(out)["k"] == json{2});
  int eq = -1;
  REQUIRE(cobcat_picard_equivalent(s, g, 1000000, &eq) == COBCAT_OK);
  CHECK(eq == 0);
  REQUIRE(cobcat_picard_equivalent(s, file, 1000000, &eq) == COBCAT_OK);
  CHECK(eq == 1);
  cobcat_picard* bogus = nullptr;
  CHECK(cobcat_picard_builtin("svect", 6, &bogus) == COBCAT_INVALID_INPUT);
  CHECK(cobcat_picard_builtin("nope", 5, &bogus) == COBCAT_INVALID_INPUT);
  for (auto* p : {s, g, file}) cobcat_picard_free(p);

  cobcat_theory* t = nullptr;
  REQUIRE(cobcat_theory_from_json(data("theory_id2.json").c_str(), &t) == COBCAT_OK);
  REQUIRE(cobcat_theory_extend(t, &out) == COBCAT_OK);
  const json ext = take(out);
  CHECK(ext["extends"] == true);
  CHECK(ext["circle"] == 2);
  REQUIRE(cobcat_theory_eval(t, data("matching_cup_circle.json").c_str(), &out) == COBCAT_OK);
  CHECK(take(out)["kind"] == "full");
  REQUIRE(cobcat_theory_eval(t, data("restricted_cup.json").c_str(), &out) == COBCAT_OK);
  CHECK(take(out)["kind"] == "restricted");
  cobcat_theory_free(t);
  REQUIRE(cobcat_theory_from_json(data("theory_degenerate.json").c_str(), &t) == COBCAT_OK);
  REQUIRE(cobcat_theory_extend(t, &out) == COBCAT_OK);
  CHECK(take(out)["extends"] == false);
  CHECK(cobcat_theory_eval(t, data("matching_cup_circle.json").c_str(), &out) == COBCAT_INVALID_INPUT);
  cobcat_theory_free(t);
}

TEST_CASE("errors are per thread") {
  std::string other;
  std::thread th([&] {
    cobcat_category* c = nullptr;
    cobcat_category_from_json("[]", &c);
    other = cobcat_last_error();
  });
  th.join();
  cobcat_category* c = nullptr;
  REQUIRE(cobcat_category_from_json(data("terminal.json").c_str(), &c) == COBCAT_OK);
  CHECK(std::string(cobcat_last_error()).empty());
  CHECK_FALSE(other.empty());
  cobcat_category_free(c);
}
