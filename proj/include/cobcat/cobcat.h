#ifndef COBCAT_H
#define COBCAT_H

/* C interface to libcobcat. Every call returns a cobcat_status; on failure
 * cobcat_last_error() describes the problem for the calling thread. Strings
 * returned through char** are JSON documents owned by the caller and must be
 * released with cobcat_string_free(). Handles are released with their
 * matching *_free function; passing NULL to a free function is a no-op. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COBCAT_API __declspec(dllexport)
#else
#define COBCAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cobcat_status {
  COBCAT_OK = 0,
  COBCAT_INVALID_INPUT = 1,
  COBCAT_RESOURCE_LIMIT = 2,
  COBCAT_NULL_ARGUMENT = 3,
  COBCAT_INTERNAL_ERROR = 4
} cobcat_status;

typedef struct cobcat_category cobcat_category;
typedef struct cobcat_diagram cobcat_diagram;
typedef struct cobcat_surface cobcat_surface;
typedef struct cobcat_picard cobcat_picard;
typedef struct cobcat_theory cobcat_theory;

COBCAT_API const char* cobcat_version(void);
COBCAT_API const char* cobcat_last_error(void);
COBCAT_API void cobcat_string_free(char* s);

/* Finite categories, nerves, localization. */
COBCAT_API cobcat_status cobcat_category_from_json(const char* json, cobcat_category** out);
COBCAT_API void cobcat_category_free(cobcat_category* c);
COBCAT_API cobcat_status cobcat_category_to_json(const cobcat_category* c, char** out);
/* {"valid": bool, "issues": [{"kind", "detail"}]} */
COBCAT_API cobcat_status cobcat_category_validate(const cobcat_category* c, char** out);
/* {"H": [{"rank", "torsion"}, ...]} for H_0 .. H_{cap-1}; max_cells 0 means the default */
COBCAT_API cobcat_status cobcat_category_homology(const cobcat_category* c, size_t cap, size_t max_cells, char** out);
/* {"pi0": [[objects]], "pi1": presentation, "simplified": presentation, "abelianization"} */
COBCAT_API cobcat_status cobcat_category_pi1(const cobcat_category* c, const char* base, char** out);
/* Aut(base) in the localization, with the generator map for endomorphisms of base */
COBCAT_API cobcat_status cobcat_localize_aut(const cobcat_category* c, const char* base, char** out);
/* Checks every relation instance of the category against its localization. */
COBCAT_API cobcat_status cobcat_relations_check(const cobcat_category* c, size_t limit, char** out);

COBCAT_API cobcat_status cobcat_surface_localization(int max_complexity, char** out);
COBCAT_API cobcat_status cobcat_planar_localization(int max_circles, char** out);
COBCAT_API cobcat_status cobcat_abstract_cob1_localization(char** out);

/* Planar 1-cobordisms as slice words. */
COBCAT_API cobcat_status cobcat_diagram_from_json(const char* json, cobcat_diagram** out);
COBCAT_API void cobcat_diagram_free(cobcat_diagram* d);
COBCAT_API cobcat_status cobcat_diagram_to_json(const cobcat_diagram* d, char** out);
COBCAT_API cobcat_status cobcat_diagram_f(const cobcat_diagram* d, int64_t* out);
/* w followed by w2 */
COBCAT_API cobcat_status cobcat_diagram_compose(const cobcat_diagram* w, const cobcat_diagram* w2, cobcat_diagram** out);
/* {"class": n, "forest": [trees]} for a closed diagram */
COBCAT_API cobcat_status cobcat_diagram_reduce(const cobcat_diagram* d, char** out);

/* 2-cobordisms. */
COBCAT_API cobcat_status cobcat_surface_from_json(const char* json, cobcat_surface** out);
COBCAT_API void cobcat_surface_free(cobcat_surface* s);
COBCAT_API cobcat_status cobcat_surface_to_json(const cobcat_surface* s, char** out);
/* w2 ∘ w */
COBCAT_API cobcat_status cobcat_surface_compose(const cobcat_surface* w, const cobcat_surface* w2, cobcat_surface** out);
COBCAT_API cobcat_status cobcat_surface_euler(const cobcat_surface* s, int64_t* out);
/* For closed surfaces: {"closed", "unoriented_class", "nullbordant", "oriented_class"} */
COBCAT_API cobcat_status cobcat_surface_class(const cobcat_surface* s, char** out);
COBCAT_API cobcat_status cobcat_surface_k_connected(const cobcat_surface* s, int k, int* out);
/* w1, w2: y → ∅ and w3, w4: ∅ → y */
COBCAT_API cobcat_status cobcat_surface_relation(const cobcat_surface* w1, const cobcat_surface* w2,
                                                 const cobcat_surface* w3, const cobcat_surface* w4, char** out);

/* Picard data. name is "vect", "svect", "graded" (with prime p) or "cob1". */
COBCAT_API cobcat_status cobcat_picard_from_json(const char* json, cobcat_picard** out);
COBCAT_API cobcat_status cobcat_picard_builtin(const char* name, uint64_t p, cobcat_picard** out);
COBCAT_API void cobcat_picard_free(cobcat_picard* p);
COBCAT_API cobcat_status cobcat_picard_to_json(const cobcat_picard* p, char** out);
/* element_json is a generator name (as a JSON string) or a coordinate array */
COBCAT_API cobcat_status cobcat_picard_k(const cobcat_picard* p, const char* element_json, char** out);
/* search_bound 0 means the default */
COBCAT_API cobcat_status cobcat_picard_equivalent(const cobcat_picard* p, const cobcat_picard* q,
                                                  uint64_t search_bound, int* out);

/* Restricted 1-dimensional theories from a symmetric pairing. */
COBCAT_API cobcat_status cobcat_theory_from_json(const char* json, cobcat_theory** out);
COBCAT_API void cobcat_theory_free(cobcat_theory* t);
/* {"extends", "determinant", "circle"} */
COBCAT_API cobcat_status cobcat_theory_extend(const cobcat_theory* t, char** out);
/* Morphisms with an "injection" field are evaluated as restricted
 * morphisms; others as full matchings, which needs an extension. */
COBCAT_API cobcat_status cobcat_theory_eval(const cobcat_theory* t, const char* morphism_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
