/* C interface to the periodic-diffeomorphism classification library.
 *
 * All functions returning hyptv_status leave their outputs untouched on
 * failure; hyptv_last_error() describes the most recent failure on the
 * calling thread. Strings returned through char** outputs are heap-allocated
 * and must be released with hyptv_string_free(). Total valencies are opaque
 * handles released with hyptv_tv_free().
 */
#ifndef HYPTV_H
#define HYPTV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hyptv_tv hyptv_tv;

typedef enum hyptv_status {
  HYPTV_OK = 0,
  HYPTV_EPARSE = 1,        /* malformed literal or JSON input */
  HYPTV_EINVAL = 2,        /* argument outside the documented domain */
  HYPTV_EVALIDATION = 3,   /* structurally valid input failing a mathematical check */
  HYPTV_EOVERFLOW = 4,     /* exact arithmetic left the 64-bit range */
  HYPTV_EMISSING_RULE = 5, /* a rewriting table has no rule for a generator */
  HYPTV_ERANGE = 6,        /* no result exists for this input (e.g. genus < 2) */
  HYPTV_EINTERNAL = 7
} hyptv_status;

/* Last error message on this thread, or "" after a success. Owned by the
 * library; valid until the next call on the same thread. */
const char* hyptv_last_error(void);

void hyptv_string_free(char* s);
void hyptv_tv_free(hyptv_tv* tv);

/* Parsing accepts both formats: JSON objects and bracket literals like
 * "[2,10;1/10+3/5+1/2]" (auto-detected). */
hyptv_status hyptv_tv_parse(const char* text, hyptv_tv** out);
hyptv_status hyptv_tv_to_json(const hyptv_tv* tv, char** out);
hyptv_status hyptv_tv_to_literal(const hyptv_tv* tv, char** out);

/* family: 1, 2, 3, or 4 for the involution-composed third family. */
hyptv_status hyptv_closed_form(int family, int64_t genus, int64_t exponent, hyptv_tv** out);

hyptv_status hyptv_tv_power(const hyptv_tv* tv, int64_t k, hyptv_tv** out);

/* *out = 1 when the two invariants agree up to reordering, else 0. */
hyptv_status hyptv_nielsen_equal(const hyptv_tv* a, const hyptv_tv* b, int* out);

/* HYPTV_OK when valid; HYPTV_EVALIDATION with the reason in
 * hyptv_last_error() otherwise. */
hyptv_status hyptv_validate(const hyptv_tv* tv);

/* On a match: *family in 1..4, *exponent >= 1. No match: *family = 0. */
hyptv_status hyptv_classify(const hyptv_tv* tv, int* family, int64_t* exponent);

/* JSON array of {family, exponent, order, tv} for every power of every
 * family generator at this genus, deduplicated by Nielsen equality. */
hyptv_status hyptv_enumerate_json(int64_t genus, char** out);

/* Total valency of the rotation by 2*pi*step/m on the surface glued from an
 * m-gon by the pairing JSON (array of [a, b] edge pairs). A null pairing
 * selects the built-in model of the family at this genus (m, step ignored). */
hyptv_status hyptv_polygon_tv(int64_t m, const char* pairing_json, int64_t step,
                              hyptv_tv** out);
hyptv_status hyptv_family_polygon_tv(int family, int64_t genus, hyptv_tv** out);

/* Twist-product verification report as JSON. extensions_json may be null.
 * *failed = 1 when any generator got a fail verdict. */
hyptv_status hyptv_verify(int family, int64_t genus, const char* extensions_json,
                          char** report_json, int* failed);

/* The classification table for one genus: closed forms of the three family
 * generators plus the involution-composed entries. */
hyptv_status hyptv_family_table_json(int64_t genus, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HYPTV_H */
