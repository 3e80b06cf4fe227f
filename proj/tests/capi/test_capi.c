/* Exercises the shared library through its C interface only. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "braidloc/braidloc.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static void test_matrix(void) {
  braidloc_matrix* m = NULL;
  EXPECT(braidloc_matrix_load("builtin:dye4", BRAIDLOC_BACKEND_EXACT, &m) == BRAIDLOC_OK);
  EXPECT(braidloc_matrix_dim(m) == 4);
  int ybe = 0, unitary = 0;
  EXPECT(braidloc_matrix_check_ybe(m, 0, &ybe) == BRAIDLOC_OK && ybe == 1);
  EXPECT(braidloc_matrix_is_unitary(m, &unitary) == BRAIDLOC_OK && unitary == 1);

  char* json = NULL;
  EXPECT(braidloc_matrix_to_json(m, &json) == BRAIDLOC_OK && json != NULL);
  braidloc_matrix* back = NULL;
  EXPECT(braidloc_matrix_parse(json, BRAIDLOC_BACKEND_EXACT, &back) == BRAIDLOC_OK);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double a_re, a_im, b_re, b_im;
      EXPECT(braidloc_matrix_entry(m, i, j, &a_re, &a_im) == BRAIDLOC_OK);
      EXPECT(braidloc_matrix_entry(back, i, j, &b_re, &b_im) == BRAIDLOC_OK);
      EXPECT(a_re == b_re && a_im == b_im);
    }
  double re, im;
  EXPECT(braidloc_matrix_entry(m, 4, 0, &re, &im) == BRAIDLOC_ERR_INVALID_ARGUMENT);
  braidloc_string_free(json);
  braidloc_matrix_free(back);
  braidloc_matrix_free(m);

  braidloc_matrix* bad = NULL;
  EXPECT(braidloc_matrix_load("builtin:nonexistent", BRAIDLOC_BACKEND_EXACT, &bad) == BRAIDLOC_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(braidloc_last_error()) > 0);
  EXPECT(braidloc_matrix_parse("[[1, 2], [3", BRAIDLOC_BACKEND_EXACT, &bad) == BRAIDLOC_ERR_PARSE);
  EXPECT(braidloc_matrix_check_ybe(NULL, 0, &ybe) == BRAIDLOC_ERR_INVALID_ARGUMENT);
}

static void test_literals(void) {
  double re = 0, im = 0;
  EXPECT(braidloc_cyc_to_complex("z4^1", &re, &im) == BRAIDLOC_OK);
  EXPECT(fabs(re) < 1e-15 && fabs(im - 1) < 1e-15);
  EXPECT(braidloc_cyc_to_complex("1/2*z8^1+1/2*z8^7", &re, &im) == BRAIDLOC_OK);
  EXPECT(fabs(re - sqrt(2.0) / 2) < 1e-14 && fabs(im) < 1e-14);
  EXPECT(braidloc_cyc_to_complex("z8^", &re, &im) == BRAIDLOC_ERR_PARSE);
  EXPECT(braidloc_status_is_usage_error(BRAIDLOC_ERR_PARSE));
  EXPECT(!braidloc_status_is_usage_error(BRAIDLOC_ERR_YBE_FAILURE));
  EXPECT(strcmp(braidloc_status_name(BRAIDLOC_OK), "ok") == 0);
}

static void test_reports(void) {
  braidloc_ybe_options o;
  braidloc_ybe_options_init(&o);
  o.matrix = "builtin:loc6";
  o.order_bound = 50;
  braidloc_report* a = NULL;
  braidloc_report* b = NULL;
  EXPECT(braidloc_ybe_check(&o, &a) == BRAIDLOC_OK);
  EXPECT(braidloc_ybe_check(&o, &b) == BRAIDLOC_OK);
  EXPECT(braidloc_report_passed(a) == 1);
  EXPECT(strstr(braidloc_report_json(a), "\"schema\": 1") != NULL);
  EXPECT(strstr(braidloc_report_json(a), "\"wall_time\": null") != NULL);
  /* exact runs without timing are byte-identical */
  EXPECT(strcmp(braidloc_report_json(a), braidloc_report_json(b)) == 0);
  braidloc_report_free(a);
  braidloc_report_free(b);

  o.timing = 1;
  EXPECT(braidloc_ybe_check(&o, &a) == BRAIDLOC_OK);
  EXPECT(strstr(braidloc_report_json(a), "\"wall_time\": null") == NULL);
  braidloc_report_free(a);

  braidloc_fusion_options f;
  braidloc_fusion_options_init(&f);
  f.catalog = "sl2_level";
  f.param = 3;
  f.expect = "obstructed";
  EXPECT(braidloc_fusion_analyze(&f, &a) == BRAIDLOC_OK);
  EXPECT(braidloc_report_passed(a) == 1);
  EXPECT(strstr(braidloc_report_json(a), "\"Obstructed\"") != NULL);
  braidloc_report_free(a);

  braidloc_gaussian_options g;
  braidloc_gaussian_options_init(&g);
  g.p = 9;
  a = NULL;
  EXPECT(braidloc_gaussian_build(&g, &a) == BRAIDLOC_ERR_INVALID_ARGUMENT);
  EXPECT(a == NULL);
  EXPECT(braidloc_ybe_check(NULL, &a) == BRAIDLOC_ERR_INVALID_ARGUMENT);
}

int main(void) {
  EXPECT(strlen(braidloc_version()) > 0);
  test_matrix();
  test_literals();
  test_reports();
  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("C API: all checks passed\n");
  return failures ? 1 : 0;
}
