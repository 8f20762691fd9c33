#include <stdio.h>
#include <string.h>
#include "recgrow.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (%s)\n", #cond, recgrow_last_error()); return 1; } } while (0)

static const char *WORKED =
    "[[terms]]\n"
    "alpha = { num = [\"0/1\", \"1/1\"] }\n"
    "coeffs = [{ num = [\"1/1\", \"1/1\"] }]\n"
    "[[terms]]\n"
    "alpha = { num = [\"1/1\", \"1/1\"] }\n"
    "coeffs = [{ num = [\"0/1\", \"1/1\"] }]\n";

int main(void) {
    RecgrowSpec *spec = NULL;
    CHECK(recgrow_spec_parse(WORKED, false, &spec) == RECGROW_STATUS_OK);
    RecgrowVerifySummary sum;
    CHECK(recgrow_spec_verify(spec, "inf", 300, &sum, NULL) == RECGROW_STATUS_OK);
    CHECK(sum.rows == 301 && sum.violations == 0 && sum.n0_observed == 0);
    recgrow_spec_free(spec);

    int64_t c[] = {-1, -1, 1};
    int64_t g[] = {0, 1};
    RecgrowIntRecurrence *rec = NULL;
    CHECK(recgrow_int_recurrence_new(c, 3, g, 2, 256, &rec) == RECGROW_STATUS_OK);
    int64_t min_n = -2;
    CHECK(recgrow_epsilon_min_n(rec, 1, 10, 200, 256, &min_n) == RECGROW_STATUS_OK);
    CHECK(min_n == 17);
    char *term = NULL;
    CHECK(recgrow_int_recurrence_term(rec, 100, &term) == RECGROW_STATUS_OK);
    CHECK(strcmp(term, "354224848179261915075") == 0);
    recgrow_string_free(term);
    recgrow_int_recurrence_free(rec);

    char *bound = NULL;
    CHECK(recgrow_schmidt_log_bound(1, 1, &bound) == RECGROW_STATUS_OK);
    CHECK(strcmp(bound, "5764801") == 0);
    recgrow_string_free(bound);

    CHECK(recgrow_spec_parse("not toml [", false, &spec) == RECGROW_STATUS_INVALID_INPUT);
    CHECK(strlen(recgrow_last_error()) > 0);
    printf("ok\n");
    return 0;
}
