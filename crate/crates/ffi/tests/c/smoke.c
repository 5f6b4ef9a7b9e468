#include <stdio.h>
#include <string.h>

#include "radsym.h"

#define CHECK(expr)                                                        \
    do {                                                                   \
        if (!(expr)) {                                                     \
            fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #expr, \
                    radsym_last_error());                                  \
            return 1;                                                      \
        }                                                                  \
    } while (0)

int main(void) {
    RadsymSystem *ho = NULL;
    CHECK(radsym_system_new("ho", &ho) == RADSYM_STATUS_OK);

    RadsymOperator *dp = NULL, *dm = NULL, *d3 = NULL, *c = NULL, *twice = NULL, *res = NULL;
    CHECK(radsym_operator_build(ho, "D+", &dp) == RADSYM_STATUS_OK);
    CHECK(radsym_operator_build(ho, "D-", &dm) == RADSYM_STATUS_OK);
    CHECK(radsym_operator_build(ho, "D3", &d3) == RADSYM_STATUS_OK);
    CHECK(radsym_operator_commutator(dp, dm, &c) == RADSYM_STATUS_OK);
    CHECK(radsym_operator_scale(d3, "-2", &twice) == RADSYM_STATUS_OK);
    CHECK(radsym_operator_sub(c, twice, &res) == RADSYM_STATUS_OK);
    bool zero = false;
    CHECK(radsym_operator_is_zero(res, &zero) == RADSYM_STATUS_OK);
    CHECK(zero);

    char *json = NULL;
    CHECK(radsym_operator_to_json(d3, &json) == RADSYM_STATUS_OK);
    CHECK(strstr(json, "terms") != NULL);
    radsym_string_free(json);

    bool pass = false;
    CHECK(radsym_verify_identity("ho.so21.pm", &pass, NULL) == RADSYM_STATUS_OK);
    CHECK(pass);
    CHECK(radsym_verify_identity("no.such.id", &pass, NULL) == RADSYM_STATUS_UNKNOWN_NAME);
    CHECK(strlen(radsym_last_error()) > 0);

    RadsymOperator *bad = NULL;
    CHECK(radsym_operator_build(ho, "T+n", &bad) == RADSYM_STATUS_UNKNOWN_NAME);
    CHECK(radsym_system_new(NULL, &ho) == RADSYM_STATUS_NULL_POINTER);

    radsym_operator_free(dp);
    radsym_operator_free(dm);
    radsym_operator_free(d3);
    radsym_operator_free(c);
    radsym_operator_free(twice);
    radsym_operator_free(res);
    radsym_system_free(ho);
    puts("ok");
    return 0;
}
