#include <stdio.h>
#include <string.h>
#include "morphcheck.h"

static int check(int ok, const char *what) {
    if (!ok) {
        const char *msg = morphcheck_last_error_message();
        fprintf(stderr, "FAIL %s (%s)\n", what, msg ? msg : "no message");
    }
    return ok ? 0 : 1;
}

int main(void) {
    int failures = 0;
    char *value = NULL;

    failures += check(morphcheck_c_top_x(4, 4, 3, &value) == MORPHCHECK_STATUS_OK, "c_top_x status");
    failures += check(value && strcmp(value, "920") == 0, "c_top_x value");
    morphcheck_string_free(value);

    char *lhs = NULL, *rhs = NULL;
    bool holds = true;
    failures += check(morphcheck_hurwitz_check(4, 4, 3, 3, &lhs, &rhs, &holds) == MORPHCHECK_STATUS_OK, "hurwitz");
    failures += check(!holds && strcmp(lhs, "920") == 0 && strcmp(rhs, "1080") == 0, "hurwitz sides");
    morphcheck_string_free(lhs);
    morphcheck_string_free(rhs);

    failures += check(morphcheck_hurwitz_check(3, 4, 3, 3, NULL, NULL, &holds) == MORPHCHECK_STATUS_INVALID_ARGUMENT,
                      "precondition rejected");

    MorphcheckCaseReport *report = NULL;
    failures += check(morphcheck_classify_case(4, 24, 5, MORPHCHECK_CHAR_MODE_ZERO, false, &report) == MORPHCHECK_STATUS_OK,
                      "classify");
    MorphcheckOverall overall;
    morphcheck_case_report_overall(report, &overall);
    failures += check(overall == MORPHCHECK_OVERALL_UNDETERMINED, "overall");
    MorphcheckVerdictStatus status;
    morphcheck_case_report_verdict_status(report, 7, &status);
    failures += check(status == MORPHCHECK_VERDICT_STATUS_SURVIVES, "survivor m=7");
    morphcheck_case_report_free(report);

    bool passed = false;
    failures += check(morphcheck_verify_paper_tables(&passed) == MORPHCHECK_STATUS_OK && passed, "tables");

    if (failures == 0) {
        printf("ok\n");
    }
    return failures == 0 ? 0 : 1;
}
