#include <stdio.h>
#include <string.h>
#include "bethe_symm.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (%s)\n", #cond, bs_last_error() ? bs_last_error() : ""); return 1; } } while (0)

int main(void) {
    BsValue *a = NULL, *b = NULL, *sum = NULL, *s = NULL;
    CHECK(bs_value_parse("z1", &a) == BS_STATUS_OK);
    CHECK(bs_value_parse("z2", &b) == BS_STATUS_OK);
    CHECK(bs_value_binary(BS_OP_ADD, a, b, &sum) == BS_STATUS_OK);

    const BsValue *vars[2] = {a, b};
    size_t parts[1] = {1};
    CHECK(bs_schur(parts, 1, vars, 2, &s) == BS_STATUS_OK);
    CHECK(bs_value_equal(s, sum) == 1);

    char *text = bs_value_to_string(s);
    CHECK(text != NULL && strcmp(text, "z1 + z2") == 0);
    bs_string_free(text);

    BsValue *bad = NULL;
    CHECK(bs_value_parse("1/0", &bad) != BS_STATUS_OK);
    CHECK(bs_last_error() != NULL);

    bs_value_free(a);
    bs_value_free(b);
    bs_value_free(sum);
    bs_value_free(s);
    printf("ok\n");
    return 0;
}
