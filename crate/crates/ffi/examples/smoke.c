#include <stdio.h>
#include "bookx.h"

int main(void) {
    BxValue *v = NULL;
    if (bx_value_parse("sqrt(2 + sqrt(3))", &v) != BX_STATUS_OK) {
        fprintf(stderr, "%s\n", bx_last_error_message());
        return 1;
    }
    char *s = NULL;
    bx_value_to_string(v, &s);
    printf("%s\n", s);
    bx_string_free(s);

    BxClass cls;
    uint32_t detail;
    bx_classify(v, &cls, &detail);
    printf("class=%d detail=%u\n", (int)cls, detail);
    bx_value_free(v);

    if (bx_value_parse("sqrt(2", &v) == BX_STATUS_SYNTAX_ERROR)
        printf("%s\n", bx_last_error_message());
    return 0;
}
