#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "exact2.h"

static char *slurp(const char *path) {
    FILE *f = fopen(path, "rb");
    if (!f) return NULL;
    fseek(f, 0, SEEK_END);
    long n = ftell(f);
    fseek(f, 0, SEEK_SET);
    char *buf = malloc(n + 1);
    size_t got = fread(buf, 1, n, f);
    buf[got] = '\0';
    fclose(f);
    return buf;
}

int main(int argc, char **argv) {
    if (argc < 2) return 64;
    char *text = slurp(argv[1]);
    if (!text) return 65;

    Exact2Functor *f = NULL;
    printf("parse %d\n", exact2_functor_from_json(text, &f));
    free(text);

    char *json = NULL;
    printf("factor %d\n", exact2_factor(f, EXACT2_SYSTEM_BO, &json));
    printf("has middle %d\n", json != NULL && strstr(json, "\"middle\"") != NULL);
    exact2_string_free(json);

    printf("orthogonal self %d\n", exact2_orthogonal(f, f, NULL, NULL));

    Exact2Kernel *k = NULL;
    printf("kernel %d\n", exact2_kernel(f, EXACT2_SYSTEM_BOF, NULL, &k));
    printf("congruence %d\n", exact2_is_congruence(k, NULL));
    printf("effective %d\n", exact2_check_effective(k, NULL, NULL));
    exact2_kernel_free(k);
    exact2_functor_free(f);

    Exact2Functor *g = NULL;
    printf("bad json %d\n", exact2_functor_from_json("{", &g));
    printf("has message %d\n", strlen(exact2_last_error()) > 0);
    printf("null %d\n", exact2_classify(NULL, NULL, &json));
    return 0;
}
