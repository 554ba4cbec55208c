#include <stdio.h>
#include "mincut_ffi.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s\n", #cond); return 1; } } while (0)

int main(void) {
    size_t edges[] = {0, 1, 1, 2, 2, 3, 3, 0};
    MincutGraph *c4 = NULL;
    CHECK(mincut_graph_from_edges(4, edges, 4, &c4) == MINCUT_STATUS_OK);

    MincutFamily *fam = NULL;
    CHECK(mincut_enumerate(c4, 24, &fam) == MINCUT_STATUS_OK);
    CHECK(mincut_family_lambda(fam) == 2);
    CHECK(mincut_family_len(fam) == 6);
    mincut_family_free(fam);

    MincutGraph *x = NULL;
    CHECK(mincut_xgraph(c4, 24, &x) == MINCUT_STATUS_OK);
    CHECK(mincut_graph_order(x) == 6 && mincut_graph_size(x) == 12);

    MincutTrace *t = NULL;
    MincutOutcome o;
    CHECK(mincut_iterate(c4, 10, &t) == MINCUT_STATUS_OK);
    CHECK(mincut_trace_outcome(t, &o) == MINCUT_STATUS_OK);
    CHECK(o.kind == MINCUT_OUTCOME_KIND_FIXED_POINT && o.preperiod == 1);
    mincut_trace_free(t);

    MincutGraph *bad = NULL;
    CHECK(mincut_graph_from_graph6("\x7f", &bad) == MINCUT_STATUS_PARSE);
    CHECK(mincut_last_error() != NULL);

    mincut_graph_free(x);
    mincut_graph_free(c4);
    printf("ok\n");
    return 0;
}
