/* The public header must compile as C and link against the shared library. */
#include "chromatica/chromatica.h"

#include <stdio.h>
#include <string.h>

int main(void) {
    const uint32_t edges[] = {0, 1, 1, 2, 0, 2};
    chrom_graph* g = NULL;
    chrom_poly* p = NULL;
    char* text = NULL;
    int rc = 1;

    if (chrom_graph_create(3, edges, 3, &g) != CHROM_OK) goto done;
    if (chrom_chromatic(g, CHROM_METHOD_AUTO, NULL, &p, NULL) != CHROM_OK) goto done;
    if (chrom_poly_to_string(p, &text) != CHROM_OK) goto done;
    printf("%s\n", text);
    rc = strcmp(text, "t^3 - 3t^2 + 2t") != 0;

done:
    if (rc) fprintf(stderr, "failed: %s\n", chrom_last_error());
    chrom_string_free(text);
    chrom_poly_free(p);
    chrom_graph_free(g);
    return rc;
}
