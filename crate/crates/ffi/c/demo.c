/* Runs Sod's problem through the C interface and prints the density.
 *
 *   cargo build --release -p afdweno-ffi
 *   cc crates/ffi/c/demo.c -Icrates/ffi/include \
 *      target/release/libafdweno_ffi.a -lm -lpthread -ldl -o demo
 */
#include <stdio.h>
#include "afdweno.h"

int main(void) {
    AfdSimulation *sim = NULL;
    if (afd_simulation_new("sod", 5, 200, 0, &sim) != AFD_STATUS_OK) {
        fprintf(stderr, "%s\n", afd_last_error_message());
        return 1;
    }
    if (afd_simulation_run(sim) != AFD_STATUS_OK) {
        fprintf(stderr, "%s\n", afd_last_error_message());
        afd_simulation_free(sim);
        return 1;
    }
    size_t nx, ny, nvar;
    afd_simulation_shape(sim, &nx, &ny, &nvar);
    static double buf[200 * 4];
    if (nx * ny * nvar > sizeof buf / sizeof buf[0] ||
        afd_simulation_primitives(sim, buf, sizeof buf / sizeof buf[0]) != AFD_STATUS_OK) {
        afd_simulation_free(sim);
        return 1;
    }
    for (size_t i = 0; i < nx; i += 20)
        printf("%zu %.6f\n", i, buf[i * nvar]);
    afd_simulation_free(sim);
    return 0;
}
