#pragma once

namespace poissonpca {

// Number of worker threads OpenMP regions may use. The POISSON_PCA_THREADS
// environment variable seeds the cap on first use; set_max_workers overrides
// it at runtime (0 restores the OpenMP default). All kernels parallelize
// across independent output entries with serial inner accumulations, so
// results do not depend on the worker count.
int worker_count();
void set_max_workers(int n);

}  // namespace poissonpca
