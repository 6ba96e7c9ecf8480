#include "kernels_detail.hpp"

#ifdef LPC_HAVE_OPENMP
#include <omp.h>
#endif

namespace lpc::kernels {

bool parallel_enabled() {
#ifdef LPC_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

void abs_moments_parallel(const PointSet& pts, const PointSet& dirs, double p, std::span<double> out) {
    const long m = static_cast<long>(dirs.size());
#pragma omp parallel for schedule(static)
    for (long j = 0; j < m; ++j) out[j] = detail::abs_moment_one(pts, dirs, p, static_cast<std::size_t>(j));
}

void superlevel_measure_parallel(const SimplexSet& s, std::span<const double> ts, std::span<double> out) {
    const long m = static_cast<long>(ts.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long k = 0; k < m; ++k) out[k] = detail::superlevel_one(s, ts[k]);
}

void polar_min_parallel(const PointSet& normals, const PointSet& dirs, std::span<double> out) {
    const long m = static_cast<long>(dirs.size());
#pragma omp parallel for schedule(static)
    for (long j = 0; j < m; ++j) out[j] = detail::polar_min_one(normals, dirs, static_cast<std::size_t>(j));
}

}  // namespace lpc::kernels
