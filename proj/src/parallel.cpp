#include "qhnf/parallel.hpp"

#include "qhnf/error.hpp"

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qhnf {

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, Exec exec) {
    if (exec == Exec::Serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

Matrix build_columns(std::size_t rows, std::size_t cols, const std::function<Vec(std::size_t)>& column, Exec exec) {
    std::vector<Vec> columns(cols);
    for_each_index(cols, [&](std::size_t c) { columns[c] = column(c); }, exec);
    return Matrix::from_columns(columns, rows);
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace qhnf
