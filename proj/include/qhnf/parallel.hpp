#pragma once

#include "qhnf/linalg.hpp"

#include <cstddef>
#include <functional>

namespace qhnf {

enum class Exec { Serial, Parallel };

// Runs body(i) for i in [0, n). The parallel path uses OpenMP; the first exception by index is rethrown.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, Exec exec);

// Assembles a matrix column by column.
Matrix build_columns(std::size_t rows, std::size_t cols, const std::function<Vec(std::size_t)>& column, Exec exec);

int max_threads();

}  // namespace qhnf
