#pragma once

#include <cstddef>
#include <functional>

namespace magedge {

/// Runs body(i) for i in [0, count) on a transient thread pool. Work items
/// must be independent; results must be written to pre-sized slots so the
/// outcome does not depend on scheduling. Honors the MAGEDGE_THREADS
/// environment variable (0 or unset -> hardware concurrency).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

std::size_t worker_count();

}  // namespace magedge
