#pragma once

#include <cstddef>

#include <functional>

namespace avkde {

//! Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware
//! concurrency). Tasks must write only to disjoint slots; the caller then
//! reduces in index order, so results do not depend on the schedule.
//! The first exception thrown by a task is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace avkde
