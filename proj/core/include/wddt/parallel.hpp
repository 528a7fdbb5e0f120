#pragma once

#include <cstddef>
#include <functional>

namespace wddt {

// Resolve a requested thread count: 0 means "use the hardware", with a
// floor of one.
unsigned effective_threads(unsigned requested);

// Run body(0) ... body(count - 1), spreading indices over up to
// `threads` workers. Indices are claimed atomically, so results written
// to index-addressed slots are identical for any thread count. If any
// invocation throws, the exception from the lowest index is rethrown
// after all workers finish.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace wddt
