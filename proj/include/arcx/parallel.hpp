// Worker count for independent solver trials.
#pragma once

namespace arcx {

/// ARCX_THREADS if set to a positive integer, otherwise the hardware concurrency (at least 1).
unsigned thread_cap();

}  // namespace arcx
