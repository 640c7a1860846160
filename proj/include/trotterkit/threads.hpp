#pragma once

namespace trotterkit {

/// Applies the TROTTERKIT_THREADS cap to the worker pool; unset or invalid
/// values leave the hardware default in place. Call once from main().
void init_threads_from_env();

/// Threads the pool will actually use.
int worker_thread_count();

}  // namespace trotterkit
