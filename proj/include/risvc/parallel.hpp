// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#pragma once

#include <cstddef>
#include <functional>

namespace risvc {

/// Draws per block. Each block owns one generator, so results depend only on
/// the seed and the block index.
inline constexpr std::size_t kBlockSize = 1024;

/// 0 means "one per hardware thread".
unsigned resolve_workers(unsigned requested);

/// Runs body(block) for block in [0, n_blocks) on `workers` threads. Blocks
/// are handed out dynamically; callers write results into per-block slots
/// and reduce them in block order afterwards. The first exception thrown by
/// any block is rethrown on the calling thread.
void for_each_block(std::size_t n_blocks, unsigned workers,
                    const std::function<void(std::size_t)>& body);

}  // namespace risvc
