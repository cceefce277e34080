// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace tpq {

/// Engine used for every random draw in the library.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of sub-stream `stream` under `base`: base XOR mix64(stream).
/// Realization r of a run uses derive_seed(base_seed, r), so results do not
/// depend on the order in which realizations are scheduled.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return base ^ mix64(stream);
}

}  // namespace tpq
