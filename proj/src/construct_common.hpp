#pragma once

// Helpers shared by the construction sources.

#include <cstdint>
#include <random>
#include <string>

#include "crx/constructions.hpp"
#include "crx/errors.hpp"
#include "crx/rainbow_search.hpp"

namespace crx::detail {

/// Runs the cycle verifier for k when opts.verify is set.
inline void self_verify(const EdgeColouring& c, int k, const ConstructOptions& opts, const std::string& what) {
  if (!opts.verify) return;
  auto rep = verify_k_rainbow_cycle_colouring(c, k, SearchOptions{opts.budget, opts.threads});
  if (!rep.certified()) {
    std::string set;
    for (Vertex v : *rep.bad_set) set += (set.empty() ? "" : ",") + std::to_string(v);
    throw ConstructionRejected(what + ": no rainbow cycle through {" + set + "} for k = " + std::to_string(k));
  }
}

/// Uniform integer in [0, bound) by rejection; identical on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace crx::detail
