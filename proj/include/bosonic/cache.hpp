#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bosonic/algebra.hpp"

namespace bosonic {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheDirEnv = "BOSONIC_CACHE_DIR";

// Value of the cache-directory environment variable, or empty.
std::string default_cache_dir();

std::string slice_cache_path(const std::string& dir, const CartanDatum& cd, const RootVec& weight);

// Pivot words from a cache file, or nullopt if missing, unreadable or incompatible.
std::optional<std::vector<NodeWord>> load_slice_pivots(const std::string& dir, const CartanDatum& cd,
                                                       const RootVec& weight, std::size_t word_count);

// Writes via a temporary file and rename. Failures are ignored: caches are advisory.
void save_slice_basis(const std::string& dir, const CartanDatum& cd, const SliceBasis& basis);

}  // namespace bosonic
