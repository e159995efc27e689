#pragma once

#include <filesystem>
#include <memory>
#include <optional>

#include "eulerref/exact_core.hpp"

namespace eulerref {

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "EULERREF_CACHE_DIR";

/// Value of EULERREF_CACHE_DIR, or empty when unset.
std::filesystem::path default_cache_dir();

/// table-n<n>-<method>.txt inside dir.
std::filesystem::path cache_file(const std::filesystem::path& dir, int n, TableMethod method);

/// Reads a cached table. Returns nullopt when the file is absent; throws
/// ConsistencyError when it is malformed or fails the column-sum check.
std::optional<RefinedTable> load_table(const std::filesystem::path& dir, int n, TableMethod method);

/// Writes through a temporary file and a rename.
void store_table(const std::filesystem::path& dir, const RefinedTable& table);

/// load_table, falling back to refined_table and storing the result. An
/// empty dir bypasses the cache.
std::shared_ptr<const RefinedTable> cached_table(int n, TableMethod method, const std::filesystem::path& dir);

}  // namespace eulerref
