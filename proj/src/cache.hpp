#pragma once

#include <optional>
#include <string>

#include "char_table.hpp"

namespace charlab {

// Versioned text serialization of a computed table. Bit-exact round trip:
// serialize(deserialize(s)) == s for any cache entry this version wrote.
std::string serialize_table(const CharacterTable& t);

// Rebuilds the table against the given group, whose freshly computed class
// data must match the serialized representatives (Input error otherwise).
CharacterTable deserialize_table(const std::string& data, const PermGroup& g,
                                 u64 bound = kDefaultEnumerationBound);

// Content-addressed key for a group source under the current engine version.
std::string cache_key(const std::string& group_content);

// Both return/accept the directory resolved by the caller (empty = disabled).
// Corrupt or stale entries are evicted with a warning on stderr and recomputed
// by the caller.
std::optional<CharacterTable> cache_load(const std::string& dir, const std::string& key,
                                         const PermGroup& g,
                                         u64 bound = kDefaultEnumerationBound);
void cache_store(const std::string& dir, const std::string& key, const CharacterTable& t);

// CHARLAB_CACHE environment variable overrides the configured directory.
std::string resolve_cache_dir(const std::string& configured);

}  // namespace charlab
