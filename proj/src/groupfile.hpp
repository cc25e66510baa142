#pragma once

#include <optional>
#include <string>

#include "group.hpp"

namespace charlab {

// A parsed group source: the raw text is kept for content-addressed caching.
struct GroupInput {
  std::string id;
  std::string content;
  PermGroup group;
};

// Group file grammar (UTF-8 text, '#' comments and blank lines allowed):
//   degree N        followed by one generator per line in cycle notation
//   cayley N        followed by N rows of N 1-based indices
//   builtin: SPEC   with SPEC one of
//       cyclic(n) | dihedral(order) | symmetric(n) | alternating(n)
//     | direct_product(SPEC, SPEC)
//     | semidirect(p^k, SPEC, [[[row],...],[[row],...],...])
//       (one k x k matrix over F_p per generator of the acting SPEC)
GroupInput parse_group_text(const std::string& text, const std::string& id);
GroupInput load_group_file(const std::string& path);  // id = file stem

// Parses just the builtin SPEC grammar (exposed for tests).
PermGroup parse_builtin(const std::string& spec);

struct ManifestEntry {
  std::string id;
  std::string path;  // resolved relative to the manifest file
  std::optional<u64> expected_order;
  std::optional<int> expected_classes;
};

std::vector<ManifestEntry> load_manifest(const std::string& path);

}  // namespace charlab
