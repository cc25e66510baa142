#pragma once

#include "cache.hpp"
#include "groupfile.hpp"
#include "report.hpp"

namespace charlab {

struct EngineOptions {
  u64 bound = kDefaultEnumerationBound;
  std::string cache_dir;  // pass through resolve_cache_dir first; empty = off
  bool timing = false;
};

// Table via the content-addressed cache when enabled.
CharacterTable obtain_table(const GroupInput& gi, const EngineOptions& opt);

// Profile only.
GroupReport analyze_group(const GroupInput& gi, u64 p, const EngineOptions& opt);

// Profile plus the selected checkers/audits.
GroupReport check_group(const GroupInput& gi, u64 p, const CheckerSelection& sel,
                        const EngineOptions& opt);

// Full corpus sweep: analyze + all checkers + audits per (group, p); group
// errors are recorded, never abort the sweep; deterministic aggregate for any
// worker count.
SweepReport sweep_corpus(const std::vector<ManifestEntry>& entries,
                         const std::vector<u64>& primes, unsigned jobs,
                         const EngineOptions& opt);

}  // namespace charlab
