#include "engine.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace charlab {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

GroupReport build_report(const GroupInput& gi, u64 p, const CheckerSelection& sel,
                         const EngineOptions& opt) {
  check(is_prime_u64(p), ErrKind::Input, "p must be prime");
  Clock::time_point start = Clock::now();
  CharacterTable table = obtain_table(gi, opt);

  GroupReport rep;
  rep.group_id = gi.id;
  rep.p = p;
  rep.order = table.group.order();
  rep.classes = table.num_classes();
  rep.exponent = table.exponent;
  rep.profile = rationality_profile(table, p);

  if (sel.continuity_all) rep.verdicts.push_back(check_continuity(rep.profile, Scope::All));
  if (sel.continuity_b0)
    rep.verdicts.push_back(check_continuity(rep.profile, Scope::PrincipalBlock));
  if (sel.gap_frattini)
    rep.verdicts.push_back(
        check_level_one_gap(table, rep.profile, p, GapMode::Frattini, opt.bound));
  if (sel.gap_ppal)
    rep.verdicts.push_back(
        check_level_one_gap(table, rep.profile, p, GapMode::PrincipalBlock, opt.bound));
  if (sel.mckay) rep.verdicts.push_back(check_mckay_multiset(table, rep.profile, p, opt.bound));
  if (sel.exponent) rep.verdicts.push_back(check_exponent_bound(table, rep.profile, p, opt.bound));
  if (sel.audit) rep.audit = theorem_audit(table, rep.profile, p, opt.bound);

  if (opt.timing) rep.timing_ms = elapsed_ms(start);
  return rep;
}

}  // namespace

CharacterTable obtain_table(const GroupInput& gi, const EngineOptions& opt) {
  if (opt.cache_dir.empty()) return character_table(gi.group, opt.bound);
  std::string key = cache_key(gi.content);
  if (auto cached = cache_load(opt.cache_dir, key, gi.group, opt.bound)) return *cached;
  CharacterTable t = character_table(gi.group, opt.bound);
  cache_store(opt.cache_dir, key, t);
  return t;
}

GroupReport analyze_group(const GroupInput& gi, u64 p, const EngineOptions& opt) {
  CheckerSelection none;
  return build_report(gi, p, none, opt);
}

GroupReport check_group(const GroupInput& gi, u64 p, const CheckerSelection& sel,
                        const EngineOptions& opt) {
  return build_report(gi, p, sel, opt);
}

SweepReport sweep_corpus(const std::vector<ManifestEntry>& entries,
                         const std::vector<u64>& primes, unsigned jobs,
                         const EngineOptions& opt) {
  Clock::time_point start = Clock::now();
  SweepReport sweep;

  struct LoadedGroup {
    ManifestEntry entry;
    std::optional<GroupInput> input;  // empty on load error
  };
  std::vector<LoadedGroup> groups;
  for (const ManifestEntry& e : entries) {
    LoadedGroup lg;
    lg.entry = e;
    try {
      GroupInput gi = load_group_file(e.path);
      gi.id = e.id;
      if (e.expected_order && gi.group.order() != *e.expected_order) {
        std::ostringstream os;
        os << "expected order " << *e.expected_order << " but computed " << gi.group.order();
        fail_input(os.str());
      }
      if (e.expected_classes) {
        int k = conjugacy_classes(gi.group, opt.bound).num_classes();
        if (k != *e.expected_classes) {
          std::ostringstream os;
          os << "expected " << *e.expected_classes << " classes but computed " << k;
          fail_input(os.str());
        }
      }
      lg.input = std::move(gi);
    } catch (const Error& err) {
      sweep.errors.push_back({e.id, err.what()});
    }
    groups.push_back(std::move(lg));
  }

  struct Task {
    const GroupInput* input;
    std::string id;
    u64 p;
  };
  std::vector<Task> tasks;
  for (const LoadedGroup& lg : groups) {
    if (!lg.input) continue;
    for (u64 p : primes) tasks.push_back({&*lg.input, lg.entry.id, p});
  }

  struct Slot {
    std::optional<GroupReport> report;
    std::optional<std::string> error;
  };
  std::vector<Slot> slots(tasks.size());
  CheckerSelection sel = CheckerSelection::all();

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        slots[i].report = check_group(*tasks[i].input, tasks[i].p, sel, opt);
      } catch (const Error& err) {
        std::ostringstream os;
        os << "p=" << tasks[i].p << ": " << err.what();
        slots[i].error = os.str();
      } catch (const std::exception& err) {
        std::ostringstream os;
        os << "p=" << tasks[i].p << ": unexpected: " << err.what();
        slots[i].error = os.str();
      }
    }
  };
  unsigned nthreads = std::max(1u, jobs);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (slots[i].report)
      sweep.reports.push_back(std::move(*slots[i].report));
    else if (slots[i].error)
      sweep.errors.push_back({tasks[i].id, *slots[i].error});
  }
  std::sort(sweep.reports.begin(), sweep.reports.end(),
            [](const GroupReport& a, const GroupReport& b) {
              if (a.group_id != b.group_id) return a.group_id < b.group_id;
              return a.p < b.p;
            });
  std::sort(sweep.errors.begin(), sweep.errors.end(),
            [](const SweepError& a, const SweepError& b) {
              if (a.group_id != b.group_id) return a.group_id < b.group_id;
              return a.message < b.message;
            });
  // Per-report timings are non-deterministic across runs; the aggregate is
  // built deterministic, so timings live only behind the flag.
  if (opt.timing) sweep.timing_ms = elapsed_ms(start);
  return sweep;
}

}  // namespace charlab
