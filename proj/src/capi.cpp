#include "charlab/charlab.h"

#include <cstring>
#include <variant>

#include "engine.hpp"

using namespace charlab;

struct charlab_group {
  GroupInput input;
};

struct charlab_report {
  std::variant<GroupReport, SweepReport> data;
};

namespace {

thread_local std::string g_last_error;

charlab_status status_of(ErrKind kind) {
  switch (kind) {
    case ErrKind::Input: return CHARLAB_ERR_INPUT;
    case ErrKind::Domain: return CHARLAB_ERR_DOMAIN;
    case ErrKind::Capacity: return CHARLAB_ERR_CAPACITY;
    default: return CHARLAB_ERR_INTERNAL;
  }
}

template <typename Fn>
charlab_status guarded(Fn&& fn) {
  try {
    fn();
    return CHARLAB_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CHARLAB_ERR_INTERNAL;
  }
}

EngineOptions make_options(const charlab_options* opt) {
  EngineOptions out;
  if (opt) {
    if (opt->enumeration_bound) out.bound = opt->enumeration_bound;
    out.cache_dir = resolve_cache_dir(opt->cache_dir ? opt->cache_dir : "");
    out.timing = opt->timing != 0;
  } else {
    out.cache_dir = resolve_cache_dir("");
  }
  return out;
}

std::vector<u64> parse_primes(const char* csv) {
  check(csv && *csv, ErrKind::Input, "primes list is empty");
  std::vector<u64> primes;
  std::string s(csv);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? s.size() : comma + 1;
    if (tok.empty()) continue;
    u64 p = 0;
    try {
      p = std::stoull(tok);
    } catch (const std::exception&) {
      fail_input("bad prime token: " + tok);
    }
    check(is_prime_u64(p), ErrKind::Input, "not a prime: " + tok);
    primes.push_back(p);
  }
  check(!primes.empty(), ErrKind::Input, "primes list is empty");
  return primes;
}

}  // namespace

extern "C" {

const char* charlab_version(void) { return kVersion; }

const char* charlab_last_error(void) { return g_last_error.c_str(); }

charlab_status charlab_group_from_file(const char* path, charlab_group** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return CHARLAB_ERR_INPUT;
  }
  return guarded([&] {
    auto* g = new charlab_group{load_group_file(path)};
    *out = g;
  });
}

charlab_status charlab_group_from_text(const char* text, const char* id, charlab_group** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return CHARLAB_ERR_INPUT;
  }
  return guarded([&] {
    auto* g = new charlab_group{parse_group_text(text, id ? id : "group")};
    *out = g;
  });
}

void charlab_group_free(charlab_group* g) { delete g; }

uint64_t charlab_group_order(const charlab_group* g) {
  if (!g) return 0;
  try {
    return g->input.group.order();
  } catch (const Error&) {
    return 0;
  }
}

const char* charlab_group_id(const charlab_group* g) {
  return g ? g->input.id.c_str() : "";
}

charlab_status charlab_analyze(const charlab_group* g, unsigned p, const charlab_options* opt,
                               charlab_report** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return CHARLAB_ERR_INPUT;
  }
  return guarded([&] {
    *out = new charlab_report{analyze_group(g->input, p, make_options(opt))};
  });
}

charlab_status charlab_check(const charlab_group* g, unsigned p, const char* checkers,
                             const char* scope, const charlab_options* opt,
                             charlab_report** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return CHARLAB_ERR_INPUT;
  }
  return guarded([&] {
    CheckerSelection sel =
        CheckerSelection::parse(checkers ? checkers : "", scope && *scope ? scope : "b0");
    *out = new charlab_report{check_group(g->input, p, sel, make_options(opt))};
  });
}

charlab_status charlab_sweep(const char* manifest_path, const char* primes_csv, unsigned jobs,
                             const charlab_options* opt, charlab_report** out) {
  if (!manifest_path || !out) {
    g_last_error = "null argument";
    return CHARLAB_ERR_INPUT;
  }
  return guarded([&] {
    std::vector<ManifestEntry> entries = load_manifest(manifest_path);
    std::vector<u64> primes = parse_primes(primes_csv ? primes_csv : "2,3,5");
    *out = new charlab_report{sweep_corpus(entries, primes, jobs ? jobs : 1, make_options(opt))};
  });
}

int charlab_report_any_failed(const charlab_report* r) {
  if (!r) return 0;
  if (const auto* g = std::get_if<GroupReport>(&r->data)) return g->any_failed() ? 1 : 0;
  return std::get<SweepReport>(r->data).any_failed() ? 1 : 0;
}

int charlab_report_any_error(const charlab_report* r) {
  if (!r) return 0;
  if (const auto* s = std::get_if<SweepReport>(&r->data)) return s->errors.empty() ? 0 : 1;
  return 0;
}

charlab_status charlab_report_render(const charlab_report* r, const char* format, char** out) {
  if (!r || !out) {
    g_last_error = "null argument";
    return CHARLAB_ERR_INPUT;
  }
  return guarded([&] {
    std::string fmt = format && *format ? format : "json";
    std::string rendered;
    if (const auto* g = std::get_if<GroupReport>(&r->data))
      rendered = render_group_report(*g, fmt);
    else
      rendered = render_sweep_report(std::get<SweepReport>(r->data), fmt);
    char* buf = new char[rendered.size() + 1];
    std::memcpy(buf, rendered.c_str(), rendered.size() + 1);
    *out = buf;
  });
}

void charlab_string_free(char* s) { delete[] s; }

void charlab_report_free(charlab_report* r) { delete r; }

}  // extern "C"
