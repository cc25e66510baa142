#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charlab {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kReportSchema = "charlab-report/1";
inline constexpr const char* kTableSchema = "charlab-table/1";

// Scan-based group operations refuse to enumerate beyond this many elements.
inline constexpr std::uint64_t kDefaultEnumerationBound = 100000;

enum class ErrKind { Input, Domain, Capacity, Internal };

struct Error : std::runtime_error {
  ErrKind kind;
  Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail_input(const std::string& m) { throw Error(ErrKind::Input, m); }
[[noreturn]] inline void fail_domain(const std::string& m) { throw Error(ErrKind::Domain, m); }
[[noreturn]] inline void fail_capacity(const std::string& m) { throw Error(ErrKind::Capacity, m); }
[[noreturn]] inline void fail_internal(const std::string& m) { throw Error(ErrKind::Internal, m); }

inline void check(bool cond, ErrKind k, const std::string& m) {
  if (!cond) throw Error(k, m);
}

}  // namespace charlab
