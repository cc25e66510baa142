#include "cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sha256.hpp"

namespace charlab {

std::string serialize_table(const CharacterTable& t) {
  std::ostringstream os;
  os << kTableSchema << "\n";
  os << "version " << kVersion << "\n";
  os << "degree " << t.group.degree() << "\n";
  os << "classes " << t.num_classes() << "\n";
  os << "exponent " << t.exponent << "\n";
  for (int c = 0; c < t.num_classes(); ++c)
    os << "class " << t.classes.sizes[c] << " " << t.classes.reps[c].cycles() << "\n";
  os << "degrees";
  for (u64 d : t.degrees) os << " " << d;
  os << "\n";
  for (int r = 0; r < t.num_chars(); ++r) {
    os << "row";
    for (const CycNum& v : t.irr[r]) os << " " << v.encode();
    os << "\n";
  }
  return os.str();
}

CharacterTable deserialize_table(const std::string& data, const PermGroup& g, u64 bound) {
  std::istringstream is(data);
  std::string line;
  auto next = [&]() {
    check((bool)std::getline(is, line), ErrKind::Input, "table cache: truncated");
    return line;
  };
  check(next() == kTableSchema, ErrKind::Input, "table cache: wrong schema");
  check(next() == std::string("version ") + kVersion, ErrKind::Input,
        "table cache: stale engine version");

  CharacterTable t;
  t.group = g;
  t.classes = conjugacy_classes(g, bound);

  std::istringstream hs(next());
  std::string word;
  long degree = 0;
  hs >> word >> degree;
  check(word == "degree" && degree == g.degree(), ErrKind::Input, "table cache: degree mismatch");
  std::istringstream ks(next());
  long k = 0;
  ks >> word >> k;
  check(word == "classes" && k == t.num_classes(), ErrKind::Input,
        "table cache: class count mismatch");
  std::istringstream es(next());
  u64 expo = 0;
  es >> word >> expo;
  check(word == "exponent", ErrKind::Input, "table cache: bad exponent line");
  t.exponent = expo;

  for (long c = 0; c < k; ++c) {
    std::istringstream cs(next());
    u64 size = 0;
    std::string cycles;
    cs >> word >> size;
    std::getline(cs, cycles);
    std::size_t a = cycles.find_first_not_of(' ');
    check(word == "class" && a != std::string::npos, ErrKind::Input,
          "table cache: bad class line");
    cycles = cycles.substr(a);
    check(size == t.classes.sizes[c] && cycles == t.classes.reps[c].cycles(), ErrKind::Input,
          "table cache: class data mismatch");
  }
  {
    std::istringstream ds(next());
    ds >> word;
    check(word == "degrees", ErrKind::Input, "table cache: bad degrees line");
    u64 d;
    while (ds >> d) t.degrees.push_back(d);
    check((long)t.degrees.size() == k, ErrKind::Input, "table cache: degree count mismatch");
  }
  for (long r = 0; r < k; ++r) {
    std::istringstream rs(next());
    rs >> word;
    check(word == "row", ErrKind::Input, "table cache: bad row line");
    std::vector<CycNum> values;
    std::string enc;
    while (rs >> enc) values.push_back(CycNum::decode(enc));
    check((long)values.size() == k, ErrKind::Input, "table cache: row length mismatch");
    t.irr.push_back(std::move(values));
  }
  for (long r = 0; r < k; ++r)
    check(t.irr[r][0] == CycNum((long)t.degrees[r]), ErrKind::Input,
          "table cache: degree/value mismatch");
  return t;
}

std::string cache_key(const std::string& group_content) {
  return sha256_hex(std::string(kVersion) + "\n" + group_content);
}

std::optional<CharacterTable> cache_load(const std::string& dir, const std::string& key,
                                         const PermGroup& g, u64 bound) {
  if (dir.empty()) return std::nullopt;
  std::filesystem::path file = std::filesystem::path(dir) / (key + ".tbl");
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return deserialize_table(buffer.str(), g, bound);
  } catch (const Error& e) {
    std::cerr << "charlab: evicting corrupt cache entry " << file.string() << " ("
              << e.what() << ")\n";
    std::error_code ec;
    std::filesystem::remove(file, ec);
    return std::nullopt;
  }
}

void cache_store(const std::string& dir, const std::string& key, const CharacterTable& t) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::filesystem::path file = std::filesystem::path(dir) / (key + ".tbl");
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // cache is best-effort
    out << serialize_table(t);
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::string resolve_cache_dir(const std::string& configured) {
  const char* env = std::getenv("CHARLAB_CACHE");
  if (env && *env) return env;
  return configured;
}

}  // namespace charlab
