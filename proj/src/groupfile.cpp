#include "groupfile.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace charlab {

namespace {

struct BuiltinParser {
  const std::string& text;
  std::size_t pos = 0;

  explicit BuiltinParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail_input(std::string("builtin spec: expected '") + c + "' in: " + text);
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
      ++pos;
    if (start == pos) fail_input("builtin spec: expected a name in: " + text);
    return text.substr(start, pos - start);
  }
  long number() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (start == pos) fail_input("builtin spec: expected a number in: " + text);
    return std::stol(text.substr(start, pos - start));
  }

  std::vector<int> row() {
    expect('[');
    std::vector<int> out;
    if (!eat(']')) {
      do {
        out.push_back((int)number());
      } while (eat(','));
      expect(']');
    }
    return out;
  }

  std::vector<std::vector<int>> matrix() {
    expect('[');
    std::vector<std::vector<int>> rows;
    if (!eat(']')) {
      do {
        rows.push_back(row());
      } while (eat(','));
      expect(']');
    }
    return rows;
  }

  PermGroup spec() {
    std::string name = ident();
    expect('(');
    PermGroup result;
    if (name == "cyclic" || name == "dihedral" || name == "symmetric" ||
        name == "alternating") {
      long n = number();
      if (name == "cyclic")
        result = cyclic_group((int)n);
      else if (name == "dihedral")
        result = dihedral_group((int)n);
      else if (name == "symmetric")
        result = symmetric_group((int)n);
      else
        result = alternating_group((int)n);
    } else if (name == "direct_product") {
      PermGroup a = spec();
      expect(',');
      PermGroup b = spec();
      result = direct_product(a, b);
    } else if (name == "semidirect") {
      long p = number();
      expect('^');
      long k = number();
      expect(',');
      PermGroup acting = spec();
      expect(',');
      expect('[');
      std::vector<std::vector<int>> matrices;
      if (!eat(']')) {
        do {
          std::vector<std::vector<int>> m = matrix();
          check((long)m.size() == k, ErrKind::Input, "semidirect: matrix must have k rows");
          std::vector<int> flat;
          for (auto& r : m) {
            check((long)r.size() == k, ErrKind::Input, "semidirect: matrix must have k columns");
            for (int v : r) flat.push_back(v);
          }
          matrices.push_back(std::move(flat));
        } while (eat(','));
        expect(']');
      }
      result = semidirect_elementary((u64)p, (int)k, acting, matrices);
    } else {
      fail_input("builtin spec: unknown constructor '" + name + "'");
    }
    expect(')');
    return result;
  }
};

std::vector<std::string> logical_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t a = line.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t");
    lines.push_back(line.substr(a, b - a + 1));
  }
  return lines;
}

}  // namespace

PermGroup parse_builtin(const std::string& spec) {
  BuiltinParser parser(spec);
  PermGroup g = parser.spec();
  parser.skip_ws();
  check(parser.pos == spec.size(), ErrKind::Input, "builtin spec: trailing input in: " + spec);
  return g;
}

GroupInput parse_group_text(const std::string& text, const std::string& id) {
  GroupInput gi;
  gi.id = id;
  gi.content = text;
  std::vector<std::string> lines = logical_lines(text);
  check(!lines.empty(), ErrKind::Input, "group file is empty");

  const std::string& head = lines[0];
  if (head.rfind("builtin:", 0) == 0) {
    check(lines.size() == 1, ErrKind::Input, "builtin group file must be a single line");
    gi.group = parse_builtin(head.substr(8));
    return gi;
  }
  std::istringstream hs(head);
  std::string kind;
  hs >> kind;
  if (kind == "degree") {
    long deg = 0;
    hs >> deg;
    check(deg >= 1 && !hs.fail(), ErrKind::Input, "bad degree header");
    std::vector<Perm> gens;
    for (std::size_t i = 1; i < lines.size(); ++i)
      gens.push_back(Perm::parse_cycles(lines[i], (int)deg));
    gi.group = PermGroup::from_generators((int)deg, std::move(gens));
    return gi;
  }
  if (kind == "cayley") {
    long n = 0;
    hs >> n;
    check(n >= 1 && !hs.fail(), ErrKind::Input, "bad cayley header");
    check((long)lines.size() == n + 1, ErrKind::Input, "cayley table must have n rows");
    std::vector<std::vector<int>> table;
    for (long i = 1; i <= n; ++i) {
      std::istringstream rs(lines[(std::size_t)i]);
      std::vector<int> row;
      int v;
      while (rs >> v) row.push_back(v);
      check((long)row.size() == n, ErrKind::Input, "cayley row length mismatch");
      table.push_back(std::move(row));
    }
    gi.group = cayley_table_group(table);
    return gi;
  }
  fail_input("unknown group file header: " + head);
}

GroupInput load_group_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  check((bool)in, ErrKind::Input, "cannot open group file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string id = std::filesystem::path(path).stem().string();
  return parse_group_text(buffer.str(), id);
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  check((bool)in, ErrKind::Input, "cannot open corpus manifest: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail_input(std::string("manifest is not valid JSON: ") + e.what());
  }
  check(doc.is_object() && doc.contains("corpus") && doc["corpus"].is_array(), ErrKind::Input,
        "manifest must be an object with a 'corpus' array");
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<ManifestEntry> entries;
  std::set<std::string> ids;
  for (const auto& item : doc["corpus"]) {
    check(item.is_object() && item.contains("id") && item.contains("path"), ErrKind::Input,
          "manifest entries need 'id' and 'path'");
    ManifestEntry e;
    e.id = item["id"].get<std::string>();
    check(ids.insert(e.id).second, ErrKind::Input, "duplicate corpus id: " + e.id);
    std::filesystem::path p = item["path"].get<std::string>();
    e.path = (p.is_absolute() ? p : base / p).string();
    if (item.contains("expected")) {
      const auto& exp = item["expected"];
      if (exp.contains("order")) e.expected_order = exp["order"].get<u64>();
      if (exp.contains("classes")) e.expected_classes = exp["classes"].get<int>();
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace charlab
