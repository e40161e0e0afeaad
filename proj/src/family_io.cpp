#include "xsperner/family_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace xsperner {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, int line, std::string_view what) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected " + std::string(what) + ", got '" + std::string(token) + "'");
  }
  return value;
}

Mask parse_set(std::string_view text, int n, int line) {
  if (text == "{}") return 0;
  Mask bits = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto next = text.find_first_of(" \t", pos);
    const auto token = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    if (!token.empty()) {
      const int e = parse_int(token, line, "an element label");
      if (e < 1 || e > n) {
        throw ParseError(line, "element " + std::to_string(e) + " out of range 1.." + std::to_string(n));
      }
      bits |= Mask{1} << (e - 1);
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return bits;
}

}  // namespace

FamilyPair parse_family_text(std::string_view text) {
  std::optional<GroundSet> ground;
  std::vector<Mask> families[2];
  int current = 0;
  bool separator_seen = false;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!ground) {
      if (line.substr(0, 2) != "n=") throw ParseError(line_no, "expected header 'n=<integer>'");
      const int n = parse_int(trim(line.substr(2)), line_no, "an integer after 'n='");
      try {
        ground = GroundSet(n);
      } catch (const UsageError& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    if (line == "---") {
      if (separator_seen) throw ParseError(line_no, "more than one '---' separator");
      separator_seen = true;
      current = 1;
      continue;
    }
    const Mask bits = parse_set(line, ground->size(), line_no);
    auto& fam = families[current];
    for (Mask m : fam) {
      if (m == bits) {
        throw ParseError(line_no, "duplicate set " + format_set(bits) + " in family " + (current == 0 ? "F" : "G"));
      }
    }
    fam.push_back(bits);
  }

  if (!ground) throw ParseError(line_no, "missing header 'n=<integer>'");
  if (!separator_seen) throw ParseError(line_no, "missing '---' separator between F and G");
  return FamilyPair(Family(*ground, std::move(families[0])), Family(*ground, std::move(families[1])));
}

FamilyPair parse_family_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family_text(buffer.str());
}

std::string format_family_file(const FamilyPair& pair) {
  std::string out = "n=" + std::to_string(pair.ground().size()) + "\n";
  auto emit = [&out](const Family& fam) {
    for (Mask m : fam) {
      if (m == 0) {
        out += "{}\n";
        continue;
      }
      bool first = true;
      for (int e : mask_elements(m)) {
        if (!first) out += ' ';
        out += std::to_string(e);
        first = false;
      }
      out += '\n';
    }
  };
  emit(pair.f());
  out += "---\n";
  emit(pair.g());
  return out;
}

}  // namespace xsperner
