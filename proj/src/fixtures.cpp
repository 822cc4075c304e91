#include "cmdiv/fixtures.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cmdiv/errors.hpp"

namespace cmdiv {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::int64_t parse_int(std::string_view s, const std::string& where) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput(where + ": expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

bool is_structure_code(std::string_view s) {
  if (s == "S3" || s == "D4" || s == "D4xC2" || s == "nonabelian") return true;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') return false;
  return s.find_first_not_of("0123456789,", 1) == s.size() - 1;
}

}  // namespace

std::vector<FixtureRecord> parse_fixtures(std::string_view text) {
  std::vector<FixtureRecord> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const std::string where = "fixture line " + std::to_string(line_no);
    const auto f = split_tabs(line);
    if (f.size() != 7) {
      throw InvalidInput(where + ": expected 7 tab-separated fields, got " + std::to_string(f.size()));
    }
    const std::int64_t coef = parse_int(f[2], where);
    CurveInput curve = [&] {
      if (f[1] == "jzero") return CurveInput::jzero(coef);
      if (f[1] == "j1728") return CurveInput::j1728(coef);
      if (f[1] == "general") return CurveInput::general(coef, parse_int(f[3], where));
      throw InvalidInput(where + ": unknown variant '" + std::string(f[1]) + "'");
    }();
    if (!is_structure_code(f[5])) throw InvalidInput(where + ": bad structure '" + std::string(f[5]) + "'");
    if (f[6] != "true" && f[6] != "false") throw InvalidInput(where + ": cyclotomic must be true or false");
    out.push_back(FixtureRecord{std::string(f[0]), curve, parse_int(f[4], where), std::string(f[5]),
                                f[6] == "true"});
  }
  return out;
}

std::vector<FixtureRecord> load_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open fixture file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixtures(buf.str());
}

std::vector<FixtureRecord> builtin_fixtures() { return parse_fixtures(builtin_fixture_text()); }

}  // namespace cmdiv
