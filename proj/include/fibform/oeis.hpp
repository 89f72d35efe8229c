#pragma once

/**
 * @file oeis.hpp
 * @brief OEIS b-files and offline prefix search.
 *
 * A b-file is plain text with one "n a(n)" pair per line; blank lines and
 * lines starting with '#' are ignored. Indices must be consecutive. A
 * fixture directory holds one b-file per sequence, named bNNNNNN.txt as on
 * oeis.org, plus index.txt listing "A-number offset" pairs.
 */

#include "fibform/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibform::oeis {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_a_number(std::string_view s) {
  return s.size() == 7 && s[0] == 'A' &&
         std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

struct OeisEntry {
  std::string a_number;
  std::int64_t offset = 0;
  std::vector<Int> terms;

  friend bool operator==(const OeisEntry&, const OeisEntry&) = default;
};

struct OeisHit {
  OeisEntry entry;
  std::size_t match_start = 0;
};

inline void validate(const OeisEntry& e) {
  if (!is_a_number(e.a_number)) throw FormatError("malformed A-number: '" + e.a_number + "'");
  if (e.terms.empty()) throw FormatError(e.a_number + ": no terms");
}

namespace detail {

inline std::optional<Int> parse_int(std::string_view tok) {
  std::size_t i = (!tok.empty() && tok[0] == '-') ? 1 : 0;
  if (i == tok.size()) return std::nullopt;
  for (std::size_t j = i; j < tok.size(); ++j)
    if (tok[j] < '0' || tok[j] > '9') return std::nullopt;
  const Int v = from_decimal(tok.substr(i));
  return i == 1 ? Int(-v) : v;
}

}  // namespace detail

inline OeisEntry parse_bfile(std::istream& in, const std::string& a_number) {
  OeisEntry e{a_number, 0, {}};
  std::string line;
  std::size_t line_no = 0;
  std::optional<Int> expected;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string n_tok, v_tok, extra;
    fields >> n_tok >> v_tok;
    const auto n = detail::parse_int(n_tok);
    const auto v = detail::parse_int(v_tok);
    if (!n || !v || (fields >> extra))
      throw FormatError(a_number + " line " + std::to_string(line_no) + ": expected \"n a(n)\"");
    if (!expected) {
      e.offset = static_cast<std::int64_t>(*n);
    } else if (*n != *expected) {
      throw FormatError(a_number + " line " + std::to_string(line_no) + ": index " + n->str() +
                        " breaks the consecutive run");
    }
    expected = *n + 1;
    e.terms.push_back(*v);
  }
  validate(e);
  return e;
}

inline OeisEntry parse_bfile(const std::string& text, const std::string& a_number) {
  std::istringstream in(text);
  return parse_bfile(in, a_number);
}

/// Header lines are written as "# <line>".
inline std::string serialize_bfile(const OeisEntry& e, const std::vector<std::string>& header = {}) {
  std::ostringstream os;
  for (const std::string& h : header) os << "# " << h << "\n";
  for (std::size_t i = 0; i < e.terms.size(); ++i)
    os << (e.offset + static_cast<std::int64_t>(i)) << " " << e.terms[i].str() << "\n";
  return os.str();
}

inline std::string bfile_name(const std::string& a_number) { return "b" + a_number.substr(1) + ".txt"; }

using FixtureSet = std::vector<OeisEntry>;  // sorted by A-number

inline FixtureSet load_fixtures(const std::filesystem::path& dir) {
  std::ifstream index(dir / "index.txt");
  if (!index) throw FormatError("cannot open fixture index " + (dir / "index.txt").string());
  FixtureSet set;
  std::string line;
  while (std::getline(index, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a_number;
    std::int64_t offset = 0;
    if (!(fields >> a_number >> offset) || !is_a_number(a_number))
      throw FormatError("bad index line: '" + line + "'");
    std::ifstream b(dir / bfile_name(a_number));
    if (!b) throw FormatError("missing b-file for " + a_number);
    OeisEntry e = parse_bfile(b, a_number);
    if (e.offset != offset)
      throw FormatError(a_number + ": index offset " + std::to_string(offset) + " but b-file starts at " +
                        std::to_string(e.offset));
    set.push_back(std::move(e));
  }
  std::sort(set.begin(), set.end(), [](const OeisEntry& a, const OeisEntry& b) { return a.a_number < b.a_number; });
  return set;
}

inline constexpr std::size_t min_prefix_length = 4;

// Position of the first contiguous occurrence of prefix in terms.
inline std::optional<std::size_t> find_run(const std::vector<Int>& terms, const std::vector<Int>& prefix) {
  const auto it = std::search(terms.begin(), terms.end(), prefix.begin(), prefix.end());
  if (it == terms.end()) return std::nullopt;
  return static_cast<std::size_t>(it - terms.begin());
}

inline void check_prefix(const std::vector<Int>& prefix) {
  if (prefix.size() < min_prefix_length)
    throw UsageError("prefix needs at least " + std::to_string(min_prefix_length) + " terms");
}

inline std::vector<OeisHit> search_local(const std::vector<Int>& prefix, const FixtureSet& fixtures) {
  check_prefix(prefix);
  std::vector<OeisHit> hits;
  for (const OeisEntry& e : fixtures)
    if (const auto at = find_run(e.terms, prefix)) hits.push_back({e, *at});
  return hits;
}

}  // namespace fibform::oeis
