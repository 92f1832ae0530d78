#ifndef STRUCTDET_BFILE_HPP
#define STRUCTDET_BFILE_HPP

#include <structdet/bigint.hpp>

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>

namespace structdet {

class BFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*
 * OEIS b-file: lines starting with '#' are comments, every other non-empty
 * line is "<n> <value>" with a single space, n >= 1 and decimal values.
 * Returns the values keyed by n. Duplicated indices are rejected.
 */
inline std::map<std::size_t, BigInt> parse_bfile(std::istream& in) {
  std::map<std::size_t, BigInt> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      return BFileError("b-file line " + std::to_string(line_no) + ": " + why);
    };
    const auto space = line.find(' ');
    if (space == std::string::npos) throw fail("expected '<n> <value>'");
    BigInt index;
    BigInt value;
    try {
      index = parse_bigint(std::string_view(line).substr(0, space));
      value = parse_bigint(std::string_view(line).substr(space + 1));
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    if (index < 1 || !index.fits_ulong_p()) throw fail("index must be a positive integer");
    const auto n = static_cast<std::size_t>(index.get_ui());
    if (!values.emplace(n, value).second) throw fail("duplicate index " + std::to_string(n));
  }
  return values;
}

inline std::map<std::size_t, BigInt> read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BFileError("cannot open b-file '" + path + "'");
  return parse_bfile(in);
}

}  // namespace structdet

#endif  // STRUCTDET_BFILE_HPP
