#ifndef STRUCTDET_BIGINT_HPP
#define STRUCTDET_BIGINT_HPP

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace structdet {

using BigInt = mpz_class;
using Rational = mpq_class;

// Raised when an operation's precondition on its arguments is violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

// Reduced fraction "p/q", or just "p" when the denominator is one.
inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

// Parses an optionally signed decimal integer. No whitespace, no leading '+'
// without digits. Throws std::invalid_argument on anything else.
inline BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

}  // namespace structdet

#endif  // STRUCTDET_BIGINT_HPP
