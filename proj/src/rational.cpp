#include "braidnorm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace braidnorm {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("malformed rational '" + text + "'");
  bool seen_slash = false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] == '/' && !seen_slash && j > i && j + 1 < text.size()) {
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("malformed rational '" + text + "'");
  }
  mpq_class q;
  // GMP rejects an explicit leading plus.
  const std::string body = text[0] == '+' ? text.substr(1) : text;
  if (q.set_str(body, 10) != 0)
    throw std::invalid_argument("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace braidnorm
