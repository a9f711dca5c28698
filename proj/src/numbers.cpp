#include "gh/numbers.hpp"

#include <cctype>

namespace gh {

Rat parse_rat(const std::string& text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  if (b == e) throw ParseError(b, "empty rational");
  std::size_t i = b;
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t num_start = i;
  while (i < e && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) throw ParseError(i, "expected digits");
  Int num(text.substr(b, i - b));
  Int den = 1;
  if (i < e) {
    if (text[i] != '/') throw ParseError(i, "expected '/' or end of rational");
    ++i;
    std::size_t den_start = i;
    while (i < e && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start) throw ParseError(i, "expected denominator digits");
    if (i != e) throw ParseError(i, "trailing characters after rational");
    den = Int(text.substr(den_start, i - den_start));
    if (den == 0) throw ParseError(den_start, "zero denominator");
  }
  if (i != e) throw ParseError(i, "trailing characters after rational");
  return Rat(num, den);
}

std::string format_rat(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace gh
