#include "acb/rational.hpp"

#include <cctype>
#include <cstdio>

namespace acb {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text)) {
      throw InputError("not a rational: '" + text + "'");
    }
    return Rat(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    throw InputError("not a rational: '" + text + "'");
  }
  Int d(den);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  return Rat(Int(num), d);
}

std::string rat_str(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string rat_decimal(const Rat& r, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, rat_double(r));
  return buf;
}

double rat_double(const Rat& r) { return r.convert_to<double>(); }

Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

}  // namespace acb
