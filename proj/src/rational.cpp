#include "starlike/rational.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>

namespace starlike {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(const std::string& text) {
  throw std::invalid_argument("not a rational: '" + text + "'");
}

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
    if (!all_digits(num.substr(1))) bad(text);
    if (num[0] == '+') num.erase(0, 1);
  } else if (!all_digits(num)) {
    bad(text);
  }
  if (!all_digits(den)) bad(text);
  // explicit base 10: the string constructor would treat a leading 0 as octal
  BigInt d(den, 10);
  if (d == 0) bad(text);
  Rational q(BigInt(num, 10), d);
  q.canonicalize();
  return q;
}

// mantissa.frac [eE] exp, all exact: m * 10^(exp - #frac)
Rational parse_decimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    seen_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      ++scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) bad(text);
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i == text.size()) bad(text);
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1000000) bad(text);  // keeps 10^exponent sane
      ++i;
    }
    exponent = exp_negative ? -value : value;
  }
  if (i != text.size()) bad(text);

  BigInt mantissa(digits.empty() ? "0" : digits, 10);
  if (negative) mantissa = -mantissa;
  long power = exponent - scale;
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(power < 0 ? -power : power));
  Rational q = power < 0 ? Rational(mantissa, ten_pow) : Rational(mantissa * ten_pow);
  q.canonicalize();
  return q;
}

}  // namespace

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) bad(text);
  if (text.find('/') != std::string::npos) return parse_fraction(text);
  return parse_decimal(text);
}

Rational dyadic(long value, unsigned bits) {
  BigInt den = 1;
  den <<= bits;
  Rational q(BigInt(value), den);
  q.canonicalize();
  return q;
}

std::string decimal_string(const Rational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt num = abs(value.get_num()) * ten_pow;
  const BigInt& den = value.get_den();
  // round half away from zero: floor((2a + b) / 2b) for a, b > 0
  BigInt scaled = (2 * num + den) / (2 * den);
  BigInt whole = scaled / ten_pow;
  BigInt frac = scaled % ten_pow;
  std::string out;
  if (sgn(value) < 0 && scaled != 0) out += '-';
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

}  // namespace starlike
