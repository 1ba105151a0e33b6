#include "cakecut/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cakecut {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not an exact rational: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    BigInt d(std::string(den), 10);
    if (d == 0) bad(text);
    result = Rational(BigInt(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) bad(text);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    result = Rational(num, scale);
  } else {
    if (!all_digits(body)) bad(text);
    result = Rational(BigInt(std::string(body), 10));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
  // Fixed-point rendering from exact integer arithmetic, rounded half away from zero.
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(value) * scale + Rational(1, 2);
  BigInt units = floor(scaled);
  BigInt whole = units / scale;
  BigInt frac = units % scale;
  std::string frac_str = frac.get_str();
  frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
  std::ostringstream out;
  if (sgn(value) < 0 && units != 0) out << '-';
  out << whole.get_str();
  if (digits > 0) out << '.' << frac_str;
  return out.str();
}

BigInt floor(const Rational& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

}  // namespace cakecut
