#include "transdom/rational.hpp"

#include "transdom/error.hpp"

#include <cctype>
#include <vector>

namespace transdom {

namespace {

bool all_digits(std::string_view s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  const std::string original(text);
  auto fail = [&] { throw Error(ErrorCode::ParseError, "not a decimal literal: '" + original + "'"); };
  if (text.empty()) fail();

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (exp_part.empty() || exp_part.size() > 6 || !all_digits(exp_part)) fail();
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) fail();
  if (!all_digits(int_part) || !all_digits(frac_part)) fail();

  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt numerator(digits.empty() ? "0" : digits, 10);
  exponent -= static_cast<long>(frac_part.size());

  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational value = exponent < 0 ? Rational(numerator, scale) : Rational(numerator * scale);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    Rational r(BigInt(std::string(text.substr(0, slash))), BigInt(std::string(text.substr(slash + 1))));
    if (r.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a fraction: '" + std::string(text) + "'");
  }
}

BigInt binomial_pascal(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

BigInt binomial_multiplicative(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // result * (n - k + i) is always divisible by i at step i
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace transdom
