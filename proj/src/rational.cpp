#include "symconn/rational.hpp"

#include <cctype>
#include <sstream>

namespace symconn {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6)
      throw DomainError("malformed rational '" + std::string(text) + "'");
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw DomainError("malformed rational '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw DomainError("malformed rational '" + std::string(text) + "'");
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational result = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+'))
      num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den))
      throw DomainError("malformed rational '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    mpz_class n(std::string(num_digits), 10);
    if (!num.empty() && num.front() == '-') n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

Rational ratio(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale;
  // round half up on the magnitude
  mpz_class num = scaled.get_num() * 2 + scaled.get_den();
  mpz_class den = scaled.get_den() * 2;
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<size_t>(digits))
      body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<size_t>(digits), ".");
  }
  bool is_zero = rounded == 0;
  return (q < 0 && !is_zero ? "-" : "") + body;
}

int sign(const Rational& q) { return sgn(q); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational power(const Rational& base, unsigned exponent) {
  Rational result(1);
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

Rational ten_to_minus(unsigned k) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
  return Rational(mpz_class(1), scale);
}

std::vector<double> to_doubles(std::span<const Rational> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_d());
  return out;
}

std::string to_string(std::span<const Rational> values) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    os << values[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace symconn
