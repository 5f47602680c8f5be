#include "symstab/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace symstab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Rational parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string exp_text(body.substr(e + 1));
    std::size_t used = 0;
    exponent = std::stol(exp_text, &used);
    if (used != exp_text.size()) throw std::invalid_argument("bad exponent");
    body = body.substr(0, e);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (!(ip.empty() || all_digits(ip)) || !(fp.empty() || all_digits(fp)) ||
        (ip.empty() && fp.empty()))
      throw std::invalid_argument("bad decimal");
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(body)) throw std::invalid_argument("bad number");
    digits = std::string(body);
  }
  Rational value{Integer(digits)};
  long shift = exponent - frac_digits;
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0)
    value *= ten_pow;
  else
    value /= ten_pow;
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      std::string_view num = text.substr(0, slash), den = text.substr(slash + 1);
      std::string_view num_digits = num;
      if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+'))
        num_digits.remove_prefix(1);
      if (!all_digits(num_digits) || !all_digits(den))
        throw std::invalid_argument("bad fraction");
      Integer d{std::string(den)};
      if (d == 0) throw std::invalid_argument("zero denominator");
      std::string n(num);
      if (!n.empty() && n[0] == '+') n.erase(0, 1);
      Rational q{Integer(n), d};
      q.canonicalize();
      return q;
    }
    return parse_decimal(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result{Integer()};
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Stern-Brocot descent; handles negative intervals by reflection.
Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_between: empty interval");
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // lo and hi share integer part fl; recurse on reciprocals of fractional parts.
  Rational a = lo - fl, b = hi - fl;
  Rational inner = simplest_between(1 / b, 1 / a);
  return Rational(fl) + 1 / inner;
}

Rational best_approximation(double value, long max_den) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  Rational best(static_cast<long>(std::llround(value)));
  double best_err = std::fabs(value - best.get_d());
  for (long q = 1; q <= max_den; ++q) {
    long p = std::lround(value * static_cast<double>(q));
    double err = std::fabs(value - static_cast<double>(p) / static_cast<double>(q));
    if (err < best_err - 1e-18) {
      best = ratio(p, q);
      best.canonicalize();
      best_err = err;
    }
  }
  return best;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return q;
}

}  // namespace symstab
