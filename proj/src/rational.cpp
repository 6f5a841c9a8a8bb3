#include "gapcert/rational.hpp"

#include <cmath>
#include <sstream>

namespace gapcert {

namespace {

bool is_signed_digits(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_int(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_signed_digits(num)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    std::string_view d = text.substr(slash + 1);
    if (!is_digits(d)) {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
    den = parse_int(d);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(parse_int(num), den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = abs(q.get_num()) * scale;
  mpz_class scaled;
  mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) {
    s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
  }
  std::string out = s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  if (q < 0) out.insert(0, "-");
  return out;
}

std::string to_scientific(const Rational& q, int sig) {
  mpf_class f(q, 256);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, static_cast<std::size_t>(sig));
  if (digits.empty() || digits == "0") return "0";
  bool neg = digits[0] == '-';
  if (neg) digits.erase(0, 1);
  digits.resize(static_cast<std::size_t>(sig), '0');
  std::ostringstream os;
  if (neg) os << '-';
  os << digits[0];
  if (sig > 1) os << '.' << digits.substr(1);
  os << 'e' << (exp - 1);
  return os.str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational pow10(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

Rational pow_int(const Rational& base, int exponent) {
  Rational result = 1;
  Rational b = exponent < 0 ? Rational(1 / base) : base;
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; --e) result *= b;
  return result;
}

Rational floor_dyadic(const Rational& q, unsigned bits) {
  mpz_class num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rational r(fl, den);
  r.canonicalize();
  return r;
}

Rational ceil_dyadic(const Rational& q, unsigned bits) {
  mpz_class num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  mpz_class cl;
  mpz_cdiv_q(cl.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rational r(cl, den);
  r.canonicalize();
  return r;
}

std::size_t denominator_bits(const Rational& q) {
  return mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

Rational snap(double x, std::int64_t denominator) {
  double scaled = std::floor(x * static_cast<double>(denominator) + 0.5);
  Rational r(mpz_class(static_cast<long>(scaled)), mpz_class(static_cast<long>(denominator)));
  r.canonicalize();
  return r;
}

Rational from_double(double x) {
  Rational r(x);
  r.canonicalize();
  return r;
}

}  // namespace gapcert
