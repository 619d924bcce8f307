#include "kfock/rational.hpp"

#include <cctype>

#include "kfock/errors.hpp"

namespace kfock {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw InvalidArgument("not an exact rational \"p/q\": '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer p(n, 10);
  Integer q{std::string(den), 10};
  if (q == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational frac(long p, long q) {
  if (q == 0) throw DomainError("zero denominator");
  Rational r{Integer(p), Integer(q)};
  r.canonicalize();
  return r;
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Rational power(const Rational& r, unsigned e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), e);
  return Rational(n, d);
}

}  // namespace kfock
