#include "qsymm/exact_scalar.hpp"

#include <stdexcept>
#include <string>

namespace qsymm {

ExactScalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("empty rational literal");
  s = s.substr(b, e - b + 1);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  ExactScalar r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const ExactScalar& x) { return x.get_str(10); }

ExactScalar scalar_pow(const ExactScalar& x, long e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("negative power of zero");
    ExactScalar inv = 1 / x;
    return scalar_pow(inv, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  ExactScalar r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace qsymm
