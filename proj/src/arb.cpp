#include "bell/arb.hpp"

#include <cmath>
#include <stdexcept>

namespace bell {

double log_abs(const ArbInt& x) {
  if (mpz_sgn(x.get_mpz_t()) == 0) throw std::domain_error("log_abs: zero argument");
  signed long exp2 = 0;
  const double mant = std::fabs(mpz_get_d_2exp(&exp2, x.get_mpz_t()));
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double log_abs(const ArbRat& x) {
  return log_abs(ArbInt(x.get_num())) - log_abs(ArbInt(x.get_den()));
}

std::string to_string(const ArbRat& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

ArbInt factorial(unsigned n) {
  ArbInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ArbInt binomial(unsigned n, unsigned k) {
  ArbInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ArbInt parse_int(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("bad integer literal: " + text);
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer literal: " + text);
  }
  ArbInt r;
  r.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return r;
}

}  // namespace bell
