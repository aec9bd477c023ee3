#include "weil/polynomial.hpp"

#include <sstream>

namespace weil {

Poly Poly::monomial(int degree, Rat coeff) {
  Poly p;
  p.set(degree, std::move(coeff));
  return p;
}

void Poly::set(int degree, Rat c) {
  if (c == 0)
    coeffs_.erase(degree);
  else
    coeffs_[degree] = std::move(c);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, coefficient(e) + c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, coefficient(e) - c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.set(e1 + e2, r.coefficient(e1 + e2) + c1 * c2);
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [e, v] : coeffs_) r.coeffs_[e] = v * c;
  return r;
}

Poly Poly::operator/(const Rat& c) const {
  if (c == 0) throw std::invalid_argument("poly: division by zero");
  return *this * (Rat(1) / c);
}

bool Poly::operator<(const Poly& o) const {
  auto a = coeffs_.rbegin(), b = o.coeffs_.rbegin();
  for (; a != coeffs_.rend() && b != o.coeffs_.rend(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == coeffs_.rend() && b != o.coeffs_.rend();
}

Rat Poly::eval(const Int& x) const { return eval(Rat(x)); }

Rat Poly::eval(const Rat& x) const {
  // Horner over the dense range is wasteful for sparse maps; evaluate by
  // explicit powers instead. Exponents may be negative.
  Rat total = 0;
  for (const auto& [e, c] : coeffs_) {
    Rat pw;
    if (e >= 0) {
      pw = Rat(pow_int(numerator(x), e), pow_int(denominator(x), e));
    } else {
      if (x == 0) throw std::domain_error("poly: negative power at zero");
      pw = Rat(pow_int(denominator(x), -e), pow_int(numerator(x), -e));
    }
    total += c * pw;
  }
  return total;
}

Int Poly::eval_int(const Int& x) const {
  Rat v = eval(x);
  if (denominator(v) != 1)
    throw std::domain_error("poly: evaluation is not an integer");
  return numerator(v);
}

std::string Poly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  Int den = 1;
  for (const auto& [e, c] : coeffs_) {
    Int d = denominator(c);
    den = den * d / gcd(den, d);
  }
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Int num = numerator(it->second) * (den / denominator(it->second));
    if (num == 0) continue;
    if (first) {
      if (num < 0) os << "-";
    } else {
      os << (num < 0 ? " - " : " + ");
    }
    Int a = abs(num);
    int e = it->first;
    if (e == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  std::string body = os.str();
  if (den == 1) return body;
  if (coeffs_.size() > 1) body = "(" + body + ")";
  return body + "/" + den.str();
}

}  // namespace weil
