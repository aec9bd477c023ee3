#pragma once

#include <map>
#include <string>
#include <vector>

#include "weil/rational.hpp"

namespace weil {

// A univariate polynomial in p with exact rational coefficients. Dimension
// polynomials always have denominators that are powers of 2.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant) {
    if (constant != 0) coeffs_[0] = std::move(constant);
  }

  static Poly monomial(int degree, Rat coeff = Rat(1));

  const std::map<int, Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  Rat leading_coefficient() const {
    return coeffs_.empty() ? Rat(0) : coeffs_.rbegin()->second;
  }
  Rat coefficient(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rat(0) : it->second;
  }

  // True once no exponent is negative. Intermediate products with factors
  // like (1 - p^{-2m}) may dip below zero before the leading power clears.
  bool is_polynomial() const {
    return coeffs_.empty() || coeffs_.begin()->first >= 0;
  }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
  }
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly operator/(const Rat& c) const;

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const;  // arbitrary total order, for multisets

  Rat eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  // Evaluation that must land in the integers.
  Int eval_int(const Int& x) const;

  // Rendering like "(p^4 - p^2)/2": numerator over the common power-of-two
  // denominator. Exact round trip is not a goal; comparisons use the exact
  // coefficients.
  std::string to_string(const std::string& var = "p") const;

 private:
  std::map<int, Rat> coeffs_;  // exponent -> nonzero coefficient
  void set(int degree, Rat c);
};

}  // namespace weil
