#include "a2rr/rational_function.hpp"

namespace a2rr {

RationalFunction::RationalFunction(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(num_.vars(), 1)) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw DomainError("division by zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::normalized() const {
  if (num_.is_zero()) {
    VarList v = num_.vars().size() ? num_.vars() : den_.vars();
    return {LaurentPoly(v), LaurentPoly::constant(v, 1)};
  }
  LaurentPoly g = poly_gcd(num_, den_);
  LaurentPoly n = num_.exact_div(g), d = den_.exact_div(g);
  // Laurent monomials are units: move the denominator's lowest exponents
  // into the numerator so the denominator is a genuine polynomial with
  // nonzero constant term in each variable.
  Monomial lo = d.min_exponents();
  d = d.shifted(Monomial{} - lo);
  n = n.shifted(Monomial{} - lo);
  if (d.leading().second < 0) {
    d = -d;
    n = -n;
  }
  return {n, d};
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.leading().second == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction ratfun_normalize(const RationalFunction& r) {
  return r.normalized();
}

}  // namespace a2rr
