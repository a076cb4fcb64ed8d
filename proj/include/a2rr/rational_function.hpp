#ifndef A2RR_RATIONAL_FUNCTION_HPP
#define A2RR_RATIONAL_FUNCTION_HPP

#include "a2rr/laurent_poly.hpp"

namespace a2rr {

class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(LaurentPoly num);
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const VarList& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }

  // Arithmetic does not reduce; call normalized() for canonical form.
  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  RationalFunction normalized() const;

  // equality of values, by cross multiplication
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

RationalFunction ratfun_normalize(const RationalFunction& r);

}  // namespace a2rr

#endif  // A2RR_RATIONAL_FUNCTION_HPP
