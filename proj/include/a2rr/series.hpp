#ifndef A2RR_SERIES_HPP
#define A2RR_SERIES_HPP

#include <map>
#include <vector>

#include "a2rr/laurent_poly.hpp"

namespace a2rr {

// Power series in q known modulo q^order.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(int order) : coeffs_(order) {}
  QSeries(int order, std::vector<Integer> coeffs);
  static QSeries one(int order);
  static QSeries monomial(int order, int exp, const Integer& c = 1);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](int i) const { return coeffs_[i]; }
  Integer& operator[](int i) { return coeffs_[i]; }
  bool is_zero() const;
  // index of first nonzero coefficient, or order() if none
  int valuation() const;

  QSeries truncated(int order) const;
  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries scaled(const Integer& c) const;
  // multiply by q^k (k >= 0)
  QSeries shifted(int k) const;

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Integer> coeffs_;
};

QSeries qseries_invert(const QSeries& s);

// Sum over m of x^m * slices[m], truncated modulo q^qorder.
class BiSeries {
 public:
  BiSeries() = default;
  explicit BiSeries(int qorder) : qorder_(qorder) {}
  static BiSeries one(int qorder);
  static BiSeries from_qseries(const QSeries& s);
  // polynomial in the variables named x and q (nonnegative exponents)
  static BiSeries from_poly(const LaurentPoly& p, int qorder,
                            std::string_view x = "x", std::string_view q = "q");

  int qorder() const { return qorder_; }
  const std::map<int, QSeries>& slices() const { return slices_; }
  // slice for x^m (zero series if absent)
  QSeries slice(int m) const;
  Integer coeff(int xexp, int qexp) const;
  void add_to(int xexp, int qexp, const Integer& c);
  void set_slice(int m, QSeries s);
  bool is_zero() const { return slices_.empty(); }
  int max_xdeg() const { return slices_.empty() ? -1 : slices_.rbegin()->first; }

  BiSeries truncated(int qorder) const;
  BiSeries operator-() const;
  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

  // x -> x q^k
  BiSeries xshift(int k) const;
  // x -> 1
  QSeries at_x1() const;

  friend bool operator==(const BiSeries& a, const BiSeries& b);

 private:
  void prune();
  int qorder_ = 0;
  std::map<int, QSeries> slices_;
};

BiSeries biseries_apply_xshift(const BiSeries& s, int k);

// 1/B for a BiSeries whose x^0 slice is invertible
BiSeries biseries_invert(const BiSeries& s);

struct PochhammerFactor {
  int residue = 0;
  int modulus = 1;
  bool denominator = false;
  int multiplicity = 1;
};

// prod of (q^r; q^m)_inf^{+-mult}
struct PochhammerSpec {
  std::vector<PochhammerFactor> factors;

  // numerators and denominators given as residue lists with common modulus,
  // each residue listed once per multiplicity: e.g. {2,4},{1,1,3,3,5,5},6
  static PochhammerSpec ratio(const std::vector<int>& num,
                              const std::vector<int>& den, int modulus);
};

QSeries pochhammer_expand(const PochhammerSpec& spec, int order);

// finite (a q^r; q^m)_n style product with a = x^xexp: prod_{t<n}(1 - x q^{r+mt})
BiSeries xpochhammer(int r, int m, int n, int qorder);

}  // namespace a2rr

#endif  // A2RR_SERIES_HPP
