#include "a2rr/series.hpp"

#include <algorithm>

namespace a2rr {

QSeries::QSeries(int order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order);
}

QSeries QSeries::one(int order) {
  QSeries s(order);
  if (order > 0) s.coeffs_[0] = 1;
  return s;
}

QSeries QSeries::monomial(int order, int exp, const Integer& c) {
  QSeries s(order);
  if (exp < 0) throw DomainError("negative q exponent in series");
  if (exp < order) s.coeffs_[exp] = c;
  return s;
}

bool QSeries::is_zero() const {
  for (auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

int QSeries::valuation() const {
  for (int i = 0; i < order(); ++i)
    if (coeffs_[i] != 0) return i;
  return order();
}

QSeries QSeries::truncated(int order) const {
  if (order > this->order()) throw StructuralError("cannot extend a truncated series");
  return QSeries(order, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order));
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.order());
  for (int i = 0; i < order(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.order());
  for (int i = 0; i < order(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  int n = std::min(a.order(), b.order());
  QSeries r(n);
  for (int i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return r;
}

QSeries QSeries::scaled(const Integer& c) const {
  QSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

QSeries QSeries::shifted(int k) const {
  if (k < 0) throw DomainError("negative shift of q-series");
  QSeries r(order());
  for (int i = 0; i + k < order(); ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

QSeries qseries_invert(const QSeries& s) {
  int n = s.order();
  if (n == 0) return s;
  const Integer& c0 = s[0];
  if (c0 != 1 && c0 != -1) throw DomainError("series constant term is not a unit");
  // b_k = -c0 * sum_{i=1..k} a_i b_{k-i}, using 1/c0 = c0
  QSeries r(n);
  r[0] = c0;
  for (int k = 1; k < n; ++k) {
    Integer acc = 0;
    for (int i = 1; i <= k; ++i)
      if (s[i] != 0) mpz_addmul(acc.get_mpz_t(), s[i].get_mpz_t(), r[k - i].get_mpz_t());
    r[k] = -acc * c0;
  }
  return r;
}

// ---------------------------------------------------------------------------

BiSeries BiSeries::one(int qorder) {
  BiSeries b(qorder);
  if (qorder > 0) b.slices_[0] = QSeries::one(qorder);
  return b;
}

BiSeries BiSeries::from_qseries(const QSeries& s) {
  BiSeries b(s.order());
  b.set_slice(0, s);
  return b;
}

BiSeries BiSeries::from_poly(const LaurentPoly& p, int qorder, std::string_view x,
                             std::string_view q) {
  BiSeries b(qorder);
  int xi = p.vars().index_of(x), qi = p.vars().index_of(q);
  for (auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < p.vars().size(); ++i)
      if (static_cast<int>(i) != xi && static_cast<int>(i) != qi && m[i] != 0)
        throw StructuralError("polynomial involves variables other than x, q");
    int xe = xi >= 0 ? m[xi] : 0, qe = qi >= 0 ? m[qi] : 0;
    if (xe < 0 || qe < 0) throw DomainError("negative exponent in bivariate series");
    if (qe < qorder) b.add_to(xe, qe, c);
  }
  return b;
}

QSeries BiSeries::slice(int m) const {
  auto it = slices_.find(m);
  if (it == slices_.end()) return QSeries(qorder_);
  return it->second;
}

Integer BiSeries::coeff(int xexp, int qexp) const {
  auto it = slices_.find(xexp);
  if (it == slices_.end() || qexp < 0 || qexp >= qorder_) return 0;
  return it->second[qexp];
}

void BiSeries::add_to(int xexp, int qexp, const Integer& c) {
  if (qexp >= qorder_) return;
  auto it = slices_.find(xexp);
  if (it == slices_.end()) it = slices_.emplace(xexp, QSeries(qorder_)).first;
  it->second[qexp] += c;
  if (c != 0 && it->second.is_zero()) slices_.erase(it);
}

void BiSeries::set_slice(int m, QSeries s) {
  if (s.order() != qorder_) s = s.order() > qorder_ ? s.truncated(qorder_) : s;
  if (s.order() < qorder_) throw StructuralError("slice order below series order");
  if (s.is_zero()) slices_.erase(m);
  else slices_[m] = std::move(s);
}

void BiSeries::prune() {
  for (auto it = slices_.begin(); it != slices_.end();) {
    if (it->second.is_zero()) it = slices_.erase(it);
    else ++it;
  }
}

BiSeries BiSeries::truncated(int qorder) const {
  if (qorder > qorder_) throw StructuralError("cannot extend a truncated series");
  BiSeries r(qorder);
  for (auto& [m, s] : slices_) r.set_slice(m, s.truncated(qorder));
  return r;
}

BiSeries BiSeries::operator-() const {
  BiSeries r = *this;
  for (auto& [m, s] : r.slices_) s = -s;
  return r;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  if (o.qorder_ < qorder_) *this = truncated(o.qorder_);
  for (auto& [m, s] : o.slices_) {
    auto it = slices_.find(m);
    if (it == slices_.end()) slices_.emplace(m, s.truncated(qorder_));
    else it->second += s;
  }
  prune();
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) { return *this += -o; }

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  int n = std::min(a.qorder_, b.qorder_);
  BiSeries r(n);
  for (auto& [ma, sa] : a.slices_) {
    int va = sa.valuation();
    for (auto& [mb, sb] : b.slices_) {
      if (va + sb.valuation() >= n) continue;
      auto prod = sa * sb;
      auto it = r.slices_.find(ma + mb);
      if (it == r.slices_.end()) r.slices_.emplace(ma + mb, prod.truncated(n));
      else it->second += prod;
    }
  }
  r.prune();
  return r;
}

BiSeries BiSeries::xshift(int k) const {
  if (k < 0) throw DomainError("negative x-shift");
  BiSeries r(qorder_);
  for (auto& [m, s] : slices_) {
    long sh = static_cast<long>(k) * m;
    if (sh >= qorder_) continue;
    r.set_slice(m, s.shifted(static_cast<int>(sh)));
  }
  return r;
}

QSeries BiSeries::at_x1() const {
  QSeries r(qorder_);
  for (auto& [m, s] : slices_) r += s;
  return r;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  return a.qorder_ == b.qorder_ && a.slices_ == b.slices_;
}

BiSeries biseries_apply_xshift(const BiSeries& s, int k) { return s.xshift(k); }

BiSeries biseries_invert(const BiSeries& s) {
  int n = s.qorder();
  QSeries c0inv = qseries_invert(s.slice(0));
  // s = s0 (1 + t), t has no x^0 part; 1/s = s0^{-1} sum (-t)^k
  BiSeries t(n);
  for (auto& [m, sl] : s.slices())
    if (m > 0) t.set_slice(m, sl * c0inv);
  BiSeries acc = BiSeries::one(n), power = BiSeries::one(n);
  BiSeries neg_t = -t;
  while (true) {
    power = power * neg_t;
    if (power.is_zero()) break;
    acc += power;
    // every slice of t with positive x degree needs positive q valuation for
    // this loop to end; guard against a non-convergent input
    if (power.max_xdeg() > 4 * n + 8 && power.slices().begin()->second.valuation() == 0)
      throw DomainError("bivariate inverse does not converge q-adically");
  }
  BiSeries r(n);
  for (auto& [m, sl] : acc.slices()) r.set_slice(m, sl * c0inv);
  return r;
}

PochhammerSpec PochhammerSpec::ratio(const std::vector<int>& num,
                                     const std::vector<int>& den, int modulus) {
  PochhammerSpec s;
  for (int r : num) s.factors.push_back({r, modulus, false, 1});
  for (int r : den) s.factors.push_back({r, modulus, true, 1});
  return s;
}

QSeries pochhammer_expand(const PochhammerSpec& spec, int order) {
  if (order < 1) throw DomainError("order must be positive");
  QSeries num = QSeries::one(order), den = QSeries::one(order);
  for (auto& f : spec.factors) {
    if (f.modulus < 1) throw DomainError("pochhammer modulus must be >= 1");
    if (f.residue < 0 || f.multiplicity < 1)
      throw DomainError("invalid pochhammer factor");
    if (f.denominator && f.residue == 0)
      throw DomainError("denominator factor with residue 0 is not invertible");
    QSeries& target = f.denominator ? den : num;
    for (int rep = 0; rep < f.multiplicity; ++rep) {
      if (f.residue == 0) {
        // (1; q^m) vanishes identically
        target = QSeries(order);
        continue;
      }
      // multiply in place by (1 - q^e) for e = r, r+m, ...
      for (long e = f.residue; e < order; e += f.modulus)
        for (long i = order - 1; i >= e; --i) target[i] -= target[i - e];
    }
  }
  return num * qseries_invert(den);
}

BiSeries xpochhammer(int r, int m, int n, int qorder) {
  BiSeries acc = BiSeries::one(qorder);
  for (int t = 0; n < 0 || t < n; ++t) {
    long e = r + static_cast<long>(m) * t;
    if (e >= qorder) break;
    if (e < 0 || (e == 0 && n < 0))
      throw DomainError("x-pochhammer needs nonnegative q exponents");
    BiSeries f = BiSeries::one(qorder);
    f.add_to(1, static_cast<int>(e), -1);
    acc = acc * f;
  }
  return acc;
}

}  // namespace a2rr
