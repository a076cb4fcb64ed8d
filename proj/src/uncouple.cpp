#include <algorithm>
#include <cstdint>

#include "a2rr/holonomic.hpp"

namespace a2rr {

namespace {

using u64 = std::uint64_t;

constexpr u64 kPrime = 2305843009213693951ULL;  // 2^61 - 1

u64 mulm(u64 a, u64 b) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % kPrime); }
u64 subm(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }
u64 invm(u64 a) {
  u64 r = 1, e = kPrime - 2;
  while (e) {
    if (e & 1) r = mulm(r, a);
    a = mulm(a, a);
    e >>= 1;
  }
  return r;
}

// rank of a matrix mod the prime, and the pivot columns in order
std::size_t rank_mod(std::vector<std::vector<u64>> A, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t rows = A.size(), cols = rows ? A[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    u64 inv = invm(A[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (!A[i][c]) continue;
      u64 f = mulm(A[i][c], inv);
      for (std::size_t k = c; k < cols; ++k) A[i][k] = subm(A[i][k], mulm(f, A[r][k]));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

std::vector<std::vector<u64>> sample(const PolyMatrix& rows, const std::vector<u64>& point) {
  std::vector<std::vector<u64>> out;
  for (auto& r : rows) {
    out.emplace_back();
    for (auto& e : r) out.back().push_back(e.eval_mod(point, kPrime));
  }
  return out;
}

// fraction-free determinant
LaurentPoly determinant(PolyMatrix A, const VarList& vars) {
  std::size_t n = A.size();
  if (n == 0) return LaurentPoly::constant(vars, 1);
  LaurentPoly prev = LaurentPoly::constant(vars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && A[piv][k].is_zero()) ++piv;
    if (piv == n) return LaurentPoly(vars);
    if (piv != k) {
      std::swap(A[piv], A[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]).exact_div(prev);
    prev = A[k][k];
  }
  return negate ? -A[n - 1][n - 1] : A[n - 1][n - 1];
}

}  // namespace

QDiffOperator uncouple_system(const PolyMatrix& A, std::size_t component, int unit) {
  std::size_t d = A.size();
  if (d == 0) throw StructuralError("empty system");
  for (auto& r : A)
    if (r.size() != d) throw StructuralError("system matrix is not square");
  if (component >= d) throw StructuralError("component out of range");
  if (unit < 1) throw StructuralError("shift unit must be positive");
  VarList vars{"x", "q"};
  PolyMatrix M(d, std::vector<LaurentPoly>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) M[i][j] = A[i][j].embed(vars);

  // A(x q^{unit k})
  auto shifted = [&](int k) {
    std::vector<Monomial> images(2);
    images[0][1] = unit * k;
    PolyMatrix S = M;
    for (auto& r : S)
      for (auto& e : r) e = e.monomial_substitute(images);
    return S;
  };
  auto times = [&](const std::vector<LaurentPoly>& row, const PolyMatrix& B) {
    std::vector<LaurentPoly> out(d, LaurentPoly(vars));
    for (std::size_t k = 0; k < d; ++k) {
      if (row[k].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (!B[k][j].is_zero()) out[j] += row[k] * B[k][j];
    }
    return out;
  };
  std::vector<u64> point{0x1234567890ULL % kPrime, 0x9876543210fULL % kPrime};

  // rows[j] expresses F_c(x q^{unit j}) in terms of F(x q^{unit k})
  PolyMatrix rows;
  std::vector<LaurentPoly> e(d, LaurentPoly(vars));
  e[component] = LaurentPoly::constant(vars, 1);
  rows.push_back(e);
  for (int k = 1; k <= static_cast<int>(d); ++k) {
    PolyMatrix Ak = shifted(k - 1);
    for (auto& r : rows) r = times(r, Ak);
    rows.push_back(e);
    std::size_t rk = rank_mod(sample(rows, point));
    if (rk == rows.size()) continue;
    if (rk + 1 < rows.size())
      throw DomainError("uncoupling degenerate at step " + std::to_string(k) + ": rank " +
                        std::to_string(rk) + " for " + std::to_string(rows.size()) + " rows");
    // k columns on which the first k rows are independent
    auto s = sample(rows, point);
    std::vector<std::vector<u64>> T(d, std::vector<u64>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) T[j][i] = s[i][j];
    std::vector<std::size_t> chosen;
    {
      std::vector<std::vector<u64>> picked;
      for (std::size_t j = 0; j < d && chosen.size() < rk; ++j) {
        picked.push_back(T[j]);
        if (rank_mod(picked) == picked.size()) chosen.push_back(j);
        else picked.pop_back();
      }
    }
    // kernel by signed maximal minors
    std::vector<LaurentPoly> c;
    for (std::size_t drop = 0; drop < rows.size(); ++drop) {
      PolyMatrix sub;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == drop) continue;
        sub.emplace_back();
        for (auto j : chosen) sub.back().push_back(rows[i][j]);
      }
      LaurentPoly det = determinant(sub, vars);
      c.push_back(drop % 2 ? -det : det);
    }
    // normalize: divide out the common factor, clear monomial factors
    LaurentPoly g(vars);
    for (auto& x : c)
      if (!x.is_zero()) g = g.is_zero() ? x : poly_gcd(g, x);
    Monomial lo;
    bool first = true;
    for (auto& x : c) {
      if (!g.is_zero() && !x.is_zero()) x = x.exact_div(g);
      if (x.is_zero()) continue;
      Monomial m = x.min_exponents();
      for (std::size_t i = 0; i < 2; ++i) lo[i] = first ? m[i] : std::min(lo[i], m[i]);
      first = false;
    }
    Monomial neg;
    neg[0] = -lo[0];
    neg[1] = -lo[1];
    for (auto& x : c) x = x.shifted(neg);
    if (!c[0].is_zero() && c[0].leading().second < 0)
      for (auto& x : c) x = -x;
    // exact check over every column
    for (std::size_t j = 0; j < d; ++j) {
      LaurentPoly sum(vars);
      for (std::size_t i = 0; i < rows.size(); ++i) sum += c[i] * rows[i][j];
      if (!sum.is_zero()) throw DomainError("uncoupling: elimination check failed");
    }
    QDiffOperator op;
    op.unit = unit;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) op.terms.emplace_back(c[i], static_cast<int>(i));
    return op;
  }
  throw DomainError("uncoupling: no relation found up to order " + std::to_string(d));
}

PolyMatrix poly_matrix_from_json(const Json& j, const VarList& vars) {
  const Json& m = j.is_object() ? j.at("matrix") : j;
  if (!m.is_array()) throw StructuralError("matrix must be an array of rows");
  PolyMatrix out;
  for (auto& row : m) {
    if (!row.is_array()) throw StructuralError("matrix row must be an array");
    out.emplace_back();
    for (auto& e : row)
      out.back().push_back(e.is_string() ? parse_poly(vars, e.get<std::string>())
                                         : poly_from_json(e).embed(vars));
  }
  for (auto& r : out)
    if (r.size() != out.size()) throw StructuralError("system matrix is not square");
  return out;
}

}  // namespace a2rr
