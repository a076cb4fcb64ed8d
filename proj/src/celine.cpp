#include <algorithm>
#include <cstdint>

#include "a2rr/holonomic.hpp"

namespace a2rr {

namespace {

using u64 = std::uint64_t;

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
u64 addm(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}
u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

// dense polynomials mod p, low degree first, no trailing zeros
using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
  trim(r);
  return r;
}

Poly psub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = subm(a[i], b[i], p);
  trim(a);
  return a;
}

void pdivmod(Poly a, const Poly& b, u64 p, Poly& q, Poly& r) {
  trim(a);
  q.clear();
  if (deg(a) < deg(b)) {
    r = a;
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  u64 li = invm(b.back(), p);
  for (int i = deg(a) - deg(b); i >= 0; --i) {
    u64 c = mulm(a[i + b.size() - 1], li, p);
    q[i] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] = subm(a[i + j], mulm(c, b[j], p), p);
  }
  trim(a);
  trim(q);
  r = a;
}

u64 peval(const Poly& a, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = addm(mulm(r, x, p), a[i], p);
  return r;
}

Poly monic(Poly a, u64 p) {
  if (a.empty()) return a;
  u64 li = invm(a.back(), p);
  for (auto& c : a) c = mulm(c, li, p);
  return a;
}

Poly pgcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    pdivmod(a, b, p, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// interpolating polynomial through (xs[i], ys[i])
Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
  std::size_t n = xs.size();
  std::vector<u64> c = ys;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i)
      c[i] = mulm(subm(c[i], c[i - 1], p), invm(subm(xs[i], xs[i - k], p), p), p);
  Poly r{c[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    Poly lin{subm(0, xs[i], p), 1};
    r = pmul(r, lin, p);
    if (r.empty()) r.push_back(0);
    r[0] = addm(r[0], c[i], p);
  }
  trim(r);
  return r;
}

// rational function N/D with deg N <= nbound agreeing with the data
bool pade(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p, Poly& num, Poly& den) {
  std::size_t K = xs.size();
  int nbound = static_cast<int>((K - 1) / 2);
  Poly M{1};
  for (auto x : xs) M = pmul(M, Poly{subm(0, x, p), 1}, p);
  Poly r0 = M, r1 = interpolate(xs, ys, p);
  Poly t0, t1{1};
  while (deg(r1) > nbound) {
    Poly q, r;
    pdivmod(r0, r1, p, q, r);
    Poly t = psub(t0, pmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (t1.empty() || deg(t1) > static_cast<int>(K) - 1 - nbound) return false;
  for (auto x : xs)
    if (peval(t1, x, p) == 0) return false;
  Poly g = pgcd(r1, t1, p);
  if (deg(g) > 0) {
    Poly q, r;
    pdivmod(r1, g, p, q, r);
    r1 = q;
    pdivmod(t1, g, p, q, r);
    t1 = q;
  }
  u64 li = invm(t1.back(), p);
  for (auto& c : r1) c = mulm(c, li, p);
  for (auto& c : t1) c = mulm(c, li, p);
  num = r1;
  den = t1;
  return true;
}

// r/s with |r|, s <= sqrt(m/2), r/s = a mod m
bool rational_reconstruct(const mpz_class& a, const mpz_class& m, mpq_class& out) {
  mpz_class bound = sqrt(m / 2);
  mpz_class r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r = r0 - q * r1;
    mpz_class s = s0 - q * s1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
  }
  if (s1 == 0 || abs(s1) > bound) return false;
  out = mpq_class(r1, s1);
  out.canonicalize();
  return true;
}

struct Unknown {
  int family;  // -1 for the p family
  int j;
  ShiftOp::Shift shift;
  Monomial mono;
};

bool mono_less(const Monomial& a, const Monomial& b) { return a.e < b.e; }

struct Entry {
  std::size_t col;
  std::vector<std::pair<int, Integer>> coeffs;  // q exponent, coefficient
};

struct System {
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> rows;
  int qmin = 0, qmax = 0;
};

// rows evaluated at q = t
std::vector<u64> eval_row(const System& S, const std::vector<Entry>& row, const std::vector<u64>& pw,
                          u64 p) {
  std::vector<u64> out(S.cols, 0);
  for (auto& e : row) {
    u64 v = 0;
    for (auto& [k, c] : e.coeffs)
      v = addm(v, mulm(mpz_fdiv_ui(c.get_mpz_t(), p), pw[k - S.qmin], p), p);
    out[e.col] = v;
  }
  return out;
}

std::vector<u64> powers(const System& S, u64 t, u64 p) {
  std::vector<u64> pw(S.qmax - S.qmin + 1);
  u64 ti = invm(t, p);
  u64 base = powm(S.qmin < 0 ? ti : t, static_cast<u64>(std::abs(S.qmin)), p);
  for (std::size_t i = 0; i < pw.size(); ++i) {
    pw[i] = base;
    base = mulm(base, t, p);
  }
  return pw;
}

// solve the square system rows x cols (last column is the right side); false if singular
bool solve_square(std::vector<std::vector<u64>> A, u64 p, std::vector<u64>& x) {
  std::size_t n = A.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) return false;
    std::swap(A[piv], A[c]);
    u64 inv = invm(A[c][c], p);
    for (auto& v : A[c]) v = mulm(v, inv, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      u64 f = A[r][c];
      for (std::size_t k = c; k <= n; ++k) A[r][k] = subm(A[r][k], mulm(f, A[c][k], p), p);
    }
  }
  x.resize(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = A[r][n];
  return true;
}

u64 next_prime(const mpz_class& from) {
  mpz_class r;
  mpz_nextprime(r.get_mpz_t(), from.get_mpz_t());
  return r.get_ui();
}

// deterministic sample points
struct PointStream {
  u64 state = 0x9e3779b97f4a7c15ULL;
  u64 next(u64 p) {
    for (;;) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      u64 v = (state >> 3) % p;
      if (v > 1) return v;
    }
  }
};

}  // namespace

std::optional<CertificateSet> celine_solve(const HypTerm& t, const CelineBounds& b) {
  std::size_t dim = t.dim();
  if (dim < 1) throw StructuralError("term has no variables");
  VarList ring = t.ring();
  int J = b.support ? b.support->order : b.order;
  if (J < 0) throw DomainError("negative order");

  // ---- the ansatz
  std::vector<Unknown> unknowns;
  auto strip_q = [](Monomial m) {
    m[0] = 0;
    return m;
  };
  if (b.support) {
    const CertificateSet& s = *b.support;
    if (s.fam.size() + 1 != dim) throw StructuralError("support does not match the term");
    for (std::size_t i = 0; i < s.fam.size(); ++i)
      for (int j = 0; j <= J && j < static_cast<int>(s.fam[i].size()); ++j) {
        std::vector<std::pair<ShiftOp::Shift, Monomial>> seen;
        for (auto& [sh, c] : s.fam[i][j].terms()) {
          LaurentPoly ce = c.embed(ring);
          for (auto& [m, v] : ce.terms()) {
            auto key = std::make_pair(sh, strip_q(m));
            if (std::find(seen.begin(), seen.end(), key) == seen.end()) seen.push_back(key);
          }
        }
        for (auto& [sh, m] : seen) unknowns.push_back({static_cast<int>(i), j, sh, m});
      }
    for (int j = 0; j <= J && j < static_cast<int>(s.p.size()); ++j) {
      std::vector<Monomial> seen;
      LaurentPoly pe = s.p[j].embed(ring);
      for (auto& [m, v] : pe.terms()) {
        Monomial k = strip_q(m);
        if (std::find(seen.begin(), seen.end(), k) == seen.end()) seen.push_back(k);
      }
      std::sort(seen.begin(), seen.end(), mono_less);
      for (auto& m : seen) unknowns.push_back({-1, j, ShiftOp::Shift(dim, 0), m});
    }
  } else {
    std::size_t r = dim - 1;
    auto kdeg = b.kdeg, kshift = b.kshift;
    kdeg.resize(r, 0);
    kshift.resize(r, 0);
    // shifts and monomials in the summation variables, odometer order
    std::vector<std::vector<int>> shifts{{}}, vexps{{}};
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<std::vector<int>> ns, nv;
      for (auto& s : shifts)
        for (int k = 0; k <= kshift[i]; ++k) {
          ns.push_back(s);
          ns.back().push_back(k);
        }
      for (auto& v : vexps)
        for (int k = 0; k <= kdeg[i]; ++k) {
          nv.push_back(v);
          nv.back().push_back(k);
        }
      shifts = std::move(ns);
      vexps = std::move(nv);
    }
    for (std::size_t i = 0; i < r; ++i)
      for (int j = 0; j <= J; ++j)
        for (auto& s : shifts)
          for (auto& v : vexps)
            for (int e = 0; e <= b.udeg; ++e) {
              ShiftOp::Shift sh(dim, 0);
              Monomial m;
              m[1] = e;
              for (std::size_t k = 0; k < r; ++k) {
                sh[k + 1] = s[k];
                m[k + 2] = v[k];
              }
              unknowns.push_back({static_cast<int>(i), j, sh, m});
            }
    for (int j = 0; j <= J; ++j)
      for (int e = 0; e <= b.udeg; ++e) {
        Monomial m;
        m[1] = e;
        unknowns.push_back({-1, j, ShiftOp::Shift(dim, 0), m});
      }
  }
  std::size_t n = unknowns.size();
  std::size_t first_p = 0;
  while (first_p < n && unknowns[first_p].family >= 0) ++first_p;
  if (first_p == n) return std::nullopt;

  // ---- one operator per unknown, applied to F over a shared denominator
  ShiftOp one = ShiftOp::coefficient(LaurentPoly::constant(ring, 1), dim);
  std::vector<ShiftOp> ops;
  for (auto& u : unknowns) {
    ShiftOp base(ring, dim);
    base.add_term(u.shift, LaurentPoly::monomial(ring, u.mono));
    ShiftOp op = base * ShiftOp::shift(ring, dim, 0, u.j);
    if (u.family >= 0) op = (one - ShiftOp::shift(ring, dim, static_cast<std::size_t>(u.family) + 1)) * op;
    ops.push_back(std::move(op));
  }
  auto shared = apply_to_term_shared(t, ops);

  // one equation per monomial in q^n, q^k
  System S;
  S.cols = n;
  {
    std::vector<std::pair<Monomial, std::vector<Entry>>> eqs;
    std::map<std::array<std::int32_t, kMaxVars>, std::size_t> index;
    bool first = true;
    for (std::size_t c = 0; c < n; ++c)
      for (auto& [m, v] : shared.nums[c].terms()) {
        Monomial key = strip_q(m);
        auto it = index.find(key.e);
        if (it == index.end()) {
          it = index.emplace(key.e, eqs.size()).first;
          eqs.push_back({key, {}});
        }
        auto& row = eqs[it->second].second;
        if (row.empty() || row.back().col != c) row.push_back({c, {}});
        row.back().coeffs.emplace_back(m[0], v);
        if (first) S.qmin = S.qmax = m[0];
        first = false;
        S.qmin = std::min(S.qmin, m[0]);
        S.qmax = std::max(S.qmax, m[0]);
      }
    for (auto& [k, row] : eqs) S.rows.push_back(std::move(row));
  }
  if (S.rows.empty()) throw DomainError("ansatz annihilates the term identically");

  // ---- structure at a sample point: independent rows, pivot columns
  u64 p0 = next_prime(mpz_class(1) << 61);
  PointStream pts;
  u64 t0 = pts.next(p0);
  auto pw0 = powers(S, t0, p0);
  std::vector<std::vector<u64>> basis;  // echelon rows
  std::vector<std::size_t> basis_pivot, chosen_rows;
  for (std::size_t ri = 0; ri < S.rows.size() && basis.size() < n; ++ri) {
    auto row = eval_row(S, S.rows[ri], pw0, p0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      u64 f = row[basis_pivot[k]];
      if (!f) continue;
      for (std::size_t c = 0; c < n; ++c) row[c] = subm(row[c], mulm(f, basis[k][c], p0), p0);
    }
    std::size_t piv = 0;
    while (piv < n && row[piv] == 0) ++piv;
    if (piv == n) continue;
    u64 inv = invm(row[piv], p0);
    for (auto& v : row) v = mulm(v, inv, p0);
    basis.push_back(std::move(row));
    basis_pivot.push_back(piv);
    chosen_rows.push_back(ri);
  }
  std::size_t rank = basis.size();
  if (rank == n) return std::nullopt;
  // reduced row echelon form of the row space
  std::vector<std::size_t> order(rank);
  for (std::size_t i = 0; i < rank; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto c) { return basis_pivot[a] < basis_pivot[c]; });
  std::vector<std::vector<u64>> R;
  std::vector<std::size_t> pivots;
  for (auto i : order) {
    R.push_back(basis[i]);
    pivots.push_back(basis_pivot[i]);
  }
  for (std::size_t i = rank; i-- > 0;)
    for (std::size_t k = 0; k < i; ++k) {
      u64 f = R[k][pivots[i]];
      if (!f) continue;
      for (std::size_t c = 0; c < n; ++c) R[k][c] = subm(R[k][c], mulm(f, R[i][c], p0), p0);
    }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  auto is_p0 = [&](std::size_t c) { return unknowns[c].family < 0 && unknowns[c].j == 0; };
  // first free column in the p block whose null vector has p_0 != 0
  std::size_t free_col = n;
  for (std::size_t c = first_p; c < n && free_col == n; ++c) {
    if (is_pivot[c]) continue;
    bool touches = is_p0(c);
    for (std::size_t i = 0; i < rank && !touches; ++i)
      if (is_p0(pivots[i]) && R[i][c]) touches = true;
    if (touches) free_col = c;
  }
  if (free_col == n) return std::nullopt;

  // ---- per prime: sample the null vector, rebuild rational functions of q
  std::vector<Poly> acc;  // normalized polynomial vector, CRT accumulated
  std::vector<std::vector<mpz_class>> acc_coeffs;
  mpz_class modulus = 1;
  mpz_class prime_seed = mpz_class(1) << 61;
  int max_points = 2 * b.qdeg_max + 4;
  for (int round = 0; round < 8; ++round) {
    u64 p = next_prime(prime_seed);
    prime_seed = mpz_class(p) + 1000;
    std::vector<u64> xs;
    std::vector<std::vector<u64>> ys(rank);
    auto sample = [&]() {
      for (;;) {
        u64 tt = pts.next(p);
        auto pw = powers(S, tt, p);
        std::vector<std::vector<u64>> A;
        for (auto ri : chosen_rows) {
          auto full = eval_row(S, S.rows[ri], pw, p);
          std::vector<u64> row;
          for (auto c : pivots) row.push_back(full[c]);
          row.push_back(subm(0, full[free_col], p));
          A.push_back(std::move(row));
        }
        std::vector<u64> x;
        if (!solve_square(std::move(A), p, x)) continue;
        xs.push_back(tt);
        for (std::size_t i = 0; i < rank; ++i) ys[i].push_back(x[i]);
        return;
      }
    };
    std::vector<Poly> nums(rank), dens(rank);
    bool done = false;
    int K = 8;
    while (!done) {
      while (static_cast<int>(xs.size()) < K + 3) sample();
      std::vector<u64> fx(xs.begin(), xs.begin() + K);
      done = true;
      for (std::size_t i = 0; i < rank && done; ++i) {
        std::vector<u64> fy(ys[i].begin(), ys[i].begin() + K);
        if (!pade(fx, fy, p, nums[i], dens[i])) {
          done = false;
          break;
        }
        for (std::size_t k = K; k < xs.size(); ++k)
          if (mulm(peval(nums[i], xs[k], p), invm(peval(dens[i], xs[k], p), p), p) != ys[i][k]) {
            done = false;
            break;
          }
      }
      if (!done) {
        if (K >= max_points) throw DomainError("celine: q-degree bound exceeded in reconstruction");
        K = std::min(2 * K, max_points);
      }
    }
    Poly L{1};
    for (auto& d : dens) {
      Poly g = pgcd(L, d, p), q, r;
      pdivmod(pmul(L, d, p), g, p, q, r);
      L = monic(q, p);
    }
    // coordinates as polynomials: x_free = L, x_pivot = num * L / den
    std::vector<Poly> vec(n);
    vec[free_col] = L;
    for (std::size_t i = 0; i < rank; ++i) {
      Poly q, r;
      pdivmod(pmul(nums[i], L, p), dens[i], p, q, r);
      vec[pivots[i]] = q;
    }
    // CRT into the accumulated coefficients
    if (round == 0) {
      acc_coeffs.assign(n, {});
      for (std::size_t c = 0; c < n; ++c)
        for (auto v : vec[c]) acc_coeffs[c].push_back(mpz_class(std::to_string(v)));
      modulus = mpz_class(std::to_string(p));
    } else {
      bool shape = true;
      for (std::size_t c = 0; c < n; ++c) shape = shape && vec[c].size() == acc_coeffs[c].size();
      if (!shape) continue;  // unlucky prime
      mpz_class P(std::to_string(p));
      mpz_class minv;
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), P.get_mpz_t());
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < vec[c].size(); ++k) {
          mpz_class a = acc_coeffs[c][k];
          mpz_class d = (mpz_class(std::to_string(vec[c][k])) - a) % P;
          if (d < 0) d += P;
          d = d * minv % P;
          acc_coeffs[c][k] = a + modulus * d;
        }
      modulus *= P;
    }
    // lift to rationals, clear denominators
    bool lifted = true;
    std::vector<std::vector<mpq_class>> qv(n);
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < n && lifted; ++c)
      for (auto& a : acc_coeffs[c]) {
        mpq_class r;
        if (!rational_reconstruct(a, modulus, r)) {
          lifted = false;
          break;
        }
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den_mpz_t());
        qv[c].push_back(r);
      }
    if (!lifted) continue;
    CertificateSet cert;
    cert.order = J;
    cert.p.assign(J + 1, LaurentPoly(ring));
    cert.fam.assign(dim - 1, std::vector<ShiftOp>(J + 1, ShiftOp(ring, dim)));
    mpz_class content = 0;
    for (std::size_t c = 0; c < n; ++c)
      for (auto& r : qv[c]) {
        mpz_class z = r.get_num() * (lcm / r.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
      }
    if (content == 0) continue;
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<LaurentPoly::Term> terms;
      for (std::size_t k = 0; k < qv[c].size(); ++k) {
        mpz_class z = qv[c][k].get_num() * (lcm / qv[c][k].get_den()) / content;
        if (z == 0) continue;
        Monomial m = unknowns[c].mono;
        m[0] = static_cast<std::int32_t>(k);
        terms.emplace_back(m, z);
      }
      if (terms.empty()) continue;
      LaurentPoly coef = LaurentPoly::from_terms(ring, std::move(terms));
      auto& u = unknowns[c];
      if (u.family < 0) cert.p[u.j] += coef;
      else cert.fam[u.family][u.j].add_term(u.shift, coef);
    }
    // sign: positive leading coefficient of p_0
    if (!cert.p[0].is_zero() && cert.p[0].leading().second < 0) {
      for (auto& x : cert.p) x = -x;
      for (auto& f : cert.fam)
        for (auto& x : f) x = -x;
    }
    if (verify_certificate(t, cert).ok) return cert;
  }
  throw DomainError("celine: reconstruction did not verify");
}

}  // namespace a2rr
