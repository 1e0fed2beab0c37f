#include "laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>

namespace wqt {

long LaurentPoly::min_qexp() const {
  if (c_.empty()) return 0;
  long m = std::numeric_limits<long>::max();
  for (auto& [e, v] : c_) m = std::min(m, e.q);
  return m;
}
long LaurentPoly::max_qexp() const {
  if (c_.empty()) return 0;
  long m = std::numeric_limits<long>::min();
  for (auto& [e, v] : c_) m = std::max(m, e.q);
  return m;
}
long LaurentPoly::min_texp() const {
  if (c_.empty()) return 0;
  long m = std::numeric_limits<long>::max();
  for (auto& [e, v] : c_) m = std::min(m, e.t);
  return m;
}
long LaurentPoly::max_texp() const {
  if (c_.empty()) return 0;
  long m = std::numeric_limits<long>::min();
  for (auto& [e, v] : c_) m = std::max(m, e.t);
  return m;
}

std::pair<Exp2, Rat> LaurentPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading: zero polynomial");
  auto best = c_.begin();
  for (auto it = std::next(c_.begin()); it != c_.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Rat LaurentPoly::content() const {
  Int num_gcd = 0, den_lcm = 1;
  for (auto& [e, v] : c_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  if (num_gcd == 0) return Rat(0);
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

namespace {
// binary powering keeps powers of exact points (like i) exact
std::complex<double> cpow_int(std::complex<double> b, long e) {
  if (e < 0) {
    b = 1.0 / b;
    e = -e;
  }
  std::complex<double> r = 1.0;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}
}  // namespace

std::complex<double> LaurentPoly::eval(std::complex<double> q0, std::complex<double> t0) const {
  std::complex<double> s = 0.0;
  for (auto& [e, v] : c_) s += v.get_d() * cpow_int(q0, e.q) * cpow_int(t0, e.t);
  return s;
}

double LaurentPoly::eval_scale(std::complex<double> q0, std::complex<double> t0) const {
  double s = 0.0;
  for (auto& [e, v] : c_)
    s += std::abs(v.get_d()) * std::abs(cpow_int(q0, e.q)) * std::abs(cpow_int(t0, e.t));
  return s;
}

Rat LaurentPoly::eval_rat(const Rat& q0, const Rat& t0) const {
  auto powr = [](const Rat& b, long e) {
    if (e == 0) return Rat(1);
    if (sgn(b) == 0) throw std::domain_error("eval_rat: 0^negative");
    Rat base = e > 0 ? b : Rat(1) / b;
    unsigned long n = (unsigned long)std::labs(e);
    Rat acc(1);
    while (n) {
      if (n & 1) acc *= base;
      base *= base;
      n >>= 1;
    }
    return acc;
  };
  Rat s(0);
  for (auto& [e, v] : c_) s += v * powr(q0, e.q) * powr(t0, e.t);
  return s;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("div_exact: zero divisor");
  if (is_zero()) return LaurentPoly();
  if (d.is_monomial()) {
    auto& [de, dv] = *d.terms().begin();
    LaurentPoly r;
    for (auto& [e, v] : c_) r.add_term({e.q - de.q, e.t - de.t}, v / dv);
    return r;
  }
  LaurentPoly rem = *this, quo;
  auto [dle, dlc] = d.leading();
  while (!rem.is_zero()) {
    auto [rle, rlc] = rem.leading();
    Exp2 sh{rle.q - dle.q, rle.t - dle.t};
    Rat coef = rlc / dlc;
    quo.add_term(sh, coef);
    rem -= d.shifted(sh.q, sh.t) * coef;
    if (!rem.is_zero()) {
      auto [nle, nlc] = rem.leading();
      if (!grlex_less(nle, rle)) throw std::logic_error("div_exact: not exact (no progress)");
    }
  }
  return quo;
}

namespace {

// --- univariate machinery over Rat (dense, ascending powers) ---
using UPoly = std::vector<Rat>;

void utrim(UPoly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}
bool uzero(const UPoly& p) { return p.empty(); }

UPoly uadd(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
  for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
  utrim(r);
  return r;
}
UPoly uneg(const UPoly& a) {
  UPoly r = a;
  for (auto& c : r) c = -c;
  return r;
}
UPoly umul(const UPoly& a, const UPoly& b) {
  if (uzero(a) || uzero(b)) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
  utrim(r);
  return r;
}
UPoly udiv_exact(UPoly a, const UPoly& b) {
  utrim(a);
  if (uzero(b)) throw DivisionByZero("udiv_exact: zero divisor");
  if (uzero(a)) return {};
  if (a.size() < b.size()) throw std::logic_error("udiv_exact: not exact");
  UPoly q(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size() && !uzero(a)) {
    Rat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); i++) a[off + i] -= f * b[i];
    utrim(a);
  }
  if (!uzero(a)) throw std::logic_error("udiv_exact: not exact");
  return q;
}

// integer layer for gcd only: rational Euclid doubles coefficient bit sizes
// per step, so gcds run over primitive integer polynomials instead
using IPoly = std::vector<Int>;

void itrim(IPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void iprimitive(IPoly& p) {
  Int g(0);
  for (auto& c : p) g = gcd(g, c);
  if (sgn(g) != 0)
    for (auto& c : p) c /= g;
  if (!p.empty() && sgn(p.back()) < 0)
    for (auto& c : p) c = -c;
}

IPoly to_ipoly(const UPoly& a) {
  Int l(1);
  for (auto& c : a) l = lcm(l, Int(c.get_den()));
  IPoly r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = Int(a[i].get_num()) * (l / Int(a[i].get_den()));
  iprimitive(r);
  return r;
}

IPoly iprem(IPoly a, const IPoly& b) {
  itrim(a);
  const Int& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    Int la = a.back();
    size_t off = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); i++) a[off + i] -= la * b[i];
    itrim(a);
    iprimitive(a);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  if (uzero(a) && uzero(b)) return {};
  if (uzero(a) || uzero(b)) {
    UPoly r = uzero(a) ? std::move(b) : std::move(a);
    Rat lc = r.back();
    for (auto& c : r) c /= lc;
    return r;
  }
  IPoly ia = to_ipoly(a), ib = to_ipoly(b);
  if (ia.size() < ib.size()) std::swap(ia, ib);
  while (!ib.empty()) {
    IPoly r = iprem(ia, ib);
    ia = std::move(ib);
    ib = std::move(r);
  }
  // monic
  UPoly g(ia.size());
  Rat lc(ia.back());
  for (size_t i = 0; i < ia.size(); i++) g[i] = Rat(ia[i]) / lc;
  return g;
}

// --- bivariate: dense in t, coefficients dense in q ---
// b[k] = coefficient of t^k, a UPoly in q
using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
  while (!p.empty() && uzero(p.back())) p.pop_back();
}
bool bzero(const BPoly& p) { return p.empty(); }

BPoly bscale_u(const BPoly& a, const UPoly& s) {
  BPoly r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = umul(a[i], s);
  btrim(r);
  return r;
}

BPoly bdiv_exact_u(const BPoly& a, const UPoly& s) {
  BPoly r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = uzero(a[i]) ? UPoly{} : udiv_exact(a[i], s);
  btrim(r);
  return r;
}

UPoly bcontent(const BPoly& a) {
  UPoly g;
  for (auto& c : a)
    if (!uzero(c)) g = ugcd(g, c);
  return g;
}

// pseudo-remainder in the t-variable: lc(b)^(deg a - deg b + 1) * a = q*b + r
BPoly bprem(BPoly a, const BPoly& b) {
  btrim(a);
  if (bzero(b)) throw DivisionByZero("bprem: zero divisor");
  const UPoly& lb = b.back();
  while (a.size() >= b.size() && !bzero(a)) {
    UPoly la = a.back();
    size_t off = a.size() - b.size();
    BPoly scaled = bscale_u(a, lb);
    for (size_t i = 0; i < b.size(); i++) {
      UPoly sub = umul(b[i], la);
      if (off + i < scaled.size())
        scaled[off + i] = uadd(scaled[off + i], uneg(sub));
      else if (!uzero(sub))
        throw std::logic_error("bprem: indexing");
    }
    btrim(scaled);
    a = std::move(scaled);
  }
  return a;
}

BPoly bprimitive(const BPoly& a) {
  if (bzero(a)) return a;
  UPoly c = bcontent(a);
  return bdiv_exact_u(a, c);
}

// ---- modular gcd engine ----
// gcds over the rationals are only defined up to scalars, so denominators
// are cleared and the work happens over machine-word prime fields with CRT
// lifting (Brown's algorithm); the caller renormalizes the result

using u64 = std::uint64_t;

struct ModP {
  u64 p;
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }  // p < 2^31 keeps this exact
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

const std::vector<u64>& prime_list() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> v;
    for (u64 n = 2147483647ull; v.size() < 48; n -= 2) {
      bool ok = true;
      for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) {
          ok = false;
          break;
        }
      if (ok) v.push_back(n);
    }
    return v;
  }();
  return primes;
}

u64 zmod(const Int& v, u64 p) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

using MPoly = std::vector<u64>;  // univariate mod p, ascending powers

void mtrim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

MPoly mgcd(MPoly a, MPoly b, const ModP& M) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    // monic Euclid step
    u64 li = M.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      u64 f = M.mul(a.back(), li);
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); i++) a[off + i] = M.sub(a[off + i], M.mul(f, b[i]));
      mtrim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 li = M.inv(a.back());
    for (auto& c : a) c = M.mul(c, li);
  }
  return a;
}

u64 meval(const MPoly& a, u64 x, const ModP& M) {
  u64 r = 0;
  for (size_t i = a.size(); i-- > 0;) r = M.add(M.mul(r, x), a[i]);
  return r;
}

// Newton interpolation in the prime field; evaluation points are small
// positive integers, so the divided differences only ever divide by values
// covered by a linear-time inverse table
MPoly minterp(const std::vector<u64>& xs, std::vector<u64> ys, const ModP& M) {
  size_t n = xs.size();
  u64 top = xs.empty() ? 1 : xs.back();
  std::vector<u64> inv_tab(top + 1, 1);
  for (u64 i = 2; i <= top; ++i) inv_tab[i] = M.mul(M.p - M.p / i, inv_tab[M.p % i]);
  for (size_t lvl = 1; lvl < n; ++lvl)
    for (size_t j = n - 1; j >= lvl; --j)
      ys[j] = M.mul(M.sub(ys[j], ys[j - 1]), inv_tab[xs[j] - xs[j - lvl]]);
  MPoly p{ys[n - 1]};
  for (size_t j = n - 1; j-- > 0;) {
    MPoly np(p.size() + 1, 0);
    for (size_t i = 0; i < p.size(); i++) {
      np[i + 1] = M.add(np[i + 1], p[i]);
      np[i] = M.sub(np[i], M.mul(p[i], xs[j]));
    }
    np[0] = M.add(np[0], ys[j]);
    p = std::move(np);
  }
  mtrim(p);
  return p;
}

// ---- integer polynomial layer ----
using ZPoly = std::vector<Int>;
using ZBPoly = std::vector<ZPoly>;  // t-major, coefficients in Z[q]

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}
void zbtrim(ZBPoly& a) {
  while (!a.empty()) {
    ztrim(a.back());
    if (!a.back().empty()) break;
    a.pop_back();
  }
  for (auto& c : a) ztrim(c);
}

void zprimitive(ZPoly& a) {
  Int g(0);
  for (auto& c : a) g = gcd(g, c);
  if (sgn(g) != 0)
    for (auto& c : a) c /= g;
  if (!a.empty() && sgn(a.back()) < 0)
    for (auto& c : a) c = -c;
}

UPoly z_to_u(const ZPoly& a) {
  UPoly r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = Rat(a[i]);
  return r;
}

MPoly z_to_m(const ZPoly& a, const ModP& M) {
  MPoly r(a.size());
  for (size_t i = 0; i < a.size(); i++) {
    u64 v = zmod(a[i], M.p);
    r[i] = v;
  }
  mtrim(r);
  return r;
}

Int zint_content(const ZPoly& a) {
  Int g(0);
  for (auto& c : a) g = gcd(g, c);
  return g;
}

ZPoly zumul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

// exact division in Z[q]; returns false when the quotient would leave Z[q]
bool zudiv(ZPoly a, const ZPoly& b, ZPoly& q) {
  ztrim(a);
  if (b.empty()) return false;
  if (a.empty()) {
    q.clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  q.assign(a.size() - b.size() + 1, Int(0));
  while (a.size() >= b.size()) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    Int f = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); i++) a[off + i] -= f * b[i];
    ztrim(a);
    if (a.empty()) return true;
  }
  return false;
}

// divisibility test in Z[q][t]; both arguments integer-primitive, so this
// coincides with divisibility over the rationals
bool zdivides2(const ZBPoly& A, const ZBPoly& G) {
  ZBPoly r = A;
  ZPoly u;
  while (r.size() >= G.size()) {
    if (r.back().empty()) {
      r.pop_back();
      continue;
    }
    if (!zudiv(r.back(), G.back(), u)) return false;
    size_t off = r.size() - G.size();
    for (size_t i = 0; i + 1 < G.size(); i++) {
      ZPoly t = zumul(u, G[i]);
      ZPoly& dst = r[off + i];
      if (dst.size() < t.size()) dst.resize(t.size(), Int(0));
      for (size_t j = 0; j < t.size(); j++) dst[j] -= t[j];
      ztrim(dst);
    }
    r.pop_back();
  }
  for (auto& c : r)
    if (!c.empty()) return false;
  return true;
}

// full gcd in Z[q], integer content included, by CRT over prime images with
// the leading coefficient imposed
ZPoly zgcd1(ZPoly A, ZPoly B) {
  Int ci = gcd(zint_content(A), zint_content(B));
  zprimitive(A);
  zprimitive(B);
  auto with_content = [&ci](ZPoly g) {
    for (auto& c : g) c *= ci;
    return g;
  };
  Int lg = gcd(A.back(), B.back());
  std::vector<Int> acc;
  Int modulus(0);
  long dmin = -1;
  for (u64 pr : prime_list()) {
    ModP M{pr};
    if (zmod(A.back(), pr) == 0 || zmod(B.back(), pr) == 0) continue;
    MPoly g = mgcd(z_to_m(A, M), z_to_m(B, M), M);
    long d = static_cast<long>(g.size()) - 1;
    if (d == 0) return ZPoly{ci};
    if (dmin < 0 || d < dmin) {
      dmin = d;
      acc.assign(d + 1, Int(0));
      modulus = 0;
    }
    if (d > dmin) continue;
    u64 sc = zmod(lg, pr);
    for (auto& c : g) c = M.mul(c, sc);
    g.resize(dmin + 1, 0);
    if (sgn(modulus) == 0) {
      for (long i = 0; i <= dmin; i++) acc[i] = Int(g[i]);
      modulus = Int(static_cast<unsigned long>(pr));
    } else {
      u64 mi = M.inv(zmod(modulus, pr));
      for (long i = 0; i <= dmin; i++) {
        u64 diff = M.mul(M.sub(g[i], zmod(acc[i], pr)), mi);
        acc[i] += modulus * Int(static_cast<unsigned long>(diff));
      }
      modulus *= Int(static_cast<unsigned long>(pr));
    }
    // symmetric lift, primitive part, trial division
    ZPoly cand(acc.size());
    Int half = modulus / 2;
    for (size_t i = 0; i < acc.size(); i++) {
      Int v = acc[i] % modulus;
      if (sgn(v) < 0) v += modulus;
      if (v > half) v -= modulus;
      cand[i] = v;
    }
    ztrim(cand);
    if (cand.empty() || static_cast<long>(cand.size()) - 1 != dmin) continue;
    zprimitive(cand);
    ZPoly qq;
    if (zudiv(A, cand, qq) && zudiv(B, cand, qq)) return with_content(std::move(cand));
  }
  // last resort: integer primitive PRS
  IPoly ia(A), ib(B);
  if (ia.size() < ib.size()) std::swap(ia, ib);
  while (!ib.empty()) {
    IPoly r = iprem(ia, ib);
    ia = std::move(ib);
    ib = std::move(r);
  }
  iprimitive(ia);
  return with_content(std::move(ia));
}

ZPoly zcontent2(const ZBPoly& a) {
  ZPoly g;
  for (auto& c : a) {
    if (c.empty()) continue;
    if (g.empty()) {
      g = c;
      if (sgn(g.back()) < 0)
        for (auto& v : g) v = -v;
    } else {
      g = zgcd1(g, c);
    }
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

ZBPoly zdiv2_u(const ZBPoly& a, const ZPoly& s) {
  ZBPoly r(a.size());
  for (size_t i = 0; i < a.size(); i++)
    if (!a[i].empty() && !zudiv(a[i], s, r[i]))
      throw std::logic_error("zdiv2_u: not exact");
  zbtrim(r);
  return r;
}

long zdegq(const ZBPoly& a) {
  long m = 0;
  for (auto& c : a) m = std::max(m, static_cast<long>(c.size()) - 1);
  return m;
}

BPoly zb_to_b(const ZBPoly& a) {
  BPoly r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = z_to_u(a[i]);
  btrim(r);
  return r;
}

// bivariate gcd in Z[q,t] by per-prime evaluation/interpolation and CRT
// across primes, verified by pseudo-remainder; falls back to the primitive
// PRS if the prime budget is exhausted
ZBPoly zgcd2(ZBPoly A, ZBPoly B) {
  zbtrim(A);
  zbtrim(B);
  ZPoly ca = zcontent2(A), cb = zcontent2(B);
  ZPoly cg = zgcd1(ca, cb);
  A = zdiv2_u(A, ca);
  B = zdiv2_u(B, cb);
  auto scale_back = [&cg](const ZBPoly& g) {
    ZBPoly r(g.size());
    for (size_t i = 0; i < g.size(); i++) r[i] = zumul(g[i], cg);
    return r;
  };
  if (A.size() == 1 || B.size() == 1) return ZBPoly{cg};
  ZPoly lg = zgcd1(A.back(), B.back());
  long D = static_cast<long>(lg.size()) - 1 + std::min(zdegq(A), zdegq(B));
  std::vector<std::vector<Int>> acc;
  Int modulus(0);
  long dmin = -1;
  for (u64 pr : prime_list()) {
    ModP M{pr};
    std::vector<MPoly> Am(A.size()), Bm(B.size());
    for (size_t i = 0; i < A.size(); i++) Am[i] = z_to_m(A[i], M);
    for (size_t i = 0; i < B.size(); i++) Bm[i] = z_to_m(B[i], M);
    if (Am.back().empty() || Bm.back().empty()) continue;
    MPoly lgm = z_to_m(lg, M);
    if (static_cast<long>(lgm.size()) != static_cast<long>(lg.size())) continue;
    // collect univariate images in t at enough points of the prime field
    std::vector<u64> xs;
    std::vector<MPoly> img;
    long dp = -1;
    for (u64 x = 1; x < M.p && static_cast<long>(xs.size()) < D + 1; ++x) {
      if (meval(Am.back(), x, M) == 0 || meval(Bm.back(), x, M) == 0) continue;
      MPoly at(Am.size()), bt(Bm.size());
      for (size_t i = 0; i < Am.size(); i++) at[i] = meval(Am[i], x, M);
      for (size_t i = 0; i < Bm.size(); i++) bt[i] = meval(Bm[i], x, M);
      MPoly g = mgcd(at, bt, M);
      long d = static_cast<long>(g.size()) - 1;
      if (d == 0) return ZBPoly{cg};
      if (dp < 0 || d < dp) {
        dp = d;
        xs.clear();
        img.clear();
      }
      if (d > dp) continue;
      u64 sc = meval(lgm, x, M);
      for (auto& c : g) c = M.mul(c, sc);
      g.resize(dp + 1, 0);
      xs.push_back(x);
      img.push_back(std::move(g));
    }
    if (static_cast<long>(xs.size()) < D + 1) continue;
    // interpolate each t-coefficient in q
    std::vector<MPoly> Gp(dp + 1);
    for (long k = 0; k <= dp; ++k) {
      std::vector<u64> vals(xs.size());
      for (size_t j = 0; j < xs.size(); j++) vals[j] = img[j][k];
      Gp[k] = minterp(xs, std::move(vals), M);
      Gp[k].resize(D + 1, 0);
    }
    if (dmin < 0 || dp < dmin) {
      dmin = dp;
      acc.assign(dp + 1, std::vector<Int>(D + 1, Int(0)));
      modulus = 0;
    }
    if (dp > dmin) continue;
    if (sgn(modulus) == 0) {
      for (long k = 0; k <= dmin; k++)
        for (long i = 0; i <= D; i++) acc[k][i] = Int(Gp[k][i]);
      modulus = Int(static_cast<unsigned long>(pr));
    } else {
      u64 mi = M.inv(zmod(modulus, pr));
      for (long k = 0; k <= dmin; k++)
        for (long i = 0; i <= D; i++) {
          u64 diff = M.mul(M.sub(Gp[k][i], zmod(acc[k][i], pr)), mi);
          acc[k][i] += modulus * Int(static_cast<unsigned long>(diff));
        }
      modulus *= Int(static_cast<unsigned long>(pr));
    }
    // symmetric lift and verification
    ZBPoly cand(dmin + 1);
    Int half = modulus / 2;
    for (long k = 0; k <= dmin; k++) {
      cand[k].resize(D + 1);
      for (long i = 0; i <= D; i++) {
        Int v = acc[k][i] % modulus;
        if (sgn(v) < 0) v += modulus;
        if (v > half) v -= modulus;
        cand[k][i] = v;
      }
    }
    zbtrim(cand);
    if (cand.empty() || static_cast<long>(cand.size()) - 1 != dmin) continue;
    ZPoly cc = zcontent2(cand);
    cand = zdiv2_u(cand, cc);
    if (zdivides2(A, cand) && zdivides2(B, cand)) return scale_back(cand);
  }
  // last resort: rational primitive PRS on the primitive parts
  BPoly a = zb_to_b(A), b = zb_to_b(B);
  if (a.size() < b.size()) std::swap(a, b);
  while (!bzero(b)) {
    BPoly r = bprem(a, b);
    if (!bzero(r)) r = bprimitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.size() == 1) a[0] = UPoly{Rat(1)};
  // clear the rational scalars the PRS may have left
  ZBPoly z(a.size());
  for (size_t i = 0; i < a.size(); i++) {
    Int l(1);
    for (auto& c : a[i]) l = lcm(l, Int(c.get_den()));
    z[i].resize(a[i].size());
    for (size_t j = 0; j < a[i].size(); j++) z[i][j] = Int(a[i][j].get_num()) * (l / Int(a[i][j].get_den()));
  }
  zbtrim(z);
  ZPoly zc = zcontent2(z);
  z = zdiv2_u(z, zc);
  return scale_back(z);
}

ZBPoly to_zbpoly(const LaurentPoly& p, long qmin, long tmin) {
  Int l(1);
  for (auto& [e, v] : p.terms()) l = lcm(l, Int(v.get_den()));
  ZBPoly b;
  for (auto& [e, v] : p.terms()) {
    size_t ti = static_cast<size_t>(e.t - tmin), qi = static_cast<size_t>(e.q - qmin);
    if (b.size() <= ti) b.resize(ti + 1);
    if (b[ti].size() <= qi) b[ti].resize(qi + 1, Int(0));
    b[ti][qi] = Int(v.get_num()) * (l / Int(v.get_den()));
  }
  zbtrim(b);
  return b;
}

LaurentPoly from_zbpoly(const ZBPoly& b) {
  LaurentPoly p;
  for (size_t ti = 0; ti < b.size(); ti++)
    for (size_t qi = 0; qi < b[ti].size(); qi++)
      if (sgn(b[ti][qi]) != 0)
        p.add_term({static_cast<long>(qi), static_cast<long>(ti)}, Rat(b[ti][qi]));
  return p;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly& n = a.is_zero() ? b : a;
    LaurentPoly r = n.shifted(-n.min_qexp(), -n.min_texp());
    Rat c = r.content();
    r = r * (Rat(1) / c);
    if (sgn(r.leading().second) < 0) r = -r;
    return r;
  }
  if (a.terms().size() == 1 || b.terms().size() == 1) return LaurentPoly::monomial(0, 0);
  ZBPoly pa = to_zbpoly(a, a.min_qexp(), a.min_texp());
  ZBPoly pb = to_zbpoly(b, b.min_qexp(), b.min_texp());
  ZBPoly g = zgcd2(std::move(pa), std::move(pb));
  LaurentPoly r = from_zbpoly(g);
  r = r.shifted(-r.min_qexp(), -r.min_texp());
  Rat c = r.content();
  if (!is_zero(c)) r = r * (Rat(1) / c);
  if (sgn(r.leading().second) < 0) r = -r;
  return r;
}

std::string exp_str(const char* var, long e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  // graded-lex descending
  std::vector<std::pair<Exp2, Rat>> v(c_.begin(), c_.end());
  std::sort(v.begin(), v.end(),
            [](const auto& x, const auto& y) { return grlex_less(y.first, x.first); });
  std::string s;
  bool first = true;
  for (auto& [e, c] : v) {
    Rat a = c;
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? "-" : "+";
    }
    std::string mono = exp_str("q", e.q) + exp_str("t", e.t);
    if (mono.empty())
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + mono;
  }
  return s;
}

LaurentPoly at_q_m1(const LaurentPoly& p) {
  LaurentPoly r;
  for (auto& [e, v] : p.terms()) r.add_term({0, e.t}, (e.q % 2 == 0) ? v : -v);
  return r;
}

GaussTPoly at_q_i(const LaurentPoly& p) {
  GaussTPoly r;
  for (auto& [e, v] : p.terms()) {
    long m = ((e.q % 4) + 4) % 4;
    GaussRat c;
    switch (m) {
      case 0: c = GaussRat(v); break;
      case 1: c = GaussRat(Rat(0), v); break;
      case 2: c = GaussRat(-v); break;
      default: c = GaussRat(Rat(0), -v); break;
    }
    r.add_term(e.t, c);
  }
  return r;
}

std::string GaussTPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!first) s += " + ";
    first = false;
    std::string mono = exp_str("t", it->first);
    s += "(" + it->second.str() + ")";
    if (!mono.empty()) s += mono;
  }
  return s;
}

}  // namespace wqt
