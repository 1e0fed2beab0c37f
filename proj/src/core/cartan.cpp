#include "cartan.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <utility>

namespace wqt {

namespace {

// q^a t^-b + s q^-a t^b
LaurentPoly qt_pair(long a, long b, int s) {
  LaurentPoly p = LaurentPoly::monomial(a, -b);
  p.add_term({-a, b}, Rat(s));
  return p;
}

template <typename T>
bool elem_zero(const T& x) {
  return x.is_zero();
}
template <>
bool elem_zero<Rat>(const Rat& x) {
  return sgn(x) == 0;
}

template <typename T>
std::vector<std::vector<T>> gj_inverse(std::vector<std::vector<T>> m, const T& one) {
  const size_t n = m.size();
  std::vector<std::vector<T>> inv(n, std::vector<T>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = one;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && elem_zero(m[p][c])) ++p;
    if (p == n) throw SingularMatrix("matrix inverse: no pivot in column " + std::to_string(c));
    if (p != c) {
      std::swap(m[p], m[c]);
      std::swap(inv[p], inv[c]);
    }
    T piv = m[c][c];
    for (size_t j = 0; j < n; ++j) {
      m[c][j] = m[c][j] / piv;
      inv[c][j] = inv[c][j] / piv;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || elem_zero(m[i][c])) continue;
      T f = m[i][c];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] = m[i][j] - f * m[c][j];
        inv[i][j] = inv[i][j] - f * inv[c][j];
      }
    }
  }
  return inv;
}

long rank_floor(Series s) {
  switch (s) {
    case Series::B:
    case Series::C:
      return 2;
    case Series::D:
      return 3;
    default:
      return 1;
  }
}

// adjacency inner products of the simple roots, maximal root normalized to
// squared length 2
RatMat gram_matrix(Series series, long l) {
  RatMat g(l, std::vector<Rat>(l, Rat(0)));
  auto link = [&](long i, long j, const Rat& v) {
    g[i][j] = v;
    g[j][i] = v;
  };
  switch (series) {
    case Series::A:
      for (long i = 0; i < l; ++i) g[i][i] = 2;
      for (long i = 0; i + 1 < l; ++i) link(i, i + 1, Rat(-1));
      break;
    case Series::B:
      for (long i = 0; i < l; ++i) g[i][i] = i == l - 1 ? 1 : 2;
      for (long i = 0; i + 1 < l; ++i) link(i, i + 1, Rat(-1));
      break;
    case Series::C:
      for (long i = 0; i < l; ++i) g[i][i] = i == l - 1 ? 2 : 1;
      for (long i = 0; i + 2 < l; ++i) link(i, i + 1, rat(-1, 2));
      link(l - 2, l - 1, Rat(-1));
      break;
    case Series::D:
      for (long i = 0; i < l; ++i) g[i][i] = 2;
      for (long i = 0; i + 2 < l; ++i) link(i, i + 1, Rat(-1));
      link(l - 3, l - 1, Rat(-1));
      break;
    default:
      throw UnsupportedSeries("gram_matrix: no root realization for this series");
  }
  return g;
}

}  // namespace

std::string series_name(Series s) {
  switch (s) {
    case Series::A:
      return "A";
    case Series::B:
      return "B";
    case Series::C:
      return "C";
    case Series::D:
      return "D";
    case Series::A2twisted:
      return "A2twisted";
  }
  throw UnsupportedSeries("series_name: unknown series");
}

Series series_from_name(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
  if (n == "a") return Series::A;
  if (n == "b") return Series::B;
  if (n == "c") return Series::C;
  if (n == "d") return Series::D;
  if (n == "a2twisted" || n == "a2") return Series::A2twisted;
  throw UnsupportedSeries("series_from_name: '" + name + "'");
}

AlgebraSpec build_algebra(Series series, long rank) {
  if (rank < rank_floor(series))
    throw RankTooSmall("build_algebra: " + series_name(series) + " needs rank >= " +
                       std::to_string(rank_floor(series)));
  const long l = rank;
  AlgebraSpec s;
  s.series = series;
  s.rank = l;

  if (series == Series::A2twisted) {
    // only the deformed B matrix is defined directly for this family; the
    // classical data is its q = t = 1 limit, and the Weyl-vector pairings are
    // read off the prefactors of the generating fields
    s.r_dual = 2;
    s.r.assign(l, 2);
    FunMat tb = twisted_B(l);
    s.b_classical.assign(l, std::vector<long>(l, 0));
    s.gram.assign(l, std::vector<Rat>(l, Rat(0)));
    for (long i = 0; i < l; ++i)
      for (long j = 0; j < l; ++j) {
        s.b_classical[i][j] = to_long(tb[i][j].eval_rat(Rat(1), Rat(1)));
        s.gram[i][j] = Rat(s.b_classical[i][j]) / s.r_dual;
      }
    s.cartan.assign(l, std::vector<long>(l, 0));
    s.incidence.assign(l, std::vector<long>(l, 0));
    for (long i = 0; i < l; ++i)
      for (long j = 0; j < l; ++j) {
        s.cartan[i][j] = to_long(2 * s.gram[i][j] / s.gram[i][i]);
        s.incidence[i][j] = (i == j ? 2 : 0) - s.cartan[i][j];
      }
    s.rho_alpha.assign(l, Rat(1));
    s.rhov_alpha.assign(l, Rat(1));
    s.rho_omega.clear();
    s.rhov_omega.clear();
    for (long i = 1; i <= l; ++i) {
      Rat half_n = Rat(i * (2 * l + 1 - i)) / 2;
      s.rho_omega.push_back(half_n);
      s.rhov_omega.push_back(half_n);
    }
    s.coxeter = 2 * l + 1;
    s.dual_coxeter = 2 * l + 1;
    return s;
  }

  s.gram = gram_matrix(series, l);
  s.r_dual = (series == Series::B || series == Series::C) ? 2 : 1;
  s.r.clear();
  for (long i = 0; i < l; ++i) s.r.push_back(to_long(Rat(s.r_dual) * s.gram[i][i] / 2));

  s.cartan.assign(l, std::vector<long>(l, 0));
  s.incidence.assign(l, std::vector<long>(l, 0));
  s.b_classical.assign(l, std::vector<long>(l, 0));
  for (long i = 0; i < l; ++i)
    for (long j = 0; j < l; ++j) {
      s.cartan[i][j] = to_long(2 * s.gram[i][j] / s.gram[i][i]);
      s.incidence[i][j] = (i == j ? 2 : 0) - s.cartan[i][j];
      s.b_classical[i][j] = to_long(Rat(s.r_dual) * s.gram[i][j]);
    }

  switch (series) {
    case Series::A:
      s.coxeter = l + 1;
      s.dual_coxeter = l + 1;
      break;
    case Series::B:
      s.coxeter = 2 * l;
      s.dual_coxeter = 2 * l - 1;
      break;
    case Series::C:
      s.coxeter = 2 * l;
      s.dual_coxeter = l + 1;
      break;
    default:
      s.coxeter = 2 * l - 2;
      s.dual_coxeter = 2 * l - 2;
      break;
  }

  // rho = sum of fundamental weights, rho_check its coroot twin; both are
  // solved for in the simple-root basis through the inner-product matrix
  RatMat ginv = rat_inverse(s.gram);
  std::vector<Rat> c_rho(l, Rat(0)), c_rhov(l, Rat(0));
  for (long i = 0; i < l; ++i)
    for (long k = 0; k < l; ++k) {
      c_rho[i] += ginv[i][k] * s.gram[k][k] / 2;
      c_rhov[i] += ginv[i][k];
    }
  s.rho_alpha.assign(l, Rat(0));
  s.rhov_alpha.assign(l, Rat(0));
  s.rho_omega.assign(l, Rat(0));
  s.rhov_omega.assign(l, Rat(0));
  for (long i = 0; i < l; ++i) {
    for (long k = 0; k < l; ++k) {
      s.rho_alpha[i] += c_rho[k] * s.gram[k][i];
      s.rhov_alpha[i] += c_rhov[k] * s.gram[k][i];
    }
    s.rho_omega[i] = c_rho[i] * s.gram[i][i] / 2;
    s.rhov_omega[i] = c_rhov[i] * s.gram[i][i] / 2;
  }
  return s;
}

DeformedMatrices deformed_matrices(const AlgebraSpec& spec) {
  if (spec.series == Series::A2twisted)
    throw UnsupportedSeries("deformed_matrices: the twisted family defines B directly");
  const long l = spec.rank;
  DeformedMatrices m;
  m.Cqt.assign(l, std::vector<RatFun>(l));
  m.Dqt.assign(l, std::vector<RatFun>(l));
  for (long i = 0; i < l; ++i) {
    m.Cqt[i][i] = RatFun(qt_pair(spec.r[i], 1, +1));
    m.Dqt[i][i] = RatFun(qint(spec.r[i]));
    for (long j = 0; j < l; ++j)
      if (j != i && spec.incidence[i][j] != 0)
        m.Cqt[i][j] = -RatFun(qint(spec.incidence[i][j]));
  }
  m.Bqt = fun_mul(m.Dqt, m.Cqt);
  m.Mqt = fun_mul(m.Dqt, fun_inverse(m.Cqt));
  return m;
}

DetCheck det_C_check(const AlgebraSpec& spec) {
  DetCheck r;
  const long l = spec.rank;
  switch (spec.series) {
    case Series::A:
      r.closed = RatFun(qt_pair(l + 1, l + 1, -1), qt_pair(1, 1, -1));
      break;
    case Series::B:
      r.closed = RatFun(qt_pair(2 * l - 1, l, +1));
      break;
    case Series::C:
      r.closed = RatFun(qt_pair(l + 1, l, +1));
      break;
    default:
      throw NoClosedForm("det_C_check: no determinant formula for " + series_name(spec.series));
  }
  r.computed = fun_det(deformed_matrices(spec).Cqt);
  r.equal = r.computed == r.closed;
  return r;
}

FunMat closed_form_M(const AlgebraSpec& spec) {
  const long l = spec.rank;
  FunMat M(l, std::vector<RatFun>(l));
  auto bm = [](long a, long b) { return qt_pair(a, b, -1); };
  auto bp = [](long a, long b) { return qt_pair(a, b, +1); };
  switch (spec.series) {
    case Series::A: {
      LaurentPoly den = bm(l + 1, l + 1);
      for (long i = 1; i <= l; ++i)
        for (long j = i; j <= l; ++j)
          M[i - 1][j - 1] = RatFun(bm(i, i) * bm(l + 1 - j, l + 1 - j), den);
      break;
    }
    case Series::B: {
      LaurentPoly den = bm(2, 1) * bp(2 * l - 1, l);
      LaurentPoly two = qint(2);
      for (long i = 1; i <= l; ++i)
        for (long j = i; j <= l; ++j) {
          LaurentPoly num;
          if (j < l)
            num = bm(2 * i, i) * bp(2 * l - 1 - 2 * j, l - j) * two;
          else if (i < l)
            num = bm(2 * i, i) * two;
          else
            num = bm(2 * l, l);
          M[i - 1][j - 1] = RatFun(num, den);
        }
      break;
    }
    case Series::C: {
      LaurentPoly den = bm(1, 1) * bp(l + 1, l);
      for (long i = 1; i <= l; ++i)
        for (long j = i; j <= l; ++j)
          M[i - 1][j - 1] = RatFun(bm(i, i) * bp(l + 1 - j, l - j), den);
      break;
    }
    case Series::D: {
      LaurentPoly den = bp(l - 1, l - 1);
      LaurentPoly conden = bp(1, 1) * den;
      // the two fork nodes are interchangeable, so the chain rows repeat the
      // same entry in both of the last two columns
      for (long i = 1; i <= l; ++i)
        for (long j = i; j <= l; ++j) {
          if (j <= l - 2)
            M[i - 1][j - 1] = RatFun(bm(i, i) * bp(l - 1 - j, l - 1 - j), den);
          else if (i <= l - 2)
            M[i - 1][j - 1] = RatFun(bm(i, i), den);
          else if (i == l - 1 && j == l)
            M[i - 1][j - 1] = RatFun(bm(l - 2, l - 2), conden);
          else
            M[i - 1][j - 1] = RatFun(bm(l, l), conden);
        }
      break;
    }
    default:
      throw UnsupportedSeries("closed_form_M: no table for " + series_name(spec.series));
  }
  for (long i = 0; i < l; ++i)
    for (long j = 0; j < i; ++j) M[i][j] = M[j][i];
  return M;
}

ProportionalityReport M_proportionality_check(const AlgebraSpec& spec) {
  FunMat closed = closed_form_M(spec);
  FunMat inv = deformed_matrices(spec).Mqt;
  ProportionalityReport rep;
  rep.uniform = true;
  for (long i = 0; i < spec.rank; ++i)
    for (long j = 0; j < spec.rank; ++j) {
      if (closed[i][j].is_zero() || inv[i][j].is_zero())
        throw ZeroEntry("M_proportionality_check: zero entry at (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ")");
      RatFun r = closed[i][j] / inv[i][j];
      if (i == 0 && j == 0)
        rep.ratio = r;
      else if (r != rep.ratio)
        rep.uniform = false;
    }
  return rep;
}

FunMat twisted_B(long rank) {
  if (rank < 1) throw RankTooSmall("twisted_B: rank >= 1 required");
  FunMat B(rank, std::vector<RatFun>(rank));
  LaurentPoly two = qint(2);
  LaurentPoly last = LaurentPoly::monomial(2, -1);
  last.add_term({0, 0}, Rat(-1));
  last.add_term({-2, 1}, Rat(1));
  for (long i = 0; i < rank; ++i)
    for (long j = 0; j < rank; ++j) {
      if (i == rank - 1 && j == rank - 1)
        B[i][j] = RatFun(two * last);
      else if (i == j)
        B[i][j] = RatFun(two * qt_pair(2, 1, +1));
      else if (i - j == 1 || j - i == 1)
        B[i][j] = -RatFun(two);
    }
  return B;
}

FunMat fun_mul(const FunMat& a, const FunMat& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  FunMat r(n, std::vector<RatFun>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t c = 0; c < k; ++c) {
      if (a[i][c].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) {
        if (b[c][j].is_zero()) continue;
        r[i][j] += a[i][c] * b[c][j];
      }
    }
  return r;
}

RatFun fun_det(FunMat m) {
  const size_t n = m.size();
  RatFun d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return RatFun();
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      RatFun f = m[i][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

FunMat fun_inverse(FunMat m) { return gj_inverse(std::move(m), RatFun(1)); }

RatMat rat_inverse(RatMat m) { return gj_inverse(std::move(m), Rat(1)); }

}  // namespace wqt
