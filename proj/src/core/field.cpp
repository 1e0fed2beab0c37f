#include "field.hpp"

#include <algorithm>
#include <cstdlib>

namespace wqt {

namespace {

// graded-lex order on shift monomials
bool shift_less(const Monomial& a, const Monomial& b) {
  Rat da = a.qe + a.te, db = b.qe + b.te;
  if (da != db) return da < db;
  if (a.qe != b.qe) return a.qe < b.qe;
  if (a.te != b.te) return a.te < b.te;
  return a.xe < b.xe;
}

RatFun qbr(long r) { return RatFun(LaurentPoly::qpow(r) - LaurentPoly::qpow(-r)); }
RatFun tbr() { return RatFun(LaurentPoly::tpow(1) - LaurentPoly::tpow(-1)); }

RatFun rf_pow(const RatFun& base, long e) {
  RatFun r(1);
  for (long k = 0; k < std::labs(e); ++k) r *= base;
  return e >= 0 ? r : r.inv();
}

bool is_a_based(Family f) {
  return f == Family::A || f == Family::Splus || f == Family::Sminus;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Y: return "Y";
    case Family::A: return "A";
    case Family::Splus: return "S+";
    case Family::Sminus: return "S-";
    case Family::Vplus: return "V+";
    case Family::Vminus: return "V-";
  }
  return "?";
}

int family_rank(Family f) { return static_cast<int>(f); }

bool GenFactor::operator<(const GenFactor& o) const {
  if (fam != o.fam) return family_rank(fam) < family_rank(o.fam);
  if (index != o.index) return index < o.index;
  if (shift != o.shift) return shift_less(shift, o.shift);
  return eps > o.eps;
}

bool ZeroModeRecord::operator==(const ZeroModeRecord& o) const {
  return root_charge == o.root_charge && weight_charge == o.weight_charge &&
         z_momentum == o.z_momentum && q_momentum == o.q_momentum;
}

void ElementaryField::normalize() {
  std::sort(factors.begin(), factors.end());
  std::vector<GenFactor> out;
  size_t i = 0;
  while (i < factors.size()) {
    size_t j = i;
    long net = 0;
    while (j < factors.size() && factors[j].same_slot(factors[i])) {
      net += factors[j].eps;
      ++j;
    }
    GenFactor g = factors[i];
    g.eps = net > 0 ? 1 : -1;
    for (long k = 0; k < std::labs(net); ++k) out.push_back(g);
    i = j;
  }
  factors = std::move(out);
}

ElementaryField ElementaryField::shifted(const Monomial& mu) const {
  ElementaryField r = *this;
  for (auto& g : r.factors) g.shift = g.shift * mu;
  r.normalize();
  return r;
}

bool ElementaryField::operator<(const ElementaryField& o) const {
  if (factors.size() != o.factors.size()) return factors.size() < o.factors.size();
  for (size_t k = 0; k < factors.size(); ++k) {
    if (factors[k] == o.factors[k]) continue;
    return factors[k] < o.factors[k];
  }
  if (mono != o.mono) return mono < o.mono;
  return pref < o.pref;
}

void FieldSum::add(ElementaryField f) {
  if (f.is_zero()) return;
  f.normalize();
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (it->same_shape(f)) {
      it->pref += f.pref;
      if (it->pref.is_zero()) terms.erase(it);
      return;
    }
  }
  terms.push_back(std::move(f));
}

void FieldSum::scale(const RatFun& c) {
  if (c.is_zero()) {
    terms.clear();
    return;
  }
  for (auto& f : terms) f.pref *= c;
}

FieldAlgebra::FieldAlgebra(const AlgebraSpec& spec, long series_order)
    : spec_(spec), order_(series_order) {
  const long l = spec_.rank;
  if (spec_.series == Series::A2twisted) {
    B_ = twisted_B(l);
    RatFun two = RatFun(LaurentPoly::qpow(1) + LaurentPoly::qpow(-1));
    D_.assign(l, std::vector<RatFun>(l, RatFun(0)));
    C_.assign(l, std::vector<RatFun>(l, RatFun(0)));
    for (long i = 0; i < l; ++i) {
      D_[i][i] = two;
      for (long j = 0; j < l; ++j) C_[i][j] = B_[i][j] / two;
    }
    X_ = C_;
    M_ = fun_inverse(B_);
    for (long i = 0; i < l; ++i)
      for (long j = 0; j < l; ++j) M_[i][j] *= two * two;
  } else {
    DeformedMatrices dm = deformed_matrices(spec_);
    B_ = dm.Bqt;
    C_ = dm.Cqt;
    D_ = dm.Dqt;
    M_ = dm.Mqt;
    X_.assign(l, std::vector<RatFun>(l, RatFun(0)));
    for (long i = 0; i < l; ++i)
      for (long j = 0; j < l; ++j) X_[i][j] = D_[i][i] * C_[i][j] / D_[j][j];
  }
  Xcl_.assign(l, std::vector<Rat>(l, Rat(0)));
  for (long i = 0; i < l; ++i)
    for (long j = 0; j < l; ++j) Xcl_[i][j] = X_[i][j].eval_rat(Rat(1), Rat(1));
  Xclinv_ = rat_inverse(Xcl_);
}

int FieldAlgebra::sigma(Family f) const {
  switch (f) {
    case Family::Y:
    case Family::A:
    case Family::Splus:
    case Family::Vminus:
      return 1;
    case Family::Sminus:
    case Family::Vplus:
      return -1;
  }
  return 1;
}

ElementaryField FieldAlgebra::generator(Family fam, long i) const {
  return generator(fam, i, Monomial(), 1);
}

ElementaryField FieldAlgebra::generator(Family fam, long i, const Monomial& shift,
                                        int eps) const {
  if (i < 1 || i > spec_.rank) throw std::out_of_range("generator: node index out of range");
  if (eps != 1 && eps != -1) throw std::invalid_argument("generator: exponent must be +-1");
  ElementaryField f;
  f.factors.push_back(GenFactor{fam, i, shift, eps});
  return f;
}

ElementaryField FieldAlgebra::product(const std::vector<GenFactor>& factors) const {
  ElementaryField f;
  for (const auto& g : factors) {
    if (g.index < 1 || g.index > spec_.rank)
      throw std::out_of_range("product: node index out of range");
    f.factors.push_back(g);
  }
  f.normalize();
  return f;
}

Monomial FieldAlgebra::intrinsic_prefactor(Family fam, long i) const {
  const Rat rd(spec_.r_dual);
  switch (fam) {
    case Family::Y:
      return Monomial(Rat(-2) * rd * spec_.rho_omega[i - 1],
                      Rat(2) * spec_.rhov_omega[i - 1]);
    case Family::A:
      return Monomial(Rat(-2) * rd * spec_.rho_alpha[i - 1],
                      Rat(2) * spec_.rhov_alpha[i - 1]);
    default:
      return Monomial();
  }
}

RatFun FieldAlgebra::total_scalar(const ElementaryField& f) const {
  Monomial m = f.mono;
  for (const auto& g : f.factors) {
    Monomial p = intrinsic_prefactor(g.fam, g.index);
    m = m * (g.eps > 0 ? p : p.inv());
  }
  return f.pref * m.to_ratfun();
}

Pairing FieldAlgebra::pairing_poly(Family f1, long i1, Family f2, long i2) const {
  if (i1 < 1 || i1 > spec_.rank || i2 < 1 || i2 > spec_.rank)
    throw std::out_of_range("pairing: node index out of range");
  const long r1 = spec_.r[i1 - 1], r2 = spec_.r[i2 - 1];
  const bool a1 = is_a_based(f1), a2 = is_a_based(f2);
  RatFun p;
  if (a1 && a2) {
    p = qbr(1) * tbr() * B_[i1 - 1][i2 - 1];
  } else if (a1 && !a2) {
    p = (i1 == i2) ? qbr(r1) * tbr() : RatFun(0);
  } else if (!a1 && a2) {
    p = (i1 == i2) ? qbr(r2) * tbr() : RatFun(0);
  } else {
    p = qbr(1) * tbr() * M_[i1 - 1][i2 - 1];
  }
  switch (f1) {
    case Family::Splus:
    case Family::Vplus:
      p /= qbr(r1);
      break;
    case Family::Sminus:
    case Family::Vminus:
      p /= tbr();
      break;
    default:
      break;
  }
  switch (f2) {
    case Family::Splus:
    case Family::Vplus:
      p /= -qbr(r2);
      break;
    case Family::Sminus:
    case Family::Vminus:
      p /= -tbr();
      break;
    default:
      break;
  }
  return Pairing{!p.is_poly(), p};
}

std::vector<BGrad> FieldAlgebra::charge_shift(const GenFactor& g) const {
  const long l = spec_.rank;
  std::vector<BGrad> d(l);
  const long j = g.index - 1;
  switch (g.fam) {
    case Family::Splus:
      d[j] = BGrad::beta(Rat(-1));
      break;
    case Family::Sminus:
      d[j] = BGrad(Rat(spec_.r[j]));
      break;
    case Family::Vplus:
      for (long k = 0; k < l; ++k) d[k] = BGrad::beta(Xclinv_[k][j]);
      break;
    case Family::Vminus:
      for (long k = 0; k < l; ++k) d[k] = BGrad(-Rat(spec_.r[j]) * Xclinv_[k][j]);
      break;
    default:
      break;
  }
  return d;
}

std::vector<BGrad> FieldAlgebra::z_momentum_of(Family f, long i) const {
  const long l = spec_.rank;
  std::vector<BGrad> zm(l);
  const long j = i - 1;
  switch (f) {
    case Family::Splus:
      for (long k = 0; k < l; ++k) zm[k] = BGrad(-Xcl_[j][k] / Rat(spec_.r[j]));
      break;
    case Family::Sminus:
      for (long k = 0; k < l; ++k) zm[k] = BGrad::inv_beta(Xcl_[j][k]);
      break;
    case Family::Vplus:
      zm[j] = BGrad(Rat(1) / Rat(spec_.r[j]));
      break;
    case Family::Vminus:
      zm[j] = BGrad::inv_beta(Rat(-1));
      break;
    default:
      break;
  }
  return zm;
}

std::vector<BGrad> FieldAlgebra::q_momentum_of(const GenFactor& f,
                                               const Monomial& offset) const {
  const long l = spec_.rank;
  std::vector<BGrad> qm(l);
  const long j = f.index - 1;
  if (f.fam == Family::Y) {
    qm[j] = BGrad(Rat(2));
  } else if (f.fam == Family::A) {
    for (long k = 0; k < l; ++k) qm[k] = BGrad(Rat(2) * Xcl_[j][k]);
  }
  Monomial total = offset * f.shift;
  if (sgn(total.qe) != 0 || sgn(total.te) != 0) {
    BGrad att(total.qe, total.te, Rat(0));
    std::vector<BGrad> zm = z_momentum_of(f.fam, f.index);
    for (long k = 0; k < l; ++k)
      if (!zm[k].is_zero()) qm[k] += zm[k] * att;
  }
  return qm;
}

ZeroModeRecord FieldAlgebra::zero_modes(const ElementaryField& f) const {
  const long l = spec_.rank;
  ZeroModeRecord rec;
  rec.root_charge.assign(l, BGrad());
  rec.weight_charge.assign(l, BGrad());
  rec.z_momentum.assign(l, BGrad());
  rec.q_momentum.assign(l, BGrad());
  for (const auto& g : f.factors) {
    const Rat e(g.eps);
    const long j = g.index - 1;
    switch (g.fam) {
      case Family::Splus:
        rec.root_charge[j] += BGrad(Rat(-1) / Rat(spec_.r[j])) * e;
        break;
      case Family::Sminus:
        rec.root_charge[j] += BGrad::inv_beta(Rat(1)) * e;
        break;
      case Family::Vplus:
        rec.weight_charge[j] += BGrad(Rat(1) / Rat(spec_.r[j])) * e;
        break;
      case Family::Vminus:
        rec.weight_charge[j] += BGrad::inv_beta(Rat(-1)) * e;
        break;
      default:
        break;
    }
    std::vector<BGrad> zm = z_momentum_of(g.fam, g.index);
    std::vector<BGrad> qm = q_momentum_of(g, Monomial());
    for (long k = 0; k < l; ++k) {
      rec.z_momentum[k] += zm[k] * e;
      rec.q_momentum[k] += qm[k] * e;
    }
  }
  return rec;
}

ContractionKernel FieldAlgebra::contraction_kernel(const ElementaryField& F,
                                                   const ElementaryField& G) const {
  return contraction_kernel(F, Monomial(), G, Monomial());
}

ContractionKernel FieldAlgebra::contraction_kernel(const ElementaryField& F,
                                                   const Monomial& g1,
                                                   const ElementaryField& G,
                                                   const Monomial& g2) const {
  const long l = spec_.rank;
  ContractionKernel K;

  RatFun P(0);
  for (const auto& f : F.factors) {
    for (const auto& g : G.factors) {
      RatFun p = pairing_poly(f.fam, f.index, g.fam, g.index).p;
      if (p.is_zero()) continue;
      const int s = f.eps * g.eps * sigma(f.fam) * sigma(g.fam);
      Monomial nu = (g2 * g.shift) * (g1 * f.shift).inv();
      if (!nu.is_scalar() || !nu.integer_qt())
        throw NonExpandable("contraction: relative shift is not an integer monomial");
      P += RatFun::monomial(to_long(nu.qe), to_long(nu.te), Rat(s)) * p;
    }
  }

  // momenta of the left field commuted past the lattice shifts of the right
  std::vector<BGrad> Dg(l);
  for (const auto& g : G.factors) {
    std::vector<BGrad> d = charge_shift(g);
    for (long k = 0; k < l; ++k) Dg[k] += d[k] * Rat(g.eps);
  }
  BGrad E, apow;
  for (const auto& f : F.factors) {
    std::vector<BGrad> qm = q_momentum_of(f, g1);
    std::vector<BGrad> zm = z_momentum_of(f.fam, f.index);
    for (long k = 0; k < l; ++k) {
      if (Dg[k].is_zero()) continue;
      if (!qm[k].is_zero()) E += (qm[k] * Dg[k]) * Rat(f.eps);
      if (!zm[k].is_zero()) apow += (zm[k] * Dg[k]) * Rat(f.eps);
    }
  }
  K.zpow = apow;
  Rat qe(0), te(0);
  fold_q_exponent(E, qe, te);
  K.prefix = Monomial(qe, te);

  if (P.is_poly()) {
    K.closed = true;
    for (const auto& [e, c] : P.num().terms()) {
      if (!is_integer(c))
        throw NonIntegerMultiplicity("contraction: kernel exponent " + c.get_str() +
                                     " is not an integer");
      K.factors[{e.q, e.t}] -= to_long(c);
    }
    for (auto it = K.factors.begin(); it != K.factors.end();)
      it = (it->second == 0) ? K.factors.erase(it) : std::next(it);
  } else {
    K.closed = false;
    std::vector<RatFun> p(order_);
    for (long n = 1; n <= order_; ++n) p[n - 1] = P.substitute_modes(n);
    K.series = UniSeries::exp_modes(p, order_).to_formal();
  }
  return K;
}

bool FieldAlgebra::kernel_locality_check(const ElementaryField& F,
                                         const ElementaryField& G) const {
  ContractionKernel K12 = contraction_kernel(F, Monomial(), G, Monomial());
  ContractionKernel K21 = contraction_kernel(G, Monomial(), F, Monomial());
  if (!K12.closed || !K21.closed)
    throw SeriesOnlyPair("locality check: pairing is rational, no closed kernel");
  if (!(K12.zpow == K21.zpow)) return false;

  std::map<std::pair<long, long>, long> flipped;
  long qshift = 0, tshift = 0, n_total = 0;
  int sign = 1;
  for (const auto& [ab, n] : K21.factors) {
    flipped[{-ab.first, -ab.second}] += n;
    qshift += n * ab.first;
    tshift += n * ab.second;
    if (n % 2 != 0) sign = -sign;
    n_total += n;
  }
  if (!(K21.zpow == BGrad(Rat(n_total)))) return false;
  if (sign != 1) return false;
  if (flipped != K12.factors) return false;
  return K21.prefix * Monomial::qt(qshift, tshift) == K12.prefix;
}

ElementaryField FieldAlgebra::merge_at_delta(const ElementaryField& F,
                                             const ElementaryField& G,
                                             const Monomial& gamma) const {
  ElementaryField r;
  r.pref = F.pref * G.pref;
  r.mono = F.mono * G.mono;
  for (auto g : F.factors) {
    g.shift = gamma * g.shift;
    r.factors.push_back(g);
  }
  for (const auto& g : G.factors) r.factors.push_back(g);
  r.normalize();
  return r;
}

std::vector<DeltaTerm> FieldAlgebra::commutator(const ElementaryField& F,
                                                const ElementaryField& G) const {
  ContractionKernel K = contraction_kernel(F, Monomial(), G, Monomial());
  ContractionKernel Krev = contraction_kernel(G, Monomial(), F, Monomial());
  if (!K.closed || !Krev.closed)
    throw SeriesOnlyPair("commutator: pairing is rational, no closed kernel");
  if (!kernel_locality_check(F, G))
    throw NonLocalPair("commutator: fields are local only up to a sign");
  if (!K.zpow.is_pure() || !is_integer(K.zpow.c0))
    throw std::domain_error("commutator: argument power is not an integer");
  const long wpow = to_long(K.zpow.c0);
  for (const auto& [ab, m] : K.factors)
    if (m <= -2)
      throw HigherOrderPole("commutator: pole of order " + std::to_string(-m) +
                            " at q^" + std::to_string(ab.first) + " t^" +
                            std::to_string(ab.second));

  std::vector<DeltaTerm> out;
  for (const auto& [ab, m] : K.factors) {
    if (m != -1) continue;
    RatFun A = K.prefix.to_ratfun();
    for (const auto& [ab2, m2] : K.factors) {
      if (ab2 == ab) continue;
      RatFun fac =
          RatFun(1) - RatFun::monomial(ab2.first - ab.first, ab2.second - ab.second);
      A *= rf_pow(fac, m2);
    }
    DeltaTerm dt;
    dt.support = Monomial::qt(ab.first, ab.second);
    dt.wpow = wpow;
    dt.field = merge_at_delta(F, G, dt.support);
    dt.coeff = A * dt.field.pref * RatFun::monomial(ab.first * wpow, ab.second * wpow);
    if (!dt.field.mono.is_one()) dt.coeff *= dt.field.mono.to_ratfun();
    dt.field.pref = RatFun(1);
    dt.field.mono = Monomial();
    out.push_back(std::move(dt));
  }
  return out;
}

ElementaryField FieldAlgebra::expand_A_in_Y(long i) const {
  if (i < 1 || i > spec_.rank) throw std::out_of_range("expansion: node index out of range");
  ElementaryField f;
  for (long j = 0; j < spec_.rank; ++j) {
    const RatFun& x = X_[i - 1][j];
    if (x.is_zero()) continue;
    if (!x.is_poly())
      throw NonMonomialExpansion("expansion: row entry " + x.str() + " is not polynomial");
    for (const auto& [e, c] : x.num().terms()) {
      if (!is_integer(c))
        throw NonMonomialExpansion("expansion: coefficient " + c.get_str() +
                                   " is not an integer");
      const long n = to_long(c);
      GenFactor g{Family::Y, j + 1, Monomial::qt(-e.q, -e.t), n > 0 ? 1 : -1};
      for (long k = 0; k < std::labs(n); ++k) f.factors.push_back(g);
    }
  }
  f.normalize();
  // the product of the Y prefactors must reproduce the A prefactor
  Monomial acc;
  for (const auto& g : f.factors) {
    Monomial p = intrinsic_prefactor(Family::Y, g.index);
    acc = acc * (g.eps > 0 ? p : p.inv());
  }
  if (!(acc == intrinsic_prefactor(Family::A, i)))
    throw std::logic_error("expansion: prefactor mismatch against the Cartan row");
  return f;
}

ElementaryField FieldAlgebra::screening_canonical(ElementaryField f, RatFun& c) const {
  c = f.pref;
  if (!f.mono.is_one()) c *= f.mono.to_ratfun();
  std::vector<GenFactor> queue = std::move(f.factors);
  std::vector<GenFactor> out;
  for (size_t k = 0; k < queue.size(); ++k) {
    GenFactor g = queue[k];
    const long r = spec_.r[g.index - 1];
    if (g.fam == Family::Sminus) {
      while (g.shift.te >= 2) {
        c *= RatFun::monomial(2 * r * g.eps, -2 * g.eps);
        queue.push_back(
            GenFactor{Family::A, g.index, g.shift * Monomial(Rat(0), Rat(-1)), g.eps});
        g.shift = g.shift * Monomial(Rat(0), Rat(-2));
      }
      while (sgn(g.shift.te) < 0) {
        c *= RatFun::monomial(-2 * r * g.eps, 2 * g.eps);
        queue.push_back(
            GenFactor{Family::A, g.index, g.shift * Monomial(Rat(0), Rat(1)), -g.eps});
        g.shift = g.shift * Monomial(Rat(0), Rat(2));
      }
      out.push_back(g);
    } else if (g.fam == Family::Splus) {
      while (g.shift.qe >= 2 * r) {
        c *= RatFun::monomial(-2 * r * g.eps, 2 * g.eps);
        queue.push_back(
            GenFactor{Family::A, g.index, g.shift * Monomial(Rat(-r), Rat(0)), -g.eps});
        g.shift = g.shift * Monomial(Rat(-2 * r), Rat(0));
      }
      while (sgn(g.shift.qe) < 0) {
        c *= RatFun::monomial(2 * r * g.eps, -2 * g.eps);
        queue.push_back(
            GenFactor{Family::A, g.index, g.shift * Monomial(Rat(r), Rat(0)), g.eps});
        g.shift = g.shift * Monomial(Rat(2 * r), Rat(0));
      }
      out.push_back(g);
    } else if (g.fam == Family::A) {
      ElementaryField ex = expand_A_in_Y(g.index);
      for (const auto& y : ex.factors)
        queue.push_back(GenFactor{Family::Y, y.index, g.shift * y.shift, g.eps * y.eps});
    } else {
      out.push_back(g);
    }
  }
  ElementaryField r;
  r.factors = std::move(out);
  r.normalize();
  return r;
}

ScreeningReport FieldAlgebra::screening_commutes(
    const FieldSum& T, long i, int sign, const std::vector<std::string>* labels) const {
  if (labels && labels->size() != T.terms.size())
    throw std::invalid_argument("screening check: one label per term required");
  ElementaryField S = generator(sign > 0 ? Family::Splus : Family::Sminus, i);
  std::map<ElementaryField, ScreeningGroup> groups;
  for (size_t idx = 0; idx < T.terms.size(); ++idx) {
    std::string label = labels ? (*labels)[idx] : "term " + std::to_string(idx + 1);
    RatFun c0(1);
    ElementaryField canonT = screening_canonical(T.terms[idx], c0);
    for (const auto& dt : commutator(canonT, S)) {
      if (dt.wpow != 0)
        throw std::logic_error("screening check: residual argument power");
      RatFun contrib = c0 * dt.coeff * dt.support.inv().to_ratfun();
      ElementaryField H = dt.field.shifted(dt.support.inv());
      RatFun cc(1);
      ElementaryField canonH = screening_canonical(H, cc);
      contrib *= cc;
      auto [it, fresh] = groups.try_emplace(canonH);
      if (fresh) it->second.shape = canonH;
      it->second.parts.push_back(ScreeningContribution{label, dt.support, contrib});
      it->second.total += contrib;
    }
  }
  ScreeningReport rep;
  rep.commutes = true;
  for (auto& [shape, grp] : groups) {
    if (!grp.total.is_zero()) rep.commutes = false;
    rep.groups.push_back(std::move(grp));
  }
  return rep;
}

std::vector<RatFun> FieldAlgebra::mode_vector(const ElementaryField& f) const {
  const long l = spec_.rank;
  std::vector<RatFun> v(l, RatFun(0));
  for (const auto& g : f.factors) {
    if (!g.shift.is_scalar() || !g.shift.integer_qt())
      throw NonExpandable("mode vector: shift is not an integer monomial");
    const long j = g.index - 1;
    const long r = spec_.r[j];
    RatFun rot = RatFun::monomial(-to_long(g.shift.qe), -to_long(g.shift.te),
                                  Rat(g.eps * sigma(g.fam)));
    switch (g.fam) {
      case Family::Y:
        v[j] += rot;
        break;
      case Family::A:
        for (long k = 0; k < l; ++k) v[k] += rot * X_[j][k];
        break;
      case Family::Splus:
        for (long k = 0; k < l; ++k) v[k] += rot * X_[j][k] / qbr(r);
        break;
      case Family::Sminus:
        for (long k = 0; k < l; ++k) v[k] += rot * X_[j][k] / tbr();
        break;
      case Family::Vplus:
        v[j] += rot / qbr(r);
        break;
      case Family::Vminus:
        v[j] += rot / tbr();
        break;
    }
  }
  return v;
}

bool FieldAlgebra::difference_equation_check(DiffEq kind, long i) const {
  if (i < 1 || i > spec_.rank)
    throw std::out_of_range("difference equation: node index out of range");
  const long r = spec_.r[i - 1];
  ElementaryField L, R;
  switch (kind) {
    case DiffEq::scr1:
      L = generator(Family::Splus, i, Monomial::qt(-r, 0), 1);
      R = product({GenFactor{Family::A, i, Monomial(), 1},
                   GenFactor{Family::Splus, i, Monomial::qt(r, 0), 1}});
      R.pref = RatFun::monomial(2 * r, -2);
      break;
    case DiffEq::scr2:
      L = generator(Family::Sminus, i, Monomial::qt(0, 1), 1);
      R = product({GenFactor{Family::A, i, Monomial(), 1},
                   GenFactor{Family::Sminus, i, Monomial::qt(0, -1), 1}});
      R.pref = RatFun::monomial(2 * r, -2);
      break;
    case DiffEq::v1:
      L = generator(Family::Vplus, i, Monomial::qt(r, 0), 1);
      R = product({GenFactor{Family::Y, i, Monomial(), 1},
                   GenFactor{Family::Vplus, i, Monomial::qt(-r, 0), 1}});
      R.pref = intrinsic_prefactor(Family::Y, i).inv().to_ratfun();
      break;
    case DiffEq::v2:
      L = generator(Family::Vminus, i, Monomial::qt(0, -1), 1);
      R = product({GenFactor{Family::Y, i, Monomial(), 1},
                   GenFactor{Family::Vminus, i, Monomial::qt(0, 1), 1}});
      R.pref = intrinsic_prefactor(Family::Y, i).inv().to_ratfun();
      break;
  }
  if (!(mode_vector(L) == mode_vector(R))) return false;
  if (!(zero_modes(L) == zero_modes(R))) return false;
  return total_scalar(L) == total_scalar(R);
}

}  // namespace wqt
