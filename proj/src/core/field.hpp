#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cartan.hpp"
#include "monomial.hpp"
#include "series.hpp"

namespace wqt {

// kernel exponent data does not reduce to integer binomial multiplicities
struct NonIntegerMultiplicity : std::domain_error {
  using std::domain_error::domain_error;
};
// the requested operation needs a closed product kernel, but the pairing of
// the two fields is rational and only a truncated series expansion exists
struct SeriesOnlyPair : std::domain_error {
  using std::domain_error::domain_error;
};
// a contraction has a pole of order two or higher on the diagonal
struct HigherOrderPole : std::domain_error {
  using std::domain_error::domain_error;
};
// a deformed Cartan row does not expand into signed monomials
struct NonMonomialExpansion : std::domain_error {
  using std::domain_error::domain_error;
};
// fields are local only up to a sign, so their commutator is not a finite
// sum of delta terms
struct NonLocalPair : std::domain_error {
  using std::domain_error::domain_error;
};

// generator currents of the free-field realization
enum class Family { Y, A, Splus, Sminus, Vplus, Vminus };

const char* family_name(Family f);
int family_rank(Family f);

// One current raised to +-1, evaluated at (argument * shift). The symbol
// stands for the full current including its scalar prefactor and zero modes.
struct GenFactor {
  Family fam;
  long index;
  Monomial shift;
  int eps;

  bool same_slot(const GenFactor& o) const {
    return fam == o.fam && index == o.index && shift == o.shift;
  }
  bool operator==(const GenFactor& o) const { return same_slot(o) && eps == o.eps; }
  bool operator<(const GenFactor& o) const;
};

// Zero-mode content of a field: lattice charges and momentum insertions.
// Momenta are kept in the weight-generator basis; coefficients live in the
// b-graded span since inverse powers of the deformation exponent appear.
struct ZeroModeRecord {
  std::vector<BGrad> root_charge;    // coefficients of the root lattice shifts
  std::vector<BGrad> weight_charge;  // coefficients of the weight lattice shifts
  std::vector<BGrad> z_momentum;     // zero-mode coefficients in the argument power
  std::vector<BGrad> q_momentum;     // zero-mode coefficients in the q power

  bool operator==(const ZeroModeRecord& o) const;
};

// Normal-ordered product of generator currents with a scalar prefactor. The
// rational part and a monomial part (for non-integer exponents) are kept
// separately; factors are a sorted multiset.
struct ElementaryField {
  RatFun pref;
  Monomial mono;
  std::vector<GenFactor> factors;

  ElementaryField() : pref(1), mono() {}

  bool is_zero() const { return pref.is_zero(); }

  // sort the factor list and cancel mutually inverse factors at equal shifts
  void normalize();
  // relocate the argument: z -> z * mu
  ElementaryField shifted(const Monomial& mu) const;

  bool same_shape(const ElementaryField& o) const {
    return mono == o.mono && factors == o.factors;
  }
  bool operator==(const ElementaryField& o) const {
    return pref == o.pref && same_shape(o);
  }
  bool operator<(const ElementaryField& o) const;
};

// sum of elementary fields with like terms merged and zeros dropped
struct FieldSum {
  std::vector<ElementaryField> terms;

  void add(ElementaryField f);
  void scale(const RatFun& c);
};

// Contraction data of an ordered product F(z) G(w):
//   F(z) G(w) = prefix * z^zpow * K(w/z) * :F(z) G(w):
// In closed form K(x) = prod_{(a,b)} (1 - x q^a t^b)^mult; for rational
// pairings K is kept as a truncated series instead.
struct ContractionKernel {
  bool closed = true;
  Monomial prefix;
  BGrad zpow;
  std::map<std::pair<long, long>, long> factors;
  FormalSeries series;
};

// one term  coeff * delta(w gamma / z) * w^wpow * field(w)  of a commutator
struct DeltaTerm {
  Monomial support;
  RatFun coeff;
  long wpow = 0;
  ElementaryField field;
};

struct ScreeningContribution {
  std::string source;
  Monomial support;
  RatFun coeff;
};

// residues sharing one canonical field shape; their coefficient sum must
// vanish for the screening charge to commute
struct ScreeningGroup {
  ElementaryField shape;
  RatFun total;
  std::vector<ScreeningContribution> parts;
};

struct ScreeningReport {
  bool commutes = false;
  std::vector<ScreeningGroup> groups;
};

struct Pairing {
  bool rational = false;
  RatFun p;  // [f_i[n], g_j[-n]] = (1/n) p(q^n, t^n)
};

// the four quadratic difference equations satisfied by the screening and
// weight currents
enum class DiffEq { scr1, scr2, v1, v2 };

// Free-field engine for one root system: mode pairings, normal-ordering
// kernels, commutators, and screening checks. Construction inverts the
// deformed Cartan data once.
class FieldAlgebra {
 public:
  explicit FieldAlgebra(const AlgebraSpec& spec, long series_order = 12);

  const AlgebraSpec& spec() const { return spec_; }
  long series_order() const { return order_; }

  // the deformed Cartan row transform, its classical limit, and the inverse
  // of that limit (which normalizes the weight-lattice charges)
  const FunMat& row_transform() const { return X_; }
  const RatMat& row_transform_classical() const { return Xcl_; }
  const RatMat& row_transform_inverse() const { return Xclinv_; }

  ElementaryField generator(Family fam, long i) const;
  ElementaryField generator(Family fam, long i, const Monomial& shift, int eps) const;
  // product of currents; every factor keeps its own prefactor inside the
  // symbol, so the scalar part of the result is one
  ElementaryField product(const std::vector<GenFactor>& factors) const;

  // scalar prefactor carried by one current symbol
  Monomial intrinsic_prefactor(Family fam, long i) const;
  // full scalar of a field: explicit prefactor times the factor prefactors
  RatFun total_scalar(const ElementaryField& f) const;

  Pairing pairing_poly(Family f1, long i1, Family f2, long i2) const;

  ZeroModeRecord zero_modes(const ElementaryField& f) const;

  // contraction of F evaluated at z*g1 against G evaluated at w*g2
  ContractionKernel contraction_kernel(const ElementaryField& F, const Monomial& g1,
                                       const ElementaryField& G, const Monomial& g2) const;
  ContractionKernel contraction_kernel(const ElementaryField& F,
                                       const ElementaryField& G) const;

  // true when the two ordered products agree after reflecting the reversed
  // kernel through (1 - x^-1 c^-1) = -x^-1 c^-1 (1 - x c)
  bool kernel_locality_check(const ElementaryField& F, const ElementaryField& G) const;

  std::vector<DeltaTerm> commutator(const ElementaryField& F,
                                    const ElementaryField& G) const;

  // :F(w gamma) G(w): with composed shifts and cancellations
  ElementaryField merge_at_delta(const ElementaryField& F, const ElementaryField& G,
                                 const Monomial& gamma) const;

  // Commutator of a sum of fields with the integrated screening current of
  // the given sign at node i, organized as grouped residue sums. Labels, if
  // given, name the terms of T in the report.
  ScreeningReport screening_commutes(const FieldSum& T, long i, int sign,
                                     const std::vector<std::string>* labels = nullptr) const;

  bool difference_equation_check(DiffEq kind, long i) const;

  // the A current written as a product of Y currents from the deformed
  // Cartan row; fails when a row entry is not a signed sum of monomials
  ElementaryField expand_A_in_Y(long i) const;

  // Canonical presentation used for grouping residues: screening factors
  // reduced to the fundamental shift window, A factors expanded in Y
  // currents, inverse pairs cancelled. The scalar moved out of the field is
  // multiplied into c.
  ElementaryField screening_canonical(ElementaryField f, RatFun& c) const;

  // oscillator content in the weight-generator basis, one rational function
  // per node, uniform in the mode number
  std::vector<RatFun> mode_vector(const ElementaryField& f) const;

 private:
  int sigma(Family f) const;
  // kernel computation; the expansion series is expensive for rational
  // pairings and is only produced when asked for
  ContractionKernel kernel_core(const ElementaryField& F, const Monomial& g1,
                                const ElementaryField& G, const Monomial& g2,
                                bool with_series) const;
  std::vector<BGrad> charge_shift(const GenFactor& g) const;     // momentum shift per node
  std::vector<BGrad> z_momentum_of(Family f, long i) const;      // weight-basis momentum
  std::vector<BGrad> q_momentum_of(const GenFactor& f, const Monomial& offset) const;

  AlgebraSpec spec_;
  long order_;
  FunMat B_, C_, D_, M_, X_;
  RatMat Xcl_;
  RatMat Xclinv_;
};

std::string field_to_latex(const ElementaryField& f);
std::string field_to_json(const ElementaryField& f, const FieldAlgebra& fa);
std::string delta_terms_to_json(const std::vector<DeltaTerm>& terms);
std::string screening_report_to_json(const ScreeningReport& rep);

}  // namespace wqt
