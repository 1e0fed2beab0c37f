#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ratfun.hpp"

namespace wqt {

enum class Series { A, B, C, D, A2twisted };

struct UnsupportedSeries : std::domain_error {
  using std::domain_error::domain_error;
};
struct RankTooSmall : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoClosedForm : std::domain_error {
  using std::domain_error::domain_error;
};
struct ZeroEntry : std::domain_error {
  using std::domain_error::domain_error;
};
struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using IntMat = std::vector<std::vector<long>>;
using RatMat = std::vector<std::vector<Rat>>;
using FunMat = std::vector<std::vector<RatFun>>;

std::string series_name(Series s);
Series series_from_name(const std::string& name);

// Root-system data for one series at fixed rank, normalized so the maximal
// root has squared length 2. Indices are 0-based; the labeling runs along the
// Dynkin chain, with the short simple root last for B, the long one last for
// C, and the two fork nodes last for D.
//
// The twisted family reuses this container with r_i = 2 throughout and the
// Weyl-vector pairings read off from its deformed generating fields; for it
// b_classical is the t = q = 1 limit of twisted_B rather than D·C.
struct AlgebraSpec {
  Series series;
  long rank;
  long r_dual;                  // lacing number: 1 simply-laced, 2 for B and C
  std::vector<long> r;          // r_i = r_dual * (a_i, a_i) / 2
  RatMat gram;                  // (a_i, a_j)
  IntMat cartan;                // C_ij = 2 (a_i, a_j) / (a_i, a_i)
  IntMat incidence;             // I = 2*Id - C
  IntMat b_classical;           // B_ij = r_dual * (a_i, a_j) = (D C)_ij
  std::vector<Rat> rho_alpha;   // (rho, a_i)
  std::vector<Rat> rhov_alpha;  // (rho_check, a_i)
  std::vector<Rat> rho_omega;   // (rho, w_i)
  std::vector<Rat> rhov_omega;  // (rho_check, w_i)
  long coxeter;                 // h
  long dual_coxeter;            // h_check
};

// rank floors: A >= 1, B >= 2, C >= 2, D >= 3, twisted >= 1
AlgebraSpec build_algebra(Series series, long rank);

// One-parameter family of matrices deforming C, D, B = DC, and M = D C^{-1}.
// Diagonal of Cqt: q^{r_i} t^{-1} + q^{-r_i} t; off-diagonal: -[I_ij]_q.
// Dqt = diag([r_i]_q). Mqt is computed by exact inversion, so Mqt * Cqt = Dqt
// holds identically.
struct DeformedMatrices {
  FunMat Cqt, Dqt, Bqt, Mqt;
};

DeformedMatrices deformed_matrices(const AlgebraSpec& spec);

struct DetCheck {
  RatFun computed;  // det Cqt by exact elimination
  RatFun closed;    // binomial/quotient closed form (A, B, C only)
  bool equal;
};

// Closed determinant forms exist for A, B, C; D raises NoClosedForm, as does
// the twisted family.
DetCheck det_C_check(const AlgebraSpec& spec);

// Closed-form tables for M(q,t) per series; the lower triangle is filled by
// symmetry.
FunMat closed_form_M(const AlgebraSpec& spec);

// Entrywise ratio closed_form_M / Mqt; uniform when every entry gives the
// same function. The tables are normalized differently from D C^{-1} for the
// simply-laced series, and the common factor is reported, never folded in.
struct ProportionalityReport {
  RatFun ratio;
  bool uniform;
};

ProportionalityReport M_proportionality_check(const AlgebraSpec& spec);

// Symmetric deformed matrix of the twisted rank-l family: [2]_q times the
// A-series B-matrix in (q^2, t) everywhere except the last diagonal entry,
// which is [2]_q (q^2 t^{-1} - 1 + q^{-2} t).
FunMat twisted_B(long rank);

// dense linear algebra over the rational-function field
FunMat fun_mul(const FunMat& a, const FunMat& b);
RatFun fun_det(FunMat m);
FunMat fun_inverse(FunMat m);  // throws SingularMatrix

RatMat rat_inverse(RatMat m);  // throws SingularMatrix

}  // namespace wqt
