#pragma once

namespace repi {

// Sharp-constant machinery for Young's convolution inequality and the
// entropy-power lower bounds it yields.

// p/(p-1) with conjugate_exponent(1) = +infinity. Throws for p < 1.
double conjugate_exponent(double p);

// c_alpha = alpha^{1/alpha} / (alpha')^{1/alpha'}; the limit value 1 is used
// at alpha = 1 (and at alpha = infinity). Throws for alpha < 1.
double sharp_young_c(double alpha);

// Admissible exponent triple: p, q, r >= 1 with 1/p' + 1/q' = 1/r'.
struct YoungExponents {
  double p = 1.0, q = 1.0, r = 1.0;
  double p_conj = 0.0, q_conj = 0.0, r_conj = 0.0;  // may be +infinity

  // Validates the conjugacy constraint to 1e-12.
  static YoungExponents from_pqr(double p, double q, double r);
  // Builds the triple from x = 1/p' in [0, (r-1)/r]; y = (r-1)/r - x.
  static YoungExponents from_dual_fraction(double x, double r);
};

// C(p,q,r) = c_p c_q / c_r, always in (0, 1].
double young_constant(const YoungExponents& e);

// Lower bound on N_r(X+Y) implied by the sharp Young inequality:
// [C^{-1} Nx^{1/p'} Ny^{1/q'}]^{r'}. Requires r > 1 and Nx, Ny > 0.
double convolution_power_bound(double nx, double ny, const YoungExponents& e);

struct OptimizedBound {
  YoungExponents exponents;
  double bound = 0.0;
  double x = 0.0;  // optimal 1/p'
};

// Maximizes convolution_power_bound over admissible exponents for fixed
// r > 1 (coarse scan, golden section, then a derivative polish). For equal
// powers the maximizer is at 1/p' = (r-1)/(2r).
OptimizedBound optimize_exponents(double nx, double ny, double r);

// Best equal-entropy-power constant: N_r(X+Y) >= A_r N when
// N_r(X) = N_r(Y) = N, with A_r = 4^{-1/(r-1)} (r+1)^{(r+1)/(r-1)} r^{-r/(r-1)}.
// Satisfies 1 < A_r < 2 for r > 1.
double equal_power_constant(double r);

// Smallest alpha for which the equal-power bound yields the additive
// inequality: log 2 / log A_r. Always <= (r+1)/2.
double min_alpha_equal_power(double r);

struct AlphaBracket {
  double lower = 0.0, upper = 0.0;
};

// Bracket for the optimal exponent alpha(r) in the additive inequality:
// [min{1, (log2/2)(r-1)/log((r+1)/2)}, (r+1)/2].
AlphaBracket optimal_alpha_bracket(double r);

}  // namespace repi
