#ifndef CAYLEY_MEASURES_HPP
#define CAYLEY_MEASURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/rationals.hpp"
#include "cayley/spectra.hpp"

namespace cayley {

// One atom of a discrete spectral measure.  Positions are exact labels:
// lambda = cos(p pi / q) on [-1,1], equivalently z = p/q on [0,1]; the atom
// at lambda = 1 (z = 0) is encoded as p = 0, q = 1.  Floats are derived.
struct MeasureAtom {
  int p = 0;
  int q = 1;
  Rat weight;

  double lambda() const;
  Rat z_position() const { return Rat(p, q); } // sigma-view position
};

// Finite or truncated purely atomic probability measure with a rational
// upper bound on the omitted mass.
struct DiscreteMeasure {
  int n = 0;
  int q_max = 1;
  Rat tail;                       // upper bound on mass beyond q_max
  std::vector<MeasureAtom> atoms; // unique labels, ascending (q, p)

  Rat total_weight() const;
  bool symmetric() const; // invariant under lambda <-> -lambda with equal weights
};

// phi_x(q) = #{p : (p, q) = 1, p/q <= x}; phi_1 = Euler phi, phi_0 = 0.
long phi_x(const Rat& x, unsigned long q);

// KNS measure: atoms cos(p pi / q) with weight (n-1)^2/(n^q - 1) for
// 2 <= q <= q_max; tail bounded via phi(q) <= q.
DiscreteMeasure kns_measure(int n, int q_max);

// Eigenvalue frequency measure of M_k: weights multiplicity / n^k.
DiscreteMeasure level_measure(const FiniteGroup& g, int k);
DiscreteMeasure level_measure_order(int n, int k);

// Distribution function of the sigma-view (z = p/q coordinates on [0,1]):
// returns [lower, lower + tail] enclosing F(x).
std::pair<Rat, Rat> cdf(const DiscreteMeasure& m, const Rat& x);
std::pair<Rat, Rat> cdf(const DiscreteMeasure& m, double x);

// j-th moment of the lambda-view measure with a tail-bound error bar.
// Odd moments of symmetric measures are exactly zero by atom pairing.
std::pair<double, double> moment(const DiscreteMeasure& m, int j);

// Exact rational truncated moment.  Although single atom positions
// cos(p pi / q) are irrational, each complete coprime family sums to a
// rational: cos^j expands in cos(r theta) and
// sum_{(p,q)=1} cos(2 pi s p / (2q)...) reduces to Ramanujan sums.
// Requires every q-family to be complete with equal weights (true for the
// KNS and level measures).
Rat moment_exact(const DiscreteMeasure& m, int j);

// Ramanujan sum c_q(s) = sum_{d | gcd(s,q)} d mu(q/d); c_q(0) = phi(q).
long ramanujan_sum(unsigned long q, unsigned long s);
int mobius(unsigned long n);

// tr(M_k^j) / n^k as an exact rational (integer powers of A_k over (2n)^j).
Rat level_moment(const FiniteGroup& g, int k, int j);

// Partial sum (n-1)^2 sum_{q=2}^{Q} phi(q)/(n^q - 1) plus its tail bound.
std::pair<Rat, Rat> euler_phi_identity_partial(int n, int Q);

struct WeakConvergenceRow {
  double x = 0;
  int k = 0;
  double level_cdf = 0;
  double limit_cdf_low = 0;
  double limit_cdf_high = 0;
  double error = 0; // distance from the enclosure
};

struct WeakConvergenceReport {
  int k_max = 0;
  int grid = 0;
  std::vector<WeakConvergenceRow> rows;
  int non_monotone = 0; // grid points whose error fails to decrease in k
};

// Compares F_{mu_k} with the truncated F_mu on a low-discrepancy grid of
// irrational-proxy points.
WeakConvergenceReport weak_convergence_report(const FiniteGroup& g, int k_max, int grid);

} // namespace cayley

#endif
