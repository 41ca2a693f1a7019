#ifndef CAYLEY_SPECTRA_HPP
#define CAYLEY_SPECTRA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/rationals.hpp"
#include "cayley/tree.hpp"

namespace cayley {

// Sparse symmetric integer matrix on the n^k level words.
struct LevelMatrix {
  int level = 0;
  int dim = 1;
  int group_order = 1; // n; row sums are 2n for the adjacency matrix
  std::vector<std::vector<std::pair<int, int>>> rows; // (col, weight)

  void add(int r, int c, int w);
  int entry(int r, int c) const;
  std::vector<long long> row_sums() const;
  bool symmetric() const;
  std::vector<double> dense(double scale = 1.0) const; // row-major
  bool operator==(const LevelMatrix& o) const;
};

// A_k = sum_i (g_i^(k) + g_i^(k)T): incidence matrix of the level-k
// Schreier graph; 2n-regular.
LevelMatrix adjacency_matrix(const FiniteGroup& g, int k);

// Garbage-collecting term of the determinant recursion: S_0 = n-1 and
// S_k = T (x) I_{n^(k-1)} for k >= 1, where T is ones-off-diagonal.  The
// identity sum_{i != j} g_i^(k) g_j^(k)T = n S_k pins the tensor factor
// dimension (the k-1 exponent), which is what verify_sum_nonidentity checks.
LevelMatrix garbage_matrix(int n, int k);

bool verify_sum_nonidentity(const FiniteGroup& g, int k);

// Exact integer coefficients over (lambda, mu); coeff[i][j] multiplies
// lambda^i mu^j.
struct BivariatePolynomial {
  std::vector<std::vector<Int>> coeff;

  static BivariatePolynomial zero();
  static BivariatePolynomial constant(long v);
  static BivariatePolynomial lambda();
  static BivariatePolynomial mu();
  BivariatePolynomial operator+(const BivariatePolynomial& o) const;
  BivariatePolynomial operator-(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(const BivariatePolynomial& o) const;
  BivariatePolynomial scaled(const Int& c) const;
  double eval(double lambda, double mu) const;
  Rat eval(const Rat& lambda, const Rat& mu) const;
  bool operator==(const BivariatePolynomial& o) const;
};

// P_k, Q_k with F_k = P_k/Q_k:
//   P_1 = mu - lambda, Q_1 = 1,
//   P_{k+1} = -(lambda + (n-1) mu) P_k - n^2 Q_k,  Q_{k+1} = P_k.
std::pair<BivariatePolynomial, BivariatePolynomial> pq_polynomials(int n, int k);

// Phi_k evaluated through the product formula
//   Phi_k = (2n - lambda - (n-1) mu) prod_i F_i^{(n-1) n^{k-i}}
// with F_{i+1} = -(lambda + (n-1) mu) - n^2 / F_i.  Magnitudes are tracked in
// log space (the exponents are huge); sign * exp(log_abs) is the value.
struct PhiValue {
  bool pole = false;  // some F_i vanished along the recursion
  int sign = 0;       // 0 means the value итself is an exact zero
  double log_abs = 0; // natural log of |Phi|; meaningful when sign != 0
  double value() const;
};

PhiValue phi_eval(int n, int k, double lambda, double mu);

// |A_k - lambda I - mu S_k| by dense LU; the independent oracle used to
// check the recursion for Phi.
double phi_det(const FiniteGroup& g, int k, double lambda, double mu);

// Eigenvalues of M_k: the atom at 1 plus cos(p pi / q) for 2 <= q <= k+1,
// 1 <= p < q, gcd(p, q) = 1; multiplicity of the (p, q) atom is
//   (n-1)^2 sum_{i=1}^{[k/q]} n^{k-qi} + (n-1) [q | k+1].
struct SpectrumAtom {
  int p = 1;
  int q = 1; // q == 1 encodes the eigenvalue 1 (p must then be 0)
  long long multiplicity = 0;
  double value() const;
};

struct SpectrumAtomList {
  int n = 0;
  int level = 0;
  std::vector<SpectrumAtom> atoms; // sorted by descending value
  long long total_multiplicity() const;
};

SpectrumAtomList closed_form_spectrum(int n, int k);

// Multiplicity of the (p,q) eigenvalue via the integer sum form.
long long closed_form_multiplicity(int n, int k, int q);
// The paper's rearranged geometric-series form of the same quantity;
// exact-rational test target only.
Rat closed_form_multiplicity_rearranged(int n, int k, int q);

// Deterministic dense symmetric eigensolver; eigenvalues of A/(2n) clustered
// within tol.  Cyclic Jacobi up to dimension 64, Householder
// tridiagonalization + implicit-shift QL beyond (Jacobi needs ~20 sweeps on
// the large level matrices, which blows the runtime budget); both engines are
// cross-checked in the tests.  Throws "no-convergence" at the iteration cap
// and "level-too-large" above the dense budget.
std::vector<std::pair<double, long long>> numeric_spectrum(const LevelMatrix& a,
                                                           double tol = 1e-8);

// All eigenvalues of a dense symmetric matrix (row-major), ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int dim,
                                       double threshold = 1e-13, int max_sweeps = 100);
std::vector<double> householder_eigenvalues(std::vector<double> a, int dim);

// True when the numeric clusters and the closed-form atoms match as
// multisets: positions within pos_tol, multiplicities exactly.
bool spectrum_matches(const SpectrumAtomList& atoms,
                      const std::vector<std::pair<double, long long>>& numeric,
                      double pos_tol = 1e-8);

} // namespace cayley

#endif
