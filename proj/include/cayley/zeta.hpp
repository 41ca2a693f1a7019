#ifndef CAYLEY_ZETA_HPP
#define CAYLEY_ZETA_HPP

#include <string>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/measures.hpp"
#include "cayley/rationals.hpp"

namespace cayley {

// Undirected 2n-regular multigraph; loops allowed (a loop adds 2 to its
// vertex's degree).  Built from the level-k Schreier action: one edge
// {v, s v} per generator pair {s, s^-1} and vertex v.
struct RegularMultigraph {
  int vertices = 0;
  int degree = 0; // = 2n
  std::vector<std::pair<int, int>> edges;

  static RegularMultigraph from_level(const FiniteGroup& g, int k);
  static RegularMultigraph single_loop(); // one vertex, one loop; 2-regular
  bool degree_ok() const;
  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Truncated series of ln zeta.  Exact rational coefficients when produced by
// the determinant route on a finite graph; floats with per-coefficient error
// bounds for the limit series.
struct LogZetaSeries {
  int order = 0;
  std::vector<Rat> exact;         // c_r / r for r = 1..order (finite route)
  std::vector<double> coeff;      // float view (always filled)
  std::vector<double> coeff_err;  // per-coefficient bound (limit route)
  std::string exponent_convention; // "vertex" => (1-t^2)^{-(|E|-|V|)}
  std::string normalization;       // "none" or "per-edge"
};

// Number of cyclically reduced closed paths of length r: the trace of the
// r-th power of the non-backtracking directed-edge (Hashimoto) operator.
long long path_count_oracle(const RegularMultigraph& x, int r);

// ln zeta_X as a power series via the determinant identity
//   zeta_X(t)^-1 = (1-t^2)^E det(I - t A + (k-1) t^2 I),
// where the exponent E is |E(X)|-|V(X)| under the "vertex" convention and
// (k-2)/2 |E(X)| under the "edge" convention.  The shipped convention is the
// one that agrees with path_count_oracle (see pin_exponent_convention).
enum class ZetaExponent { vertex_based, edge_based };
LogZetaSeries finite_zeta_log(const RegularMultigraph& x, int order,
                              ZetaExponent convention = ZetaExponent::vertex_based);

// Runs the oracle comparison on the level-1 and level-2 graphs of Z/2Z and
// returns the convention that reproduces the path counts.
ZetaExponent pin_exponent_convention();

// Limit zeta of the infinite Schreier graph, normalized per edge:
//   ln zeta_X(t) = lim_k (1/|E(X_k)|) ln zeta_{X_k}(t)
//               = (1/n) [ -(n-1) ln(1-t^2)
//                         - sum_atoms w ln(1 - 2n t lambda + (2n-1) t^2) ],
// truncated at the measure's q_max with a per-coefficient tail bound.
LogZetaSeries limit_zeta_log(const DiscreteMeasure& kns, int n, int order);

} // namespace cayley

#endif
