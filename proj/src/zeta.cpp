#include "cayley/zeta.hpp"

#include <cmath>

#include "cayley/error.hpp"
#include "cayley/spectra.hpp"
#include "cayley/tree.hpp"

namespace cayley {

RegularMultigraph RegularMultigraph::from_level(const FiniteGroup& g, int k) {
  RegularMultigraph x;
  const int n = g.order();
  x.degree = 2 * n;
  for (int i = 0; i < n; ++i) {
    LevelAction perm = level_permutation(TreeElement::generator(g, i, +1), k);
    x.vertices = static_cast<int>(perm.points());
    for (int v = 0; v < x.vertices; ++v) x.edges.emplace_back(v, perm.images[v]);
  }
  if (k == 0) x.vertices = 1;
  return x;
}

RegularMultigraph RegularMultigraph::single_loop() {
  RegularMultigraph x;
  x.vertices = 1;
  x.degree = 2;
  x.edges.emplace_back(0, 0);
  return x;
}

bool RegularMultigraph::degree_ok() const {
  std::vector<int> deg(vertices, 0);
  for (const auto& [u, v] : edges) {
    deg[u] += 1;
    deg[v] += 1; // loops add 2 in total
  }
  for (int d : deg)
    if (d != degree) return false;
  return true;
}

namespace {

struct DirectedEdges {
  // Directed edge 2e is edges[e] forward, 2e+1 backward; reversal flips the
  // low bit.  A loop still yields two distinct mutually-reverse arrows.
  std::vector<int> tail, head;
  std::vector<std::vector<int>> out_by_vertex;

  explicit DirectedEdges(const RegularMultigraph& x) {
    const int m = x.edge_count();
    tail.resize(2 * m);
    head.resize(2 * m);
    out_by_vertex.assign(x.vertices, {});
    for (int e = 0; e < m; ++e) {
      auto [u, v] = x.edges[e];
      tail[2 * e] = u;
      head[2 * e] = v;
      tail[2 * e + 1] = v;
      head[2 * e + 1] = u;
      out_by_vertex[u].push_back(2 * e);
      out_by_vertex[v].push_back(2 * e + 1);
    }
  }
};

} // namespace

long long path_count_oracle(const RegularMultigraph& x, int r) {
  if (r < 1) throw DomainError("out-of-range", "path length must be >= 1");
  DirectedEdges d(x);
  const int m2 = static_cast<int>(d.tail.size());
  long long trace = 0;
  std::vector<long long> v(m2), w(m2);
  for (int start = 0; start < m2; ++start) {
    std::fill(v.begin(), v.end(), 0LL);
    v[start] = 1;
    for (int step = 0; step < r; ++step) {
      std::fill(w.begin(), w.end(), 0LL);
      for (int e = 0; e < m2; ++e) {
        if (!v[e]) continue;
        for (int f : d.out_by_vertex[d.head[e]]) {
          if (f == (e ^ 1)) continue; // no backtracking
          w[f] += v[e];
        }
      }
      std::swap(v, w);
    }
    trace += v[start];
  }
  return trace;
}

LogZetaSeries finite_zeta_log(const RegularMultigraph& x, int order, ZetaExponent convention) {
  const int k = x.degree;
  const int dim = x.vertices;

  // Adjacency with loops counted twice on the diagonal.
  std::vector<std::vector<long long>> a(dim, std::vector<long long>(dim, 0));
  for (const auto& [u, v] : x.edges) {
    a[u][v] += 1;
    a[v][u] += 1;
  }

  // ln det(I - tA + (k-1) t^2 I)^{-1} = sum_r S_r / r t^r where
  // S_r = tr(C_r(A)), C_0 = 2I, C_1 = A, C_r = A C_{r-1} - (k-1) C_{r-2}.
  std::vector<std::vector<long long>> prev(dim, std::vector<long long>(dim, 0));
  std::vector<std::vector<long long>> cur = a;
  for (int i = 0; i < dim; ++i) prev[i][i] = 2;

  LogZetaSeries series;
  series.order = order;
  series.exponent_convention = convention == ZetaExponent::vertex_based ? "vertex" : "edge";
  series.normalization = "none";

  Rat exponent; // multiplier of -ln(1 - t^2)
  if (convention == ZetaExponent::vertex_based)
    exponent = Rat(x.edge_count() - x.vertices);
  else
    exponent = Rat(static_cast<long>(k) - 2, 2) * Rat(x.edge_count());
  exponent.canonicalize();

  for (int r = 1; r <= order; ++r) {
    long long s_r = 0;
    for (int i = 0; i < dim; ++i) s_r += cur[i][i];
    Rat c{Int(static_cast<long>(s_r)), Int(r)};
    if (r % 2 == 0) c += exponent * Rat(2, r);
    c.canonicalize();
    series.exact.push_back(c);
    series.coeff.push_back(rat_d(c));
    series.coeff_err.push_back(0.0);

    if (r < order) {
      std::vector<std::vector<long long>> next(dim, std::vector<long long>(dim, 0));
      for (int i = 0; i < dim; ++i)
        for (int l = 0; l < dim; ++l) {
          if (!a[i][l]) continue;
          long long av = a[i][l];
          for (int j = 0; j < dim; ++j) next[i][j] += av * cur[l][j];
        }
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) next[i][j] -= static_cast<long long>(k - 1) * prev[i][j];
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return series;
}

ZetaExponent pin_exponent_convention() {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  for (int level : {1, 2}) {
    RegularMultigraph x = RegularMultigraph::from_level(z2, level);
    LogZetaSeries vertex = finite_zeta_log(x, 8, ZetaExponent::vertex_based);
    for (int r = 1; r <= 8; ++r) {
      Rat oracle{Int(static_cast<long>(path_count_oracle(x, r))), Int(r)};
      oracle.canonicalize();
      if (vertex.exact[r - 1] != oracle) return ZetaExponent::edge_based;
    }
  }
  return ZetaExponent::vertex_based;
}

LogZetaSeries limit_zeta_log(const DiscreteMeasure& kns, int n, int order) {
  const double k = 2.0 * n;
  LogZetaSeries series;
  series.order = order;
  series.exponent_convention = "vertex";
  series.normalization = "per-edge";

  // Newton's recurrence per atom: s_r = alpha^r + beta^r with
  // alpha+beta = k lambda, alpha beta = k-1.
  std::vector<double> total(order + 1, 0.0);
  for (const auto& atom : kns.atoms) {
    double lam = atom.lambda();
    double w = rat_d(atom.weight);
    double s_prev = 2.0, s_cur = k * lam;
    for (int r = 1; r <= order; ++r) {
      total[r] += w * s_cur;
      double s_next = k * lam * s_cur - (k - 1.0) * s_prev;
      s_prev = s_cur;
      s_cur = s_next;
    }
  }
  const double tail = rat_d(kns.tail);
  for (int r = 1; r <= order; ++r) {
    double c = total[r] / r;
    if (r % 2 == 0) c += (n - 1.0) * 2.0 / r;
    c /= n; // per-edge: |V_k|/|E_k| -> 1/n
    series.coeff.push_back(c);
    // |alpha^r + beta^r| <= 2 (k-1)^r on [-1,1]
    series.coeff_err.push_back(tail * 2.0 * std::pow(k - 1.0, r) / (r * n));
  }
  return series;
}

} // namespace cayley
