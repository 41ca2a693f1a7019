#include "cayley/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cayley/config.hpp"
#include "cayley/error.hpp"

namespace cayley {

double MeasureAtom::lambda() const {
  if (q == 1) return 1.0;
  return std::cos(M_PI * p / q);
}

Rat DiscreteMeasure::total_weight() const {
  Rat total = 0;
  for (const auto& a : atoms) total += a.weight;
  total.canonicalize();
  return total;
}

bool DiscreteMeasure::symmetric() const {
  for (const auto& a : atoms) {
    if (a.q == 1) return false; // unpaired atom at lambda = 1
    bool found = false;
    for (const auto& b : atoms)
      if (b.q == a.q && b.p == a.q - a.p && b.weight == a.weight) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

long phi_x(const Rat& x, unsigned long q) {
  if (x <= 0) return 0;
  // p <= x*q, coprime to q
  Rat xq = x * Rat(static_cast<long>(q));
  Int cap_z = xq.get_num() / xq.get_den(); // floor for non-negative x
  long cap = cap_z.get_si();
  if (cap > static_cast<long>(q)) cap = static_cast<long>(q);
  long count = 0;
  for (long p = 1; p <= cap; ++p)
    if (gcd_ul(p, q) == 1) ++count;
  return count;
}

namespace {

Rat kns_tail_bound(int n, int q_max) {
  // (n-1)^2 sum_{q > Q} q/(n^q - 1)
  //   <= (n-1)^2 * n^2/(n^2-1) * sum_{q > Q} q n^-q
  // and sum_{q>Q} q x^q = x^{Q+1} ((Q+1) - Q x) / (1-x)^2 with x = 1/n.
  Rat x(1, n);
  x.canonicalize();
  Rat geo = rat_pow(x, q_max + 1) * (Rat(q_max + 1) - Rat(q_max) * x) / ((Rat(1) - x) * (Rat(1) - x));
  Rat scale = Rat(static_cast<long>(n) * n, static_cast<long>(n) * n - 1);
  Rat tail = Rat(static_cast<long>(n - 1) * (n - 1)) * scale * geo;
  tail.canonicalize();
  return tail;
}

} // namespace

DiscreteMeasure kns_measure(int n, int q_max) {
  if (n < 2) throw DomainError("invalid-order", "KNS measure needs n >= 2");
  if (q_max < 2) throw DomainError("out-of-range", "q_max must be >= 2");
  DiscreteMeasure m;
  m.n = n;
  m.q_max = q_max;
  for (int q = 2; q <= q_max; ++q) {
    Rat w(static_cast<long>(n - 1) * (n - 1), 1);
    w /= Rat(int_pow(n, q) - 1);
    w.canonicalize();
    for (int p = 1; p < q; ++p)
      if (gcd_ul(p, q) == 1) m.atoms.push_back({p, q, w});
  }
  m.tail = kns_tail_bound(n, q_max);
  return m;
}

DiscreteMeasure level_measure_order(int n, int k) {
  SpectrumAtomList atoms = closed_form_spectrum(n, k);
  DiscreteMeasure m;
  m.n = n;
  m.q_max = k + 1;
  m.tail = 0;
  Int denom = int_pow(n, k);
  for (const auto& a : atoms.atoms) {
    Rat w(Int(static_cast<long>(a.multiplicity)), denom);
    w.canonicalize();
    m.atoms.push_back({a.p, a.q, w});
  }
  std::sort(m.atoms.begin(), m.atoms.end(), [](const MeasureAtom& a, const MeasureAtom& b) {
    return a.q != b.q ? a.q < b.q : a.p < b.p;
  });
  return m;
}

DiscreteMeasure level_measure(const FiniteGroup& g, int k) {
  return level_measure_order(g.order(), k);
}

std::pair<Rat, Rat> cdf(const DiscreteMeasure& m, const Rat& x) {
  Rat lower = 0;
  for (const auto& a : m.atoms) {
    Rat pos = a.z_position();
    if (pos <= x) lower += a.weight;
  }
  lower.canonicalize();
  Rat upper = lower + m.tail;
  upper.canonicalize();
  return {lower, upper};
}

std::pair<Rat, Rat> cdf(const DiscreteMeasure& m, double x) { return cdf(m, rat_of_double(x)); }

std::pair<double, double> moment(const DiscreteMeasure& m, int j) {
  if (j == 0) {
    double mass = rat_d(m.total_weight());
    return {mass, rat_d(m.tail)};
  }
  // Pair (p, q) with (q-p, q): positions are exact negatives, so odd powers
  // cancel exactly rather than to roundoff.
  double total = 0;
  for (const auto& a : m.atoms) {
    if (a.q == 1) {
      total += rat_d(a.weight); // position 1
      continue;
    }
    if (2 * a.p > a.q) continue; // handled by its partner
    if (2 * a.p == a.q) {
      // lambda = 0 contributes nothing for j >= 1
      continue;
    }
    double lam = a.lambda();
    bool has_partner = false;
    Rat partner_weight;
    for (const auto& b : m.atoms)
      if (b.q == a.q && b.p == a.q - a.p) {
        has_partner = true;
        partner_weight = b.weight;
        break;
      }
    double power = std::pow(lam, j);
    if (has_partner) {
      if (j % 2 == 0)
        total += rat_d(a.weight + partner_weight) * power;
      else
        total += rat_d(a.weight - partner_weight) * power;
    } else {
      total += rat_d(a.weight) * power;
    }
  }
  return {total, rat_d(m.tail)}; // |lambda| <= 1, so the tail mass bounds the error
}

int mobius(unsigned long n) {
  int result = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

long ramanujan_sum(unsigned long q, unsigned long s) {
  unsigned long g = s == 0 ? q : gcd_ul(s % q == 0 ? q : s, q);
  long total = 0;
  for (unsigned long d = 1; d <= g; ++d)
    if (g % d == 0 && q % d == 0) total += static_cast<long>(d) * mobius(q / d);
  return total;
}

Rat moment_exact(const DiscreteMeasure& m, int j) {
  // binomials C(j, i)
  std::vector<Int> binom(j + 1);
  binom[0] = 1;
  for (int i = 1; i <= j; ++i) binom[i] = binom[i - 1] * (j - i + 1) / i;

  Rat total = 0;
  // group atoms by q; every family must be complete with one shared weight
  std::map<int, std::pair<Rat, int>> families; // q -> (weight, count)
  for (const auto& a : m.atoms) {
    if (a.q == 1) {
      total += a.weight; // position exactly 1
      continue;
    }
    auto it = families.find(a.q);
    if (it == families.end()) {
      families.emplace(a.q, std::make_pair(a.weight, 1));
    } else {
      if (it->second.first != a.weight)
        throw DomainError("incomplete-family", "unequal weights within a q-family");
      ++it->second.second;
    }
  }
  for (const auto& [q, fam] : families) {
    if (fam.second != static_cast<int>(euler_phi(q)))
      throw DomainError("incomplete-family", "missing coprime atoms for q=" + std::to_string(q));
    // sum_{(p,q)=1} cos(p pi/q)^j = 2^-j sum_i C(j,i) S(|j-2i|), where
    // S(2s) = c_q(s) and odd cosine orders vanish by the p <-> q-p pairing.
    Rat inner = 0;
    for (int i = 0; i <= j; ++i) {
      int r = j - 2 * i;
      if (r < 0) r = -r;
      if (r % 2 != 0) continue;
      long s_val = ramanujan_sum(q, r / 2);
      inner += Rat(binom[i]) * Rat(s_val);
    }
    inner /= rat_pow(Rat(2), j);
    total += fam.first * inner;
  }
  total.canonicalize();
  return total;
}

Rat level_moment(const FiniteGroup& g, int k, int j) {
  LevelMatrix a = adjacency_matrix(g, k);
  const int dim = a.dim;
  const int n = g.order();
  // trace of A^j via sparse mat-vec from each basis vector would be O(dim^2 j);
  // dims here are small, so iterate columns.
  Int trace = 0;
  std::vector<Int> v(dim), w(dim);
  for (int col = 0; col < dim; ++col) {
    std::fill(v.begin(), v.end(), Int(0));
    v[col] = 1;
    for (int step = 0; step < j; ++step) {
      std::fill(w.begin(), w.end(), Int(0));
      for (int r = 0; r < dim; ++r) {
        if (v[r] == 0) continue;
        for (const auto& [c, wt] : a.rows[r]) w[c] += v[r] * wt;
      }
      std::swap(v, w);
    }
    trace += v[col];
  }
  Rat result(trace, int_pow(2 * n, j) * int_pow(n, k));
  result.canonicalize();
  return result;
}

std::pair<Rat, Rat> euler_phi_identity_partial(int n, int Q) {
  if (n < 2) throw DomainError("invalid-order", "needs n >= 2");
  Rat sum = 0;
  for (int q = 2; q <= Q; ++q) {
    Rat term(static_cast<long>(euler_phi(q)), 1);
    term /= Rat(int_pow(n, q) - 1);
    sum += term;
  }
  sum *= Rat(static_cast<long>(n - 1) * (n - 1));
  sum.canonicalize();
  return {sum, kns_tail_bound(n, Q)};
}

WeakConvergenceReport weak_convergence_report(const FiniteGroup& g, int k_max, int grid) {
  WeakConvergenceReport report;
  report.k_max = k_max;
  report.grid = grid;
  const int n = g.order();
  DiscreteMeasure limit = kns_measure(n, std::max(40, 2 * k_max));

  const double golden = 0.6180339887498949; // far from small-q rationals
  for (int i = 1; i <= grid; ++i) {
    double x = std::fmod(i * golden, 1.0);
    auto [low, high] = cdf(limit, x);
    double prev_err = -1;
    for (int k = 1; k <= k_max; ++k) {
      DiscreteMeasure mk = level_measure_order(n, k);
      auto [lk, hk] = cdf(mk, x);
      double fk = rat_d(lk);
      double lo = rat_d(low), hi = rat_d(high);
      double err = 0;
      if (fk < lo) err = lo - fk;
      if (fk > hi) err = fk - hi;
      report.rows.push_back({x, k, fk, lo, hi, err});
      if (prev_err >= 0 && err > prev_err + 1e-12) ++report.non_monotone;
      prev_err = err;
    }
  }
  return report;
}

} // namespace cayley
