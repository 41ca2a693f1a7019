#include "cayley/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "cayley/config.hpp"
#include "cayley/error.hpp"

namespace cayley {

void LevelMatrix::add(int r, int c, int w) {
  for (auto& [col, weight] : rows[r])
    if (col == c) {
      weight += w;
      return;
    }
  rows[r].emplace_back(c, w);
}

int LevelMatrix::entry(int r, int c) const {
  for (const auto& [col, weight] : rows[r])
    if (col == c) return weight;
  return 0;
}

std::vector<long long> LevelMatrix::row_sums() const {
  std::vector<long long> sums(dim, 0);
  for (int r = 0; r < dim; ++r)
    for (const auto& [c, w] : rows[r]) sums[r] += w;
  return sums;
}

bool LevelMatrix::symmetric() const {
  for (int r = 0; r < dim; ++r)
    for (const auto& [c, w] : rows[r])
      if (entry(c, r) != w) return false;
  return true;
}

std::vector<double> LevelMatrix::dense(double scale) const {
  std::vector<double> m(static_cast<size_t>(dim) * dim, 0.0);
  for (int r = 0; r < dim; ++r)
    for (const auto& [c, w] : rows[r]) m[static_cast<size_t>(r) * dim + c] = w * scale;
  return m;
}

bool LevelMatrix::operator==(const LevelMatrix& o) const {
  if (dim != o.dim) return false;
  for (int r = 0; r < dim; ++r) {
    for (const auto& [c, w] : rows[r])
      if (o.entry(r, c) != w) return false;
    for (const auto& [c, w] : o.rows[r])
      if (entry(r, c) != w) return false;
  }
  return true;
}

namespace {

long long checked_points(int n, int k) {
  if (k < 0) throw DomainError("level-too-large", "negative level");
  double p = std::pow(static_cast<double>(n), k);
  if (p > static_cast<double>(config::max_level_points()))
    throw DomainError("level-too-large", "n^k exceeds the level budget");
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  return total;
}

} // namespace

LevelMatrix adjacency_matrix(const FiniteGroup& g, int k) {
  const int n = g.order();
  long long dim = checked_points(n, k);
  LevelMatrix a;
  a.level = k;
  a.dim = static_cast<int>(dim);
  a.group_order = n;
  a.rows.assign(a.dim, {});
  for (int i = 0; i < n; ++i) {
    LevelAction perm = level_permutation(TreeElement::generator(g, i, +1), k);
    for (int v = 0; v < a.dim; ++v) {
      a.add(v, perm.images[v], 1); // g_i
      a.add(perm.images[v], v, 1); // g_i^T
    }
  }
  return a;
}

LevelMatrix garbage_matrix(int n, int k) {
  if (k < 0) throw DomainError("level-too-large", "negative level");
  LevelMatrix s;
  s.level = k;
  s.group_order = n;
  if (k == 0) {
    s.dim = 1;
    s.rows.assign(1, {});
    s.add(0, 0, n - 1);
    return s;
  }
  long long dim = checked_points(n, k);
  long long block = dim / n;
  s.dim = static_cast<int>(dim);
  s.rows.assign(s.dim, {});
  for (int bi = 0; bi < n; ++bi)
    for (int bj = 0; bj < n; ++bj) {
      if (bi == bj) continue;
      for (long long r = 0; r < block; ++r)
        s.add(static_cast<int>(bi * block + r), static_cast<int>(bj * block + r), 1);
    }
  return s;
}

bool verify_sum_nonidentity(const FiniteGroup& g, int k) {
  const int n = g.order();
  long long dim = checked_points(n, k);
  std::vector<LevelAction> perms;
  for (int i = 0; i < n; ++i)
    perms.push_back(level_permutation(TreeElement::generator(g, i, +1), k));
  std::vector<std::vector<int>> inv(n, std::vector<int>(dim));
  for (int j = 0; j < n; ++j)
    for (int v = 0; v < dim; ++v) inv[j][perms[j].images[v]] = v;

  // g_i^(k) g_j^(k)T is the permutation matrix of v -> g_i(g_j^{-1}(v)),
  // with a 1 in column v at row g_i(g_j^{-1}(v)).
  LevelMatrix sum;
  sum.level = k;
  sum.dim = static_cast<int>(dim);
  sum.group_order = n;
  sum.rows.assign(sum.dim, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int v = 0; v < sum.dim; ++v) sum.add(perms[i].images[inv[j][v]], v, 1);
    }

  LevelMatrix expected = garbage_matrix(n, k);
  for (auto& row : expected.rows)
    for (auto& [c, w] : row) w *= n;
  return sum == expected;
}

BivariatePolynomial BivariatePolynomial::zero() { return BivariatePolynomial{{{Int(0)}}}; }

BivariatePolynomial BivariatePolynomial::constant(long v) {
  return BivariatePolynomial{{{Int(v)}}};
}

BivariatePolynomial BivariatePolynomial::lambda() {
  BivariatePolynomial p;
  p.coeff = {{Int(0)}, {Int(1)}};
  return p;
}

BivariatePolynomial BivariatePolynomial::mu() {
  BivariatePolynomial p;
  p.coeff = {{Int(0), Int(1)}};
  return p;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
  BivariatePolynomial r;
  size_t di = std::max(coeff.size(), o.coeff.size());
  size_t dj = 0;
  for (const auto& row : coeff) dj = std::max(dj, row.size());
  for (const auto& row : o.coeff) dj = std::max(dj, row.size());
  r.coeff.assign(di, std::vector<Int>(dj, Int(0)));
  for (size_t i = 0; i < coeff.size(); ++i)
    for (size_t j = 0; j < coeff[i].size(); ++j) r.coeff[i][j] += coeff[i][j];
  for (size_t i = 0; i < o.coeff.size(); ++i)
    for (size_t j = 0; j < o.coeff[i].size(); ++j) r.coeff[i][j] += o.coeff[i][j];
  return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
  return *this + o.scaled(Int(-1));
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
  BivariatePolynomial r;
  size_t di = coeff.size() + o.coeff.size();
  size_t dj = 0, dja = 0, djb = 0;
  for (const auto& row : coeff) dja = std::max(dja, row.size());
  for (const auto& row : o.coeff) djb = std::max(djb, row.size());
  dj = dja + djb;
  r.coeff.assign(di, std::vector<Int>(dj, Int(0)));
  for (size_t i = 0; i < coeff.size(); ++i)
    for (size_t j = 0; j < coeff[i].size(); ++j) {
      if (coeff[i][j] == 0) continue;
      for (size_t a = 0; a < o.coeff.size(); ++a)
        for (size_t b = 0; b < o.coeff[a].size(); ++b)
          r.coeff[i + a][j + b] += coeff[i][j] * o.coeff[a][b];
    }
  return r;
}

BivariatePolynomial BivariatePolynomial::scaled(const Int& c) const {
  BivariatePolynomial r = *this;
  for (auto& row : r.coeff)
    for (auto& v : row) v *= c;
  return r;
}

double BivariatePolynomial::eval(double lambda, double mu) const {
  double total = 0;
  double lp = 1;
  for (size_t i = 0; i < coeff.size(); ++i) {
    double mp = 1;
    for (size_t j = 0; j < coeff[i].size(); ++j) {
      if (coeff[i][j] != 0) total += coeff[i][j].get_d() * lp * mp;
      mp *= mu;
    }
    lp *= lambda;
  }
  return total;
}

Rat BivariatePolynomial::eval(const Rat& lambda, const Rat& mu) const {
  Rat total = 0;
  Rat lp = 1;
  for (size_t i = 0; i < coeff.size(); ++i) {
    Rat mp = 1;
    for (size_t j = 0; j < coeff[i].size(); ++j) {
      if (coeff[i][j] != 0) {
        Rat term(coeff[i][j]);
        term *= lp;
        term *= mp;
        total += term;
      }
      mp *= mu;
    }
    lp *= lambda;
  }
  return total;
}

bool BivariatePolynomial::operator==(const BivariatePolynomial& o) const {
  size_t di = std::max(coeff.size(), o.coeff.size());
  for (size_t i = 0; i < di; ++i) {
    size_t dj = 0;
    if (i < coeff.size()) dj = std::max(dj, coeff[i].size());
    if (i < o.coeff.size()) dj = std::max(dj, o.coeff[i].size());
    for (size_t j = 0; j < dj; ++j) {
      Int a = (i < coeff.size() && j < coeff[i].size()) ? coeff[i][j] : Int(0);
      Int b = (i < o.coeff.size() && j < o.coeff[i].size()) ? o.coeff[i][j] : Int(0);
      if (a != b) return false;
    }
  }
  return true;
}

std::pair<BivariatePolynomial, BivariatePolynomial> pq_polynomials(int n, int k) {
  if (k < 1) throw DomainError("out-of-range", "pq_polynomials needs k >= 1");
  BivariatePolynomial p = BivariatePolynomial::mu() - BivariatePolynomial::lambda();
  BivariatePolynomial q = BivariatePolynomial::constant(1);
  BivariatePolynomial head =
      (BivariatePolynomial::lambda() + BivariatePolynomial::mu().scaled(Int(n - 1)))
          .scaled(Int(-1));
  for (int i = 1; i < k; ++i) {
    BivariatePolynomial p_next = head * p - q.scaled(Int(n) * n);
    q = p;
    p = p_next;
  }
  return {p, q};
}

double PhiValue::value() const {
  if (sign == 0) return 0.0;
  double v = std::exp(log_abs);
  return sign > 0 ? v : -v;
}

PhiValue phi_eval(int n, int k, double lambda, double mu) {
  PhiValue result;
  double prefactor = 2.0 * n - lambda - (n - 1.0) * mu;
  double head = -(lambda + (n - 1.0) * mu);

  // exponent of F_i is (n-1) n^(k-i)
  double log_abs = 0;
  int sign = 1;
  if (prefactor == 0) {
    result.sign = 0;
    return result;
  }
  sign = prefactor > 0 ? 1 : -1;
  log_abs = std::log(std::fabs(prefactor));

  double f = mu - lambda; // F_1
  for (int i = 1; i <= k; ++i) {
    if (f == 0 || !std::isfinite(f)) {
      if (f == 0 && i == k) {
        // the recursion ends on an exact zero: Phi vanishes, no division needed
        result.sign = 0;
        return result;
      }
      result.pole = true;
      return result;
    }
    double e = (n - 1.0) * std::pow(static_cast<double>(n), k - i);
    log_abs += e * std::log(std::fabs(f));
    if (f < 0 && (static_cast<long long>(e) % 2) == 1) sign = -sign;
    f = head - static_cast<double>(n) * n / f; // F_{i+1}
  }
  result.sign = sign;
  result.log_abs = log_abs;
  return result;
}

double phi_det(const FiniteGroup& g, int k, double lambda, double mu) {
  LevelMatrix a = adjacency_matrix(g, k);
  LevelMatrix s = garbage_matrix(g.order(), k);
  const int dim = a.dim;
  std::vector<double> m = a.dense(1.0);
  for (int i = 0; i < dim; ++i) m[static_cast<size_t>(i) * dim + i] -= lambda;
  for (int r = 0; r < dim; ++r)
    for (const auto& [c, w] : s.rows[r]) m[static_cast<size_t>(r) * dim + c] -= mu * w;

  // LU with partial pivoting
  double det = 1.0;
  for (int col = 0; col < dim; ++col) {
    int pivot = col;
    for (int r = col + 1; r < dim; ++r)
      if (std::fabs(m[static_cast<size_t>(r) * dim + col]) >
          std::fabs(m[static_cast<size_t>(pivot) * dim + col]))
        pivot = r;
    if (m[static_cast<size_t>(pivot) * dim + col] == 0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < dim; ++c)
        std::swap(m[static_cast<size_t>(pivot) * dim + c], m[static_cast<size_t>(col) * dim + c]);
      det = -det;
    }
    double d = m[static_cast<size_t>(col) * dim + col];
    det *= d;
    for (int r = col + 1; r < dim; ++r) {
      double factor = m[static_cast<size_t>(r) * dim + col] / d;
      if (factor == 0) continue;
      for (int c = col; c < dim; ++c)
        m[static_cast<size_t>(r) * dim + c] -= factor * m[static_cast<size_t>(col) * dim + c];
    }
  }
  return det;
}

double SpectrumAtom::value() const {
  if (q == 1) return 1.0;
  return std::cos(M_PI * p / q);
}

long long SpectrumAtomList::total_multiplicity() const {
  long long total = 0;
  for (const auto& a : atoms) total += a.multiplicity;
  return total;
}

long long closed_form_multiplicity(int n, int k, int q) {
  long long sum = 0;
  for (int i = 1; q * i <= k; ++i) {
    long long v = 1;
    for (int t = 0; t < k - q * i; ++t) v *= n;
    sum += v;
  }
  long long mult = static_cast<long long>(n - 1) * (n - 1) * sum;
  if ((k + 1) % q == 0) mult += n - 1;
  return mult;
}

Rat closed_form_multiplicity_rearranged(int n, int k, int q) {
  // n^k (n-1)^2 ((1 - n^{-q([k/q]+1)}) / (1 - n^{-q}) - 1) + (n-1) [q | k+1]
  Rat ninv(1, n);
  ninv.canonicalize();
  long e = (k / q + 1) * q;
  Rat numerator = Rat(1) - rat_pow(ninv, e);
  Rat denominator = Rat(1) - rat_pow(ninv, q);
  Rat inner = numerator / denominator - 1;
  Rat result = Rat(int_pow(n, k)) * Rat(static_cast<long>(n - 1) * (n - 1)) * inner;
  if ((k + 1) % q == 0) result += n - 1;
  result.canonicalize();
  return result;
}

SpectrumAtomList closed_form_spectrum(int n, int k) {
  if (k < 0) throw DomainError("level-too-large", "negative level");
  SpectrumAtomList list;
  list.n = n;
  list.level = k;
  list.atoms.push_back({0, 1, 1}); // the Perron eigenvalue 1
  for (int q = 2; q <= k + 1; ++q) {
    long long mult = closed_form_multiplicity(n, k, q);
    if (mult == 0) continue;
    for (int p = 1; p < q; ++p)
      if (gcd_ul(p, q) == 1) list.atoms.push_back({p, q, mult});
  }
  std::sort(list.atoms.begin(), list.atoms.end(),
            [](const SpectrumAtom& a, const SpectrumAtom& b) { return a.value() > b.value(); });
  return list;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int dim, double threshold,
                                       int max_sweeps) {
  if (dim == 1) return {a[0]};
  auto at = [&a, dim](int r, int c) -> double& { return a[static_cast<size_t>(r) * dim + c]; };
  double frob = 0;
  for (double v : a) frob += v * v;
  frob = std::sqrt(frob);
  if (frob == 0) return std::vector<double>(dim, 0.0);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (int r = 0; r < dim; ++r)
      for (int c = r + 1; c < dim; ++c) off += 2 * at(r, c) * at(r, c);
    off = std::sqrt(off);
    if (off <= threshold * frob) {
      std::vector<double> eig(dim);
      for (int i = 0; i < dim; ++i) eig[i] = at(i, i);
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    const double skip_below = off / (dim * static_cast<double>(dim)) * 1e-2;
    for (int p = 0; p < dim - 1; ++p)
      for (int q = p + 1; q < dim; ++q) {
        double apq = at(p, q);
        if (std::fabs(apq) <= skip_below) continue;
        double app = at(p, p), aqq = at(q, q);
        double theta = (aqq - app) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1.0 / std::sqrt(t * t + 1);
        double s = t * c;

        double* rowp = &a[static_cast<size_t>(p) * dim];
        double* rowq = &a[static_cast<size_t>(q) * dim];
        for (int j = 0; j < dim; ++j) {
          double vp = rowp[j], vq = rowq[j];
          rowp[j] = c * vp - s * vq;
          rowq[j] = s * vp + c * vq;
        }
        for (int i = 0; i < dim; ++i) {
          double vp = at(i, p), vq = at(i, q);
          at(i, p) = c * vp - s * vq;
          at(i, q) = s * vp + c * vq;
        }
      }
  }
  throw DomainError("no-convergence", "Jacobi sweep cap reached");
}

// Householder reduction to tridiagonal form (eigenvalues only) followed by
// the implicit-shift QL iteration; both are the standard in-place dense
// routines.
std::vector<double> householder_eigenvalues(std::vector<double> a, int dim) {
  std::vector<double> d(dim, 0.0), e(dim, 0.0);
  auto at = [&a, dim](int r, int c) -> double& { return a[static_cast<size_t>(r) * dim + c]; };

  for (int i = dim - 1; i >= 1; --i) {
    int l = i - 1;
    double h = 0, scale = 0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0;
        for (int j = 0; j <= l; ++j) {
          g = 0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  for (int i = 0; i < dim; ++i) d[i] = at(i, i);

  // implicit-shift QL on (d, e)
  for (int i = 1; i < dim; ++i) e[i - 1] = e[i];
  e[dim - 1] = 0;
  double anorm = 0;
  for (int i = 0; i < dim; ++i) anorm = std::max(anorm, std::fabs(d[i]) + std::fabs(e[i]));
  // absolute floor keeps clusters at zero from stalling the deflation test
  const double floor_eps = std::numeric_limits<double>::epsilon() * std::max(anorm, 1e-300);
  for (int l = 0; l < dim; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < dim - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd ||
            std::fabs(e[m]) <= floor_eps)
          break;
      }
      if (m != l) {
        if (iter++ == 64) throw DomainError("no-convergence", "QL iteration cap reached");
        double g = (d[l + 1] - d[l]) / (2 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::fabs(r) : -std::fabs(r)));
        double s = 1, c = 1, p = 0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::pair<double, long long>> numeric_spectrum(const LevelMatrix& a, double tol) {
  if (static_cast<std::size_t>(a.dim) > config::dense_eigen_cap())
    throw DomainError("level-too-large", "matrix exceeds the dense eigensolver budget");
  const double scale = 1.0 / (2.0 * a.group_order);
  std::vector<double> dense = a.dense(scale);
  std::vector<double> eig = a.dim <= 64 ? jacobi_eigenvalues(std::move(dense), a.dim)
                                        : householder_eigenvalues(std::move(dense), a.dim);

  std::vector<std::pair<double, long long>> clusters;
  const double cluster_gap = std::max(tol * 1e-1, 1e-10);
  for (double v : eig) {
    if (!clusters.empty() && std::fabs(v - clusters.back().first) <= cluster_gap) {
      // running mean keeps the representative centered
      auto& [pos, count] = clusters.back();
      pos = (pos * count + v) / (count + 1);
      ++count;
    } else {
      clusters.emplace_back(v, 1);
    }
  }
  return clusters;
}

bool spectrum_matches(const SpectrumAtomList& atoms,
                      const std::vector<std::pair<double, long long>>& numeric, double pos_tol) {
  if (atoms.atoms.size() != numeric.size()) return false;
  std::vector<SpectrumAtom> sorted = atoms.atoms;
  std::sort(sorted.begin(), sorted.end(),
            [](const SpectrumAtom& a, const SpectrumAtom& b) { return a.value() < b.value(); });
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (std::fabs(sorted[i].value() - numeric[i].first) > pos_tol) return false;
    if (sorted[i].multiplicity != numeric[i].second) return false;
  }
  return true;
}

} // namespace cayley
