#include "cayley/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cayley/error.hpp"

namespace cayley {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images[i] != i) return false;
  return true;
}

bool Permutation::is_bijection() const {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images.resize(images.size());
  for (int i = 0; i < size(); ++i) p.images[images[i]] = i;
  return p;
}

Permutation Permutation::then(const Permutation& b) const {
  Permutation p;
  p.images.resize(images.size());
  for (int i = 0; i < size(); ++i) p.images[i] = b.images[images[i]];
  return p;
}

Permutation Permutation::after(const Permutation& b) const { return b.then(*this); }

void FiniteGroup::finalize() {
  n_ = static_cast<int>(table_.size());
  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
  abelian_ = true;
  for (int a = 0; a < n_ && abelian_; ++a)
    for (int b = 0; b < a; ++b)
      if (table_[a][b] != table_[b][a]) {
        abelian_ = false;
        break;
      }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw DomainError("invalid-order", "cyclic group order must be >= 1");
  FiniteGroup g;
  g.table_.assign(n, std::vector<int>(n));
  g.labels_.resize(n);
  for (int i = 0; i < n; ++i) {
    g.labels_[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) g.table_[i][j] = (i + j) % n;
  }
  g.finalize();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels,
                                    std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw DomainError("invalid-order", "empty table");
  if (static_cast<int>(labels.size()) != n)
    throw DomainError("invalid-order", "labels/table size mismatch");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw DomainError("invalid-order", "table is not square");

  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n) throw DomainError("not-a-latin-square", "index out of range");
  // Latin square: rows and columns are permutations.
  for (int i = 0; i < n; ++i) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int j = 0; j < n; ++j) {
      if (row_seen[table[i][j]])
        throw DomainError("not-a-latin-square", "repeated entry in row " + std::to_string(i));
      row_seen[table[i][j]] = 1;
      if (col_seen[table[j][i]])
        throw DomainError("not-a-latin-square", "repeated entry in column " + std::to_string(i));
      col_seen[table[j][i]] = 1;
    }
  }

  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (table[e][a] != a || table[a][e] != a) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw DomainError("no-identity", "table has no two-sided identity");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw DomainError("not-associative", "associativity fails at (" + std::to_string(a) +
                                                   "," + std::to_string(b) + "," +
                                                   std::to_string(c) + ")");

  // Canonical ordering: identity first, other elements keep their order.
  if (id != 0) {
    std::vector<int> old_of_new(n), new_of_old(n);
    old_of_new[0] = id;
    int next = 1;
    for (int i = 0; i < n; ++i)
      if (i != id) old_of_new[next++] = i;
    for (int i = 0; i < n; ++i) new_of_old[old_of_new[i]] = i;
    std::vector<std::vector<int>> t2(n, std::vector<int>(n));
    std::vector<std::string> l2(n);
    for (int i = 0; i < n; ++i) {
      l2[i] = labels[old_of_new[i]];
      for (int j = 0; j < n; ++j)
        t2[i][j] = new_of_old[table[old_of_new[i]][old_of_new[j]]];
    }
    table = std::move(t2);
    labels = std::move(l2);
  }

  FiniteGroup g;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  g.finalize();
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  auto idx = [nb](int i, int j) { return i * nb + j; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      labels[idx(i, j)] = a.label(i) + "|" + b.label(j);
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          table[idx(i, j)][idx(k, l)] = idx(a.mul(i, k), b.mul(j, l));
    }
  return from_table(std::move(labels), std::move(table));
}

namespace {

FiniteGroup group_from_perms(std::vector<std::vector<int>> elems,
                             const std::vector<std::string>& names) {
  std::sort(elems.begin(), elems.end());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index[elems[i]] = i;
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> prod(elems[i].size());
      // (p*q)(x) = p(q(x)): left action composition
      for (size_t x = 0; x < prod.size(); ++x) prod[x] = elems[i][elems[j][x]];
      table[i][j] = index.at(prod);
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    if (!names.empty()) {
      labels[i] = names[i];
    } else {
      std::string s;
      for (int v : elems[i]) s += std::to_string(v);
      labels[i] = s;
    }
  }
  return FiniteGroup::from_table(std::move(labels), std::move(table));
}

} // namespace

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::vector<int>> elems = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return group_from_perms(std::move(elems), {});
}

FiniteGroup FiniteGroup::dihedral4() {
  // Generated by the 4-cycle r and a reflection s on the square's corners.
  std::vector<int> r = {1, 2, 3, 0};
  std::vector<int> s = {1, 0, 3, 2};
  std::set<std::vector<int>> closure;
  std::vector<std::vector<int>> frontier = {{0, 1, 2, 3}};
  closure.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : {r, s}) {
        std::vector<int> q(4);
        for (int x = 0; x < 4; ++x) q[x] = g[p[x]];
        if (closure.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> elems(closure.begin(), closure.end());
  return group_from_perms(std::move(elems), {});
}

FiniteGroup FiniteGroup::quaternion8() {
  // Elements as (sign, axis) with axis 0=1, 1=i, 2=j, 3=k.
  auto enc = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
  const std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // i*j = k etc.; table over axes with result sign.
  static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{+1, +1, +1, +1},
                                     {+1, -1, +1, -1},
                                     {+1, -1, -1, +1},
                                     {+1, +1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = a / 2, bx = b / 2;
      int sa = (a % 2) ? -1 : +1, sb = (b % 2) ? -1 : +1;
      int cx = axis_mul[ax][bx];
      int sc = sa * sb * sign_mul[ax][bx];
      table[a][b] = enc(sc, cx);
    }
  return from_table(names, std::move(table));
}

int FiniteGroup::index_of_label(const std::string& s) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == s) return i;
  return -1;
}

Permutation FiniteGroup::regular_perm(int g) const {
  Permutation p;
  p.images.resize(n_);
  for (int i = 0; i < n_; ++i) p.images[i] = table_[g][i];
  return p;
}

int FiniteGroup::element_order(int g) const {
  int k = 1, x = g;
  while (x != 0) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_central(int g) const {
  for (int a = 0; a < n_; ++a)
    if (mul(g, a) != mul(a, g)) return false;
  return true;
}

bool FiniteGroup::is_2_power_order(int g) const {
  int k = element_order(g);
  while (k % 2 == 0) k /= 2;
  return k == 1;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::set<int> closure = {0};
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int g : gens) {
        int b = mul(a, g);
        if (closure.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return std::vector<int>(closure.begin(), closure.end());
}

} // namespace cayley
