#include "cayley/words.hpp"

#include <algorithm>

#include "cayley/error.hpp"
#include "cayley/tree.hpp"

namespace cayley {

VarWord w_sequence(int n) {
  if (n < -1) throw DomainError("out-of-range", "w_n needs n >= -1");
  if (n == -1) return {};
  VarWord w = {0};
  for (int m = 0; m < n; ++m) {
    VarWord next;
    next.reserve(2 * w.size() + m + 2);
    // t_j in w_m becomes the prefix product t_0 t_1 ... t_j
    for (int v : w)
      for (int j = 0; j <= v; ++j) next.push_back(j);
    for (int j = 0; j <= m + 1; ++j) next.push_back(j);
    w = std::move(next);
  }
  return w;
}

long long letter_count(int n, int i) {
  if (i < 0 || i > n) throw DomainError("out-of-range", "letter index outside content");
  VarWord w = w_sequence(n);
  long long count = std::count(w.begin(), w.end(), i);
  long long predicted = 1LL << (n - i);
  if (count != predicted)
    throw DomainError("internal", "letter count disagrees with 2^(n-i)");
  return count;
}

int substitute(const VarWord& w, const std::vector<int>& values, const FiniteGroup& g) {
  int result = g.identity();
  for (int v : w) {
    if (v < 0 || v >= static_cast<int>(values.size()))
      throw DomainError("missing-variable", "no value for t_" + std::to_string(v));
    result = g.mul(result, values[v]);
  }
  return result;
}

bool last_entry_check(const FiniteGroup& g, int elem, const std::vector<int>& tuple) {
  const int n = static_cast<int>(tuple.size()) - 1;
  if (n < 0) throw DomainError("out-of-range", "tuple must have length >= 1");

  TreeElement e = TreeElement::conjugated_embedded(g, elem, n);
  std::vector<int> image = e.apply(tuple);
  int lhs = image.back();

  std::vector<int> head(tuple.begin(), tuple.end() - 1);
  int w_val = substitute(w_sequence(n - 1), head, g);
  int base = (n % 2 == 0) ? elem : g.inverse(elem);
  int conj = g.mul(g.mul(g.inverse(w_val), base), w_val);
  int rhs = g.mul(conj, tuple.back());
  return lhs == rhs;
}

namespace {

bool subgroup_is_2_group(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<int> closure = g.generated_subgroup(gens);
  size_t size = closure.size();
  while (size % 2 == 0) size /= 2;
  return size == 1;
}

bool has_nonabelian_2_subgroup(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a) {
    if (!g.is_2_power_order(a)) continue;
    for (int b = 0; b < g.order(); ++b) {
      if (!g.is_2_power_order(b)) continue;
      if (g.mul(a, b) == g.mul(b, a)) continue;
      if (subgroup_is_2_group(g, {a, b})) return true;
    }
  }
  return false;
}

} // namespace

GammaWitnessReport gamma_depth_witness(const FiniteGroup& g, const GammaConfig& config) {
  GammaWitnessReport report;
  report.theorem = config.theorem;
  report.n = config.n;
  if (config.n < 1) throw DomainError("out-of-range", "n must be >= 1");

  if (config.theorem == 1) {
    int chosen_g = -1;
    for (int a = 0; a < g.order(); ++a)
      if (g.element_order(a) % 2 == 1 && g.element_order(a) > 1 && !g.is_central(a)) {
        chosen_g = a;
        break;
      }
    if (chosen_g < 0)
      throw DomainError("hypothesis-not-satisfied", "no non-central element of odd order");

    int chosen_h = -1, best_order = 0;
    for (int b = 0; b < g.order(); ++b) {
      if (g.mul(chosen_g, b) == g.mul(b, chosen_g)) continue;
      int o = g.element_order(b);
      if (chosen_h < 0 || o < best_order) {
        chosen_h = b;
        best_order = o;
      }
    }
    int p = 2;
    while (best_order % p != 0) ++p;

    report.g = chosen_g;
    report.h = chosen_h;
    report.p = p;
    report.v = g.mul(chosen_g, g.inverse(chosen_h));

    long long m = 1;
    for (int i = 0; i < config.n; ++i) m *= p;

    // gamma = (x^m h^-1 x^-m) v (x^m h x^-m), acting on the all-identity
    // word of length m+1; a moved last letter certifies depth m+1.
    TreeElement u = TreeElement::conjugated_embedded(g, chosen_h, static_cast<int>(m));
    TreeElement u_inv =
        TreeElement::conjugated_embedded(g, g.inverse(chosen_h), static_cast<int>(m));
    TreeElement gamma = u_inv * TreeElement::embedded(g, report.v) * u;

    std::vector<int> ones(m + 1, g.identity());
    std::vector<int> image = gamma.apply(ones);
    report.letters_differ = image.back() != g.identity();
    report.certified_depth = report.letters_differ ? static_cast<int>(m) + 1 : 0;
    report.note = report.letters_differ ? "depth certified" : "no difference at this n";
    return report;
  }

  if (config.theorem != 2) throw DomainError("out-of-range", "theorem must be 1 or 2");
  if (config.n < 3) throw DomainError("out-of-range", "theorem 2 needs n >= 3");

  int cg = -1, cf = -1, ch = -1;
  for (int a = 0; a < g.order() && cg < 0; ++a) {
    if (!g.is_2_power_order(a)) continue;
    for (int f = 0; f < g.order() && cg < 0; ++f) {
      if (!g.is_2_power_order(f)) continue;
      for (int h = 0; h < g.order(); ++h) {
        if (!g.is_2_power_order(h)) continue;
        int c = g.mul(g.mul(g.inverse(h), f), g.mul(h, g.inverse(f)));
        if (g.mul(c, a) == g.mul(a, c)) continue;
        if (!subgroup_is_2_group(g, {a, f, h})) continue;
        cg = a;
        cf = f;
        ch = h;
        break;
      }
    }
  }
  if (cg < 0) {
    if (has_nonabelian_2_subgroup(g)) {
      report.note = "no qualifying triple: 2-subgroups are nilpotent of class <= 2 "
                    "(excluded case)";
      return report;
    }
    throw DomainError("hypothesis-not-satisfied",
                      "no 2-subgroup triple with a non-commuting commutator");
  }

  report.g = cg;
  report.f = cf;
  report.h = ch;
  const int n = config.n;
  report.expected_difference = (1 << (n - 1)) % g.element_order(ch) == 0;

  TreeElement e = TreeElement::conjugated_embedded(g, cg, n);
  std::vector<int> w1(n + 1, g.identity());
  w1[n - 2] = cf;
  std::vector<int> w2 = w1;
  w2[0] = ch;
  int last1 = e.apply(w1).back();
  int last2 = e.apply(w2).back();
  report.letters_differ = last1 != last2;
  report.certified_depth = report.letters_differ ? n + 1 : 0;
  report.note = report.letters_differ ? "depth certified" : "no difference at this n";
  return report;
}

} // namespace cayley
