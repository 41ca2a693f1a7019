#ifndef CAYLEY_WORDS_HPP
#define CAYLEY_WORDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

// Word over the variables t_0, t_1, ...; entries are variable indices.
using VarWord = std::vector<int>;

// w_{-1} = empty, w_0 = t_0,
// w_{n+1}(t_0..t_{n+1}) = w_n(t_0, t_0 t_1, ..., t_0...t_n) t_0...t_{n+1}.
VarWord w_sequence(int n);

// Occurrences of t_i in w_n; equals 2^{n-i}.
long long letter_count(int n, int i);

// Substitute group elements for the variables and multiply left to right.
int substitute(const VarWord& w, const std::vector<int>& values, const FiniteGroup& g);

// Checks that the last entry of x^n g x^{-n}(g_0,...,g_n) equals
// (g^{(-1)^n})^{w_{n-1}(g_0,...,g_{n-1})} g_n, evaluating the left side
// through the tree action and the right through substitution.
bool last_entry_check(const FiniteGroup& g, int elem, const std::vector<int>& tuple);

struct GammaWitnessReport {
  int theorem = 0;
  int n = 0;
  int p = 0;                  // theorem 1 only
  int g = -1, h = -1, f = -1; // chosen elements (f used by theorem 2)
  int v = -1;                 // theorem 1: v = g h^-1
  bool letters_differ = false;
  int certified_depth = 0; // p^n + 1 resp. n + 1 when letters differ
  bool expected_difference = true; // theorem 2: h^{2^{n-1}} = 1 predicts a difference
  std::string note;
};

struct GammaConfig {
  int theorem = 1;
  int n = 1;
};

// Depth witnesses from the wreath-product non-embeddability arguments.
// Theorem 1 needs a non-central element of odd order; theorem 2 a triple
// g, f, h inside a 2-subgroup with [h, f] not commuting with g.  Throws
// "hypothesis-not-satisfied" when no qualifying elements exist; for
// 2-groups of nilpotency class 2 the theorem-2 report records the exclusion.
GammaWitnessReport gamma_depth_witness(const FiniteGroup& g, const GammaConfig& config);

} // namespace cayley

#endif
