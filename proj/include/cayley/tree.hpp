#ifndef CAYLEY_TREE_HPP
#define CAYLEY_TREE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/machine.hpp"
#include "cayley/rationals.hpp"

namespace cayley {

// One generator occurrence: the reset-automaton state g with exponent +1
// (the generator \bar g) or -1 (its inverse, a Cayley-machine state).
struct GenLetter {
  int g = 0;
  int exp = +1;
  bool operator==(const GenLetter& o) const { return g == o.g && exp == o.exp; }
};

// Permutation of the n^k words of length k; a word is encoded with its
// FIRST letter most significant, so restricting to the first k-1 letters
// is integer division by n.
struct LevelAction {
  int level = 0;
  int arity = 1; // alphabet size n
  std::vector<int> images;

  long long points() const { return static_cast<long long>(images.size()); }
  bool is_bijection() const;
};

// Elements of the automata group generated by the reset automaton A(G),
// given as words over the generators and their inverses.  The product
// machine (pruned to reachable states and minimized) is built lazily and
// cached; all queries below run on it.
class TreeElement {
public:
  explicit TreeElement(const FiniteGroup& g);                       // identity
  static TreeElement generator(const FiniteGroup& g, int state, int exp = +1);
  static TreeElement from_word(const FiniteGroup& g, std::vector<GenLetter> word);
  // x = A(G)_1, the automaton state at the group identity.
  static TreeElement x(const FiniteGroup& g);
  // The copy of G inside the automata group: g |-> x * C(G)_g, which maps
  // (g0, g1, ...) to (g*g0, g1, ...).
  static TreeElement embedded(const FiniteGroup& g, int elem);
  // x^m * embedded(g) * x^-m
  static TreeElement conjugated_embedded(const FiniteGroup& g, int elem, int m);

  TreeElement operator*(const TreeElement& o) const;
  TreeElement inverse() const;

  const FiniteGroup& group() const { return ctx_->group; }
  int arity() const { return ctx_->group.order(); }
  const std::vector<GenLetter>& word() const { return word_; }
  std::string word_str() const;

  const MealyMachine& machine() const;
  int start() const;

  std::vector<int> apply(const std::vector<int>& w) const;
  // Oracle route: apply the letters one at a time through the base machines.
  std::vector<int> apply_letterwise(const std::vector<int>& w) const;

  bool is_identity() const;

private:
  struct Context {
    FiniteGroup group;
    MealyMachine reset;  // exp +1 letters
    MealyMachine cayley; // exp -1 letters
  };
  explicit TreeElement(std::shared_ptr<const Context> ctx) : ctx_(std::move(ctx)) {}
  static std::shared_ptr<const Context> make_context(const FiniteGroup& g);
  void build_machine() const;

  std::shared_ptr<const Context> ctx_;
  std::vector<GenLetter> word_;
  mutable std::shared_ptr<const MealyMachine> machine_;
  mutable int start_ = 0;
};

LevelAction level_permutation(const TreeElement& e, int k);

// pi_k for all n generators at once via the wreath recursion
// g_i^(k+1) -> g_i^-1(g_1^(k), ..., g_n^(k)); the independent route against
// which the direct machine action is checked.
std::vector<LevelAction> generator_level_permutations_recursive(const FiniteGroup& g, int k);

// Least d <= k_max such that every residual state after d letters acts as
// the identity; nullopt when the element is not finitary within k_max.
std::optional<int> depth(const TreeElement& e, int k_max);

// |Fix_k| by transfer-matrix counting of diagonal paths in the element's
// product machine.
Int fix_count(const TreeElement& e, int k);

// |Fix_k| / n^k for k = 0..k_max (non-increasing).
std::vector<Rat> fix_measure_profile(const TreeElement& e, int k_max);

// chi_{pi_k}(e) / n^k
Rat fixed_point_character(const TreeElement& e, int k);

struct FreenessEntry {
  std::vector<GenLetter> word;
  std::string word_str;
  enum class Kind { identity, measure_zero, interior_witness } kind;
  int decay_p = 0;                // per-state escape bound used in Fix_{pk} <= (n^p-1)^k
  bool decay_verified = false;    // bound checked against fix_count up to the budget
  std::vector<int> witness;       // fixed cylinder prefix, when kind == interior_witness
};

struct FreenessReport {
  int word_len_max = 0;
  int k_max = 0;
  int tested = 0;
  bool free_on_ball = true;
  std::vector<FreenessEntry> entries;
};

// Classifies every freely reduced word over the given generators (and their
// inverses) up to word_len_max.  The verdict covers only the tested ball.
FreenessReport freeness_report(const std::vector<TreeElement>& generators, int word_len_max,
                               int k_max);
FreenessReport freeness_report(const FiniteGroup& g, int word_len_max, int k_max);

} // namespace cayley

#endif
