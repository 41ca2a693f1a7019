#ifndef CAYLEY_WALKS_HPP
#define CAYLEY_WALKS_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cayley/group.hpp"
#include "cayley/rationals.hpp"

namespace cayley {

// Element of G wr Z: an integer shift and a finite-support lamp
// configuration.  Lamps never store the group identity and are kept sorted
// by position, so equality is structural.
struct WreathElement {
  int shift = 0;
  std::vector<std::pair<int, int>> lamps; // (position, element index != 0)

  bool is_identity() const { return shift == 0 && lamps.empty(); }
  bool operator==(const WreathElement& o) const { return shift == o.shift && lamps == o.lamps; }
};

// (f1, m1)(f2, m2) = (f1 . shift^{m1} f2, m1 + m2), (shift^m f)(i) = f(i - m).
WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b,
                              const FiniteGroup& g);
WreathElement wreath_inverse(const WreathElement& a, const FiniteGroup& g);

// Symmetric generating set S = {t g_1, ..., t g_n, g_1 t^-1, ..., g_n t^-1}
// of the wreath product, each generator with probability 1/(2n).
std::vector<std::pair<WreathElement, Rat>> step_distribution(const FiniteGroup& g);

// Exact distribution of the m-step walk; probabilities are counts over
// (2n)^m.  Throws "budget-exceeded" beyond the step budget.
class WalkDistribution {
public:
  WalkDistribution(const FiniteGroup& g, int steps);

  int steps() const { return steps_; }
  Rat probability(const WreathElement& e) const;
  Rat identity_mass() const;
  Rat total_mass() const;
  std::size_t support_size() const { return counts_.size(); }
  std::vector<std::pair<WreathElement, Rat>> entries() const;
  bool inversion_symmetric() const;

private:
  friend Rat return_probability(const FiniteGroup& g, int m);
  const FiniteGroup* group_;
  int steps_ = 0;
  Int denom_ = 1;
  std::unordered_map<std::uint64_t, long long> counts_;
};

// p_m(1): the fraction of words in S^m representing the identity.  Uses the
// distributions at m/2 (the walk is symmetric), which keeps the budget at
// twice the half-step support.
Rat return_probability(const FiniteGroup& g, int m);

// p_m(1) for m = 0..m_max.
std::vector<Rat> kesten_moments(const FiniteGroup& g, int m_max);

// Seeded Monte Carlo estimate for steps beyond the exact budget; clearly
// approximate.
double monte_carlo_return(const FiniteGroup& g, int m, long long samples, std::uint64_t seed);

} // namespace cayley

#endif
