#ifndef CAYLEY_MACHINE_HPP
#define CAYLEY_MACHINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

// Letter-to-letter transducer (Q, A, delta, lambda).  All machines here are
// total; the ones we build from groups are invertible, i.e. every state's
// one-letter output map is a permutation of the alphabet.
class MealyMachine {
public:
  MealyMachine() = default;
  MealyMachine(int states, int alphabet);

  static MealyMachine identity(int alphabet);
  // State set and alphabet are G; in state g0 on input g the machine moves
  // to g0*g and outputs g0*g.
  static MealyMachine cayley(const FiniteGroup& g);
  // Reset automaton computing the inverses of the Cayley machine's states:
  // in state g0 on input g it moves to g and outputs g0^-1*g.
  static MealyMachine reset_inverse(const FiniteGroup& g);

  int states() const { return states_; }
  int alphabet() const { return alphabet_; }
  int next(int q, int a) const { return trans_[q * alphabet_ + a]; }
  int out(int q, int a) const { return out_[q * alphabet_ + a]; }
  void set(int q, int a, int next_state, int output);

  const std::vector<std::string>& state_labels() const { return state_labels_; }
  void set_state_labels(std::vector<std::string> labels) { state_labels_ = std::move(labels); }

  bool invertible() const;
  // Every input letter determines the next state regardless of current state.
  bool is_reset() const;

  // Machine whose state q computes the inverse tree map of this machine's
  // state q.  Throws "not-invertible" if some output map is not a permutation.
  MealyMachine inverted() const;

  // Length-preserving action of state q on a word.
  std::vector<int> act(int q, const std::vector<int>& word) const;

  // States whose induced map on all words is the identity (greatest fixpoint:
  // identity output row and all transitions stay inside the set).
  std::vector<bool> identity_states() const;

  // Shortest word u such that state q fixes u letter-by-letter and the state
  // reached after u acts as the identity; nullopt if no such word exists.
  // A witness certifies that Fix(q) contains the whole cylinder u A^omega.
  std::optional<std::vector<int>> diagonal_reachable_identity(int q) const;

  // Quotient by action-equivalence (Moore refinement on output rows).
  // start_map, when given, receives old-state -> class index.
  MealyMachine minimized(std::vector<int>* start_map = nullptr) const;

private:
  int states_ = 0;
  int alphabet_ = 0;
  std::vector<int> trans_;
  std::vector<int> out_;
  std::vector<std::string> state_labels_;
};

struct MachineState {
  const MealyMachine* machine = nullptr;
  int state = 0;
};

// Machine on reachable state pairs computing the composition
// A_{q1} o A_{q2} (q2 reads the input first).  Throws "alphabet-mismatch".
MealyMachine product(const MealyMachine& m1, int q1, const MealyMachine& m2, int q2,
                     int* start, std::size_t max_states = 0);

// True iff the two states induce the same map on all words (bisimulation).
bool action_equal(const MealyMachine& m1, int q1, const MealyMachine& m2, int q2);

} // namespace cayley

#endif
