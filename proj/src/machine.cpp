#include "cayley/machine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "cayley/error.hpp"

namespace cayley {

MealyMachine::MealyMachine(int states, int alphabet)
    : states_(states),
      alphabet_(alphabet),
      trans_(static_cast<size_t>(states) * alphabet, 0),
      out_(static_cast<size_t>(states) * alphabet, 0) {}

void MealyMachine::set(int q, int a, int next_state, int output) {
  trans_[q * alphabet_ + a] = next_state;
  out_[q * alphabet_ + a] = output;
}

MealyMachine MealyMachine::identity(int alphabet) {
  MealyMachine m(1, alphabet);
  for (int a = 0; a < alphabet; ++a) m.set(0, a, 0, a);
  return m;
}

MealyMachine MealyMachine::cayley(const FiniteGroup& g) {
  const int n = g.order();
  MealyMachine m(n, n);
  for (int q = 0; q < n; ++q)
    for (int a = 0; a < n; ++a) {
      int p = g.mul(q, a);
      m.set(q, a, p, p);
    }
  m.set_state_labels(g.labels());
  return m;
}

MealyMachine MealyMachine::reset_inverse(const FiniteGroup& g) {
  const int n = g.order();
  MealyMachine m(n, n);
  for (int q = 0; q < n; ++q)
    for (int a = 0; a < n; ++a) m.set(q, a, a, g.mul(g.inverse(q), a));
  m.set_state_labels(g.labels());
  return m;
}

bool MealyMachine::invertible() const {
  std::vector<char> seen(alphabet_);
  for (int q = 0; q < states_; ++q) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < alphabet_; ++a) {
      int b = out(q, a);
      if (seen[b]) return false;
      seen[b] = 1;
    }
  }
  return true;
}

bool MealyMachine::is_reset() const {
  for (int a = 0; a < alphabet_; ++a)
    for (int q = 1; q < states_; ++q)
      if (next(q, a) != next(0, a)) return false;
  return true;
}

MealyMachine MealyMachine::inverted() const {
  if (!invertible()) throw DomainError("not-invertible", "output map is not a permutation");
  MealyMachine m(states_, alphabet_);
  for (int q = 0; q < states_; ++q)
    for (int a = 0; a < alphabet_; ++a) {
      int b = out(q, a);
      m.set(q, b, next(q, a), a);
    }
  m.set_state_labels(state_labels_);
  return m;
}

std::vector<int> MealyMachine::act(int q, const std::vector<int>& word) const {
  std::vector<int> result(word.size());
  int s = q;
  for (size_t i = 0; i < word.size(); ++i) {
    result[i] = out(s, word[i]);
    s = next(s, word[i]);
  }
  return result;
}

std::vector<bool> MealyMachine::identity_states() const {
  std::vector<bool> in_set(states_);
  for (int q = 0; q < states_; ++q) {
    bool id_row = true;
    for (int a = 0; a < alphabet_ && id_row; ++a)
      if (out(q, a) != a) id_row = false;
    in_set[q] = id_row;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int q = 0; q < states_; ++q) {
      if (!in_set[q]) continue;
      for (int a = 0; a < alphabet_; ++a)
        if (!in_set[next(q, a)]) {
          in_set[q] = false;
          changed = true;
          break;
        }
    }
  }
  return in_set;
}

std::optional<std::vector<int>> MealyMachine::diagonal_reachable_identity(int q) const {
  std::vector<bool> id = identity_states();
  if (id[q]) return std::vector<int>{}; // empty prefix
  std::vector<int> parent(states_, -1), letter(states_, -1);
  std::vector<char> seen(states_, 0);
  std::deque<int> queue;
  queue.push_back(q);
  seen[q] = 1;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int a = 0; a < alphabet_; ++a) {
      if (out(s, a) != a) continue; // only prefixes fixed letter-by-letter
      int t = next(s, a);
      if (seen[t]) continue;
      seen[t] = 1;
      parent[t] = s;
      letter[t] = a;
      if (id[t]) {
        std::vector<int> u;
        for (int c = t; c != q; c = parent[c]) u.push_back(letter[c]);
        std::reverse(u.begin(), u.end());
        return u;
      }
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

MealyMachine MealyMachine::minimized(std::vector<int>* start_map) const {
  // Moore refinement: split by output rows, then by transition class rows.
  std::vector<int> cls(states_);
  {
    std::map<std::vector<int>, int> sig;
    for (int q = 0; q < states_; ++q) {
      std::vector<int> row(alphabet_);
      for (int a = 0; a < alphabet_; ++a) row[a] = out(q, a);
      auto it = sig.emplace(std::move(row), static_cast<int>(sig.size()));
      cls[q] = it.first->second;
    }
  }
  int count = 0;
  for (int q = 0; q < states_; ++q) count = std::max(count, cls[q] + 1);
  while (true) {
    std::map<std::vector<int>, int> sig;
    std::vector<int> next_cls(states_);
    for (int q = 0; q < states_; ++q) {
      std::vector<int> row(alphabet_ + 1);
      row[0] = cls[q];
      for (int a = 0; a < alphabet_; ++a) row[a + 1] = cls[next(q, a)];
      auto it = sig.emplace(std::move(row), static_cast<int>(sig.size()));
      next_cls[q] = it.first->second;
    }
    int next_count = static_cast<int>(sig.size());
    bool stable = (next_count == count);
    cls = std::move(next_cls);
    count = next_count;
    if (stable) break;
  }

  MealyMachine m(count, alphabet_);
  std::vector<char> done(count, 0);
  for (int q = 0; q < states_; ++q) {
    if (done[cls[q]]) continue;
    done[cls[q]] = 1;
    for (int a = 0; a < alphabet_; ++a) m.set(cls[q], a, cls[next(q, a)], out(q, a));
  }
  if (start_map) *start_map = cls;
  return m;
}

MealyMachine product(const MealyMachine& m1, int q1, const MealyMachine& m2, int q2,
                     int* start, std::size_t max_states) {
  if (m1.alphabet() != m2.alphabet())
    throw DomainError("alphabet-mismatch", "product requires a common alphabet");
  const int n = m1.alphabet();

  auto key = [&m2](int a, int b) { return static_cast<int64_t>(a) * m2.states() + b; };
  std::unordered_map<int64_t, int> index;
  std::vector<std::pair<int, int>> pairs;
  index[key(q1, q2)] = 0;
  pairs.emplace_back(q1, q2);

  std::vector<int> trans, outs;
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    for (int letter = 0; letter < n; ++letter) {
      int o2 = m2.out(b, letter);
      int b2 = m2.next(b, letter);
      int o1 = m1.out(a, o2);
      int a2 = m1.next(a, o2);
      auto it = index.find(key(a2, b2));
      int target;
      if (it == index.end()) {
        target = static_cast<int>(pairs.size());
        if (max_states && pairs.size() >= max_states)
          throw DomainError("budget-exceeded", "product machine exceeds state budget");
        index.emplace(key(a2, b2), target);
        pairs.emplace_back(a2, b2);
      } else {
        target = it->second;
      }
      trans.push_back(target);
      outs.push_back(o1);
    }
  }

  MealyMachine m(static_cast<int>(pairs.size()), n);
  for (int q = 0; q < m.states(); ++q)
    for (int a = 0; a < n; ++a) m.set(q, a, trans[q * n + a], outs[q * n + a]);
  if (start) *start = 0;
  return m;
}

bool action_equal(const MealyMachine& m1, int q1, const MealyMachine& m2, int q2) {
  if (m1.alphabet() != m2.alphabet()) return false;
  const int n = m1.alphabet();
  auto key = [&m2](int a, int b) { return static_cast<int64_t>(a) * m2.states() + b; };
  std::unordered_map<int64_t, char> seen;
  std::deque<std::pair<int, int>> queue;
  queue.emplace_back(q1, q2);
  seen[key(q1, q2)] = 1;
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (int letter = 0; letter < n; ++letter) {
      if (m1.out(a, letter) != m2.out(b, letter)) return false;
      int a2 = m1.next(a, letter), b2 = m2.next(b, letter);
      if (!seen[key(a2, b2)]) {
        seen[key(a2, b2)] = 1;
        queue.emplace_back(a2, b2);
      }
    }
  }
  return true;
}

} // namespace cayley
