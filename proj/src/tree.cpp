#include "cayley/tree.hpp"

#include <algorithm>
#include <cmath>

#include "cayley/config.hpp"
#include "cayley/error.hpp"

namespace cayley {

bool LevelAction::is_bijection() const {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::shared_ptr<const TreeElement::Context> TreeElement::make_context(const FiniteGroup& g) {
  auto ctx = std::make_shared<Context>();
  ctx->group = g;
  ctx->reset = MealyMachine::reset_inverse(g);
  ctx->cayley = MealyMachine::cayley(g);
  return ctx;
}

TreeElement::TreeElement(const FiniteGroup& g) : ctx_(make_context(g)) {}

TreeElement TreeElement::generator(const FiniteGroup& g, int state, int exp) {
  TreeElement e(g);
  e.word_.push_back({state, exp});
  return e;
}

TreeElement TreeElement::from_word(const FiniteGroup& g, std::vector<GenLetter> word) {
  TreeElement e(g);
  for (const auto& l : word)
    if (l.g < 0 || l.g >= g.order() || (l.exp != 1 && l.exp != -1))
      throw DomainError("out-of-range", "bad generator letter");
  e.word_ = std::move(word);
  return e;
}

TreeElement TreeElement::x(const FiniteGroup& g) { return generator(g, g.identity(), +1); }

TreeElement TreeElement::embedded(const FiniteGroup& g, int elem) {
  TreeElement e(g);
  e.word_.push_back({g.identity(), +1}); // x
  e.word_.push_back({elem, -1});         // C(G)_elem
  return e;
}

TreeElement TreeElement::conjugated_embedded(const FiniteGroup& g, int elem, int m) {
  TreeElement e(g);
  for (int i = 0; i < m; ++i) e.word_.push_back({g.identity(), +1});
  e.word_.push_back({g.identity(), +1});
  e.word_.push_back({elem, -1});
  for (int i = 0; i < m; ++i) e.word_.push_back({g.identity(), -1});
  return e;
}

TreeElement TreeElement::operator*(const TreeElement& o) const {
  if (ctx_->group.order() != o.ctx_->group.order() ||
      ctx_->group.table() != o.ctx_->group.table())
    throw DomainError("alphabet-mismatch", "elements over different groups");
  TreeElement e(ctx_);
  e.word_ = word_;
  e.word_.insert(e.word_.end(), o.word_.begin(), o.word_.end());
  return e;
}

TreeElement TreeElement::inverse() const {
  TreeElement e(ctx_);
  e.word_.assign(word_.rbegin(), word_.rend());
  for (auto& l : e.word_) l.exp = -l.exp;
  return e;
}

std::string TreeElement::word_str() const {
  if (word_.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) s += "*";
    s += ctx_->group.label(word_[i].g);
    if (word_[i].exp < 0) s += "^-1";
  }
  return s;
}

void TreeElement::build_machine() const {
  if (machine_) return;
  if (word_.empty()) {
    machine_ = std::make_shared<MealyMachine>(MealyMachine::identity(ctx_->group.order()));
    start_ = 0;
    return;
  }
  // Right fold: the rightmost letter reads the input first.  Minimizing after
  // each product keeps intermediate machines near the size of the suffix
  // element's minimal automaton.
  const std::size_t cap = config::max_product_states();
  auto letter_machine = [this](const GenLetter& l) -> const MealyMachine& {
    return l.exp > 0 ? ctx_->reset : ctx_->cayley;
  };
  MealyMachine acc = letter_machine(word_.back());
  int start = word_.back().g;
  {
    std::vector<int> cls;
    acc = acc.minimized(&cls);
    start = cls[start];
  }
  for (int i = static_cast<int>(word_.size()) - 2; i >= 0; --i) {
    int s = 0;
    MealyMachine prod = product(letter_machine(word_[i]), word_[i].g, acc, start, &s, cap);
    std::vector<int> cls;
    acc = prod.minimized(&cls);
    start = cls[s];
  }
  machine_ = std::make_shared<MealyMachine>(std::move(acc));
  start_ = start;
}

const MealyMachine& TreeElement::machine() const {
  build_machine();
  return *machine_;
}

int TreeElement::start() const {
  build_machine();
  return start_;
}

std::vector<int> TreeElement::apply(const std::vector<int>& w) const {
  return machine().act(start(), w);
}

std::vector<int> TreeElement::apply_letterwise(const std::vector<int>& w) const {
  std::vector<int> cur = w;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    const MealyMachine& m = it->exp > 0 ? ctx_->reset : ctx_->cayley;
    cur = m.act(it->g, cur);
  }
  return cur;
}

bool TreeElement::is_identity() const { return machine().identity_states()[start()]; }

LevelAction level_permutation(const TreeElement& e, int k) {
  const int n = e.arity();
  double points = std::pow(static_cast<double>(n), k);
  if (k < 0 || points > static_cast<double>(config::max_level_points()))
    throw DomainError("level-too-large", "n^k exceeds the level budget");
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= n;

  LevelAction act;
  act.level = k;
  act.arity = n;
  act.images.resize(total);
  const MealyMachine& m = e.machine();
  const int q0 = e.start();
  std::vector<int> word(k);
  for (long long idx = 0; idx < total; ++idx) {
    long long rem = idx;
    for (int pos = k - 1; pos >= 0; --pos) {
      word[pos] = static_cast<int>(rem % n);
      rem /= n;
    }
    long long out_idx = 0;
    int q = q0;
    for (int pos = 0; pos < k; ++pos) {
      out_idx = out_idx * n + m.out(q, word[pos]);
      q = m.next(q, word[pos]);
    }
    act.images[idx] = static_cast<int>(out_idx);
  }
  return act;
}

std::vector<LevelAction> generator_level_permutations_recursive(const FiniteGroup& g, int k) {
  const int n = g.order();
  double points = std::pow(static_cast<double>(n), k);
  if (k < 0 || points > static_cast<double>(config::max_level_points()))
    throw DomainError("level-too-large", "n^k exceeds the level budget");

  std::vector<LevelAction> cur(n);
  for (int i = 0; i < n; ++i) {
    cur[i].level = 0;
    cur[i].arity = n;
    cur[i].images = {0};
  }
  for (int level = 0; level < k; ++level) {
    long long block = cur[0].points();
    std::vector<LevelAction> next(n);
    for (int i = 0; i < n; ++i) {
      next[i].level = level + 1;
      next[i].arity = n;
      next[i].images.resize(block * n);
      for (int b = 0; b < n; ++b) {
        int l = g.mul(g.inverse(i), b); // block row of the monomial matrix
        for (long long r = 0; r < block; ++r)
          next[i].images[b * block + r] = static_cast<int>(l * block + cur[b].images[r]);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::optional<int> depth(const TreeElement& e, int k_max) {
  const MealyMachine& m = e.machine();
  std::vector<bool> id = m.identity_states();
  std::vector<char> in_level(m.states(), 0);
  std::vector<int> level = {e.start()};
  in_level[e.start()] = 1;
  for (int d = 0; d <= k_max; ++d) {
    bool all_id = true;
    for (int q : level)
      if (!id[q]) {
        all_id = false;
        break;
      }
    if (all_id) return d;
    std::vector<int> nxt;
    std::fill(in_level.begin(), in_level.end(), 0);
    for (int q : level)
      for (int a = 0; a < m.alphabet(); ++a) {
        int t = m.next(q, a);
        if (!in_level[t]) {
          in_level[t] = 1;
          nxt.push_back(t);
        }
      }
    level = std::move(nxt);
  }
  return std::nullopt;
}

Int fix_count(const TreeElement& e, int k) {
  const MealyMachine& m = e.machine();
  const int n = m.alphabet();
  std::vector<Int> v(m.states());
  v[e.start()] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<Int> w(m.states());
    for (int q = 0; q < m.states(); ++q) {
      if (v[q] == 0) continue;
      for (int a = 0; a < n; ++a)
        if (m.out(q, a) == a) w[m.next(q, a)] += v[q];
    }
    v = std::move(w);
  }
  Int total = 0;
  for (const Int& c : v) total += c;
  return total;
}

std::vector<Rat> fix_measure_profile(const TreeElement& e, int k_max) {
  std::vector<Rat> profile;
  profile.reserve(k_max + 1);
  Int denom = 1;
  for (int k = 0; k <= k_max; ++k) {
    Rat r(fix_count(e, k), denom);
    r.canonicalize();
    profile.push_back(r);
    denom *= e.arity();
  }
  return profile;
}

Rat fixed_point_character(const TreeElement& e, int k) {
  Rat r(fix_count(e, k), int_pow(e.arity(), k));
  r.canonicalize();
  return r;
}

namespace {

// d(q) = least p with q not fixing all words of length p; identity states
// never escape.  FixAll_p = {q : identity output row, successors in
// FixAll_{p-1}} decreases to the identity-state set.
int escape_bound(const MealyMachine& m, int start, const std::vector<bool>& id) {
  std::vector<char> id_row(m.states(), 0);
  for (int q = 0; q < m.states(); ++q) {
    bool ok = true;
    for (int a = 0; a < m.alphabet() && ok; ++a)
      if (m.out(q, a) != a) ok = false;
    id_row[q] = ok;
  }
  std::vector<char> reach(m.states(), 0);
  std::vector<int> stack = {start};
  reach[start] = 1;
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int a = 0; a < m.alphabet(); ++a) {
      int t = m.next(q, a);
      if (!reach[t]) {
        reach[t] = 1;
        stack.push_back(t);
      }
    }
  }

  std::vector<char> fix_all(m.states(), 1);
  std::vector<int> d(m.states(), 0); // 0 = still inside (or identity)
  int p = 0;
  for (int round = 1;; ++round) {
    std::vector<char> nxt(m.states(), 0);
    bool changed = false;
    for (int q = 0; q < m.states(); ++q) {
      if (!fix_all[q]) continue;
      bool stays = id_row[q];
      for (int a = 0; a < m.alphabet() && stays; ++a)
        if (!fix_all[m.next(q, a)]) stays = false;
      nxt[q] = stays;
      if (!stays) {
        d[q] = round;
        changed = true;
        if (reach[q] && !id[q]) p = std::max(p, round);
      }
    }
    fix_all = std::move(nxt);
    if (!changed) break;
  }
  return p;
}

} // namespace

FreenessReport freeness_report(const std::vector<TreeElement>& generators, int word_len_max,
                               int k_max) {
  FreenessReport report;
  report.word_len_max = word_len_max;
  report.k_max = k_max;
  if (generators.empty()) return report;
  const FiniteGroup& g = generators[0].group();
  const int n = g.order();

  // Letters: the generators and their inverses; freely reduced words only.
  std::vector<TreeElement> letters;
  for (const auto& e : generators) letters.push_back(e);
  for (const auto& e : generators) letters.push_back(e.inverse());
  const int L = static_cast<int>(letters.size());
  auto is_inverse_pair = [&](int a, int b) {
    int half = L / 2;
    return (a + half) % L == b || (b + half) % L == a;
  };

  std::vector<std::vector<int>> words;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int len) -> void {
    if (len > 0) words.push_back(cur);
    if (len == word_len_max) return;
    for (int l = 0; l < L; ++l) {
      if (!cur.empty() && is_inverse_pair(cur.back(), l)) continue;
      cur.push_back(l);
      self(self, len + 1);
      cur.pop_back();
    }
  };
  extend(extend, 0);

  for (const auto& w : words) {
    TreeElement e = letters[w[0]];
    for (size_t i = 1; i < w.size(); ++i) e = e * letters[w[i]];

    FreenessEntry entry;
    entry.word = e.word();
    entry.word_str = e.word_str();

    const MealyMachine& m = e.machine();
    std::vector<bool> id = m.identity_states();
    if (id[e.start()]) {
      entry.kind = FreenessEntry::Kind::identity;
      report.entries.push_back(std::move(entry));
      continue;
    }
    ++report.tested;
    auto witness = m.diagonal_reachable_identity(e.start());
    if (witness) {
      entry.kind = FreenessEntry::Kind::interior_witness;
      entry.witness = *witness;
      report.free_on_ball = false;
    } else {
      entry.kind = FreenessEntry::Kind::measure_zero;
      entry.decay_p = escape_bound(m, e.start(), id);
      // Certify |Fix_{pk}| <= (n^p - 1)^k as far as the level budget allows;
      // k = 1 is always checked so the certificate is never vacuous.
      entry.decay_verified = true;
      const int p = entry.decay_p;
      int levels = std::max(k_max, 1);
      for (int k = 1; k == 1 || (k <= levels && p * k <= std::max(k_max, 12)); ++k) {
        Int bound = int_pow(int_pow(n, p) - 1, k);
        if (fix_count(e, p * k) > bound) {
          entry.decay_verified = false;
          break;
        }
      }
      if (!entry.decay_verified) report.free_on_ball = false;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

FreenessReport freeness_report(const FiniteGroup& g, int word_len_max, int k_max) {
  std::vector<TreeElement> gens;
  for (int i = 0; i < g.order(); ++i) gens.push_back(TreeElement::generator(g, i, +1));
  return freeness_report(gens, word_len_max, k_max);
}

} // namespace cayley
