#include "cayley/walks.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cayley/config.hpp"
#include "cayley/error.hpp"

namespace cayley {

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b,
                              const FiniteGroup& g) {
  WreathElement r;
  r.shift = a.shift + b.shift;
  // shift^{m1} f2 places b's lamp at position p + a.shift
  std::vector<std::pair<int, int>> shifted;
  shifted.reserve(b.lamps.size());
  for (const auto& [p, v] : b.lamps) shifted.emplace_back(p + a.shift, v);

  size_t i = 0, j = 0;
  while (i < a.lamps.size() || j < shifted.size()) {
    if (j == shifted.size() || (i < a.lamps.size() && a.lamps[i].first < shifted[j].first)) {
      r.lamps.push_back(a.lamps[i++]);
    } else if (i == a.lamps.size() || shifted[j].first < a.lamps[i].first) {
      r.lamps.push_back(shifted[j++]);
    } else {
      int v = g.mul(a.lamps[i].second, shifted[j].second);
      if (v != g.identity()) r.lamps.emplace_back(a.lamps[i].first, v);
      ++i;
      ++j;
    }
  }
  return r;
}

WreathElement wreath_inverse(const WreathElement& a, const FiniteGroup& g) {
  WreathElement r;
  r.shift = -a.shift;
  r.lamps.reserve(a.lamps.size());
  for (const auto& [p, v] : a.lamps) r.lamps.emplace_back(p - a.shift, g.inverse(v));
  std::sort(r.lamps.begin(), r.lamps.end());
  return r;
}

std::vector<std::pair<WreathElement, Rat>> step_distribution(const FiniteGroup& g) {
  const int n = g.order();
  Rat p(1, 2 * n);
  p.canonicalize();
  std::vector<std::pair<WreathElement, Rat>> dist;
  for (int i = 0; i < n; ++i) {
    WreathElement right; // t g_i: move right, recolour the new position
    right.shift = 1;
    if (i != g.identity()) right.lamps.emplace_back(1, i);
    dist.emplace_back(std::move(right), p);
  }
  for (int i = 0; i < n; ++i) {
    WreathElement left; // g_i t^-1: recolour in place, move left
    left.shift = -1;
    if (i != g.identity()) left.lamps.emplace_back(0, i);
    dist.emplace_back(std::move(left), p);
  }
  return dist;
}

namespace {

// Packed canonical form: lamp window as a base-n value plus 7-bit biased
// window offset and shift.  Positions stay within |m|+1 of the origin, so
// the bias of 63 covers every step count the budget allows.
struct Packer {
  int n;
  explicit Packer(int order) : n(order) {}

  std::uint64_t encode(const WreathElement& e) const {
    std::uint64_t value = 0;
    int lo = 0;
    if (!e.lamps.empty()) {
      lo = e.lamps.front().first;
      int width = e.lamps.back().first - lo + 1;
      if (width * std::log2(static_cast<double>(std::max(n, 2))) > 49)
        throw DomainError("budget-exceeded", "lamp window too wide to pack");
      std::vector<int> window(width, 0);
      for (const auto& [p, v] : e.lamps) window[p - lo] = v;
      for (int i = width - 1; i >= 0; --i) value = value * n + window[i];
    }
    if (e.shift < -63 || e.shift > 63 || lo < -63 || lo > 63)
      throw DomainError("budget-exceeded", "walk left the packable window");
    return ((value * 128) + static_cast<std::uint64_t>(lo + 63)) * 128 +
           static_cast<std::uint64_t>(e.shift + 63);
  }

  WreathElement decode(std::uint64_t key) const {
    WreathElement e;
    e.shift = static_cast<int>(key % 128) - 63;
    key /= 128;
    int lo = static_cast<int>(key % 128) - 63;
    key /= 128;
    int pos = lo;
    while (key) {
      int v = static_cast<int>(key % n);
      if (v) e.lamps.emplace_back(pos, v);
      key /= n;
      ++pos;
    }
    return e;
  }
};

std::unordered_map<std::uint64_t, long long> convolve_steps(const FiniteGroup& g, int steps) {
  Packer pack(g.order());
  std::vector<std::pair<WreathElement, Rat>> gens = step_distribution(g);
  std::unordered_map<std::uint64_t, long long> cur;
  cur[pack.encode(WreathElement{})] = 1;
  for (int s = 0; s < steps; ++s) {
    std::unordered_map<std::uint64_t, long long> next;
    next.reserve(cur.size() * 2);
    for (const auto& [key, count] : cur) {
      WreathElement e = pack.decode(key);
      for (const auto& [gen, p] : gens)
        next[pack.encode(wreath_multiply(e, gen, g))] += count;
    }
    cur = std::move(next);
  }
  return cur;
}

} // namespace

WalkDistribution::WalkDistribution(const FiniteGroup& g, int steps) : group_(&g), steps_(steps) {
  if (steps < 0 || static_cast<std::size_t>(steps) > config::max_walk_steps())
    throw DomainError("budget-exceeded", "walk step budget");
  counts_ = convolve_steps(g, steps);
  denom_ = int_pow(2 * g.order(), steps);
}

Rat WalkDistribution::probability(const WreathElement& e) const {
  Packer pack(group_->order());
  auto it = counts_.find(pack.encode(e));
  if (it == counts_.end()) return Rat(0);
  Rat p(Int(static_cast<long>(it->second)), denom_);
  p.canonicalize();
  return p;
}

Rat WalkDistribution::identity_mass() const { return probability(WreathElement{}); }

Rat WalkDistribution::total_mass() const {
  Int sum = 0;
  for (const auto& [key, count] : counts_) sum += static_cast<long>(count);
  Rat p(sum, denom_);
  p.canonicalize();
  return p;
}

std::vector<std::pair<WreathElement, Rat>> WalkDistribution::entries() const {
  Packer pack(group_->order());
  std::vector<std::pair<WreathElement, Rat>> out;
  out.reserve(counts_.size());
  for (const auto& [key, count] : counts_) {
    Rat p(Int(static_cast<long>(count)), denom_);
    p.canonicalize();
    out.emplace_back(pack.decode(key), p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.shift != b.first.shift) return a.first.shift < b.first.shift;
    return a.first.lamps < b.first.lamps;
  });
  return out;
}

bool WalkDistribution::inversion_symmetric() const {
  Packer pack(group_->order());
  for (const auto& [key, count] : counts_) {
    WreathElement inv = wreath_inverse(pack.decode(key), *group_);
    auto it = counts_.find(pack.encode(inv));
    if (it == counts_.end() || it->second != count) return false;
  }
  return true;
}

Rat return_probability(const FiniteGroup& g, int m) {
  if (m < 0 || static_cast<std::size_t>(m) > config::max_walk_steps())
    throw DomainError("budget-exceeded", "walk step budget");
  if (m == 0) return Rat(1);
  if (m % 2 == 1) return Rat(0); // shift parity equals step parity
  const int a = m / 2;
  Packer pack(g.order());
  auto half = convolve_steps(g, a);
  // p_m(1) = sum_h P_a(h) P_a(h^-1)
  Int paths = 0;
  for (const auto& [key, count] : half) {
    std::uint64_t inv_key = pack.encode(wreath_inverse(pack.decode(key), g));
    auto it = half.find(inv_key);
    if (it != half.end()) paths += Int(static_cast<long>(count)) * Int(static_cast<long>(it->second));
  }
  Rat p(paths, int_pow(2 * g.order(), m));
  p.canonicalize();
  return p;
}

std::vector<Rat> kesten_moments(const FiniteGroup& g, int m_max) {
  std::vector<Rat> moments;
  moments.reserve(m_max + 1);
  for (int m = 0; m <= m_max; ++m) moments.push_back(return_probability(g, m));
  return moments;
}

double monte_carlo_return(const FiniteGroup& g, int m, long long samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<WreathElement, Rat>> gens = step_distribution(g);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  long long hits = 0;
  for (long long s = 0; s < samples; ++s) {
    WreathElement e;
    for (int step = 0; step < m; ++step) e = wreath_multiply(e, gens[pick(rng)].first, g);
    if (e.is_identity()) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

} // namespace cayley
