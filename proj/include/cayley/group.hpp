#ifndef CAYLEY_GROUP_HPP
#define CAYLEY_GROUP_HPP

#include <string>
#include <vector>

namespace cayley {

struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i]; }
  bool is_identity() const;
  bool is_bijection() const;
  Permutation inverse() const;
  // (a.then(b))(i) = b(a(i))
  Permutation then(const Permutation& b) const;
  // composition as functions: (a.after(b))(i) = a(b(i))
  Permutation after(const Permutation& b) const;
  bool operator==(const Permutation& o) const { return images == o.images; }
};

// A finite group given extensionally by its multiplication table.
// Element 0 is always the identity; the constructor canonicalizes the
// ordering if needed.  Immutable after construction.
class FiniteGroup {
public:
  FiniteGroup() = default; // empty placeholder; assign before use

  static FiniteGroup cyclic(int n);
  static FiniteGroup from_table(std::vector<std::string> labels,
                                std::vector<std::vector<int>> table);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  static FiniteGroup symmetric3();
  static FiniteGroup dihedral4();   // symmetries of the square, order 8
  static FiniteGroup quaternion8();

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  bool abelian() const { return abelian_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of_label(const std::string& s) const; // -1 if absent

  // i -> index of g * g_i (left regular representation).
  Permutation regular_perm(int g) const;

  int element_order(int g) const;
  bool is_central(int g) const;
  bool is_2_power_order(int g) const;
  // Closure of the given elements as a sorted set of indices.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;

  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }

private:
  void finalize(); // fills inverses, abelian flag; assumes table validated

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  bool abelian_ = true;
};

} // namespace cayley

#endif
