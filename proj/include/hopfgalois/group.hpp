// Finite groups as validated multiplication tables, the left and right
// regular embeddings into Perm(G), and exhaustive enumeration of the
// regular subgroups of Perm(G) normalized by the left regular image.

#ifndef HOPFGALOIS_GROUP_HPP_
#define HOPFGALOIS_GROUP_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "hopfgalois/rational.hpp"

namespace hopfgalois {

// Permutation of {0..n-1} in image form.
struct Perm {
  std::vector<std::size_t> images;

  std::size_t size() const { return images.size(); }
  std::size_t operator()(std::size_t i) const { return images[i]; }
  bool operator==(const Perm& o) const = default;
  bool operator<(const Perm& o) const { return images < o.images; }

  static Perm identity(std::size_t n);
  Perm inverse() const;
  bool is_identity() const;
  bool has_fixed_point() const;
};

// a then b is compose(b, a); i.e. compose(a, b)(x) = a(b(x)).
Perm compose(const Perm& a, const Perm& b);

class FiniteGroup {
 public:
  // Validates that the table is a Latin square with the stated identity,
  // associativity and inverses. Throws FixtureError otherwise.
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::size_t identity,
              std::vector<std::string> labels = {});

  std::size_t order() const { return n_; }
  std::size_t identity() const { return e_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_abelian() const;

 private:
  std::size_t n_;
  std::size_t e_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inv_;
  std::vector<std::string> labels_;
};

// Regular subgroup of Perm(G): exactly one element sends identity to each
// g, and that element is stored at index g.
struct RegularSubgroup {
  std::vector<Perm> elements;                       // elements[g](1_G) = g
  std::vector<std::vector<std::size_t>> closure;    // closure[a][b]: index of elements[a] o elements[b]

  std::size_t order() const { return elements.size(); }

  // Index of the composition elements[a] o elements[b].
  std::size_t compose_index(std::size_t a, std::size_t b) const { return closure[a][b]; }
  std::size_t inverse_index(std::size_t a) const;

  bool operator==(const RegularSubgroup& o) const { return elements == o.elements; }

  // Builds the indexed form from an unordered set of permutations,
  // re-verifying regularity and closure.
  static RegularSubgroup from_perms(const std::vector<Perm>& perms, const FiniteGroup& G);
};

// lambda(g): h -> g*h.
RegularSubgroup left_regular(const FiniteGroup& G);

// rho with the homomorphism convention rho(g): h -> h*g^{-1}; as a set this
// is all right translations, and the element sending identity to x is
// h -> h*x.
RegularSubgroup right_regular(const FiniteGroup& G);

// lambda(g) o eta o lambda(g)^{-1}.
Perm conj_action(const FiniteGroup& G, std::size_t g, const Perm& eta);

// True iff lambda(g) N lambda(g)^{-1} = N for every g.
bool normalizes(const RegularSubgroup& N, const FiniteGroup& G);

// Complete list of regular subgroups of Perm(G) normalized by lambda(G),
// in deterministic order. Throws BudgetError for |G| > 12.
std::vector<RegularSubgroup> enumerate_regular_subgroups(const FiniteGroup& G);

// Canonical sort key: the element permutations flattened in index order.
std::vector<std::size_t> subgroup_key(const RegularSubgroup& N);

// Ready-made tables for the groups used throughout the test fixtures.
FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup symmetric_3();
FiniteGroup dihedral_4();   // order 8
FiniteGroup quaternion_8();

}  // namespace hopfgalois

#endif
