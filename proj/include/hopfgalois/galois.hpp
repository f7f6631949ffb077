// The extension L/K as a finite-dimensional commutative Q-algebra with
// explicit structure constants and a faithful G-action by ring
// automorphisms. Two modes: the split Galois algebra Map(G, Q) on its
// idempotent basis, and field fixtures loaded from validated data.
//
// Construction re-derives every defining identity (commutativity,
// associativity, unit, automorphism laws, one-dimensional fixed space),
// so corrupt fixture data cannot enter.

#ifndef HOPFGALOIS_GALOIS_HPP_
#define HOPFGALOIS_GALOIS_HPP_

#include <string>
#include <vector>

#include "hopfgalois/group.hpp"
#include "hopfgalois/matrix.hpp"

namespace hopfgalois {

// Element of L in context-basis coordinates.
struct AlgElt {
  RatVec c;
  bool operator==(const AlgElt& o) const = default;
};

class GaloisContext {
 public:
  enum class Mode { Split, Field };

  // Split Galois algebra Map(G, Q): basis {u_g}, u_g u_h = delta u_g,
  // one = sum of all u_g, and sigma(u_g) = u_{sigma g}.
  static GaloisContext split(const FiniteGroup& G);

  // Field mode from explicit data; validates everything.
  static GaloisContext field(FiniteGroup G, std::vector<std::vector<RatVec>> mult, RatVec one,
                             std::vector<RatMatrix> autos);

  const FiniteGroup& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  Mode mode() const { return mode_; }
  const RatVec& one() const { return one_; }
  const RatMatrix& auto_matrix(std::size_t sigma) const { return autos_[sigma]; }
  const std::vector<RatVec>& mult_row(std::size_t i) const { return mult_[i]; }
  const RatMatrix& trace_gram() const { return gram_; }

  AlgElt zero() const { return AlgElt{RatVec(dim_, Rat(0))}; }
  AlgElt one_elt() const { return AlgElt{one_}; }
  AlgElt basis_elt(std::size_t i) const;

  AlgElt mul(const AlgElt& a, const AlgElt& b) const;
  AlgElt act(std::size_t sigma, const AlgElt& a) const;
  Rat trace(const AlgElt& a) const;

  // True iff multiplication by a is invertible; in split mode this is
  // "every idempotent component nonzero", in field mode "a != 0".
  bool is_unit(const AlgElt& a) const;

  // The element x_hat with trace(x_hat * g(x)) = delta_{1,g}; by Galois
  // equivariance its translates form the dual basis of the translates
  // of x. Throws when the translates of x are not a basis.
  AlgElt dual_generator(const AlgElt& x) const;

 private:
  GaloisContext() = default;
  void validate();

  FiniteGroup group_ = trivial_group();
  std::size_t dim_ = 0;
  Mode mode_ = Mode::Split;
  std::vector<std::vector<RatVec>> mult_;  // mult_[i][j] = coords of e_i * e_j
  RatVec one_;
  std::vector<RatMatrix> autos_;  // indexed by group element
  RatVec basis_trace_;            // trace of each basis vector
  RatMatrix gram_;                // trace(e_i * e_j)
};

AlgElt alg_add(const AlgElt& a, const AlgElt& b);
AlgElt alg_sub(const AlgElt& a, const AlgElt& b);
AlgElt alg_scale(const Rat& c, const AlgElt& a);
bool alg_is_zero(const AlgElt& a);

}  // namespace hopfgalois

#endif
