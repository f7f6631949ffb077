// Full-rank integral lattices in Q^n, stored as (1/den) * rowspan(basis)
// with the basis in Hermite normal form and the pair (basis, den) made
// primitive. That representation is unique, so lattice equality is a
// structural comparison and membership is exact back-substitution.

#ifndef HOPFGALOIS_LATTICE_HPP_
#define HOPFGALOIS_LATTICE_HPP_

#include <vector>

#include "hopfgalois/matrix.hpp"

namespace hopfgalois {

class Lattice {
 public:
  // Empty (dimension-zero) placeholder; real lattices come from the
  // factories below.
  Lattice() = default;

  // From integer generators (rows); zero rows dropped, must have full rank.
  static Lattice from_int_rows(const IntMatrix& rows, const Int& den = Int(1));
  // From rational generators (rows): clears denominators, then HNF.
  static Lattice from_rat_rows(const std::vector<RatVec>& rows);

  static Lattice standard(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Int& den() const { return den_; }
  const IntMatrix& basis() const { return basis_; }

  // The i-th basis vector as rationals (row / den).
  RatVec basis_vector(std::size_t i) const;

  bool contains(const RatVec& v) const;
  bool operator==(const Lattice& o) const = default;

  Lattice scaled(const Rat& c) const;

 private:
  std::size_t dim_ = 0;
  Int den_ = 1;
  IntMatrix basis_;  // dim x dim, HNF, full rank
};

}  // namespace hopfgalois

#endif
