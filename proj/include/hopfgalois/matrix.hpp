// Dense exact matrices: rational matrices with Gaussian elimination and
// integer matrices with row-style Hermite normal form.
//
// All elimination is deterministic (first nonzero pivot in column order),
// so every canonical form and certificate is reproducible bit for bit.

#ifndef HOPFGALOIS_MATRIX_HPP_
#define HOPFGALOIS_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hopfgalois/rational.hpp"

namespace hopfgalois {

struct RatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  RatVec entries;  // row-major

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, Rat(0)) {}

  Rat& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  bool operator==(const RatMatrix& o) const = default;

  static RatMatrix identity(std::size_t n);
};

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> entries;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, Int(0)) {}

  Int& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  bool operator==(const IntMatrix& o) const = default;

  static IntMatrix identity(std::size_t n);
  RatMatrix to_rat() const;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_scale(const Rat& c, const RatMatrix& a);
RatMatrix mat_transpose(const RatMatrix& a);
RatVec mat_apply(const RatMatrix& m, const RatVec& v);  // m * v

// Row Hermite normal form: staircase with positive pivots, entries above
// each pivot reduced into [0, pivot). Zero rows are dropped, so the result
// has full row rank and spans the same integer row lattice as the input.
IntMatrix hnf(const IntMatrix& m);

// Solves m * w = v exactly; empty when the system is inconsistent.
std::optional<RatVec> solve_right(const RatMatrix& m, const RatVec& v);

// Exact determinant plus a nonsingularity flag. Throws on non-square input.
std::pair<Rat, bool> det_and_nonsingular(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Reduced row echelon form with monic pivots; canonical for the row space.
RatMatrix rref(const RatMatrix& m);

// Inverse of a nonsingular square matrix; throws if singular.
RatMatrix mat_inverse(const RatMatrix& m);

// Kronecker product, row-major on both factors.
RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

std::string matrix_to_string(const RatMatrix& m);

}  // namespace hopfgalois

#endif
