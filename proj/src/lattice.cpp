#include "hopfgalois/lattice.hpp"

namespace hopfgalois {

namespace {

// gcd of all entries together with den; 1 when the matrix is empty.
Int content_with(const IntMatrix& m, const Int& den) {
  Int g = den < 0 ? Int(-den) : den;
  for (const auto& e : m.entries) {
    g = gcd(g, e);
    if (g == 1)
      break;
  }
  return g;
}

}  // namespace

Lattice Lattice::from_int_rows(const IntMatrix& rows, const Int& den) {
  if (den <= 0)
    fail("Lattice: denominator must be positive");
  IntMatrix h = hnf(rows);
  if (h.rows != rows.cols)
    fail("Lattice: generators do not have full rank");
  Lattice lat;
  lat.dim_ = rows.cols;
  Int g = content_with(h, den);
  if (g > 1) {
    for (auto& e : h.entries)
      e /= g;
    lat.den_ = den / g;
  } else {
    lat.den_ = den;
  }
  lat.basis_ = std::move(h);
  return lat;
}

Lattice Lattice::from_rat_rows(const std::vector<RatVec>& rows) {
  if (rows.empty())
    fail("Lattice: no generators");
  const std::size_t n = rows[0].size();
  Int den(1);
  for (const auto& r : rows) {
    if (r.size() != n)
      fail("Lattice: ragged generator rows");
    for (const auto& q : r)
      den = lcm(den, q.get_den());
  }
  IntMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat scaled = rows[i][j] * Rat(den);
      m.at(i, j) = scaled.get_num();  // exact: den clears every denominator
    }
  return from_int_rows(m, den);
}

Lattice Lattice::standard(std::size_t dim) {
  return from_int_rows(IntMatrix::identity(dim));
}

RatVec Lattice::basis_vector(std::size_t i) const {
  RatVec v(dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    v[j] = make_rat(basis_.at(i, j), den_);
  return v;
}

bool Lattice::contains(const RatVec& v) const {
  if (v.size() != dim_)
    fail("Lattice::contains: dimension mismatch");
  // v in (1/den) rowspan(B)  iff  den*v is an integer combination of B's
  // rows; B is upper triangular with positive diagonal, so back-substitute.
  RatVec w(dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    w[j] = v[j] * Rat(den_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Rat c = w[i] / Rat(basis_.at(i, i));
    if (!is_integer(c))
      return false;
    if (c != 0)
      for (std::size_t j = i; j < dim_; ++j)
        w[j] -= c * Rat(basis_.at(i, j));
  }
  return true;  // w is now zero: triangular solve consumed every coordinate
}

Lattice Lattice::scaled(const Rat& c) const {
  if (c == 0)
    fail("Lattice::scaled: zero scale");
  IntMatrix m = basis_;
  Int num = c.get_num() < 0 ? Int(-c.get_num()) : c.get_num();
  for (auto& e : m.entries)
    e *= num;
  return from_int_rows(m, den_ * c.get_den());
}

}  // namespace hopfgalois
