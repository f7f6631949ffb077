#include "hopfgalois/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace hopfgalois {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

RatMatrix IntMatrix::to_rat() const {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i)
    m.entries[i] = Rat(entries[i]);
  return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols != b.rows)
    fail("mat_mul: dimension mismatch");
  RatMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    fail("mat_add: dimension mismatch");
  RatMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    c.entries[i] = a.entries[i] + b.entries[i];
  return c;
}

RatMatrix mat_scale(const Rat& c, const RatMatrix& a) {
  RatMatrix r = a;
  for (auto& e : r.entries)
    e *= c;
  return r;
}

RatMatrix mat_transpose(const RatMatrix& a) {
  RatMatrix t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      t.at(j, i) = a.at(i, j);
  return t;
}

RatVec mat_apply(const RatMatrix& m, const RatVec& v) {
  if (m.cols != v.size())
    fail("mat_apply: dimension mismatch");
  RatVec r(m.rows, Rat(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0)
        r[i] += m.at(i, j) * v[j];
  return r;
}

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix w = m;
  const std::size_t rows = w.rows, cols = w.cols;
  std::size_t r = 0;  // next pivot row
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Repeated gcd elimination in column c on rows >= r.
    while (true) {
      // Pick the row with the smallest nonzero |entry| (ties: lowest index).
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (w.at(i, c) == 0)
          continue;
        if (best == rows || mpz_cmpabs(w.at(i, c).get_mpz_t(), w.at(best, c).get_mpz_t()) < 0)
          best = i;
      }
      if (best == rows)
        break;  // column clear below r
      if (best != r)
        for (std::size_t j = 0; j < cols; ++j)
          std::swap(w.at(r, j), w.at(best, j));
      bool reduced_all = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (w.at(i, c) == 0)
          continue;
        Int q = fdiv(w.at(i, c), w.at(r, c));
        if (q != 0)
          for (std::size_t j = 0; j < cols; ++j)
            w.at(i, j) -= q * w.at(r, j);
        if (w.at(i, c) != 0)
          reduced_all = false;
      }
      if (reduced_all)
        break;
    }
    if (w.at(r, c) == 0)
      continue;  // no pivot in this column
    if (w.at(r, c) < 0)
      for (std::size_t j = 0; j < cols; ++j)
        w.at(r, j) = -w.at(r, j);
    // Reduce the entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      Int q = fdiv(w.at(i, c), w.at(r, c));
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j)
          w.at(i, j) -= q * w.at(r, j);
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out.at(i, j) = w.at(i, j);
  return out;
}

namespace {

// Forward elimination with deterministic pivoting; returns the echelon
// matrix and the pivot column of each pivot row.
std::pair<RatMatrix, std::vector<std::size_t>> echelon(RatMatrix w) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols && r < w.rows; ++c) {
    std::size_t p = w.rows;
    for (std::size_t i = r; i < w.rows; ++i)
      if (w.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p == w.rows)
      continue;
    if (p != r)
      for (std::size_t j = 0; j < w.cols; ++j)
        std::swap(w.at(r, j), w.at(p, j));
    for (std::size_t i = r + 1; i < w.rows; ++i) {
      if (w.at(i, c) == 0)
        continue;
      Rat f = w.at(i, c) / w.at(r, c);
      for (std::size_t j = c; j < w.cols; ++j)
        w.at(i, j) -= f * w.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(w), std::move(pivots)};
}

}  // namespace

std::optional<RatVec> solve_right(const RatMatrix& m, const RatVec& v) {
  if (m.rows != v.size())
    fail("solve_right: dimension mismatch");
  // Eliminate on the augmented matrix [m | v].
  RatMatrix aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j)
      aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = v[i];
  }
  auto [e, pivots] = echelon(std::move(aug));
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == m.cols)
    return std::nullopt;
  RatVec w(m.cols, Rat(0));  // free variables set to zero
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t c = pivots[k];
    Rat s = e.at(k, m.cols);
    for (std::size_t j = c + 1; j < m.cols; ++j)
      if (e.at(k, j) != 0)
        s -= e.at(k, j) * w[j];
    w[c] = s / e.at(k, c);
  }
  return w;
}

std::pair<Rat, bool> det_and_nonsingular(const RatMatrix& m) {
  if (m.rows != m.cols)
    fail("det_and_nonsingular: non-square input");
  RatMatrix w = m;
  Rat det(1);
  for (std::size_t c = 0; c < w.cols; ++c) {
    std::size_t p = w.rows;
    for (std::size_t i = c; i < w.rows; ++i)
      if (w.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p == w.rows)
      return {Rat(0), false};
    if (p != c) {
      for (std::size_t j = 0; j < w.cols; ++j)
        std::swap(w.at(c, j), w.at(p, j));
      det = -det;
    }
    det *= w.at(c, c);
    for (std::size_t i = c + 1; i < w.rows; ++i) {
      if (w.at(i, c) == 0)
        continue;
      Rat f = w.at(i, c) / w.at(c, c);
      for (std::size_t j = c; j < w.cols; ++j)
        w.at(i, j) -= f * w.at(c, j);
    }
  }
  return {det, det != 0};
}

std::size_t rank(const RatMatrix& m) { return echelon(m).second.size(); }

RatMatrix rref(const RatMatrix& m) {
  auto [e, pivots] = echelon(m);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    std::size_t c = pivots[k];
    Rat inv = 1 / e.at(k, c);
    for (std::size_t j = c; j < e.cols; ++j)
      e.at(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      Rat f = e.at(i, c);
      if (f == 0)
        continue;
      for (std::size_t j = c; j < e.cols; ++j)
        e.at(i, j) -= f * e.at(k, j);
    }
  }
  RatMatrix out(pivots.size(), m.cols);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      out.at(i, j) = e.at(i, j);
  return out;
}

RatMatrix mat_inverse(const RatMatrix& m) {
  if (m.rows != m.cols)
    fail("mat_inverse: non-square input");
  const std::size_t n = m.rows;
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RatMatrix red = rref(aug);
  if (red.rows != n)
    fail("mat_inverse: singular matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (red.at(i, j) != Rat(i == j ? 1 : 0))
        fail("mat_inverse: singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv.at(i, j) = red.at(i, n + j);
  return inv;
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix k(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) {
      if (a.at(i, j) == 0)
        continue;
      for (std::size_t p = 0; p < b.rows; ++p)
        for (std::size_t q = 0; q < b.cols; ++q)
          k.at(i * b.rows + p, j * b.cols + q) = a.at(i, j) * b.at(p, q);
    }
  return k;
}

std::string matrix_to_string(const RatMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < m.cols; ++j)
      os << (j ? " " : "[") << rat_to_string(m.at(i, j));
    os << "]" << (i + 1 == m.rows ? "]" : "\n");
  }
  return os.str();
}

}  // namespace hopfgalois
