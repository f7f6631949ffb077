#include "hopfgalois/group.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hopfgalois {

Perm Perm::identity(std::size_t n) {
  Perm p;
  p.images.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    p.images[i] = i;
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    p.images[images[i]] = i;
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != i)
      return false;
  return true;
}

bool Perm::has_fixed_point() const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] == i)
      return true;
  return false;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size())
    fail("compose: size mismatch");
  Perm c;
  c.images.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c.images[i] = a(b(i));
  return c;
}

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::size_t identity,
                         std::vector<std::string> labels)
    : n_(table.size()), e_(identity), table_(std::move(table)) {
  if (n_ == 0)
    throw FixtureError("group: empty table");
  if (e_ >= n_)
    throw FixtureError("group: identity index out of range");
  for (const auto& row : table_)
    if (row.size() != n_)
      throw FixtureError("group: table is not square");
  for (const auto& row : table_)
    for (auto v : row)
      if (v >= n_)
        throw FixtureError("group: table entry out of range");
  // Latin square.
  for (std::size_t i = 0; i < n_; ++i) {
    std::vector<bool> seen_row(n_, false), seen_col(n_, false);
    for (std::size_t j = 0; j < n_; ++j) {
      if (seen_row[table_[i][j]])
        throw FixtureError("group: repeated entry in row " + std::to_string(i));
      seen_row[table_[i][j]] = true;
      if (seen_col[table_[j][i]])
        throw FixtureError("group: repeated entry in column " + std::to_string(i));
      seen_col[table_[j][i]] = true;
    }
  }
  // Identity row and column.
  for (std::size_t i = 0; i < n_; ++i)
    if (table_[e_][i] != i || table_[i][e_] != i)
      throw FixtureError("group: identity row/column mismatch at " + std::to_string(i));
  // Associativity, exhaustively.
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw FixtureError("group: associativity fails at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
  inv_.assign(n_, n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (table_[a][b] == e_)
        inv_[a] = b;
  for (std::size_t a = 0; a < n_; ++a)
    if (inv_[a] == n_)
      throw FixtureError("group: element without inverse");
  if (labels.empty()) {
    labels_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      labels_[i] = "g" + std::to_string(i);
  } else {
    if (labels.size() != n_)
      throw FixtureError("group: label count mismatch");
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (uniq.size() != n_)
      throw FixtureError("group: duplicate labels");
    labels_ = std::move(labels);
  }
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (table_[a][b] != table_[b][a])
        return false;
  return true;
}

std::size_t RegularSubgroup::inverse_index(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b)
    if (elements[closure[a][b]].is_identity())
      return b;
  fail("RegularSubgroup: element without inverse");
}

RegularSubgroup RegularSubgroup::from_perms(const std::vector<Perm>& perms, const FiniteGroup& G) {
  const std::size_t n = G.order();
  if (perms.size() != n)
    fail("RegularSubgroup: wrong element count");
  RegularSubgroup N;
  N.elements.resize(n);
  std::vector<bool> filled(n, false);
  for (const auto& p : perms) {
    if (p.size() != n)
      fail("RegularSubgroup: permutation size mismatch");
    std::size_t g = p(G.identity());
    if (filled[g])
      fail("RegularSubgroup: not regular (two elements share an identity image)");
    filled[g] = true;
    N.elements[g] = p;
    if (!p.is_identity() && p.has_fixed_point())
      fail("RegularSubgroup: non-identity element with a fixed point");
  }
  if (!N.elements[G.identity()].is_identity())
    fail("RegularSubgroup: missing identity permutation");
  N.closure.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Perm c = compose(N.elements[a], N.elements[b]);
      std::size_t idx = c(G.identity());
      if (!(c == N.elements[idx]))
        fail("RegularSubgroup: not closed under composition");
      N.closure[a][b] = idx;
    }
  return N;
}

RegularSubgroup left_regular(const FiniteGroup& G) {
  const std::size_t n = G.order();
  std::vector<Perm> perms(n);
  for (std::size_t g = 0; g < n; ++g) {
    perms[g].images.resize(n);
    for (std::size_t h = 0; h < n; ++h)
      perms[g].images[h] = G.mul(g, h);
  }
  return RegularSubgroup::from_perms(perms, G);
}

RegularSubgroup right_regular(const FiniteGroup& G) {
  const std::size_t n = G.order();
  std::vector<Perm> perms(n);
  // Indexed form directly: the element sending identity to x is h -> h*x.
  for (std::size_t x = 0; x < n; ++x) {
    perms[x].images.resize(n);
    for (std::size_t h = 0; h < n; ++h)
      perms[x].images[h] = G.mul(h, x);
  }
  return RegularSubgroup::from_perms(perms, G);
}

Perm conj_action(const FiniteGroup& G, std::size_t g, const Perm& eta) {
  const std::size_t n = G.order();
  Perm r;
  r.images.resize(n);
  std::size_t gi = G.inv(g);
  for (std::size_t h = 0; h < n; ++h)
    r.images[h] = G.mul(g, eta(G.mul(gi, h)));
  return r;
}

bool normalizes(const RegularSubgroup& N, const FiniteGroup& G) {
  const std::size_t n = G.order();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < n; ++x) {
      Perm c = conj_action(G, g, N.elements[x]);
      if (!(c == N.elements[c(G.identity())]))
        return false;
    }
  return true;
}

namespace {

// Partial assignment g -> eta_g for the backtracking search. An entry is
// unassigned while assigned[g] is false.
struct SearchState {
  std::vector<Perm> eta;
  std::vector<bool> assigned;
};

// Every non-identity element of a regular subgroup is fixed-point-free with
// all cycles of equal length, so candidates are restricted to such perms.
// Candidates are streamed to a sink rather than materialized: at order 12
// a single cycle type already has millions of members.
struct SemiregularGen {
  std::size_t n, len;
  std::vector<std::size_t> images;  // value n marks an unassigned image
  std::vector<bool> used;
  const std::function<void(const Perm&)>& sink;

  void next_cycle() {
    std::size_t s = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) {
        s = i;
        break;
      }
    if (s == n) {
      sink(Perm{images});
      return;
    }
    used[s] = true;
    extend(s, s, 1);
    used[s] = false;
  }

  // Open chain from `first`, currently ending at `last` with `count` points.
  void extend(std::size_t first, std::size_t last, std::size_t count) {
    if (count == len) {
      images[last] = first;
      next_cycle();
      images[last] = n;
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t])
        continue;
      used[t] = true;
      images[last] = t;
      extend(first, t, count + 1);
      images[last] = n;
      used[t] = false;
    }
  }
};

void for_each_semiregular_with_image(const FiniteGroup& G, std::size_t g,
                                     const std::function<void(const Perm&)>& sink) {
  const std::size_t n = G.order();
  const std::size_t e = G.identity();
  if (g == e)
    return;
  for (std::size_t d = 2; d <= n; ++d) {
    if (n % d != 0)
      continue;
    SemiregularGen gen{n, d, std::vector<std::size_t>(n, n), std::vector<bool>(n, false), sink};
    // Seed the cycle through the identity with its forced image g.
    gen.used[e] = gen.used[g] = true;
    gen.images[e] = g;
    gen.extend(e, g, 2);
  }
}

// Returns false on contradiction. Assigns eta_g = p and propagates all
// consequences: closure products, inverses and lambda-conjugates.
bool assign_and_propagate(const FiniteGroup& G, SearchState& st, std::size_t g, const Perm& p) {
  const std::size_t n = G.order();
  const std::size_t e = G.identity();
  std::vector<std::pair<std::size_t, Perm>> queue{{g, p}};
  while (!queue.empty()) {
    auto [x, q] = queue.back();
    queue.pop_back();
    if (q(e) != x)
      return false;
    if (st.assigned[x]) {
      if (st.eta[x] == q)
        continue;
      return false;
    }
    if (!q.is_identity() && q.has_fixed_point())
      return false;
    st.eta[x] = q;
    st.assigned[x] = true;
    // Closure with every assigned element, both sides.
    for (std::size_t y = 0; y < n; ++y) {
      if (!st.assigned[y])
        continue;
      Perm prod = compose(st.eta[x], st.eta[y]);
      queue.emplace_back(prod(e), prod);
      if (y != x) {
        prod = compose(st.eta[y], st.eta[x]);
        queue.emplace_back(prod(e), prod);
      }
    }
    Perm inv = st.eta[x].inverse();
    queue.emplace_back(inv(e), inv);
    // Normalization: conjugates by lambda(G) must lie in N.
    for (std::size_t c = 0; c < n; ++c) {
      Perm conj = conj_action(G, c, st.eta[x]);
      queue.emplace_back(conj(e), conj);
    }
  }
  return true;
}

void search(const FiniteGroup& G, const SearchState& st,
            std::set<std::vector<std::size_t>>& seen, std::vector<RegularSubgroup>& out) {
  const std::size_t n = G.order();
  std::size_t next = n;
  for (std::size_t g = 0; g < n; ++g)
    if (!st.assigned[g]) {
      next = g;
      break;
    }
  if (next == n) {
    RegularSubgroup N = RegularSubgroup::from_perms(st.eta, G);
    if (normalizes(N, G)) {
      auto key = subgroup_key(N);
      if (seen.insert(key).second)
        out.push_back(std::move(N));
    }
    return;
  }
  for_each_semiregular_with_image(G, next, [&](const Perm& cand) {
    SearchState branch = st;
    if (assign_and_propagate(G, branch, next, cand))
      search(G, branch, seen, out);
  });
}

}  // namespace

std::vector<std::size_t> subgroup_key(const RegularSubgroup& N) {
  std::vector<std::size_t> key;
  key.reserve(N.order() * N.order());
  for (const auto& p : N.elements)
    key.insert(key.end(), p.images.begin(), p.images.end());
  return key;
}

std::vector<RegularSubgroup> enumerate_regular_subgroups(const FiniteGroup& G) {
  const std::size_t n = G.order();
  if (n > 12)
    throw BudgetError("enumerate_regular_subgroups: |G| = " + std::to_string(n) +
                      " exceeds the budget of 12");
  SearchState st;
  st.eta.resize(n);
  st.assigned.assign(n, false);
  std::set<std::vector<std::size_t>> seen;
  std::vector<RegularSubgroup> out;
  if (!assign_and_propagate(G, st, G.identity(), Perm::identity(n)))
    fail("enumerate_regular_subgroups: internal contradiction on identity");
  search(G, st, seen, out);
  std::sort(out.begin(), out.end(), [](const RegularSubgroup& a, const RegularSubgroup& b) {
    return subgroup_key(a) < subgroup_key(b);
  });
  return out;
}

FiniteGroup trivial_group() { return FiniteGroup({{0}}, 0, {"e"}); }

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = (i + j) % n;
  return FiniteGroup(std::move(t), 0);
}

namespace {

// Dihedral-style table for <r, s | r^m = s^2 = e, s r = r^{-1} s>, with
// element r^i s^j at index i + m*j. S3 is the case m = 3.
FiniteGroup dihedral_table(std::size_t m, std::vector<std::string> labels) {
  const std::size_t n = 2 * m;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t i = a % m, j = a / m, k = b % m, l = b / m;
      // (r^i s^j)(r^k s^l) = r^{i + (-1)^j k} s^{j + l}
      std::size_t rot = j == 0 ? (i + k) % m : (i + m - k % m) % m;
      t[a][b] = rot + m * ((j + l) % 2);
    }
  return FiniteGroup(std::move(t), 0, std::move(labels));
}

}  // namespace

FiniteGroup symmetric_3() {
  return dihedral_table(3, {"e", "r", "r2", "s", "rs", "r2s"});
}

FiniteGroup dihedral_4() {
  return dihedral_table(4, {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
}

FiniteGroup quaternion_8() {
  // i and j as permutations of {1,-1,i,-i,j,-j,k,-k} acting by left
  // multiplication; indices: 1,i,-1,-i,j,k,-j,-k chosen so closure works out.
  // Simpler: build from the 2x2 complex matrix relations via an explicit table.
  // Elements: 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k.
  auto neg = [](std::size_t x) -> std::size_t { return x ^ 1u; };
  auto base_mul = [&](std::size_t a, std::size_t b) -> std::size_t {
    // multiplication on {1:0, i:2, j:4, k:6} with signs folded in bit 0
    std::size_t sa = a & 1u, sb = b & 1u;
    std::size_t ua = a & ~1u, ub = b & ~1u;
    std::size_t prod;
    if (ua == 0)
      prod = ub;
    else if (ub == 0)
      prod = ua;
    else if (ua == ub)
      prod = 1;  // i*i = j*j = k*k = -1
    else {
      // i*j=k, j*k=i, k*i=j; reversed order flips the sign
      static const std::size_t tab[3][3] = {// rows/cols: i,j,k -> unit index and sign
                                            {255, 6, 4}, {6, 255, 2}, {4, 2, 255}};
      std::size_t ia = ua / 2 - 1, ib = ub / 2 - 1;
      prod = tab[ia][ib];
      bool cyclic = (ia + 1) % 3 == ib;
      if (!cyclic)
        prod = neg(prod);
    }
    std::size_t sign = sa ^ sb;
    return sign ? neg(prod) : prod;
  };
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      t[a][b] = base_mul(a, b);
  return FiniteGroup(std::move(t), 0, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

}  // namespace hopfgalois
