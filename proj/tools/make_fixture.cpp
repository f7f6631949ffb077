// Regenerates the JSON fixtures under fixtures/. The field fixture is the
// splitting field of x^3 - 2 over Q, built exactly from the presentation
// L = Q(theta, omega), theta^3 = 2, omega^2 + omega + 1 = 0, and then
// rewritten on the power basis of the primitive element alpha = theta +
// omega. Every emitted context passes the full context validation suite
// before it is written.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hopfgalois/cli.hpp"
#include "hopfgalois/nbg.hpp"

using namespace hopfgalois;

namespace {

// Monomial basis theta^i omega^j at index 2*i + j, i in 0..2, j in 0..1.
constexpr std::size_t kDim = 6;

std::size_t mono_index(std::size_t i, std::size_t j) { return 2 * i + j; }

// Adds c * theta^e1 omega^e2 (any exponents) to v, reducing by
// theta^3 = 2 and omega^2 = -1 - omega (omega^3 = 1).
void add_monomial(RatVec& v, Rat c, std::size_t e1, std::size_t e2) {
  while (e1 >= 3) {
    e1 -= 3;
    c *= 2;
  }
  e2 %= 3;
  if (e2 <= 1) {
    v[mono_index(e1, e2)] += c;
  } else {
    v[mono_index(e1, 0)] -= c;
    v[mono_index(e1, 1)] -= c;
  }
}

RatVec mono_mul(const RatVec& a, const RatVec& b) {
  RatVec r(kDim, Rat(0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rat ca = a[mono_index(i, j)];
      if (ca == 0)
        continue;
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          Rat cb = b[mono_index(k, l)];
          if (cb == 0)
            continue;
          add_monomial(r, ca * cb, i + k, j + l);
        }
    }
  return r;
}

// sigma_{a,b}: theta -> omega^a theta, omega -> omega^b, on the monomial
// basis.
RatMatrix mono_auto(std::size_t a, std::size_t b) {
  RatMatrix m(kDim, kDim);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      RatVec img(kDim, Rat(0));
      add_monomial(img, Rat(1), i, a * i + b * j);
      for (std::size_t r = 0; r < kDim; ++r)
        m.at(r, mono_index(i, j)) = img[r];
    }
  return m;
}

struct FieldData {
  FiniteGroup group;
  std::vector<std::vector<RatVec>> mult;
  RatVec one;
  std::vector<RatMatrix> autos;
  Lattice lattice;         // translate lattice of a normal basis generator
  AlgElt known_generator;  // certified free generator found by the search
};

FieldData build_field_s3() {
  // The six automorphisms sigma_{a,b}, composed as functions; index a+3(b-1)
  // matches the r^a s^{b-1} labelling of the abstract table.
  std::vector<std::pair<std::size_t, std::size_t>> sig(6);
  for (std::size_t b = 1; b <= 2; ++b)
    for (std::size_t a = 0; a < 3; ++a)
      sig[a + 3 * (b - 1)] = {a, b};
  auto sig_index = [&](std::size_t a, std::size_t b) { return a % 3 + 3 * (b % 3 - 1); };
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) {
      auto [a, b] = sig[x];
      auto [c, d] = sig[y];
      // sigma_{a,b} o sigma_{c,d} = sigma_{a + b c, b d}
      table[x][y] = sig_index((a + b * c) % 3, (b * d) % 3);
    }
  FiniteGroup G(table, 0, {"e", "r", "r2", "s", "rs", "r2s"});

  // Primitive element candidates until the powers form a basis.
  RatVec alpha(kDim, Rat(0));
  alpha[mono_index(1, 0)] = 1;  // theta
  alpha[mono_index(0, 1)] = 1;  // + omega
  std::vector<RatVec> pw(11);
  pw[0] = RatVec(kDim, Rat(0));
  pw[0][mono_index(0, 0)] = 1;
  for (std::size_t k = 1; k <= 10; ++k)
    pw[k] = mono_mul(pw[k - 1], alpha);
  RatMatrix V(kDim, kDim);
  for (std::size_t k = 0; k < kDim; ++k)
    for (std::size_t r = 0; r < kDim; ++r)
      V.at(r, k) = pw[k][r];
  if (!det_and_nonsingular(V).second)
    fail("make_fixture: theta + omega is not primitive (unexpected)");
  RatMatrix Vinv = mat_inverse(V);

  FieldData data{G, {}, {}, {}, Lattice(), AlgElt{}};
  data.mult.assign(kDim, std::vector<RatVec>(kDim));
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      data.mult[i][j] = mat_apply(Vinv, pw[i + j]);
  data.one = mat_apply(Vinv, pw[0]);
  data.autos.resize(kDim);
  for (std::size_t s = 0; s < kDim; ++s) {
    auto [a, b] = sig[s];
    data.autos[s] = mat_mul(Vinv, mat_mul(mono_auto(a, b), V));
  }

  // Normal basis generator whose translate lattice certifies end to end:
  // B = Z-span of the translates is then free over its associated order
  // with generator x0, and the fixture is only accepted once the bounded
  // search (box 2) actually finds a free generator for it.
  GaloisContext ctx = GaloisContext::field(G, data.mult, data.one, data.autos);
  std::vector<long> coeff(kDim, -1);
  while (true) {
    RatVec x(kDim, Rat(0));
    for (std::size_t i = 0; i < kDim; ++i)
      x[i] = Rat(coeff[i]);
    RatMatrix t(kDim, kDim);
    bool nonzero = false;
    for (long c : coeff)
      nonzero = nonzero || c != 0;
    if (nonzero) {
      for (std::size_t s = 0; s < kDim; ++s) {
        AlgElt img = ctx.act(s, AlgElt{x});
        for (std::size_t j = 0; j < kDim; ++j)
          t.at(s, j) = img.c[j];
      }
      if (det_and_nonsingular(t).second) {
        std::vector<RatVec> rows;
        for (std::size_t s = 0; s < kDim; ++s)
          rows.push_back(ctx.act(s, AlgElt{x}).c);
        GStableLattice B = check_g_stable(ctx, Lattice::from_rat_rows(rows));
        OrderLattice A = associated_order_kg(ctx, B);
        if (auto found = search_generator(ctx, nullptr, A, B, 2)) {
          data.lattice = B.lattice;
          data.known_generator = *found;
          return data;
        }
        std::cout << "  (translate lattice of a generator rejected: no box-2 hit)\n";
      }
    }
    std::size_t pos = kDim;
    while (pos > 0) {
      --pos;
      if (coeff[pos] < 1) {
        ++coeff[pos];
        for (std::size_t j = pos + 1; j < kDim; ++j)
          coeff[j] = -1;
        break;
      }
      if (pos == 0)
        fail("make_fixture: no certifying normal basis generator in the unit box");
    }
  }
}

void write_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out)
    fail("cannot write " + path.string());
  out << doc.dump(2) << "\n";
  std::cout << "wrote " << path.string() << "\n";
}

Json split_fixture(const FiniteGroup& G) {
  Json context;
  context["mode"] = "split";
  context["group"] = group_json(G);
  Json j;
  j["context"] = std::move(context);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);

  write_file(dir / "split_c1.json", split_fixture(trivial_group()));
  write_file(dir / "split_c2.json", split_fixture(cyclic_group(2)));
  write_file(dir / "split_s3.json", split_fixture(symmetric_3()));
  write_file(dir / "split_d4.json", split_fixture(dihedral_4()));
  write_file(dir / "split_q8.json", split_fixture(quaternion_8()));

  // Scaled and proper-sublattice variants of the standard split S3 lattice.
  {
    FiniteGroup G = symmetric_3();
    Json j = split_fixture(G);
    j["lattice"] = lattice_json(Lattice::standard(6).scaled(Rat(3)));
    write_file(dir / "split_s3_scaled.json", j);
  }
  {
    FiniteGroup G = symmetric_3();
    std::vector<RatVec> rows;
    for (std::size_t g = 1; g < 6; ++g) {
      RatVec r(6, Rat(0));
      r[g] = 1;
      r[0] = -1;
      rows.push_back(std::move(r));
    }
    rows.push_back(RatVec(6, Rat(1)));
    Json j = split_fixture(G);
    j["lattice"] = lattice_json(Lattice::from_rat_rows(rows));
    write_file(dir / "split_s3_sublattice.json", j);
  }

  // Field fixture: splitting field of x^3 - 2, power basis of theta+omega,
  // lattice spanned by the Galois translates of a normal basis generator.
  {
    FieldData data = build_field_s3();
    GaloisContext ctx =
        GaloisContext::field(data.group, data.mult, data.one, data.autos);
    Json j;
    j["context"] = context_json(ctx);
    j["lattice"] = lattice_json(data.lattice);
    j["known_generator"] = vec_json(data.known_generator.c);
    write_file(dir / "field_s3.json", j);
  }

  return 0;
}
