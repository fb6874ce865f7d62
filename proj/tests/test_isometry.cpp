#include <doctest.h>

#include "ellgenus/error.hpp"
#include "ellgenus/isometry.hpp"
#include "ellgenus/surface.hpp"
#include "test_support.hpp"

using namespace ellgenus;
using ellgenus::testing::Rng;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Overflow;
}

// The transvection formula evaluated directly on a class.
HClass transvect(const HClass& u, const HClass& v, const HClass& x) {
  return x + pairing(x, v) * u - pairing(x, u) * v - (square(v) / 2) * pairing(x, u) * u;
}

// A positive-definite frame different from the canonical one: columns
// e + c f with c growing per block, pushed into the negative part by a
// distinct -E8 basis vector where one is available.
SpinorFrame perturbed_frame(const LatticePtr& l) {
  std::vector<Vector> cols;
  std::size_t next_x = 0;
  std::vector<std::size_t> xs;
  for (std::size_t b = 0; b < l->blocks().size(); ++b)
    if (l->blocks()[b].kind == BlockKind::MinusE8)
      for (std::size_t i = 0; i < 8; ++i) xs.push_back(l->block_offset(b) + i);
  Int c = 1;
  for (std::size_t b = 0; b < l->blocks().size(); ++b) {
    if (l->blocks()[b].kind == BlockKind::MinusE8) continue;
    Vector v(l->rank(), 0);
    v[l->block_offset(b)] = 2;
    v[l->block_offset(b) + 1] = 2 * c++;
    if (next_x < xs.size()) v[xs[next_x++]] = 1;
    cols.push_back(v);
  }
  return SpinorFrame(l, Matrix::from_columns(cols));
}

}  // namespace

TEST_CASE("verify_isometry examples") {
  auto l = make_lattice("2H");
  CHECK(verify_isometry(l, Matrix::identity(4)).det() == 1);
  CHECK_NOTHROW(verify_isometry(l, -Matrix::identity(4)));
  Matrix swap = Matrix::identity(4);
  swap(0, 0) = swap(1, 1) = 0;
  swap(0, 1) = swap(1, 0) = 1;
  const Isometry s = verify_isometry(l, swap);
  CHECK(s.det() == -1);
  CHECK(s.apply(HClass::named(l, "e1")) == HClass::named(l, "f1"));
}

TEST_CASE("verify_isometry rejects non-isometries") {
  auto l = make_lattice("2H");
  Matrix twice = Matrix::identity(4);
  twice(0, 0) = 2;
  CHECK_THROWS_WITH_AS(verify_isometry(l, twice), doctest::Contains("[0][1]"), Error);
  CHECK(kind_of([&] { verify_isometry(l, twice); }) == ErrorKind::NotAnIsometry);
  CHECK(kind_of([&] { verify_isometry(l, Matrix::identity(3)); }) == ErrorKind::NotAnIsometry);
}

TEST_CASE("compose examples") {
  auto l = make_lattice("2H");
  Rng rng(3);
  const Isometry a = ellgenus::testing::random_product(rng, l, 6);
  const Isometry id = Isometry::identity(l);
  CHECK(compose(id, a) == a);
  CHECK(compose(a, inverse(a)) == id);
  CHECK(compose(inverse(a), a) == id);
  const std::size_t b0[] = {0}, b1[] = {1};
  CHECK(compose(negate_blocks(l, b0), negate_blocks(l, b1)).matrix() == -Matrix::identity(4));
  CHECK(kind_of([&] { compose(a, Isometry::identity(make_lattice("H,H'"))); }) == ErrorKind::LatticeMismatch);
}

TEST_CASE("compose applies the right factor first") {
  auto l = make_lattice("2H");
  const Isometry a = eichler_transvection(HClass::named(l, "e1"), HClass::named(l, "e2"));
  const Isometry b = reflection(HClass::named(l, "e1") - HClass::named(l, "f1"));
  const HClass x = HClass::named(l, "f1") + 3 * HClass::named(l, "f2");
  CHECK(compose(a, b).apply(x) == a.apply(b.apply(x)));
}

TEST_CASE("reflection examples") {
  auto h = make_lattice("H");
  const HClass e = HClass::named(h, "e1"), f = HClass::named(h, "f1");
  const Isometry s = reflection(e - f);
  CHECK(s.apply(e) == f);
  CHECK(s.apply(f) == e);
  const Isometry t = reflection(e + f);
  CHECK(t.apply(e) == -f);
  CHECK(t.apply(f) == -e);
  CHECK(kind_of([&] { reflection(e); }) == ErrorKind::NonIntegralReflection);
  // 2x1 in -E8 has square -8; pairing 2 with x2 gives 2*2/(-8) non-integral.
  auto e8 = make_lattice("E8-");
  CHECK(kind_of([&] { reflection(2 * HClass::named(e8, "x1_1")); }) == ErrorKind::NonIntegralReflection);
}

TEST_CASE("eichler_transvection examples") {
  auto l = make_lattice("2H");
  const HClass e1 = HClass::named(l, "e1"), f1 = HClass::named(l, "f1");
  const HClass e2 = HClass::named(l, "e2"), f2 = HClass::named(l, "f2");
  const Isometry m = eichler_transvection(e1, e2);
  CHECK(m.apply(f1) == f1 - e2);
  for (const HClass& x : {e1, f1, e2, f2}) CHECK(m.apply(x) == transvect(e1, e2, x));
  CHECK(m.apply(f2) == f2 + e1);
  CHECK_NOTHROW(verify_isometry(l, m.matrix()));

  CHECK(eichler_transvection(e1, HClass::zero(l)) == Isometry::identity(l));
  CHECK(kind_of([&] { eichler_transvection(e1, f1); }) == ErrorKind::BadTransvectionData);
  CHECK(kind_of([&] { eichler_transvection(e1 + f1, e2); }) == ErrorKind::BadTransvectionData);
  auto odd = make_lattice("H',H");
  CHECK(kind_of([&] { eichler_transvection(HClass::named(odd, "e1"), HClass::named(odd, "W")); }) ==
        ErrorKind::BadTransvectionData);
}

TEST_CASE("transvections match the formula on every basis vector") {
  Rng rng(17);
  auto l = make_lattice("H',2H,E8-");
  for (int trial = 0; trial < 50; ++trial) {
    const HClass u = HClass::named(l, trial % 2 ? "e2" : "f1");
    HClass v = ellgenus::testing::random_class(rng, l, 2, {1, 2, 3});
    Vector c = v.coords();
    c[trial % 2 ? 4 : 3] = 0;  // drop the partner coordinate of u
    if (trial % 2 == 0) c[2] = 0;
    v = HClass(l, c);
    if (pairing(u, v) != 0) continue;
    const Isometry m = eichler_transvection(u, v);
    for (std::size_t i = 0; i < l->rank(); ++i) {
      const HClass b = HClass::basis(l, i);
      CHECK(m.apply(b) == transvect(u, v, b));
    }
  }
}

TEST_CASE("spinor norm fixtures") {
  auto l = make_lattice("2H");
  CHECK(spinor_norm(Isometry::identity(l)) == 1);
  const std::size_t one[] = {0}, both[] = {0, 1};
  CHECK(spinor_norm(negate_blocks(l, one)) == -1);
  CHECK(spinor_norm(negate_blocks(l, both)) == 1);

  auto e3 = make_surface(3, 1, 1).lattice();
  const std::size_t h1[] = {1}, h12[] = {1, 2};
  CHECK(spinor_norm(negate_blocks(e3, h1)) == -1);
  CHECK(spinor_norm(negate_blocks(e3, h12)) == 1);
}

TEST_CASE("spinor frame validation") {
  auto l = make_lattice("2H");
  CHECK(kind_of([&] { SpinorFrame(l, Matrix::from_columns({{1, 1, 0, 0}})); }) == ErrorKind::DegenerateFrame);
  CHECK(kind_of([&] { SpinorFrame(l, Matrix::from_columns({{1, 0, 0, 0}, {0, 0, 1, 1}})); }) ==
        ErrorKind::DegenerateFrame);
  CHECK(kind_of([&] { SpinorFrame(l, Matrix::from_columns({{1, -1, 0, 0}, {0, 0, 1, 1}})); }) ==
        ErrorKind::DegenerateFrame);
  const SpinorFrame c = SpinorFrame::canonical(make_lattice("H',H,E8-"));
  CHECK(c.columns() == Matrix::from_columns({Vector{1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                              Vector{0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}));
  CHECK(kind_of([&] { spinor_norm(c, Isometry::identity(l)); }) == ErrorKind::LatticeMismatch);
}

TEST_CASE("fixes_class examples") {
  auto l = make_lattice("2H");
  const HClass e1 = HClass::named(l, "e1");
  CHECK(fixes_class(Isometry::identity(l), e1 + HClass::named(l, "f2")));
  CHECK_FALSE(fixes_class(verify_isometry(l, -Matrix::identity(4)), e1));
}

TEST_CASE("spinor norm of reflections in roots") {
  auto l = make_lattice("2H,E8-");
  for (std::size_t b = 0; b < 2; ++b) {
    Vector plus(l->rank(), 0), minus(l->rank(), 0);
    plus[2 * b] = plus[2 * b + 1] = 1;
    minus[2 * b] = 1;
    minus[2 * b + 1] = -1;
    CHECK(spinor_norm(reflection(HClass(l, plus))) == -1);
    CHECK(spinor_norm(reflection(HClass(l, minus))) == 1);
  }
  for (std::size_t i = 4; i < 12; ++i) CHECK(spinor_norm(reflection(HClass::basis(l, i))) == 1);
  // Roots with support in several blocks.
  Vector mixed(l->rank(), 0);
  mixed[0] = 1;
  mixed[1] = 2;
  mixed[4] = 1;  // e1 + 2f1 + x1_1, square 2
  CHECK(spinor_norm(reflection(HClass(l, mixed))) == -1);
  mixed[1] = 0;
  mixed[2] = 1;
  mixed[3] = -1;
  mixed[4] = 0;  // e1 + e2 - f2, square -2
  CHECK(spinor_norm(reflection(HClass(l, mixed))) == 1);
}

TEST_CASE("spinor norm is multiplicative") {
  Rng rng(23);
  for (auto spec : {"2H,E8-", "H',4H,3E8-"}) {
    auto l = make_lattice(spec);
    for (int trial = 0; trial < 60; ++trial) {
      const Isometry a = ellgenus::testing::random_product(rng, l, 5);
      const Isometry b = ellgenus::testing::random_product(rng, l, 5);
      CHECK(spinor_norm(compose(a, b)) == spinor_norm(a) * spinor_norm(b));
      CHECK(spinor_norm(inverse(a)) == spinor_norm(a));
    }
  }
}

TEST_CASE("spinor norm of -id") {
  for (int n = 2; n <= 4; ++n) {
    const auto x = make_surface(n, 1, n == 3 ? 2 : 1);
    const auto& l = x.lattice();
    const Isometry m = verify_isometry(l, -Matrix::identity(l->rank()));
    CHECK(spinor_norm(m) == ((l->sig_pos() % 2) ? -1 : 1));
  }
}

TEST_CASE("transvections have spinor norm +1 and determinant +1") {
  Rng rng(29);
  auto l = make_lattice("H',3H,2E8-");
  int seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Isometry g = ellgenus::testing::random_generator(rng, l);
    const bool unipotent = [&] {
      // transvections are the only unipotent generators in the mix
      Matrix d = g.matrix();
      for (std::size_t i = 0; i < d.rows(); ++i) d(i, i) -= 1;
      return d * d * d == Matrix(d.rows(), d.cols());
    }();
    if (!unipotent || g == Isometry::identity(l)) continue;
    ++seen;
    CHECK(spinor_norm(g) == 1);
    CHECK(g.det() == 1);
  }
  CHECK(seen > 20);
}

TEST_CASE("spinor norm does not depend on the frame") {
  Rng rng(31);
  for (auto spec : {"2H", "2H,E8-", "H',4H,3E8-"}) {
    auto l = make_lattice(spec);
    const SpinorFrame a = SpinorFrame::canonical(l);
    const SpinorFrame b = perturbed_frame(l);
    CHECK_FALSE(a.columns() == b.columns());
    for (int trial = 0; trial < 40; ++trial) {
      const Isometry m = ellgenus::testing::random_product(rng, l, 4);
      CHECK(spinor_norm(a, m) == spinor_norm(b, m));
    }
  }
}

TEST_CASE("inverse") {
  Rng rng(37);
  auto l = make_lattice("H',2H,E8-");
  for (int trial = 0; trial < 30; ++trial) {
    const Isometry m = ellgenus::testing::random_product(rng, l, 6);
    const HClass x = ellgenus::testing::random_class(rng, l, 4);
    CHECK(inverse(m).apply(m.apply(x)) == x);
    CHECK((m.det() == 1 || m.det() == -1));
  }
}
