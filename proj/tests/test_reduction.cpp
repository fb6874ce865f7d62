#include <doctest.h>

#include <numeric>

#include "ellgenus/error.hpp"
#include "ellgenus/oracle.hpp"
#include "ellgenus/reduction.hpp"
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

void check_result(const ReductionResult& r) {
  CHECK(r.certificate.apply(r.input) == r.canonical);
  CHECK(square(r.canonical) == square(r.input));
  CHECK(divisibility(r.canonical) == divisibility(r.input));
  CHECK(r.spinor == spinor_norm(r.certificate));
  CHECK(r.spinor == 1);
}

// d (e + a f) in block `b`.
HClass expected_canonical(const HClass& x, std::size_t b) {
  const Int d = divisibility(x);
  const Int a = square(x) / (2 * d * d);
  Vector v(x.lattice()->rank(), 0);
  v[x.lattice()->block_offset(b)] = d;
  v[x.lattice()->block_offset(b) + 1] = d * a;
  return HClass(x.lattice(), v);
}

// M^T G M = G and the frame determinant, recomputed with plain loops.
void independent_certificate_check(const Isometry& m, const HClass& from, const HClass& to) {
  const auto& l = *m.lattice();
  const Matrix& g = l.gram();
  const Matrix& a = m.matrix();
  const std::size_t n = l.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int s = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) s += a(r, i) * g(r, c) * a(c, j);
      REQUIRE(s == g(i, j));
    }
  for (std::size_t i = 0; i < n; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * from[j];
    CHECK(s == to[i]);
  }
}

}  // namespace

TEST_CASE("reduce_even examples") {
  auto l = make_lattice("2H");
  auto c = [&](Vector v) { return HClass(l, std::move(v)); };

  const auto r1 = reduce_even(c({1, 3, 0, 0}), 0);
  CHECK(r1.canonical == c({1, 3, 0, 0}));
  CHECK(r1.certificate == Isometry::identity(l));

  const auto r2 = reduce_even(c({1, 1, 1, 1}), 0);
  CHECK(r2.canonical == c({1, 2, 0, 0}));
  check_result(r2);

  const auto r3 = reduce_even(c({2, 2, 0, 0}), 0);
  CHECK(r3.canonical == c({2, 2, 0, 0}));
  CHECK(r3.certificate == Isometry::identity(l));
}

TEST_CASE("the e1+f1+e2+f2 reduction agrees with a brute-force orbit") {
  auto l = make_lattice("2H");
  const HClass x(l, {1, 1, 1, 1}), y(l, {1, 2, 0, 0});
  const auto report = orbit_bfs(l, {x, y}, default_generators(l), 2);
  CHECK(report.orbit_count_spinor1 == 1);
  CHECK(reduce_even(x, 0).canonical == y);
}

TEST_CASE("reduce_even errors") {
  auto one_h = make_lattice("H,E8-");
  CHECK(kind_of([&] { reduce_even(HClass::basis(one_h, 0), 0); }) == ErrorKind::NeedTwoHyperbolicPlanes);
  auto l = make_lattice("2H,E8-");
  CHECK(kind_of([&] { reduce_even(HClass::zero(l), 0); }) == ErrorKind::ZeroClass);
  const std::size_t acting[] = {0, 1};
  CHECK(kind_of([&] { reduce_even(HClass::named(l, "x1_1"), 0, acting); }) == ErrorKind::PreconditionFailed);
  CHECK(kind_of([&] { reduce_even(HClass::named(l, "e1"), 2); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("reduce_even leaves blocks outside the acting set alone") {
  Rng rng(41);
  auto l = make_lattice("H',3H,E8-");
  const std::size_t acting[] = {1, 2, 4};
  for (int trial = 0; trial < 50; ++trial) {
    const HClass x = ellgenus::testing::random_class(rng, l, 3, {1, 2, 4});
    if (x.is_zero()) continue;
    const auto r = reduce_even(x, 1, acting);
    check_result(r);
    CHECK(r.canonical == expected_canonical(x, 1));
    for (const char* name : {"k", "W", "e3", "f3"}) CHECK(fixes_class(r.certificate, HClass::named(l, name)));
  }
}

TEST_CASE("reduce_even on random classes") {
  Rng rng(43);
  for (auto spec : {"2H,E8-", "3H,2E8-"}) {
    auto l = make_lattice(spec);
    for (int trial = 0; trial < 150; ++trial) {
      HClass x = ellgenus::testing::random_class(rng, l, trial < 100 ? 3 : 15);
      if (trial % 5 == 0) x = ellgenus::testing::uniform(rng, 2, 4) * x;
      if (x.is_zero()) continue;
      const auto target = static_cast<std::size_t>(trial % 2);
      const auto r = reduce_even(x, target);
      check_result(r);
      CHECK(r.canonical == expected_canonical(x, target));
    }
  }
}

TEST_CASE("large inputs reduce or fail loudly") {
  Rng rng(45);
  auto l = make_lattice("3H,2E8-");
  for (int trial = 0; trial < 40; ++trial) {
    const HClass x = ellgenus::testing::random_class(rng, l, 1000);
    try {
      const auto r = reduce_even(x, 0);
      CHECK(r.canonical == expected_canonical(x, 0));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Overflow);
    }
  }
}

TEST_CASE("orbit soundness in 2H + (-E8)") {
  Rng rng(47);
  auto l = make_lattice("2H,E8-");
  int pairs = 0;
  for (int trial = 0; trial < 4000 && pairs < 100; ++trial) {
    const HClass x = ellgenus::testing::random_class(rng, l, 3);
    const HClass y = ellgenus::testing::random_class(rng, l, 3);
    if (x.is_zero() || y.is_zero()) continue;
    if (square(x) != square(y) || divisibility(x) != divisibility(y)) continue;
    ++pairs;
    const auto rx = reduce_even(x, 0), ry = reduce_even(y, 0);
    CHECK(rx.canonical == ry.canonical);
    // y = (ry^-1 rx) x with spinor norm +1
    const Isometry link = compose(inverse(ry.certificate), rx.certificate);
    CHECK(link.apply(x) == y);
    CHECK(spinor_norm(link) == 1);
  }
  CHECK(pairs >= 50);
}

TEST_CASE("reduce_in_elliptic examples") {
  const auto e3 = make_surface(3, 1, 1);
  const auto rk = reduce_in_elliptic(e3, e3.k());
  CHECK(rk.canonical == e3.k());
  CHECK(rk.certificate == Isometry::identity(e3.lattice()));

  const HClass a = e3.R() + 2 * e3.T() + HClass::named(e3.lattice(), "e2") - HClass::named(e3.lattice(), "f2");
  REQUIRE(square(a) == 2);
  const auto r = reduce_in_elliptic(e3, a);
  CHECK(r.canonical == e3.R() + e3.T());
  check_result(r);
  independent_certificate_check(r.certificate, a, r.canonical);
  CHECK(r.fixes_k);
  CHECK(r.fixes_W);

  const auto k3 = make_surface(2, 1, 1);
  const auto rs = reduce_in_elliptic(k3, k3.S());
  check_result(rs);
  CHECK(rs.canonical == k3.R() - k3.T());
  const auto rkw = reduce_in_elliptic(k3, k3.k() + 3 * k3.W());
  check_result(rkw);
  CHECK(rkw.canonical == k3.R() + 3 * k3.T());
}

TEST_CASE("reduce_in_elliptic errors") {
  const auto e3 = make_surface(3, 1, 1);
  CHECK(kind_of([&] { reduce_in_elliptic(e3, e3.W()); }) == ErrorKind::NotOrthogonalToK);
  CHECK(kind_of([&] { reduce_in_elliptic(e3, HClass::zero(e3.lattice())); }) == ErrorKind::ZeroClass);
}

TEST_CASE("reduce_in_elliptic canonical shape") {
  Rng rng(53);
  for (auto [n, p, q] : {std::tuple{3, 1, 1}, std::tuple{2, 2, 3}, std::tuple{4, 1, 2}}) {
    const auto x = make_surface(n, p, q);
    const auto& l = x.lattice();
    for (int trial = 0; trial < 40; ++trial) {
      HClass a = ellgenus::testing::random_class(rng, l, 3);
      Vector c = a.coords();
      c[1] = 0;  // k.A = W-coordinate
      a = HClass(l, c);
      if (a.is_zero()) continue;
      const auto r = reduce_in_elliptic(x, a);
      check_result(r);
      CHECK(r.fixes_k);
      CHECK(r.fixes_W);
      const Int ka = a[0];
      const HClass b = a - ka * x.k();
      const Int gamma = r.canonical[2], delta = r.canonical[3];
      CHECK(r.canonical == ka * x.k() + gamma * x.R() + delta * x.T());
      CHECK(2 * gamma * delta == square(b));
      CHECK(std::gcd(gamma, delta) == divisibility(b));
      if (!b.is_zero()) CHECK(delta >= 0);
    }
  }
}

TEST_CASE("phi_isometry") {
  const auto e3 = make_surface(3, 1, 1);
  CHECK(phi_isometry(e3, 0) == Isometry::identity(e3.lattice()));
  const Isometry p2 = phi_isometry(e3, 2);
  CHECK_NOTHROW(verify_isometry(e3.lattice(), p2.matrix()));
  CHECK(spinor_norm(p2) == 1);
  CHECK(fixes_class(p2, e3.k()));
  CHECK(p2.apply(e3.W()) == e3.W() + 2 * e3.R());
  CHECK(p2.apply(e3.R()) == e3.R());
  CHECK(p2.apply(e3.S()) == e3.S() - 2 * e3.k());
  CHECK(phi_isometry(e3, 3).apply(3 * e3.k() + e3.S()) == e3.S());
  for (Int a = -4; a <= 4; ++a)
    for (Int b = -4; b <= 4; ++b) CHECK(compose(phi_isometry(e3, a), phi_isometry(e3, b)) == phi_isometry(e3, a + b));
}

TEST_CASE("sphere_reduction examples") {
  const auto e3 = make_surface(3, 1, 1);
  const auto rs = sphere_reduction(e3, e3.S());
  CHECK(rs.canonical == e3.S());
  CHECK(rs.certificate == Isometry::identity(e3.lattice()));

  const auto r5 = sphere_reduction(e3, 5 * e3.k() + e3.S());
  CHECK(r5.canonical == e3.S());
  CHECK(r5.certificate == phi_isometry(e3, 5));
  check_result(r5);

  const HClass a = 2 * e3.k() + HClass::named(e3.lattice(), "x1_1");
  const auto rx = sphere_reduction(e3, a);
  CHECK(rx.canonical == e3.S());
  check_result(rx);
  CHECK(rx.fixes_k);
  independent_certificate_check(rx.certificate, a, e3.S());

  CHECK(kind_of([&] { sphere_reduction(e3, e3.R()); }) == ErrorKind::PreconditionFailed);
  CHECK(kind_of([&] { sphere_reduction(e3, e3.W() - e3.k()); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("sphere_reduction on random -2 classes") {
  Rng rng(59);
  const auto x = make_surface(2, 2, 3);
  for (int trial = 0; trial < 40; ++trial) {
    // images of S under isometries that fix k and W, shifted along k
    const Isometry m = ellgenus::testing::random_product(rng, x.lattice(), 6, true);
    const HClass a = m.apply(x.S()) + ellgenus::testing::uniform(rng, -4, 4) * x.k();
    REQUIRE(square(a) == -2);
    const auto r = sphere_reduction(x, a);
    check_result(r);
    CHECK(r.canonical == x.S());
    CHECK(r.fixes_k);
  }
}

TEST_CASE("reduction is deterministic") {
  const auto e4 = make_surface(4, 1, 1);
  Rng rng(61);
  HClass a = ellgenus::testing::random_class(rng, e4.lattice(), 5);
  Vector c = a.coords();
  c[1] = 0;
  a = HClass(e4.lattice(), c);
  CHECK(reduce_in_elliptic(e4, a).certificate == reduce_in_elliptic(e4, a).certificate);
}
