#include "ellgenus/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace ellgenus {

ReductionResult make_reduction_result(HClass input, HClass canonical, Isometry certificate) {
  if (!(certificate.apply(input) == canonical))
    throw std::logic_error("reduction certificate does not map " + to_string(input) + " to " + to_string(canonical));
  const Lattice& l = *input.lattice();
  const std::size_t ik = l.index_of("k"), iw = l.index_of("W");
  bool fk = false, fw = false;
  if (ik != Lattice::npos && iw != Lattice::npos) {
    fk = fixes_class(certificate, HClass::basis(input.lattice(), ik));
    fw = fixes_class(certificate, HClass::basis(input.lattice(), iw));
  }
  const int nu = spinor_norm(certificate);
  return ReductionResult{std::move(input), std::move(canonical), std::move(certificate), nu, fk, fw};
}

namespace {

// Drives a primitive vector to e_P + a f_P through a target plane P and a
// helper plane Q. Write x = a e_P + b f_P + c e_Q + d f_Q + z and
//
//   X = [[a, -c], [d, b]].
//
// The transvections E_{u, m w} with u in {e_P, f_P} and w in {e_Q, f_Q} are
// the elementary row and column operations on X, so Euclid brings X to
// diag(g, h) with g | h and g the gcd of the P + Q coordinates. While g > 1
// some basis vector b_j of the rest pairs with z to a value not divisible by
// g (x is primitive); E_{e_Q, b_j} adds that value to c and g drops, which is
// the measure asserted below. Once g = 1 the single transvection E_{f_P, z}
// clears the rest. Certificates stay polynomial in the input size.
class Reducer {
 public:
  Reducer(LatticePtr lattice, Vector x, std::size_t target, std::size_t helper, const std::vector<std::size_t>& acting)
      : l_(std::move(lattice)), g_(l_->gram()), x_(std::move(x)), cert_(Matrix::identity(l_->rank())) {
    ep_ = l_->block_offset(target);
    fp_ = ep_ + 1;
    eq_ = l_->block_offset(helper);
    fq_ = eq_ + 1;
    for (std::size_t i : acting)
      if (i != ep_ && i != fp_ && i != eq_ && i != fq_) rest_.push_back(i);
  }

  void run() {
    const bool empty_planes = x_[ep_] == 0 && x_[fp_] == 0 && x_[eq_] == 0 && x_[fq_] == 0;
    if (empty_planes) {
      // x.e_P = 0: E_{e_P, w} adds x.w to a.
      transvect(ep_, rest_vector());
    }
    const Int g = make_pivot();
    if (g != 1) {
      // Clear d = x.e_Q; then E_{e_Q, w} adds x.w to c. x.w is the content
      // of the rest, which is coprime to g.
      if (entry(1, 0) != 0) row_add(1, neg(entry(1, 0) / x00()));
      transvect(eq_, rest_vector());
      if (make_pivot() >= g) throw std::logic_error("reduction measure failed to decrease");
    }
    if (abs_checked(x00()) != 1) throw std::logic_error("reduction did not reach a unit pivot");
    finish();
  }

  const Vector& x() const { return x_; }
  const Matrix& certificate() const { return cert_; }

 private:
  Int entry(int i, int j) const {
    if (i == 0) return j == 0 ? x_[ep_] : neg(x_[eq_]);
    return j == 0 ? x_[fq_] : x_[fp_];
  }
  Int x00() const { return entry(0, 0); }

  Vector unit(std::size_t i, Int m = 1) const {
    Vector v(l_->rank(), 0);
    v[i] = m;
    return v;
  }

  // Row i += m row (1-i) and column j += m column (1-j) of X.
  void row_add(int i, Int m) {
    if (i == 0) transvect(ep_, unit(eq_, m));
    else transvect(fp_, unit(fq_, neg(m)));
  }
  void col_add(int j, Int m) {
    if (j == 0) transvect(ep_, unit(fq_, neg(m)));
    else transvect(fp_, unit(eq_, m));
  }

  // Euclid on the entries of X, always pivoting on the least non-zero entry,
  // until one entry equals the content g of X; that entry is then moved to
  // (0, 0). Returns g.
  Int make_pivot() {
    while (true) {
      Int g = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g = std::gcd(g, entry(i, j));
      if (g == 0) throw std::logic_error("reduction reached an empty hyperbolic part");
      int pi = -1, pj = -1;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const Int v = entry(i, j);
          if (v != 0 && (pi < 0 || abs_checked(v) < abs_checked(entry(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      const Int p = entry(pi, pj);
      if (abs_checked(p) == g) {
        // Every entry is a multiple of p, so one shear lands +-g on (0, 0).
        if (pj != 0) col_add(0, (p - entry(pi, 0)) / p);
        if (pi != 0) row_add(0, (p - entry(0, 0)) / p);
        return g;
      }
      const int qi = 1 - pi, qj = 1 - pj;
      if (entry(qi, pj) == 0 && entry(pi, qj) == 0) {
        row_add(pi, 1);  // brings the opposite entry, not a multiple of p, next to p
        continue;
      }
      if (entry(qi, pj) != 0) row_add(qi, neg(nearest_quotient(entry(qi, pj), p)));
      if (entry(pi, qj) != 0) col_add(qj, neg(nearest_quotient(entry(pi, qj), p)));
    }
  }

  // A combination w of rest basis vectors with x.w equal to the content of
  // the rest part of x (extended Euclid over its pairings, smallest first).
  Vector rest_vector() const {
    const Vector gx = g_ * std::span<const Int>(x_);
    std::vector<std::size_t> order;
    for (std::size_t j : rest_)
      if (gx[j] != 0) order.push_back(j);
    if (order.empty()) throw std::logic_error("reduction input is not primitive");
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return abs_checked(gx[i]) < abs_checked(gx[j]); });
    Vector w(l_->rank(), 0);
    Int g = 0;
    for (std::size_t j : order) {
      if (g != 0 && gx[j] % g == 0) continue;
      // s g + t y = gcd(g, y)
      Int r0 = g, r1 = gx[j], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
      while (r1 != 0) {
        const Int q = floor_div(r0, r1);
        r0 = sub(r0, mul(q, r1));
        s0 = sub(s0, mul(q, s1));
        t0 = sub(t0, mul(q, t1));
        std::swap(r0, r1);
        std::swap(s0, s1);
        std::swap(t0, t1);
      }
      if (r0 < 0) {
        r0 = neg(r0);
        s0 = neg(s0);
        t0 = neg(t0);
      }
      for (Int& c : w) c = mul(c, s0);
      w[j] = t0;
      g = r0;
      if (g == 1) break;
    }
    return w;
  }

  // Left-multiply x and the certificate by E_{u,w}.
  void transvect(std::size_t u_index, const Vector& w) {
    if (std::all_of(w.begin(), w.end(), [](Int c) { return c == 0; })) return;
    const Vector gw = g_ * std::span<const Int>(w);
    const Vector gu = g_.column(u_index);
    const Int ww = l_->pairing(w, w);
    if (gw[u_index] != 0 || ww % 2 != 0) throw std::logic_error("invalid transvection data in reduction");
    const Int half = ww / 2;
    auto act = [&](auto get, auto set) {
      Int yw = 0, yu = 0;
      for (std::size_t r = 0; r < l_->rank(); ++r) {
        const Int y = get(r);
        if (y == 0) continue;
        if (gw[r] != 0) add_mul(yw, gw[r], y);
        if (gu[r] != 0) add_mul(yu, gu[r], y);
      }
      if (yw == 0 && yu == 0) return;
      for (std::size_t r = 0; r < l_->rank(); ++r)
        if (w[r] != 0) set(r, sub(get(r), mul(yu, w[r])));
      set(u_index, add(get(u_index), sub(yw, mul(half, yu))));
    };
    act([&](std::size_t r) { return x_[r]; }, [&](std::size_t r, Int v) { x_[r] = v; });
    for (std::size_t c = 0; c < l_->rank(); ++c)
      act([&](std::size_t r) { return cert_(r, c); }, [&](std::size_t r, Int v) { cert_(r, c) = v; });
  }

  void negate_rows(std::size_t i) {
    x_[i] = neg(x_[i]);
    for (std::size_t c = 0; c < l_->rank(); ++c) cert_(i, c) = neg(cert_(i, c));
  }

  void finish() {
    if (x_[ep_] == -1) {
      // -id on both planes
      for (std::size_t i : {ep_, fp_, eq_, fq_}) negate_rows(i);
    }
    // x = e_P + h f_P + y with y orthogonal to P and x.f_P = 1: E_{f_P, y}
    // removes y.
    Vector y(l_->rank(), 0);
    y[eq_] = x_[eq_];
    y[fq_] = x_[fq_];
    for (std::size_t j : rest_) y[j] = x_[j];
    transvect(fp_, y);
  }

  LatticePtr l_;
  const Matrix& g_;
  Vector x_;
  Matrix cert_;
  std::size_t ep_, fp_, eq_, fq_;
  std::vector<std::size_t> rest_;
};

}  // namespace

ReductionResult reduce_even(const HClass& x, std::size_t target_block, std::span<const std::size_t> acting_blocks) {
  const LatticePtr& l = x.lattice();
  const auto& blocks = l->blocks();

  std::vector<std::size_t> acting;
  if (acting_blocks.empty()) {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (blocks[b].kind != BlockKind::HyperbolicOdd) acting.push_back(b);
  } else {
    acting.assign(acting_blocks.begin(), acting_blocks.end());
    std::sort(acting.begin(), acting.end());
    acting.erase(std::unique(acting.begin(), acting.end()), acting.end());
  }
  if (target_block >= blocks.size() || blocks[target_block].kind != BlockKind::Hyperbolic)
    fail(ErrorKind::PreconditionFailed, "target block " + std::to_string(target_block) + " is not an H block");
  if (std::find(acting.begin(), acting.end(), target_block) == acting.end())
    fail(ErrorKind::PreconditionFailed, "target block is not among the acting blocks");

  std::optional<std::size_t> helper;
  std::vector<bool> in_acting(l->rank(), false);
  std::vector<std::size_t> acting_coords;
  for (std::size_t b : acting) {
    if (b >= blocks.size()) fail(ErrorKind::PreconditionFailed, "acting block index out of range");
    if (blocks[b].kind == BlockKind::HyperbolicOdd)
      fail(ErrorKind::PreconditionFailed, "the acting sublattice must be even (H' block " + std::to_string(b) + ")");
    if (blocks[b].kind == BlockKind::Hyperbolic && b != target_block && !helper) helper = b;
    for (std::size_t i = 0; i < blocks[b].rank(); ++i) {
      in_acting[l->block_offset(b) + i] = true;
      acting_coords.push_back(l->block_offset(b) + i);
    }
  }
  if (!helper) fail(ErrorKind::NeedTwoHyperbolicPlanes, "the acting sublattice has fewer than two H blocks");

  if (x.is_zero()) fail(ErrorKind::ZeroClass, "cannot reduce the zero class");
  for (std::size_t i = 0; i < l->rank(); ++i)
    if (x[i] != 0 && !in_acting[i])
      fail(ErrorKind::PreconditionFailed, "class has a component on " + l->basis_names()[i] +
                                              ", outside the acting sublattice");

  const Int d = divisibility(x);
  Vector primitive(x.coords());
  for (Int& c : primitive) c /= d;

  const Int e = l->block_offset(target_block), f = e + 1;
  Matrix cert;
  Vector reduced;
  // Already canonical: keep the identity certificate.
  bool canonical = primitive[e] == 1;
  for (std::size_t i = 0; i < primitive.size() && canonical; ++i)
    if (i != static_cast<std::size_t>(e) && i != static_cast<std::size_t>(f) && primitive[i] != 0) canonical = false;
  if (canonical) {
    cert = Matrix::identity(l->rank());
    reduced = primitive;
  } else {
    Reducer r(l, primitive, target_block, *helper, acting_coords);
    r.run();
    cert = r.certificate();
    reduced = r.x();
  }

  Vector target(l->rank(), 0);
  target[e] = d;
  target[f] = mul(d, reduced[f]);
  return make_reduction_result(x, HClass(l, std::move(target)), verify_isometry(l, std::move(cert)));
}

namespace {

std::vector<std::size_t> blocks_from(const Lattice& l, std::size_t first) {
  std::vector<std::size_t> out;
  for (std::size_t b = first; b < l.blocks().size(); ++b) out.push_back(b);
  return out;
}

std::size_t k_index(const EllipticSurface& x) { return x.lattice()->index_of("k"); }

}  // namespace

ReductionResult reduce_in_elliptic(const EllipticSurface& x, const HClass& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroClass, "cannot reduce the zero class");
  const LatticePtr& l = x.lattice();
  if (x.is_k3()) return reduce_even(a, 1, blocks_from(*l, 0));

  if (pairing(x.k(), a) != 0)
    fail(ErrorKind::NotOrthogonalToK, "k.A = " + std::to_string(pairing(x.k(), a)));
  const Int ka = a[k_index(x)];
  const HClass b = a - ka * x.k();
  if (b.is_zero()) return make_reduction_result(a, a, Isometry::identity(l));

  const auto acting = blocks_from(*l, 1);
  ReductionResult r = reduce_even(b, 1, acting);
  const Int d = divisibility(b);
  const Int s = square(b) / mul(2, mul(d, d));
  Isometry cert = r.certificate;
  HClass canonical = r.canonical;
  if (s != 0) {
    // d R + d s T -> d s R + d T
    const Isometry swap = reflection(x.R() - x.T());
    cert = compose(swap, cert);
    canonical = swap.apply(canonical);
  }
  return make_reduction_result(a, ka * x.k() + canonical, cert);
}

Isometry phi_isometry(const EllipticSurface& x, Int alpha) {
  const Lattice& l = *x.lattice();
  const std::size_t k = l.index_of("k"), w = l.index_of("W"), r = l.index_of("e1"), t = l.index_of("f1");
  Matrix m = Matrix::identity(l.rank());
  m(r, w) = alpha;       // W -> W + alpha R
  m(k, t) = neg(alpha);  // T = R + S -> T - alpha k
  return verify_isometry(x.lattice(), std::move(m));
}

ReductionResult sphere_reduction(const EllipticSurface& x, const HClass& a) {
  if (pairing(x.k(), a) != 0)
    fail(ErrorKind::PreconditionFailed, "k.A = " + std::to_string(pairing(x.k(), a)) + ", expected 0");
  if (square(a) != -2) fail(ErrorKind::PreconditionFailed, "A.A = " + std::to_string(square(a)) + ", expected -2");
  const LatticePtr& l = x.lattice();
  const Int alpha = a[k_index(x)];
  const HClass b = a - alpha * x.k();

  Isometry cert = Isometry::identity(l);
  if (!(b == x.S())) {
    // b reduces to R - T = -S; the reflection in R - T flips it to S.
    const ReductionResult r = reduce_even(b, 1, blocks_from(*l, 1));
    cert = compose(reflection(x.R() - x.T()), r.certificate);
  }
  if (alpha != 0) cert = compose(phi_isometry(x, alpha), cert);
  return make_reduction_result(a, x.S(), cert);
}

}  // namespace ellgenus
