#include "ellgenus/isometry.hpp"

#include <sstream>

namespace ellgenus {

namespace {

void require_same(const Lattice& a, const Lattice& b, const char* what) {
  if (!a.same_form(b)) fail(ErrorKind::LatticeMismatch, what);
}

}  // namespace

HClass Isometry::apply(const HClass& x) const {
  require_same(*lattice_, *x.lattice(), "isometry applied to a class on another lattice");
  return HClass(x.lattice(), matrix_ * std::span<const Int>(x.coords()));
}

Int Isometry::det() const { return static_cast<Int>(determinant(matrix_)); }

Isometry Isometry::identity(LatticePtr lattice) {
  const std::size_t n = lattice->rank();
  return Isometry(std::move(lattice), Matrix::identity(n));
}

Isometry verify_isometry(LatticePtr lattice, Matrix m) {
  const std::size_t n = lattice->rank();
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream msg;
    msg << "matrix is " << m.rows() << "x" << m.cols() << ", lattice rank is " << n;
    fail(ErrorKind::NotAnIsometry, msg.str());
  }
  const Matrix& g = lattice->gram();
  const Matrix pulled = m.transpose() * (g * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pulled(i, j) != g(i, j)) {
        std::ostringstream msg;
        msg << "(M^T G M)[" << i << "][" << j << "] = " << pulled(i, j) << ", expected " << g(i, j);
        fail(ErrorKind::NotAnIsometry, msg.str());
      }
  return Isometry(std::move(lattice), std::move(m));
}

Isometry compose(const Isometry& a, const Isometry& b) {
  require_same(*a.lattice_, *b.lattice_, "composing isometries of different lattices");
  return Isometry(a.lattice_, a.matrix_ * b.matrix_);
}

Isometry inverse(const Isometry& m) {
  const Lattice& l = *m.lattice_;
  return Isometry(m.lattice_, l.gram_inverse() * (m.matrix_.transpose() * l.gram()));
}

Isometry reflection(const HClass& v) {
  const LatticePtr& l = v.lattice();
  const Int vv = square(v);
  if (vv == 0) fail(ErrorKind::NonIntegralReflection, "reflection in an isotropic vector");
  const Vector gv = l->gram() * std::span<const Int>(v.coords());  // (x_i . v) for basis x_i
  Matrix m = Matrix::identity(l->rank());
  for (std::size_t c = 0; c < l->rank(); ++c) {
    const Int num = mul(2, gv[c]);
    if (num % vv != 0)
      fail(ErrorKind::NonIntegralReflection,
           "2(x.v)/v.v is not integral on basis vector " + l->basis_names()[c]);
    const Int coef = num / vv;
    for (std::size_t r = 0; r < l->rank(); ++r) m(r, c) = sub(m(r, c), mul(coef, v[r]));
  }
  return verify_isometry(l, std::move(m));
}

Isometry eichler_transvection(const HClass& u, const HClass& v) {
  if (!u.lattice()->same_form(*v.lattice())) fail(ErrorKind::LatticeMismatch, "transvection data on different lattices");
  if (square(u) != 0) fail(ErrorKind::BadTransvectionData, "u is not isotropic");
  if (pairing(u, v) != 0) fail(ErrorKind::BadTransvectionData, "u.v = " + std::to_string(pairing(u, v)) + " != 0");
  const Int vv = square(v);
  if (vv % 2 != 0) fail(ErrorKind::BadTransvectionData, "v.v is odd");
  const LatticePtr& l = u.lattice();
  const std::size_t n = l->rank();
  const Vector gu = l->gram() * std::span<const Int>(u.coords());
  const Vector gv = l->gram() * std::span<const Int>(v.coords());
  const Int half = vv / 2;
  Matrix m = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    // image of basis vector x_c: x_c + (x_c.v) u - (x_c.u) v - half (x_c.u) u
    const Int xv = gv[c], xu = gu[c];
    if (xv == 0 && xu == 0) continue;
    const Int ucoef = sub(xv, mul(half, xu));
    for (std::size_t r = 0; r < n; ++r) m(r, c) = sub(add(m(r, c), mul(ucoef, u[r])), mul(xu, v[r]));
  }
  return verify_isometry(l, std::move(m));
}

Isometry negate_blocks(LatticePtr lattice, std::span<const std::size_t> blocks) {
  Matrix m = Matrix::identity(lattice->rank());
  for (std::size_t b : blocks) {
    const std::size_t o = lattice->block_offset(b);
    for (std::size_t i = 0; i < lattice->blocks()[b].rank(); ++i) m(o + i, o + i) = -1;
  }
  return verify_isometry(std::move(lattice), std::move(m));
}

bool fixes_class(const Isometry& m, const HClass& x) { return m.apply(x) == x; }

SpinorFrame::SpinorFrame(LatticePtr lattice, Matrix columns) : lattice_(std::move(lattice)), p_(std::move(columns)) {
  if (p_.rows() != lattice_->rank()) fail(ErrorKind::DegenerateFrame, "frame vectors have the wrong length");
  if (p_.cols() != lattice_->sig_pos())
    fail(ErrorKind::DegenerateFrame, "frame has " + std::to_string(p_.cols()) + " columns, b2+ is " +
                                         std::to_string(lattice_->sig_pos()));
  if (!positive_definite(p_.transpose() * (lattice_->gram() * p_)))
    fail(ErrorKind::DegenerateFrame, "frame span is not positive definite");
}

SpinorFrame SpinorFrame::canonical(LatticePtr lattice) {
  std::vector<Vector> cols;
  for (std::size_t b = 0; b < lattice->blocks().size(); ++b) {
    if (lattice->blocks()[b].kind == BlockKind::MinusE8) continue;
    Vector v(lattice->rank(), 0);
    const std::size_t o = lattice->block_offset(b);
    v[o] = v[o + 1] = 1;
    cols.push_back(std::move(v));
  }
  return SpinorFrame(lattice, Matrix::from_columns(cols));
}

int spinor_norm(const SpinorFrame& frame, const Isometry& m) {
  require_same(*frame.lattice(), *m.lattice(), "frame and isometry on different lattices");
  const Matrix& p = frame.columns();
  const int s = determinant_sign(p.transpose() * (frame.lattice()->gram() * (m.matrix() * p)));
  if (s == 0) fail(ErrorKind::DegenerateFrame, "det(P^T G M P) = 0; input is not an isometry");
  return s;
}

int spinor_norm(const Isometry& m) { return spinor_norm(SpinorFrame::canonical(m.lattice()), m); }

}  // namespace ellgenus
