#pragma once

#include "ellgenus/lattice.hpp"
#include "ellgenus/matrix.hpp"

namespace ellgenus {

/// A verified automorphism of the form: M^T G M = G. Matrices act on
/// coordinate columns.
class Isometry {
 public:
  const LatticePtr& lattice() const { return lattice_; }
  const Matrix& matrix() const { return matrix_; }

  HClass apply(const HClass& x) const;
  Int det() const;

  static Isometry identity(LatticePtr lattice);

  friend bool operator==(const Isometry& a, const Isometry& b) {
    return a.lattice_->same_form(*b.lattice_) && a.matrix_ == b.matrix_;
  }

 private:
  Isometry(LatticePtr lattice, Matrix m) : lattice_(std::move(lattice)), matrix_(std::move(m)) {}
  friend Isometry verify_isometry(LatticePtr, Matrix);
  friend Isometry compose(const Isometry&, const Isometry&);
  friend Isometry inverse(const Isometry&);

  LatticePtr lattice_;
  Matrix matrix_;
};

/// Accepts `m` iff m^T G m = G exactly; NotAnIsometry names the first
/// offending entry otherwise.
Isometry verify_isometry(LatticePtr lattice, Matrix m);

/// `a` after `b`: compose(a, b)(x) = a(b(x)).
Isometry compose(const Isometry& a, const Isometry& b);

/// G^{-1} M^T G.
Isometry inverse(const Isometry& m);

/// x -> x - 2 (x.v / v.v) v. Needs v.v != 0 and the quotient integral on every
/// basis vector.
Isometry reflection(const HClass& v);

/// E_{u,v}(x) = x + (x.v) u - (x.u) v - (v.v / 2)(x.u) u for isotropic u,
/// v orthogonal to u, v.v even.
Isometry eichler_transvection(const HClass& u, const HClass& v);

/// -id on the listed blocks, identity elsewhere.
Isometry negate_blocks(LatticePtr lattice, std::span<const std::size_t> blocks);

bool fixes_class(const Isometry& m, const HClass& x);

/// Columns spanning a maximal positive-definite subspace U0.
class SpinorFrame {
 public:
  /// Validates that P^T G P is positive definite and that P has sig_pos
  /// columns; DegenerateFrame otherwise.
  SpinorFrame(LatticePtr lattice, Matrix columns);

  /// The diagonal frame {first+second basis vector of every H / H' block}.
  static SpinorFrame canonical(LatticePtr lattice);

  const LatticePtr& lattice() const { return lattice_; }
  const Matrix& columns() const { return p_; }

 private:
  LatticePtr lattice_;
  Matrix p_;
};

/// +1 if the isometry preserves the orientation of maximal positive
/// subspaces, -1 if it reverses it. Computed as sign det(P^T G M P): the
/// orthogonal projection of M(U0) back onto U0 has matrix
/// (P^T G P)^{-1} P^T G M P and the first factor is positive definite.
int spinor_norm(const SpinorFrame& frame, const Isometry& m);

/// Convenience: spinor norm with the canonical frame.
int spinor_norm(const Isometry& m);

}  // namespace ellgenus
