#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ellgenus/isometry.hpp"
#include "ellgenus/lattice.hpp"

namespace ellgenus {

/// A minimal simply-connected elliptic surface E(n)_{p,q} with n >= 2 and
/// its intersection lattice
///
///   [H or H'] + (2n-2) H + n (-E8)      (rank 12n-2, b2+ = 2n-1)
///
/// The leading summand is spanned by k (K = d k, d = npq-p-q) and W with
/// k.W = 1; it is H' exactly when d is odd. The first H summand is spanned
/// by the rim torus R = e1 and T = f1; S = T - R is the vanishing sphere.
class EllipticSurface {
 public:
  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  /// Divisibility of the canonical class, npq - p - q.
  Int d() const { return d_; }
  bool spin() const { return spin_; }
  int l() const { return 2 * n_ - 2; }
  int m() const { return n_; }
  bool is_k3() const { return d_ == 0; }
  bool no_multiple_fibres() const { return p_ == 1 && q_ == 1; }

  const LatticePtr& lattice() const { return lattice_; }
  const HClass& k() const { return k_; }
  const HClass& W() const { return w_; }
  const HClass& R() const { return r_; }
  const HClass& T() const { return t_; }
  const HClass& S() const { return s_; }

  /// "E(n)" when p = q = 1, otherwise "E(n;p,q)".
  std::string name() const;

 private:
  friend EllipticSurface make_surface(int n, int p, int q);
  EllipticSurface(int n, int p, int q);

  int n_, p_, q_;
  Int d_;
  bool spin_;
  LatticePtr lattice_;
  HClass k_, w_, r_, t_, s_;
};

/// BadParameters unless n >= 2, p, q >= 1 and gcd(p, q) = 1.
EllipticSurface make_surface(int n, int p, int q);

/// Parse "E(n)" or "E(n;p,q)".
EllipticSurface parse_surface(std::string_view spec);

/// K = d k.
HClass canonical_class(const EllipticSurface& x);

/// {r k : r = d mod 2, |r| <= d}, sorted by r.
std::vector<HClass> basic_classes(const EllipticSurface& x);

enum class Realizability { Realizable, NotRealizable, Unknown };
std::string_view to_string(Realizability r);

/// Whether an isometry is induced by an orientation-preserving
/// diffeomorphism. For K3 the image of Diff+ is exactly the spinor-norm-one
/// subgroup; for the other surfaces it contains the k-fixing spinor-norm-one
/// subgroup, so anything outside that is Unknown.
Realizability realizability(const EllipticSurface& x, const Isometry& m);

}  // namespace ellgenus
