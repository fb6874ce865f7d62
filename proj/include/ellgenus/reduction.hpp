#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ellgenus/isometry.hpp"
#include "ellgenus/lattice.hpp"
#include "ellgenus/surface.hpp"

namespace ellgenus {

/// A class, its canonical representative and a certificate mapping one to
/// the other (certificate.apply(input) == canonical).
struct ReductionResult {
  HClass input;
  HClass canonical;
  Isometry certificate;
  int spinor;
  /// Whether the certificate fixes k and W; false on lattices without them.
  bool fixes_k;
  bool fixes_W;
};

/// Builds a result after checking that the certificate maps input to
/// canonical and recording its spinor norm and whether it fixes k and W.
ReductionResult make_reduction_result(HClass input, HClass canonical, Isometry certificate);

/// Map a non-zero class x, supported on the acting blocks, to d (e + a f) in
/// the target hyperbolic block where d = divisibility(x) and
/// square(x) = 2 d^2 a. The certificate is a product of Eichler
/// transvections and -id on two hyperbolic blocks, so its spinor norm is +1;
/// it is the identity off the acting blocks. Entries grow polynomially with
/// the coordinates of x; past the int64 range the reduction raises Overflow.
///
/// `acting_blocks` defaults to every H and -E8 block. The acting part must
/// be even and contain at least two H blocks (NeedTwoHyperbolicPlanes).
ReductionResult reduce_even(const HClass& x, std::size_t target_block,
                            std::span<const std::size_t> acting_blocks = {});

/// Reduce a class on the model lattice of an elliptic surface.
///
/// K3: the whole lattice acts and the canonical form is d (R + a T).
/// Otherwise A must satisfy k.A = 0, so A = a k + B with B in the
/// l H + m (-E8) part; B is reduced by an isometry fixing k and W to
/// gamma R + delta T with 2 gamma delta = B.B and gcd(gamma, delta) = div(B):
/// (gamma, delta) = (d s, d) for s = B.B / (2 d^2) != 0 and (d, 0) when
/// B.B = 0.
ReductionResult reduce_in_elliptic(const EllipticSurface& x, const HClass& a);

/// The isometry k -> k, W -> W + alpha R, R -> R, S -> S - alpha k, identity
/// on every other summand.
Isometry phi_isometry(const EllipticSurface& x, Int alpha);

/// Map a class A with k.A = 0 and A.A = -2 to the vanishing sphere S by a
/// k-fixing, spinor-norm-one isometry.
ReductionResult sphere_reduction(const EllipticSurface& x, const HClass& a);

}  // namespace ellgenus
