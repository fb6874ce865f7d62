#include "ellgenus/genus.hpp"

#include <stdexcept>

namespace ellgenus {

std::string_view to_string(VerdictStatus s) {
  return s == VerdictStatus::Exact ? "EXACT" : "LOWER_BOUND_ONLY";
}

std::string_view to_string(GenusRule r) {
  switch (r) {
    case GenusRule::CorK3: return "COR_K3";
    case GenusRule::CorOrthKV: return "COR_ORTH_KV";
    case GenusRule::PropMinus2: return "PROP_MINUS2";
    case GenusRule::ThmMainEn: return "THM_MAIN_EN";
    case GenusRule::AdjunctionOnly: return "ADJUNCTION_ONLY";
  }
  return "?";
}

AdjunctionBound adjunction_bound(const EllipticSurface& x, const HClass& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroClass, "the adjunction inequality needs a non-zero class");
  const Int sq = square(a);
  const Int ka = abs_checked(pairing(canonical_class(x), a));
  // K is characteristic, so sq + |K.a| is even.
  const Int twice = add(sq, ka);
  if (twice % 2 != 0) throw std::logic_error("A.A + |K.A| is odd; K is not characteristic");
  const Int bound = std::max<Int>(0, twice / 2 + 1);
  return {bound, sq < 0};
}

namespace {

const char* kNegativeSquareNote =
    "A.A < 0: adjunction only bounds surfaces of positive genus; a sphere is not excluded";

GenusVerdict exact(Int sq, const AdjunctionBound& adj, Int genus, GenusRule rule,
                   std::optional<ReductionResult> cert) {
  if (genus != adj.bound)
    throw std::logic_error("exact genus " + std::to_string(genus) + " differs from the adjunction bound " +
                           std::to_string(adj.bound));
  return GenusVerdict{sq, adj.bound, genus, VerdictStatus::Exact, rule, std::nullopt, std::move(cert)};
}

}  // namespace

GenusVerdict min_genus(const EllipticSurface& x, const HClass& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroClass, "the zero class has no minimal genus");
  const Int sq = square(a);
  const AdjunctionBound adj = adjunction_bound(x, a);
  const Int ka = pairing(x.k(), a);
  const bool k_orth = ka == 0;
  if (k_orth && sq % 2 != 0) throw std::logic_error("class orthogonal to K with odd square");

  if (x.is_k3() && sq >= -2) return exact(sq, adj, sq / 2 + 1, GenusRule::CorK3, reduce_in_elliptic(x, a));
  if (k_orth && sq == -2) return exact(sq, adj, 0, GenusRule::PropMinus2, sphere_reduction(x, a));
  if (k_orth && sq >= 0 && x.no_multiple_fibres())
    return exact(sq, adj, sq / 2 + 1, GenusRule::ThmMainEn, reduce_in_elliptic(x, a));
  if (k_orth && pairing(x.W(), a) == 0 && sq >= 0)
    return exact(sq, adj, sq / 2 + 1, GenusRule::CorOrthKV, reduce_in_elliptic(x, a));

  GenusVerdict v{sq, adj.bound, std::nullopt, VerdictStatus::LowerBoundOnly, GenusRule::AdjunctionOnly,
                 std::nullopt, std::nullopt};
  if (adj.positive_genus_only) v.negative_square_note = kNegativeSquareNote;
  return v;
}

Int km_scaled_genus(Int g, Int sq, Int r) {
  if (r <= 0) fail(ErrorKind::PreconditionFailed, "r must be positive");
  if (sq < 0) fail(ErrorKind::PreconditionFailed, "h.h must be non-negative");
  if (g < 0) fail(ErrorKind::PreconditionFailed, "genus must be non-negative");
  if (sq == 0 && g < 1) fail(ErrorKind::PreconditionFailed, "a square-zero class needs genus >= 1");
  const Int a = sub(sub(mul(2, g), 2), sq);
  const Int twice = add(add(mul(r, a), mul(mul(r, r), sq)), 2);
  if (twice % 2 != 0) throw std::logic_error("non-integral scaled genus");
  return twice / 2;
}

GenusVerdict nucleus_min_genus(Int gamma, Int delta) {
  if (gamma == 0 && delta == 0) fail(ErrorKind::ZeroClass, "the zero class has no minimal genus");
  const Int sq = sub(mul(mul(2, gamma), delta), mul(mul(2, delta), delta));
  // N(2) sits in K3, where K = 0: the bound is max(0, sq/2 + 1).
  const Int bound = std::max<Int>(0, sq / 2 + 1);
  if (sq >= -2) return GenusVerdict{sq, bound, sq / 2 + 1, VerdictStatus::Exact, GenusRule::CorK3, std::nullopt, std::nullopt};
  return GenusVerdict{sq, bound, std::nullopt, VerdictStatus::LowerBoundOnly, GenusRule::AdjunctionOnly,
                      kNegativeSquareNote, std::nullopt};
}

}  // namespace ellgenus
