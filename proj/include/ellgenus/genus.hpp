#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ellgenus/reduction.hpp"
#include "ellgenus/surface.hpp"

namespace ellgenus {

struct AdjunctionBound {
  /// max(0, (A.A + |K.A|) / 2 + 1)
  Int bound;
  /// Set when A.A < 0: the inequality then only constrains surfaces of
  /// positive genus, so a sphere is not excluded.
  bool positive_genus_only;
};

AdjunctionBound adjunction_bound(const EllipticSurface& x, const HClass& a);

enum class VerdictStatus { Exact, LowerBoundOnly };

/// Which result decided the verdict.
enum class GenusRule {
  CorK3,          // K3: every class of square 2c-2 >= -2 has genus c
  CorOrthKV,      // classes orthogonal to k and W live in a nucleus N(2)
  PropMinus2,     // square -2 orthogonal to K: the standard sphere
  ThmMainEn,      // E(n), orthogonal to K, square 2c-2 >= 0: genus c
  AdjunctionOnly,
};

std::string_view to_string(VerdictStatus s);
std::string_view to_string(GenusRule r);

struct GenusVerdict {
  Int square;
  Int lower_bound;
  std::optional<Int> realized;
  VerdictStatus status;
  GenusRule rule;
  std::optional<std::string> negative_square_note;
  std::optional<ReductionResult> certificate;
};

/// Minimal genus of an embedded surface representing the non-zero class a.
GenusVerdict min_genus(const EllipticSurface& x, const HClass& a);

/// Genus of the representative of r h built from a genus-g representative of
/// h with h.h = sq, using a(rh) = r a(h) where a = 2g - 2 - square.
Int km_scaled_genus(Int g, Int sq, Int r);

/// Minimal genus of gamma F + delta S in the nucleus N(2) (F.F = 0,
/// S.S = -2, F.S = 1).
GenusVerdict nucleus_min_genus(Int gamma, Int delta);

}  // namespace ellgenus
