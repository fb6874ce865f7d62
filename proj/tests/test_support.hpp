#pragma once

#include <random>
#include <vector>

#include "ellgenus/isometry.hpp"
#include "ellgenus/lattice.hpp"

namespace ellgenus::testing {

using Rng = std::mt19937_64;

inline Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

/// Random class with coordinates in [-bound, bound] on the given blocks
/// (all blocks when empty).
inline HClass random_class(Rng& rng, const LatticePtr& l, Int bound, const std::vector<std::size_t>& blocks = {}) {
  Vector v(l->rank(), 0);
  for (std::size_t b = 0; b < l->blocks().size(); ++b) {
    if (!blocks.empty() && std::find(blocks.begin(), blocks.end(), b) == blocks.end()) continue;
    for (std::size_t i = 0; i < l->blocks()[b].rank(); ++i) v[l->block_offset(b) + i] = uniform(rng, -bound, bound);
  }
  return HClass(l, std::move(v));
}

inline std::vector<std::size_t> blocks_of(const LatticePtr& l, BlockKind kind) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < l->blocks().size(); ++b)
    if (l->blocks()[b].kind == kind) out.push_back(b);
  return out;
}

/// Random isometry generator of known kind: an Eichler transvection, a
/// reflection in a root or in e+f, or -id on one block. Everything is
/// assembled from the defining formulas, not from the reduction code.
inline Isometry random_generator(Rng& rng, const LatticePtr& l, bool fix_leading = false) {
  auto hs = blocks_of(l, BlockKind::Hyperbolic);
  const auto e8 = blocks_of(l, BlockKind::MinusE8);
  if (fix_leading && !hs.empty() && hs.front() == 0) hs.erase(hs.begin());
  const std::size_t first = fix_leading ? 1 : 0;
  auto pick = [&](const auto& v) { return v[static_cast<std::size_t>(uniform(rng, 0, Int(v.size()) - 1))]; };

  switch (uniform(rng, 0, 3)) {
    case 0: {
      if (hs.empty()) break;
      // u isotropic basis vector of an H block, v small and orthogonal to u
      // with no component on odd blocks (keeps v.v even).
      const std::size_t hb = pick(hs);
      const std::size_t ui = l->block_offset(hb) + static_cast<std::size_t>(uniform(rng, 0, 1));
      const std::size_t partner = (ui == l->block_offset(hb)) ? ui + 1 : ui - 1;
      Vector v(l->rank(), 0);
      for (std::size_t b = first; b < l->blocks().size(); ++b) {
        if (l->blocks()[b].kind == BlockKind::HyperbolicOdd) continue;
        for (std::size_t i = 0; i < l->blocks()[b].rank(); ++i)
          if (uniform(rng, 0, 2) == 0) v[l->block_offset(b) + i] = uniform(rng, -1, 1);
      }
      v[partner] = 0;
      return eichler_transvection(HClass::basis(l, ui), HClass(l, v));
    }
    case 1: {
      if (e8.empty()) break;
      const std::size_t b = pick(e8);
      return reflection(HClass::basis(l, l->block_offset(b) + static_cast<std::size_t>(uniform(rng, 0, 7))));
    }
    case 2: {
      if (hs.empty()) break;
      const std::size_t b = pick(hs);
      Vector v(l->rank(), 0);
      v[l->block_offset(b)] = 1;
      v[l->block_offset(b) + 1] = uniform(rng, 0, 1) ? 1 : -1;  // e+f (square 2) or e-f (square -2)
      return reflection(HClass(l, v));
    }
    default: {
      const std::size_t b = static_cast<std::size_t>(uniform(rng, Int(first), Int(l->blocks().size()) - 1));
      const std::size_t bs[] = {b};
      return negate_blocks(l, bs);
    }
  }
  return Isometry::identity(l);
}

inline Isometry random_product(Rng& rng, const LatticePtr& l, int length, bool fix_leading = false) {
  Isometry m = Isometry::identity(l);
  for (int i = 0; i < length; ++i) m = compose(random_generator(rng, l, fix_leading), m);
  return m;
}

}  // namespace ellgenus::testing
