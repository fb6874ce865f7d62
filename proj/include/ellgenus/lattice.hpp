#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ellgenus/arith.hpp"
#include "ellgenus/matrix.hpp"

namespace ellgenus {

enum class BlockKind { Hyperbolic, HyperbolicOdd, MinusE8 };

/// One orthogonal summand: H = [[0,1],[1,0]], H' = [[0,1],[1,1]] or -E8.
struct Block {
  BlockKind kind;

  std::size_t rank() const { return kind == BlockKind::MinusE8 ? 8 : 2; }
  const Matrix& gram() const;
  /// Spec-string token: "H", "H'" or "E8-".
  std::string_view token() const;

  friend bool operator==(const Block&, const Block&) = default;
};

/// The E8 Cartan matrix: chain 1-2-3-4-5-6-7 with node 8 attached to node 5.
const Matrix& e8_cartan();

/// How the leading hyperbolic summand is named. `Fibre` names it (k, W) even
/// when it is an even H; elliptic model lattices use this.
enum class LeadingNames { Auto, Fibre };

/// A based unimodular lattice presented as an orthogonal sum of blocks.
/// Immutable after construction.
class Lattice {
 public:
  Lattice(std::vector<Block> blocks, LeadingNames naming = LeadingNames::Auto);

  const std::vector<Block>& blocks() const { return blocks_; }
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inverse_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  std::size_t rank() const { return gram_.rows(); }
  std::size_t sig_pos() const { return sig_.positive; }
  std::size_t sig_neg() const { return sig_.negative; }
  LeadingNames naming() const { return naming_; }

  /// First coordinate index of block `b`.
  std::size_t block_offset(std::size_t b) const { return offsets_.at(b); }
  /// Index of a basis name (aliases R, T for e1, f1 are accepted); npos if
  /// unknown.
  std::size_t index_of(std::string_view name) const;

  /// Canonical spec string, e.g. "H',4H,3E8-".
  std::string spec() const;

  bool is_even() const;

  Int pairing(std::span<const Int> x, std::span<const Int> y) const;

  /// Same Gram matrix and block structure (naming is presentation only).
  bool same_form(const Lattice& other) const { return blocks_ == other.blocks_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Block> blocks_;
  LeadingNames naming_;
  Matrix gram_;
  Matrix gram_inverse_;
  std::vector<std::string> names_;
  std::vector<std::size_t> offsets_;
  Signature sig_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

LatticePtr make_lattice(std::vector<Block> blocks, LeadingNames naming = LeadingNames::Auto);

/// Parse a comma-separated block list such as "H',2H,3E8-".
std::vector<Block> parse_blocks(std::string_view spec);

inline LatticePtr make_lattice(std::string_view spec, LeadingNames naming = LeadingNames::Auto) {
  return make_lattice(parse_blocks(spec), naming);
}

/// An integral class over a lattice's basis.
class HClass {
 public:
  HClass(LatticePtr lattice, Vector coords);
  static HClass zero(LatticePtr lattice);
  static HClass basis(LatticePtr lattice, std::size_t i);
  static HClass named(LatticePtr lattice, std::string_view name);

  const LatticePtr& lattice() const { return lattice_; }
  const Vector& coords() const { return coords_; }
  Int operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  HClass operator+(const HClass& o) const;
  HClass operator-(const HClass& o) const;
  HClass operator-() const;
  friend HClass operator*(Int r, const HClass& x);

  /// Coordinate equality over the same form.
  friend bool operator==(const HClass& a, const HClass& b);

 private:
  LatticePtr lattice_;
  Vector coords_;
};

Int pairing(const HClass& x, const HClass& y);
Int square(const HClass& x);
/// gcd of the coordinates; 0 for the zero class.
Int divisibility(const HClass& x);
inline bool is_primitive(const HClass& x) { return divisibility(x) == 1; }
/// x.y == y.y (mod 2) for every basis vector y.
bool is_characteristic(const HClass& x);

/// Human-readable sparse form, e.g. "4k+2e1-x1_3".
std::string to_string(const HClass& x);

}  // namespace ellgenus
