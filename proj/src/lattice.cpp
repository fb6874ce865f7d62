#include "ellgenus/lattice.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace ellgenus {

const Matrix& e8_cartan() {
  static const Matrix c = [] {
    Matrix m(8, 8);
    for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
    for (std::size_t i = 0; i + 1 < 7; ++i) m(i, i + 1) = m(i + 1, i) = -1;
    m(4, 7) = m(7, 4) = -1;
    return m;
  }();
  return c;
}

const Matrix& Block::gram() const {
  static const Matrix h = Matrix::from_rows({{0, 1}, {1, 0}});
  static const Matrix h_odd = Matrix::from_rows({{0, 1}, {1, 1}});
  static const Matrix minus_e8 = -e8_cartan();
  switch (kind) {
    case BlockKind::Hyperbolic: return h;
    case BlockKind::HyperbolicOdd: return h_odd;
    case BlockKind::MinusE8: return minus_e8;
  }
  return h;
}

std::string_view Block::token() const {
  switch (kind) {
    case BlockKind::Hyperbolic: return "H";
    case BlockKind::HyperbolicOdd: return "H'";
    case BlockKind::MinusE8: return "E8-";
  }
  return "?";
}

namespace {

const Matrix& block_inverse(const Block& b) {
  static const Matrix h = Matrix::from_rows({{0, 1}, {1, 0}});
  static const Matrix h_odd = Matrix::from_rows({{-1, 1}, {1, 0}});
  static const Matrix minus_e8 = inverse_unimodular(-e8_cartan());
  switch (b.kind) {
    case BlockKind::Hyperbolic: return h;
    case BlockKind::HyperbolicOdd: return h_odd;
    case BlockKind::MinusE8: return minus_e8;
  }
  return h;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

Lattice::Lattice(std::vector<Block> blocks, LeadingNames naming)
    : blocks_(std::move(blocks)), naming_(naming) {
  if (blocks_.empty()) fail(ErrorKind::PreconditionFailed, "a lattice needs at least one block");
  if (naming_ == LeadingNames::Fibre && blocks_.front().kind == BlockKind::MinusE8)
    fail(ErrorKind::PreconditionFailed, "fibre naming needs a leading hyperbolic block");

  std::vector<Matrix> grams, inverses;
  for (const auto& b : blocks_) {
    grams.push_back(b.gram());
    inverses.push_back(block_inverse(b));
  }
  gram_ = block_diagonal(grams);
  gram_inverse_ = block_diagonal(inverses);

  std::size_t h_count = 0, odd_count = 0, e8_count = 0, off = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    offsets_.push_back(off);
    off += blocks_[i].rank();
    const bool fibre = i == 0 && (naming_ == LeadingNames::Fibre ||
                                  blocks_[i].kind == BlockKind::HyperbolicOdd);
    switch (blocks_[i].kind) {
      case BlockKind::Hyperbolic:
      case BlockKind::HyperbolicOdd:
        if (fibre) {
          names_.push_back("k");
          names_.push_back("W");
          ++odd_count;
        } else if (blocks_[i].kind == BlockKind::HyperbolicOdd) {
          ++odd_count;
          names_.push_back("k" + std::to_string(odd_count));
          names_.push_back("W" + std::to_string(odd_count));
        } else {
          ++h_count;
          names_.push_back("e" + std::to_string(h_count));
          names_.push_back("f" + std::to_string(h_count));
        }
        break;
      case BlockKind::MinusE8:
        ++e8_count;
        for (int j = 1; j <= 8; ++j) names_.push_back("x" + std::to_string(e8_count) + "_" + std::to_string(j));
        break;
    }
  }

  sig_ = signature(gram_);
  if (sig_.zero != 0) fail(ErrorKind::PreconditionFailed, "degenerate Gram matrix");
}

std::size_t Lattice::index_of(std::string_view name) const {
  if (name == "R") name = "e1";
  if (name == "T") name = "f1";
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return npos;
}

std::string Lattice::spec() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < blocks_.size();) {
    std::size_t j = i;
    while (j < blocks_.size() && blocks_[j] == blocks_[i]) ++j;
    if (i) out << ',';
    if (j - i > 1) out << (j - i);
    out << blocks_[i].token();
    i = j;
  }
  return out.str();
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

Int Lattice::pairing(std::span<const Int> x, std::span<const Int> y) const {
  if (x.size() != rank() || y.size() != rank()) fail(ErrorKind::PreconditionFailed, "coordinate length mismatch");
  Int s = 0;
  // Block-diagonal Gram: only pair coordinates within a block.
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const std::size_t o = offsets_[b], r = blocks_[b].rank();
    const Matrix& g = blocks_[b].gram();
    for (std::size_t i = 0; i < r; ++i) {
      if (x[o + i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j)
        if (g(i, j) != 0 && y[o + j] != 0) add_mul(s, mul(x[o + i], g(i, j)), y[o + j]);
    }
  }
  return s;
}

LatticePtr make_lattice(std::vector<Block> blocks, LeadingNames naming) {
  return std::make_shared<const Lattice>(std::move(blocks), naming);
}

std::vector<Block> parse_blocks(std::string_view spec) {
  std::vector<Block> blocks;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string token = trim(spec.substr(start, comma - start));
    start = comma + 1;

    std::size_t digits = 0;
    while (digits < token.size() && std::isdigit(static_cast<unsigned char>(token[digits]))) ++digits;
    std::size_t count = 1;
    if (digits > 0) {
      auto [p, ec] = std::from_chars(token.data(), token.data() + digits, count);
      if (ec != std::errc() || count == 0 || count > 1000)
        fail(ErrorKind::Parse, "bad repetition count in lattice token '" + token + "'");
    }
    const std::string body = token.substr(digits);
    Block b{};
    if (body == "H") b.kind = BlockKind::Hyperbolic;
    else if (body == "H'") b.kind = BlockKind::HyperbolicOdd;
    else if (body == "E8-") b.kind = BlockKind::MinusE8;
    else fail(ErrorKind::Parse, "unknown lattice token '" + token + "'");
    blocks.insert(blocks.end(), count, b);
    if (comma == spec.size()) break;
  }
  return blocks;
}

HClass::HClass(LatticePtr lattice, Vector coords) : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_) fail(ErrorKind::PreconditionFailed, "class without a lattice");
  if (coords_.size() != lattice_->rank())
    fail(ErrorKind::PreconditionFailed, "class has " + std::to_string(coords_.size()) +
                                            " coordinates, lattice rank is " + std::to_string(lattice_->rank()));
}

HClass HClass::zero(LatticePtr lattice) {
  const std::size_t n = lattice->rank();
  return HClass(std::move(lattice), Vector(n, 0));
}

HClass HClass::basis(LatticePtr lattice, std::size_t i) {
  Vector v(lattice->rank(), 0);
  v.at(i) = 1;
  return HClass(std::move(lattice), std::move(v));
}

HClass HClass::named(LatticePtr lattice, std::string_view name) {
  const std::size_t i = lattice->index_of(name);
  if (i == Lattice::npos) fail(ErrorKind::Parse, "unknown basis name '" + std::string(name) + "'");
  return basis(std::move(lattice), i);
}

bool HClass::is_zero() const {
  for (Int c : coords_)
    if (c != 0) return false;
  return true;
}

namespace {
void require_same(const HClass& a, const HClass& b) {
  if (!a.lattice()->same_form(*b.lattice())) fail(ErrorKind::LatticeMismatch, "classes live on different lattices");
}
}  // namespace

HClass HClass::operator+(const HClass& o) const {
  require_same(*this, o);
  Vector v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = add(coords_[i], o.coords_[i]);
  return HClass(lattice_, std::move(v));
}

HClass HClass::operator-(const HClass& o) const {
  require_same(*this, o);
  Vector v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = sub(coords_[i], o.coords_[i]);
  return HClass(lattice_, std::move(v));
}

HClass HClass::operator-() const { return Int{-1} * *this; }

HClass operator*(Int r, const HClass& x) {
  Vector v(x.coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mul(r, x.coords_[i]);
  return HClass(x.lattice_, std::move(v));
}

bool operator==(const HClass& a, const HClass& b) {
  return a.lattice_->same_form(*b.lattice_) && a.coords_ == b.coords_;
}

Int pairing(const HClass& x, const HClass& y) {
  require_same(x, y);
  return x.lattice()->pairing(x.coords(), y.coords());
}

Int square(const HClass& x) { return pairing(x, x); }

Int divisibility(const HClass& x) { return content(x.coords()); }

bool is_characteristic(const HClass& x) {
  const Lattice& l = *x.lattice();
  const Vector gx = l.gram() * std::span<const Int>(x.coords());
  for (std::size_t i = 0; i < l.rank(); ++i)
    if ((gx[i] - l.gram()(i, i)) % 2 != 0) return false;
  return true;
}

std::string to_string(const HClass& x) {
  std::ostringstream out;
  bool first = true;
  const auto& names = x.lattice()->basis_names();
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    const Int c = x[i];
    if (c == 0) continue;
    if (c < 0) out << '-';
    else if (!first) out << '+';
    if (c != 1 && c != -1) out << (c < 0 ? -c : c);
    out << names[i];
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace ellgenus
