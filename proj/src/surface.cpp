#include "ellgenus/surface.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ellgenus {

std::string EllipticSurface::name() const {
  std::ostringstream out;
  out << "E(" << n_;
  if (!no_multiple_fibres()) out << ';' << p_ << ',' << q_;
  out << ')';
  return out.str();
}

namespace {

LatticePtr model_lattice(int n, bool spin) {
  std::vector<Block> blocks;
  blocks.push_back({spin ? BlockKind::Hyperbolic : BlockKind::HyperbolicOdd});
  blocks.insert(blocks.end(), static_cast<std::size_t>(2 * n - 2), Block{BlockKind::Hyperbolic});
  blocks.insert(blocks.end(), static_cast<std::size_t>(n), Block{BlockKind::MinusE8});
  return make_lattice(std::move(blocks), LeadingNames::Fibre);
}

}  // namespace

EllipticSurface::EllipticSurface(int n, int p, int q)
    : n_(n),
      p_(p),
      q_(q),
      d_(sub(sub(mul(mul(n, p), q), p), q)),
      spin_(d_ % 2 == 0),
      lattice_(model_lattice(n, spin_)),
      k_(HClass::named(lattice_, "k")),
      w_(HClass::named(lattice_, "W")),
      r_(HClass::named(lattice_, "e1")),
      t_(HClass::named(lattice_, "f1")),
      s_(t_ - r_) {}

EllipticSurface make_surface(int n, int p, int q) {
  if (n < 2) fail(ErrorKind::BadParameters, "n must be at least 2, got " + std::to_string(n));
  if (n > 64) fail(ErrorKind::BadParameters, "n = " + std::to_string(n) + " is beyond the supported range");
  if (p < 1 || q < 1) fail(ErrorKind::BadParameters, "multiplicities must be positive");
  if (std::gcd(p, q) != 1) fail(ErrorKind::BadParameters, "multiplicities must be coprime");
  return EllipticSurface(n, p, q);
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data() + a, s.data() + b, v);
  if (a == b || ec != std::errc() || ptr != s.data() + b)
    fail(ErrorKind::Parse, "bad integer '" + std::string(s) + "' in surface spec '" + std::string(whole) + "'");
  return v;
}

}  // namespace

EllipticSurface parse_surface(std::string_view spec) {
  std::string_view s = spec;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() < 4 || s.substr(0, 2) != "E(" || s.back() != ')')
    fail(ErrorKind::Parse, "expected 'E(n)' or 'E(n;p,q)', got '" + std::string(spec) + "'");
  const std::string_view inner = s.substr(2, s.size() - 3);
  const std::size_t semi = inner.find(';');
  if (semi == std::string_view::npos) return make_surface(parse_int(inner, spec), 1, 1);
  const std::string_view pq = inner.substr(semi + 1);
  const std::size_t comma = pq.find(',');
  if (comma == std::string_view::npos)
    fail(ErrorKind::Parse, "expected 'p,q' after ';' in '" + std::string(spec) + "'");
  return make_surface(parse_int(inner.substr(0, semi), spec), parse_int(pq.substr(0, comma), spec),
                      parse_int(pq.substr(comma + 1), spec));
}

HClass canonical_class(const EllipticSurface& x) { return x.d() * x.k(); }

std::vector<HClass> basic_classes(const EllipticSurface& x) {
  std::vector<HClass> out;
  for (Int r = -x.d(); r <= x.d(); r += 2) out.push_back(r * x.k());
  return out;
}

std::string_view to_string(Realizability r) {
  switch (r) {
    case Realizability::Realizable: return "REALIZABLE";
    case Realizability::NotRealizable: return "NOT_REALIZABLE";
    case Realizability::Unknown: return "UNKNOWN";
  }
  return "?";
}

Realizability realizability(const EllipticSurface& x, const Isometry& m) {
  const int nu = spinor_norm(m);
  if (x.is_k3()) return nu == 1 ? Realizability::Realizable : Realizability::NotRealizable;
  return nu == 1 && fixes_class(m, x.k()) ? Realizability::Realizable : Realizability::Unknown;
}

}  // namespace ellgenus
