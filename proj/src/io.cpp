#include "ellgenus/io.hpp"

#include <cctype>
#include <charconv>
#include <set>

namespace ellgenus {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_coeff(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    fail(ErrorKind::Parse, "bad integer '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

LatticePtr resolve_lattice(const Json& j, const LatticePtr& given) {
  if (!j.contains("lattice")) fail(ErrorKind::Parse, "missing \"lattice\" field");
  const std::string spec = j.at("lattice").get<std::string>();
  if (!given) return make_lattice(spec);
  const Lattice parsed(parse_blocks(spec));
  if (!parsed.same_form(*given))
    fail(ErrorKind::LatticeMismatch, "JSON lattice '" + spec + "' differs from '" + given->spec() + "'");
  return given;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "expected an array of integers");
  Vector v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) fail(ErrorKind::Parse, "non-integer entry " + e.dump());
    v.push_back(e.get<Int>());
  }
  return v;
}

}  // namespace

HClass parse_class(const LatticePtr& lattice, std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) fail(ErrorKind::Parse, "empty class");
  if (t.find('=') == std::string_view::npos) {
    if (t.front() == '[') {
      if (t.back() != ']') fail(ErrorKind::Parse, "unterminated '[' in class '" + std::string(text) + "'");
      t = t.substr(1, t.size() - 2);
    }
    Vector v;
    for (auto tok : split(t, ',')) v.push_back(parse_coeff(tok));
    if (v.size() != lattice->rank())
      fail(ErrorKind::Parse, "class has " + std::to_string(v.size()) + " coordinates, lattice rank is " +
                                 std::to_string(lattice->rank()));
    return HClass(lattice, std::move(v));
  }

  Vector v(lattice->rank(), 0);
  std::set<std::string> seen;
  for (auto tok : split(t, ',')) {
    const std::size_t eq = tok.find('=');
    if (eq == std::string_view::npos) fail(ErrorKind::Parse, "expected name=coeff, got '" + std::string(tok) + "'");
    const std::string name(trim(tok.substr(0, eq)));
    const Int c = parse_coeff(tok.substr(eq + 1));
    if (!seen.insert(name).second) fail(ErrorKind::Parse, "basis name '" + name + "' given twice");
    if (name == "S") {
      const std::size_t e = lattice->index_of("e1"), f = lattice->index_of("f1");
      if (e == Lattice::npos) fail(ErrorKind::Parse, "unknown basis name 'S' (no e1/f1 in this lattice)");
      v[e] = sub(v[e], c);
      v[f] = add(v[f], c);
      continue;
    }
    const std::size_t i = lattice->index_of(name);
    if (i == Lattice::npos) fail(ErrorKind::Parse, "unknown basis name '" + name + "'");
    v[i] = add(v[i], c);
  }
  if ((seen.count("R") && seen.count("e1")) || (seen.count("T") && seen.count("f1")))
    fail(ErrorKind::Parse, "R/T given together with e1/f1");
  return HClass(lattice, std::move(v));
}

Matrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? j.at("matrix") : j;
  if (!rows.is_array() || rows.empty()) fail(ErrorKind::Parse, "matrix must be a non-empty array of rows");
  std::vector<std::vector<Int>> r;
  for (const auto& row : rows) {
    r.push_back(vector_from_json(row));
    if (r.back().size() != r.front().size()) fail(ErrorKind::Parse, "ragged matrix rows");
  }
  return Matrix::from_rows(r);
}

Json to_json(const Lattice& l) {
  Json blocks = Json::array();
  for (const auto& b : l.blocks()) blocks.push_back(std::string(b.token()));
  return Json{{"spec", l.spec()},
              {"blocks", blocks},
              {"gram", l.gram().to_rows()},
              {"basis_names", l.basis_names()},
              {"signature", {l.sig_pos(), l.sig_neg()}}};
}

LatticePtr lattice_from_json(const Json& j) {
  const auto names = j.at("basis_names").get<std::vector<std::string>>();
  std::vector<Block> blocks;
  for (const auto& t : j.at("blocks")) {
    const auto parsed = parse_blocks(t.get<std::string>());
    blocks.insert(blocks.end(), parsed.begin(), parsed.end());
  }
  const bool fibre = !names.empty() && names.front() == "k";
  LatticePtr l = make_lattice(std::move(blocks), fibre ? LeadingNames::Fibre : LeadingNames::Auto);
  if (l->basis_names() != names) fail(ErrorKind::Parse, "basis names do not match the block list");
  if (j.contains("gram") && Matrix::from_rows(j.at("gram").get<std::vector<std::vector<Int>>>()) != l->gram())
    fail(ErrorKind::Parse, "Gram matrix does not match the block list");
  return l;
}

Json to_json(const HClass& x) { return Json{{"lattice", x.lattice()->spec()}, {"coords", x.coords()}}; }

HClass class_from_json(const Json& j, const LatticePtr& lattice) {
  LatticePtr l = resolve_lattice(j, lattice);
  return HClass(l, vector_from_json(j.at("coords")));
}

Json to_json(const Isometry& m) {
  return Json{{"lattice", m.lattice()->spec()}, {"matrix", m.matrix().to_rows()}};
}

Isometry isometry_from_json(const Json& j, const LatticePtr& lattice) {
  LatticePtr l = resolve_lattice(j, lattice);
  return verify_isometry(l, matrix_from_json(j.at("matrix")));
}

Json to_json(const ReductionResult& r) {
  return Json{{"input", to_json(r.input)},
              {"canonical", to_json(r.canonical)},
              {"certificate", to_json(r.certificate)},
              {"spinor", r.spinor},
              {"fixes_k", r.fixes_k},
              {"fixes_W", r.fixes_W}};
}

ReductionResult reduction_from_json(const Json& j, const LatticePtr& lattice) {
  LatticePtr l = lattice ? lattice : make_lattice(j.at("input").at("lattice").get<std::string>());
  ReductionResult r = make_reduction_result(class_from_json(j.at("input"), l), class_from_json(j.at("canonical"), l),
                                            isometry_from_json(j.at("certificate"), l));
  if (r.spinor != j.at("spinor").get<int>() || r.fixes_k != j.at("fixes_k").get<bool>() ||
      r.fixes_W != j.at("fixes_W").get<bool>())
    fail(ErrorKind::Parse, "recorded spinor/fixes fields disagree with the certificate");
  return r;
}

Json to_json(const GenusVerdict& v) {
  Json j{{"square", v.square},
         {"lower_bound", v.lower_bound},
         {"realized", v.realized ? Json(*v.realized) : Json(nullptr)},
         {"status", to_string(v.status)},
         {"rule", to_string(v.rule)},
         {"negative_square_note", v.negative_square_note ? Json(*v.negative_square_note) : Json(nullptr)},
         {"certificate", v.certificate ? to_json(*v.certificate) : Json(nullptr)}};
  return j;
}

Json to_json(const OrbitReport& r) {
  Json j{{"lattice", r.lattice},
         {"square", r.square},
         {"divisibility", r.divisibility},
         {"coord_bound", r.coord_bound},
         {"vectors_found", r.vectors_found},
         {"orbit_count_full", r.orbit_count_full},
         {"orbit_count_spinor1", r.orbit_count_spinor1},
         {"states_visited", r.states_visited}};
  if (r.witness_map) {
    Json w = Json::array();
    for (const auto& e : *r.witness_map)
      w.push_back(Json{{"vector", e.vector.coords()},
                       {"canonical", e.canonical.coords()},
                       {"certificate", e.certificate.matrix().to_rows()}});
    j["witness_map"] = std::move(w);
  } else {
    j["witness_map"] = nullptr;
  }
  return j;
}

Json surface_info_json(const EllipticSurface& x) {
  Json basic = Json::array();
  for (Int r = -x.d(); r <= x.d(); r += 2) basic.push_back(r);
  return Json{{"surface", x.name()},
              {"n", x.n()},
              {"p", x.p()},
              {"q", x.q()},
              {"d", x.d()},
              {"spin", x.spin()},
              {"k3", x.is_k3()},
              {"l", x.l()},
              {"m", x.m()},
              {"lattice", x.lattice()->spec()},
              {"rank", x.lattice()->rank()},
              {"b2_plus", x.lattice()->sig_pos()},
              {"b2_minus", x.lattice()->sig_neg()},
              {"canonical_class", to_json(canonical_class(x))},
              {"basic_class_multiples", basic}};
}

}  // namespace ellgenus
