#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ellgenus/genus.hpp"
#include "ellgenus/io.hpp"
#include "ellgenus/oracle.hpp"
#include "ellgenus/reduction.hpp"
#include "ellgenus/surface.hpp"

namespace ellgenus::cli {

namespace {

struct Options {
  std::string positional;
  std::string surface;
  std::string lattice;
  std::string klass;
  std::string matrix;
  bool json = false;
  std::optional<std::size_t> budget;
  Int bound = 2;
  int target = 1;
  Int square = 0;
  Int div = 1;
  std::string from, to;
  bool witness = false;
};

std::string sign_string(int s) { return s > 0 ? "+1" : "-1"; }

SearchBudget budget_of(const Options& o) {
  SearchBudget b = budget_from_env();
  if (o.budget) b.max_states = *o.budget;
  return b;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open matrix file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, "'" + path + "' is not valid JSON: " + e.what());
  }
}

// The lattice named by --surface or --lattice.
struct Target {
  std::optional<EllipticSurface> surface;
  LatticePtr lattice;
};

Target resolve(const Options& o) {
  if (!o.surface.empty() && !o.lattice.empty()) fail(ErrorKind::Parse, "give either --surface or --lattice, not both");
  if (!o.surface.empty()) {
    EllipticSurface x = parse_surface(o.surface);
    LatticePtr l = x.lattice();
    return Target{std::move(x), std::move(l)};
  }
  if (!o.lattice.empty()) return Target{std::nullopt, make_lattice(o.lattice)};
  fail(ErrorKind::Parse, "--surface or --lattice is required");
}

HClass require_class(const Options& o, const LatticePtr& l) {
  if (o.klass.empty()) fail(ErrorKind::Parse, "--class is required");
  return parse_class(l, o.klass);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

EllipticSurface surface_arg(const Options& o) {
  if (o.surface.empty() && o.positional.empty()) fail(ErrorKind::Parse, "a surface is required");
  return parse_surface(o.surface.empty() ? o.positional : o.surface);
}

void cmd_info(const Options& o, std::ostream& out) {
  const EllipticSurface x = surface_arg(o);
  if (o.json) return emit(out, surface_info_json(x));
  out << "surface: " << x.name() << '\n'
      << "n: " << x.n() << "\np: " << x.p() << "\nq: " << x.q() << '\n'
      << "d: " << x.d() << '\n'
      << "spin: " << (x.spin() ? "true" : "false") << '\n'
      << "k3: " << (x.is_k3() ? "true" : "false") << '\n'
      << "lattice: " << x.lattice()->spec() << '\n'
      << "rank: " << x.lattice()->rank() << '\n'
      << "b2+: " << x.lattice()->sig_pos() << '\n'
      << "b2-: " << x.lattice()->sig_neg() << '\n'
      << "K: " << to_string(canonical_class(x)) << '\n';
  const auto basic = basic_classes(x);
  out << "basic classes (" << basic.size() << "):";
  for (const auto& b : basic) out << ' ' << to_string(b);
  out << '\n';
}

void cmd_basic(const Options& o, std::ostream& out) {
  const EllipticSurface x = surface_arg(o);
  const auto basic = basic_classes(x);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& b : basic) arr.push_back(to_json(b));
    return emit(out, Json{{"surface", x.name()}, {"basic_classes", arr}});
  }
  for (const auto& b : basic) out << to_string(b) << '\n';
}

void cmd_class(const Options& o, std::ostream& out) {
  const Target t = resolve(o);
  const HClass a = require_class(o, t.lattice);
  Json j{{"class", to_json(a)},
         {"square", square(a)},
         {"divisibility", divisibility(a)},
         {"primitive", is_primitive(a)},
         {"characteristic", is_characteristic(a)}};
  if (t.surface) {
    j["k_dot"] = pairing(t.surface->k(), a);
    j["K_dot"] = pairing(canonical_class(*t.surface), a);
  }
  if (o.json) return emit(out, j);
  out << "class: " << to_string(a) << '\n'
      << "square: " << square(a) << '\n'
      << "divisibility: " << divisibility(a) << '\n'
      << "primitive: " << (is_primitive(a) ? "true" : "false") << '\n'
      << "characteristic: " << (is_characteristic(a) ? "true" : "false") << '\n';
  if (t.surface) out << "k.A: " << j["k_dot"].get<Int>() << '\n' << "K.A: " << j["K_dot"].get<Int>() << '\n';
}

void print_reduction(const ReductionResult& r, std::ostream& out) {
  out << "input: " << to_string(r.input) << '\n'
      << "canonical: " << to_string(r.canonical) << '\n'
      << "spinor: " << sign_string(r.spinor) << '\n'
      << "fixes_k: " << (r.fixes_k ? "true" : "false") << '\n'
      << "fixes_W: " << (r.fixes_W ? "true" : "false") << '\n'
      << "certificate: verified " << r.certificate.matrix().rows() << 'x' << r.certificate.matrix().cols()
      << ", det " << r.certificate.det() << '\n';
}

void cmd_genus(const Options& o, std::ostream& out) {
  const EllipticSurface x = parse_surface(o.surface);
  const HClass a = require_class(o, x.lattice());
  const GenusVerdict v = min_genus(x, a);
  if (o.json) {
    Json j = to_json(v);
    j["surface"] = x.name();
    j["class"] = to_json(a);
    return emit(out, j);
  }
  out << "surface: " << x.name() << '\n'
      << "class: " << to_string(a) << '\n'
      << "square: " << v.square << '\n'
      << "status: " << to_string(v.status) << '\n'
      << "rule: " << to_string(v.rule) << '\n'
      << "lower_bound: " << v.lower_bound << '\n'
      << "realized: " << (v.realized ? std::to_string(*v.realized) : std::string("unknown")) << '\n';
  if (v.negative_square_note) out << "note: " << *v.negative_square_note << '\n';
  if (v.certificate)
    out << "canonical: " << to_string(v.certificate->canonical) << '\n'
        << "spinor: " << sign_string(v.certificate->spinor) << '\n';
}

void cmd_reduce(const Options& o, std::ostream& out) {
  const Target t = resolve(o);
  const HClass a = require_class(o, t.lattice);
  ReductionResult r = [&] {
    if (t.surface) return reduce_in_elliptic(*t.surface, a);
    // --target counts H blocks from 1, matching the e_i/f_i names.
    int seen = 0;
    for (std::size_t b = 0; b < t.lattice->blocks().size(); ++b)
      if (t.lattice->blocks()[b].kind == BlockKind::Hyperbolic && ++seen == o.target) return reduce_even(a, b);
    fail(ErrorKind::PreconditionFailed, "no H block number " + std::to_string(o.target));
  }();
  if (o.json) return emit(out, to_json(r));
  print_reduction(r, out);
}

Isometry load_isometry(const Options& o, const LatticePtr& l) {
  if (o.matrix.empty()) fail(ErrorKind::Parse, "--matrix is required");
  const Json j = read_json_file(o.matrix);
  if (j.is_object() && j.contains("lattice")) return isometry_from_json(j, l);
  return verify_isometry(l, matrix_from_json(j));
}

void cmd_spinor(const Options& o, std::ostream& out) {
  const Target t = resolve(o);
  const Isometry m = load_isometry(o, t.lattice);
  const int nu = spinor_norm(m);
  Json j{{"spinor", nu}};
  if (t.surface) {
    j["fixes_k"] = fixes_class(m, t.surface->k());
    j["realizability"] = to_string(realizability(*t.surface, m));
  }
  if (o.json) return emit(out, j);
  out << sign_string(nu) << '\n';
  if (t.surface)
    out << "fixes_k: " << (j["fixes_k"].get<bool>() ? "true" : "false") << '\n'
        << "realizability: " << j["realizability"].get<std::string>() << '\n';
}

void cmd_verify(const Options& o, std::ostream& out) {
  const Target t = resolve(o);
  const Isometry m = load_isometry(o, t.lattice);
  if (o.json) return emit(out, Json{{"ok", true}, {"det", m.det()}, {"spinor", spinor_norm(m)}});
  out << "ok\n" << "det: " << m.det() << '\n' << "spinor: " << sign_string(spinor_norm(m)) << '\n';
}

void cmd_orbit(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.lattice.empty()) fail(ErrorKind::Parse, "--lattice is required");
  const LatticePtr l = make_lattice(o.lattice);
  const OrbitReport r = orbit_report(l, o.square, o.div, o.bound, budget_of(o), o.witness,
                                     [&](std::string_view msg) { err << "[oracle] " << msg << '\n'; });
  if (o.json) return emit(out, to_json(r));
  out << "lattice: " << r.lattice << '\n'
      << "square: " << r.square << '\n'
      << "divisibility: " << r.divisibility << '\n'
      << "bound: " << r.coord_bound << '\n'
      << "vectors_found: " << r.vectors_found << '\n'
      << "orbit_count_full: " << r.orbit_count_full << '\n'
      << "orbit_count_spinor1: " << r.orbit_count_spinor1 << '\n'
      << "states_visited: " << r.states_visited << '\n';
  if (r.witness_map)
    for (const auto& w : *r.witness_map)
      out << "witness: " << to_string(w.vector) << " -> " << to_string(w.canonical) << '\n';
}

void cmd_search(const Options& o, std::ostream& out) {
  if (o.lattice.empty()) fail(ErrorKind::Parse, "--lattice is required");
  const LatticePtr l = make_lattice(o.lattice);
  const HClass x = parse_class(l, o.from), y = parse_class(l, o.to);
  const auto found = exhaustive_isometry_search(x, y, o.bound, budget_of(o));
  if (o.json) {
    Json j{{"found", found.has_value()}};
    j["isometry"] = found ? to_json(*found) : Json(nullptr);
    j["spinor"] = found ? Json(spinor_norm(*found)) : Json(nullptr);
    return emit(out, j);
  }
  if (!found) {
    out << "none within entry bound " << o.bound << '\n';
    return;
  }
  out << "found\n" << "spinor: " << sign_string(spinor_norm(*found)) << '\n';
  for (const auto& row : found->matrix().to_rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Intersection lattices, spinor norms and minimal genus on elliptic surfaces E(n)_{p,q}", "ellgenus"};
  app.require_subcommand(1);

  auto surface_opt = [&](CLI::App* c) { c->add_option("--surface", o.surface, "surface, e.g. \"E(3)\" or \"E(2;2,3)\""); };
  auto lattice_opt = [&](CLI::App* c) { c->add_option("--lattice", o.lattice, "block list, e.g. \"2H,E8-\""); };
  auto json_opt = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };

  auto* info = app.add_subcommand("info", "surface invariants and basic classes");
  info->add_option("spec", o.positional, "surface spec (positional)");
  surface_opt(info);
  json_opt(info);

  auto* basic = app.add_subcommand("basic", "Seiberg-Witten basic classes");
  basic->add_option("spec", o.positional, "surface spec (positional)");
  surface_opt(basic);
  json_opt(basic);

  auto* klass = app.add_subcommand("class", "square, divisibility, characteristic, k.A and K.A");
  surface_opt(klass);
  lattice_opt(klass);
  klass->add_option("--class", o.klass, "class: dense \"1,0,...\" or sparse \"k=1,e1=2\"");
  json_opt(klass);

  auto* genus = app.add_subcommand("genus", "minimal genus verdict");
  surface_opt(genus);
  genus->add_option("--class", o.klass, "class");
  json_opt(genus);

  auto* reduce = app.add_subcommand("reduce", "reduce a class to canonical form with a certificate");
  surface_opt(reduce);
  lattice_opt(reduce);
  reduce->add_option("--class", o.klass, "class");
  reduce->add_option("--target", o.target, "target H block (1-based, lattices only)");
  json_opt(reduce);

  auto* spinor = app.add_subcommand("spinor", "spinor norm of an isometry");
  surface_opt(spinor);
  lattice_opt(spinor);
  spinor->add_option("--matrix", o.matrix, "JSON matrix file");
  json_opt(spinor);

  auto* verify = app.add_subcommand("verify", "check M^T G M = G");
  surface_opt(verify);
  lattice_opt(verify);
  verify->add_option("--matrix", o.matrix, "JSON matrix file");
  json_opt(verify);

  auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle->require_subcommand(1);
  auto* orbit = oracle->add_subcommand("orbit", "orbit counts by breadth-first search");
  lattice_opt(orbit);
  orbit->add_option("--square", o.square, "square of the vectors");
  orbit->add_option("--div", o.div, "divisibility of the vectors");
  orbit->add_option("--bound", o.bound, "coordinate bound");
  orbit->add_option("--budget", o.budget, "state cap (overrides GENUS_LATTICE_BUDGET)");
  orbit->add_flag("--witness", o.witness, "attach reduction certificates");
  json_opt(orbit);
  auto* search = oracle->add_subcommand("search", "exhaustive isometry search x -> y");
  lattice_opt(search);
  search->add_option("--from", o.from, "source class")->required();
  search->add_option("--to", o.to, "target class")->required();
  search->add_option("--bound", o.bound, "entry bound");
  search->add_option("--budget", o.budget, "state cap (overrides GENUS_LATTICE_BUDGET)");
  json_opt(search);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (info->parsed()) cmd_info(o, out);
    else if (basic->parsed()) cmd_basic(o, out);
    else if (klass->parsed()) cmd_class(o, out);
    else if (genus->parsed()) cmd_genus(o, out);
    else if (reduce->parsed()) cmd_reduce(o, out);
    else if (spinor->parsed()) cmd_spinor(o, out);
    else if (verify->parsed()) cmd_verify(o, out);
    else if (orbit->parsed()) cmd_orbit(o, out, err);
    else if (search->parsed()) cmd_search(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::BudgetExceeded ? kBudget : kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kOk;
}

}  // namespace ellgenus::cli
