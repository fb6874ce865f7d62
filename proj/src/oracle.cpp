#include "ellgenus/oracle.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "ellgenus/reduction.hpp"

namespace ellgenus {

SearchBudget budget_from_env() {
  SearchBudget b;
  if (const char* env = std::getenv("GENUS_LATTICE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      fail(ErrorKind::Parse, std::string("GENUS_LATTICE_BUDGET='") + env + "' is not a positive integer");
    b.max_states = static_cast<std::size_t>(v);
  }
  return b;
}

namespace {

Int max_norm(const Vector& v) {
  Int m = 0;
  for (Int c : v) m = std::max(m, abs_checked(c));
  return m;
}

// Calls fn on every vector of the box [-bound, bound]^n in lexicographic
// order; the box size is checked against the budget up front.
template <typename Fn>
void for_each_in_box(std::size_t n, Int bound, SearchBudget budget, Fn&& fn) {
  if (bound < 0) fail(ErrorKind::PreconditionFailed, "bound must be non-negative");
  const Int side = 2 * bound + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget.max_states / static_cast<std::size_t>(side))
      fail(ErrorKind::BudgetExceeded, "box of side " + std::to_string(side) + " in rank " + std::to_string(n) +
                                          " exceeds the state budget of " + std::to_string(budget.max_states));
    total *= static_cast<std::size_t>(side);
  }
  Vector v(n, -bound);
  while (true) {
    fn(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i] < bound) {
        ++v[i];
        break;
      }
      v[i] = -bound;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<Vector> small_vectors(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i)
    for (Int s : {1, -1}) {
      Vector v(n, 0);
      v[i] = s;
      out.push_back(v);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (Int si : {1, -1})
        for (Int sj : {1, -1}) {
          Vector v(n, 0);
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  return out;
}

}  // namespace

std::vector<HClass> enumerate_vectors(const LatticePtr& lattice, Int sq, Int div, Int bound, SearchBudget budget) {
  if (bound < 1) fail(ErrorKind::PreconditionFailed, "bound must be at least 1");
  std::vector<HClass> out;
  for_each_in_box(lattice->rank(), bound, budget, [&](const Vector& v) {
    if (content(v) != div) return;
    if (lattice->pairing(v, v) != sq) return;
    out.emplace_back(lattice, v);
  });
  return out;
}

std::vector<Generator> default_generators(const LatticePtr& lattice) {
  const auto vs = small_vectors(lattice->rank());
  const SpinorFrame frame = SpinorFrame::canonical(lattice);
  std::vector<Generator> out;
  std::set<std::vector<Int>> seen;
  const Matrix id = Matrix::identity(lattice->rank());

  auto keep = [&](Isometry iso, std::string label) {
    if (iso.matrix() == id) return;
    std::vector<Int> key;
    for (const auto& row : iso.matrix().to_rows()) key.insert(key.end(), row.begin(), row.end());
    if (!seen.insert(std::move(key)).second) return;
    const int nu = spinor_norm(frame, iso);
    out.push_back(Generator{std::move(iso), nu, std::move(label)});
  };

  for (const auto& u : vs) {
    if (lattice->pairing(u, u) != 0) continue;
    const HClass uc(lattice, u);
    for (const auto& v : vs) {
      if (lattice->pairing(u, v) != 0 || lattice->pairing(v, v) % 2 != 0) continue;
      const HClass vc(lattice, v);
      keep(eichler_transvection(uc, vc), "E[" + to_string(uc) + "," + to_string(vc) + "]");
    }
  }
  for (const auto& v : vs) {
    const Int vv = lattice->pairing(v, v);
    if (vv == 0) continue;
    try {
      const HClass vc(lattice, v);
      keep(reflection(vc), "s[" + to_string(vc) + "]");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonIntegralReflection) throw;
    }
  }
  return out;
}

namespace {

std::size_t count_components(const std::vector<HClass>& seeds, const std::vector<const Generator*>& gens, Int bound,
                             SearchBudget budget, std::size_t& states) {
  std::set<Vector> visited;
  std::size_t components = 0;
  for (const auto& seed : seeds) {
    if (visited.count(seed.coords())) continue;
    ++components;
    std::deque<Vector> queue{seed.coords()};
    visited.insert(seed.coords());
    if (++states > budget.max_states) fail(ErrorKind::BudgetExceeded, "orbit search exceeded the state budget");
    while (!queue.empty()) {
      const Vector cur = std::move(queue.front());
      queue.pop_front();
      for (const Generator* g : gens) {
        Vector next = g->isometry.matrix() * std::span<const Int>(cur);
        if (max_norm(next) > bound || visited.count(next)) continue;
        if (++states > budget.max_states) fail(ErrorKind::BudgetExceeded, "orbit search exceeded the state budget");
        visited.insert(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return components;
}

}  // namespace

OrbitReport orbit_bfs(const LatticePtr& lattice, const std::vector<HClass>& seeds,
                      const std::vector<Generator>& generators, Int bound, SearchBudget budget, bool witnesses,
                      const ProgressFn& progress) {
  OrbitReport rep{lattice->spec(), 0, 0, bound, seeds.size(), 0, 0, 0, std::nullopt};
  if (!seeds.empty()) {
    rep.square = square(seeds.front());
    rep.divisibility = divisibility(seeds.front());
  }
  for (const auto& g : generators)
    if (!g.isometry.lattice()->same_form(*lattice)) fail(ErrorKind::LatticeMismatch, "generator on another lattice");

  std::vector<const Generator*> all, plus;
  for (const auto& g : generators) {
    all.push_back(&g);
    if (g.spinor == 1) plus.push_back(&g);
  }
  if (progress) progress("seeds " + std::to_string(seeds.size()) + ", generators " + std::to_string(all.size()));
  rep.orbit_count_full = count_components(seeds, all, bound, budget, rep.states_visited);
  if (progress) progress("full group: " + std::to_string(rep.orbit_count_full) + " orbit(s), " +
                         std::to_string(rep.states_visited) + " states");
  rep.orbit_count_spinor1 = count_components(seeds, plus, bound, budget, rep.states_visited);
  if (progress) progress("spinor-norm-one subgroup: " + std::to_string(rep.orbit_count_spinor1) + " orbit(s), " +
                         std::to_string(rep.states_visited) + " states");

  if (witnesses) {
    std::size_t target = lattice->blocks().size();
    for (std::size_t b = 0; b < lattice->blocks().size(); ++b)
      if (lattice->blocks()[b].kind == BlockKind::Hyperbolic) {
        target = b;
        break;
      }
    if (target == lattice->blocks().size())
      fail(ErrorKind::NeedTwoHyperbolicPlanes, "witnesses need hyperbolic blocks");
    std::vector<OrbitWitness> ws;
    for (const auto& s : seeds) {
      ReductionResult r = reduce_even(s, target);
      ws.push_back(OrbitWitness{s, r.canonical, r.certificate});
    }
    if (progress) progress("witnesses " + std::to_string(ws.size()));
    rep.witness_map = std::move(ws);
  }
  return rep;
}

OrbitReport orbit_report(const LatticePtr& lattice, Int sq, Int div, Int bound, SearchBudget budget, bool witnesses,
                         const ProgressFn& progress) {
  const auto seeds = enumerate_vectors(lattice, sq, div, bound, budget);
  return orbit_bfs(lattice, seeds, default_generators(lattice), bound, budget, witnesses, progress);
}

std::optional<Isometry> exhaustive_isometry_search(const HClass& x, const HClass& y, Int entry_bound,
                                                   SearchBudget budget) {
  if (!x.lattice()->same_form(*y.lattice())) fail(ErrorKind::LatticeMismatch, "x and y on different lattices");
  if (square(x) != square(y))
    fail(ErrorKind::PreconditionFailed, "squares differ (" + std::to_string(square(x)) + " vs " +
                                            std::to_string(square(y)) + ")");
  if (divisibility(x) != divisibility(y)) fail(ErrorKind::PreconditionFailed, "divisibilities differ");

  const LatticePtr& l = x.lattice();
  const std::size_t n = l->rank();
  const Matrix& g = l->gram();

  std::map<Int, std::vector<Vector>> by_square;
  for_each_in_box(n, entry_bound, budget, [&](const Vector& v) {
    const Int s = l->pairing(v, v);
    for (std::size_t i = 0; i < n; ++i)
      if (g(i, i) == s) {
        by_square[s].push_back(v);
        break;
      }
  });

  std::vector<Vector> cols(n);
  std::size_t states = 0;
  std::optional<Isometry> found;

  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    if (i == n) {
      Matrix m = Matrix::from_columns(cols);
      if (m * std::span<const Int>(x.coords()) != y.coords()) return false;
      found = verify_isometry(l, std::move(m));
      return true;
    }
    for (const Vector& c : by_square[g(i, i)]) {
      if (++states > budget.max_states) fail(ErrorKind::BudgetExceeded, "isometry search exceeded the state budget");
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = l->pairing(cols[j], c) == g(j, i);
      if (!ok) continue;
      cols[i] = c;
      if (dfs(i + 1)) return true;
    }
    return false;
  };
  dfs(0);
  return found;
}

}  // namespace ellgenus
