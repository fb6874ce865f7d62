#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellgenus/isometry.hpp"
#include "ellgenus/lattice.hpp"

namespace ellgenus {

/// Hard cap on the number of states an oracle run may touch. Exceeding it
/// raises BudgetExceeded; results are never silently truncated.
struct SearchBudget {
  std::size_t max_states = 1'000'000;
};

/// The default budget, overridden by GENUS_LATTICE_BUDGET when set.
SearchBudget budget_from_env();

using ProgressFn = std::function<void(std::string_view)>;

/// All classes with max-norm <= bound of the given square and divisibility,
/// in lexicographic coordinate order.
std::vector<HClass> enumerate_vectors(const LatticePtr& lattice, Int square, Int divisibility, Int bound,
                                      SearchBudget budget = {});

struct Generator {
  Isometry isometry;
  int spinor;
  std::string label;
};

/// Eichler transvections E_{u,v} and reflections sigma_v with u, v running
/// over +-b_i and +-b_i +- b_j; identities and duplicates dropped.
std::vector<Generator> default_generators(const LatticePtr& lattice);

struct OrbitWitness {
  HClass vector;
  HClass canonical;
  Isometry certificate;
};

struct OrbitReport {
  std::string lattice;
  Int square;
  Int divisibility;
  Int coord_bound;
  std::size_t vectors_found;
  std::size_t orbit_count_full;
  std::size_t orbit_count_spinor1;
  std::size_t states_visited;
  std::optional<std::vector<OrbitWitness>> witness_map;
};

/// Connected components of the seeds under the generators (and under the
/// spinor-norm-one generators alone), moving only through vectors with
/// max-norm <= bound. With `witnesses`, every seed is also reduced to its
/// canonical form and the certificate recorded.
OrbitReport orbit_bfs(const LatticePtr& lattice, const std::vector<HClass>& seeds,
                      const std::vector<Generator>& generators, Int bound, SearchBudget budget = {},
                      bool witnesses = false, const ProgressFn& progress = {});

/// Convenience wrapper: enumerate, then run the default generators.
OrbitReport orbit_report(const LatticePtr& lattice, Int square, Int divisibility, Int bound,
                         SearchBudget budget = {}, bool witnesses = false, const ProgressFn& progress = {});

/// Depth-first search for an isometry with |entries| <= entry_bound mapping x
/// to y. PreconditionFailed if square or divisibility differ.
std::optional<Isometry> exhaustive_isometry_search(const HClass& x, const HClass& y, Int entry_bound,
                                                   SearchBudget budget = {});

}  // namespace ellgenus
