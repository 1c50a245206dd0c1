#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcrystal/report.hpp"
#include "gcrystal/rmap.hpp"

namespace gc {

struct BadConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// sigma-bar: intertwines e_i with e_{sigma(i)} and carries gamma/eps along;
// involutive (order n+1 for a1). A2even families go V -> V2 and back.
Report sigma_bar_check(const TypeId& t, int samples, Sampler& smp);
// Xi: B -> V and back, intertwining e_i, gamma_i, eps_i.
Report xi_check(const TypeId& t, int samples, Sampler& smp);
// V-model e_i for i != 0 and eps_i against the Schubert-cell formulas.
Report schubert_check(const TypeId& t, int samples, Sampler& smp);
// Axioms and Verma relations on products of V(t) at the given spectra, the
// associativity of the structure functions and the single-factor case.
Report product_check(const TypeId& t, const std::vector<Scalar>& spectra, int samples, Sampler& smp);

// Models that exist for a type, in the order V, B, V2.
std::vector<std::shared_ptr<const Model>> catalogue_models(const TypeId& t);

struct SuiteConfig {
  TypeId type{Family::D1, 4};
  std::optional<ModelKind> model;  // all catalogued models when empty
  Scalar L = 2, M = 3, K = 5;
  int samples = 20;
  std::uint64_t seed = 0;
  int radius = 1;
};

const std::vector<std::string>& suite_names();
// Every suite draws from its own Sampler seeded by cfg.seed, so a suite's
// report does not depend on what ran before it. Throws BadConfig.
Report run_suite(const std::string& suite, const SuiteConfig& cfg);

}  // namespace gc
