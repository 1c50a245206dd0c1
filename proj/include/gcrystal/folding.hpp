#pragma once

#include <vector>

#include "gcrystal/crystal_maps.hpp"
#include "gcrystal/report.hpp"

namespace gc {

enum class Sigma { S0, S1, S2, S3, S4 };
std::string sigma_name(Sigma s);

// Involution on B(D1_N); N is the host rank.
const PointMap& involution_map(Sigma s, int N);
GCPoint apply_involution(Sigma s, const GCPoint& l);
// Index permutation p with gamma_{p(i)}(Sigma l) = gamma_i(l), same for eps.
std::vector<int> involution_permutation(Sigma s, int N);

Report check_defining_property(Sigma s, int N, int samples, Sampler& smp);

// Folding data of B1, D2, A2odd and A2even into D1.
int host_rank(const TypeId& t);
TypeId host_type(const TypeId& t);
Sigma folding_involution(const TypeId& t);
bool host_spectral_squared(const TypeId& t);
// Host operators whose composite realises e_i of the folded type.
std::vector<int> host_operators(const TypeId& t, int i);
// Host index carrying gamma_i and eps_i.
int host_index(const TypeId& t, int i);

const PointMap& eta_map(const TypeId& t);          // B(t) -> B(D1_N)
const PointMap& eta_inverse_map(const TypeId& t);  // B(D1_N) -> B(t)
GCPoint eta_embed(const TypeId& t, const GCPoint& m);
GCPoint eta_inverse(const TypeId& t, const GCPoint& l);

GCPoint host_apply(const TypeId& t, int i, const Scalar& c, const GCPoint& l);

Report folded_action_check(const TypeId& t, int samples, Sampler& smp);
// E_1^c e_2^{c^2 d} E_1^{cd} e_2^d = e_2^d E_1^{cd} e_2^{c^2 d} E_1^c on B(D1_4), E_1 = e_1 e_3.
Report paired_braid_check(int samples, Sampler& smp);

}  // namespace gc
