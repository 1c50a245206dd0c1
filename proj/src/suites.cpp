#include "gcrystal/suites.hpp"

#include "gcrystal/checks.hpp"
#include "gcrystal/crystal_maps.hpp"
#include "gcrystal/folding.hpp"
#include "gcrystal/ultradisc.hpp"

namespace gc {

namespace {

// body(draws) is retried on DomainError like for_samples.
template <class Body>
void resampled(int samples, Tally& skip, Body body) {
  for (int k = 0; k < samples; ++k)
    for (int attempt = 0; attempt <= kMaxResample; ++attempt) {
      try {
        body();
        break;
      } catch (const DomainError&) {
        ++skip.skipped;
      }
    }
}

bool is_a2_even(Family f) { return f == Family::A2even || f == Family::A2evenDagger; }

bool is_folded(Family f) {
  return f == Family::B1 || f == Family::D2 || f == Family::A2odd || f == Family::A2even;
}

Scalar coord_of(const Model& m, const GCPoint& p, const std::string& name) {
  return p.coords[static_cast<size_t>(m.coord_index(name))];
}

}  // namespace

std::vector<std::shared_ptr<const Model>> catalogue_models(const TypeId& t) {
  std::vector<std::shared_ptr<const Model>> out;
  for (ModelKind k : {ModelKind::V, ModelKind::B, ModelKind::V2}) {
    try {
      out.push_back(build_model(t, k));
    } catch (const UnsupportedModel&) {
    }
  }
  return out;
}

Report sigma_bar_check(const TypeId& t, int samples, Sampler& smp) {
  Report r;
  auto v = build_model(t, ModelKind::V);
  Tally skip;
  if (is_a2_even(t.family)) {
    auto w = build_model(t, ModelKind::V2);
    const PointMap& back = sigma_bar_inverse_map(t);
    resampled(samples, skip, [&] {
      GCPoint x = sample_point(*v, smp);
      Scalar c = smp.draw();
      GCPoint y = sigma_bar(t, x).first;
      r["inverse"].record(apply_map(back, y) == x);
      for (int i = 0; i < w->index_count(); ++i) {
        auto sx = structure_functions(*v, i, x), sy = structure_functions(*w, i, y);
        std::string at = "i=" + std::to_string(i);
        r["eps"].record(sy.eps == sx.eps, at);
        r["gamma"].record(sy.gamma == sx.gamma, at);
        r["intertwine"].record(sigma_bar(t, apply_e(*v, i, c, x)).first == apply_e(*w, i, c, y), at);
      }
    });
  } else {
    const std::vector<int>& sigma = *v->cartan.sigma;
    // sigma-bar has the order of sigma
    int order = 1;
    for (int i = sigma[0]; i != 0; i = sigma[static_cast<size_t>(i)]) ++order;
    resampled(samples, skip, [&] {
      GCPoint x = sample_point(*v, smp);
      Scalar c = smp.draw();
      GCPoint y = sigma_bar(t, x).first;
      GCPoint z = y;
      for (int k = 1; k < order; ++k) z = sigma_bar(t, z).first;
      r["order"].record(z == x);
      for (int i = 0; i < v->index_count(); ++i) {
        const int s = sigma[static_cast<size_t>(i)];
        auto sx = structure_functions(*v, i, x), sy = structure_functions(*v, s, y);
        std::string at = "i=" + std::to_string(i);
        r["eps"].record(sy.eps == sx.eps, at);
        r["gamma"].record(sy.gamma == sx.gamma, at);
        r["intertwine"].record(sigma_bar(t, apply_e(*v, i, c, x)).first == apply_e(*v, s, c, y), at);
      }
    });
  }
  for (auto& [k, tl] : r.checks) tl.skipped = skip.skipped;
  return r;
}

Report xi_check(const TypeId& t, int samples, Sampler& smp) {
  Report r;
  auto b = build_model(t, ModelKind::B);
  auto v = build_model(t, ModelKind::V);
  const PointMap& fwd = xi_map(t, XiDirection::BtoV);
  const PointMap& bwd = xi_map(t, XiDirection::VtoB);
  const bool square = fwd.rule == SpectralRule::Sqrt;
  Tally skip;
  resampled(samples, skip, [&] {
    Scalar lv = smp.draw();
    GCPoint p = sample_point(*b, smp, square ? lv * lv : lv);
    GCPoint x = sample_point(*v, smp, lv);
    Scalar c = smp.draw();
    GCPoint q = apply_map(fwd, p);
    r["round-trip"].record(apply_map(bwd, q) == p && apply_map(fwd, apply_map(bwd, x)) == x);
    for (int i = 0; i < b->index_count(); ++i) {
      std::string at = "i=" + std::to_string(i);
      auto sp = structure_functions(*b, i, p), sq = structure_functions(*v, i, q);
      r["intertwine"].record(apply_map(fwd, apply_e(*b, i, c, p)) == apply_e(*v, i, c, q), at);
      r["gamma"].record(sp.gamma == sq.gamma, at);
      r["eps"].record(sp.eps == sq.eps, at);
    }
  });
  for (auto& [k, tl] : r.checks) tl.skipped = skip.skipped;
  return r;
}

Report schubert_check(const TypeId& t, int samples, Sampler& smp) {
  Report r;
  auto v = build_model(t, ModelKind::V);
  auto [word, names] = v_model_word(t);
  const IntMatrix& A = v->cartan.a;
  Tally skip;
  resampled(samples, skip, [&] {
    GCPoint x = sample_point(*v, smp);
    Scalar c = smp.draw();
    std::vector<Scalar> wc;
    for (auto& nm : names) wc.push_back(coord_of(*v, x, nm));
    for (int i = 1; i < v->index_count(); ++i) {
      std::string at = "i=" + std::to_string(i);
      GCPoint y = apply_e(*v, i, c, x);
      std::vector<Scalar> got;
      for (auto& nm : names) got.push_back(coord_of(*v, y, nm));
      r["schubert-e"].record(schubert_e_action(word, wc, A, i, c) == got, at);
      r["schubert-eps"].record(schubert_eps(word, wc, A, i) == structure_functions(*v, i, x).eps, at);
    }
  });
  for (auto& [k, tl] : r.checks) tl.skipped = skip.skipped;
  return r;
}

Report product_check(const TypeId& t, const std::vector<Scalar>& spectra, int samples, Sampler& smp) {
  Report r;
  auto v = build_model(t, ModelKind::V);
  ProductCrystal pc{v, spectra};
  r.merge(verify_axioms(pc, samples, smp));
  r.merge(verify_verma(pc, samples, smp));
  const int N = v->index_count();
  Tally skip;
  if (spectra.size() >= 3) {
    ProductCrystal three{v, {spectra[0], spectra[1], spectra[2]}};
    resampled(samples, skip, [&] {
      ProductPoint pp = three.sample(smp);
      for (int i = 0; i < N; ++i) {
        auto a = product_structure_functions(*v, pp, i), b = product_structure_right(*v, pp, i);
        r["associativity"].record(a.gamma == b.gamma && a.eps == b.eps, "i=" + std::to_string(i));
      }
    });
  }
  resampled(samples, skip, [&] {
    GCPoint x = sample_point(*v, smp, spectra[0]);
    Scalar c = smp.draw();
    ProductPoint one{{x}};
    for (int i = 0; i < N; ++i) {
      auto s = product_structure_functions(*v, one, i), u = structure_functions(*v, i, x);
      r["single-factor"].record(product_apply_e(*v, one, i, c).factors[0] == apply_e(*v, i, c, x) &&
                                    s.gamma == u.gamma && s.eps == u.eps,
                                "i=" + std::to_string(i));
    }
  });
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms", "verma",  "sigma-bar", "iso", "product",
                                              "folding", "mmatrix", "rmap",      "ud",  "all"};
  return names;
}

namespace {

std::vector<std::shared_ptr<const Model>> selected_models(const SuiteConfig& cfg) {
  if (!cfg.model) return catalogue_models(cfg.type);
  try {
    return {build_model(cfg.type, *cfg.model)};
  } catch (const UnsupportedModel& e) {
    throw BadConfig(e.what());
  }
}

bool applies(const std::string& suite, const TypeId& t) {
  const Family f = t.family;
  if (suite == "iso") return f != Family::A2evenDagger;
  if (suite == "folding") return f == Family::D1 || is_folded(f);
  if (suite == "mmatrix") return f == Family::A1 || f == Family::D1 || is_folded(f);
  if (suite == "rmap") return has_r_map(t);
  return true;
}

Report folding_suite(const SuiteConfig& cfg, Sampler& smp) {
  const TypeId& t = cfg.type;
  Report r;
  if (t.family == Family::D1) {
    for (Sigma s : {Sigma::S0, Sigma::S1, Sigma::S2, Sigma::S3, Sigma::S4}) {
      if ((s == Sigma::S2 || s == Sigma::S4) && t.n % 2) continue;
      r.merge(check_defining_property(s, t.n, cfg.samples, smp), sigma_name(s) + ":");
    }
    r.merge(paired_braid_check(cfg.samples, smp));
    return r;
  }
  r.merge(check_defining_property(folding_involution(t), host_rank(t), cfg.samples, smp),
          sigma_name(folding_involution(t)) + ":");
  r.merge(folded_action_check(t, cfg.samples, smp));
  return r;
}

Report mmatrix_suite(const SuiteConfig& cfg, Sampler& smp) {
  const TypeId& t = cfg.type;
  Report r;
  if (t.family == Family::A1) {
    auto b = build_model(t, ModelKind::B);
    Tally skip;
    resampled(cfg.samples, skip, [&] {
      GCPoint l = sample_point(*b, smp, cfg.L), m = sample_point(*b, smp, cfg.M);
      auto [lp, mp] = apply_R(l, m);
      r["matrix-identity"].record(check_r_matrix_identity(l, m, lp, mp));
      r.merge(uniqueness_perturbation(l, m, lp, mp));
    });
    return r;
  }
  if (t.family == Family::D1) {
    for (Sigma s : {Sigma::S0, Sigma::S1, Sigma::S2, Sigma::S3, Sigma::S4}) {
      if ((s == Sigma::S2 || s == Sigma::S4) && t.n % 2) continue;
      r.merge(conjugation_report(s, t.n, cfg.samples, smp));
    }
    return r;
  }
  return conjugation_report(folding_involution(t), host_rank(t), cfg.samples, smp);
}

Report rmap_suite(const SuiteConfig& cfg, Sampler& smp) {
  const TypeId& t = cfg.type;
  RSuiteConfig rc{cfg.L, cfg.M, cfg.K, cfg.samples};
  Report r = verify_R_properties(t, rc, smp);
  r.merge(v_model_r_check(t, rc, smp));
  if (is_folded(t.family)) r.merge(restriction_check(t, rc, smp));
  if (t.family != Family::A1) r.merge(w_form_report(t, cfg.samples, smp));
  return r;
}

Report ud_suite(const SuiteConfig& cfg, Sampler& smp) {
  Report r;
  for (auto& m : selected_models(cfg)) {
    const std::string tag = model_id(m->kind) + ":";
    for (long long lv : {0LL, 1LL}) {
      TropCrystal tc(m, lv);
      const std::string at = tag + "level" + std::to_string(lv) + ":";
      r.merge(check_crystal_axioms(tc, cfg.radius), at);
      // V2 carries only part of the index set, so it is not connected
      if (m->kind != ModelKind::V2) {
        Connectivity c = connectivity_sample(tc, cfg.radius);
        r[at + "connected"].record(c.connected, std::to_string(c.reached) + " of " + std::to_string(c.box_points));
      }
    }
    r.merge(check_tensor_rule(m, 1, 2, cfg.samples, smp), tag);
    r.merge(degree_consistency_report(*m, cfg.samples, smp), tag);
  }
  if (has_r_map(cfg.type) && (!cfg.model || *cfg.model == ModelKind::B)) {
    CombRConfig cc;
    cc.radius = cfg.radius;
    cc.triple_samples = 100 * cfg.samples;
    r.merge(combinatorial_r_check(cfg.type, cc, smp), "R:");
  }
  return r;
}

Report one_suite(const std::string& suite, const SuiteConfig& cfg) {
  Sampler smp(cfg.seed);
  const TypeId& t = cfg.type;
  Report r;
  if (suite == "axioms" || suite == "verma") {
    for (auto& m : selected_models(cfg)) {
      SingleCrystal cr{m, std::nullopt};
      r.merge(suite == "axioms" ? verify_axioms(cr, cfg.samples, smp) : verify_verma(cr, cfg.samples, smp),
              model_id(m->kind) + ":");
    }
  } else if (suite == "sigma-bar") {
    r = sigma_bar_check(t, cfg.samples, smp);
    r.merge(schubert_check(t, cfg.samples, smp));
  } else if (suite == "iso") {
    r = xi_check(t, cfg.samples, smp);
  } else if (suite == "product") {
    r.merge(product_check(t, {cfg.L, cfg.M}, cfg.samples, smp), "pair:");
    r.merge(product_check(t, {cfg.L, cfg.M, cfg.K}, cfg.samples, smp), "triple:");
  } else if (suite == "folding") {
    r = folding_suite(cfg, smp);
  } else if (suite == "mmatrix") {
    r = mmatrix_suite(cfg, smp);
  } else if (suite == "rmap") {
    r = rmap_suite(cfg, smp);
  } else if (suite == "ud") {
    r = ud_suite(cfg, smp);
  }
  return r;
}

}  // namespace

Report run_suite(const std::string& suite, const SuiteConfig& cfg) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw BadConfig("unknown suite '" + suite + "'");
  try {
    check_rank(cfg.type);
  } catch (const RankOutOfRange& e) {
    throw BadConfig(e.what());
  }
  if (cfg.samples <= 0) throw BadConfig("samples must be positive");
  if (cfg.radius < 0) throw BadConfig("radius must be non-negative");
  if (suite != "all") {
    if (!applies(suite, cfg.type)) throw BadConfig("suite " + suite + " does not apply to " + type_label(cfg.type));
    return one_suite(suite, cfg);
  }
  Report r;
  for (auto& s : suite_names())
    if (s != "all" && applies(s, cfg.type)) r.merge(one_suite(s, cfg), s + "/");
  return r;
}

}  // namespace gc
