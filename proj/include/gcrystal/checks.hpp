#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcrystal/model.hpp"
#include "gcrystal/product.hpp"
#include "gcrystal/report.hpp"

namespace gc {

constexpr int kMaxResample = 10;

// A word of actions, applied right to left.
using ActionWord = std::vector<std::pair<int, Scalar>>;

// Both sides of the relation fixed by (a_ij, a_ji), or nothing for pairs that
// do not occur in a Cartan matrix of finite type.
std::optional<std::pair<ActionWord, ActionWord>> verma_relation(int aij, int aji, int i, int j, const Scalar& a,
                                                                const Scalar& b);

// Adapter over one model.
struct SingleCrystal {
  using State = GCPoint;
  std::shared_ptr<const Model> m;
  std::optional<Scalar> L;  // fixed spectral parameter, else sampled
  int indices() const { return m->index_count(); }
  const IntMatrix& cartan() const { return m->cartan.a; }
  State sample(Sampler& s) const { return sample_point(*m, s, L); }
  State e(const State& p, int i, const Scalar& c) const { return apply_e(*m, i, c, p); }
  std::vector<Scalar> structure(const State& p) const { return structure_all(*m, p); }
  bool constraint_ok(const State& p) const { return constraint_holds(*m, p); }
};

// Adapter over a left-associated product of copies of one model.
struct ProductCrystal {
  using State = ProductPoint;
  std::shared_ptr<const Model> m;
  std::vector<Scalar> spectra;
  int indices() const { return m->index_count(); }
  const IntMatrix& cartan() const { return m->cartan.a; }
  State sample(Sampler& s) const {
    ProductPoint pp;
    for (auto& L : spectra) pp.factors.push_back(sample_point(*m, s, L));
    return pp;
  }
  State e(const State& p, int i, const Scalar& c) const { return product_apply_e(*m, p, i, c); }
  std::vector<Scalar> structure(const State& p) const {
    std::vector<Scalar> g, e;
    for (int i = 0; i < indices(); ++i) {
      auto s = product_structure_functions(*m, p, i);
      g.push_back(s.gamma);
      e.push_back(s.eps);
    }
    g.insert(g.end(), e.begin(), e.end());
    return g;
  }
  bool constraint_ok(const State& p) const {
    for (auto& f : p.factors)
      if (!constraint_holds(*m, f)) return false;
    return true;
  }
};

// Runs body(sample) on `samples` points, resampling on DomainError.
template <class Cr, class Body>
void for_samples(const Cr& cr, int samples, Sampler& s, Tally& skip, Body body) {
  for (int k = 0; k < samples; ++k) {
    for (int attempt = 0; attempt <= kMaxResample; ++attempt) {
      try {
        body(cr.sample(s));
        break;
      } catch (const DomainError&) {
        ++skip.skipped;
      }
    }
  }
}

template <class Cr>
typename Cr::State apply_word(const Cr& cr, typename Cr::State p, const ActionWord& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) p = cr.e(p, it->first, it->second);
  return p;
}

// gamma_j(e_i^c x) = c^{a_ij} gamma_j(x), eps_i(e_i^c x) = eps_i(x)/c, the
// action law e^{c}e^{d} = e^{cd}, e^1 = id and the B-model constraint.
template <class Cr>
Report verify_axioms(const Cr& cr, int samples, Sampler& s) {
  Report r;
  const int N = cr.indices();
  const IntMatrix& A = cr.cartan();
  for_samples(cr, samples, s, r["skipped"], [&](const typename Cr::State& p) {
    Scalar c = s.draw(), d = s.draw();
    auto st = cr.structure(p);
    for (int i = 0; i < N; ++i) {
      auto q = cr.e(p, i, c);
      auto sq = cr.structure(q);
      std::string at = "i=" + std::to_string(i);
      r["constraint"].record(cr.constraint_ok(q), at);
      r["eps"].record(sq[static_cast<size_t>(N + i)] == st[static_cast<size_t>(N + i)] / c, at);
      for (int j = 0; j < N; ++j)
        r["gamma"].record(sq[static_cast<size_t>(j)] ==
                              ipow(c, A[static_cast<size_t>(i)][static_cast<size_t>(j)]) * st[static_cast<size_t>(j)],
                          at + " j=" + std::to_string(j));
      r["action"].record(cr.e(q, i, d) == cr.e(p, i, c * d), at);
      r["unit"].record(cr.e(p, i, Scalar(1)) == p, at);
    }
  });
  r.checks.erase("skipped");
  return r;
}

template <class Cr>
Report verify_verma(const Cr& cr, int samples, Sampler& s) {
  Report r;
  const int N = cr.indices();
  const IntMatrix& A = cr.cartan();
  Tally skip;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      int aij = A[static_cast<size_t>(i)][static_cast<size_t>(j)];
      int aji = A[static_cast<size_t>(j)][static_cast<size_t>(i)];
      std::string key = "verma(" + std::to_string(i) + "," + std::to_string(j) + ")";
      for_samples(cr, samples, s, skip, [&](const typename Cr::State& p) {
        Scalar a = s.draw(), b = s.draw();
        auto rel = verma_relation(aij, aji, i, j, a, b);
        if (!rel) {
          r[key].record(false, "no relation for (" + std::to_string(aij) + "," + std::to_string(aji) + ")");
          return;
        }
        r[key].record(apply_word(cr, p, rel->first) == apply_word(cr, p, rel->second));
      });
    }
  return r;
}

}  // namespace gc
