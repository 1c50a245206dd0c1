#include "gcrystal/rmap.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "gcrystal/checks.hpp"

namespace gc {

namespace {

std::string ix(const std::string& b, int k) { return b + std::to_string(k); }

using Coord = std::function<Expr(int)>;

// One D1 pair seen through coordinate accessors.
struct PairView {
  Coord lv, lb, mv, mb;
  Expr L, M;
};

Expr range_product(const std::function<Expr(int)>& f, int a, int b) {
  std::vector<Expr> fs;
  for (int k = a; k <= b; ++k) fs.push_back(f(k));
  return Expr::product(fs);
}

// V_i: the theta sums over j <= n-2 and the eta sums over j <= n.
Expr vfun(int i, const PairView& p, int n) {
  auto down = [&](int k) { return p.mb(k) / p.lb(k); };
  auto up = [&](int k) { return p.lb(k) / p.mb(k); };
  auto ml = [&](int k) { return p.mv(k) / p.lv(k); };
  std::vector<Expr> s;
  Expr head = range_product(down, 1, i);
  for (int j = 1; j <= n - 2; ++j) {
    s.push_back(j <= i ? p.L * range_product(down, j + 1, i) : p.M * range_product(up, i + 1, j));
    s.push_back(p.L * head * range_product(ml, 1, j));
  }
  for (int j = 1; j <= n; ++j) {
    if (j <= i)
      s.push_back(p.L * range_product(down, j + 1, i) * (p.mb(j) / p.lv(j)));
    else if (j <= n - 1)
      s.push_back(p.M * range_product(up, i + 1, j) * (p.mb(j) / p.lv(j)));
    else
      s.push_back(p.M * range_product(up, i + 1, n - 1) * p.lv(n));
    if (j <= n - 1) {
      s.push_back(p.L * head * range_product(ml, 1, j) * (p.lv(j) / p.mb(j)));
    } else {
      Expr lead = i == n - 1 ? p.L * p.L / p.M : p.L;
      s.push_back(lead * head * range_product(ml, 1, n - 1) / p.lv(n));
    }
  }
  return Expr::sum(s);
}

PairView plain_view(int) {
  PairView p;
  p.lv = [](int k) { return V(kFirst + ix("l", k)); };
  p.lb = [](int k) { return V(kFirst + ix("lb", k)); };
  p.mv = [](int k) { return V(kSecond + ix("l", k)); };
  p.mb = [](int k) { return V(kSecond + ix("lb", k)); };
  p.L = V(kFirst + "L");
  p.M = V(kSecond + "L");
  return p;
}

// (l, m)^*, with the spectral parameters exchanged.
PairView star_view(int n) {
  PairView b = plain_view(n), p;
  p.lv = [b, n](int k) { return k < n ? b.mb(k) : b.mv(n); };
  p.lb = [b](int k) { return b.mv(k); };
  p.mv = [b, n](int k) { return k < n ? b.lb(k) : b.lv(n); };
  p.mb = [b](int k) { return b.lv(k); };
  p.L = b.M;
  p.M = b.L;
  return p;
}

// l_1 and lb_1 swapped in both factors.
PairView sharp_view(int n) {
  PairView b = plain_view(n), p = b;
  p.lv = [b](int k) { return k == 1 ? b.lb(1) : b.lv(k); };
  p.lb = [b](int k) { return k == 1 ? b.lv(1) : b.lb(k); };
  p.mv = [b](int k) { return k == 1 ? b.mb(1) : b.mv(k); };
  p.mb = [b](int k) { return k == 1 ? b.mv(1) : b.mb(k); };
  return p;
}

VWFamily make_vw(int n) {
  VWFamily f;
  f.n = n;
  PairView p = plain_view(n), s = star_view(n);
  for (int i = 0; i < n; ++i) {
    f.V.push_back(vfun(i, p, n));
    f.Vstar.push_back(vfun(i, s, n));
  }
  f.V0sharp = vfun(0, sharp_view(n), n);
  f.terms_per_V = static_cast<int>(f.V[1].children().size());
  f.W.resize(static_cast<size_t>(n));
  f.W[0] = Expr(1);
  for (int i = 1; i <= n - 2; ++i) {
    size_t k = static_cast<size_t>(i);
    Expr num = f.V[k] * f.Vstar[k - 1] / p.mv(i) + f.V[k - 1] * f.Vstar[k] / p.lb(i);
    f.W[k] = num / (1 / p.lv(i) + 1 / p.mb(i));
  }
  f.W[static_cast<size_t>(n - 1)] = f.V[static_cast<size_t>(n - 1)] * f.Vstar[static_cast<size_t>(n - 1)];
  return f;
}

std::vector<std::string> r_inputs(const Model& md) {
  std::vector<std::string> in;
  for (auto& c : md.coords) in.push_back(kFirst + c);
  in.push_back(kFirst + "L");
  for (auto& c : md.coords) in.push_back(kSecond + c);
  in.push_back(kSecond + "L");
  return in;
}

void place(RMap& r, const std::map<std::string, Expr>& lp, const std::map<std::string, Expr>& mp) {
  for (auto* t : {&lp, &mp})
    for (auto& c : r.model->coords) {
      auto it = t->find(c);
      if (it == t->end()) throw std::logic_error("R leaves " + c + " undefined");
      r.out.push_back(it->second);
    }
  r.inputs = r_inputs(*r.model);
  r.prog = Program(r.inputs, r.out);
}

RMap make_d1(int n) {
  RMap r;
  r.type = {Family::D1, n};
  r.model = build_model(r.type, ModelKind::B);
  const VWFamily& f = d1_vw(n);
  PairView p = plain_view(n);
  auto Vi = [&](int i) { return f.V[static_cast<size_t>(i)]; };
  auto Si = [&](int i) { return f.Vstar[static_cast<size_t>(i)]; };
  auto Wi = [&](int i) { return f.W[static_cast<size_t>(i)]; };
  std::map<std::string, Expr> lp, mp;
  lp["l1"] = p.mv(1) * f.V0sharp / Vi(1);
  lp["lb1"] = p.mb(1) * Vi(0) / Vi(1);
  mp["l1"] = p.lv(1) * Vi(0) / Si(1);
  mp["lb1"] = p.lb(1) * f.V0sharp / Si(1);
  for (int i = 2; i <= n - 1; ++i) {
    lp[ix("l", i)] = p.mv(i) * Vi(i - 1) * Wi(i) / (Vi(i) * Wi(i - 1));
    lp[ix("lb", i)] = p.mb(i) * Vi(i - 1) / Vi(i);
    mp[ix("l", i)] = p.lv(i) * Si(i - 1) / Si(i);
    mp[ix("lb", i)] = p.lb(i) * Si(i - 1) * Wi(i) / (Si(i) * Wi(i - 1));
  }
  lp[ix("l", n)] = p.mv(n) * Vi(n - 1) / Si(n - 1);
  mp[ix("l", n)] = p.lv(n) * Si(n - 1) / Vi(n - 1);
  place(r, lp, mp);
  return r;
}

RMap make_a1(int n) {
  RMap r;
  r.type = {Family::A1, n};
  r.model = build_model(r.type, ModelKind::B);
  const int N = n + 1;
  auto wrap = [N](int k) { return (k - 1 + 2 * N) % N + 1; };
  auto a = [&](int k) { return 1 / V(kFirst + ix("l", wrap(k))); };
  auto b = [&](int k) { return 1 / V(kSecond + ix("l", wrap(k))); };
  std::vector<Expr> P(static_cast<size_t>(N + 1));
  for (int i = 1; i <= N; ++i) {
    std::vector<Expr> s;
    for (int k = 1; k <= N; ++k) {
      std::vector<Expr> f;
      for (int j = 1; j < k; ++j) f.push_back(a(i + j));
      for (int j = k + 1; j <= N; ++j) f.push_back(b(i + j));
      s.push_back(Expr::product(f));
    }
    P[static_cast<size_t>(i)] = Expr::sum(s);
  }
  auto Pi = [&](int i) { return P[static_cast<size_t>(wrap(i))]; };
  std::map<std::string, Expr> lp, mp;
  for (int i = 1; i <= N; ++i) {
    lp[ix("l", i)] = V(kSecond + ix("l", i)) * Pi(i) / Pi(i - 1);
    mp[ix("l", i)] = V(kFirst + ix("l", i)) * Pi(i - 1) / Pi(i);
  }
  place(r, lp, mp);
  return r;
}

// eta^{-1} o R_host o (eta, eta).
RMap make_folded(const TypeId& t) {
  RMap r;
  r.type = t;
  r.model = build_model(t, ModelKind::B);
  const RMap& host = r_map(host_type(t));
  const PointMap& eta = eta_map(t);
  const PointMap& inv = eta_inverse_map(t);
  const bool sq = host_spectral_squared(t);

  std::map<std::string, Expr> bind;
  for (auto* pre : {&kFirst, &kSecond}) {
    Expr Lf = V(*pre + "L");
    Expr Lh = sq ? pow(Lf, 2) : Lf;
    auto own = prefix_bindings(*r.model, *pre);
    Substitution into(own);
    for (size_t k = 0; k < host.model->coords.size(); ++k) bind[*pre + host.model->coords[k]] = into(eta.out[k]);
    bind[*pre + "L"] = Lh;
  }
  Substitution compose(bind);
  std::vector<Expr> hout = compose(host.out);
  const size_t K = host.model->coords.size();

  std::map<std::string, Expr> lp, mp;
  for (int side = 0; side < 2; ++side) {
    std::map<std::string, Expr> back;
    for (size_t k = 0; k < K; ++k) back[host.model->coords[k]] = hout[static_cast<size_t>(side) * K + k];
    Substitution s(back);
    for (size_t k = 0; k < r.model->coords.size(); ++k) (side == 0 ? lp : mp)[r.model->coords[k]] = s(inv.out[k]);
  }
  place(r, lp, mp);
  return r;
}

std::vector<Scalar> r_input_values(const GCPoint& l, const GCPoint& m) {
  std::vector<Scalar> in = l.coords;
  in.push_back(l.L);
  in.insert(in.end(), m.coords.begin(), m.coords.end());
  in.push_back(m.L);
  return in;
}

}  // namespace

const VWFamily& d1_vw(int n) {
  static std::mutex mu;
  static std::map<int, VWFamily> cache;
  check_rank({Family::D1, n});
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_vw(n)).first;
  return it->second;
}

bool has_r_map(const TypeId& t) { return t.family != Family::A2evenDagger; }

const RMap& r_map(const TypeId& t) {
  check_rank(t);
  if (!has_r_map(t)) throw UnsupportedModel("no R map for " + family_id(t.family));
  static std::recursive_mutex mu;
  static std::map<std::pair<int, int>, RMap> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(t.family), t.n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  RMap r;
  switch (t.family) {
    case Family::A1: r = make_a1(t.n); break;
    case Family::D1: r = make_d1(t.n); break;
    default: r = make_folded(t); break;
  }
  return cache.emplace(key, std::move(r)).first->second;
}

std::pair<GCPoint, GCPoint> apply_R(const GCPoint& l, const GCPoint& m) {
  if (!(l.type == m.type) || l.kind != ModelKind::B || m.kind != ModelKind::B)
    throw std::invalid_argument("R needs two B points of one type");
  const RMap& r = r_map(l.type);
  auto out = r.prog.run<RationalSemiring>(r_input_values(l, m));
  const size_t K = r.model->coords.size();
  GCPoint lp{l.type, ModelKind::B, m.L, {out.begin(), out.begin() + static_cast<long>(K)}};
  GCPoint mp{l.type, ModelKind::B, l.L, {out.begin() + static_cast<long>(K), out.end()}};
  return {lp, mp};
}

std::pair<GCPoint, GCPoint> apply_R_V(const GCPoint& x, const GCPoint& y) {
  if (x.kind != ModelKind::V || y.kind != ModelKind::V) throw std::invalid_argument("expected V points");
  auto [lp, mp] = apply_R(iso_Xi(x.type, XiDirection::VtoB, x), iso_Xi(y.type, XiDirection::VtoB, y));
  return {iso_Xi(x.type, XiDirection::BtoV, lp), iso_Xi(x.type, XiDirection::BtoV, mp)};
}

std::pair<std::vector<long long>, std::vector<long long>> apply_R_trop(const TypeId& t, const std::vector<long long>& a,
                                                                      long long la, const std::vector<long long>& b,
                                                                      long long lb) {
  const RMap& r = r_map(t);
  const size_t K = r.model->coords.size();
  if (a.size() != K || b.size() != K) throw std::invalid_argument("wrong lattice dimension");
  std::vector<long long> in = a;
  in.push_back(la);
  in.insert(in.end(), b.begin(), b.end());
  in.push_back(lb);
  auto out = r.prog.run<TropicalSemiring>(in);
  return {{out.begin(), out.begin() + static_cast<long>(K)}, {out.begin() + static_cast<long>(K), out.end()}};
}

namespace {

const Program& vw_program(int n) {
  static std::mutex mu;
  static std::map<int, Program> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const VWFamily& f = d1_vw(n);
  std::vector<Expr> outs = f.V;
  outs.insert(outs.end(), f.Vstar.begin(), f.Vstar.end());
  outs.insert(outs.end(), f.W.begin(), f.W.end());
  return cache.emplace(n, Program(r_inputs(*build_model({Family::D1, n}, ModelKind::B)), outs)).first->second;
}

std::vector<Scalar> vw_values(int n, const GCPoint& l, const GCPoint& m) {
  if (l.type != TypeId{Family::D1, n} || m.type != l.type) throw std::invalid_argument("expected B(d1) points");
  return vw_program(n).run<RationalSemiring>(r_input_values(l, m));
}

}  // namespace

Scalar w_difference_form(int n, int i, const GCPoint& l, const GCPoint& m) {
  auto v = vw_values(n, l, m);
  const Scalar& Vi = v[static_cast<size_t>(i)];
  const Scalar& Si = v[static_cast<size_t>(n + i)];
  return Vi * Si + (m.L - l.L) * Si + (l.L - m.L) * Vi;
}

Scalar w_positive_form(int n, int i, const GCPoint& l, const GCPoint& m) {
  return vw_values(n, l, m)[static_cast<size_t>(2 * n + i)];
}

Report w_form_report(const TypeId& t, int samples, Sampler& smp) {
  Report r;
  if (t.family == Family::A1 || !has_r_map(t)) return r;
  auto md = build_model(t, ModelKind::B);
  const bool folded = t.family != Family::D1;
  const int n = folded ? host_rank(t) : t.n;
  Tally skip;
  int done = 0;
  for (int attempt = 0; done < samples && attempt < samples * (kMaxResample + 1); ++attempt) {
    try {
      Scalar L = smp.draw(), M = smp.draw();
      if (L == M) continue;
      GCPoint l = sample_point(*md, smp, L), m = sample_point(*md, smp, M);
      if (folded) {
        l = eta_embed(t, l);
        m = eta_embed(t, m);
      }
      for (int i = 1; i <= n - 2; ++i)
        r["w-positive-form"].record(w_positive_form(n, i, l, m) == w_difference_form(n, i, l, m),
                                    "i=" + std::to_string(i));
      ++done;
    } catch (const DomainError&) {
      ++skip.skipped;
    }
  }
  r["w-positive-form"].skipped += skip.skipped;
  return r;
}

Report verify_R_properties(const TypeId& t, const RSuiteConfig& cfg, Sampler& smp) {
  Report r;
  auto md = build_model(t, ModelKind::B);
  const bool matrix = t.family == Family::A1 || t.family == Family::D1;
  Tally skip;
  auto pair_of = [](const std::pair<GCPoint, GCPoint>& p) { return ProductPoint{{p.first, p.second}}; };
  for (int k = 0; k < cfg.samples; ++k) {
    for (int attempt = 0; attempt <= kMaxResample; ++attempt) {
      try {
        GCPoint x = sample_point(*md, smp, cfg.L), y = sample_point(*md, smp, cfg.M);
        GCPoint z = sample_point(*md, smp, cfg.K), y0 = sample_point(*md, smp, cfg.L);
        Scalar c = smp.draw();
        auto img = apply_R(x, y);
        ProductPoint src{{x, y}}, dst = pair_of(img);
        for (int i = 0; i < md->index_count(); ++i) {
          std::string at = "i=" + std::to_string(i);
          ProductPoint moved = product_apply_e(*md, src, i, c);
          r["R-e"].record(pair_of(apply_R(moved.factors[0], moved.factors[1])) == product_apply_e(*md, dst, i, c), at);
          auto s0 = product_structure_functions(*md, src, i), s1 = product_structure_functions(*md, dst, i);
          r["R-eps"].record(s0.eps == s1.eps, at);
          r["R-gamma"].record(s0.gamma == s1.gamma, at);
        }
        r["inversion"].record(pair_of(apply_R(img.first, img.second)) == src);
        r["identity"].record(pair_of(apply_R(x, y0)) == ProductPoint{{x, y0}});
        r["spectral-swap"].record(constraint_holds(*md, img.first) && constraint_holds(*md, img.second) &&
                                  img.first.L == cfg.M && img.second.L == cfg.L);
        // R12 R23 R12 = R23 R12 R23 on (x, y, z)
        auto [y1, x1] = apply_R(x, y);
        auto [z2, x2] = apply_R(x1, z);
        auto [z3, y3] = apply_R(y1, z2);
        auto [zb, yb] = apply_R(y, z);
        auto [zc, xc] = apply_R(x, zb);
        auto [yd, xd] = apply_R(xc, yb);
        r["YBE"].record(z3 == zc && y3 == yd && x2 == xd);
        if (matrix) {
          r["matrix-identity"].record(check_r_matrix_identity(x, y, img.first, img.second));
          if (k == 0) r.merge(uniqueness_perturbation(x, y, img.first, img.second));
        }
        break;
      } catch (const DomainError&) {
        ++skip.skipped;
      }
    }
  }
  return r;
}

Report restriction_check(const TypeId& t, const RSuiteConfig& cfg, Sampler& smp) {
  Report r;
  auto md = build_model(t, ModelKind::B);
  const Sigma sg = folding_involution(t);
  Tally skip;
  for (int k = 0; k < cfg.samples; ++k) {
    for (int attempt = 0; attempt <= kMaxResample; ++attempt) {
      try {
        GCPoint x = sample_point(*md, smp, cfg.L), y = sample_point(*md, smp, cfg.M);
        GCPoint hx = eta_embed(t, x), hy = eta_embed(t, y);
        auto [hl, hm] = apply_R(hx, hy);
        r["fixed-variety"].record(apply_involution(sg, hl) == hl && apply_involution(sg, hm) == hm);
        auto [fl, fm] = apply_R(x, y);
        r["eta-intertwine"].record(eta_embed(t, fl) == hl && eta_embed(t, fm) == hm);
        break;
      } catch (const DomainError&) {
        ++skip.skipped;
      }
    }
  }
  return r;
}

Report v_model_r_check(const TypeId& t, const RSuiteConfig& cfg, Sampler& smp) {
  Report r;
  auto vm = build_model(t, ModelKind::V), bm = build_model(t, ModelKind::B);
  const auto& to_v = xi_map(t, XiDirection::BtoV);
  // V level L needs B spectral L^2 where Xi takes a square root
  auto level = [&](const Scalar& L) {
    return apply_map(to_v, sample_point(*bm, smp, to_v.rule == SpectralRule::Sqrt ? L * L : L));
  };
  Tally skip;
  auto pair_of = [](const std::pair<GCPoint, GCPoint>& p) { return ProductPoint{{p.first, p.second}}; };
  for (int k = 0; k < cfg.samples; ++k) {
    for (int attempt = 0; attempt <= kMaxResample; ++attempt) {
      try {
        GCPoint x = level(cfg.L), y = level(cfg.M);
        Scalar c = smp.draw();
        auto img = apply_R_V(x, y);
        ProductPoint src{{x, y}}, dst = pair_of(img);
        for (int i = 0; i < vm->index_count(); ++i) {
          std::string at = "i=" + std::to_string(i);
          ProductPoint moved = product_apply_e(*vm, src, i, c);
          r["V-R-e"].record(pair_of(apply_R_V(moved.factors[0], moved.factors[1])) == product_apply_e(*vm, dst, i, c),
                            at);
          auto s0 = product_structure_functions(*vm, src, i), s1 = product_structure_functions(*vm, dst, i);
          r["V-R-eps"].record(s0.eps == s1.eps, at);
          r["V-R-gamma"].record(s0.gamma == s1.gamma, at);
        }
        r["V-inversion"].record(pair_of(apply_R_V(img.first, img.second)) == src);
        break;
      } catch (const DomainError&) {
        ++skip.skipped;
      }
    }
  }
  return r;
}

}  // namespace gc
