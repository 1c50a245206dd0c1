#include "gcrystal/ultradisc.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <map>
#include <sstream>
#include <unordered_set>

namespace gc {

namespace {

struct LatticeHash {
  size_t operator()(const Lattice& v) const {
    size_t h = 1469598103934665603ull;
    for (long long x : v) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
    return h;
  }
};

std::string show(const Lattice& b) {
  std::ostringstream o;
  o << "(";
  for (size_t k = 0; k < b.size(); ++k) o << (k ? "," : "") << b[k];
  o << ")";
  return o.str();
}

}  // namespace

TropCrystal::TropCrystal(std::shared_ptr<const Model> m, long long level) : m_(std::move(m)), level_(level) {
  std::vector<Expr> phis;
  for (int i = 0; i < m_->index_count(); ++i)
    phis.push_back(m_->gamma[static_cast<size_t>(i)] * m_->eps[static_cast<size_t>(i)]);
  std::vector<std::string> in = m_->coords;
  in.push_back("L");
  phi_prog_ = Program(in, phis);
}

Lattice TropCrystal::phi(const Lattice& b) const {
  Lattice in = b;
  in.push_back(level_);
  return phi_prog_.run<TropicalSemiring>(in);
}

bool TropCrystal::on_lattice(const Lattice& b) const {
  if (b.size() != m_->coords.size()) return false;
  if (!m_->has_constraint()) return true;
  long long s = 0;
  for (size_t k = 0; k < b.size(); ++k) s += m_->weights[k] * b[k];
  return s == m_->target_power * level_;
}

Lattice TropCrystal::complete(Lattice f) const {
  const size_t D = m_->coords.size();
  if (!m_->has_constraint()) {
    f.resize(D, 0);
    return f;
  }
  const size_t s = static_cast<size_t>(m_->solve);
  f.resize(D - 1, 0);
  Lattice b(D);
  long long acc = 0;
  for (size_t k = 0, j = 0; k < D; ++k) {
    if (k == s) continue;
    b[k] = f[j++];
    acc += m_->weights[k] * b[k];
  }
  long long rest = m_->target_power * level_ - acc;
  const int w = m_->weights[s];
  if (rest % w != 0) throw std::logic_error("constraint has no integer solution");
  b[s] = rest / w;
  return b;
}

std::vector<Lattice> TropCrystal::box(int r) const {
  const size_t free = m_->coords.size() - (m_->has_constraint() ? 1 : 0);
  std::vector<Lattice> out;
  Lattice f(free, -r);
  while (true) {
    out.push_back(complete(f));
    size_t k = 0;
    while (k < free && f[k] == r) f[k++] = -r;
    if (k == free) break;
    ++f[k];
  }
  return out;
}

bool TropCrystal::in_box(const Lattice& b, int r) const {
  for (size_t k = 0; k < b.size(); ++k) {
    if (m_->has_constraint() && static_cast<int>(k) == m_->solve) continue;
    if (b[k] < -r || b[k] > r) return false;
  }
  return true;
}

Report check_crystal_axioms(const TropCrystal& tc, int radius) {
  Report r;
  const int N = tc.indices();
  const IntMatrix& A = tc.model().cartan.a;
  for (const Lattice& b : tc.box(radius)) {
    Lattice st = tc.structure(b), ph = tc.phi(b);
    for (int i = 0; i < N; ++i) {
      const size_t si = static_cast<size_t>(i);
      // failure notes are built only when needed
      auto rec = [&](const char* key, bool ok) {
        if (ok)
          ++r[key].pass;
        else
          r[key].record(false, show(b) + " i=" + std::to_string(i));
      };
      rec("phi", ph[si] == st[si] + st[static_cast<size_t>(N) + si]);
      rec("unit", tc.e(i, 0, b) == b);
      Lattice up = tc.e(i, 1, b), down = tc.e(i, -1, b);
      rec("inverse", tc.e(i, -1, up) == b && tc.e(i, 1, down) == b);
      rec("additive", tc.e(i, 1, up) == tc.e(i, 2, b));
      rec("lattice", tc.on_lattice(up));
      for (long long k : {1LL, -1LL}) {
        const Lattice& q = k == 1 ? up : down;
        Lattice sq = tc.structure(q);
        bool wt_ok = true;
        for (int j = 0; j < N; ++j)
          wt_ok = wt_ok && sq[static_cast<size_t>(j)] ==
                               st[static_cast<size_t>(j)] + k * A[si][static_cast<size_t>(j)];
        rec("wt", wt_ok);
        rec("eps", sq[static_cast<size_t>(N) + si] == st[static_cast<size_t>(N) + si] - k);
      }
    }
  }
  return r;
}

Connectivity connectivity_sample(const TropCrystal& tc, int radius, int slack, size_t cap) {
  // Edges are undirected because e~^{+1} and e~^{-1} are mutually inverse, so a
  // point joins the certified component as soon as a search from it meets it.
  // Each search is best-first towards the origin.
  Connectivity c;
  std::vector<Lattice> pts = tc.box(radius);
  c.box_points = pts.size();
  auto norm = [&](const Lattice& b) {
    long long s = 0;
    for (size_t k = 0; k < b.size(); ++k)
      if (!tc.model().has_constraint() || static_cast<int>(k) != tc.model().solve) s += b[k] < 0 ? -b[k] : b[k];
    return s;
  };
  std::stable_sort(pts.begin(), pts.end(), [&](const Lattice& x, const Lattice& y) { return norm(x) < norm(y); });
  std::unordered_set<Lattice, LatticeHash> certified{tc.origin()};
  using Item = std::pair<long long, size_t>;
  for (const Lattice& p : pts) {
    if (certified.count(p)) {
      ++c.reached;
      continue;
    }
    std::vector<Lattice> nodes{p};
    std::unordered_set<Lattice, LatticeHash> seen{p};
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> open;
    open.emplace(norm(p), 0);
    bool hit = false;
    while (!open.empty() && !hit && nodes.size() < cap) {
      const Lattice b = nodes[open.top().second];
      open.pop();
      for (int i = 0; i < tc.indices() && !hit; ++i)
        for (long long k : {1LL, -1LL}) {
          Lattice q = tc.e(i, k, b);
          if (!tc.in_box(q, radius + slack) || !seen.insert(q).second) continue;
          hit = certified.count(q) > 0;
          open.emplace(norm(q), nodes.size());
          nodes.push_back(std::move(q));
          if (hit) break;
        }
    }
    c.visited += nodes.size();
    if (!hit) continue;
    ++c.reached;
    for (auto& q : nodes) certified.insert(std::move(q));
  }
  c.connected = c.reached == c.box_points;
  return c;
}

std::pair<Lattice, Lattice> tensor_e(const TropCrystal& cx, const TropCrystal& cy, int i, long long k,
                                     const Lattice& a, const Lattice& b) {
  const size_t si = static_cast<size_t>(i);
  long long phx = cx.phi(a)[si];
  long long ey = cy.structure(b)[static_cast<size_t>(cy.indices()) + si];
  long long k1 = std::max(k + phx, ey) - std::max(phx, ey);
  return {cx.e(i, k1, a), cy.e(i, k - k1, b)};
}

Lattice tensor_structure(const TropCrystal& cx, const TropCrystal& cy, const Lattice& a, const Lattice& b) {
  const size_t N = static_cast<size_t>(cx.indices());
  Lattice sa = cx.structure(a), sb = cy.structure(b), pa = cx.phi(a);
  Lattice out(2 * N);
  for (size_t i = 0; i < N; ++i) {
    out[i] = sa[i] + sb[i];
    out[N + i] = std::max(sa[N + i], sa[N + i] + sb[N + i] - pa[i]);
  }
  return out;
}

Report check_tensor_rule(std::shared_ptr<const Model> m, long long lx, long long ly, int samples, Sampler& smp) {
  Report r;
  TropCrystal cx(m, lx), cy(m, ly);
  PairExprs pe = pair_exprs(*m, kFirst, kSecond);
  std::vector<std::string> in;
  for (auto& c : m->coords) in.push_back(kFirst + c);
  in.push_back(kFirst + "L");
  for (auto& c : m->coords) in.push_back(kSecond + c);
  in.push_back(kSecond + "L");
  in.push_back("c");
  std::vector<Program> progs;
  for (auto& row : pe.action) progs.emplace_back(in, row);
  std::vector<Expr> st = pe.gamma;
  st.insert(st.end(), pe.eps.begin(), pe.eps.end());
  Program sprog(std::vector<std::string>(in.begin(), in.end() - 1), st);

  auto box_a = cx.box(2), box_b = cy.box(2);
  const size_t D = m->coords.size();
  for (int s = 0; s < samples; ++s) {
    const Lattice& a = box_a[static_cast<size_t>(smp.draw_int(0, static_cast<long long>(box_a.size()) - 1))];
    const Lattice& b = box_b[static_cast<size_t>(smp.draw_int(0, static_cast<long long>(box_b.size()) - 1))];
    Lattice base = a;
    base.push_back(lx);
    base.insert(base.end(), b.begin(), b.end());
    base.push_back(ly);
    r["structure"].record(sprog.run<TropicalSemiring>(base) == tensor_structure(cx, cy, a, b), show(a) + show(b));
    for (int i = 0; i < cx.indices(); ++i)
      for (long long k = -2; k <= 2; ++k) {
        Lattice inp = base;
        inp.push_back(k);
        Lattice ud = progs[static_cast<size_t>(i)].run<TropicalSemiring>(inp);
        auto [ta, tb] = tensor_e(cx, cy, i, k, a, b);
        bool ok = std::equal(ta.begin(), ta.end(), ud.begin()) &&
                  std::equal(tb.begin(), tb.end(), ud.begin() + static_cast<long>(D));
        r["tensor-rule"].record(ok, show(a) + show(b) + " i=" + std::to_string(i) + " k=" + std::to_string(k));
      }
  }
  return r;
}

namespace {

// Rows of (first coords, first level, second coords, second level) for the
// batched R program.
struct RBatch {
  size_t K;
  std::vector<long long> in, out;
  explicit RBatch(size_t k) : K(k) {}
  void resize(size_t rows) {
    in.resize(rows * (2 * K + 2));
    out.resize(rows * 2 * K);
  }
  long long* row(size_t j) { return &in[j * (2 * K + 2)]; }
  void put(size_t j, const long long* a, long long la, const long long* b, long long lb) {
    long long* p = row(j);
    std::copy(a, a + K, p);
    p[K] = la;
    std::copy(b, b + K, p + K + 1);
    p[2 * K + 1] = lb;
  }
  // output halves: first is the new first factor
  const long long* first(size_t j) const { return &out[j * 2 * K]; }
  const long long* second(size_t j) const { return &out[j * 2 * K + K]; }
};

// All triples of the three boxes. Per (x, y) four batches over z; R(y, z) is
// tabulated once.
void yb_exhaustive(const TypeId& t, long long l1, long long l2, long long l3, const std::vector<Lattice>& bx,
                   const std::vector<Lattice>& by, const std::vector<Lattice>& bz, Tally& tally) {
  const RMap& rm = r_map(t);
  const size_t K = rm.model->coords.size(), Z = bz.size();
  auto run = [&](RBatch& b, size_t rows) { rm.prog.run_tropical_batch(b.in.data(), rows, b.out.data()); };

  RBatch yz(K);
  std::vector<long long> table(by.size() * Z * 2 * K);
  for (size_t yi = 0; yi < by.size(); ++yi) {
    yz.resize(Z);
    for (size_t zi = 0; zi < Z; ++zi) yz.put(zi, by[yi].data(), l2, bz[zi].data(), l3);
    run(yz, Z);
    std::copy(yz.out.begin(), yz.out.end(), table.begin() + static_cast<long>(yi * Z * 2 * K));
  }

  RBatch s1(K), s2(K), s3(K), s4(K), xy(K);
  for (RBatch* b : {&s1, &s2, &s3, &s4}) b->resize(Z);
  xy.resize(1);
  for (const Lattice& x : bx)
    for (size_t yi = 0; yi < by.size(); ++yi) {
      const Lattice& y = by[yi];
      xy.put(0, x.data(), l1, y.data(), l2);
      run(xy, 1);
      const long long *y1 = xy.first(0), *x1 = xy.second(0);
      const long long* tab = &table[yi * Z * 2 * K];
      for (size_t zi = 0; zi < Z; ++zi) {
        s1.put(zi, x1, l1, bz[zi].data(), l3);                       // (z2, x2)
        s3.put(zi, x.data(), l1, tab + zi * 2 * K, l3);              // (zc, xc)
      }
      run(s1, Z);
      run(s3, Z);
      for (size_t zi = 0; zi < Z; ++zi) {
        s2.put(zi, y1, l2, s1.first(zi), l3);                        // (z3, y3)
        s4.put(zi, s3.second(zi), l1, tab + zi * 2 * K + K, l2);     // (yd, xd)
      }
      run(s2, Z);
      run(s4, Z);
      for (size_t zi = 0; zi < Z; ++zi) {
        bool ok = std::equal(s2.first(zi), s2.first(zi) + K, s3.first(zi)) &&
                  std::equal(s2.second(zi), s2.second(zi) + K, s4.first(zi)) &&
                  std::equal(s1.second(zi), s1.second(zi) + K, s4.second(zi));
        if (ok)
          ++tally.pass;
        else
          tally.record(false, show(x) + show(y) + show(bz[zi]));
      }
    }
}

}  // namespace

Report combinatorial_r_check(const TypeId& t, const CombRConfig& cfg, Sampler& smp) {
  Report r;
  auto m = build_model(t, ModelKind::B);
  std::map<long long, TropCrystal> tc;
  for (long long lv : cfg.levels) tc.emplace(lv, TropCrystal(m, lv));
  std::map<long long, std::vector<Lattice>> boxes;
  for (auto& [lv, c] : tc) boxes[lv] = c.box(cfg.radius);
  const int N = m->index_count();
  auto R = [&](const Lattice& a, long long la, const Lattice& b, long long lb) { return apply_R_trop(t, a, la, b, lb); };

  for (long long la : cfg.levels)
    for (long long lb : cfg.levels) {
      const TropCrystal &cx = tc.at(la), &cy = tc.at(lb);
      for (const Lattice& a : boxes[la])
        for (const Lattice& b : boxes[lb]) {
          auto [ap, bp] = R(a, la, b, lb);
          std::string at = show(a) + show(b) + " levels " + std::to_string(la) + "," + std::to_string(lb);
          if (la == lb) {
            r["identity"].record(ap == a && bp == b, at);
            continue;
          }
          r["lattice"].record(cy.on_lattice(ap) && cx.on_lattice(bp), at);
          r["inversion"].record(R(ap, lb, bp, la) == std::make_pair(a, b), at);
          Lattice s0 = tensor_structure(cx, cy, a, b), s1 = tensor_structure(cy, cx, ap, bp);
          r["R-wt"].record(std::equal(s0.begin(), s0.begin() + N, s1.begin()), at);
          r["R-eps"].record(std::equal(s0.begin() + N, s0.end(), s1.begin() + N), at);
          for (int i = 0; i < N; ++i)
            for (long long k : {1LL, -1LL}) {
              auto [ea, eb] = tensor_e(cx, cy, i, k, a, b);
              r["R-e"].record(R(ea, la, eb, lb) == tensor_e(cy, cx, i, k, ap, bp),
                              at + " i=" + std::to_string(i) + " k=" + std::to_string(k));
            }
        }
    }

  if (cfg.levels.size() >= 3) {
    const long long l1 = cfg.levels[0], l2 = cfg.levels[1], l3 = cfg.levels[2];
    const auto &bx = boxes[l1], &by = boxes[l2], &bz = boxes[l3];
    const long long total = static_cast<long long>(bx.size() * by.size() * bz.size());
    const std::string key = total <= cfg.triple_limit ? "YB" : "YB-sampled";
    auto ybe = [&](const Lattice& x, const Lattice& y, const Lattice& z) {
      auto [y1, x1] = R(x, l1, y, l2);
      auto [z2, x2] = R(x1, l1, z, l3);
      auto [z3, y3] = R(y1, l2, z2, l3);
      auto [zb, yb] = R(y, l2, z, l3);
      auto [zc, xc] = R(x, l1, zb, l3);
      auto [yd, xd] = R(xc, l1, yb, l2);
      r[key].record(z3 == zc && y3 == yd && x2 == xd, show(x) + show(y) + show(z));
    };
    if (total <= cfg.triple_limit) {
      yb_exhaustive(t, l1, l2, l3, bx, by, bz, r[key]);
    } else {
      auto pick = [&](const std::vector<Lattice>& v) -> const Lattice& {
        return v[static_cast<size_t>(smp.draw_int(0, static_cast<long long>(v.size()) - 1))];
      };
      for (int s = 0; s < cfg.triple_samples; ++s) ybe(pick(bx), pick(by), pick(bz));
    }
  }
  return r;
}

Report degree_consistency_report(const Model& m, int samples, Sampler& smp) {
  std::vector<Expr> outs;
  std::vector<std::string> names;
  for (size_t i = 0; i < m.gamma.size(); ++i) {
    outs.push_back(m.gamma[i]);
    names.push_back("gamma" + std::to_string(i));
    outs.push_back(m.eps[i]);
    names.push_back("eps" + std::to_string(i));
  }
  for (size_t i = 0; i < m.action.size(); ++i)
    for (size_t k = 0; k < m.coords.size(); ++k) {
      outs.push_back(m.action[i][k]);
      names.push_back("e" + std::to_string(i) + "." + m.coords[k]);
    }
  std::vector<std::string> in = m.coords;
  in.push_back("L");
  in.push_back("c");
  Program prog(in, outs);
  Report r;
  for (int s = 0; s < samples; ++s) {
    std::vector<long long> ex;
    std::vector<RatFun> deg;
    for (size_t k = 0; k < in.size(); ++k) {
      ex.push_back(smp.draw_int(-5, 5));
      deg.push_back(RatFun::monomial(static_cast<int>(ex.back())));
    }
    auto trop = prog.run<TropicalSemiring>(ex);
    auto dv = prog.run<DegreeSemiring>(deg);
    for (size_t o = 0; o < outs.size(); ++o) r["degree"].record(dv[o].degree() == trop[o], names[o] + " at " + show(ex));
  }
  return r;
}

std::string crystal_dot(const TropCrystal& tc, int radius) {
  std::ostringstream o;
  auto name = [](const Lattice& b) {
    std::string s = "\"";
    for (size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k]);
    return s + "\"";
  };
  o << "digraph \"" << tc.model().label() << " level " << tc.level() << "\" {\n";
  auto pts = tc.box(radius);
  for (auto& b : pts) o << "  " << name(b) << ";\n";
  for (auto& b : pts)
    for (int i = 0; i < tc.indices(); ++i) {
      Lattice q = tc.e(i, 1, b);
      if (tc.in_box(q, radius)) o << "  " << name(b) << " -> " << name(q) << " [label=\"" << i << "\"];\n";
    }
  o << "}\n";
  return o.str();
}

}  // namespace gc
