#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gcrystal/folding.hpp"
#include "gcrystal/io.hpp"

using namespace gc;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitBadConfig = 2;

// Inline JSON, or @path to read it from a file.
json read_json(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw BadConfig("cannot read " + arg.substr(1));
    return json::parse(in);
  }
  return json::parse(arg);
}

TypeId type_of(const std::string& type, int rank) {
  try {
    TypeId t{parse_family(type), rank};
    check_rank(t);
    return t;
  } catch (const std::invalid_argument& e) {
    throw BadConfig(e.what());
  }
}

Scalar scalar_arg(const std::string& s) {
  Scalar v = parse_scalar(s);
  if (v == 0) throw BadConfig("spectral parameters must be nonzero");
  return v;
}

struct VerifyOpts {
  std::string type = "d1", suite, model, l = "2", m = "3", k = "5";
  int rank = 4, samples = 20, radius = 1;
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyOpts& o) {
  SuiteConfig cfg;
  cfg.type = type_of(o.type, o.rank);
  if (!o.model.empty()) {
    try {
      cfg.model = parse_model(o.model);
    } catch (const std::invalid_argument& e) {
      throw BadConfig(e.what());
    }
  }
  cfg.L = scalar_arg(o.l);
  cfg.M = scalar_arg(o.m);
  cfg.K = scalar_arg(o.k);
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.radius = o.radius;
  Report r = run_suite(o.suite, cfg);
  json ctx{{"suite", o.suite}, {"type", o.type}, {"n", o.rank}, {"seed", o.seed}};
  std::cout << report_jsonl(r, ctx);
  long skipped = 0;
  for (auto& [k, t] : r.checks) skipped += t.skipped;
  std::cout << "summary: " << o.suite << " on " << type_label(cfg.type) << ": " << r.checks.size() << " checks, "
            << r.total_pass() << " passed, " << r.total_fail() << " failed, " << skipped << " resampled -> "
            << (r.ok() ? "PASS" : "FAIL") << "\n";
  return r.ok() ? 0 : kExitFail;
}

int cmd_eval(const std::string& point, const std::string& op, int i, const std::string& c) {
  GCPoint p = point_from_json(read_json(point));
  auto m = build_model(p.type, p.kind);
  if (i < 0 || i >= m->index_count()) throw BadConfig("index out of range for " + m->label());
  if (op == "e") {
    std::cout << point_to_json(apply_e(*m, i, scalar_arg(c), p)).dump() << "\n";
  } else {
    auto s = structure_functions(*m, i, p);
    json out{{"i", i}, {"gamma", to_string(s.gamma)}, {"eps", to_string(s.eps)}, {"phi", to_string(s.phi)}};
    std::cout << out.dump() << "\n";
  }
  return 0;
}

int cmd_rmap(const std::string& first, const std::string& second) {
  json a = read_json(first), b = read_json(second);
  if (a.contains("level")) {
    LatticePoint x = lattice_from_json(a), y = lattice_from_json(b);
    if (!(x.type == y.type) || x.kind != ModelKind::B || y.kind != ModelKind::B)
      throw BadConfig("R acts on two B points of one type");
    auto [xp, yp] = apply_R_trop(x.type, x.coords, x.level, y.coords, y.level);
    json out{{"first", lattice_to_json({x.type, x.kind, y.level, xp})},
             {"second", lattice_to_json({x.type, x.kind, x.level, yp})}};
    std::cout << out.dump() << "\n";
    return 0;
  }
  GCPoint x = point_from_json(a), y = point_from_json(b);
  if (!(x.type == y.type) || x.kind != y.kind) throw BadConfig("R acts on two points of one model");
  if (!has_r_map(x.type)) throw BadConfig("no R map for " + type_label(x.type));
  auto [xp, yp] = x.kind == ModelKind::B ? apply_R(x, y) : apply_R_V(x, y);
  std::cout << json{{"first", point_to_json(xp)}, {"second", point_to_json(yp)}}.dump() << "\n";
  return 0;
}

int cmd_ud(const std::string& point, int i, long long k) {
  LatticePoint p = lattice_from_json(read_json(point));
  TropCrystal tc(build_model(p.type, p.kind), p.level);
  const int N = tc.indices();
  if (i >= N) throw BadConfig("index out of range");
  Lattice b = i >= 0 ? tc.e(i, k, p.coords) : p.coords;
  Lattice st = tc.structure(b);
  json out = lattice_to_json({p.type, p.kind, p.level, b});
  out["wt"] = Lattice(st.begin(), st.begin() + N);
  out["eps"] = Lattice(st.begin() + N, st.end());
  out["phi"] = tc.phi(b);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_graph(const std::string& type, int rank, const std::string& model, long long level, int radius) {
  if (radius < 0 || radius > 3) throw BadConfig("radius must be in 0..3");
  std::shared_ptr<const Model> m;
  try {
    m = build_model(type_of(type, rank), parse_model(model));
  } catch (const std::invalid_argument& e) {
    throw BadConfig(e.what());
  }
  std::cout << crystal_dot(TropCrystal(m, level), radius);
  return 0;
}

Sigma sigma_arg(const std::string& s) {
  for (Sigma x : {Sigma::S0, Sigma::S1, Sigma::S2, Sigma::S3, Sigma::S4})
    if (sigma_name(x) == s) return x;
  throw BadConfig("unknown involution " + s);
}

int cmd_mmatrix(const std::string& point, const std::string& sigma, int host, int samples, std::uint64_t seed,
                bool seeded, const std::string& j, int jn) {
  if (!point.empty()) {
    GCPoint p = point_from_json(read_json(point));
    if (p.kind != ModelKind::B) throw BadConfig("M-matrices are defined on B points");
    PolyMatrix M = p.type.family == Family::A1   ? n_matrix_A1(p)
                   : p.type.family == Family::D1 ? m_matrix_D1(p)
                                                 : throw BadConfig("M-matrices exist for a1 and d1 only");
    std::cout << M.to_json().dump() << "\n";
    return 0;
  }
  if (!j.empty()) {
    const std::vector<std::string> names{"J0", "J1", "J2", "J3", "J4"};
    auto it = std::find(names.begin(), names.end(), j);
    if (it == names.end()) throw BadConfig("unknown J matrix " + j);
    if (jn < 1) throw BadConfig("--n must be positive");
    std::cout << j_matrix(static_cast<JKind>(it - names.begin()), jn).to_json().dump() << "\n";
    return 0;
  }
  if (sigma.empty()) throw BadConfig("give --point, --j or --sigma");
  if (!seeded) throw BadConfig("--seed is required for conjugation checks");
  Sigma s = sigma_arg(sigma);
  try {
    j_for_involution(s, host);
    check_rank({Family::D1, host});
  } catch (const std::invalid_argument& e) {
    throw BadConfig(e.what());
  }
  Sampler smp(seed);
  Report r = conjugation_report(s, host, samples, smp);
  std::cout << report_jsonl(r, {{"sigma", sigma}, {"host", host}, {"seed", seed}});
  std::cout << "summary: conjugation " << sigma << " on d1_" << host << " -> " << (r.ok() ? "PASS" : "FAIL") << "\n";
  return r.ok() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine geometric crystals, tropical R maps and their ultra-discretization"};
  app.require_subcommand(1);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--type", vo.type, "a1, b1, d1, a2-odd, d2, a2-even, a2-even-dagger")->required();
  verify->add_option("--rank", vo.rank, "rank n")->required();
  verify->add_option("--suite", vo.suite, "axioms, verma, sigma-bar, iso, product, folding, mmatrix, rmap, ud, all")
      ->required();
  verify->add_option("--model", vo.model, "V, B or V2 (default: every model of the type)");
  verify->add_option("--l", vo.l, "first spectral parameter");
  verify->add_option("--m", vo.m, "second spectral parameter");
  verify->add_option("--k", vo.k, "third spectral parameter");
  verify->add_option("--samples", vo.samples, "random points per check")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vo.seed, "sampling seed")->required();
  verify->add_option("--radius", vo.radius, "lattice box radius")->check(CLI::Range(0, 3));

  std::string point, op = "e", c = "1", first, second;
  int index = 0;
  auto* eval = app.add_subcommand("eval", "apply e_i^c or evaluate gamma/eps/phi at a JSON point");
  eval->add_option("--point", point, "GCPoint JSON, or @file")->required();
  eval->add_option("--op", op, "e or structure")->check(CLI::IsMember({"e", "structure"}));
  eval->add_option("--i", index, "index")->required();
  eval->add_option("--c", c, "action parameter");

  auto* rmap = app.add_subcommand("rmap", "apply R to a pair of points (rational or lattice)");
  rmap->add_option("--first", first, "point of spectral L (or level)")->required();
  rmap->add_option("--second", second, "point of spectral M (or level)")->required();

  std::string upoint;
  int ui = -1;
  long long uk = 1;
  auto* ud = app.add_subcommand("ud", "tropical e~_i^k, wt, eps and phi on a lattice point");
  ud->add_option("--point", upoint, "LatticePoint JSON, or @file")->required();
  ud->add_option("--i", ui, "index; omit for the structure values only");
  ud->add_option("--k", uk, "power of e~_i");

  std::string gtype, gmodel = "B";
  int grank = 0, gradius = 1;
  long long glevel = 1;
  auto* graph = app.add_subcommand("graph", "crystal graph of a lattice box as DOT");
  graph->add_option("--type", gtype)->required();
  graph->add_option("--rank", grank)->required();
  graph->add_option("--model", gmodel);
  graph->add_option("--level", glevel);
  graph->add_option("--radius", gradius);

  std::string mpoint, msigma, mj;
  int mhost = 5, msamples = 25, mjn = 1;
  std::uint64_t mseed = 0;
  auto* mm = app.add_subcommand("mmatrix", "dump M or J matrices, or check J-conjugation");
  mm->add_option("--point", mpoint, "B(a1) or B(d1) point JSON, or @file");
  mm->add_option("--j", mj, "J0..J4");
  mm->add_option("--n", mjn, "size parameter of the J matrix");
  mm->add_option("--sigma", msigma, "S0..S4");
  mm->add_option("--host", mhost, "host rank of d1");
  mm->add_option("--samples", msamples)->check(CLI::PositiveNumber);
  auto* mseed_opt = mm->add_option("--seed", mseed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadConfig;
  }

  try {
    if (*verify) return cmd_verify(vo);
    if (*eval) return cmd_eval(point, op, index, c);
    if (*rmap) return cmd_rmap(first, second);
    if (*ud) return cmd_ud(upoint, ui, uk);
    if (*graph) return cmd_graph(gtype, grank, gmodel, glevel, gradius);
    if (*mm) return cmd_mmatrix(mpoint, msigma, mhost, msamples, mseed, mseed_opt->count() > 0, mj, mjn);
  } catch (const BadConfig& e) {
    std::cerr << "bad configuration: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const DomainError& e) {
    std::cerr << "outside the domain: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
  return 0;
}
