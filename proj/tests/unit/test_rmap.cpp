#include "helpers.hpp"

using namespace gct;

namespace {
const TypeId D1_4{Family::D1, 4};

void check_coords(const GCPoint& p, const std::map<std::string, std::string>& want) {
  for (auto& [k, v] : want) {
    INFO(k);
    CHECK(at(p, k) == q(v));
  }
}
}  // namespace

TEST_CASE("V and W families of D1") {
  const VWFamily& f = d1_vw(4);
  CHECK(f.terms_per_V == 12);
  std::map<std::string, Scalar> env{{kFirst + "L", 1}, {kSecond + "L", 1}};
  auto m = build_model(D1_4, ModelKind::B);
  for (auto& c : m->coords) env[kFirst + c] = env[kSecond + c] = 1;
  CHECK(eval_rational(f.V[0], env) == 12);
}

TEST_CASE("R of D1_4 on frozen points") {
  GCPoint l = point(D1_4, ModelKind::B, 2,
                    {{"l1", 2}, {"l2", q("1/3")}, {"l3", q("3/2")}, {"lb1", 5}, {"lb2", 4}, {"lb3", q("1/2")}});
  GCPoint m = point(D1_4, ModelKind::B, 3,
                    {{"l1", q("1/2")}, {"l2", 3}, {"l3", 2}, {"lb1", q("1/5")}, {"lb2", q("7/3")}, {"lb3", 1}});
  CHECK(at(l, "l4") == q("1/5"));
  CHECK(at(m, "l4") == q("15/7"));
  auto [lp, mp] = apply_R(l, m);
  CHECK(lp.L == 3);
  CHECK(mp.L == 2);
  check_coords(lp, {{"l1", "6812/3329"},
                    {"l2", "47159143311/137411902420"},
                    {"l3", "3920695/2698316"},
                    {"l4", "2301/11585"},
                    {"lb1", "17030/3329"},
                    {"lb2", "13316/2369"},
                    {"lb3", "2369/4602"}});
  check_coords(mp, {{"l1", "17030/34137"},
                    {"l2", "3793/1267"},
                    {"l3", "3258/1655"},
                    {"l4", "1655/767"},
                    {"lb1", "6812/34137"},
                    {"lb2", "17910747029/10498756580"},
                    {"lb3", "1249443/1349158"}});
  CHECK(check_r_matrix_identity(l, m, lp, mp));
  CHECK(constraint_holds(*build_model(D1_4, ModelKind::B), lp));
}

TEST_CASE("R of A1_2 on frozen points") {
  TypeId t{Family::A1, 2};
  GCPoint l = point(t, ModelKind::B, 2, {{"l1", 3}, {"l2", q("1/2")}, {"l3", q("4/3")}});
  GCPoint m = point(t, ModelKind::B, 5, {{"l1", q("2/3")}, {"l2", 4}, {"l3", q("15/8")}});
  auto [lp, mp] = apply_R(l, m);
  CHECK(lp.coords == std::vector<Scalar>{q("159/44"), q("65/106"), q("88/39")});
  CHECK(mp.coords == std::vector<Scalar>{q("88/159"), q("212/65"), q("195/176")});
  CHECK(lp.L == 5);
  CHECK(check_r_matrix_identity(l, m, lp, mp));
}

TEST_CASE("R of B1_2 on frozen points") {
  TypeId t{Family::B1, 2};
  GCPoint l = point(t, ModelKind::B, 2, {{"m1", 3}, {"m2", q("16/15")}, {"mb1", q("1/2")}, {"mb2", q("5/4")}});
  GCPoint m = point(t, ModelKind::B, 3, {{"m1", 2}, {"m2", q("63/4")}, {"mb1", q("2/7")}, {"mb2", q("1/3")}});
  auto [lp, mp] = apply_R(l, m);
  check_coords(lp, {{"m1", "314367/98069"},
                    {"m2", "71750418608/52154009245"},
                    {"mb1", "99541/196138"},
                    {"mb2", "490345/365816"}});
  check_coords(mp, {{"m1", "199082/105429"},
                    {"m2", "2214009/182908"},
                    {"mb1", "209578/738003"},
                    {"mb2", "3213967922/10430801849"}});
}

TEST_CASE("R at equal spectral parameters is the identity") {
  Sampler s(61);
  for (Family f : {Family::A1, Family::D1, Family::B1, Family::A2odd, Family::D2, Family::A2even}) {
    TypeId t{f, 3};
    auto m = build_model(t, ModelKind::B);
    GCPoint x = sample_point(*m, s, Scalar(2)), y = sample_point(*m, s, Scalar(2));
    auto [a, b] = apply_R(x, y);
    CHECK(a == x);
    CHECK(b == y);
  }
}

TEST_CASE("R maps the unit pair to a unit pair at equal levels") {
  auto [a, b] = apply_R(unit_point(D1_4, ModelKind::B), unit_point(D1_4, ModelKind::B));
  for (auto& v : a.coords) CHECK(v == 1);
  for (auto& v : b.coords) CHECK(v == 1);
}

TEST_CASE("R is an involution and keeps the constraints") {
  Sampler s(62);
  for (Family f : {Family::A1, Family::D1, Family::B1, Family::A2odd, Family::D2, Family::A2even}) {
    TypeId t{f, 3};
    auto m = build_model(t, ModelKind::B);
    GCPoint x = sample_point(*m, s, Scalar(2)), y = sample_point(*m, s, Scalar(5));
    auto [a, b] = apply_R(x, y);
    CHECK(constraint_holds(*m, a));
    CHECK(constraint_holds(*m, b));
    auto [c, d] = apply_R(a, b);
    CHECK(c == x);
    CHECK(d == y);
  }
}

TEST_CASE("R suites on small ranks") {
  Sampler s(63);
  RSuiteConfig cfg;
  cfg.samples = 3;
  for (TypeId t : {TypeId{Family::A1, 2}, TypeId{Family::D1, 4}, TypeId{Family::A2odd, 3}}) {
    INFO(type_label(t));
    require_ok(verify_R_properties(t, cfg, s));
    require_ok(v_model_r_check(t, cfg, s));
  }
  require_ok(restriction_check({Family::D2, 2}, cfg, s));
  require_ok(w_form_report({Family::D1, 4}, 5, s));
}
