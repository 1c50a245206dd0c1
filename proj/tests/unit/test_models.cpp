#include "gcrystal/checks.hpp"
#include "gcrystal/crystal_maps.hpp"
#include "helpers.hpp"

using namespace gct;

namespace {
const TypeId A1_3{Family::A1, 3};
}

TEST_CASE("model dimensions") {
  auto dim = [](Family f, int n, ModelKind k) { return build_model({f, n}, k)->coords.size(); };
  CHECK(dim(Family::A1, 3, ModelKind::V) == 3);
  CHECK(dim(Family::B1, 3, ModelKind::V) == 5);
  CHECK(dim(Family::D1, 5, ModelKind::V) == 8);
  CHECK(dim(Family::A2odd, 3, ModelKind::V) == 5);
  CHECK(dim(Family::D2, 3, ModelKind::V) == 6);
  CHECK(dim(Family::A2even, 3, ModelKind::V) == 6);
  CHECK(dim(Family::A2evenDagger, 3, ModelKind::V2) == 6);
  CHECK(dim(Family::A1, 3, ModelKind::B) == 4);
  CHECK(dim(Family::D1, 4, ModelKind::B) == 7);
  CHECK(dim(Family::B1, 3, ModelKind::B) == 6);
  CHECK(dim(Family::D2, 3, ModelKind::B) == 7);
  CHECK(dim(Family::A2odd, 3, ModelKind::B) == 6);
  CHECK(dim(Family::A2even, 3, ModelKind::B) == 7);
  CHECK_THROWS_AS(build_model({Family::D1, 4}, ModelKind::V2), UnsupportedModel);
  CHECK_THROWS_AS(build_model({Family::A2evenDagger, 2}, ModelKind::B), UnsupportedModel);
}

TEST_CASE("A1 V-model action") {
  auto m = build_model({Family::A1, 3}, ModelKind::V);
  GCPoint x = point(A1_3, ModelKind::V, 1, {});
  CHECK(apply_e(*m, 2, 5, x).coords == std::vector<Scalar>{1, 5, 1});
  CHECK(apply_e(*m, 0, 2, x).coords == std::vector<Scalar>{q("1/2"), q("1/2"), q("1/2")});
}

TEST_CASE("A1 V-model structure functions") {
  auto m = build_model(A1_3, ModelKind::V);
  GCPoint x = point(A1_3, ModelKind::V, 3, {});
  CHECK(structure_functions(*m, 1, x).gamma == 3);
  GCPoint y = point(A1_3, ModelKind::V, 3, {{"x1", 2}, {"x2", 5}, {"x3", 4}});
  CHECK(structure_functions(*m, 1, y).gamma == 3 * 4 / Scalar(5));  // L x1^2 / x2
  CHECK(structure_functions(*m, 3, y).eps == q("1/4"));
  auto s = structure_functions(*m, 2, y);
  CHECK(s.phi == s.gamma * s.eps);
}

TEST_CASE("B1 eps_n is x_{n-1}/x_n") {
  auto m = build_model({Family::B1, 3}, ModelKind::V);
  GCPoint x = point({Family::B1, 3}, ModelKind::V, 2, {{"x2", 6}, {"x3", 4}});
  CHECK(structure_functions(*m, 3, x).eps == q("3/2"));
}

TEST_CASE("D2 rank 2 e_0 on x_0") {
  TypeId t{Family::D2, 2};
  auto m = build_model(t, ModelKind::V);
  Scalar L = 3, c = 2, x0 = q("1/2"), x1 = 5, xb1 = q("2/3");
  GCPoint x = point(t, ModelKind::V, L, {{"x0", x0}, {"x1", x1}, {"xb1", xb1}, {"x2", 7}});
  Scalar want = x0 * (c * c * x0 * x0 + L * L * x1 * xb1) / (c * (x0 * x0 + L * L * x1 * xb1));
  CHECK(at(apply_e(*m, 0, c, x), "x0") == want);
}

TEST_CASE("B(D1_4) eps_0 with l_2 = lb_2") {
  TypeId t{Family::D1, 4};
  auto m = build_model(t, ModelKind::B);
  GCPoint l = point(t, ModelKind::B, 2, {{"l1", q("3/5")}, {"l2", 7}, {"lb2", 7}, {"l3", 2}, {"lb1", 3}});
  REQUIRE(constraint_holds(*m, l));
  CHECK(structure_functions(*m, 0, l).eps == 2 * q("3/5"));
}

TEST_CASE("c = 1 acts trivially on every model") {
  Sampler s(4);
  for (Family f : {Family::A1, Family::B1, Family::D1, Family::A2odd, Family::D2, Family::A2even,
                   Family::A2evenDagger})
    for (auto& m : catalogue_models({f, min_rank(f) + 1})) {
      GCPoint p = sample_point(*m, s);
      for (int i = 0; i < m->index_count(); ++i) CHECK(apply_e(*m, i, 1, p) == p);
    }
}

TEST_CASE("B-model actions keep the constraint") {
  Sampler s(8);
  for (Family f : {Family::A1, Family::B1, Family::D1, Family::A2odd, Family::D2, Family::A2even}) {
    auto m = build_model({f, min_rank(f) + 1}, ModelKind::B);
    GCPoint p = sample_point(*m, s);
    for (int i = 0; i < m->index_count(); ++i) CHECK(constraint_holds(*m, apply_e(*m, i, s.draw(), p)));
  }
}

TEST_CASE("gamma_2 of D1 under e_0") {
  TypeId t{Family::D1, 4};
  SingleCrystal cr{build_model(t, ModelKind::V), std::nullopt};
  Sampler s(21);
  for (int k = 0; k < 50; ++k) {
    GCPoint p = cr.sample(s);
    Scalar c = s.draw();
    CHECK(cr.structure(cr.e(p, 0, c))[2] == cr.structure(p)[2] / c);
  }
}

TEST_CASE("A2even eps_0 under e_0") {
  TypeId t{Family::A2even, 2};
  auto m = build_model(t, ModelKind::V);
  Sampler s(6);
  for (int k = 0; k < 20; ++k) {
    GCPoint p = sample_point(*m, s);
    Scalar c = s.draw();
    CHECK(structure_functions(*m, 0, apply_e(*m, 0, c, p)).eps == structure_functions(*m, 0, p).eps / c);
  }
}

TEST_CASE("Verma relations") {
  Sampler s(12);
  ActionWord lhs, rhs;
  SUBCASE("commuting pair on A1_3") {
    SingleCrystal cr{build_model(A1_3, ModelKind::V), std::nullopt};
    for (int k = 0; k < 50; ++k) {
      GCPoint p = cr.sample(s);
      auto rel = verma_relation(0, 0, 1, 3, s.draw(), s.draw());
      REQUIRE(rel);
      CHECK(apply_word(cr, p, rel->first) == apply_word(cr, p, rel->second));
    }
  }
  SUBCASE("braid pair (2,3) on D1_4") {
    SingleCrystal cr{build_model({Family::D1, 4}, ModelKind::V), std::nullopt};
    for (int k = 0; k < 50; ++k) {
      GCPoint p = cr.sample(s);
      Scalar a = s.draw(), b = s.draw();
      ActionWord l{{2, a}, {3, a * b}, {2, b}}, r{{3, b}, {2, a * b}, {3, a}};
      CHECK(apply_word(cr, p, l) == apply_word(cr, p, r));
    }
  }
  SUBCASE("four-factor relation (0,1) on D2_2") {
    SingleCrystal cr{build_model({Family::D2, 2}, ModelKind::V), std::nullopt};
    for (int k = 0; k < 50; ++k) {
      GCPoint p = cr.sample(s);
      Scalar a = s.draw(), b = s.draw();
      ActionWord l{{0, a}, {1, a * a * b}, {0, a * b}, {1, b}}, r{{1, b}, {0, a * b}, {1, a * a * b}, {0, a}};
      CHECK(apply_word(cr, p, l) == apply_word(cr, p, r));
    }
  }
  CHECK_FALSE(verma_relation(-2, -2, 0, 1, 1, 1).has_value());
}

TEST_CASE("sigma-bar of B1") {
  TypeId t{Family::B1, 3};
  Scalar L = 5;
  GCPoint x = point(t, ModelKind::V, L, {{"x1", q("2/5")}, {"xb1", q("1/2")}, {"x2", 3}, {"x3", q("7/4")}});
  auto [y, a] = sigma_bar(t, x);
  REQUIRE(a);
  CHECK(*a == 1);
  CHECK(y == x);
  Sampler s(1);
  auto m = build_model(t, ModelKind::V);
  for (int k = 0; k < 20; ++k) {
    GCPoint p = sample_point(*m, s);
    CHECK(sigma_bar(t, sigma_bar(t, p).first).first == p);
  }
}

TEST_CASE("sigma-bar of A2even goes to V2 and back") {
  TypeId t{Family::A2even, 3};
  auto m = build_model(t, ModelKind::V);
  Sampler s(2);
  for (int k = 0; k < 20; ++k) {
    GCPoint p = sample_point(*m, s);
    GCPoint y = sigma_bar(t, p).first;
    CHECK(y.kind == ModelKind::V2);
    CHECK(apply_map(sigma_bar_inverse_map(t), y) == p);
  }
}

TEST_CASE("Xi sends the unit point of B(D1_4) to the unit point") {
  TypeId t{Family::D1, 4};
  GCPoint x = iso_Xi(t, XiDirection::BtoV, unit_point(t, ModelKind::B));
  for (auto& v : x.coords) CHECK(v == 1);
  CHECK(iso_Xi(t, XiDirection::VtoB, x) == unit_point(t, ModelKind::B));
}

TEST_CASE("Xi uses the square spectral parameter for D2") {
  TypeId t{Family::D2, 2};
  Sampler s(3);
  GCPoint p = sample_point(*build_model(t, ModelKind::B), s, Scalar(9));
  CHECK(iso_Xi(t, XiDirection::BtoV, p).L == 3);
  GCPoint bad = sample_point(*build_model(t, ModelKind::B), s, Scalar(2));
  CHECK_THROWS_AS(iso_Xi(t, XiDirection::BtoV, bad), DomainError);
}

TEST_CASE("Schubert action") {
  IntMatrix a = cartan_matrix(A1_3).a;
  auto one = schubert_e_action({1}, {q("3/7")}, a, 1, 4);
  CHECK(one == std::vector<Scalar>{q("12/7")});

  auto m = build_model(A1_3, ModelKind::V);
  auto [word, names] = v_model_word(A1_3);
  CHECK(word == std::vector<int>{3, 2, 1});
  Sampler s(14);
  for (int k = 0; k < 20; ++k) {
    GCPoint x = sample_point(*m, s);
    Scalar c = s.draw();
    std::vector<Scalar> wc;
    for (auto& nm : names) wc.push_back(at(x, nm));
    for (int i = 1; i <= 3; ++i) {
      GCPoint y = apply_e(*m, i, c, x);
      std::vector<Scalar> got;
      for (auto& nm : names) got.push_back(at(y, nm));
      CHECK(schubert_e_action(word, wc, a, i, c) == got);
    }
  }
  CHECK(v_model_word({Family::B1, 3}).first == std::vector<int>{1, 2, 3, 2, 1});
  require_ok(schubert_check({Family::B1, 3}, 20, s));
}

TEST_CASE("JSON points") {
  GCPoint p = from_json(R"({"type":"d1","n":4,"model":"V","L":"2","coords":{"x1":"1","x2":"3/2","x3":"5","x4":"1/7","xb1":"2","xb2":"9"}})");
  CHECK(at(p, "x2") == q("3/2"));
  CHECK(point_from_json(point_to_json(p)) == p);
  CHECK_THROWS(from_json(R"({"type":"a1","n":2,"model":"B","L":"2","coords":{"l1":"1","l2":"1","l3":"1"}})"));
  CHECK_THROWS(from_json(R"({"type":"a1","n":2,"model":"V","L":"2","coords":{"x1":"0","x2":"1"}})"));
}
