#include "helpers.hpp"

using namespace gct;

namespace {
TropCrystal trop(TypeId t, ModelKind k, long long level) { return TropCrystal(build_model(t, k), level); }
}  // namespace

TEST_CASE("A1 V-model tropical action adds k") {
  auto tc = trop({Family::A1, 3}, ModelKind::V, 1);
  Lattice b{1, -2, 4};
  CHECK(tc.e(2, 3, b) == Lattice{1, 1, 4});
  CHECK(tc.e(1, 0, b) == b);
  CHECK(tc.e(1, -1, tc.e(1, 1, b)) == b);
}

TEST_CASE("structure values satisfy phi = eps + wt") {
  auto tc = trop({Family::B1, 3}, ModelKind::B, 2);
  for (auto& b : tc.box(1)) {
    Lattice st = tc.structure(b), ph = tc.phi(b);
    for (int i = 0; i < tc.indices(); ++i)
      CHECK(ph[static_cast<size_t>(i)] ==
            st[static_cast<size_t>(i)] + st[static_cast<size_t>(tc.indices() + i)]);
  }
}

TEST_CASE("crystal axioms on boxes") {
  require_ok(check_crystal_axioms(trop({Family::A1, 2}, ModelKind::B, 1), 3));
  require_ok(check_crystal_axioms(trop({Family::D1, 4}, ModelKind::V, 0), 1));
  require_ok(check_crystal_axioms(trop({Family::A2even, 2}, ModelKind::B, 2), 1));
}

TEST_CASE("connectivity") {
  auto c0 = connectivity_sample(trop({Family::A1, 2}, ModelKind::B, 1), 0);
  CHECK(c0.connected);
  CHECK(c0.box_points == 1);
  for (TypeId t : {TypeId{Family::A1, 2}, TypeId{Family::B1, 2}}) {
    auto c = connectivity_sample(trop(t, ModelKind::B, 1), 2);
    CHECK(c.connected);
    CHECK(c.reached == c.box_points);
  }
}

TEST_CASE("combinatorial R on frozen lattice points") {
  TypeId t{Family::D1, 4};
  auto [a, b] = apply_R_trop(t, {1, -1, 0, 2, 0, 1, -2}, 1, {0, 1, 1, -1, 0, 0, 1}, 2);
  CHECK(a == Lattice{1, -1, 0, 2, 0, 2, -2});
  CHECK(b == Lattice{0, 1, 1, -1, 0, -1, 1});
  auto [c, d] = apply_R_trop(t, a, 2, b, 1);
  CHECK(c == Lattice{1, -1, 0, 2, 0, 1, -2});
  CHECK(d == Lattice{0, 1, 1, -1, 0, 0, 1});
}

TEST_CASE("combinatorial R at equal levels is the identity") {
  TypeId t{Family::B1, 2};
  auto tc = trop(t, ModelKind::B, 2);
  auto box = tc.box(1);
  for (size_t k = 0; k + 1 < box.size(); k += 7) {
    auto [a, b] = apply_R_trop(t, box[k], 2, box[k + 1], 2);
    CHECK(a == box[k]);
    CHECK(b == box[k + 1]);
  }
}

TEST_CASE("tensor rule") {
  Sampler s(71);
  require_ok(check_tensor_rule(build_model({Family::A1, 2}, ModelKind::B), 1, 2, 50, s));
  require_ok(check_tensor_rule(build_model({Family::D2, 2}, ModelKind::V), 2, 1, 50, s));
}

TEST_CASE("tensor action follows the signature rule") {
  auto m = build_model({Family::A1, 2}, ModelKind::V);
  TropCrystal cx(m, 0), cy(m, 0);
  Lattice a{0, 0}, b{0, 0};
  Lattice sa = cx.structure(a), sb = cy.structure(b);
  const int i = 1;
  long long phi_a = cx.phi(a)[i], eps_b = sb[static_cast<size_t>(cx.indices() + i)];
  auto [x, y] = tensor_e(cx, cy, i, 1, a, b);
  // e~ acts on the first factor exactly when phi(a) >= eps(b)
  if (phi_a >= eps_b) {
    CHECK(x == cx.e(i, 1, a));
    CHECK(y == b);
  } else {
    CHECK(x == a);
    CHECK(y == cy.e(i, 1, b));
  }
  (void)sa;
}

TEST_CASE("combinatorial R of small types") {
  Sampler s(72);
  CombRConfig cfg;
  cfg.levels = {1, 2};
  for (TypeId t : {TypeId{Family::A1, 2}, TypeId{Family::B1, 2}}) {
    INFO(type_label(t));
    require_ok(combinatorial_r_check(t, cfg, s));
  }
}

TEST_CASE("degree consistency") {
  Sampler s(73);
  require_ok(degree_consistency_report(*build_model({Family::A2odd, 3}, ModelKind::V), 20, s));
}

TEST_CASE("DOT output") {
  std::string dot = crystal_dot(trop({Family::A1, 2}, ModelKind::B, 1), 1);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("lattice JSON") {
  LatticePoint p{{Family::D1, 4}, ModelKind::B, 1, {1, -1, 0, 2, 0, 1, -2}};
  CHECK(lattice_from_json(lattice_to_json(p)) == p);
  nlohmann::json bad = lattice_to_json(p);
  bad["coords"][0] = 5;
  CHECK_THROWS(lattice_from_json(bad));
}
