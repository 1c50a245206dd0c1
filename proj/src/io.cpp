#include "gcrystal/io.hpp"

namespace gc {

namespace {

TypeId type_from_json(const nlohmann::json& j) {
  TypeId t{parse_family(j.at("type").get<std::string>()), j.at("n").get<int>()};
  check_rank(t);
  return t;
}

}  // namespace

nlohmann::json point_to_json(const GCPoint& p) {
  auto m = build_model(p.type, p.kind);
  nlohmann::json coords = nlohmann::json::object();
  for (size_t k = 0; k < m->coords.size(); ++k) coords[m->coords[k]] = to_string(p.coords[k]);
  return {{"type", family_id(p.type.family)},
          {"n", p.type.n},
          {"model", model_id(p.kind)},
          {"L", to_string(p.L)},
          {"coords", coords}};
}

GCPoint point_from_json(const nlohmann::json& j) {
  TypeId t = type_from_json(j);
  auto m = build_model(t, parse_model(j.at("model").get<std::string>()));
  const auto& c = j.at("coords");
  if (c.size() != m->coords.size())
    throw std::invalid_argument(m->label() + " has " + std::to_string(m->coords.size()) + " coordinates");
  std::vector<Scalar> v;
  for (auto& name : m->coords) {
    Scalar s = parse_scalar(c.at(name).get<std::string>());
    if (s == 0) throw std::invalid_argument("coordinate " + name + " is zero");
    v.push_back(s);
  }
  Scalar L = parse_scalar(j.at("L").get<std::string>());
  if (L == 0) throw std::invalid_argument("spectral parameter is zero");
  GCPoint p{t, m->kind, L, v};
  if (!constraint_holds(*m, p)) throw std::invalid_argument("point violates the constraint of " + m->label());
  return p;
}

nlohmann::json lattice_to_json(const LatticePoint& p) {
  return {{"type", family_id(p.type.family)},
          {"n", p.type.n},
          {"model", model_id(p.kind)},
          {"level", p.level},
          {"coords", p.coords}};
}

LatticePoint lattice_from_json(const nlohmann::json& j) {
  TypeId t = type_from_json(j);
  ModelKind k = parse_model(j.value("model", std::string("B")));
  auto m = build_model(t, k);
  LatticePoint p{t, k, j.at("level").get<long long>(), j.at("coords").get<std::vector<long long>>()};
  TropCrystal tc(m, p.level);
  if (!tc.on_lattice(p.coords)) throw std::invalid_argument("lattice point does not fit " + m->label());
  return p;
}

std::string report_jsonl(const Report& r, const nlohmann::json& context) {
  std::string out;
  for (auto& [k, t] : r.checks) {
    nlohmann::json rec = context;
    rec["check"] = k;
    rec["pass"] = t.pass;
    rec["fail"] = t.fail;
    rec["skipped"] = t.skipped;
    rec["ok"] = t.ok();
    if (!t.notes.empty()) rec["failures"] = t.notes;
    out += rec.dump() + "\n";
  }
  return out;
}

}  // namespace gc
