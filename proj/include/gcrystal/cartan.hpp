#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gc {

enum class Family { A1, B1, D1, A2odd, D2, A2even, A2evenDagger };

struct TypeId {
  Family family;
  int n;
  bool operator==(const TypeId&) const = default;
};

struct RankOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int min_rank(Family f);
void check_rank(const TypeId& t);

std::string family_id(Family f);  // "a1", "b1", ..., "a2-even-dagger"
Family parse_family(const std::string& id);
std::string type_label(const TypeId& t);  // e.g. "d1_4"

using IntMatrix = std::vector<std::vector<int>>;

struct CartanData {
  TypeId type;
  IntMatrix a;                           // a[i][j], indices 0..n
  std::optional<std::vector<int>> sigma;  // Dynkin automorphism as i -> sigma[i]
  std::vector<int> labels;               // delta = sum labels[i] alpha_i
  std::vector<int> dual_labels;          // c = sum dual_labels[i] alpha_i^vee
  int size() const { return static_cast<int>(a.size()); }
};

CartanData cartan_matrix(const TypeId& t);
std::optional<std::vector<int>> dynkin_automorphism(const TypeId& t);
std::pair<std::vector<int>, std::vector<int>> kac_labels(const TypeId& t);

}  // namespace gc
