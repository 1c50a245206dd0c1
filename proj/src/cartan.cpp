#include "gcrystal/cartan.hpp"

namespace gc {

int min_rank(Family f) {
  switch (f) {
    case Family::D1: return 3;  // D1_3 hosts the folding of b1_2
    case Family::A2odd: return 3;
    default: return 2;
  }
}

void check_rank(const TypeId& t) {
  if (t.n < min_rank(t.family))
    throw RankOutOfRange(family_id(t.family) + " needs rank >= " + std::to_string(min_rank(t.family)) +
                         ", got " + std::to_string(t.n));
}

std::string family_id(Family f) {
  switch (f) {
    case Family::A1: return "a1";
    case Family::B1: return "b1";
    case Family::D1: return "d1";
    case Family::A2odd: return "a2-odd";
    case Family::D2: return "d2";
    case Family::A2even: return "a2-even";
    case Family::A2evenDagger: return "a2-even-dagger";
  }
  return "?";
}

Family parse_family(const std::string& id) {
  for (Family f : {Family::A1, Family::B1, Family::D1, Family::A2odd, Family::D2, Family::A2even,
                   Family::A2evenDagger})
    if (family_id(f) == id) return f;
  throw std::invalid_argument("unknown type id: " + id);
}

std::string type_label(const TypeId& t) { return family_id(t.family) + "_" + std::to_string(t.n); }

namespace {
IntMatrix raw_matrix(const TypeId& t) {
  const int n = t.n;
  const int N = n + 1;
  IntMatrix a(static_cast<size_t>(N), std::vector<int>(static_cast<size_t>(N), 0));
  auto set = [&](int i, int j, int v) { a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v; };
  auto link = [&](int i, int j) {
    set(i, j, -1);
    set(j, i, -1);
  };
  for (int i = 0; i < N; ++i) set(i, i, 2);
  switch (t.family) {
    case Family::A1:
      for (int i = 0; i < N; ++i) link(i, (i + 1) % N);
      break;
    case Family::B1:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      link(0, 2);
      set(n, n - 1, -2);
      if (n == 2) set(2, 0, -2);  // node 0 mirrors node 1 at rank 2
      break;
    case Family::D1:
      if (n == 3) {  // the 4-cycle of A_3^(1)
        link(0, 2);
        link(0, 3);
        link(1, 2);
        link(1, 3);
        break;
      }
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(0, 2);
      link(n - 2, n);
      break;
    case Family::A2odd:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(0, 2);
      set(n - 1, n, -2);
      set(n, n - 1, -1);
      break;
    case Family::D2:
    case Family::A2even:
    case Family::A2evenDagger:
      for (int i = 0; i < n; ++i) link(i, i + 1);
      if (t.family == Family::D2) {
        set(0, 1, -2);
        set(n, n - 1, -2);
      } else if (t.family == Family::A2even) {
        set(0, 1, -2);
        set(n - 1, n, -2);
      } else {
        set(1, 0, -2);
        set(n, n - 1, -2);
      }
      break;
  }
  return a;
}
}  // namespace

std::optional<std::vector<int>> dynkin_automorphism(const TypeId& t) {
  check_rank(t);
  const int N = t.n + 1;
  std::vector<int> s(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i) s[static_cast<size_t>(i)] = i;
  switch (t.family) {
    case Family::A1:
      for (int i = 0; i < N; ++i) s[static_cast<size_t>(i)] = (i + 1) % N;
      return s;
    case Family::B1:
    case Family::D1:
    case Family::A2odd:
      std::swap(s[0], s[1]);
      return s;
    case Family::D2:
      for (int i = 0; i < N; ++i) s[static_cast<size_t>(i)] = t.n - i;
      return s;
    default:
      return std::nullopt;
  }
}

std::pair<std::vector<int>, std::vector<int>> kac_labels(const TypeId& t) {
  check_rank(t);
  const int n = t.n;
  std::vector<int> a(static_cast<size_t>(n + 1), 1), d(static_cast<size_t>(n + 1), 1);
  auto fill = [&](std::vector<int>& v, int from, int to, int val) {
    for (int i = from; i <= to; ++i) v[static_cast<size_t>(i)] = val;
  };
  switch (t.family) {
    case Family::A1: break;
    case Family::B1:
      fill(a, 2, n, 2);
      fill(d, 2, n - 1, 2);
      break;
    case Family::D1:
      fill(a, 2, n - 2, 2);
      fill(d, 2, n - 2, 2);
      break;
    case Family::A2odd:
      fill(a, 2, n - 1, 2);
      fill(d, 2, n, 2);
      break;
    case Family::D2:
      fill(d, 1, n - 1, 2);
      break;
    case Family::A2even:
      fill(a, 0, n - 1, 2);
      fill(d, 1, n, 2);
      break;
    case Family::A2evenDagger:
      fill(a, 1, n, 2);
      fill(d, 0, n - 1, 2);
      break;
  }
  return {a, d};
}

CartanData cartan_matrix(const TypeId& t) {
  check_rank(t);
  CartanData c{t, raw_matrix(t), dynkin_automorphism(t), {}, {}};
  auto [a, d] = kac_labels(t);
  c.labels = a;
  c.dual_labels = d;
  return c;
}

}  // namespace gc
