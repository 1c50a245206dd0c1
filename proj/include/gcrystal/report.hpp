#pragma once

#include <map>
#include <string>
#include <vector>

namespace gc {

// Pass/fail/skip counts for one named identity.
struct Tally {
  long pass = 0;
  long fail = 0;
  long skipped = 0;  // sample points outside the birational domain
  std::vector<std::string> notes;  // first few failures
  void record(bool ok, const std::string& what = {}) {
    if (ok) {
      ++pass;
    } else {
      ++fail;
      if (notes.size() < 5 && !what.empty()) notes.push_back(what);
    }
  }
  bool ok() const { return fail == 0 && pass > 0; }
};

// Ordered collection of tallies; ordering keeps output deterministic.
struct Report {
  std::map<std::string, Tally> checks;
  Tally& operator[](const std::string& k) { return checks[k]; }
  void merge(const Report& o, const std::string& prefix = {}) {
    for (auto& [k, t] : o.checks) {
      Tally& d = checks[prefix + k];
      d.pass += t.pass;
      d.fail += t.fail;
      d.skipped += t.skipped;
      for (auto& n : t.notes)
        if (d.notes.size() < 5) d.notes.push_back(n);
    }
  }
  bool ok() const {
    if (checks.empty()) return false;
    for (auto& [k, t] : checks)
      if (!t.ok()) return false;
    return true;
  }
  long total_pass() const {
    long s = 0;
    for (auto& [k, t] : checks) s += t.pass;
    return s;
  }
  long total_fail() const {
    long s = 0;
    for (auto& [k, t] : checks) s += t.fail;
    return s;
  }
};

}  // namespace gc
