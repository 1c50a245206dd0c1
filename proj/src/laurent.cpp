#include "gcrystal/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace gc {

LaurentPoly::LaurentPoly(const Scalar& c) {
  if (c != 0) coef_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, int exponent) {
  LaurentPoly p(c);
  p.low_ = p.is_zero() ? 0 : exponent;
  return p;
}

Scalar LaurentPoly::coefficient(int e) const {
  if (is_zero() || e < low_ || e > high()) return 0;
  return coef_[static_cast<size_t>(e - low_)];
}

std::map<int, Scalar> LaurentPoly::terms() const {
  std::map<int, Scalar> out;
  for (size_t k = 0; k < coef_.size(); ++k)
    if (coef_[k] != 0) out.emplace(low_ + static_cast<int>(k), coef_[k]);
  return out;
}

void LaurentPoly::trim() {
  size_t b = 0;
  while (b < coef_.size() && coef_[b] == 0) ++b;
  if (b == coef_.size()) {
    coef_.clear();
    low_ = 0;
    return;
  }
  size_t e = coef_.size();
  while (coef_[e - 1] == 0) --e;
  if (b > 0 || e < coef_.size()) {
    coef_ = std::vector<Scalar>(coef_.begin() + static_cast<long>(b), coef_.begin() + static_cast<long>(e));
    low_ += static_cast<int>(b);
  }
}

namespace {
LaurentPoly& accumulate(LaurentPoly& self, const LaurentPoly& o, int sign, int& low,
                        std::vector<Scalar>& coef) {
  if (o.is_zero()) return self;
  if (coef.empty()) {
    low = o.low();
    for (int e = o.low(); e <= o.high(); ++e) coef.push_back(sign > 0 ? o.coefficient(e) : -o.coefficient(e));
    return self;
  }
  int nl = std::min(low, o.low());
  int nh = std::max(low + static_cast<int>(coef.size()) - 1, o.high());
  std::vector<Scalar> out(static_cast<size_t>(nh - nl + 1));
  for (size_t k = 0; k < coef.size(); ++k) out[static_cast<size_t>(low - nl) + k] = coef[k];
  for (int e = o.low(); e <= o.high(); ++e) {
    Scalar& slot = out[static_cast<size_t>(e - nl)];
    if (sign > 0)
      slot += o.coefficient(e);
    else
      slot -= o.coefficient(e);
  }
  low = nl;
  coef.swap(out);
  return self;
}
}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  accumulate(*this, o, +1, low_, coef_);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  accumulate(*this, o, -1, low_, coef_);
  trim();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i] == 0) continue;
    for (size_t j = 0; j < b.coef_.size(); ++j) r.coef_[i + j] += a.coef_[i] * b.coef_[j];
  }
  r.trim();
  return r;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (e != 0) os << "*z^" << e;
  }
  return os.str();
}

}  // namespace gc
