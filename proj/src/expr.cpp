#include "gcrystal/expr.hpp"

#include <algorithm>

#include <functional>
#include <sstream>

namespace gc {

namespace {
std::shared_ptr<const Node> make(Kind k, std::vector<Expr> kids = {}, int exponent = 0) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->kids = std::move(kids);
  n->exponent = exponent;
  return n;
}
}  // namespace

Expr::Expr(int positive_constant) : Expr(constant(Scalar(positive_constant))) {}

Expr Expr::var(const std::string& name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = name;
  return Expr(std::shared_ptr<const Node>(n));
}

Expr Expr::constant(const Scalar& v) {
  if (v <= 0) throw std::invalid_argument("constants must be positive, got " + to_string(v));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = v;
  return Expr(std::shared_ptr<const Node>(n));
}

Kind Expr::kind() const { return p_->kind; }
const std::string& Expr::name() const { return p_->name; }
const Scalar& Expr::value() const { return p_->value; }
const std::vector<Expr>& Expr::children() const { return p_->kids; }
int Expr::exponent() const { return p_->exponent; }
bool Expr::is_one() const { return p_ && p_->kind == Kind::Const && p_->value == 1; }

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  Scalar c(0);
  for (auto& t : terms) {
    if (!t.valid()) throw std::invalid_argument("null term in sum");
    if (t.kind() == Kind::Const)
      c += t.value();
    else if (t.kind() == Kind::Sum)
      for (auto& k : t.children()) flat.push_back(k);
    else
      flat.push_back(t);
  }
  if (c != 0) flat.push_back(constant(c));
  if (flat.empty()) throw std::invalid_argument("empty sum");
  if (flat.size() == 1) return flat[0];
  return Expr(make(Kind::Sum, std::move(flat)));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  Scalar c(1);
  for (auto& f : factors) {
    if (!f.valid()) throw std::invalid_argument("null factor in product");
    if (f.kind() == Kind::Const)
      c *= f.value();
    else if (f.kind() == Kind::Product)
      for (auto& k : f.children()) flat.push_back(k);
    else
      flat.push_back(f);
  }
  if (c != 1 || flat.empty()) flat.insert(flat.begin(), constant(c));
  if (flat.size() == 1) return flat[0];
  return Expr(make(Kind::Product, std::move(flat)));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_one()) return a;
  if (a.kind() == Kind::Const && b.kind() == Kind::Const) return Expr::constant(a.value() / b.value());
  return Expr(make(Kind::Quotient, {a, b}));
}

Expr pow(const Expr& base, int exponent) {
  if (exponent == 0) return Expr(1);
  if (exponent == 1) return base;
  if (base.kind() == Kind::Const) return Expr::constant(ipow(base.value(), exponent));
  return Expr(make(Kind::Power, {base}, exponent));
}

std::string Expr::str() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::Var: os << name(); break;
    case Kind::Const: os << to_string(value()); break;
    case Kind::Sum:
    case Kind::Product: {
      os << "(";
      const char* sep = kind() == Kind::Sum ? " + " : "*";
      for (size_t k = 0; k < children().size(); ++k) os << (k ? sep : "") << children()[k].str();
      os << ")";
      break;
    }
    case Kind::Quotient: os << "(" << children()[0].str() << ")/(" << children()[1].str() << ")"; break;
    case Kind::Power: os << "(" << children()[0].str() << ")^" << exponent(); break;
  }
  return os.str();
}

std::set<std::string> variables(const Expr& e) {
  std::set<std::string> out;
  std::unordered_map<const Node*, bool> seen;
  std::function<void(const Expr&)> walk = [&](const Expr& x) {
    if (seen.count(x.id())) return;
    seen[x.id()] = true;
    if (x.kind() == Kind::Var) out.insert(x.name());
    for (auto& k : x.children()) walk(k);
  };
  walk(e);
  return out;
}

size_t node_count(const std::vector<Expr>& roots) {
  std::unordered_map<const Node*, bool> seen;
  std::function<void(const Expr&)> walk = [&](const Expr& x) {
    if (seen.count(x.id())) return;
    seen[x.id()] = true;
    for (auto& k : x.children()) walk(k);
  };
  for (auto& r : roots) walk(r);
  return seen.size();
}

Expr Substitution::operator()(const Expr& e) {
  auto it = memo_.find(e.id());
  if (it != memo_.end()) return it->second;
  Expr out;
  switch (e.kind()) {
    case Kind::Var: {
      auto b = bind_.find(e.name());
      out = b == bind_.end() ? e : b->second;
      break;
    }
    case Kind::Const: out = e; break;
    case Kind::Sum:
    case Kind::Product: {
      std::vector<Expr> kids;
      kids.reserve(e.children().size());
      for (auto& k : e.children()) kids.push_back((*this)(k));
      out = e.kind() == Kind::Sum ? Expr::sum(std::move(kids)) : Expr::product(std::move(kids));
      break;
    }
    case Kind::Quotient: out = (*this)(e.children()[0]) / (*this)(e.children()[1]); break;
    case Kind::Power: out = pow((*this)(e.children()[0]), e.exponent()); break;
  }
  memo_.emplace(e.id(), out);
  return out;
}

std::vector<Expr> Substitution::operator()(const std::vector<Expr>& es) {
  std::vector<Expr> out;
  out.reserve(es.size());
  for (auto& e : es) out.push_back((*this)(e));
  return out;
}

Program::Program(std::vector<std::string> inputs, const std::vector<Expr>& outputs)
    : inputs_(std::move(inputs)) {
  std::map<std::string, int> slot;
  for (size_t k = 0; k < inputs_.size(); ++k) slot[inputs_[k]] = static_cast<int>(k);
  std::unordered_map<const Node*, int> seen;
  for (auto& o : outputs) outputs_.push_back(emit(o, seen, slot));
}

int Program::emit(const Expr& e, std::unordered_map<const Node*, int>& seen,
                  const std::map<std::string, int>& slot) {
  auto it = seen.find(e.id());
  if (it != seen.end()) return it->second;
  Instr ins{e.kind()};
  std::string key = std::to_string(static_cast<int>(e.kind())) + ":";
  switch (e.kind()) {
    case Kind::Var: {
      auto s = slot.find(e.name());
      if (s == slot.end()) throw UnboundVariable("unbound variable: " + e.name());
      ins.a = s->second;
      key += std::to_string(ins.a);
      break;
    }
    case Kind::Const:
      key += e.value().get_str();
      if (auto c = shape_.find(key); c != shape_.end()) return remember(e, c->second, seen);
      ins.a = static_cast<int>(consts_.size());
      consts_.push_back(e.value());
      break;
    case Kind::Sum:
    case Kind::Product: {
      std::vector<int> kids;
      for (auto& k : e.children()) kids.push_back(emit(k, seen, slot));
      std::sort(kids.begin(), kids.end());  // both operations commute
      for (int k : kids) key += std::to_string(k) + ",";
      if (auto c = shape_.find(key); c != shape_.end()) return remember(e, c->second, seen);
      ins.arg_begin = static_cast<int>(args_.size());
      args_.insert(args_.end(), kids.begin(), kids.end());
      ins.arg_end = static_cast<int>(args_.size());
      break;
    }
    case Kind::Quotient:
      ins.a = emit(e.children()[0], seen, slot);
      ins.b = emit(e.children()[1], seen, slot);
      key += std::to_string(ins.a) + "/" + std::to_string(ins.b);
      break;
    case Kind::Power:
      ins.a = emit(e.children()[0], seen, slot);
      ins.b = e.exponent();
      key += std::to_string(ins.a) + "^" + std::to_string(ins.b);
      break;
  }
  // structurally equal nodes built separately share one register
  if (auto c = shape_.find(key); c != shape_.end()) return remember(e, c->second, seen);
  code_.push_back(ins);
  int id = static_cast<int>(code_.size()) - 1;
  shape_.emplace(std::move(key), id);
  return remember(e, id, seen);
}

int Program::remember(const Expr& e, int id, std::unordered_map<const Node*, int>& seen) {
  seen.emplace(e.id(), id);
  return id;
}

__attribute__((target_clones("avx2", "default"))) void Program::run_tropical_batch(const long long* in, size_t rows,
                                                                                  long long* out) const {
  // fixed-width lanes so the inner loops vectorise; tail lanes run on zeros
  constexpr size_t B = 64;
  const size_t nin = inputs_.size(), nout = outputs_.size();
  thread_local std::vector<long long> reg;
  reg.resize(code_.size() * B);
  long long* R = reg.data();
  for (size_t r0 = 0; r0 < rows; r0 += B) {
    const size_t w = std::min(B, rows - r0);
    for (size_t k = 0; k < code_.size(); ++k) {
      const Instr& ins = code_[k];
      long long* __restrict dst = R + k * B;
      switch (ins.kind) {
        case Kind::Var:
          for (size_t j = 0; j < B; ++j) dst[j] = j < w ? in[(r0 + j) * nin + static_cast<size_t>(ins.a)] : 0;
          break;
        case Kind::Const:
          for (size_t j = 0; j < B; ++j) dst[j] = 0;
          break;
        case Kind::Sum: {
          const long long* s0 = R + static_cast<size_t>(args_[static_cast<size_t>(ins.arg_begin)]) * B;
          for (size_t j = 0; j < B; ++j) dst[j] = s0[j];
          for (int a = ins.arg_begin + 1; a < ins.arg_end; ++a) {
            const long long* __restrict s = R + static_cast<size_t>(args_[static_cast<size_t>(a)]) * B;
            for (size_t j = 0; j < B; ++j) dst[j] = dst[j] > s[j] ? dst[j] : s[j];
          }
          break;
        }
        case Kind::Product: {
          const long long* s0 = R + static_cast<size_t>(args_[static_cast<size_t>(ins.arg_begin)]) * B;
          for (size_t j = 0; j < B; ++j) dst[j] = s0[j];
          for (int a = ins.arg_begin + 1; a < ins.arg_end; ++a) {
            const long long* __restrict s = R + static_cast<size_t>(args_[static_cast<size_t>(a)]) * B;
            for (size_t j = 0; j < B; ++j) dst[j] += s[j];
          }
          break;
        }
        case Kind::Quotient: {
          const long long *x = R + static_cast<size_t>(ins.a) * B, *y = R + static_cast<size_t>(ins.b) * B;
          for (size_t j = 0; j < B; ++j) dst[j] = x[j] - y[j];
          break;
        }
        case Kind::Power: {
          const long long* x = R + static_cast<size_t>(ins.a) * B;
          const long long p = ins.b;
          for (size_t j = 0; j < B; ++j) dst[j] = x[j] * p;
          break;
        }
      }
    }
    for (size_t o = 0; o < nout; ++o) {
      const long long* src = R + static_cast<size_t>(outputs_[o]) * B;
      for (size_t j = 0; j < w; ++j) out[(r0 + j) * nout + o] = src[j];
    }
  }
}

namespace {
template <class Env>
std::vector<std::string> bound_inputs(const Expr& e, const Env& env) {
  std::vector<std::string> names;
  for (auto& v : variables(e)) {
    if (!env.count(v)) throw UnboundVariable("unbound variable: " + v);
    names.push_back(v);
  }
  return names;
}
}  // namespace

Scalar eval_rational(const Expr& e, const std::map<std::string, Scalar>& env) {
  auto names = bound_inputs(e, env);
  Program p(names, {e});
  std::vector<Scalar> in;
  for (auto& n : names) in.push_back(env.at(n));
  return p.run<RationalSemiring>(in)[0];
}

long long eval_tropical(const Expr& e, const std::map<std::string, long long>& env) {
  auto names = bound_inputs(e, env);
  Program p(names, {e});
  std::vector<long long> in;
  for (auto& n : names) in.push_back(env.at(n));
  return p.run<TropicalSemiring>(in)[0];
}

RatFun RatFun::monomial(int exponent) {
  RatFun r;
  r.shift = exponent;
  return r;
}

namespace {
// Pulls t^low out of both polynomials into the shift.
void normalize(RatFun& r) {
  if (r.num.is_zero()) throw DomainError("zero rational function");
  if (r.den.is_zero()) throw DomainError("zero denominator");
  int a = r.num.low();
  int b = r.den.low();
  if (a) r.num = r.num * LaurentPoly::monomial(1, -a);
  if (b) r.den = r.den * LaurentPoly::monomial(1, -b);
  r.shift += a - b;
}
}  // namespace

RatFun DegreeSemiring::constant(const Scalar& c) const {
  RatFun r;
  r.num = LaurentPoly(c);
  return r;
}

void DegreeSemiring::add_to(RatFun& acc, const RatFun& x) const {
  // t^s a/b + t^u c/d with s <= u  ==  t^s (a d + t^(u-s) c b)/(b d)
  const RatFun* lo = &acc;
  const RatFun* hi = &x;
  if (x.shift < acc.shift) std::swap(lo, hi);
  LaurentPoly lift = LaurentPoly::monomial(1, hi->shift - lo->shift);
  RatFun r;
  r.shift = lo->shift;
  if (lo->den == hi->den) {
    r.num = lo->num + lift * hi->num;
    r.den = lo->den;
  } else {
    r.num = lo->num * hi->den + lift * hi->num * lo->den;
    r.den = lo->den * hi->den;
  }
  normalize(r);
  acc = std::move(r);
}

void DegreeSemiring::mul_to(RatFun& acc, const RatFun& x) const {
  acc.shift += x.shift;
  acc.num = acc.num * x.num;
  acc.den = acc.den * x.den;
}

RatFun DegreeSemiring::div(const RatFun& a, const RatFun& b) const {
  RatFun r;
  r.shift = a.shift - b.shift;
  r.num = a.num * b.den;
  r.den = a.den * b.num;
  normalize(r);
  return r;
}

RatFun DegreeSemiring::pow(const RatFun& a, int k) const {
  RatFun base = a;
  if (k < 0) {
    std::swap(base.num, base.den);
    base.shift = -base.shift;
    k = -k;
  }
  RatFun r;
  for (int j = 0; j < k; ++j) mul_to(r, base);
  return r;
}

int degree_at(const Expr& e, const std::map<std::string, long long>& exponents) {
  auto names = bound_inputs(e, exponents);
  Program p(names, {e});
  std::vector<RatFun> in;
  for (auto& n : names) in.push_back(RatFun::monomial(static_cast<int>(exponents.at(n))));
  return p.run<DegreeSemiring>(in)[0].degree();
}

bool check_degree_consistency(const Expr& e, const std::map<std::string, long long>& exponents) {
  return degree_at(e, exponents) == eval_tropical(e, exponents);
}

}  // namespace gc
