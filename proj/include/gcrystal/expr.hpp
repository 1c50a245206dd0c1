#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcrystal/laurent.hpp"
#include "gcrystal/scalar.hpp"

namespace gc {

enum class Kind { Var, Const, Sum, Product, Quotient, Power };

struct Node;

// Immutable, subtraction-free expression DAG. There is no minus node and every
// constant is strictly positive, so positivity holds by construction.
class Expr {
 public:
  Expr() = default;
  Expr(int positive_constant);  // NOLINT: lets formulas read naturally

  static Expr var(const std::string& name);
  static Expr constant(const Scalar& positive_value);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  Expr& operator/=(const Expr& o) { return *this = *this / o; }

  bool valid() const { return static_cast<bool>(p_); }
  Kind kind() const;
  const std::string& name() const;
  const Scalar& value() const;
  const std::vector<Expr>& children() const;
  int exponent() const;
  const Node* id() const { return p_.get(); }
  bool is_one() const;

  std::string str() const;

 private:
  explicit Expr(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
  friend Expr pow(const Expr& base, int exponent);
};

struct Node {
  Kind kind;
  std::string name;
  Scalar value;
  std::vector<Expr> kids;
  int exponent = 0;
};

Expr pow(const Expr& base, int exponent);
inline Expr V(const std::string& name) { return Expr::var(name); }
inline Expr C(const Scalar& s) { return Expr::constant(s); }

std::set<std::string> variables(const Expr& e);
size_t node_count(const std::vector<Expr>& roots);

// Replaces variables by expressions; shared sub-DAGs stay shared.
class Substitution {
 public:
  explicit Substitution(std::map<std::string, Expr> bindings) : bind_(std::move(bindings)) {}
  Expr operator()(const Expr& e);
  std::vector<Expr> operator()(const std::vector<Expr>& es);

 private:
  std::map<std::string, Expr> bind_;
  std::unordered_map<const Node*, Expr> memo_;
};

// Semirings consumed by Program::run.
struct RationalSemiring {
  using Value = Scalar;
  Value constant(const Scalar& c) const { return c; }
  void add_to(Value& acc, const Value& x) const { acc += x; }
  void mul_to(Value& acc, const Value& x) const { acc *= x; }
  Value div(const Value& a, const Value& b) const {
    if (b == 0) throw DomainError("division by zero");
    return a / b;
  }
  Value pow(const Value& a, int k) const { return ipow(a, k); }
};

// max-plus: Sum -> max, Product -> +, Quotient -> -, Power(k) -> k*.
struct TropicalSemiring {
  using Value = long long;
  Value constant(const Scalar&) const { return 0; }
  void add_to(Value& acc, Value x) const {
    if (x > acc) acc = x;
  }
  void mul_to(Value& acc, Value x) const { acc += x; }
  Value div(Value a, Value b) const { return a - b; }
  Value pow(Value a, int k) const { return a * k; }
};

// Univariate rational function t^shift * num(t)/den(t), for degree checks.
struct RatFun {
  int shift = 0;
  LaurentPoly num{Scalar(1)};
  LaurentPoly den{Scalar(1)};
  static RatFun monomial(int exponent);
  int degree() const { return shift + num.high() - den.high(); }
};

struct DegreeSemiring {
  using Value = RatFun;
  Value constant(const Scalar& c) const;
  void add_to(Value& acc, const Value& x) const;
  void mul_to(Value& acc, const Value& x) const;
  Value div(const Value& a, const Value& b) const;
  Value pow(const Value& a, int k) const;
};

// Straight-line program compiled from a family of expressions.
class Program {
 public:
  Program() = default;
  Program(std::vector<std::string> inputs, const std::vector<Expr>& outputs);

  const std::vector<std::string>& inputs() const { return inputs_; }
  size_t output_count() const { return outputs_.size(); }
  size_t size() const { return code_.size(); }
  size_t arg_count() const { return args_.size(); }

  template <class Sem>
  std::vector<typename Sem::Value> run(const std::vector<typename Sem::Value>& in,
                                       const Sem& sem = Sem{}) const;

  // Max-plus evaluation of many input rows; in is rows x inputs, out is
  // rows x outputs, both row-major.
  void run_tropical_batch(const long long* in, size_t rows, long long* out) const;

 private:
  struct Instr {
    Kind kind;
    int a = -1;
    int b = -1;
    int arg_begin = 0;
    int arg_end = 0;
  };
  int emit(const Expr& e, std::unordered_map<const Node*, int>& seen,
           const std::map<std::string, int>& slot);
  static int remember(const Expr& e, int id, std::unordered_map<const Node*, int>& seen);

  std::vector<std::string> inputs_;
  std::vector<Instr> code_;
  std::vector<int> args_;
  std::vector<Scalar> consts_;
  std::vector<int> outputs_;
  std::unordered_map<std::string, int> shape_;  // structural key -> register
};

template <class Sem>
std::vector<typename Sem::Value> Program::run(const std::vector<typename Sem::Value>& in,
                                              const Sem& sem) const {
  using Val = typename Sem::Value;
  if (in.size() != inputs_.size()) throw std::invalid_argument("program arity mismatch");
  std::vector<Val> reg(code_.size());
  for (size_t k = 0; k < code_.size(); ++k) {
    const Instr& ins = code_[k];
    switch (ins.kind) {
      case Kind::Var:
        reg[k] = in[static_cast<size_t>(ins.a)];
        break;
      case Kind::Const:
        reg[k] = sem.constant(consts_[static_cast<size_t>(ins.a)]);
        break;
      case Kind::Sum: {
        Val acc = reg[static_cast<size_t>(args_[static_cast<size_t>(ins.arg_begin)])];
        for (int j = ins.arg_begin + 1; j < ins.arg_end; ++j)
          sem.add_to(acc, reg[static_cast<size_t>(args_[static_cast<size_t>(j)])]);
        reg[k] = std::move(acc);
        break;
      }
      case Kind::Product: {
        Val acc = reg[static_cast<size_t>(args_[static_cast<size_t>(ins.arg_begin)])];
        for (int j = ins.arg_begin + 1; j < ins.arg_end; ++j)
          sem.mul_to(acc, reg[static_cast<size_t>(args_[static_cast<size_t>(j)])]);
        reg[k] = std::move(acc);
        break;
      }
      case Kind::Quotient:
        reg[k] = sem.div(reg[static_cast<size_t>(ins.a)], reg[static_cast<size_t>(ins.b)]);
        break;
      case Kind::Power:
        reg[k] = sem.pow(reg[static_cast<size_t>(ins.a)], ins.b);
        break;
    }
  }
  std::vector<Val> out;
  out.reserve(outputs_.size());
  for (int o : outputs_) out.push_back(reg[static_cast<size_t>(o)]);
  return out;
}

Scalar eval_rational(const Expr& e, const std::map<std::string, Scalar>& env);
long long eval_tropical(const Expr& e, const std::map<std::string, long long>& env);

// Degree in t of e at x_k = t^{c_k} against its tropical value.
bool check_degree_consistency(const Expr& e, const std::map<std::string, long long>& exponents);
int degree_at(const Expr& e, const std::map<std::string, long long>& exponents);

struct UnboundVariable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace gc
