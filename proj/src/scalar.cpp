#include "gcrystal/scalar.hpp"

namespace gc {

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(std::string_view text) {
  Scalar out;
  std::string buf(text);
  if (buf.empty() || out.set_str(buf, 10) != 0)
    throw std::invalid_argument("not a rational: '" + buf + "'");
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator: '" + buf + "'");
  out.canonicalize();
  return out;
}

Scalar ipow(const Scalar& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return ipow(Scalar(1) / base, -exponent);
  }
  Scalar r(1), b(base);
  unsigned e = static_cast<unsigned>(exponent);
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

bool rational_sqrt(const Scalar& s, Scalar& root) {
  if (s <= 0) return false;
  const mpz_class& n = s.get_num();
  const mpz_class& d = s.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Scalar(rn, rd);
  root.canonicalize();
  return true;
}

Scalar Sampler::draw() {
  std::uniform_int_distribution<int> d(1, 20);
  int p = d(rng_);
  int q = d(rng_);
  Scalar s(p, q);
  s.canonicalize();
  return s;
}

long long Sampler::draw_int(long long lo, long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  return d(rng_);
}

}  // namespace gc
