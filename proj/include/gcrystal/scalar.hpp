#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gc {

// Exact rational; mpq_class keeps values canonical after every operation.
using Scalar = mpq_class;

// Raised when a birational map is evaluated outside its domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string to_string(const Scalar& s);
Scalar parse_scalar(std::string_view text);
Scalar ipow(const Scalar& base, int exponent);

// Exact square root if s is the square of a positive rational.
bool rational_sqrt(const Scalar& s, Scalar& root);

// Seeded sampler for positive rationals p/q with 1 <= p,q <= 20.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  Scalar draw();
  long long draw_int(long long lo, long long hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gc
