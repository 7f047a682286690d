#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace positroids {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline int sgn(const Rat& x) { return x.sign(); }

inline std::string to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

struct Error : std::runtime_error {
  explicit Error(const std::string& code, const std::string& what)
      : std::runtime_error(code + ": " + what), code(code) {}
  std::string code;
};

// Deterministic rational sampler; numerators/denominators bounded by `bound`
// so that exact arithmetic downstream stays small.
class RatRng {
 public:
  explicit RatRng(std::uint64_t seed, long bound = 10000)
      : state_(seed ? seed : 0x9e3779b97f4a7c15ULL), bound_(bound) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, m)
  std::uint64_t next_below(std::uint64_t m) { return next_u64() % m; }

  // strictly positive rational with num, den in [1, bound]
  Rat positive() {
    long num = 1 + long(next_below(std::uint64_t(bound_)));
    long den = 1 + long(next_below(std::uint64_t(bound_)));
    return Rat(num, den);
  }

  // nonzero rational, either sign
  Rat nonzero() {
    Rat r = positive();
    return next_below(2) ? r : -r;
  }

  // any rational (possibly zero), numerator in [-bound, bound]
  Rat any() {
    long num = long(next_below(std::uint64_t(2 * bound_ + 1))) - bound_;
    long den = 1 + long(next_below(std::uint64_t(bound_)));
    return Rat(num, den);
  }

  std::uint64_t seed_state() const { return state_; }

 private:
  std::uint64_t state_;
  long bound_;
};

}  // namespace positroids
