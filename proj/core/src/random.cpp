#include "hkc/numlin/random.hpp"

#include <cmath>
#include <numbers>

namespace hkc::numlin {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t stable_hash(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
    : key_(splitmix64(seed ^ splitmix64(stream ^ splitmix64(index)))) {}

std::uint64_t SampleStream::next_u64() {
  return splitmix64(key_ + 0xD1B54A32D192ED03ULL * ++counter_);
}

double SampleStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double SampleStream::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

AmbientVector SampleStream::gaussian(std::size_t dim) {
  AmbientVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = normal();
  return v;
}

SampleStream SampleStream::split(std::uint64_t child) const {
  SampleStream s(*this);
  s.key_ = splitmix64(key_ ^ splitmix64(child + 0x632BE59BD9B4E019ULL));
  s.counter_ = 0;
  return s;
}

}  // namespace hkc::numlin
