#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ggt {

// Deterministic 64-bit generator (splitmix64). Used instead of std
// distributions so that seeded runs reproduce bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // uniform in [0, n), n > 0
  std::uint64_t below(std::uint64_t n);

  // k distinct values from [0, n), in increasing order; k <= n
  std::vector<int> sample_distinct(int n, int k);

 private:
  std::uint64_t state_;
};

std::uint64_t fnv1a64(const void* data, std::size_t len,
                      std::uint64_t h = 1469598103934665603ULL);
std::uint64_t fnv1a64(const std::string& s);

// Runs fn(i) for i in [begin, end) on up to `threads` worker threads.
// threads <= 1 runs inline.
void parallel_for(int begin, int end, int threads,
                  const std::function<void(int)>& fn);

}  // namespace ggt
