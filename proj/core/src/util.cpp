#include "ggt/util.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace ggt {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  // rejection sampling keeps the draw unbiased
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::vector<int> Rng::sample_distinct(int n, int k) {
  if (k > n) throw std::invalid_argument("Rng::sample_distinct: k > n");
  // Floyd's algorithm
  std::vector<int> out;
  out.reserve(k);
  std::vector<bool> seen(n, false);
  for (int j = n - k; j < n; ++j) {
    int t = static_cast<int>(below(static_cast<std::uint64_t>(j) + 1));
    if (seen[t]) t = j;
    seen[t] = true;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

void parallel_for(int begin, int end, int threads,
                  const std::function<void(int)>& fn) {
  if (end <= begin) return;
  int n = end - begin;
  if (threads <= 1 || n == 1) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  int workers = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = begin + w; i < end; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ggt
