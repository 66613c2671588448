#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace wilton::detail {

// Neumaier-compensated accumulator; error stays O(eps) independent of count.
struct Kahan {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// B_2, B_4, ..., B_12 as exact rationals converted once.
inline constexpr double kBernoulli2k[6] = {
    1.0 / 6.0,  -1.0 / 30.0,  1.0 / 42.0,
    -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};

// (2k)! for k = 1..6, exact in double.
inline constexpr double kFact2k[6] = {2.0, 24.0, 720.0, 40320.0, 3628800.0,
                                      479001600.0};

// Uniform double in [0,1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
template <class Rng>
double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. jobs <= 1 runs inline.
// fn must be safe to call concurrently for distinct i.
inline void parallel_for(std::size_t n, unsigned jobs,
                         const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned workers = std::min<std::size_t>(jobs, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace wilton::detail
