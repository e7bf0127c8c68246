#ifndef LIR_COMMON_HPP
#define LIR_COMMON_HPP

#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace lir {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational for valuation profiles and thresholds. Numerators and
// denominators stay tiny (ord values and indices), far from i64 range.
using Rat = boost::rational<i64>;

struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline BigInt big_factorial(u64 n) {
  BigInt f = 1;
  for (u64 i = 2; i <= n; ++i) f *= i;
  return f;
}

// Raised when a request exceeds configured sieve / integer capacity.
// required_limit carries the capacity that would have been needed.
struct capacity_error : std::runtime_error {
  u64 required_limit;
  capacity_error(const std::string& msg, u64 required)
      : std::runtime_error(msg + " (required limit " + std::to_string(required) + ")"),
        required_limit(required) {}
};

// Splits [lo, hi] into contiguous chunks, applies fn(chunk_lo, chunk_hi)
// concurrently and concatenates the per-chunk results in range order, so the
// merged output is identical for any worker count.
template <typename T, typename Fn>
std::vector<T> parallel_ranges(u64 lo, u64 hi, unsigned workers, Fn fn) {
  std::vector<T> out;
  if (lo > hi) return out;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  u64 span = hi - lo + 1;
  unsigned chunks = static_cast<unsigned>(std::min<u64>(workers, span));
  if (chunks <= 1) return fn(lo, hi);
  std::vector<std::future<std::vector<T>>> futs;
  u64 step = span / chunks;
  u64 cur = lo;
  for (unsigned c = 0; c < chunks; ++c) {
    u64 clo = cur;
    u64 chi = (c + 1 == chunks) ? hi : clo + step - 1;
    cur = chi + 1;
    futs.push_back(std::async(std::launch::async, [=] { return fn(clo, chi); }));
  }
  for (auto& f : futs) {
    auto part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace lir

#endif  // LIR_COMMON_HPP
