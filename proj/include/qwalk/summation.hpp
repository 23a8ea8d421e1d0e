#ifndef QWALK_SUMMATION_HPP
#define QWALK_SUMMATION_HPP

#include <cstddef>
#include <span>

namespace qwalk {

// Pairwise (cascade) summation. Error grows as O(log n) rather than O(n),
// and the result does not depend on evaluation order of the caller.
template <class T>
T pairwise_sum(std::span<const T> xs) {
  constexpr std::size_t kBlock = 16;
  if (xs.size() <= kBlock) {
    T acc{};
    for (const T &x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace qwalk

#endif  // QWALK_SUMMATION_HPP
