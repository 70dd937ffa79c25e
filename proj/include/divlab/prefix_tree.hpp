#pragma once

#include <bit>
#include <cstddef>
#include <vector>

namespace divlab {

// Binary partial-sum tree over non-negative leaf weights.  Selecting an index
// with probability proportional to its weight costs O(log n), as does a leaf
// update.  Internal nodes are always recomputed as the sum of their children
// (never delta-adjusted), so the root is an exact function of the current
// leaves: it is zero iff every leaf is zero, which the engines rely on to
// detect absorbing states.
class RateTree {
 public:
  explicit RateTree(std::size_t n)
      : n_(n), base_(std::bit_ceil(n < 2 ? std::size_t{2} : n)), node_(2 * base_, 0.0) {}

  std::size_t size() const { return n_; }

  double leaf(std::size_t i) const { return node_[base_ + i]; }
  double total() const { return node_[1]; }

  // leaf write + path recompute
  void update(std::size_t i, double w) {
    std::size_t k = base_ + i;
    node_[k] = w;
    for (k >>= 1; k >= 1; k >>= 1) node_[k] = node_[2 * k] + node_[2 * k + 1];
  }

  // leaf write without path maintenance; call rebuild() afterwards
  void set(std::size_t i, double w) { node_[base_ + i] = w; }

  void rebuild() {
    for (std::size_t k = base_ - 1; k >= 1; --k) node_[k] = node_[2 * k] + node_[2 * k + 1];
  }

  // index with weight-proportional probability, u uniform on [0, total())
  std::size_t sample(double u) const {
    std::size_t k = 1;
    while (k < base_) {
      const double left = node_[2 * k];
      if (u < left) {
        k = 2 * k;
      } else {
        u -= left;
        k = 2 * k + 1;
      }
    }
    std::size_t i = k - base_;
    // float roundoff can push u past the last positive leaf; walk back
    while (i > 0 && (i >= n_ || node_[base_ + i] <= 0.0)) --i;
    return i;
  }

 private:
  std::size_t n_;
  std::size_t base_;
  std::vector<double> node_;
};

}  // namespace divlab
