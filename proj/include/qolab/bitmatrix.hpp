#ifndef QOLAB_BITMATRIX_HPP
#define QOLAB_BITMATRIX_HPP

#include <cstdint>
#include <vector>

#include "qolab/error.hpp"

namespace qolab {

// Square boolean matrix with 64-bit packed rows. Ground sets stay small
// (a few hundred), so row-wise word operations cover everything the
// closure and validation passes need.
class BitMatrix {
 public:
  BitMatrix() : n_(0), words_(0) {}

  explicit BitMatrix(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative matrix size");
  }

  int size() const { return n_; }

  bool test(int i, int j) const {
    return (bits_[row_offset(i) + static_cast<std::size_t>(j >> 6)] >>
            (j & 63)) & 1ULL;
  }

  void set(int i, int j, bool value = true) {
    std::uint64_t& w = bits_[row_offset(i) + static_cast<std::size_t>(j >> 6)];
    const std::uint64_t mask = 1ULL << (j & 63);
    if (value)
      w |= mask;
    else
      w &= ~mask;
  }

  // row[dst] |= row[src]
  void or_row_into(int src, int dst) {
    const std::size_t s = row_offset(src), d = row_offset(dst);
    for (int w = 0; w < words_; ++w) bits_[d + w] |= bits_[s + w];
  }

  bool operator==(const BitMatrix& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

  int count() const {
    int total = 0;
    for (std::uint64_t w : bits_) total += __builtin_popcountll(w);
    return total;
  }

 private:
  std::size_t row_offset(int i) const {
    return static_cast<std::size_t>(i) * words_;
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace qolab

#endif
