#ifndef CLANS_BITMATRIX_HPP
#define CLANS_BITMATRIX_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace clans {

// Square bit matrix with 64-bit packed rows; row r holds the set
// {c : test(r,c)}. Backs the order relation and the reachability math.
class BitMatrix {
 public:
  explicit BitMatrix(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) *
                                           static_cast<std::size_t>(words_)) {}

  int n() const { return n_; }
  int words() const { return words_; }

  std::uint64_t* row(int r) { return bits_.data() + std::size_t(r) * words_; }
  const std::uint64_t* row(int r) const {
    return bits_.data() + std::size_t(r) * words_;
  }

  void set(int r, int c) { row(r)[c >> 6] |= std::uint64_t{1} << (c & 63); }
  void reset(int r, int c) {
    row(r)[c >> 6] &= ~(std::uint64_t{1} << (c & 63));
  }
  bool test(int r, int c) const {
    return (row(r)[c >> 6] >> (c & 63)) & 1u;
  }

  void or_row_into(int src, int dst) {
    const std::uint64_t* s = row(src);
    std::uint64_t* d = row(dst);
    for (int w = 0; w < words_; ++w) d[w] |= s[w];
  }

  int row_popcount(int r) const {
    int total = 0;
    const std::uint64_t* p = row(r);
    for (int w = 0; w < words_; ++w) total += std::popcount(p[w]);
    return total;
  }

  // All columns set in row r, ascending.
  template <typename Fn>
  void for_each_in_row(int r, Fn&& fn) const {
    const std::uint64_t* p = row(r);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = p[w];
      while (bits) {
        fn(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  BitMatrix transposed() const {
    BitMatrix t(n_);
    for (int r = 0; r < n_; ++r)
      for_each_in_row(r, [&](int c) { t.set(c, r); });
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  static int and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                          int words) {
    int total = 0;
    for (int w = 0; w < words; ++w) total += std::popcount(a[w] & b[w]);
    return total;
  }

  static int and3_popcount(const std::uint64_t* a, const std::uint64_t* b,
                           const std::uint64_t* c, int words) {
    int total = 0;
    for (int w = 0; w < words; ++w) total += std::popcount(a[w] & b[w] & c[w]);
    return total;
  }

  static bool subset(const std::uint64_t* a, const std::uint64_t* b,
                     int words) {
    for (int w = 0; w < words; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  }

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace clans

#endif  // CLANS_BITMATRIX_HPP
