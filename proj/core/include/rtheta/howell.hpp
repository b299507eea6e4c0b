#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rtheta/errors.hpp"

namespace rtheta {

// Vector over Z4, entries in {0,1,2,3}.
using Z4Vec = std::vector<uint8_t>;

// Howell form of a Z4-submodule of Z4^m. Pivots are normalized to 1 or 2,
// pivot columns strictly increase, entries above a pivot 1 are 0 and entries
// above a pivot 2 lie in {0,1}. The form is canonical: two generating sets
// with equal span produce identical HowellForms, and membership is decided
// by plain left-to-right reduction.
class HowellForm {
 public:
  struct Row {
    Z4Vec v;
    size_t pivot = 0;
    uint8_t pivot_val = 0;  // 1 or 2
    friend bool operator==(const Row&, const Row&) = default;
  };

  static HowellForm howellize(std::vector<Z4Vec> generators, size_t width);

  size_t width() const { return width_; }
  const std::vector<Row>& rows() const { return rows_; }

  bool contains(const Z4Vec& v) const;

  // Coefficients c (one per row) with v = sum c_i * row_i, or nullopt when v
  // is not in the span.
  std::optional<std::vector<uint8_t>> express(const Z4Vec& v) const;

  // Canonical coset representative of v modulo the span.
  Z4Vec reduce(const Z4Vec& v) const;

  // |span| = 4^{#pivot-1 rows} * 2^{#pivot-2 rows}; exact as an exponent.
  int size_log2() const;
  // Throws CapExceededError when the exact count does not fit in 64 bits.
  uint64_t size() const;

  // Visit every span element exactly once. Throws CapExceededError when
  // size() exceeds cap before any element is produced.
  template <class Fn>
  void enumerate_span(uint64_t cap, Fn&& fn) const {
    check_cap(cap);
    Z4Vec acc(width_, 0);
    enumerate_rec(0, acc, fn);
  }

  friend bool operator==(const HowellForm&, const HowellForm&) = default;

 private:
  void check_cap(uint64_t cap) const;

  template <class Fn>
  void enumerate_rec(size_t i, Z4Vec& acc, Fn&& fn) const {
    if (i == rows_.size()) {
      fn(const_cast<const Z4Vec&>(acc));
      return;
    }
    const Row& r = rows_[i];
    const int reps = r.pivot_val == 1 ? 4 : 2;
    enumerate_rec(i + 1, acc, fn);
    for (int c = 1; c < reps; ++c) {
      for (size_t j = r.pivot; j < width_; ++j) {
        acc[j] = static_cast<uint8_t>((acc[j] + r.v[j]) & 3);
      }
      enumerate_rec(i + 1, acc, fn);
    }
    // Undo the accumulated reps-1 additions.
    for (size_t j = r.pivot; j < width_; ++j) {
      acc[j] = static_cast<uint8_t>((acc[j] - (reps - 1) * r.v[j]) & 3);
    }
  }

  size_t width_ = 0;
  std::vector<Row> rows_;
};

inline HowellForm howellize(std::vector<Z4Vec> generators, size_t width) {
  return HowellForm::howellize(std::move(generators), width);
}

}  // namespace rtheta
