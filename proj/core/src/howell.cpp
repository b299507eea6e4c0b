#include "rtheta/howell.hpp"

#include <algorithm>
#include <deque>

namespace rtheta {

namespace {

size_t leading(const Z4Vec& v) {
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) return j;
  }
  return v.size();
}

void add_multiple(Z4Vec& dst, const Z4Vec& src, uint8_t c, size_t from) {
  for (size_t j = from; j < dst.size(); ++j) {
    dst[j] = static_cast<uint8_t>((dst[j] + c * src[j]) & 3);
  }
}

void scale_by_unit(Z4Vec& v, uint8_t u, size_t from) {
  for (size_t j = from; j < v.size(); ++j) {
    v[j] = static_cast<uint8_t>((v[j] * u) & 3);
  }
}

}  // namespace

HowellForm HowellForm::howellize(std::vector<Z4Vec> generators, size_t width) {
  for (const auto& g : generators) {
    if (g.size() != width) {
      throw ValidationError("howellize: row width mismatch");
    }
  }

  // slot[j] = index into rows of the pivot row at column j, or npos.
  constexpr size_t npos = static_cast<size_t>(-1);
  std::vector<Z4Vec> pivot_row(width);
  std::vector<uint8_t> pivot_val(width, 0);

  std::deque<Z4Vec> work(generators.begin(), generators.end());
  while (!work.empty()) {
    Z4Vec v = std::move(work.front());
    work.pop_front();
    for (;;) {
      const size_t j = leading(v);
      if (j == width) break;  // reduced to zero
      const uint8_t a = v[j];
      if (pivot_val[j] == 0) {
        if (a & 1) {
          // Unit leading entry: normalize to pivot 1. inv(1)=1, inv(3)=3.
          scale_by_unit(v, a, j);
        } else {
          // Leading entry 2: pivot 2; its doubling has support to the
          // right of j and must stay representable (Howell closure).
          Z4Vec dbl(v);
          scale_by_unit(dbl, 2, j);
          if (leading(dbl) != width) work.push_back(std::move(dbl));
        }
        pivot_val[j] = static_cast<uint8_t>(a & 1 ? 1 : 2);
        pivot_row[j] = std::move(v);
        break;
      }
      if (pivot_val[j] == 1) {
        add_multiple(v, pivot_row[j], static_cast<uint8_t>(4 - a), j);
        continue;
      }
      // Existing pivot is 2.
      if ((a & 1) == 0) {
        add_multiple(v, pivot_row[j], static_cast<uint8_t>(a == 2 ? 3 : 0), j);
        // a==2: subtract once (add 3x); a==0 impossible here.
        continue;
      }
      // Odd entry displaces the pivot-2 row: v becomes the unit pivot and
      // the old row, reduced by 2v, re-enters the worklist.
      scale_by_unit(v, a, j);  // a in {1,3}, self-inverse
      Z4Vec old = std::move(pivot_row[j]);
      add_multiple(old, v, 2, j);  // old - 2v == old + 2v mod 4
      pivot_row[j] = std::move(v);
      pivot_val[j] = 1;
      if (leading(old) != width) work.push_back(std::move(old));
      break;
    }
  }

  HowellForm h;
  h.width_ = width;
  for (size_t j = 0; j < width; ++j) {
    if (pivot_val[j] == 0) continue;
    Row r;
    r.v = std::move(pivot_row[j]);
    r.pivot = j;
    r.pivot_val = pivot_val[j];
    h.rows_.push_back(std::move(r));
  }

  // Reduce entries above each pivot, left to right; subtracting a pivot row
  // only touches columns >= its pivot, so earlier reductions survive.
  for (size_t ri = 0; ri < h.rows_.size(); ++ri) {
    const size_t j = h.rows_[ri].pivot;
    const uint8_t pv = h.rows_[ri].pivot_val;
    for (size_t above = 0; above < ri; ++above) {
      uint8_t e = h.rows_[above].v[j];
      if (e == 0) continue;
      uint8_t c;
      if (pv == 1) {
        c = static_cast<uint8_t>(4 - e);
      } else {
        if ((e & 1) == 0) {
          c = static_cast<uint8_t>(e == 2 ? 3 : 0);  // clear even entry
        } else {
          c = static_cast<uint8_t>(e == 3 ? 3 : 0);  // 3 -> 1, 1 stays
        }
        if (c == 0) continue;
      }
      add_multiple(h.rows_[above].v, h.rows_[ri].v, c, j);
    }
  }
  return h;
}

Z4Vec HowellForm::reduce(const Z4Vec& v) const {
  if (v.size() != width_) {
    throw ValidationError("reduce: width mismatch");
  }
  Z4Vec w(v);
  for (const Row& r : rows_) {
    const uint8_t e = w[r.pivot];
    if (e == 0) continue;
    if (r.pivot_val == 1) {
      add_multiple(w, r.v, static_cast<uint8_t>(4 - e), r.pivot);
    } else if ((e & 1) == 0) {
      if (e == 2) add_multiple(w, r.v, 3, r.pivot);
    } else if (e == 3) {
      add_multiple(w, r.v, 3, r.pivot);  // reduce 3 to 1
    }
  }
  return w;
}

bool HowellForm::contains(const Z4Vec& v) const {
  if (v.size() != width_) {
    throw ValidationError("membership: width mismatch");
  }
  Z4Vec w(v);
  for (const Row& r : rows_) {
    const uint8_t e = w[r.pivot];
    if (e == 0) continue;
    if (r.pivot_val == 1) {
      add_multiple(w, r.v, static_cast<uint8_t>(4 - e), r.pivot);
    } else {
      if (e & 1) return false;
      add_multiple(w, r.v, 3, r.pivot);  // subtract once; e was 2
    }
  }
  return leading(w) == width_;
}

std::optional<std::vector<uint8_t>> HowellForm::express(const Z4Vec& v) const {
  if (v.size() != width_) {
    throw ValidationError("express: width mismatch");
  }
  Z4Vec w(v);
  std::vector<uint8_t> coeffs(rows_.size(), 0);
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Row& r = rows_[i];
    const uint8_t e = w[r.pivot];
    if (e == 0) continue;
    uint8_t c;
    if (r.pivot_val == 1) {
      c = e;
    } else {
      if (e & 1) return std::nullopt;
      c = static_cast<uint8_t>(e >> 1);  // 2c has to match e in {0,2}
    }
    coeffs[i] = c;
    add_multiple(w, r.v, static_cast<uint8_t>((4 - c) & 3), r.pivot);
  }
  if (leading(w) != width_) return std::nullopt;
  return coeffs;
}

int HowellForm::size_log2() const {
  int log2 = 0;
  for (const Row& r : rows_) log2 += r.pivot_val == 1 ? 2 : 1;
  return log2;
}

uint64_t HowellForm::size() const {
  const int l = size_log2();
  if (l >= 64) {
    throw CapExceededError("module size 2^" + std::to_string(l) +
                           " does not fit in 64 bits");
  }
  return uint64_t(1) << l;
}

void HowellForm::check_cap(uint64_t cap) const {
  const int l = size_log2();
  if (l >= 64 || (uint64_t(1) << l) > cap) {
    throw CapExceededError("enumeration cap exceeded: module has 2^" +
                           std::to_string(l) + " elements, cap " +
                           std::to_string(cap));
  }
}

}  // namespace rtheta
