#ifndef AUED_BOUNDS_HPP
#define AUED_BOUNDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aued {

enum class BoundRegime { trivial_q_ge_a, gbt };

// Exact evaluation of the generalized Boinck-van Tilborg lower bound on the
// length of a q-ary code of size a with minimum asymmetric distance T.
// All arithmetic is integer; the pre-ceiling rational is kept.
struct BoundReport {
  int q = 0;
  int a = 0;
  int T = 0;
  int alpha = 0;                 // floor(a / q)
  long long raw_numerator = 0;   // 2 a (a-1) T
  long long raw_denominator = 1; // a(a-alpha) - (a - alpha q)(alpha + 1)
  long long gbt_value = 0;       // ceil(raw_numerator / raw_denominator)
  BoundRegime regime = BoundRegime::gbt;
};

namespace detail {

inline long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("bound arithmetic overflow");
  return r;
}

inline long long ceil_div(long long num, long long den) {
  // den > 0 guaranteed by caller
  return num / den + (num % den != 0 ? 1 : 0);
}

}  // namespace detail

// gbt(q, a, T): the GBT lower bound report. For a <= q the bound degenerates
// and the exact optimum 2T is reported instead (trivial regime).
inline BoundReport gbt(int q, int a, int T) {
  if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
  if (a < 2) throw std::invalid_argument("code size must be >= 2");
  if (T < 1) throw std::invalid_argument("asymmetric distance must be >= 1");

  BoundReport r;
  r.q = q;
  r.a = a;
  r.T = T;
  r.alpha = a / q;

  if (a <= q) {
    r.regime = BoundRegime::trivial_q_ge_a;
    r.gbt_value = 2LL * T;
    r.raw_numerator = 2LL * T;
    r.raw_denominator = 1;
    return r;
  }

  r.regime = BoundRegime::gbt;
  const long long aa = a, alpha = r.alpha;
  r.raw_numerator = detail::checked_mul(detail::checked_mul(2 * aa, aa - 1), T);
  r.raw_denominator = aa * (aa - alpha) - (aa - alpha * q) * (alpha + 1);
  if (r.raw_denominator <= 0)
    throw std::logic_error("GBT denominator not positive for q=" + std::to_string(q) +
                           " a=" + std::to_string(a));
  r.gbt_value = detail::ceil_div(r.raw_numerator, r.raw_denominator);
  return r;
}

// Binary specialization, ceil((4 - 2/ceil(a/2)) T) evaluated over exact
// rationals: with h = ceil(a/2) this is ceil((4h - 2) T / h).
inline long long bvt_binary(int a, int T) {
  if (a < 2) throw std::invalid_argument("code size must be >= 2");
  if (T < 1) throw std::invalid_argument("asymmetric distance must be >= 1");
  const long long h = (a + 1) / 2;
  const long long num = detail::checked_mul(4 * h - 2, T);
  return detail::ceil_div(num, h);
}

// Smallest size a' <= a whose GBT value equals gbt(q, a, T). Deleting words
// from an optimal size-a code stays optimal down to this size, because the
// bound value does not move while the construction length cannot grow.
inline int gbt_plateau(int q, int a, int T) {
  const long long target = gbt(q, a, T).gbt_value;
  int lo = a;
  for (int s = a - 1; s >= 2; --s) {
    if (gbt(q, s, T).gbt_value != target) break;
    lo = s;
  }
  return lo;
}

// Juxtaposing optimal codes of distances T1 and T2 is optimal exactly when
// the bound is additive at (T1, T2).
inline bool gbt_additive(int q, int a, int T1, int T2) {
  return gbt(q, a, T1).gbt_value + gbt(q, a, T2).gbt_value ==
         gbt(q, a, T1 + T2).gbt_value;
}

}  // namespace aued

#endif  // AUED_BOUNDS_HPP
