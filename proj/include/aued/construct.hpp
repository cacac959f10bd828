#ifndef AUED_CONSTRUCT_HPP
#define AUED_CONSTRUCT_HPP

#include <numeric>
#include <vector>

#include "aued/gf.hpp"
#include "aued/word.hpp"

namespace aued {

// The a x 2T array of T columns (0,...,a-1) next to T columns (a-1,...,0).
// Optimal whenever a <= q; min asymmetric distance is exactly T.
inline Code trivial_code(int q, int a, int T) {
  if (a < 2) throw std::invalid_argument("code size must be >= 2");
  if (a > q)
    throw std::invalid_argument("trivial construction needs a <= q (got a=" +
                                std::to_string(a) + ", q=" + std::to_string(q) + ")");
  if (T < 1) throw std::invalid_argument("asymmetric distance must be >= 1");
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(a));
  for (int i = 0; i < a; ++i) {
    std::vector<int> sym;
    sym.reserve(static_cast<std::size_t>(2 * T));
    sym.insert(sym.end(), static_cast<std::size_t>(T), i);
    sym.insert(sym.end(), static_cast<std::size_t>(T), a - 1 - i);
    words.emplace_back(q, std::move(sym));
  }
  return Code(q, std::move(words));
}

// Code from the near one-factorization of K_{2k-1}: a (2k-1) x (2k-1) array
// over [0, k-1] with rows/columns indexed by Z_{2k-1}. Cell (i, j) holds 0 on
// the diagonal and otherwise the unique x in [1, k-1] with i = j + x or
// i = j - x mod 2k-1, i.e. the circular distance between i and j. Every row
// sees each nonzero symbol twice and 0 once; min asymmetric distance is k-1.
inline Code near_factor_code(int k) {
  if (k < 2) throw std::invalid_argument("order parameter must be >= 2");
  const int m = 2 * k - 1;
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::vector<int> sym(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      int d = ((i - j) % m + m) % m;
      sym[static_cast<std::size_t>(j)] = std::min(d, m - d);
    }
    words.emplace_back(k, std::move(sym));
  }
  return Code(k, std::move(words));
}

// Odd-k extension: shift every entry of the near-factor array by (k-1)/2
// mod k and add the constant word of (k-1)/2's, giving 2k words of length
// 2k-1 with min asymmetric distance still k-1.
inline Code near_factor_code_ext(int k) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("extended near-factor code needs odd k >= 3");
  const int m = 2 * k - 1;
  const int shift = (k - 1) / 2;
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(2 * k));
  words.emplace_back(k, std::vector<int>(static_cast<std::size_t>(m), shift));
  Code base = near_factor_code(k);
  for (const auto& row : base) {
    std::vector<int> sym(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) sym[static_cast<std::size_t>(j)] = (row[j] + shift) % k;
    words.emplace_back(k, std::move(sym));
  }
  return Code(k, std::move(words));
}

// c -> c | (q-1-c). The output's min asymmetric distance equals the input's
// min Hamming distance: N(x|x~, y|y~) = N(x,y) + N(y,x) = d_H(x, y).
inline Code mirror_concatenate(const Code& c) {
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(c.size()));
  for (const auto& w : c) words.push_back(w.concat(w.complement()));
  return Code(c.q(), std::move(words));
}

// The [q+1, 2, q] extended Reed-Solomon code: for every (a, b) in GF(q)^2 the
// word (f(x_1), ..., f(x_q), a) with f(x) = a x + b, evaluation points in
// field encoding order. Size q^2, min Hamming distance exactly q.
inline Code extended_rs_code(int q) {
  FieldTable f = FieldTable::make(q);
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      std::vector<int> sym;
      sym.reserve(static_cast<std::size_t>(q + 1));
      for (int x = 0; x < q; ++x) sym.push_back(f.add(f.mul(a, x), b));
      sym.push_back(a);
      words.emplace_back(q, std::move(sym));
    }
  }
  return Code(q, std::move(words));
}

// Mirror-concatenated extended RS code: q^2 words of length 2q+2 with min
// asymmetric distance q, meeting the GBT bound.
inline Code rs_mirror_code(int q) { return mirror_concatenate(extended_rs_code(q)); }

// Rowwise concatenation of two equal-size codes; pairing maps rows of c1 to
// rows of c2 (default: listed order). Any bijection preserves the distance
// sum, so min d_as of the output is at least the sum of the inputs'.
inline Code juxtapose(const Code& c1, const Code& c2, std::vector<int> pairing = {}) {
  if (c1.size() != c2.size())
    throw std::invalid_argument("juxtaposition needs equal code sizes (" +
                                std::to_string(c1.size()) + " vs " +
                                std::to_string(c2.size()) + ")");
  if (c1.q() != c2.q()) throw std::invalid_argument("juxtaposition needs equal alphabets");
  if (pairing.empty()) {
    pairing.resize(static_cast<std::size_t>(c1.size()));
    std::iota(pairing.begin(), pairing.end(), 0);
  }
  if (static_cast<int>(pairing.size()) != c1.size())
    throw std::invalid_argument("pairing size mismatch");
  std::vector<bool> seen(pairing.size(), false);
  for (int p : pairing) {
    if (p < 0 || p >= c2.size() || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("pairing is not a bijection");
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(c1.size()));
  for (int i = 0; i < c1.size(); ++i)
    words.push_back(c1.word(i).concat(c2.word(pairing[static_cast<std::size_t>(i)])));
  return Code(c1.q(), std::move(words));
}

namespace detail {
inline long long level_set_count(int n, int q, int target) {
  // words of length n over [0, q-1] with symbol sum = target
  std::vector<long long> dp(static_cast<std::size_t>(target) + 1, 0);
  dp[0] = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> next(dp.size(), 0);
    for (int s = 0; s <= target; ++s) {
      if (dp[static_cast<std::size_t>(s)] == 0) continue;
      for (int v = 0; v < q && s + v <= target; ++v)
        next[static_cast<std::size_t>(s + v)] += dp[static_cast<std::size_t>(s)];
    }
    dp = std::move(next);
  }
  return dp[static_cast<std::size_t>(target)];
}
}  // namespace detail

// All words of length n over [0, q-1] whose symbol sum is the middle level
// ceil(n(q-1)/2). Pairwise unordered, so min asymmetric distance >= 1, and
// of maximal size among length-n codes with that property.
inline Code debruijn_code(int n, int q) {
  if (n < 1) throw std::invalid_argument("length must be >= 1");
  if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("alphabet size must be in [2, 256]");
  const int target = (n * (q - 1) + 1) / 2;
  if (detail::level_set_count(n, q, target) > 10'000'000)
    throw std::invalid_argument("level-set code too large to materialize");

  std::vector<Word> words;
  std::vector<int> sym(static_cast<std::size_t>(n), 0);
  // lexicographic depth-first enumeration with remaining-sum pruning
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n) {
      if (remaining == 0) words.emplace_back(q, sym);
      return;
    }
    const int slots = n - pos - 1;
    for (int v = 0; v < q; ++v) {
      int rest = remaining - v;
      if (rest < 0) break;
      if (rest > slots * (q - 1)) continue;
      sym[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, rest);
    }
  };
  rec(rec, 0, target);
  return Code(q, std::move(words));
}

}  // namespace aued

#endif  // AUED_CONSTRUCT_HPP
