#ifndef AUED_WORD_HPP
#define AUED_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aued {

inline constexpr int kMaxAlphabet = 256;

// Thrown when a code, design or certificate fails a property it was
// claimed to have; the message names the offending pair/block.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-length word over the alphabet {0, ..., q-1}, q <= 256.
class Word {
 public:
  Word(int q, std::vector<int> symbols) : q_(q) {
    if (q < 2 || q > kMaxAlphabet)
      throw std::invalid_argument("alphabet size must be in [2, 256], got " +
                                  std::to_string(q));
    if (symbols.empty()) throw std::invalid_argument("word length must be >= 1");
    sym_.reserve(symbols.size());
    for (int s : symbols) {
      if (s < 0 || s >= q)
        throw std::invalid_argument("symbol " + std::to_string(s) +
                                    " out of range [0, " + std::to_string(q - 1) + "]");
      sym_.push_back(static_cast<std::uint8_t>(s));
    }
  }

  int q() const { return q_; }
  int length() const { return static_cast<int>(sym_.size()); }
  int operator[](int i) const { return sym_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& symbols() const { return sym_; }

  void set(int i, int s) {
    if (s < 0 || s >= q_) throw std::invalid_argument("symbol out of range");
    sym_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s);
  }

  // Componentwise q-1-x.
  Word complement() const {
    Word w(*this);
    for (auto& s : w.sym_) s = static_cast<std::uint8_t>(q_ - 1 - s);
    return w;
  }

  // Rowwise concatenation; alphabets must match.
  Word concat(const Word& other) const {
    if (other.q_ != q_) throw std::invalid_argument("alphabet mismatch in concatenation");
    Word w(*this);
    w.sym_.insert(w.sym_.end(), other.sym_.begin(), other.sym_.end());
    return w;
  }

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int q_;
  std::vector<std::uint8_t> sym_;
};

namespace detail {
inline void require_comparable(const Word& x, const Word& y) {
  if (x.length() != y.length())
    throw std::invalid_argument("length mismatch: " + std::to_string(x.length()) +
                                " vs " + std::to_string(y.length()));
  if (x.q() != y.q())
    throw std::invalid_argument("alphabet mismatch: " + std::to_string(x.q()) +
                                " vs " + std::to_string(y.q()));
}
}  // namespace detail

// N(x, y): number of positions where x exceeds y. Not symmetric.
inline int count_above(const Word& x, const Word& y) {
  detail::require_comparable(x, y);
  const auto& a = x.symbols();
  const auto& b = y.symbols();
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] > b[i];
  return n;
}

// d_as(x, y) = min(N(x, y), N(y, x)).
inline int asymmetric_distance(const Word& x, const Word& y) {
  detail::require_comparable(x, y);
  const auto& a = x.symbols();
  const auto& b = y.symbols();
  int above = 0, below = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    above += a[i] > b[i];
    below += a[i] < b[i];
  }
  return std::min(above, below);
}

// Number of differing positions; equals N(x,y) + N(y,x).
inline int hamming_distance(const Word& x, const Word& y) {
  detail::require_comparable(x, y);
  const auto& a = x.symbols();
  const auto& b = y.symbols();
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != b[i];
  return n;
}

// x covers y when y never exceeds x.
inline bool covers(const Word& x, const Word& y) { return count_above(y, x) == 0; }

// A set of pairwise-distinct equal-length words over one alphabet.
// Insertion order is preserved; several constructions assign meaning
// to row order.
class Code {
 public:
  Code(int q, std::vector<Word> words) : q_(q), words_(std::move(words)) {
    if (words_.empty()) throw std::invalid_argument("code must contain at least one word");
    n_ = words_[0].length();
    for (const auto& w : words_) {
      if (w.q() != q_) throw std::invalid_argument("code words disagree on alphabet");
      if (w.length() != n_) throw std::invalid_argument("code words disagree on length");
    }
    std::vector<Word> sorted = words_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("code contains duplicate words");
  }

  int q() const { return q_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(words_.size()); }
  const Word& word(int i) const { return words_[static_cast<std::size_t>(i)]; }
  const std::vector<Word>& words() const { return words_; }

  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

 private:
  int q_;
  int n_ = 0;
  std::vector<Word> words_;
};

struct DistanceSummary {
  int min_asymmetric = 0;
  int min_hamming = 0;
  std::pair<int, int> arg_pair{0, 0};  // indices witnessing min_asymmetric
};

// Exact all-pairs scan, O(a^2 n). Ties in arg_pair go to the
// lexicographically smallest index pair.
inline DistanceSummary min_asymmetric_distance(const Code& c) {
  if (c.size() < 2)
    throw std::invalid_argument("minimum distance needs at least two words");
  DistanceSummary s;
  s.min_asymmetric = c.n() + 1;
  s.min_hamming = c.n() + 1;
  for (int i = 0; i < c.size(); ++i) {
    const auto& a = c.word(i).symbols();
    for (int j = i + 1; j < c.size(); ++j) {
      const auto& b = c.word(j).symbols();
      int above = 0, below = 0;
      for (std::size_t p = 0; p < a.size(); ++p) {
        above += a[p] > b[p];
        below += a[p] < b[p];
      }
      if (std::min(above, below) < s.min_asymmetric) {
        s.min_asymmetric = std::min(above, below);
        s.arg_pair = {i, j};
      }
      s.min_hamming = std::min(s.min_hamming, above + below);
    }
  }
  return s;
}

// Theorem-level characterization: a code corrects t symmetric errors and
// detects all unidirectional errors iff every ordered pair has N >= t+1,
// i.e. min asymmetric distance >= t+1. Singletons qualify vacuously.
inline bool is_t_ec_aued(const Code& c, int t) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  if (c.size() < 2) return true;
  return min_asymmetric_distance(c).min_asymmetric >= t + 1;
}

}  // namespace aued

#endif  // AUED_WORD_HPP
