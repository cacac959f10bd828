#ifndef AUED_SEARCH_HPP
#define AUED_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aued/bounds.hpp"
#include "aued/word.hpp"

namespace aued {

inline constexpr long long kDefaultSearchCap = 19683;  // 3^9 candidate words

enum class Verdict { optimal_meets_gbt, optimal_by_exhaustion, upper_bound_only };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::optimal_meets_gbt: return "optimal_meets_gbt";
    case Verdict::optimal_by_exhaustion: return "optimal_by_exhaustion";
    case Verdict::upper_bound_only: return "upper_bound_only";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t nodes = 0;
};

struct OptimalityCertificate {
  int q = 0, a = 0, T = 0;
  int n = 0;  // certified length; 0 when undetermined
  long long gbt_value = 0;
  Verdict verdict = Verdict::upper_bound_only;
  std::optional<Code> witness;
  SearchStats stats;
  int searched_up_to = 0;  // largest length fully searched, when search ran
};

struct MaxCodeResult {
  int size = 0;
  std::optional<Code> witness;
  SearchStats stats;
};

namespace detail {

// Fixed-width bitset over vertex ids.
class VertexSet {
 public:
  explicit VertexSet(int n = 0) : n_(n), w_((static_cast<std::size_t>(n) + 63) / 64, 0) {}
  void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w_[static_cast<std::size_t>(i) >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return w_[static_cast<std::size_t>(i) >> 6] >> (i & 63) & 1; }
  int count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }
  bool empty() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  void intersect(const VertexSet& other) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= other.w_[i];
  }
  // drop every vertex with index <= i
  void clear_through(int i) {
    const std::size_t blk = static_cast<std::size_t>(i) >> 6;
    for (std::size_t b = 0; b < blk && b < w_.size(); ++b) w_[b] = 0;
    if (blk < w_.size()) {
      int bit = i & 63;
      std::uint64_t keep = bit == 63 ? 0 : ~0ULL << (bit + 1);
      w_[blk] &= keep;
    }
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t blk = 0; blk < w_.size(); ++blk) {
      std::uint64_t x = w_[blk];
      while (x) {
        int bit = __builtin_ctzll(x);
        f(static_cast<int>(blk * 64) + bit);
        x &= x - 1;
      }
    }
  }
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

inline Word word_from_index(int q, int n, long long index) {
  std::vector<int> sym(static_cast<std::size_t>(n));
  for (int pos = n - 1; pos >= 0; --pos) {
    sym[static_cast<std::size_t>(pos)] = static_cast<int>(index % q);
    index /= q;
  }
  return Word(q, std::move(sym));
}

inline bool nondecreasing(const Word& w) {
  for (int i = 1; i < w.length(); ++i)
    if (w[i] < w[i - 1]) return false;
  return true;
}

// Branch and bound over the compatibility graph with a greedy-coloring
// bound. Candidates are processed in lexicographic word order, so results
// are deterministic.
class CliqueSolver {
 public:
  CliqueSolver(std::vector<VertexSet> adj, SearchStats& stats)
      : adj_(std::move(adj)), stats_(stats), nvert_(static_cast<int>(adj_.size())) {}

  void run(const std::vector<int>& roots, int& best, std::vector<int>& best_clique) {
    best_ = best;
    best_clique_ = best_clique;
    for (int r : roots) {
      current_.clear();
      current_.push_back(r);
      // cliques are enumerated from their smallest vertex
      VertexSet cand = adj_[static_cast<std::size_t>(r)];
      cand.clear_through(r);
      expand(cand);
    }
    best = best_;
    best_clique = best_clique_;
  }

 private:
  void expand(const VertexSet& cand) {
    ++stats_.nodes;
    const int size = static_cast<int>(current_.size());
    if (cand.empty()) {
      if (size > best_) {
        best_ = size;
        best_clique_ = current_;
      }
      return;
    }
    if (size + cand.count() <= best_) return;

    // greedy coloring bound: vertices of color c can only extend a clique by c
    std::vector<int> order, color;
    color_sort(cand, order, color);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + color[static_cast<std::size_t>(i)] <= best_) return;
      int v = order[static_cast<std::size_t>(i)];
      current_.push_back(v);
      VertexSet next = cand;
      next.intersect(adj_[static_cast<std::size_t>(v)]);
      // only keep candidates not yet tried at this level
      for (std::size_t j = static_cast<std::size_t>(i); j < order.size(); ++j)
        next.reset(order[j]);
      expand(next);
      current_.pop_back();
    }
  }

  void color_sort(const VertexSet& cand, std::vector<int>& order, std::vector<int>& color) {
    std::vector<VertexSet> classes;
    cand.for_each([&](int v) {
      for (std::size_t c = 0; c < classes.size(); ++c) {
        bool clash = false;
        classes[c].for_each([&](int u) {
          if (adj_[static_cast<std::size_t>(v)].test(u)) clash = true;
        });
        if (!clash) {
          classes[c].set(v);
          order.push_back(v);
          color.push_back(static_cast<int>(c) + 1);
          return;
        }
      }
      classes.emplace_back(nvert_);
      classes.back().set(v);
      order.push_back(v);
      color.push_back(static_cast<int>(classes.size()));
    });
    // sort by color ascending, stable on vertex order
    std::vector<std::size_t> idx(order.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    std::vector<int> o2(order.size()), c2(color.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      o2[i] = order[idx[i]];
      c2[i] = color[idx[i]];
    }
    order = std::move(o2);
    color = std::move(c2);
  }

  std::vector<VertexSet> adj_;
  SearchStats& stats_;
  int nvert_;
  std::vector<int> current_, best_clique_;
  int best_ = 0;
};

}  // namespace detail

// Exact maximum size of a length-n code over [0, q-1] with min asymmetric
// distance >= T, with a witness. Vertices are all q^n words; edges join pairs
// at distance >= T. Exhaustive branch and bound; the first word of the search
// is restricted to nondecreasing words when symmetry_reduction is set, which
// is sound because sorting coordinates maps maximum codes to maximum codes
// and some maximum code has a nondecreasing lexicographic minimum.
inline MaxCodeResult max_code_size(int q, int n, int T, long long cap = kDefaultSearchCap,
                                   bool symmetry_reduction = true) {
  if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("alphabet size must be in [2, 256]");
  if (n < 1) throw std::invalid_argument("length must be >= 1");
  if (T < 1) throw std::invalid_argument("asymmetric distance must be >= 1");

  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > cap)
      throw std::invalid_argument("search space " + std::to_string(q) + "^" + std::to_string(n) +
                                  " exceeds cap " + std::to_string(cap));
  }
  const int V = static_cast<int>(total);

  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(V));
  for (long long i = 0; i < V; ++i) words.push_back(detail::word_from_index(q, n, i));

  std::vector<detail::VertexSet> adj(static_cast<std::size_t>(V), detail::VertexSet(V));
  for (int i = 0; i < V; ++i)
    for (int j = i + 1; j < V; ++j)
      if (asymmetric_distance(words[static_cast<std::size_t>(i)],
                              words[static_cast<std::size_t>(j)]) >= T) {
        adj[static_cast<std::size_t>(i)].set(j);
        adj[static_cast<std::size_t>(j)].set(i);
      }

  std::vector<int> roots;
  for (int v = 0; v < V; ++v)
    if (!symmetry_reduction || detail::nondecreasing(words[static_cast<std::size_t>(v)]))
      roots.push_back(v);

  MaxCodeResult res;
  int best = 1;  // a singleton is always a valid code
  std::vector<int> best_clique{0};
  detail::CliqueSolver solver(std::move(adj), res.stats);
  solver.run(roots, best, best_clique);

  res.size = best;
  std::vector<Word> clique_words;
  for (int v : best_clique) clique_words.push_back(words[static_cast<std::size_t>(v)]);
  res.witness = Code(q, std::move(clique_words));
  return res;
}

// First a_target rows; deleting words never decreases the min distance.
inline Code shrink(const Code& c, int a_target) {
  if (a_target < 1 || a_target > c.size())
    throw std::invalid_argument("shrink target must be in [1, " + std::to_string(c.size()) + "]");
  std::vector<Word> words(c.words().begin(), c.words().begin() + a_target);
  return Code(c.q(), std::move(words));
}

// Checks the claimed distance exactly, then compares the length with the GBT
// bound. Lengths below the bound indicate a broken scan and are rejected.
inline OptimalityCertificate certify(const Code& c, int T) {
  OptimalityCertificate cert;
  cert.q = c.q();
  cert.a = c.size();
  cert.T = T;
  cert.n = c.n();
  if (c.size() >= 2) {
    auto d = min_asymmetric_distance(c);
    if (d.min_asymmetric < T)
      throw verification_error("distance shortfall: d_as=" + std::to_string(d.min_asymmetric) +
                               " < T=" + std::to_string(T) + " at pair (" +
                               std::to_string(d.arg_pair.first) + ", " +
                               std::to_string(d.arg_pair.second) + ")");
  }
  cert.gbt_value = gbt(c.q(), c.size(), T).gbt_value;
  if (cert.n < cert.gbt_value)
    throw std::logic_error("length below the GBT bound; distance scan is inconsistent");
  cert.verdict = cert.n == cert.gbt_value ? Verdict::optimal_meets_gbt : Verdict::upper_bound_only;
  cert.witness = c;
  return cert;
}

// Exact n_q(a, T) by scanning lengths upward from the GBT bound. Every length
// below the returned one is proved infeasible by the exhaustive search, so a
// hit above the bound is still exact (optimal_by_exhaustion).
inline OptimalityCertificate min_length(int q, int a, int T, int n_max,
                                        long long cap = kDefaultSearchCap) {
  OptimalityCertificate cert;
  cert.q = q;
  cert.a = a;
  cert.T = T;
  cert.gbt_value = gbt(q, a, T).gbt_value;
  for (int n = static_cast<int>(cert.gbt_value); n <= n_max; ++n) {
    MaxCodeResult r;
    try {
      r = max_code_size(q, n, T, cap);
    } catch (const std::invalid_argument&) {
      cert.verdict = Verdict::upper_bound_only;  // budget exhausted: partial
      return cert;
    }
    cert.stats.nodes += r.stats.nodes;
    cert.searched_up_to = n;
    if (r.size >= a) {
      cert.n = n;
      cert.verdict = n == cert.gbt_value ? Verdict::optimal_meets_gbt
                                         : Verdict::optimal_by_exhaustion;
      cert.witness = shrink(*r.witness, a);
      return cert;
    }
  }
  cert.verdict = Verdict::upper_bound_only;
  return cert;
}

}  // namespace aued

#endif  // AUED_SEARCH_HPP
