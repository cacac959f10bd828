#ifndef AUED_SIMULATE_HPP
#define AUED_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "aued/word.hpp"

namespace aued {

enum class ErrorKind { symmetric, increasing, decreasing };

// Positions with per-position deltas. Unidirectional kinds constrain the
// delta signs; the channel only ever moves symbols one way within a word.
struct ErrorPattern {
  ErrorKind kind = ErrorKind::symmetric;
  std::vector<std::pair<int, int>> deltas;  // (position, delta), positions distinct
};

inline Word inject(const Word& w, const ErrorPattern& p) {
  std::vector<bool> used(static_cast<std::size_t>(w.length()), false);
  Word out = w;
  for (auto [pos, delta] : p.deltas) {
    if (pos < 0 || pos >= w.length())
      throw std::invalid_argument("pattern position out of range");
    if (used[static_cast<std::size_t>(pos)])
      throw std::invalid_argument("pattern repeats position " + std::to_string(pos));
    used[static_cast<std::size_t>(pos)] = true;
    if (delta == 0) throw std::invalid_argument("pattern delta must be nonzero");
    if (p.kind == ErrorKind::increasing && delta < 0)
      throw std::invalid_argument("increasing pattern has a negative delta");
    if (p.kind == ErrorKind::decreasing && delta > 0)
      throw std::invalid_argument("decreasing pattern has a positive delta");
    int v = w[pos] + delta;
    if (v < 0 || v >= w.q())
      throw std::invalid_argument("pattern pushes symbol out of range at position " +
                                  std::to_string(pos));
    out.set(pos, v);
  }
  return out;
}

struct DecodeOutcome {
  enum class Kind { corrected, detected } kind = Kind::detected;
  std::optional<Word> word;  // set when corrected
};

// Bounded-distance decoding with radius t. For a verified t-EC-AUED codebook
// the minimum Hamming distance is at least 2t+2, so at most one codeword can
// sit within radius t of the received word.
inline DecodeOutcome decode(const Code& codebook, int t, const Word& received) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  if (received.length() != codebook.n() || received.q() != codebook.q())
    throw std::invalid_argument("received word does not match the codebook");
  DecodeOutcome out;
  for (const auto& c : codebook) {
    const auto& a = c.symbols();
    const auto& b = received.symbols();
    int d = 0;
    for (std::size_t i = 0; i < a.size() && d <= t; ++i) d += a[i] != b[i];
    if (d <= t) {
      if (out.kind == DecodeOutcome::Kind::corrected)
        throw std::logic_error("two codewords within radius t; codebook was not verified");
      out.kind = DecodeOutcome::Kind::corrected;
      out.word = c;
    }
  }
  return out;
}

// Enumerates every symmetric pattern of weight 1..max_weight on w (all
// position subsets, all alternative symbols per position). fn receives the
// perturbed word and may be called many times; weight-0 is skipped.
template <typename F>
void for_each_symmetric_corruption(const Word& w, int max_weight, F&& fn) {
  const int n = w.length();
  std::vector<int> positions;
  Word scratch = w;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (!positions.empty()) fn(const_cast<const Word&>(scratch));
    if (remaining == 0) return;
    for (int pos = start; pos < n; ++pos) {
      positions.push_back(pos);
      const int original = w[pos];
      for (int v = 0; v < w.q(); ++v) {
        if (v == original) continue;
        scratch.set(pos, v);
        self(self, pos + 1, remaining - 1);
      }
      scratch.set(pos, original);
      positions.pop_back();
    }
  };
  rec(rec, 0, max_weight);
}

struct TrialCampaign {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  int mix_symmetric = 1;       // relative draw weights
  int mix_unidirectional = 1;
  int max_symmetric_weight = -1;  // -1: use the codebook's t
};

struct TrialStats {
  std::uint64_t symmetric_trials = 0;
  std::uint64_t unidirectional_trials = 0;
  std::uint64_t corrected = 0;      // decoded to the transmitted word
  std::uint64_t detected = 0;
  std::uint64_t miscorrected = 0;   // decoded to a different codeword

  bool operator==(const TrialStats&) const = default;
};

namespace detail {

// Rejection-sampled bounded draw; portable across standard libraries, which
// keeps seeded campaigns reproducible everywhere.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("bounded(0)");
  const std::uint64_t limit = ~0ULL - ~0ULL % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline std::vector<int> sample_distinct(std::mt19937_64& rng, const std::vector<int>& pool,
                                        int count) {
  std::vector<int> p = pool;
  std::vector<int> out;
  for (int i = 0; i < count; ++i) {
    auto pick = static_cast<std::size_t>(bounded(rng, p.size()));
    out.push_back(p[pick]);
    p[pick] = p.back();
    p.pop_back();
  }
  return out;
}

}  // namespace detail

// Seeded random error-injection campaign. Symmetric trials use weight <= t
// (or the campaign override) and must all decode back to the transmitted
// word; unidirectional trials use any magnitude and must never miscorrect.
inline TrialStats run_trials(const Code& codebook, int t, const TrialCampaign& campaign) {
  if (!is_t_ec_aued(codebook, t))
    throw verification_error("codebook is not a " + std::to_string(t) + "-EC-AUED code");
  if (campaign.mix_symmetric < 0 || campaign.mix_unidirectional < 0 ||
      campaign.mix_symmetric + campaign.mix_unidirectional == 0)
    throw std::invalid_argument("campaign mix must have a positive total");

  const int n = codebook.n();
  const int q = codebook.q();
  const int max_w = campaign.max_symmetric_weight < 0 ? t : campaign.max_symmetric_weight;
  std::mt19937_64 rng(campaign.seed);
  TrialStats stats;

  std::vector<int> all_positions(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all_positions[static_cast<std::size_t>(i)] = i;

  const auto total_mix =
      static_cast<std::uint64_t>(campaign.mix_symmetric + campaign.mix_unidirectional);
  for (std::uint64_t trial = 0; trial < campaign.trials; ++trial) {
    const auto& sent =
        codebook.word(static_cast<int>(detail::bounded(rng, static_cast<std::uint64_t>(codebook.size()))));
    const bool symmetric =
        detail::bounded(rng, total_mix) < static_cast<std::uint64_t>(campaign.mix_symmetric);

    ErrorPattern pattern;
    if (symmetric) {
      ++stats.symmetric_trials;
      pattern.kind = ErrorKind::symmetric;
      if (max_w > 0) {
        int w = 1 + static_cast<int>(detail::bounded(rng, static_cast<std::uint64_t>(max_w)));
        for (int pos : detail::sample_distinct(rng, all_positions, w)) {
          int v = static_cast<int>(detail::bounded(rng, static_cast<std::uint64_t>(q - 1)));
          if (v >= sent[pos]) ++v;  // any symbol other than the current one
          pattern.deltas.emplace_back(pos, v - sent[pos]);
        }
      }
    } else {
      ++stats.unidirectional_trials;
      bool increasing = detail::bounded(rng, 2) == 0;
      for (int flip = 0; flip < 2; ++flip) {
        std::vector<int> movable;
        for (int pos = 0; pos < n; ++pos) {
          int room = increasing ? q - 1 - sent[pos] : sent[pos];
          if (room > 0) movable.push_back(pos);
        }
        if (!movable.empty()) {
          pattern.kind = increasing ? ErrorKind::increasing : ErrorKind::decreasing;
          int w = 1 + static_cast<int>(detail::bounded(rng, movable.size()));
          for (int pos : detail::sample_distinct(rng, movable, w)) {
            int room = increasing ? q - 1 - sent[pos] : sent[pos];
            int mag = 1 + static_cast<int>(detail::bounded(rng, static_cast<std::uint64_t>(room)));
            pattern.deltas.emplace_back(pos, increasing ? mag : -mag);
          }
          break;
        }
        increasing = !increasing;  // constant extreme word: move the other way
      }
    }

    Word received = inject(sent, pattern);
    DecodeOutcome outcome = decode(codebook, t, received);
    if (outcome.kind == DecodeOutcome::Kind::detected)
      ++stats.detected;
    else if (*outcome.word == sent)
      ++stats.corrected;
    else
      ++stats.miscorrected;
  }
  return stats;
}

}  // namespace aued

#endif  // AUED_SIMULATE_HPP
