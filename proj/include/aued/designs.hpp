#ifndef AUED_DESIGNS_HPP
#define AUED_DESIGNS_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "aued/construct.hpp"
#include "aued/gf.hpp"
#include "aued/word.hpp"

namespace aued {

// Points are 0..v-1; a block is a nonempty subset of points.
struct SetSystem {
  int v = 0;
  std::vector<std::vector<int>> blocks;
};

inline void validate_set_system(const SetSystem& s) {
  if (s.v < 1) throw std::invalid_argument("set system needs at least one point");
  for (std::size_t bi = 0; bi < s.blocks.size(); ++bi) {
    const auto& b = s.blocks[bi];
    if (b.empty()) throw std::invalid_argument("block " + std::to_string(bi) + " is empty");
    std::vector<int> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("block " + std::to_string(bi) + " repeats a point");
    if (sorted.front() < 0 || sorted.back() >= s.v)
      throw std::invalid_argument("block " + std::to_string(bi) + " has a point out of range");
  }
}

// A set system whose blocks are split into parallel classes (each class
// partitions the point set). block_size is the uniform size k, or 0 when
// mixed; lambda is the realized maximum pair multiplicity, recomputed from
// the blocks rather than trusted from any header.
struct ResolvablePacking {
  SetSystem base;
  std::vector<std::vector<int>> classes;  // indices into base.blocks
  int block_size = 0;
  int lambda = 0;
};

struct PackingReport {
  bool valid = true;
  std::string message;        // first violation, names the pair/class
  int realized_lambda = 0;    // max pair multiplicity over all blocks
  bool uniform = true;
  std::vector<int> block_sizes;  // distinct sizes, ascending
  int classes = 0;
  int blocks = 0;
};

// Checks block sanity, per-class partition of the point set, and computes
// the realized pair multiplicity. Never throws on invalid input.
inline PackingReport verify_packing(const ResolvablePacking& p) {
  PackingReport r;
  r.classes = static_cast<int>(p.classes.size());
  r.blocks = static_cast<int>(p.base.blocks.size());
  try {
    validate_set_system(p.base);
  } catch (const std::exception& e) {
    r.valid = false;
    r.message = e.what();
    return r;
  }

  std::vector<int> sizes;
  for (const auto& b : p.base.blocks) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  r.block_sizes = sizes;
  r.uniform = sizes.size() == 1;

  std::vector<bool> in_class(p.base.blocks.size(), false);
  for (std::size_t ci = 0; ci < p.classes.size(); ++ci) {
    std::vector<int> hits(static_cast<std::size_t>(p.base.v), 0);
    for (int bi : p.classes[ci]) {
      if (bi < 0 || bi >= r.blocks) {
        r.valid = false;
        r.message = "class " + std::to_string(ci) + " references a missing block";
        return r;
      }
      if (in_class[static_cast<std::size_t>(bi)]) {
        r.valid = false;
        r.message = "block " + std::to_string(bi) + " appears in two classes";
        return r;
      }
      in_class[static_cast<std::size_t>(bi)] = true;
      for (int pt : p.base.blocks[static_cast<std::size_t>(bi)])
        ++hits[static_cast<std::size_t>(pt)];
    }
    for (int pt = 0; pt < p.base.v; ++pt) {
      if (hits[static_cast<std::size_t>(pt)] != 1) {
        r.valid = false;
        r.message = "class " + std::to_string(ci) + " covers point " + std::to_string(pt) +
                    " " + std::to_string(hits[static_cast<std::size_t>(pt)]) + " times";
        return r;
      }
    }
  }
  for (std::size_t bi = 0; bi < in_class.size(); ++bi) {
    if (!p.classes.empty() && !in_class[bi]) {
      r.valid = false;
      r.message = "block " + std::to_string(bi) + " belongs to no class";
      return r;
    }
  }

  std::map<std::pair<int, int>, int> pair_count;
  for (const auto& b : p.base.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        auto key = std::minmax(b[i], b[j]);
        ++pair_count[{key.first, key.second}];
      }
  }
  for (const auto& [pr, cnt] : pair_count)
    r.realized_lambda = std::max(r.realized_lambda, cnt);
  return r;
}

namespace detail {
inline ResolvablePacking finish_packing(SetSystem base, std::vector<std::vector<int>> classes) {
  ResolvablePacking p{std::move(base), std::move(classes), 0, 0};
  PackingReport rep = verify_packing(p);
  if (!rep.valid) throw verification_error("generated packing invalid: " + rep.message);
  p.lambda = rep.realized_lambda;
  p.block_size = rep.uniform ? rep.block_sizes.front() : 0;
  return p;
}
}  // namespace detail

// Column per parallel class, row per point; the entry is the position of the
// point's block inside its class (after the optional per-class reordering).
// Rows form a q-ary code, q = blocks per class, with min Hamming distance at
// least #classes - lambda.
inline Code packing_to_code(const ResolvablePacking& p,
                            const std::vector<std::vector<int>>& per_class_order = {}) {
  if (p.classes.empty()) throw std::invalid_argument("packing has no parallel classes");
  const std::size_t q = p.classes[0].size();
  for (const auto& cl : p.classes)
    if (cl.size() != q)
      throw std::invalid_argument("parallel classes list different block counts");
  if (q < 2 || q > static_cast<std::size_t>(kMaxAlphabet))
    throw std::invalid_argument("blocks per class must be in [2, 256]");
  if (!per_class_order.empty() && per_class_order.size() != p.classes.size())
    throw std::invalid_argument("per-class ordering count mismatch");

  std::vector<std::vector<int>> rows(
      static_cast<std::size_t>(p.base.v),
      std::vector<int>(p.classes.size(), -1));
  for (std::size_t ci = 0; ci < p.classes.size(); ++ci) {
    std::vector<int> order(q);
    if (per_class_order.empty()) {
      for (std::size_t i = 0; i < q; ++i) order[i] = static_cast<int>(i);
    } else {
      order = per_class_order[ci];
      std::vector<int> check = order;
      std::sort(check.begin(), check.end());
      for (std::size_t i = 0; i < q; ++i)
        if (check[i] != static_cast<int>(i))
          throw std::invalid_argument("per-class ordering is not a permutation");
    }
    for (std::size_t sym = 0; sym < q; ++sym) {
      int bi = p.classes[ci][static_cast<std::size_t>(order[sym])];
      for (int pt : p.base.blocks[static_cast<std::size_t>(bi)])
        rows[static_cast<std::size_t>(pt)][ci] = static_cast<int>(sym);
    }
  }
  const int alphabet = static_cast<int>(q);
  std::vector<Word> words;
  words.reserve(rows.size());
  for (auto& row : rows) words.emplace_back(alphabet, std::move(row));
  return Code(alphabet, std::move(words));
}

struct PackingCode {
  Code code;       // mirrored: length 2 * #classes
  int T = 0;       // claimed min asymmetric distance, #classes - lambda
  int q = 0;       // alphabet, blocks per class
};

// Resolvable-packing pipeline: convert to a code and mirror-concatenate.
// The claimed distance #classes - lambda is asserted against the exact scan.
inline PackingCode aued_code_from_packing(const ResolvablePacking& p) {
  PackingReport rep = verify_packing(p);
  if (!rep.valid) throw verification_error("packing invalid: " + rep.message);
  Code flat = packing_to_code(p);
  PackingCode out{mirror_concatenate(flat), static_cast<int>(p.classes.size()) - rep.realized_lambda,
                  flat.q()};
  if (out.code.size() >= 2) {
    auto d = min_asymmetric_distance(out.code);
    if (d.min_asymmetric < out.T)
      throw verification_error(
          "packing code misses claimed distance: d_as=" + std::to_string(d.min_asymmetric) +
          " < " + std::to_string(out.T) + " at pair (" + std::to_string(d.arg_pair.first) +
          ", " + std::to_string(d.arg_pair.second) + ")");
  }
  return out;
}

// Drop one parallel class (default: the last) and its blocks; the realized
// pair bound is recomputed on the survivors.
inline ResolvablePacking delete_parallel_class(const ResolvablePacking& p, int class_index = -1) {
  if (p.classes.size() < 2)
    throw std::invalid_argument("cannot delete the only parallel class");
  const int ci = class_index < 0 ? static_cast<int>(p.classes.size()) - 1 : class_index;
  if (ci >= static_cast<int>(p.classes.size()))
    throw std::invalid_argument("class index out of range");

  std::vector<bool> removed(p.base.blocks.size(), false);
  for (int bi : p.classes[static_cast<std::size_t>(ci)])
    removed[static_cast<std::size_t>(bi)] = true;
  std::vector<int> remap(p.base.blocks.size(), -1);
  SetSystem base{p.base.v, {}};
  for (std::size_t bi = 0; bi < p.base.blocks.size(); ++bi) {
    if (removed[bi]) continue;
    remap[bi] = static_cast<int>(base.blocks.size());
    base.blocks.push_back(p.base.blocks[bi]);
  }
  std::vector<std::vector<int>> classes;
  for (std::size_t c = 0; c < p.classes.size(); ++c) {
    if (static_cast<int>(c) == ci) continue;
    std::vector<int> cl;
    for (int bi : p.classes[c]) cl.push_back(remap[static_cast<std::size_t>(bi)]);
    classes.push_back(std::move(cl));
  }
  return detail::finish_packing(std::move(base), std::move(classes));
}

// Affine plane AG(2, q): points GF(q)^2, lines y = m x + b grouped by slope
// plus the vertical class. A (q^2, q, 1) resolvable design with q+1 classes.
// Point (x, y) has index x*q + y; blocks are listed by intercept, which also
// sorts them by smallest point.
inline ResolvablePacking affine_plane(int q) {
  FieldTable f = FieldTable::make(q);
  SetSystem base{q * q, {}};
  std::vector<std::vector<int>> classes;
  for (int slope = 0; slope < q; ++slope) {
    std::vector<int> cl;
    for (int b = 0; b < q; ++b) {
      std::vector<int> line;
      for (int x = 0; x < q; ++x) line.push_back(x * q + f.add(f.mul(slope, x), b));
      std::sort(line.begin(), line.end());
      cl.push_back(static_cast<int>(base.blocks.size()));
      base.blocks.push_back(std::move(line));
    }
    classes.push_back(std::move(cl));
  }
  std::vector<int> vertical;
  for (int c = 0; c < q; ++c) {
    std::vector<int> line;
    for (int y = 0; y < q; ++y) line.push_back(c * q + y);
    vertical.push_back(static_cast<int>(base.blocks.size()));
    base.blocks.push_back(std::move(line));
  }
  classes.push_back(std::move(vertical));
  return detail::finish_packing(std::move(base), std::move(classes));
}

// One-factorization of K_m by the circle method: m-1 rounds of m/2 disjoint
// pairs covering every pair exactly once (an RBIBD(m, 2, 1)).
inline ResolvablePacking round_robin(int m) {
  if (m < 4 || m % 2 != 0)
    throw std::invalid_argument("one-factorization needs even m >= 4");
  const int cycle = m - 1;
  SetSystem base{m, {}};
  std::vector<std::vector<int>> classes;
  for (int r = 0; r < cycle; ++r) {
    std::vector<std::vector<int>> pairs;
    pairs.push_back({r, m - 1});
    for (int i = 1; i <= m / 2 - 1; ++i) {
      int u = (r + i) % cycle, w = ((r - i) % cycle + cycle) % cycle;
      pairs.push_back({std::min(u, w), std::max(u, w)});
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> cl;
    for (auto& pr : pairs) {
      std::sort(pr.begin(), pr.end());
      cl.push_back(static_cast<int>(base.blocks.size()));
      base.blocks.push_back(pr);
    }
    classes.push_back(std::move(cl));
  }
  return detail::finish_packing(std::move(base), std::move(classes));
}

// Near one-factors of K_{2k-1}: T_j = {{j+t, j-t} : 1 <= t <= k-1} over
// Z_{2k-1}. T_j misses exactly vertex j; every pair appears exactly once
// across all j.
inline std::vector<std::vector<std::pair<int, int>>> near_one_factorization(int k) {
  if (k < 2) throw std::invalid_argument("order parameter must be >= 2");
  const int m = 2 * k - 1;
  std::vector<std::vector<std::pair<int, int>>> factors;
  factors.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    std::vector<std::pair<int, int>> pairs;
    for (int t = 1; t <= k - 1; ++t) {
      int u = (j + t) % m, w = ((j - t) % m + m) % m;
      pairs.emplace_back(std::min(u, w), std::max(u, w));
    }
    factors.push_back(std::move(pairs));
  }
  return factors;
}

// Ordered base classes over Z_m, each a partition of Z_m; developing by the
// cyclic group yields m parallel classes per base class with block order
// preserved.
struct CirculantSeed {
  int modulus = 0;
  std::vector<std::vector<std::vector<int>>> base_classes;
};

inline void validate_seed(const CirculantSeed& seed) {
  if (seed.modulus < 2) throw std::invalid_argument("seed modulus must be >= 2");
  if (seed.base_classes.empty()) throw std::invalid_argument("seed has no base classes");
  const std::size_t per_class = seed.base_classes[0].size();
  for (std::size_t ci = 0; ci < seed.base_classes.size(); ++ci) {
    const auto& cl = seed.base_classes[ci];
    if (cl.size() != per_class)
      throw std::invalid_argument("seed base classes list different block counts");
    std::vector<int> hits(static_cast<std::size_t>(seed.modulus), 0);
    for (const auto& b : cl)
      for (int pt : b) {
        if (pt < 0 || pt >= seed.modulus)
          throw std::invalid_argument("seed point out of range in class " + std::to_string(ci));
        ++hits[static_cast<std::size_t>(pt)];
      }
    for (int pt = 0; pt < seed.modulus; ++pt)
      if (hits[static_cast<std::size_t>(pt)] != 1)
        throw std::invalid_argument("seed class " + std::to_string(ci) +
                                    " does not partition Z_" + std::to_string(seed.modulus));
  }
}

// Block-circulant development: the output is the m x (m * #classes) matrix
// (A_1 | A_2 | ...), one circulant block per base class. Column i of block c
// is the base class shifted by i, blocks kept in seed order, and the entry in
// row p is the index of the shifted block containing p, i.e. the index of the
// base block containing p - i mod m.
inline Code develop_circulant(const CirculantSeed& seed) {
  validate_seed(seed);
  const int m = seed.modulus;
  const int nclasses = static_cast<int>(seed.base_classes.size());
  const int q = static_cast<int>(seed.base_classes[0].size());

  // symbol_of[c][x] = index of the block of base class c containing x
  std::vector<std::vector<int>> symbol_of(
      static_cast<std::size_t>(nclasses), std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int c = 0; c < nclasses; ++c)
    for (int b = 0; b < q; ++b)
      for (int pt : seed.base_classes[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)])
        symbol_of[static_cast<std::size_t>(c)][static_cast<std::size_t>(pt)] = b;

  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) {
    std::vector<int> sym;
    sym.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(nclasses));
    for (int c = 0; c < nclasses; ++c)
      for (int i = 0; i < m; ++i)
        sym.push_back(symbol_of[static_cast<std::size_t>(c)][static_cast<std::size_t>(((p - i) % m + m) % m)]);
    words.emplace_back(q, std::move(sym));
  }
  return Code(q, std::move(words));
}

inline CirculantSeed seed_from_packing(const ResolvablePacking& p) {
  CirculantSeed seed;
  seed.modulus = p.base.v;
  for (const auto& cl : p.classes) {
    std::vector<std::vector<int>> blocks;
    for (int bi : cl) blocks.push_back(p.base.blocks[static_cast<std::size_t>(bi)]);
    seed.base_classes.push_back(std::move(blocks));
  }
  validate_seed(seed);
  return seed;
}

// ---------------------------------------------------------------------------
// Design text format:
//   line 1: `v b c k lambda`  (points, blocks, classes, uniform block size or
//           0 when mixed, declared pair bound)
//   then c class sections, one block per line as space-separated points,
//   consecutive classes separated by a `%` line. When c = 0 the blocks form a
//   plain set system with no resolution and no `%` separators.
//   '#' starts a comment.

namespace detail {
inline std::vector<std::string> design_content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) lines.push_back(line);
  }
  return lines;
}

inline std::vector<int> parse_point_line(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> pts;
  int p;
  while (in >> p) pts.push_back(p);
  if (!in.eof()) throw std::invalid_argument("bad block line: " + line);
  return pts;
}
}  // namespace detail

struct DesignFile {
  SetSystem system;
  std::vector<std::vector<int>> classes;  // empty when the file declares c = 0
  int declared_k = 0;
  int declared_lambda = 0;
};

inline DesignFile read_design(std::istream& in) {
  auto lines = detail::design_content_lines(in);
  if (lines.empty()) throw std::invalid_argument("empty design file");
  std::istringstream header(lines[0]);
  int v = 0, b = 0, c = 0, k = 0, lambda = 0;
  if (!(header >> v >> b >> c >> k >> lambda))
    throw std::invalid_argument("bad design header, expected `v b c k lambda`: " + lines[0]);

  DesignFile d;
  d.system.v = v;
  d.declared_k = k;
  d.declared_lambda = lambda;

  std::vector<int> current_class;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    bool separator = lines[i].find('%') != std::string::npos;
    if (separator) {
      if (c == 0) throw std::invalid_argument("class separator in a plain set-system file");
      d.classes.push_back(current_class);
      current_class.clear();
      continue;
    }
    auto pts = detail::parse_point_line(lines[i]);
    current_class.push_back(static_cast<int>(d.system.blocks.size()));
    d.system.blocks.push_back(std::move(pts));
  }
  if (c > 0) d.classes.push_back(current_class);

  validate_set_system(d.system);
  if (static_cast<int>(d.system.blocks.size()) != b)
    throw std::invalid_argument("design declares " + std::to_string(b) + " blocks, found " +
                                std::to_string(d.system.blocks.size()));
  if (c > 0 && static_cast<int>(d.classes.size()) != c)
    throw std::invalid_argument("design declares " + std::to_string(c) + " classes, found " +
                                std::to_string(d.classes.size()));
  if (k > 0)
    for (const auto& blk : d.system.blocks)
      if (static_cast<int>(blk.size()) != k)
        throw std::invalid_argument("design declares block size " + std::to_string(k) +
                                    " but has a block of size " + std::to_string(blk.size()));
  return d;
}

// Parses and fully verifies a resolvable packing; the realized pair bound
// must not exceed the header's declared lambda.
inline ResolvablePacking parse_design(std::istream& in) {
  DesignFile d = read_design(in);
  if (d.classes.empty())
    throw std::invalid_argument("design file has no parallel classes (c = 0)");
  ResolvablePacking p{std::move(d.system), std::move(d.classes), 0, 0};
  PackingReport rep = verify_packing(p);
  if (!rep.valid) throw verification_error("design file invalid: " + rep.message);
  if (rep.realized_lambda > d.declared_lambda)
    throw verification_error("design file declares lambda " + std::to_string(d.declared_lambda) +
                             " but realizes " + std::to_string(rep.realized_lambda));
  p.lambda = rep.realized_lambda;
  p.block_size = rep.uniform ? rep.block_sizes.front() : 0;
  return p;
}

inline ResolvablePacking parse_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open design file: " + path);
  return parse_design(in);
}

inline void write_design(std::ostream& out, const ResolvablePacking& p) {
  out << p.base.v << ' ' << p.base.blocks.size() << ' ' << p.classes.size() << ' '
      << p.block_size << ' ' << p.lambda << '\n';
  for (std::size_t ci = 0; ci < p.classes.size(); ++ci) {
    if (ci) out << "%\n";
    for (int bi : p.classes[ci]) {
      const auto& blk = p.base.blocks[static_cast<std::size_t>(bi)];
      for (std::size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
      out << '\n';
    }
  }
}

inline std::string design_to_text(const ResolvablePacking& p) {
  std::ostringstream out;
  write_design(out, p);
  return out.str();
}

// ---------------------------------------------------------------------------
// Small block-design generators used by the binary constant-weight tables.

// Fano plane BIBD(7, 3, 1), developed from the difference set {0, 1, 3} mod 7.
inline SetSystem fano_plane() {
  SetSystem s{7, {}};
  for (int i = 0; i < 7; ++i) {
    std::vector<int> blk{i, (i + 1) % 7, (i + 3) % 7};
    std::sort(blk.begin(), blk.end());
    s.blocks.push_back(std::move(blk));
  }
  validate_set_system(s);
  return s;
}

// Blockwise complement within the point set.
inline SetSystem complement_design(const SetSystem& s) {
  validate_set_system(s);
  SetSystem out{s.v, {}};
  for (const auto& b : s.blocks) {
    std::vector<bool> in(static_cast<std::size_t>(s.v), false);
    for (int pt : b) in[static_cast<std::size_t>(pt)] = true;
    std::vector<int> blk;
    for (int pt = 0; pt < s.v; ++pt)
      if (!in[static_cast<std::size_t>(pt)]) blk.push_back(pt);
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

// Cyclic development of a base block mod v; a planar difference set yields a
// symmetric BIBD (v blocks, one per shift).
inline SetSystem develop_difference_set(int v, const std::vector<int>& base) {
  SetSystem s{v, {}};
  for (int shift = 0; shift < v; ++shift) {
    std::vector<int> blk;
    for (int b : base) blk.push_back((b + shift) % v);
    std::sort(blk.begin(), blk.end());
    s.blocks.push_back(std::move(blk));
  }
  validate_set_system(s);
  return s;
}

// All 2-subsets of a v-set: the BIBD(v, 2, 1).
inline SetSystem all_pairs_design(int v) {
  if (v < 3) throw std::invalid_argument("pair design needs v >= 3");
  SetSystem s{v, {}};
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) s.blocks.push_back({i, j});
  return s;
}

inline std::vector<int> replication_numbers(const SetSystem& s) {
  std::vector<int> r(static_cast<std::size_t>(s.v), 0);
  for (const auto& b : s.blocks)
    for (int pt : b) ++r[static_cast<std::size_t>(pt)];
  return r;
}

// Rows of the point-block incidence matrix as a binary code: word per point,
// one coordinate per block. For a BIBD(v, k, lambda) every word has weight r
// and the code is constant weight with d_as = d_H / 2. Constructs even when
// replication is non-uniform; callers may inspect replication_numbers.
inline Code constant_weight_from_bibd(const SetSystem& s) {
  validate_set_system(s);
  if (s.blocks.size() < 1) throw std::invalid_argument("design has no blocks");
  std::vector<std::vector<int>> rows(
      static_cast<std::size_t>(s.v),
      std::vector<int>(s.blocks.size(), 0));
  for (std::size_t bi = 0; bi < s.blocks.size(); ++bi)
    for (int pt : s.blocks[bi]) rows[static_cast<std::size_t>(pt)][bi] = 1;
  std::vector<Word> words;
  words.reserve(rows.size());
  for (auto& row : rows) words.emplace_back(2, std::move(row));
  return Code(2, std::move(words));
}

}  // namespace aued

#endif  // AUED_DESIGNS_HPP
