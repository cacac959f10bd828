#ifndef AUED_ASSETS_HPP
#define AUED_ASSETS_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "aued/code_io.hpp"
#include "aued/designs.hpp"
#include "aued/word.hpp"

namespace aued {

// Bundled data assets in the repo's own text formats. Each asset carries a
// pinned FNV-1a checksum and its declared parameters; loading re-verifies
// both, so a transcription slip surfaces as a load failure instead of a
// silently wrong table.

struct AssetEntry {
  std::string_view name;
  enum class Kind { code, seed, design } kind;
  int q = 0;        // alphabet (codes) or blocks per class (seeds)
  int n = 0;        // length (codes), modulus (seeds), points (designs)
  int a = 0;        // words (codes), base classes (seeds), classes (designs)
  int dmin = 0;     // exact min asymmetric distance (codes only)
  std::uint64_t checksum = 0;
  std::string_view text;
};

namespace assets {

inline constexpr std::string_view q3_a16_d2 = R"(3 6 16
211002
202011
201120
100221
112020
120012
010122
021021
022110
012201
102102
111111
121200
210210
220101
001212
)";

inline constexpr std::string_view q3_a25_d3 = R"(3 9 25
010220211
211200102
220021101
102020112
122100201
111111111
110012202
001102212
022011210
012121002
200211012
221120010
202112100
021212001
120202110
100122021
002201121
011022120
020110122
112210020
121001022
201010221
210101220
212002011
101221200
)";

inline constexpr std::string_view q3_a12_d4 = R"(3 11 12
10022021012
00202112021
20100211202
01020202211
12001122200
11111111111
21221100002
02112002102
12210201020
21012010220
22200020111
00121220120
)";

inline constexpr std::string_view q3_a12_d5 = R"(3 14 12
01212201221000
22002120022001
01000222102220
10201101112211
11021100201122
21112010101211
20022021210110
22220002000202
12120111120020
10110222011012
02211210010121
00101012222102
)";

inline constexpr std::string_view q2_a3_d1 = R"(2 3 3
011
101
110
)";

inline constexpr std::string_view q3_a5_d2 = R"(3 5 5
01221
10122
21012
22101
12210
)";

inline constexpr std::string_view q3_a6_d2 = R"(3 5 6
11111
12002
21200
02120
00212
20021
)";

inline constexpr std::string_view seed_z7_d8 = R"(7 9 3 0 2
0 1 2
3 6
4 5
%
0 2 4
5 6
1 3
%
0 1 4
3 5
2 6
)";

inline constexpr std::string_view seed_z10_d11 = R"(10 9 3 0 2
0 1 2 3
4 6 8
5 7 9
%
0 1 4 5
2 6 9
3 7 8
%
0 2 3 7
1 6 9
4 5 8
)";

inline constexpr std::string_view kts15 = R"(15 35 7 3 1
0 1 2
3 7 11
4 9 14
5 10 12
6 8 13
%
0 3 4
1 7 9
2 12 13
5 8 14
6 10 11
%
0 5 6
1 8 10
2 11 14
3 9 13
4 7 12
%
0 7 8
1 11 13
2 4 5
3 10 14
6 9 12
%
0 9 10
1 12 14
2 3 6
4 8 11
5 7 13
%
0 11 12
1 3 5
2 8 9
4 10 13
6 7 14
%
0 13 14
1 4 6
2 7 10
3 8 12
5 9 11
)";

}  // namespace assets

inline constexpr AssetEntry kAssets[] = {
    {"q3_a16_d2", AssetEntry::Kind::code, 3, 6, 16, 2, 0xbd9c8c51ae36bcf3ULL, assets::q3_a16_d2},
    {"q3_a25_d3", AssetEntry::Kind::code, 3, 9, 25, 3, 0xb6e7724a9a6a74f7ULL, assets::q3_a25_d3},
    {"q3_a12_d4", AssetEntry::Kind::code, 3, 11, 12, 4, 0x47eb1bff591a83dfULL, assets::q3_a12_d4},
    {"q3_a12_d5", AssetEntry::Kind::code, 3, 14, 12, 5, 0xe4e17fde2d4a63d4ULL, assets::q3_a12_d5},
    {"q2_a3_d1", AssetEntry::Kind::code, 2, 3, 3, 1, 0xeeb629d0bc1b1c47ULL, assets::q2_a3_d1},
    {"q3_a5_d2", AssetEntry::Kind::code, 3, 5, 5, 2, 0xe44514db679e346eULL, assets::q3_a5_d2},
    {"q3_a6_d2", AssetEntry::Kind::code, 3, 5, 6, 2, 0xf58adebda1eb9c5bULL, assets::q3_a6_d2},
    {"seed_z7_d8", AssetEntry::Kind::seed, 3, 7, 3, 0, 0x39b2b8938346f981ULL, assets::seed_z7_d8},
    {"seed_z10_d11", AssetEntry::Kind::seed, 3, 10, 3, 0, 0xcba5ba9fb95965cdULL, assets::seed_z10_d11},
    {"kts15", AssetEntry::Kind::design, 3, 15, 7, 0, 0x1b743ffea87301d4ULL, assets::kts15},
};

inline constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

inline const AssetEntry& asset_entry(std::string_view name) {
  for (const auto& e : kAssets)
    if (e.name == name) {
      if (fnv1a64(e.text) != e.checksum)
        throw verification_error("asset " + std::string(name) +
                                 " failed its pinned checksum; content was altered");
      return e;
    }
  throw std::invalid_argument("unknown asset: " + std::string(name));
}

// Loads a code asset and re-verifies the declared parameters, including the
// exact minimum asymmetric distance.
inline Code asset_code(std::string_view name) {
  const AssetEntry& e = asset_entry(name);
  if (e.kind != AssetEntry::Kind::code)
    throw std::invalid_argument(std::string(name) + " is not a code asset");
  Code c = parse_code(std::string(e.text));
  if (c.q() != e.q || c.n() != e.n || c.size() != e.a)
    throw verification_error("asset " + std::string(name) + " has unexpected dimensions");
  auto d = min_asymmetric_distance(c);
  if (d.min_asymmetric != e.dmin)
    throw verification_error("asset " + std::string(name) + " has d_as=" +
                             std::to_string(d.min_asymmetric) + ", declared " +
                             std::to_string(e.dmin));
  return c;
}

inline CirculantSeed asset_seed(std::string_view name) {
  const AssetEntry& e = asset_entry(name);
  if (e.kind != AssetEntry::Kind::seed)
    throw std::invalid_argument(std::string(name) + " is not a seed asset");
  std::istringstream in{std::string(e.text)};
  DesignFile d = read_design(in);
  CirculantSeed seed;
  seed.modulus = d.system.v;
  for (const auto& cl : d.classes) {
    std::vector<std::vector<int>> blocks;
    for (int bi : cl) blocks.push_back(d.system.blocks[static_cast<std::size_t>(bi)]);
    seed.base_classes.push_back(std::move(blocks));
  }
  validate_seed(seed);
  if (seed.modulus != e.n || static_cast<int>(seed.base_classes.size()) != e.a ||
      static_cast<int>(seed.base_classes[0].size()) != e.q)
    throw verification_error("asset " + std::string(name) + " has unexpected dimensions");
  return seed;
}

inline ResolvablePacking asset_design(std::string_view name) {
  const AssetEntry& e = asset_entry(name);
  if (e.kind != AssetEntry::Kind::design)
    throw std::invalid_argument(std::string(name) + " is not a design asset");
  std::istringstream in{std::string(e.text)};
  ResolvablePacking p = parse_design(in);  // full verification
  if (p.base.v != e.n || static_cast<int>(p.classes.size()) != e.a)
    throw verification_error("asset " + std::string(name) + " has unexpected dimensions");
  return p;
}

}  // namespace aued

#endif  // AUED_ASSETS_HPP
