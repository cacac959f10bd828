#ifndef AUED_CODE_IO_HPP
#define AUED_CODE_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "aued/word.hpp"

namespace aued {

// Code text format, used repo-wide:
//   first line: `q n a` (space-separated decimal integers)
//   then a lines, one word each. Symbols are written as contiguous single
//   digits when q <= 10, and as space-separated decimals when q > 10.
//   Lines starting with '#' are comments; blank lines are skipped.

namespace detail {
inline bool content_line(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return false;
    if (!std::isspace(static_cast<unsigned char>(ch))) return true;
  }
  return false;
}
}  // namespace detail

inline Code read_code(std::istream& in) {
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (detail::content_line(line)) lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("empty code file");

  std::istringstream header(lines[0]);
  int q = 0, n = 0, a = 0;
  if (!(header >> q >> n >> a))
    throw std::invalid_argument("bad code header, expected `q n a`: " + lines[0]);
  if (static_cast<int>(lines.size()) != a + 1)
    throw std::invalid_argument("expected " + std::to_string(a) + " words, found " +
                                std::to_string(lines.size() - 1));

  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(a));
  for (int i = 1; i <= a; ++i) {
    std::vector<int> sym;
    sym.reserve(static_cast<std::size_t>(n));
    if (q <= 10) {
      for (char ch : lines[static_cast<std::size_t>(i)]) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch < '0' || ch > '9')
          throw std::invalid_argument("bad symbol character in word line: " +
                                      lines[static_cast<std::size_t>(i)]);
        sym.push_back(ch - '0');
      }
    } else {
      std::istringstream row(lines[static_cast<std::size_t>(i)]);
      int s;
      while (row >> s) sym.push_back(s);
    }
    if (static_cast<int>(sym.size()) != n)
      throw std::invalid_argument("word " + std::to_string(i - 1) + " has length " +
                                  std::to_string(sym.size()) + ", expected " +
                                  std::to_string(n));
    words.emplace_back(q, std::move(sym));
  }
  return Code(q, std::move(words));
}

inline void write_code(std::ostream& out, const Code& c) {
  out << c.q() << ' ' << c.n() << ' ' << c.size() << '\n';
  for (const auto& w : c) {
    if (c.q() <= 10) {
      for (int i = 0; i < w.length(); ++i) out << static_cast<char>('0' + w[i]);
    } else {
      for (int i = 0; i < w.length(); ++i) {
        if (i) out << ' ';
        out << w[i];
      }
    }
    out << '\n';
  }
}

inline Code parse_code(const std::string& text) {
  std::istringstream in(text);
  return read_code(in);
}

inline std::string to_text(const Code& c) {
  std::ostringstream out;
  write_code(out, c);
  return out.str();
}

inline Code read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open code file: " + path);
  return read_code(in);
}

inline void write_code_file(const std::string& path, const Code& c) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write code file: " + path);
  write_code(out, c);
}

}  // namespace aued

#endif  // AUED_CODE_IO_HPP
