#pragma once

// Line-oriented reader shared by the plain-text data formats (.alg, .ribbon,
// .link, .diagram): '#' comments, blank-line skipping, one logical directive
// per line, errors reported with file and line number.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "relink/error.hpp"

namespace relink {

inline std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

struct LineReader {
  std::vector<std::string> lines;
  size_t pos = 0;
  std::string file;

  static LineReader from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot open " + path);
    LineReader in;
    in.file = path;
    std::string l;
    while (std::getline(f, l)) in.lines.push_back(l);
    return in;
  }

  static LineReader from_text(const std::string& text,
                              const std::string& name) {
    LineReader in;
    in.file = name;
    std::istringstream f(text);
    std::string l;
    while (std::getline(f, l)) in.lines.push_back(l);
    return in;
  }

  bool next(std::string& out) {
    while (pos < lines.size()) {
      std::string l = lines[pos++];
      size_t hash = l.find('#');
      if (hash != std::string::npos) l = l.substr(0, hash);
      l = strip(l);
      if (!l.empty()) {
        out = l;
        return true;
      }
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw parse_error(file + " line " + std::to_string(pos) + ": " + what);
  }
};

}  // namespace relink
