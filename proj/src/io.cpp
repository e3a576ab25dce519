#include "apmc/io.hpp"

#include <sstream>
#include <vector>

namespace apmc {

MultiDigraph parse_graph(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> arcs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0 || !(ls >> n >> m) || n < 0 || m < 0)
        throw ParseError("bad p line at line " + std::to_string(lineno));
      continue;
    }
    if (tag == "a") {
      int u, v;
      if (n < 0 || !(ls >> u >> v) || u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw ParseError("bad a line at line " + std::to_string(lineno));
      arcs.emplace_back(u, v);
      continue;
    }
    throw ParseError("unknown tag '" + tag + "' at line " + std::to_string(lineno));
  }
  if (n < 0) throw ParseError("missing p line");
  if (static_cast<int>(arcs.size()) != m)
    throw ParseError("arc count does not match header");
  return MultiDigraph(n, arcs);
}

MultiDigraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string format_graph(const MultiDigraph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << " " << g.arc_count() << "\n";
  for (const Arc& a : g.arcs()) out << "a " << a.tail << " " << a.head << "\n";
  return out.str();
}

namespace {

int side_index(char side) {
  switch (side) {
    case 'a': return 0;
    case 'b': return 1;
    case 'c': return 2;
    case 'd': return 3;
  }
  return -1;
}

}  // namespace

FourPartiteGraph parse_4partite(std::istream& in) {
  std::string line;
  int n = -1;
  FourPartiteGraph g4;
  int lineno = 0;
  auto matrix_for = [&](int s1, int s2) -> std::vector<std::vector<char>>* {
    if (s1 > s2) std::swap(s1, s2);
    if (s1 == 0 && s2 == 1) return &g4.ab;
    if (s1 == 0 && s2 == 2) return &g4.ac;
    if (s1 == 0 && s2 == 3) return &g4.ad;
    if (s1 == 1 && s2 == 2) return &g4.bc;
    if (s1 == 1 && s2 == 3) return &g4.bd;
    if (s1 == 2 && s2 == 3) return &g4.cd;
    return nullptr;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p4") {
      if (n >= 0 || !(ls >> n) || n < 0)
        throw ParseError("bad p4 line at line " + std::to_string(lineno));
      g4.resize(n);
      continue;
    }
    if (tag == "e") {
      std::string u, v;
      if (n < 0 || !(ls >> u >> v) || u.size() < 2 || v.size() < 2)
        throw ParseError("bad e line at line " + std::to_string(lineno));
      int s1 = side_index(u[0]), s2 = side_index(v[0]);
      int i1 = std::stoi(u.substr(1)), i2 = std::stoi(v.substr(1));
      auto* m = s1 >= 0 && s2 >= 0 && s1 != s2 ? matrix_for(s1, s2) : nullptr;
      if (!m || i1 < 0 || i1 >= n || i2 < 0 || i2 >= n)
        throw ParseError("bad e line at line " + std::to_string(lineno));
      if (s1 > s2) std::swap(i1, i2);
      (*m)[i1][i2] = 1;
      continue;
    }
    throw ParseError("unknown tag '" + tag + "' at line " + std::to_string(lineno));
  }
  if (n < 0) throw ParseError("missing p4 line");
  return g4;
}

FourPartiteGraph parse_4partite_string(const std::string& text) {
  std::istringstream in(text);
  return parse_4partite(in);
}

std::string format_4partite(const FourPartiteGraph& g4) {
  std::ostringstream out;
  out << "p4 " << g4.n << "\n";
  const char* names = "abcd";
  auto emit = [&](const std::vector<std::vector<char>>& m, int s1, int s2) {
    for (int x = 0; x < g4.n; ++x)
      for (int y = 0; y < g4.n; ++y)
        if (m[x][y])
          out << "e " << names[s1] << x << " " << names[s2] << y << "\n";
  };
  emit(g4.ab, 0, 1);
  emit(g4.ac, 0, 2);
  emit(g4.ad, 0, 3);
  emit(g4.bc, 1, 2);
  emit(g4.bd, 1, 3);
  emit(g4.cd, 2, 3);
  return out.str();
}

}  // namespace apmc
