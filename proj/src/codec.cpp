#include "gdt/codec.hpp"

#include <cctype>
#include <sstream>

namespace gdt {

std::string graph6_write(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  out.push_back(char(n + 63));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(char(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_read(const std::string& data) {
  std::size_t pos = 0;
  const std::string header = ">>graph6<<";
  if (data.rfind(header, 0) == 0) pos = header.size();
  if (pos >= data.size()) throw ParseError("empty graph6 input", pos);
  unsigned char c = data[pos];
  if (c < 63 || c > 63 + 62) throw ParseError("unsupported graph6 size byte", pos);
  if (c == 126) throw ParseError("multi-byte graph6 sizes not supported", pos);
  int n = c - 63;
  ++pos;
  Graph g(n);
  int need = n * (n - 1) / 2;
  int acc = 0, nbits = 0, u = 0, v = 1;
  for (int i = 0; i < need; ++i) {
    if (nbits == 0) {
      if (pos >= data.size()) throw ParseError("graph6 data truncated", pos);
      unsigned char b = data[pos];
      if (b < 63 || b > 126) throw ParseError("invalid graph6 byte", pos);
      acc = b - 63;
      nbits = 6;
      ++pos;
    }
    if ((acc >> (nbits - 1)) & 1) g.add_edge(u, v);
    --nbits;
    if (++u == v) {
      u = 0;
      ++v;
    }
  }
  while (pos < data.size() && (data[pos] == '\n' || data[pos] == '\r')) ++pos;
  if (pos != data.size()) throw ParseError("trailing bytes after graph6 encoding", pos);
  return g;
}

std::string edge_list_write(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph edge_list_read(const std::string& data) {
  std::vector<long> nums;
  std::size_t i = 0;
  while (i < data.size()) {
    if (std::isspace((unsigned char)data[i])) {
      ++i;
      continue;
    }
    if (!std::isdigit((unsigned char)data[i]))
      throw ParseError("unexpected character in edge list", i);
    std::size_t j = i;
    long val = 0;
    while (j < data.size() && std::isdigit((unsigned char)data[j])) {
      val = val * 10 + (data[j] - '0');
      if (val > 1000000) throw ParseError("number too large", i);
      ++j;
    }
    nums.push_back(val);
    i = j;
  }
  // With a header line the token count is 2 + 2m, the declared m must
  // match, and every endpoint must fall below the declared n; otherwise
  // every token pair is an edge.
  bool header = false;
  std::size_t first_edge = 0;
  if (nums.size() >= 2 && nums.size() == 2 + 2 * (std::size_t)nums[1]) {
    header = true;
    for (std::size_t k = 2; k < nums.size(); ++k)
      if (nums[k] >= nums[0]) header = false;
    if (header) first_edge = 2;
  }
  if ((nums.size() - first_edge) % 2 != 0)
    throw ParseError("odd number of vertex tokens", data.size());
  long n = header ? nums[0] : 0;
  if (!header)
    for (std::size_t k = 0; k < nums.size(); ++k) n = std::max(n, nums[k] + 1);
  if (n > Graph::kMaxVertices) throw ParseError("too many vertices", 0);
  Graph g((int)n);
  for (std::size_t k = first_edge; k + 1 < nums.size(); k += 2) {
    long u = nums[k], v = nums[k + 1];
    if (u >= n || v >= n) throw ParseError("vertex out of declared range", 0);
    if (u == v) throw ParseError("self-loop in edge list", 0);
    if (!g.has_edge((int)u, (int)v)) g.add_edge((int)u, (int)v);
  }
  return g;
}

std::string codec_write(Format f, const Graph& g) {
  return f == Format::kGraph6 ? graph6_write(g) : edge_list_write(g);
}

Graph codec_read(Format f, const std::string& data) {
  return f == Format::kGraph6 ? graph6_read(data) : edge_list_read(data);
}

Graph codec_read_auto(const std::string& data) {
  for (char c : data) {
    if (std::isspace((unsigned char)c)) continue;
    if (std::isdigit((unsigned char)c)) return edge_list_read(data);
    break;
  }
  return graph6_read(data);
}

}  // namespace gdt
