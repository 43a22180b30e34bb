#include "ecrit/graph6.hpp"

#include "ecrit/errors.hpp"

namespace ecrit {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool IsDataByte(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph FromGraph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  int n = 0;
  if (text[pos] == 126) {
    if (pos + 1 < text.size() && text[pos + 1] == 126) {
      throw ParseError("graph order exceeds supported range", pos);
    }
    if (pos + 4 > text.size()) throw ParseError("truncated order header", pos);
    for (int i = 1; i <= 3; ++i) {
      const char c = text[pos + i];
      if (!IsDataByte(c)) throw ParseError("bad order byte", pos + i);
      n = (n << 6) | (c - kBias);
    }
    if (n < 63) throw ParseError("non-canonical long order header", pos);
    pos += 4;
  } else {
    if (!IsDataByte(text[pos]) || text[pos] == 126) {
      throw ParseError("bad order byte", pos);
    }
    n = text[pos] - kBias;
    pos += 1;
  }
  if (n > Graph::kMaxOrder) {
    throw ParseError("graph order " + std::to_string(n) + " exceeds 64", 0);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) {
    throw ParseError("truncated adjacency data", text.size());
  }
  if (text.size() - pos > bytes) {
    throw ParseError("trailing bytes after adjacency data", pos + bytes);
  }

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const char c = text[pos + k / 6];
      if (!IsDataByte(c)) throw ParseError("bad data byte", pos + k / 6);
      if (((c - kBias) >> (5 - k % 6)) & 1) g.AddEdge(i, j);
    }
  }
  if (bytes > 0) {
    const std::size_t last = pos + bytes - 1;
    if (!IsDataByte(text[last])) throw ParseError("bad data byte", last);
    const int pad = static_cast<int>(bytes * 6 - bits);
    if (((text[last] - kBias) & ((1 << pad) - 1)) != 0) {
      throw ParseError("non-zero padding bits", last);
    }
  }
  return g;
}

std::string ToGraph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.HasEdge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

}  // namespace ecrit
