#include "dcstab/graph6.hpp"

#include "dcstab/errors.hpp"

namespace dcstab {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr std::size_t kShortLimit = 62;
constexpr std::size_t kMediumLimit = 258047;

[[noreturn]] void fail(const std::string& what, std::size_t offset) {
  throw ParseError("graph6: " + what + " at byte " + std::to_string(offset), offset);
}

int sextet(std::string_view s, std::size_t offset) {
  if (offset >= s.size()) fail("unexpected end of record", offset);
  int c = static_cast<unsigned char>(s[offset]);
  if (c < kBias || c > kMaxByte) fail("character out of range", offset);
  return c - kBias;
}

void append_big_endian(std::string& out, std::size_t value, int sextets) {
  for (int i = sextets - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + kBias));
}

}  // namespace

Graph parse_graph6(std::string_view s) {
  if (s.empty()) fail("empty record", 0);
  std::size_t pos = 0;
  std::size_t n = 0;
  int first = static_cast<unsigned char>(s[0]);
  if (first < kBias || first > kMaxByte) fail("character out of range", 0);
  if (first != kMaxByte) {
    n = static_cast<std::size_t>(first - kBias);
    pos = 1;
  } else if (s.size() > 1 && static_cast<unsigned char>(s[1]) == kMaxByte) {
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(s, 2 + i));
    if (n <= kMediumLimit) fail("malformed length prefix (non-minimal 8-byte form)", 0);
    if (n > kMaxGraph6Order) fail("malformed length prefix (order exceeds 2^18)", 0);
    pos = 8;
  } else {
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(s, 1 + i));
    if (n <= kShortLimit) fail("malformed length prefix (non-minimal 4-byte form)", 0);
    pos = 4;
  }

  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (s.size() < pos + byte_count) fail("truncated adjacency data", s.size());
  if (s.size() > pos + byte_count) fail("trailing garbage", pos + byte_count);

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::size_t byte = pos + k / 6;
      int bits = sextet(s, byte);
      if ((bits >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (byte_count > 0) {
    std::size_t last = pos + byte_count - 1;
    int bits = sextet(s, last);
    std::size_t used = bit_count - (byte_count - 1) * 6;
    if (bits & ((1 << (6 - used)) - 1)) fail("non-zero padding bits", last);
  }
  return std::move(b).build();
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) throw ContractViolation("write_graph6: order exceeds 2^18");
  std::string out;
  if (n <= kShortLimit) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= kMediumLimit) {
    out.push_back(static_cast<char>(kMaxByte));
    append_big_endian(out, n, 3);
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    out.push_back(static_cast<char>(kMaxByte));
    append_big_endian(out, n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace dcstab
