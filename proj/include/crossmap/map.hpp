#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crossmap {

enum class NodeKind { original, crossing };

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rotation system of a planarized drawing.  Nodes are original vertices or
// crossing points, darts are (node, slot) pairs with slots numbered in
// counterclockwise order around the node, and segments pair darts by a
// fixed-point-free involution.  Crossing nodes have degree exactly four and
// the two strands through a crossing occupy slot pairs (0,2) and (1,3).
//
// Immutable once constructed; safe to share across threads.
class PlanarMap {
 public:
  // Parses the line-oriented map format:
  //   node <id> original|crossing
  //   seg <idA>.<slotA> <idB>.<slotB>
  // '#' starts a comment.  Slots are 0-based and each (node, slot) must be
  // used exactly once.  Node indices are assigned in lexicographic id order,
  // so equal documents produce identical maps.
  static PlanarMap parse(std::string_view document);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int dart_count() const { return static_cast<int>(dart_node_.size()); }
  int segment_count() const { return dart_count() / 2; }

  NodeKind kind(int node) const { return nodes_[node].kind; }
  const std::string& name(int node) const { return nodes_[node].name; }
  int degree(int node) const { return nodes_[node].degree; }
  int original_count() const { return original_count_; }

  // Original node ids in index order.
  const std::vector<int>& originals() const { return originals_; }

  int dart(int node, int slot) const { return nodes_[node].first_dart + slot; }
  int node_of(int dart) const { return dart_node_[dart]; }
  int slot_of(int dart) const { return dart - nodes_[dart_node_[dart]].first_dart; }
  int partner(int dart) const { return partner_[dart]; }

  int rotation_next(int dart) const {
    const Node& n = nodes_[dart_node_[dart]];
    int slot = dart - n.first_dart;
    return n.first_dart + (slot + 1) % n.degree;
  }
  int rotation_prev(int dart) const {
    const Node& n = nodes_[dart_node_[dart]];
    int slot = dart - n.first_dart;
    return n.first_dart + (slot + n.degree - 1) % n.degree;
  }

  // Canonical segment id: the smaller dart of the pair.
  int segment_id(int dart) const { return std::min(dart, partner_[dart]); }

  // "A.1-x.2" with the lexicographically smaller endpoint first.
  std::string segment_name(int dart) const {
    int a = segment_id(dart);
    int b = partner_[a];
    return dart_ref(a) + "-" + dart_ref(b);
  }

  std::string dart_ref(int dart) const {
    return nodes_[dart_node_[dart]].name + "." + std::to_string(slot_of(dart));
  }

  int node_by_name(const std::string& name) const {
    auto it = name_index_.find(name);
    if (it == name_index_.end()) throw MapError("no node named " + name);
    return it->second;
  }

  // Canonical form: nodes sorted by id, segments sorted by their smaller dart.
  // parse(serialize()) reproduces the map exactly.
  std::string serialize() const {
    std::ostringstream out;
    for (const Node& n : nodes_)
      out << "node " << n.name << ' '
          << (n.kind == NodeKind::original ? "original" : "crossing") << '\n';
    for (int d = 0; d < dart_count(); ++d)
      if (d < partner_[d])
        out << "seg " << dart_ref(d) << ' ' << dart_ref(partner_[d]) << '\n';
    return out.str();
  }

 private:
  struct Node {
    std::string name;
    NodeKind kind;
    int first_dart = 0;
    int degree = 0;
  };

  std::vector<Node> nodes_;
  std::vector<int> dart_node_;
  std::vector<int> partner_;
  std::vector<int> originals_;
  std::map<std::string, int> name_index_;
  int original_count_ = 0;
};

namespace detail {

struct DartRef {
  std::string node;
  int slot;
};

inline DartRef parse_dart_ref(const std::string& token, int line, int column) {
  auto dot = token.rfind('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == token.size())
    throw ParseError("expected <id>.<slot>, got '" + token + "'", line, column);
  std::string node = token.substr(0, dot);
  std::string slot_text = token.substr(dot + 1);
  for (char c : slot_text)
    if (c < '0' || c > '9')
      throw ParseError("slot must be a nonnegative integer in '" + token + "'",
                       line, column);
  long slot = std::stol(slot_text);
  if (slot > 1 << 20) throw ParseError("slot out of range in '" + token + "'", line, column);
  return {node, static_cast<int>(slot)};
}

}  // namespace detail

inline PlanarMap PlanarMap::parse(std::string_view document) {
  struct RawSeg {
    detail::DartRef a, b;
    int line;
  };
  std::map<std::string, NodeKind> decls;
  std::vector<std::string> decl_order;
  std::vector<RawSeg> segs;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= document.size()) {
    size_t eol = document.find('\n', pos);
    std::string line(document.substr(pos, eol == std::string_view::npos
                                              ? document.size() - pos
                                              : eol - pos));
    pos = eol == std::string_view::npos ? document.size() + 1 : eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

    std::vector<std::string> tokens;
    std::vector<int> cols;
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) {
        tokens.push_back(line.substr(start, i - start));
        cols.push_back(static_cast<int>(start) + 1);
      }
    }
    if (tokens.empty()) continue;

    if (tokens[0] == "node") {
      if (tokens.size() != 3)
        throw ParseError("expected: node <id> original|crossing", line_no, cols[0]);
      if (tokens[1].find('.') != std::string::npos)
        throw ParseError("node id must not contain '.'", line_no, cols[1]);
      NodeKind kind;
      if (tokens[2] == "original") kind = NodeKind::original;
      else if (tokens[2] == "crossing") kind = NodeKind::crossing;
      else throw ParseError("node kind must be 'original' or 'crossing'", line_no, cols[2]);
      if (decls.count(tokens[1]))
        throw ParseError("duplicate node id '" + tokens[1] + "'", line_no, cols[1]);
      decls.emplace(tokens[1], kind);
      decl_order.push_back(tokens[1]);
    } else if (tokens[0] == "seg") {
      if (tokens.size() != 3)
        throw ParseError("expected: seg <idA>.<slotA> <idB>.<slotB>", line_no, cols[0]);
      RawSeg s{detail::parse_dart_ref(tokens[1], line_no, cols[1]),
               detail::parse_dart_ref(tokens[2], line_no, cols[2]), line_no};
      segs.push_back(std::move(s));
    } else {
      throw ParseError("unknown directive '" + tokens[0] + "'", line_no, cols[0]);
    }
  }

  if (decls.empty()) throw ParseError("document declares no nodes", line_no, 1);

  PlanarMap m;
  for (const auto& [name, kind] : decls) {  // std::map iterates sorted by id
    m.name_index_.emplace(name, static_cast<int>(m.nodes_.size()));
    m.nodes_.push_back(Node{name, kind, 0, 0});
  }

  // First pass: degrees from the highest slot used per node.
  std::vector<std::map<int, int>> used(m.nodes_.size());  // slot -> line
  auto touch = [&](const detail::DartRef& r, int line) {
    auto it = m.name_index_.find(r.node);
    if (it == m.name_index_.end())
      throw ParseError("segment references undeclared node '" + r.node + "'", line, 1);
    int node = it->second;
    auto [slot_it, fresh] = used[node].emplace(r.slot, line);
    if (!fresh)
      throw ParseError("duplicate slot " + r.node + "." + std::to_string(r.slot) +
                           " (also used on line " + std::to_string(slot_it->second) + ")",
                       line, 1);
    m.nodes_[node].degree = std::max(m.nodes_[node].degree, r.slot + 1);
    return node;
  };
  struct SegIdx {
    int node_a, slot_a, node_b, slot_b, line;
  };
  std::vector<SegIdx> seg_idx;
  for (const RawSeg& s : segs) {
    int na = touch(s.a, s.line);
    int nb = touch(s.b, s.line);
    if (na == nb)
      throw ParseError("segment joins node '" + s.a.node + "' to itself", s.line, 1);
    seg_idx.push_back({na, s.a.slot, nb, s.b.slot, s.line});
  }

  // Every slot 0..deg-1 must be present; a gap is a dangling dart.
  int total_darts = 0;
  for (size_t node = 0; node < m.nodes_.size(); ++node) {
    Node& n = m.nodes_[node];
    if (n.degree == 0)
      throw ParseError("node '" + n.name + "' has no darts", 1, 1);
    if (static_cast<int>(used[node].size()) != n.degree) {
      for (int s = 0; s < n.degree; ++s)
        if (!used[node].count(s))
          throw ParseError("dangling dart: slot " + n.name + "." + std::to_string(s) +
                               " is never used",
                           1, 1);
    }
    if (n.kind == NodeKind::crossing && n.degree != 4)
      throw ParseError("crossing degree must be 4 (node '" + n.name + "' has degree " +
                           std::to_string(n.degree) + ")",
                       1, 1);
    n.first_dart = total_darts;
    total_darts += n.degree;
  }

  m.dart_node_.resize(total_darts);
  m.partner_.assign(total_darts, -1);
  for (size_t node = 0; node < m.nodes_.size(); ++node)
    for (int s = 0; s < m.nodes_[node].degree; ++s)
      m.dart_node_[m.nodes_[node].first_dart + s] = static_cast<int>(node);

  for (const SegIdx& s : seg_idx) {
    int da = m.nodes_[s.node_a].first_dart + s.slot_a;
    int db = m.nodes_[s.node_b].first_dart + s.slot_b;
    m.partner_[da] = db;
    m.partner_[db] = da;
  }

  for (size_t node = 0; node < m.nodes_.size(); ++node) {
    if (m.nodes_[node].kind == NodeKind::original) {
      m.originals_.push_back(static_cast<int>(node));
      ++m.original_count_;
    }
  }
  if (m.original_count_ == 0)
    throw ParseError("map has no original vertices", 1, 1);

  // Connectivity, so Euler's relation is meaningful downstream.
  std::vector<char> seen(m.nodes_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int s = 0; s < m.nodes_[v].degree; ++s) {
      int w = m.dart_node_[m.partner_[m.nodes_[v].first_dart + s]];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != m.node_count())
    throw ParseError("map is not connected", 1, 1);

  return m;
}

}  // namespace crossmap
