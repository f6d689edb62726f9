#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossmap/map.hpp"

namespace crossmap {

// Assembles a map document from nodes with ordered port lists; the two ports
// carrying the same key become one segment.  Ports are appended in rotation
// order (slot 0 first).
class MapBuilder {
 public:
  int add_node(std::string name, NodeKind kind) {
    nodes_.push_back({std::move(name), kind, {}});
    return static_cast<int>(nodes_.size()) - 1;
  }

  void add_port(int node, int key) { nodes_[node].ports.push_back(key); }

  std::string document() const {
    std::map<int, std::vector<std::string>> ends;
    std::ostringstream out;
    for (const auto& n : nodes_) {
      out << "node " << n.name << ' '
          << (n.kind == NodeKind::original ? "original" : "crossing") << '\n';
      for (size_t slot = 0; slot < n.ports.size(); ++slot)
        ends[n.ports[slot]].push_back(n.name + "." + std::to_string(slot));
    }
    for (const auto& [key, refs] : ends) {
      if (refs.size() != 2)
        throw std::logic_error("builder key " + std::to_string(key) + " used " +
                               std::to_string(refs.size()) + " times");
      out << "seg " << refs[0] << ' ' << refs[1] << '\n';
    }
    return out.str();
  }

 private:
  struct N {
    std::string name;
    NodeKind kind;
    std::vector<int> ports;
  };
  std::vector<N> nodes_;
};

}  // namespace crossmap
