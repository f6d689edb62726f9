#pragma once

#include <array>
#include <set>
#include <vector>

#include "crossmap/map.hpp"

namespace crossmap {

// One edge of the drawn graph G, recovered by walking segments and continuing
// straight through each crossing (slot + 2 mod 4).
struct OriginalEdge {
  std::array<int, 2> endpoints{};  // original node ids
  std::vector<int> interior;       // crossing nodes in walk order
  std::vector<int> segments;       // canonical segment ids in walk order
  int start_dart = -1;             // dart at endpoints[0]
  int end_dart = -1;               // dart at endpoints[1]
  bool self_crossing = false;

  int crossings() const { return static_cast<int>(interior.size()); }
};

struct EdgeSet {
  std::vector<OriginalEdge> edges;
  std::vector<int> edge_of_dart;  // dart -> edge index

  int count() const { return static_cast<int>(edges.size()); }
  int max_crossings() const {
    int best = 0;
    for (const auto& e : edges) best = std::max(best, e.crossings());
    return best;
  }
  bool any_self_crossing() const {
    for (const auto& e : edges)
      if (e.self_crossing) return true;
    return false;
  }
};

// Every dart at an original vertex starts exactly one edge walk and each edge
// is reported once, keyed by its least endpoint dart.  The walks partition the
// segments of the map; a strand that never reaches an original vertex is a
// closed curve with no endpoints and is rejected.
inline EdgeSet recover_edges(const PlanarMap& m) {
  EdgeSet es;
  es.edge_of_dart.assign(m.dart_count(), -1);
  std::vector<char> claimed(m.dart_count(), 0);

  for (int d0 = 0; d0 < m.dart_count(); ++d0) {
    if (m.kind(m.node_of(d0)) != NodeKind::original || claimed[d0]) continue;
    OriginalEdge e;
    e.endpoints[0] = m.node_of(d0);
    e.start_dart = d0;
    std::set<int> seen_crossings;
    int cur = d0;
    while (true) {
      es.edge_of_dart[cur] = es.count();
      es.edge_of_dart[m.partner(cur)] = es.count();
      e.segments.push_back(m.segment_id(cur));
      int far = m.partner(cur);
      int v = m.node_of(far);
      if (m.kind(v) == NodeKind::original) {
        e.endpoints[1] = v;
        e.end_dart = far;
        claimed[far] = 1;
        break;
      }
      if (!seen_crossings.insert(v).second) e.self_crossing = true;
      e.interior.push_back(v);
      cur = m.dart(v, (m.slot_of(far) + 2) % 4);
    }
    claimed[d0] = 1;
    es.edges.push_back(std::move(e));
  }

  for (int d = 0; d < m.dart_count(); ++d)
    if (es.edge_of_dart[d] < 0)
      throw MapError("segment " + m.segment_name(d) +
                     " lies on a closed strand with no endpoints");
  return es;
}

}  // namespace crossmap
