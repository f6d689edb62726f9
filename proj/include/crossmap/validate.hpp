#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crossmap/edges.hpp"
#include "crossmap/faces.hpp"
#include "crossmap/map.hpp"

namespace crossmap {

// Checks a drawing against the preconditions the discharging argument relies
// on.  Violations are reported, never thrown.
struct ValidationReport {
  bool euler_ok = false;
  bool two_connected = false;
  bool simple = false;
  bool self_crossing = false;
  int max_crossings_per_edge = 0;
  int min_degree = 0;
  int k_max = 4;
  std::vector<std::string> assumption_flags;

  bool clean() const { return assumption_flags.empty(); }
};

namespace detail {

// Articulation-point test (iterative lowpoint DFS) on the nodes of M(G).
inline bool has_cut_vertex(const PlanarMap& m) {
  int n = m.node_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
  std::vector<std::pair<int, int>> stack;  // (node, next slot to scan)
  int timer = 0;
  disc[0] = low[0] = timer++;
  stack.push_back({0, 0});
  bool cut = false;
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    if (slot < m.degree(v)) {
      int w = m.node_of(m.partner(m.dart(v, slot)));
      ++slot;
      if (disc[w] < 0) {
        parent[w] = v;
        ++child_count[v];
        disc[w] = low[w] = timer++;
        stack.push_back({w, 0});
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      int done = v;
      stack.pop_back();
      int p = parent[done];
      if (p >= 0) {
        low[p] = std::min(low[p], low[done]);
        if (p != 0 && low[done] >= disc[p]) cut = true;
      }
    }
  }
  if (child_count[0] > 1) cut = true;
  return cut;
}

}  // namespace detail

inline ValidationReport validate(const PlanarMap& m, int k_max = 4) {
  ValidationReport r;
  r.k_max = k_max;

  FaceSet fs = trace_faces_unchecked(m);
  r.euler_ok = euler_characteristic(m, fs) == 2;
  r.two_connected = m.node_count() >= 3 && !detail::has_cut_vertex(m);

  EdgeSet es = recover_edges(m);
  r.max_crossings_per_edge = es.max_crossings();
  r.self_crossing = es.any_self_crossing();

  r.min_degree = m.degree(m.originals().front());
  for (int v : m.originals()) r.min_degree = std::min(r.min_degree, m.degree(v));

  // Intersection count per unordered edge pair: shared endpoints plus shared
  // interior crossings.  Simple means no pair meets twice; a shared endpoint
  // counts as an intersection, so adjacent edges must not cross.
  std::map<std::pair<int, int>, int> meets;
  std::vector<std::vector<int>> incident(m.node_count());
  for (int i = 0; i < es.count(); ++i) {
    incident[es.edges[i].endpoints[0]].push_back(i);
    incident[es.edges[i].endpoints[1]].push_back(i);
  }
  for (int v : m.originals()) {
    const auto& inc = incident[v];
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j) {
        if (inc[i] == inc[j]) continue;  // loop edge; flagged via simple below
        ++meets[{std::min(inc[i], inc[j]), std::max(inc[i], inc[j])}];
      }
  }
  bool loop_edge = false;
  for (const auto& e : es.edges)
    if (e.endpoints[0] == e.endpoints[1]) loop_edge = true;
  for (int v = 0; v < m.node_count(); ++v) {
    if (m.kind(v) != NodeKind::crossing) continue;
    int e1 = es.edge_of_dart[m.dart(v, 0)];
    int e2 = es.edge_of_dart[m.dart(v, 1)];
    if (e1 == e2) continue;  // self-crossing, already flagged
    ++meets[{std::min(e1, e2), std::max(e1, e2)}];
  }
  bool pair_ok = true;
  for (const auto& [pair, count] : meets)
    if (count > 1) pair_ok = false;
  r.simple = pair_ok && !r.self_crossing && !loop_edge;

  if (r.min_degree < 7) r.assumption_flags.push_back("min-degree<7");
  if (!r.two_connected) r.assumption_flags.push_back("not-2-connected");
  if (!r.simple) r.assumption_flags.push_back("not-simple");
  if (r.max_crossings_per_edge > k_max)
    r.assumption_flags.push_back("crossings>" + std::to_string(k_max));
  return r;
}

}  // namespace crossmap
