#pragma once

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossmap/builder.hpp"
#include "crossmap/map.hpp"

namespace testsupport {

inline std::string load_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline crossmap::PlanarMap fixture_map(const std::string& name) {
  return crossmap::PlanarMap::parse(load_fixture(name));
}

// Apex vertex A with two rays A-B and A-C, crossed by k horizontal edges.
// The first horizontal is D-E with A-D and A-E drawn, so the triangle
// (A, x1, y1) is a 1-triangle flanked by two distinct 2-triangles; the
// horizontals below it cut consecutive 0-quadrilaterals into the wedge.
inline std::string ladder_doc(int k) {
  std::ostringstream out;
  out << "node A original\nnode B original\nnode C original\n"
      << "node D original\nnode E original\n";
  for (int i = 2; i <= k; ++i)
    out << "node L" << i << " original\nnode R" << i << " original\n";
  for (int i = 1; i <= k; ++i)
    out << "node x" << i << " crossing\nnode y" << i << " crossing\n";

  out << "seg A.0 D.1\nseg A.1 x1.1\nseg A.2 y1.1\nseg A.3 E.0\n";
  out << "seg D.0 x1.2\nseg y1.0 E.1\n";
  for (int i = 1; i <= k; ++i) out << "seg x" << i << ".0 y" << i << ".2\n";
  for (int i = 2; i <= k; ++i)
    out << "seg L" << i << ".0 x" << i << ".2\n"
        << "seg y" << i << ".0 R" << i << ".0\n";
  for (int i = 1; i < k; ++i)
    out << "seg x" << i << ".3 x" << i + 1 << ".1\n"
        << "seg y" << i << ".3 y" << i + 1 << ".1\n";
  out << "seg x" << k << ".3 B.0\nseg y" << k << ".3 C.0\n";
  return out.str();
}

inline crossmap::PlanarMap ladder(int k) {
  return crossmap::PlanarMap::parse(ladder_doc(k));
}

// Apex vertex A with four rays, all crossed by one horizontal edge D-E: the
// three faces between consecutive rays above the horizontal are 1-triangles,
// the middle one with 1-triangle neighbors on both sides.
inline crossmap::PlanarMap rays4() {
  std::ostringstream out;
  out << "node A original\nnode D original\nnode E original\n";
  for (int i = 1; i <= 4; ++i) out << "node B" << i << " original\n";
  for (int i = 1; i <= 4; ++i) out << "node x" << i << " crossing\n";
  for (int i = 1; i <= 4; ++i) out << "seg A." << i - 1 << " x" << i << ".1\n";
  out << "seg D.0 x1.2\n";
  for (int i = 1; i < 4; ++i) out << "seg x" << i << ".0 x" << i + 1 << ".2\n";
  out << "seg x4.0 E.0\n";
  for (int i = 1; i <= 4; ++i) out << "seg x" << i << ".3 B" << i << ".0\n";
  return crossmap::PlanarMap::parse(out.str());
}

// Five pairwise-crossing segments: the tangent lines to a circle at five
// equally spaced points, trimmed past their ten crossings.  The bounded cells
// are a central 0-pentagon and five 0-triangles, each triangle sharing one
// edge with the pentagon.
inline crossmap::PlanarMap pentagram() {
  constexpr double kPi = 3.14159265358979323846;
  crossmap::MapBuilder b;

  double phi[5], dirx[5], diry[5];
  for (int i = 0; i < 5; ++i) {
    phi[i] = 2.0 * kPi * i / 5.0;
    dirx[i] = -std::sin(phi[i]);
    diry[i] = std::cos(phi[i]);
  }

  // crossing (i, j) sits on line i at parameter tan((phi_j - phi_i) / 2)
  std::map<std::pair<int, int>, int> crossing_node;
  struct PortInfo {
    double angle;
    int key;
  };
  std::map<int, std::vector<PortInfo>> crossing_ports;

  int next_key = 0;

  struct LineStop {
    double t;
    int node;  // builder node id of the crossing
    int other; // other line
  };

  // create crossing nodes first
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      std::string name = "x" + std::to_string(i) + std::to_string(j);
      crossing_node[{i, j}] = b.add_node(name, crossmap::NodeKind::crossing);
    }

  std::vector<int> line_start(5), line_end(5);
  for (int i = 0; i < 5; ++i) {
    line_start[i] = b.add_node("P" + std::to_string(i) + "s",
                               crossmap::NodeKind::original);
    line_end[i] = b.add_node("P" + std::to_string(i) + "e",
                             crossmap::NodeKind::original);
  }

  for (int i = 0; i < 5; ++i) {
    std::vector<LineStop> stops;
    for (int j = 0; j < 5; ++j) {
      if (j == i) continue;
      double t = std::tan((phi[j] - phi[i]) / 2.0);
      stops.push_back({t, crossing_node[{std::min(i, j), std::max(i, j)}], j});
    }
    std::sort(stops.begin(), stops.end(),
              [](const LineStop& a, const LineStop& b) { return a.t < b.t; });
    // segments along the line: start endpoint, four crossings, end endpoint
    int prev_key = next_key++;
    b.add_port(line_start[i], prev_key);
    for (size_t s = 0; s < stops.size(); ++s) {
      int out_key = next_key++;
      double forward = std::atan2(diry[i], dirx[i]);
      double backward = std::atan2(-diry[i], -dirx[i]);
      crossing_ports[stops[s].node].push_back({backward, prev_key});
      crossing_ports[stops[s].node].push_back({forward, out_key});
      prev_key = out_key;
    }
    b.add_port(line_end[i], prev_key);
  }

  for (auto& [node, ports] : crossing_ports) {
    std::sort(ports.begin(), ports.end(),
              [](const PortInfo& a, const PortInfo& b) { return a.angle < b.angle; });
    for (const PortInfo& p : ports) b.add_port(node, p.key);
  }

  return crossmap::PlanarMap::parse(b.document());
}

}  // namespace testsupport
