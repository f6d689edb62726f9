#pragma once

#include <set>
#include <string>
#include <vector>

#include "crossmap/map.hpp"

namespace crossmap {

// One face of the map.  `size` counts boundary positions (equal to the number
// of distinct boundary edges whenever the map is 2-connected), `originals`
// counts distinct original vertices on the boundary, and `original_corners`
// counts boundary positions at original vertices.  The two vertex counts agree
// on 2-connected maps; charge accounting uses corners so that the total charge
// identity stays exact on degenerate inputs.
struct FaceRecord {
  std::vector<int> boundary;  // darts in orbit order, starting at the least
  int originals = 0;
  int original_corners = 0;

  int size() const { return static_cast<int>(boundary.size()); }

  // "0-triangle", "2-quadrilateral", "1-pentagon", "0-hexagon", "3-7-gon", ...
  std::string label() const {
    std::string s = std::to_string(originals) + "-";
    switch (size()) {
      case 3: return s + "triangle";
      case 4: return s + "quadrilateral";
      case 5: return s + "pentagon";
      case 6: return s + "hexagon";
      default: return s + std::to_string(size()) + "-gon";
    }
  }

  bool is(int sz, int k) const { return size() == sz && originals == k; }
};

struct FaceSet {
  std::vector<FaceRecord> faces;
  std::vector<int> face_of;      // dart -> face index
  std::vector<int> pos_in_face;  // dart -> position on its face boundary

  int count() const { return static_cast<int>(faces.size()); }
};

// Faces are the orbits of dart -> rotation_next(partner(dart)); each face lies
// to one fixed side of all its boundary darts.  Orbits are discovered in dart
// order, so face ids are deterministic.
inline FaceSet trace_faces_unchecked(const PlanarMap& m) {
  FaceSet fs;
  fs.face_of.assign(m.dart_count(), -1);
  fs.pos_in_face.assign(m.dart_count(), -1);
  for (int start = 0; start < m.dart_count(); ++start) {
    if (fs.face_of[start] >= 0) continue;
    FaceRecord face;
    int id = fs.count();
    std::set<int> distinct;
    int d = start;
    do {
      fs.face_of[d] = id;
      fs.pos_in_face[d] = face.size();
      face.boundary.push_back(d);
      int node = m.node_of(d);
      if (m.kind(node) == NodeKind::original) {
        ++face.original_corners;
        distinct.insert(node);
      }
      d = m.rotation_next(m.partner(d));
    } while (d != start);
    face.originals = static_cast<int>(distinct.size());
    fs.faces.push_back(std::move(face));
  }
  return fs;
}

inline int euler_characteristic(const PlanarMap& m, const FaceSet& fs) {
  return m.node_count() - m.segment_count() + fs.count();
}

// Throws when the rotation system does not describe a sphere map.
inline FaceSet trace_faces(const PlanarMap& m) {
  FaceSet fs = trace_faces_unchecked(m);
  int chi = euler_characteristic(m, fs);
  if (chi != 2)
    throw MapError("non-spherical embedding: V-E+F = " + std::to_string(chi) +
                   ", expected 2");
  return fs;
}

}  // namespace crossmap
