#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crossmap/builder.hpp"
#include "crossmap/faces.hpp"
#include "crossmap/map.hpp"

namespace crossmap::construct {

inline long predicted_edge_count(long layers) {
  if (layers < 2) throw std::invalid_argument("cylinder requires layers >= 2");
  return 36 * layers - 18;
}

namespace detail {

struct Vec {
  long long x, y;
};
inline Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
inline long long cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }

// Strict counterclockwise order of directions around the full circle,
// starting just above the +x axis.
inline int angle_half(Vec v) {
  return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0;
}
inline bool ccw_less(Vec a, Vec b) {
  if (angle_half(a) != angle_half(b)) return angle_half(a) < angle_half(b);
  return cross(a, b) > 0;
}

// Diagonals of a convex hexagon drawn inside one face.  Positions 0..5 follow
// the face boundary; the fixed template realizes convex position, so two
// chords cross exactly when their endpoints interleave.  Template coordinates
// are slightly irregular to keep every triple of chords non-concurrent.
constexpr std::array<Vec, 6> kHexTemplate = {{{7, 997},
                                              {871, 509},
                                              {861, -487},
                                              {-11, -1003},
                                              {-867, -493},
                                              {-881, 491}}};

struct HexGadget {
  // Keys to splice into each boundary vertex's rotation, ordered
  // counterclockwise starting at the ray toward the previous boundary vertex.
  std::array<std::vector<int>, 6> corner_inserts;
  // New crossing nodes; ports in counterclockwise rotation order.
  std::vector<std::array<int, 4>> crossings;
};

inline bool interleaves(std::pair<int, int> c1, std::pair<int, int> c2) {
  if (c1.first == c2.first || c1.first == c2.second || c1.second == c2.first ||
      c1.second == c2.second)
    return false;  // chords sharing an endpoint meet there, not at a crossing
  auto inside = [&](int v) { return c1.first < v && v < c1.second; };
  return inside(c2.first) != inside(c2.second);
}

inline HexGadget hexagon_gadget(const std::vector<std::pair<int, int>>& chords,
                                int& next_key) {
  const auto& P = kHexTemplate;
  for (int k = 0; k < 6; ++k)
    if (cross(P[(k + 1) % 6] - P[k], P[(k + 2) % 6] - P[(k + 1) % 6]) >= 0)
      throw std::logic_error("hexagon template is not clockwise convex");

  struct OnChord {
    long long t_num, t_den;  // crossing parameter along the chord, in (0,1)
    int crossing;
  };

  HexGadget g;
  std::vector<std::vector<OnChord>> along(chords.size());
  std::vector<std::pair<int, int>> crossing_chords;

  for (size_t i = 0; i < chords.size(); ++i)
    for (size_t j = i + 1; j < chords.size(); ++j) {
      if (!interleaves(chords[i], chords[j])) continue;
      int id = static_cast<int>(crossing_chords.size());
      crossing_chords.push_back({static_cast<int>(i), static_cast<int>(j)});
      auto param = [&](std::pair<int, int> c, std::pair<int, int> d) -> OnChord {
        Vec A = P[c.first], B = P[c.second], C = P[d.first], D = P[d.second];
        long long num = cross(C - A, D - C);
        long long den = cross(B - A, D - C);
        if (den < 0) { num = -num; den = -den; }
        if (!(0 < num && num < den))
          throw std::logic_error("template chords do not cross properly");
        return {num, den, id};
      };
      along[i].push_back(param(chords[i], chords[j]));
      along[j].push_back(param(chords[j], chords[i]));
    }

  auto t_less = [](const OnChord& a, const OnChord& b) {
    return a.t_num * b.t_den < b.t_num * a.t_den;
  };

  // Segment keys along each chord, endpoints included; record, per crossing,
  // the key continuing toward each endpoint of each of its chords.
  std::vector<std::array<std::array<int, 2>, 2>> keys_at(crossing_chords.size());
  std::vector<std::vector<std::pair<Vec, int>>> corner_items(6);

  for (size_t c = 0; c < chords.size(); ++c) {
    auto& xs = along[c];
    std::sort(xs.begin(), xs.end(), t_less);
    for (size_t q = 1; q < xs.size(); ++q)
      if (!t_less(xs[q - 1], xs[q]))
        throw std::logic_error("template has three concurrent chords");
    std::vector<int> keys(xs.size() + 1);
    for (auto& k : keys) k = next_key++;
    for (size_t q = 0; q < xs.size(); ++q) {
      int id = xs[q].crossing;
      int which = crossing_chords[id].first == static_cast<int>(c) ? 0 : 1;
      keys_at[id][which] = {keys[q], keys[q + 1]};  // toward first / second endpoint
    }
    auto [a, b] = chords[c];
    corner_items[a].push_back({P[b] - P[a], keys.front()});
    corner_items[b].push_back({P[a] - P[b], keys.back()});
  }

  // Crossing rotations: the four strand directions sorted counterclockwise.
  for (size_t id = 0; id < crossing_chords.size(); ++id) {
    auto [ca, cb] = crossing_chords[id];
    struct Port {
      Vec dir;
      int key;
    };
    std::array<Port, 4> ports = {{
        {P[chords[ca].first] - P[chords[ca].second], keys_at[id][0][0]},
        {P[chords[ca].second] - P[chords[ca].first], keys_at[id][0][1]},
        {P[chords[cb].first] - P[chords[cb].second], keys_at[id][1][0]},
        {P[chords[cb].second] - P[chords[cb].first], keys_at[id][1][1]},
    }};
    std::sort(ports.begin(), ports.end(),
              [](const Port& a, const Port& b) { return ccw_less(a.dir, b.dir); });
    g.crossings.push_back(
        {ports[0].key, ports[1].key, ports[2].key, ports[3].key});
  }

  // Corner inserts: chord ends at each boundary vertex, swept counterclockwise
  // from the ray toward the previous boundary vertex.  All chord directions at
  // a convex corner lie strictly inside that cone, which spans less than a
  // half turn, so a plain cross-product comparator orders them.
  for (int k = 0; k < 6; ++k) {
    auto& items = corner_items[k];
    std::sort(items.begin(), items.end(),
              [](const std::pair<Vec, int>& a, const std::pair<Vec, int>& b) {
                return cross(a.first, b.first) > 0;
              });
    for (auto& [dir, key] : items) g.corner_inserts[k].push_back(key);
  }
  return g;
}

}  // namespace detail

// Emits the map of the near-extremal drawing on n = 6l vertices: a cylinder of
// l-1 layers of three hexagons plus two hexagonal caps, every hexagon fully
// triangulated by its diagonals in convex position, except that the caps omit
// the three diagonals joining vertices adjacent to three hexagons.  The result
// has 6n - 18 edges and at most four crossings on every edge.
inline std::string cylinder(long layers) {
  if (layers < 2) throw std::invalid_argument("cylinder requires layers >= 2");
  const int l = static_cast<int>(layers);

  auto vname = [](int i, int k) {
    return "v" + std::to_string(i) + "x" + std::to_string(k);
  };

  // Skeleton: l rings of six vertices, three vertical edges between
  // consecutive rings, rotations laid out so faces are the 3l - 1 hexagons.
  MapBuilder sk;
  std::vector<std::array<int, 6>> node_id(l);
  for (int i = 0; i < l; ++i)
    for (int k = 0; k < 6; ++k)
      node_id[i][k] = sk.add_node(vname(i, k), NodeKind::original);

  int next_key = 0;
  std::vector<std::array<int, 6>> ring_key(l), vert_key(l);
  for (int i = 0; i < l; ++i)
    for (int k = 0; k < 6; ++k) {
      ring_key[i][k] = next_key++;
      if (i + 1 < l && k % 2 == i % 2) vert_key[i][k] = next_key++;
    }

  for (int i = 0; i < l; ++i)
    for (int k = 0; k < 6; ++k) {
      bool down = i + 1 < l && k % 2 == i % 2;
      bool up = i > 0 && k % 2 == (i - 1) % 2;
      int node = node_id[i][k];
      int next = ring_key[i][k];
      int prev = ring_key[i][(k + 5) % 6];
      if (down) {
        sk.add_port(node, vert_key[i][k]);
        sk.add_port(node, next);
        sk.add_port(node, prev);
      } else if (up) {
        sk.add_port(node, next);
        sk.add_port(node, vert_key[i - 1][k]);
        sk.add_port(node, prev);
      } else {
        sk.add_port(node, next);
        sk.add_port(node, prev);
      }
    }

  PlanarMap skeleton = PlanarMap::parse(sk.document());
  FaceSet sfs = trace_faces(skeleton);
  if (sfs.count() != 3 * l - 1)
    throw std::logic_error("cylinder skeleton has wrong face count");
  for (const FaceRecord& f : sfs.faces)
    if (f.size() != 6) throw std::logic_error("cylinder skeleton face is not a hexagon");

  std::vector<int> ring_of(skeleton.node_count());
  for (int i = 0; i < l; ++i)
    for (int k = 0; k < 6; ++k) ring_of[skeleton.node_by_name(vname(i, k))] = i;

  // One gadget per face.  Gadget keys live above the skeleton's dart ids,
  // which serve as the keys of the surviving skeleton segments.
  int gadget_key = skeleton.dart_count();
  struct FaceGadget {
    detail::HexGadget g;
    std::array<int, 6> pos_node;  // boundary position -> node
  };
  std::vector<FaceGadget> gadgets(sfs.count());
  std::vector<std::vector<std::pair<int, int>>> face_chords(sfs.count());
  for (int f = 0; f < sfs.count(); ++f) {
    const FaceRecord& face = sfs.faces[f];
    bool cap = true;
    for (int p = 1; p < 6; ++p)
      if (ring_of[skeleton.node_of(face.boundary[p])] !=
          ring_of[skeleton.node_of(face.boundary[0])])
        cap = false;
    std::vector<std::pair<int, int>> chords;
    for (int p = 0; p < 6; ++p)
      for (int q = p + 2; q < 6; ++q) {
        if (p == 0 && q == 5) continue;  // boundary side, not a diagonal
        if (cap) {
          int np = skeleton.node_of(face.boundary[p]);
          int nq = skeleton.node_of(face.boundary[q]);
          if (skeleton.degree(np) == 3 && skeleton.degree(nq) == 3) continue;
        }
        chords.push_back({p, q});
      }
    face_chords[f] = chords;
    gadgets[f].g = detail::hexagon_gadget(chords, gadget_key);
    for (int p = 0; p < 6; ++p)
      gadgets[f].pos_node[p] = skeleton.node_of(face.boundary[p]);
  }

  // Assembly: original vertices keep their skeleton rotation with each face's
  // chord ends spliced into the corner before the corresponding dart; crossing
  // nodes take their gadget rotation verbatim.
  MapBuilder out;
  std::vector<int> final_node(skeleton.node_count());
  for (int v = 0; v < skeleton.node_count(); ++v)
    final_node[v] = out.add_node(skeleton.name(v), NodeKind::original);

  for (int v = 0; v < skeleton.node_count(); ++v) {
    for (int slot = 0; slot < skeleton.degree(v); ++slot) {
      int r = skeleton.dart(v, slot);
      int f = sfs.face_of[r];
      int pos = sfs.pos_in_face[r];
      for (int key : gadgets[f].g.corner_inserts[pos])
        out.add_port(final_node[v], key);
      out.add_port(final_node[v], skeleton.segment_id(r));
    }
  }

  int crossing_counter = 0;
  for (int f = 0; f < sfs.count(); ++f)
    for (const auto& ports : gadgets[f].g.crossings) {
      int c = out.add_node("c" + std::to_string(crossing_counter++),
                           NodeKind::crossing);
      for (int key : ports) out.add_port(c, key);
    }

  return out.document();
}

}  // namespace crossmap::construct
