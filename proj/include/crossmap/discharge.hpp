#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crossmap/edges.hpp"
#include "crossmap/faces.hpp"
#include "crossmap/map.hpp"
#include "crossmap/rational.hpp"
#include "crossmap/validate.hpp"

namespace crossmap {

// strict: runtime assertions abort the run.  permissive: they are recorded and
// the run continues (useful for small fixtures that violate the minimum-degree
// precondition).
enum class RunMode { strict, permissive };

class DischargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ContributionEvent {
  int step = 0;
  int donor = -1;     // face id
  int receiver = -1;  // face id, or original node id when receiver_is_vertex
  bool receiver_is_vertex = false;
  Rational amount;
  int conduit_segment = -1;   // canonical segment id, steps 1 and 3..5
  int conduit_crossing = -1;  // crossing node id, step 6
};

// Charge state after one step.  `events` are the contributions applied while
// producing this ledger from the previous one.
struct ChargeLedger {
  int step = 0;
  std::vector<Rational> face_charge;
  std::vector<Rational> vertex_charge;  // by position in map.originals()
  std::vector<ContributionEvent> events;
};

struct WedgeInfo {
  int triangle = -1;
  std::vector<int> quads;    // consecutive 0-quadrilaterals, possibly empty
  int wedge_neighbor = -1;   // first face past the quads
  int through_segment = -1;  // edge shared by the wedge and its neighbor
};

struct Certificate {
  long n = 0;
  long m = 0;
  long bound = 0;  // 6n - 12
  bool holds = false;
};

struct DischargeReport {
  std::vector<ChargeLedger> ledgers;  // snapshots after steps 0..6
  bool final_nonnegative = false;
  bool vertex_charges_ok = false;
  Certificate certificate;
  std::vector<std::string> assertion_violations;
  std::vector<std::string> assumption_flags;  // from validate()
};

inline int original_ordinal(const PlanarMap& m, int node) {
  const auto& o = m.originals();
  auto it = std::lower_bound(o.begin(), o.end(), node);
  if (it == o.end() || *it != node)
    throw DischargeError("node " + m.name(node) + " is not an original vertex");
  return static_cast<int>(it - o.begin());
}

// ch0(f) = |f| + |V(f)| - 4 per face, zero on vertices.  Incidences are
// counted by boundary corners so the total is exactly 4n - 8 on every
// connected map, not just 2-connected ones.
inline ChargeLedger initial_charges(const PlanarMap& m, const FaceSet& fs) {
  ChargeLedger led;
  led.step = 0;
  led.face_charge.reserve(fs.count());
  for (const FaceRecord& f : fs.faces)
    led.face_charge.push_back(ratio(f.size() + f.original_corners - 4));
  led.vertex_charge.assign(m.original_count(), ratio(0));
  return led;
}

inline Rational total_charge(const ChargeLedger& led) {
  Rational t = ratio(0);
  for (const Rational& q : led.face_charge) t += q;
  for (const Rational& q : led.vertex_charge) t += q;
  return t;
}

namespace detail {

// Position of the unique original corner of a 1-triangle (or any face with
// exactly one original corner).
inline std::optional<int> sole_original_corner(const PlanarMap& m,
                                               const FaceRecord& f) {
  std::optional<int> pos;
  for (int p = 0; p < f.size(); ++p)
    if (m.kind(m.node_of(f.boundary[p])) == NodeKind::original) {
      if (pos) return std::nullopt;
      pos = p;
    }
  return pos;
}

struct ChainResult {
  std::vector<int> faces;    // f1, f2, ...; the last is the first non-0-quad
  std::vector<int> crossed;  // dart crossed to enter each face (near side)
  bool overrun = false;      // more 0-quadrilaterals than any valid drawing admits
  bool repeated = false;     // a face repeated along the chain
};

// From a dart of the starting face, cross its segment, then keep crossing the
// opposite edge of each 0-quadrilateral entered.  Stops at the first face that
// is not a 0-quadrilateral, or flags `overrun` after max_quads of them.
inline ChainResult chain_through_quads(const PlanarMap& m, const FaceSet& fs,
                                       int start_dart, int max_quads) {
  ChainResult r;
  std::set<int> seen{fs.face_of[start_dart]};
  int cur = start_dart;
  while (true) {
    r.crossed.push_back(cur);
    int entered = fs.face_of[m.partner(cur)];
    r.faces.push_back(entered);
    if (!seen.insert(entered).second) r.repeated = true;
    const FaceRecord& f = fs.faces[entered];
    if (!(f.size() == 4 && f.original_corners == 0)) break;
    if (static_cast<int>(r.faces.size()) > max_quads) {
      r.overrun = true;
      break;
    }
    int in_dart = m.partner(cur);
    cur = f.boundary[(fs.pos_in_face[in_dart] + 2) % 4];
  }
  return r;
}

struct TriangleNeighbors {
  int g1, g2;          // faces across the two edges at the original vertex
  int dart1, dart2;    // the triangle's darts on those edges
  int apex_pos;        // boundary position of the original vertex
};

inline TriangleNeighbors triangle_neighbors(const PlanarMap& m, const FaceSet& fs,
                                            int t) {
  const FaceRecord& f = fs.faces[t];
  auto pos = sole_original_corner(m, f);
  if (f.size() != 3 || !pos)
    throw DischargeError("face " + std::to_string(t) + " (" + f.label() +
                         ") is not a 1-triangle");
  int p = *pos;
  int d_out = f.boundary[p];                    // apex -> w
  int d_in = f.boundary[(p + 2) % 3];           // u -> apex
  TriangleNeighbors tn;
  tn.apex_pos = p;
  tn.dart1 = d_out;
  tn.dart2 = d_in;
  tn.g1 = fs.face_of[m.partner(d_out)];
  tn.g2 = fs.face_of[m.partner(d_in)];
  return tn;
}

}  // namespace detail

// The two faces sharing with the 1-triangle `t` the map edges incident to its
// original vertex.
inline std::pair<int, int> neighbors_of_1_triangle(const PlanarMap& m,
                                                   const FaceSet& fs, int t) {
  auto tn = detail::triangle_neighbors(m, fs, t);
  if (tn.g1 == tn.g2)
    throw DischargeError("neighbors of 1-triangle " + std::to_string(t) +
                         " coincide (minimum degree < 7 or cut vertex)");
  return {tn.g1, tn.g2};
}

// The chain of 0-quadrilaterals opposite the original vertex of `t`, plus the
// first face beyond it.  At most three 0-quadrilaterals can occur; more would
// put five crossings on an edge supporting the triangle.
inline WedgeInfo wedge(const PlanarMap& m, const FaceSet& fs, int t) {
  auto tn = detail::triangle_neighbors(m, fs, t);  // validates t
  const FaceRecord& f = fs.faces[t];
  int opposite = f.boundary[(tn.apex_pos + 1) % 3];
  auto chain = detail::chain_through_quads(m, fs, opposite, 3);
  if (chain.overrun)
    throw DischargeError("wedge of 1-triangle " + std::to_string(t) +
                         " extends past four faces (an edge has five crossings)");
  if (chain.repeated)
    throw DischargeError("wedge of 1-triangle " + std::to_string(t) +
                         " repeats a face (self-crossing edge)");
  WedgeInfo w;
  w.triangle = t;
  w.quads.assign(chain.faces.begin(), chain.faces.end() - 1);
  w.wedge_neighbor = chain.faces.back();
  w.through_segment = m.segment_id(chain.crossed.back());
  return w;
}

// The face opposite `f` among the four faces around the crossing `x`.
inline int vertex_neighbor(const PlanarMap& m, const FaceSet& fs, int f, int x) {
  if (x < 0 || x >= m.node_count() || m.kind(x) != NodeKind::crossing)
    throw DischargeError("node is not a crossing");
  for (int slot = 0; slot < 4; ++slot) {
    int d = m.dart(x, slot);
    if (fs.face_of[d] == f) return fs.face_of[m.dart(x, (slot + 2) % 4)];
  }
  throw DischargeError("face " + std::to_string(f) + " is not incident to crossing " +
                       m.name(x));
}

namespace detail {

class StepEngine {
 public:
  StepEngine(const PlanarMap& m, const FaceSet& fs, RunMode mode,
             std::vector<std::string>* violations)
      : m_(m), fs_(fs), mode_(mode), violations_(violations) {}

  ChargeLedger run(const ChargeLedger& prev, int step) {
    if (step < 1 || step > 6) throw std::invalid_argument("step must be 1..6");
    if (prev.step != step - 1)
      throw std::invalid_argument("ledger is after step " + std::to_string(prev.step) +
                                  ", cannot apply step " + std::to_string(step));
    events_.clear();
    switch (step) {
      case 1: gather_step1(prev); break;
      case 2: gather_step2(prev); break;
      case 3: gather_step3(prev); break;
      case 4: gather_step4(prev); break;
      case 5: gather_step5(prev); break;
      case 6: gather_step6(prev); break;
    }
    ChargeLedger next = prev;
    next.step = step;
    next.events = events_;
    for (const ContributionEvent& e : next.events) {
      next.face_charge[e.donor] -= e.amount;
      if (e.receiver_is_vertex)
        next.vertex_charge[original_ordinal(m_, e.receiver)] += e.amount;
      else
        next.face_charge[e.receiver] += e.amount;
    }
    check_once_only(next);
    post_step_assertions(next);
    return next;
  }

 private:
  void violation(const std::string& what) {
    if (violations_) violations_->push_back(what);
    if (mode_ == RunMode::strict) throw DischargeError("assertion violated: " + what);
  }

  // Structural face classes use corner counts, which agree with the distinct
  // count on 2-connected maps and keep the walks well-defined elsewhere.
  bool is_kface(int f, int sz, int k) const {
    const FaceRecord& fr = fs_.faces[f];
    return fr.size() == sz && fr.original_corners == k;
  }

  void add(int step, int donor, int receiver, bool to_vertex, Rational amount,
           int seg, int crossing) {
    ContributionEvent e;
    e.step = step;
    e.donor = donor;
    e.receiver = receiver;
    e.receiver_is_vertex = to_vertex;
    e.amount = std::move(amount);
    e.conduit_segment = seg;
    e.conduit_crossing = crossing;
    events_.push_back(std::move(e));
  }

  // Step 1: every 0-triangle collects 1/3 through each of its three edges from
  // the first non-0-quadrilateral face in that direction.  The chain cannot
  // pass two 0-quadrilaterals without ending, and its faces are distinct.
  void gather_step1(const ChargeLedger&) {
    for (int t = 0; t < fs_.count(); ++t) {
      if (!is_kface(t, 3, 0)) continue;
      for (int d : fs_.faces[t].boundary) {
        auto chain = chain_through_quads(m_, fs_, d, 2);
        if (chain.overrun) {
          violation("step 1: chain from 0-triangle " + std::to_string(t) +
                    " passes more than two 0-quadrilaterals (an edge has five crossings)");
          continue;
        }
        if (chain.repeated)
          violation("step 1: chain from 0-triangle " + std::to_string(t) +
                    " repeats a face (self-crossing edge)");
        int donor = chain.faces.back();
        if (donor == t) {
          violation("step 1: chain from 0-triangle " + std::to_string(t) +
                    " returns to it");
          continue;
        }
        add(1, donor, t, false, ratio(1, 3), m_.segment_id(chain.crossed.back()), -1);
      }
    }
  }

  // Step 2: every face hands 1/3 to each original vertex it is incident to,
  // once per boundary corner.
  void gather_step2(const ChargeLedger&) {
    for (int f = 0; f < fs_.count(); ++f)
      for (int d : fs_.faces[f].boundary) {
        int v = m_.node_of(d);
        if (m_.kind(v) == NodeKind::original) add(2, f, v, true, ratio(1, 3), -1, -1);
      }
  }

  struct TriInfo {
    int t;
    TriangleNeighbors tn;
    bool neighbors_ok;
  };

  std::vector<TriInfo> one_triangles() {
    std::vector<TriInfo> out;
    for (int t = 0; t < fs_.count(); ++t) {
      if (!is_kface(t, 3, 1)) continue;
      TriInfo info{t, triangle_neighbors(m_, fs_, t), true};
      if (info.tn.g1 == info.tn.g2) {
        info.neighbors_ok = false;
        violation("neighbors of 1-triangle " + std::to_string(t) +
                  " coincide (minimum degree < 7 or cut vertex)");
      }
      out.push_back(info);
    }
    return out;
  }

  std::optional<WedgeInfo> safe_wedge(int t) {
    const FaceRecord& f = fs_.faces[t];
    auto pos = sole_original_corner(m_, f);
    int opposite = f.boundary[(*pos + 1) % 3];
    auto chain = chain_through_quads(m_, fs_, opposite, 3);
    if (chain.overrun) {
      violation("wedge of 1-triangle " + std::to_string(t) +
                " extends past four faces (an edge has five crossings)");
      return std::nullopt;
    }
    if (chain.repeated)
      violation("wedge of 1-triangle " + std::to_string(t) + " repeats a face");
    WedgeInfo w;
    w.triangle = t;
    w.quads.assign(chain.faces.begin(), chain.faces.end() - 1);
    w.wedge_neighbor = chain.faces.back();
    w.through_segment = m_.segment_id(chain.crossed.back());
    if (w.wedge_neighbor == t) {
      violation("wedge of 1-triangle " + std::to_string(t) + " closes on itself");
      return std::nullopt;
    }
    return w;
  }

  // Step 3: a 1-triangle whose two neighbors are both 1-triangles receives 1/3
  // from its wedge-neighbor through the edge shared with the wedge.
  void gather_step3(const ChargeLedger& prev) {
    for (const TriInfo& info : one_triangles()) {
      if (!info.neighbors_ok) continue;
      bool g1_tri = is_kface(info.tn.g1, 3, 1);
      bool g2_tri = is_kface(info.tn.g2, 3, 1);
      if (prev.face_charge[info.tn.g1] <= 0 && prev.face_charge[info.tn.g2] <= 0 &&
          !(g1_tri && g2_tri))
        violation("1-triangle " + std::to_string(info.t) +
                  " has nonpositive neighbors that are not both 1-triangles");
      if (!(g1_tri && g2_tri)) continue;
      auto w = safe_wedge(info.t);
      if (!w) continue;
      add(3, w->wedge_neighbor, info.t, false, ratio(1, 3), w->through_segment, -1);
    }
  }

  // Step 4: a still-negative 1-triangle receives 1/6 from a neighbor g with
  // positive charge when g is not a 1-quadrilateral, or is one with charge at
  // least 2/3, or is one with charge exactly 1/3 whose counterpart neighbor is
  // a 1-triangle or a 1-quadrilateral with charge exactly 1/3.
  void gather_step4(const ChargeLedger& prev) {
    const Rational third = ratio(1, 3), two_thirds = ratio(2, 3);
    for (const TriInfo& info : one_triangles()) {
      if (!(prev.face_charge[info.t] < 0)) continue;
      if (!info.neighbors_ok) continue;
      struct Side {
        int g, other, shared_dart;
      };
      for (const Side& s : {Side{info.tn.g1, info.tn.g2, info.tn.dart1},
                            Side{info.tn.g2, info.tn.g1, info.tn.dart2}}) {
        if (!(prev.face_charge[s.g] > 0)) continue;
        bool g_1quad = is_kface(s.g, 4, 1);
        bool other_1tri = is_kface(s.other, 3, 1);
        bool other_1quad = is_kface(s.other, 4, 1);
        bool give = !g_1quad || prev.face_charge[s.g] >= two_thirds ||
                    (prev.face_charge[s.g] == third &&
                     (other_1tri || (other_1quad && prev.face_charge[s.other] == third)));
        if (give)
          add(4, s.g, info.t, false, ratio(1, 6), m_.segment_id(s.shared_dart), -1);
      }
    }
  }

  // Step 5: a 1-triangle still negative after step 4 receives 1/6 from its
  // wedge-neighbor.
  void gather_step5(const ChargeLedger& prev) {
    for (const TriInfo& info : one_triangles()) {
      if (!(prev.face_charge[info.t] < 0)) continue;
      auto w = safe_wedge(info.t);
      if (!w) continue;
      add(5, w->wedge_neighbor, info.t, false, ratio(1, 6), w->through_segment, -1);
    }
  }

  // Step 6: every face with positive charge splits it evenly among its
  // vertex-neighbor 0-pentagons that are still negative.  B(f) is a set of
  // pentagons: a pentagon opposite f at two crossings still receives one share.
  void gather_step6(const ChargeLedger& prev) {
    for (int f = 0; f < fs_.count(); ++f) {
      if (!(prev.face_charge[f] > 0)) continue;
      std::map<int, int> needy;  // pentagon face -> least crossing node
      for (int d : fs_.faces[f].boundary) {
        int v = m_.node_of(d);
        if (m_.kind(v) != NodeKind::crossing) continue;
        int opp = fs_.face_of[m_.dart(v, (m_.slot_of(d) + 2) % 4)];
        if (!is_kface(opp, 5, 0) || !(prev.face_charge[opp] < 0)) continue;
        auto [it, fresh] = needy.emplace(opp, v);
        if (!fresh) it->second = std::min(it->second, v);
      }
      if (needy.empty()) continue;
      Rational share = prev.face_charge[f] / ratio(static_cast<long>(needy.size()));
      for (const auto& [pent, crossing] : needy)
        add(6, f, pent, false, share, -1, crossing);
    }
  }

  // A face contributes through each edge at most once across steps 1-5.
  void check_once_only(const ChargeLedger& led) {
    if (led.step < 1 || led.step > 5) return;
    donations_.clear();
    for (const ContributionEvent& e : led.events)
      if (e.conduit_segment >= 0 &&
          !donations_.insert({e.donor, e.conduit_segment}).second)
        violation("step " + std::to_string(led.step) + ": face " +
                  std::to_string(e.donor) + " contributes twice through segment " +
                  m_.segment_name(e.conduit_segment));
  }

  void post_step_assertions(const ChargeLedger& led) {
    if (led.step == 1) {
      for (int t = 0; t < fs_.count(); ++t)
        if (is_kface(t, 3, 0) && led.face_charge[t] != 0)
          violation("after step 1: 0-triangle " + std::to_string(t) +
                    " has charge " + pq_string(led.face_charge[t]));
    }
    if (led.step == 2 || led.step == 3) {
      for (int f = 0; f < fs_.count(); ++f)
        if (led.face_charge[f] < 0 && !is_kface(f, 3, 1) && !is_kface(f, 5, 0))
          violation("after step " + std::to_string(led.step) + ": face " +
                    std::to_string(f) + " (" + fs_.faces[f].label() +
                    ") is negative");
    }
    if (led.step == 5) {
      for (int f = 0; f < fs_.count(); ++f)
        if (led.face_charge[f] < 0 && !is_kface(f, 5, 0))
          violation("after step 5: face " + std::to_string(f) + " (" +
                    fs_.faces[f].label() + ") is negative");
    }
  }

  const PlanarMap& m_;
  const FaceSet& fs_;
  RunMode mode_;
  std::vector<std::string>* violations_;
  std::vector<ContributionEvent> events_;
  std::set<std::pair<int, int>> donations_;
};

}  // namespace detail

// Applies one discharging step.  All contributions are computed from the input
// ledger and committed together, so applying a step twice from the same ledger
// yields identical events.
inline ChargeLedger apply_step(const PlanarMap& m, const FaceSet& fs,
                               const ChargeLedger& prev, int step,
                               RunMode mode = RunMode::strict,
                               std::vector<std::string>* violations = nullptr) {
  return detail::StepEngine(m, fs, mode, violations).run(prev, step);
}

// Runs steps 0..6, asserting exact conservation of the total charge 4n - 8
// after every step, and certifies m <= 6n - 12 when every final face charge is
// nonnegative and every vertex holds deg/3.
inline DischargeReport run_discharging(const PlanarMap& m,
                                       RunMode mode = RunMode::strict) {
  FaceSet fs = trace_faces(m);
  EdgeSet es = recover_edges(m);

  DischargeReport rep;
  rep.assumption_flags = validate(m).assumption_flags;

  long n = m.original_count();
  Rational expected_total = ratio(4 * n - 8);

  rep.ledgers.push_back(initial_charges(m, fs));
  if (total_charge(rep.ledgers[0]) != expected_total)
    throw std::logic_error("initial charge total differs from 4n-8");

  // A face contributes through each edge at most once across steps 1-5; the
  // per-step engine checks within a step, this map checks across steps.
  std::map<std::pair<int, int>, int> donated;
  for (int step = 1; step <= 6; ++step) {
    rep.ledgers.push_back(apply_step(m, fs, rep.ledgers.back(), step, mode,
                                     &rep.assertion_violations));
    if (total_charge(rep.ledgers.back()) != expected_total)
      throw std::logic_error("charge not conserved after step " +
                             std::to_string(step));
    for (const ContributionEvent& e : rep.ledgers.back().events) {
      if (e.step > 5 || e.conduit_segment < 0) continue;
      auto [it, fresh] = donated.emplace(std::pair{e.donor, e.conduit_segment},
                                         e.step);
      if (!fresh && it->second != e.step) {
        std::string what = "face " + std::to_string(e.donor) +
                           " contributes through segment " +
                           m.segment_name(e.conduit_segment) + " in steps " +
                           std::to_string(it->second) + " and " +
                           std::to_string(e.step);
        rep.assertion_violations.push_back(what);
        if (mode == RunMode::strict)
          throw DischargeError("assertion violated: " + what);
      }
    }
  }

  const ChargeLedger& last = rep.ledgers.back();
  rep.final_nonnegative = true;
  for (const Rational& q : last.face_charge)
    if (q < 0) rep.final_nonnegative = false;
  rep.vertex_charges_ok = true;
  for (size_t i = 0; i < m.originals().size(); ++i)
    if (last.vertex_charge[i] != ratio(m.degree(m.originals()[i]), 3))
      rep.vertex_charges_ok = false;

  rep.certificate.n = n;
  rep.certificate.m = es.count();
  rep.certificate.bound = 6 * n - 12;
  rep.certificate.holds = rep.final_nonnegative && rep.vertex_charges_ok;
  return rep;
}

}  // namespace crossmap
