#ifndef BRAIDPOLY_DIAGRAM_HPP
#define BRAIDPOLY_DIAGRAM_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace braidpoly {

using CrossingId = int;
using ArcId = int;

// Which strand of a crossing a traversal is on.
enum class Pass { under, over };

// One signed crossing. The four fields name the arcs attached to its
// ports: the under-strand runs in_under -> out_under, the over-strand
// in_over -> out_over.
struct Crossing {
  int sign = +1;
  ArcId in_under = -1;
  ArcId in_over = -1;
  ArcId out_under = -1;
  ArcId out_over = -1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Combinatorial oriented link diagram: signed crossings whose ports are
// matched by arcs (each arc id appears exactly once as an in-port and
// once as an out-port), plus a count of crossingless circles.
class Diagram {
 public:
  Diagram() = default;

  static Diagram unlink(int circles);

  const std::map<CrossingId, Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(CrossingId id) const;
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int free_loops() const { return free_loops_; }
  bool empty() const { return crossings_.empty() && free_loops_ == 0; }

  void put_crossing(CrossingId id, const Crossing& c);
  void erase_crossing(CrossingId id);
  void set_free_loops(int n);

  CrossingId next_crossing_id() const;
  ArcId next_arc_id() const;

  // Checks the port matching invariant; throws std::invalid_argument.
  void validate() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::map<CrossingId, Crossing> crossings_;
  int free_loops_ = 0;
};

// Reference to a colorable strand: either an arc or one of the
// indistinguishable free loops (by index < free_loops()).
struct ArcRef {
  static ArcRef arc(ArcId id) { return {false, id}; }
  static ArcRef loop(int index) { return {true, index}; }

  bool is_loop = false;
  int value = 0;

  friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

int writhe(const Diagram& d);
int components(const Diagram& d);

// The diagram with a subset of crossings replaced by their oriented
// smoothing. Computes strand cycles of the result without materializing
// it: cycles are indexed 0..strand_cycles()-1 in order of their smallest
// arc id, followed by the original free loops. materialize()/keep()
// rebuild an actual Diagram, healing crossings that lose a strand.
class SmoothedView {
 public:
  SmoothedView(const Diagram& d, const std::set<CrossingId>& smoothed);

  int strand_cycles() const { return static_cast<int>(cycle_starts_.size()); }
  int component_count() const { return strand_cycles() + d_->free_loops(); }
  int component_of_arc(ArcId a) const { return comp_of_arc_.at(a); }

  // For a smoothed crossing: components of its two local smoothed strands,
  // (in_over -> out_under side, in_under -> out_over side).
  std::pair<int, int> smoothed_strands(CrossingId c) const;

  // Crossing passes in traversal order (per-cycle basepoint = smallest
  // arc id, cycles in increasing basepoint order). Only unsmoothed
  // crossings appear.
  const std::vector<std::pair<CrossingId, Pass>>& pass_sequence() const {
    return passes_;
  }

  // Restriction to the components with keep[comp] == true. Crossings kept
  // only when both passing strands survive; a strand passing a dropped
  // crossing is healed through it. Kept cycles with no surviving crossing
  // become free loops.
  Diagram keep(const std::vector<bool>& keep_component) const;
  Diagram whole() const;

 private:
  struct ArcEnd {
    CrossingId crossing = -1;
    Pass pass = Pass::under;
  };

  ArcId successor(ArcId a, bool& was_pass, CrossingId& at, Pass& role) const;

  const Diagram* d_;
  std::set<CrossingId> smoothed_;
  std::map<ArcId, ArcEnd> head_;  // crossing port each arc runs into
  std::map<ArcId, int> comp_of_arc_;
  std::vector<ArcId> cycle_starts_;
  std::vector<std::pair<CrossingId, Pass>> passes_;
};

Diagram smooth(const Diagram& d, CrossingId c);
Diagram switch_crossing(const Diagram& d, CrossingId c);

struct ConwayTriple {
  Diagram d_plus;
  Diagram d_minus;
  Diagram d_zero;
};

ConwayTriple conway_triple(const Diagram& d, CrossingId c);

// Keep only the named components (indices as in SmoothedView with nothing
// smoothed: strand cycles by smallest arc id, then free loops).
Diagram restrict_to(const Diagram& d, const std::set<int>& keep_components);

// Reidemeister-move insertions, used as test surgeries. Both preserve the
// represented link; insert_kink changes the writhe by its sign.
Diagram insert_kink(const Diagram& d, ArcRef where, int sign);

enum class R2Variant { a, b, c, d };  // a,b: parallel strands; c,d: antiparallel

Diagram insert_r2(const Diagram& d, ArcRef strand_x, ArcRef strand_y,
                  R2Variant variant);

}  // namespace braidpoly

#endif
