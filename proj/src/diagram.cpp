#include "braidpoly/diagram.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace braidpoly {

Diagram Diagram::unlink(int circles) {
  if (circles < 0) throw std::invalid_argument("negative circle count");
  Diagram d;
  d.free_loops_ = circles;
  return d;
}

const Crossing& Diagram::crossing(CrossingId id) const {
  auto it = crossings_.find(id);
  if (it == crossings_.end()) {
    throw std::out_of_range("unknown crossing id " + std::to_string(id));
  }
  return it->second;
}

void Diagram::put_crossing(CrossingId id, const Crossing& c) {
  crossings_[id] = c;
}

void Diagram::erase_crossing(CrossingId id) {
  crossings_.erase(id);
}

void Diagram::set_free_loops(int n) {
  if (n < 0) throw std::invalid_argument("negative free loop count");
  free_loops_ = n;
}

CrossingId Diagram::next_crossing_id() const {
  return crossings_.empty() ? 0 : crossings_.rbegin()->first + 1;
}

ArcId Diagram::next_arc_id() const {
  ArcId next = 0;
  for (const auto& [id, c] : crossings_) {
    next = std::max({next, c.in_under + 1, c.in_over + 1, c.out_under + 1,
                     c.out_over + 1});
  }
  return next;
}

void Diagram::validate() const {
  std::set<ArcId> ins, outs;
  for (const auto& [id, c] : crossings_) {
    if (c.sign != 1 && c.sign != -1) {
      throw std::invalid_argument("crossing " + std::to_string(id) +
                                  " has sign outside {+1,-1}");
    }
    for (ArcId a : {c.in_under, c.in_over}) {
      if (!ins.insert(a).second) {
        throw std::invalid_argument("arc " + std::to_string(a) +
                                    " used as in-port twice");
      }
    }
    for (ArcId a : {c.out_under, c.out_over}) {
      if (!outs.insert(a).second) {
        throw std::invalid_argument("arc " + std::to_string(a) +
                                    " used as out-port twice");
      }
    }
  }
  if (ins != outs) {
    throw std::invalid_argument("arcs do not match out-ports to in-ports");
  }
}

int writhe(const Diagram& d) {
  int w = 0;
  for (const auto& [id, c] : d.crossings()) w += c.sign;
  return w;
}

int components(const Diagram& d) {
  return SmoothedView(d, {}).component_count();
}

SmoothedView::SmoothedView(const Diagram& d, const std::set<CrossingId>& smoothed)
    : d_(&d), smoothed_(smoothed) {
  for (CrossingId c : smoothed_) d.crossing(c);  // existence check
  for (const auto& [id, c] : d.crossings()) {
    head_[c.in_under] = {id, Pass::under};
    head_[c.in_over] = {id, Pass::over};
  }
  int comp = 0;
  for (const auto& [start, end] : head_) {
    if (comp_of_arc_.count(start)) continue;
    cycle_starts_.push_back(start);
    ArcId a = start;
    do {
      comp_of_arc_[a] = comp;
      bool was_pass = false;
      CrossingId at = -1;
      Pass role = Pass::under;
      a = successor(a, was_pass, at, role);
      if (was_pass) passes_.emplace_back(at, role);
    } while (a != start);
    ++comp;
  }
}

ArcId SmoothedView::successor(ArcId a, bool& was_pass, CrossingId& at,
                              Pass& role) const {
  const ArcEnd& end = head_.at(a);
  const Crossing& c = d_->crossing(end.crossing);
  if (smoothed_.count(end.crossing)) {
    was_pass = false;
    // Oriented smoothing: in_over joins out_under, in_under joins out_over.
    return end.pass == Pass::over ? c.out_under : c.out_over;
  }
  was_pass = true;
  at = end.crossing;
  role = end.pass;
  return end.pass == Pass::under ? c.out_under : c.out_over;
}

std::pair<int, int> SmoothedView::smoothed_strands(CrossingId c) const {
  if (!smoothed_.count(c)) {
    throw std::out_of_range("crossing " + std::to_string(c) +
                            " is not smoothed in this view");
  }
  const Crossing& cr = d_->crossing(c);
  return {comp_of_arc_.at(cr.in_over), comp_of_arc_.at(cr.in_under)};
}

Diagram SmoothedView::keep(const std::vector<bool>& keep_component) const {
  if (static_cast<int>(keep_component.size()) != component_count()) {
    throw std::invalid_argument("keep mask size does not match components");
  }
  // A crossing survives when unsmoothed and both its strands are kept.
  std::set<CrossingId> survives;
  for (const auto& [id, c] : d_->crossings()) {
    if (smoothed_.count(id)) continue;
    if (keep_component[comp_of_arc_.at(c.in_under)] &&
        keep_component[comp_of_arc_.at(c.in_over)]) {
      survives.insert(id);
    }
  }

  Diagram out;
  int loops = 0;
  for (int i = 0; i < d_->free_loops(); ++i) {
    if (keep_component[strand_cycles() + i]) ++loops;
  }

  std::map<CrossingId, Crossing> built;
  for (int comp = 0; comp < strand_cycles(); ++comp) {
    if (!keep_component[comp]) continue;
    ArcId start = cycle_starts_[comp];
    // Walk the cycle collecting surviving passes and the arc entering each.
    struct Step {
      ArcId arc;
      CrossingId crossing;
      Pass role;
    };
    std::vector<Step> cuts;
    ArcId a = start;
    do {
      const ArcEnd& end = head_.at(a);
      if (survives.count(end.crossing)) cuts.push_back({a, end.crossing, end.pass});
      bool was_pass = false;
      CrossingId at = -1;
      Pass role = Pass::under;
      a = successor(a, was_pass, at, role);
    } while (a != start);

    if (cuts.empty()) {
      ++loops;
      continue;
    }
    // The chain of arcs between consecutive surviving passes collapses to
    // one arc carrying the id of its first member (the arc leaving the
    // earlier pass). cuts[j].arc is the arc *entering* pass j, so it is the
    // out-arc of pass j-1 and the in-arc of pass j.
    for (std::size_t j = 0; j < cuts.size(); ++j) {
      const Step& cur = cuts[j];
      const Step& next = cuts[(j + 1) % cuts.size()];
      Crossing& nc = built[cur.crossing];
      nc.sign = d_->crossing(cur.crossing).sign;
      if (cur.role == Pass::under) {
        nc.in_under = cur.arc;
        nc.out_under = next.arc;
      } else {
        nc.in_over = cur.arc;
        nc.out_over = next.arc;
      }
    }
  }
  for (const auto& [id, c] : built) out.put_crossing(id, c);
  out.set_free_loops(loops);
  return out;
}

Diagram SmoothedView::whole() const {
  return keep(std::vector<bool>(component_count(), true));
}

Diagram smooth(const Diagram& d, CrossingId c) {
  d.crossing(c);
  return SmoothedView(d, {c}).whole();
}

Diagram switch_crossing(const Diagram& d, CrossingId c) {
  Crossing cr = d.crossing(c);
  std::swap(cr.in_under, cr.in_over);
  std::swap(cr.out_under, cr.out_over);
  cr.sign = -cr.sign;
  Diagram out = d;
  out.put_crossing(c, cr);
  return out;
}

ConwayTriple conway_triple(const Diagram& d, CrossingId c) {
  ConwayTriple t;
  if (d.crossing(c).sign > 0) {
    t.d_plus = d;
    t.d_minus = switch_crossing(d, c);
  } else {
    t.d_plus = switch_crossing(d, c);
    t.d_minus = d;
  }
  t.d_zero = smooth(d, c);
  return t;
}

Diagram restrict_to(const Diagram& d, const std::set<int>& keep_components) {
  SmoothedView view(d, {});
  std::vector<bool> mask(view.component_count(), false);
  for (int id : keep_components) {
    if (id < 0 || id >= view.component_count()) {
      throw std::out_of_range("component id " + std::to_string(id) +
                              " out of range");
    }
    mask[id] = true;
  }
  return view.keep(mask);
}

namespace {

// Port of an arc-ref's consumer, for re-pointing split arcs.
struct InPortRef {
  CrossingId crossing;
  Pass role;
};

InPortRef find_head(const Diagram& d, ArcId a) {
  for (const auto& [id, c] : d.crossings()) {
    if (c.in_under == a) return {id, Pass::under};
    if (c.in_over == a) return {id, Pass::over};
  }
  throw std::out_of_range("unknown arc id " + std::to_string(a));
}

void check_loop(const Diagram& d, int index) {
  if (index < 0 || index >= d.free_loops()) {
    throw std::out_of_range("free loop index " + std::to_string(index) +
                            " out of range");
  }
}

ArcId& in_field(Crossing& c, Pass role) {
  return role == Pass::under ? c.in_under : c.in_over;
}

ArcId& out_field(Crossing& c, Pass role) {
  return role == Pass::under ? c.out_under : c.out_over;
}

// Threads one strand through the listed passes of new crossings, splitting
// an existing arc or consuming a free loop.
void route_strand(Diagram& d, std::map<CrossingId, Crossing>& fresh,
                  ArcRef strand,
                  const std::vector<std::pair<CrossingId, Pass>>& passes,
                  ArcId& next_arc) {
  std::vector<ArcId> between;  // arc leaving pass j (last one closes/exits)
  for (std::size_t j = 0; j < passes.size(); ++j) between.push_back(next_arc++);

  ArcId first_in;
  if (strand.is_loop) {
    check_loop(d, strand.value);
    d.set_free_loops(d.free_loops() - 1);
    first_in = between.back();  // closing arc of the circle
  } else {
    InPortRef old_head = find_head(d, strand.value);
    Crossing consumer = d.crossing(old_head.crossing);
    in_field(consumer, old_head.role) = between.back();
    d.put_crossing(old_head.crossing, consumer);
    first_in = strand.value;
  }

  ArcId incoming = first_in;
  for (std::size_t j = 0; j < passes.size(); ++j) {
    Crossing& c = fresh[passes[j].first];
    in_field(c, passes[j].second) = incoming;
    out_field(c, passes[j].second) = between[j];
    incoming = between[j];
  }
}

}  // namespace

Diagram insert_kink(const Diagram& d, ArcRef where, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("kink sign must be +1 or -1");
  Diagram out = d;
  CrossingId n = out.next_crossing_id();
  ArcId next_arc = out.next_arc_id();
  std::map<CrossingId, Crossing> fresh;
  fresh[n].sign = sign;
  // The strand passes its own crossing twice: under first, then over.
  route_strand(out, fresh, where, {{n, Pass::under}, {n, Pass::over}}, next_arc);
  for (const auto& [id, c] : fresh) out.put_crossing(id, c);
  return out;
}

Diagram insert_r2(const Diagram& d, ArcRef strand_x, ArcRef strand_y,
                  R2Variant variant) {
  bool parallel = variant == R2Variant::a || variant == R2Variant::b;
  bool x_over = variant == R2Variant::a || variant == R2Variant::c;
  if (strand_x == strand_y && parallel) {
    throw std::invalid_argument("parallel R2 requires two distinct strands");
  }

  Diagram out = d;
  CrossingId n1 = out.next_crossing_id();
  CrossingId n2 = n1 + 1;
  ArcId next_arc = out.next_arc_id();
  std::map<CrossingId, Crossing> fresh;
  fresh[n1].sign = +1;
  fresh[n2].sign = -1;

  Pass rx = x_over ? Pass::over : Pass::under;
  Pass ry = x_over ? Pass::under : Pass::over;

  if (strand_x == strand_y) {
    // Antiparallel self-poke: the strand runs over both new crossings and
    // doubles back under them.
    route_strand(out, fresh, strand_x,
                 {{n1, rx}, {n2, rx}, {n2, ry}, {n1, ry}}, next_arc);
  } else {
    route_strand(out, fresh, strand_x, {{n1, rx}, {n2, rx}}, next_arc);
    if (parallel) {
      route_strand(out, fresh, strand_y, {{n1, ry}, {n2, ry}}, next_arc);
    } else {
      route_strand(out, fresh, strand_y, {{n2, ry}, {n1, ry}}, next_arc);
    }
  }
  for (const auto& [id, c] : fresh) out.put_crossing(id, c);
  return out;
}

}  // namespace braidpoly
