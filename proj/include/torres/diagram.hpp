#pragma once

// Link diagrams.
//
// PD convention: a crossing X[a,b,c,d] lists the four edge labels
// counterclockwise starting from the incoming under-strand, so the
// under-strand runs a -> c. The crossing is positive when the over-strand
// runs d -> b and negative when it runs b -> d. Every crossing stores
// sign in {+1,-1} under this convention; linking numbers, writhes and
// longitude words all read the same stored signs.
//
// A LinkDiagram works at the level of Wirtinger arcs (maximal over-passing
// strands). Arcs are numbered by the smallest PD edge label they contain,
// components by the smallest label on them. Crossingless circles are
// components with a single arc that appears in no crossing.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torres/error.hpp"
#include "torres/laurent.hpp"

namespace torres {

struct PDCode {
  std::vector<std::array<std::int64_t, 4>> crossings;
  /// Labels of crossingless circles (`O[k]` tokens).
  std::vector<std::int64_t> circles;

  friend bool operator==(const PDCode&, const PDCode&) = default;
};

inline std::string to_string(const PDCode& pd) {
  std::string out;
  for (const auto& x : pd.crossings) {
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) +
           "," + std::to_string(x[3]) + "]";
  }
  for (auto c : pd.circles) {
    if (!out.empty()) out += ' ';
    out += "O[" + std::to_string(c) + "]";
  }
  return out;
}

struct Crossing {
  std::size_t over;
  std::size_t in;   // incoming under-arc
  std::size_t out;  // outgoing under-arc
  int sign;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class LinkDiagram {
 public:
  LinkDiagram(std::vector<std::size_t> arc_component, std::vector<Crossing> crossings,
              std::size_t components)
      : arc_component_(std::move(arc_component)), crossings_(std::move(crossings)),
        components_(components) {
    build();
  }

  std::size_t arc_count() const { return arc_component_.size(); }
  std::size_t component_count() const { return components_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t component_of(std::size_t arc) const { return arc_component_.at(arc); }
  const std::vector<std::size_t>& arc_components() const { return arc_component_; }

  /// Crossing at which the arc ends as the incoming under-strand, if any.
  std::optional<std::size_t> end_crossing(std::size_t arc) const { return end_crossing_.at(arc); }

  /// Arcs of a component in traversal order, starting from `start` (default: lowest-numbered).
  std::vector<std::size_t> arcs_of(std::size_t comp, std::optional<std::size_t> start = {}) const {
    if (comp >= components_) throw InputError("component index out of range");
    std::size_t a = start.value_or(first_arc_[comp]);
    if (arc_component_.at(a) != comp) throw InputError("start arc is not on the component");
    std::vector<std::size_t> out{a};
    while (auto c = end_crossing_[a]) {
      a = crossings_[*c].out;
      if (a == out.front()) break;
      out.push_back(a);
    }
    return out;
  }

  std::size_t lowest_arc(std::size_t comp) const { return first_arc_.at(comp); }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.arc_component_ == b.arc_component_ && a.crossings_ == b.crossings_ &&
           a.components_ == b.components_;
  }

 private:
  void build() {
    if (components_ == 0) throw InputError("a link diagram needs at least one component");
    const std::size_t n = arc_component_.size();
    end_crossing_.assign(n, std::nullopt);
    std::vector<int> starts(n, 0);
    first_arc_.assign(components_, n);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t c = arc_component_[a];
      if (c >= components_) throw InputError("arc component index out of range");
      if (first_arc_[c] == n) first_arc_[c] = a;
    }
    for (std::size_t c = 0; c < components_; ++c) {
      if (first_arc_[c] == n) throw InputError("component " + std::to_string(c + 1) + " has no arcs");
    }
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
      const auto& x = crossings_[i];
      if (x.over >= n || x.in >= n || x.out >= n) throw InputError("crossing refers to a missing arc");
      if (x.sign != 1 && x.sign != -1) throw InputError("crossing sign must be +1 or -1");
      if (arc_component_[x.in] != arc_component_[x.out]) {
        throw InputError("under-arcs of a crossing lie on different components");
      }
      if (end_crossing_[x.in]) throw InputError("arc ends at two crossings");
      end_crossing_[x.in] = i;
      if (++starts[x.out] > 1) throw InputError("arc starts at two crossings");
    }
    // Each component is either one arc without undercrossings or a single cycle.
    for (std::size_t c = 0; c < components_; ++c) {
      std::size_t count = 0;
      for (std::size_t a = 0; a < n; ++a) count += arc_component_[a] == c;
      std::size_t a0 = first_arc_[c];
      if (!end_crossing_[a0]) {
        if (count != 1 || starts[a0] != 0) throw InputError("broken arc chain on a component");
        continue;
      }
      std::size_t len = 0, a = a0;
      do {
        if (!end_crossing_[a] || starts[a] != 1) throw InputError("broken arc chain on a component");
        a = crossings_[*end_crossing_[a]].out;
        ++len;
      } while (a != a0 && len <= count);
      if (a != a0 || len != count) throw InputError("arcs of a component do not form one cycle");
    }
  }

  std::vector<std::size_t> arc_component_;
  std::vector<Crossing> crossings_;
  std::size_t components_;
  std::vector<std::optional<std::size_t>> end_crossing_;
  std::vector<std::size_t> first_arc_;
};

namespace detail {

/// Orientation analysis of a PD code: resolves which occurrence of each
/// edge is its head, then traces components and Wirtinger arcs.
class PDAnalysis {
 public:
  explicit PDAnalysis(const PDCode& pd) : pd_(pd) {
    collect();
    orient();
    trace();
  }

  LinkDiagram diagram() const { return build_diagram(); }

 private:
  struct Occ {
    std::size_t crossing;
    int slot;
  };

  void collect() {
    std::map<std::int64_t, std::vector<Occ>> seen;
    for (std::size_t c = 0; c < pd_.crossings.size(); ++c) {
      for (int s = 0; s < 4; ++s) seen[pd_.crossings[c][s]].push_back({c, s});
    }
    for (auto& [label, occs] : seen) {
      if (occs.size() != 2) {
        throw InputError("edge label " + std::to_string(label) + " occurs " +
                         std::to_string(occs.size()) + " times (expected 2)");
      }
      index_[label] = labels_.size();
      labels_.push_back(label);
      occ_.push_back({occs[0], occs[1]});
    }
    for (auto c : pd_.circles) {
      if (seen.count(c)) throw InputError("circle label " + std::to_string(c) + " is also an edge label");
    }
    std::set<std::int64_t> circles(pd_.circles.begin(), pd_.circles.end());
    if (circles.size() != pd_.circles.size()) throw InputError("duplicate circle label");
  }

  std::size_t edge_at(std::size_t crossing, int slot) const {
    return index_.at(pd_.crossings[crossing][slot]);
  }

  int occ_index(std::size_t e, std::size_t crossing, int slot) const {
    return (occ_[e][0].crossing == crossing && occ_[e][0].slot == slot) ? 0 : 1;
  }

  /// Records that occurrence k of edge e is (is_head ? head : tail).
  bool set(std::size_t e, int k, bool is_head) {
    int h = is_head ? k : 1 - k;
    if (head_[e] == -1) {
      head_[e] = h;
      return true;
    }
    if (head_[e] != h) {
      throw InputError("orientation inconsistency at edge " + std::to_string(labels_[e]));
    }
    return false;
  }

  void propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < pd_.crossings.size(); ++c) {
        std::size_t j = edge_at(c, 1), l = edge_at(c, 3);
        int kj = occ_index(j, c, 1), kl = occ_index(l, c, 3);
        if (head_[j] != -1) changed |= set(l, kl, head_[j] != kj);
        if (head_[l] != -1) changed |= set(j, kj, head_[l] != kl);
      }
    }
  }

  /// Edge following e if occurrence k is its head.
  std::size_t successor(std::size_t e, int k) const {
    const Occ& o = occ_[e][k];
    static constexpr int partner[4] = {2, 3, 0, 1};
    return edge_at(o.crossing, partner[o.slot]);
  }

  void orient() {
    head_.assign(labels_.size(), -1);
    for (std::size_t e = 0; e < labels_.size(); ++e) {
      for (int k = 0; k < 2; ++k) {
        if (occ_[e][k].slot == 0) set(e, k, true);
        if (occ_[e][k].slot == 2) set(e, k, false);
      }
    }
    propagate();
    // Components that never pass under: orient along increasing labels.
    for (std::size_t e = 0; e < labels_.size(); ++e) {
      if (head_[e] != -1) continue;
      int k = 0;
      if (labels_[successor(e, 1)] == labels_[e] + 1) k = 1;
      head_[e] = k;
      propagate();
    }
    for (std::size_t e = 0; e < labels_.size(); ++e) {
      if (occ_[e][head_[e]].slot == 2) {
        throw InputError("orientation inconsistency at edge " + std::to_string(labels_[e]));
      }
    }
  }

  void trace() {
    const std::size_t m = labels_.size();
    next_.resize(m);
    std::vector<int> preds(m, 0);
    for (std::size_t e = 0; e < m; ++e) {
      next_[e] = successor(e, head_[e]);
      if (++preds[next_[e]] > 1) {
        throw InputError("edge " + std::to_string(labels_[next_[e]]) + " has two predecessors");
      }
    }
    // Components: cycles of next_, checked for consecutive labels.
    comp_of_edge_.assign(m, SIZE_MAX);
    std::vector<std::pair<std::int64_t, std::vector<std::size_t>>> cycles;
    for (std::size_t e = 0; e < m; ++e) {  // labels_ is sorted, so e is the cycle minimum
      if (comp_of_edge_[e] != SIZE_MAX) continue;
      std::vector<std::size_t> cyc;
      std::size_t x = e;
      do {
        if (comp_of_edge_[x] != SIZE_MAX) throw InputError("non-realizable successor structure");
        comp_of_edge_[x] = cycles.size();
        if (labels_[x] != labels_[e] + static_cast<std::int64_t>(cyc.size())) {
          throw InputError("labels along a component are not consecutive at edge " +
                           std::to_string(labels_[x]));
        }
        cyc.push_back(x);
        x = next_[x];
      } while (x != e);
      cycles.push_back({labels_[e], std::move(cyc)});
    }
    cycle_edges_ = cycles;
  }

  LinkDiagram build_diagram() const {
    // Component keys: min label of each edge cycle, or the circle label.
    std::vector<std::int64_t> keys;
    for (const auto& c : cycle_edges_) keys.push_back(c.first);
    for (auto c : pd_.circles) keys.push_back(c);
    std::vector<std::size_t> comp_order(keys.size());
    std::iota(comp_order.begin(), comp_order.end(), 0);
    std::sort(comp_order.begin(), comp_order.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<std::size_t> comp_rank(keys.size());
    for (std::size_t r = 0; r < comp_order.size(); ++r) comp_rank[comp_order[r]] = r;
    const std::size_t components = keys.empty() ? 1 : keys.size();

    // Arcs: (min label, component, member edges).
    struct Arc {
      std::int64_t key;
      std::size_t comp;
      std::vector<std::size_t> edges;
    };
    std::vector<Arc> arcs;
    for (std::size_t ci = 0; ci < cycle_edges_.size(); ++ci) {
      const auto& cyc = cycle_edges_[ci].second;
      // An arc begins at an edge whose tail is an under-out slot.
      std::vector<std::size_t> begins;
      for (std::size_t e : cyc) {
        if (occ_[e][1 - head_[e]].slot == 2) begins.push_back(e);
      }
      if (begins.empty()) {
        arcs.push_back({cycle_edges_[ci].first, comp_rank[ci], cyc});
        continue;
      }
      for (std::size_t b : begins) {
        Arc arc{labels_[b], comp_rank[ci], {}};
        std::size_t e = b;
        while (true) {
          arc.edges.push_back(e);
          arc.key = std::min(arc.key, labels_[e]);
          if (occ_[e][head_[e]].slot == 0) break;
          e = next_[e];
        }
        arcs.push_back(std::move(arc));
      }
    }
    for (std::size_t i = 0; i < pd_.circles.size(); ++i) {
      arcs.push_back({pd_.circles[i], comp_rank[cycle_edges_.size() + i], {}});
    }
    if (keys.empty()) arcs.push_back({0, 0, {}});  // empty code: the unknot
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.key < b.key; });

    std::vector<std::size_t> arc_of_edge(labels_.size());
    std::vector<std::size_t> arc_component(arcs.size());
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      arc_component[a] = arcs[a].comp;
      for (std::size_t e : arcs[a].edges) arc_of_edge[e] = a;
    }
    std::vector<Crossing> crossings;
    for (std::size_t c = 0; c < pd_.crossings.size(); ++c) {
      std::size_t l = edge_at(c, 3);
      int sign = head_[l] == occ_index(l, c, 3) ? 1 : -1;
      crossings.push_back({arc_of_edge[edge_at(c, 1)], arc_of_edge[edge_at(c, 0)],
                           arc_of_edge[edge_at(c, 2)], sign});
    }
    return LinkDiagram(std::move(arc_component), std::move(crossings), components);
  }

  const PDCode& pd_;
  std::vector<std::int64_t> labels_;
  std::map<std::int64_t, std::size_t> index_;
  std::vector<std::array<Occ, 2>> occ_;
  std::vector<int> head_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> comp_of_edge_;
  std::vector<std::pair<std::int64_t, std::vector<std::size_t>>> cycle_edges_;
};

}  // namespace detail

/// Traces components, resolves strand orientations and crossing signs.
inline LinkDiagram orient_and_sign(const PDCode& pd) { return detail::PDAnalysis(pd).diagram(); }

/// Grammar (separators are whitespace and commas, optionally wrapped in PD[...]):
///   code   := token*
///   token  := 'X[' label ',' label ',' label ',' label ']' | 'O[' label ']'
///   label  := positive decimal integer
/// An empty code denotes the unknot.
inline PDCode parse_pd(std::string_view text) {
  PDCode pd;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) {
      throw ParseError(std::string("expected '") + c + "'", i);
    }
    ++i;
  };
  auto label = [&]() -> std::int64_t {
    skip();
    std::size_t start = i;
    std::int64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000000) throw ParseError("label too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected a label", start);
    if (v == 0) throw ParseError("labels must be positive", start);
    return v;
  };
  skip();
  bool wrapped = false;
  if (text.substr(i, 3) == "PD[") {
    wrapped = true;
    i += 3;
  }
  while (true) {
    skip();
    if (i >= text.size()) break;
    if (wrapped && text[i] == ']') {
      ++i;
      wrapped = false;
      skip();
      if (i < text.size()) throw ParseError("trailing input after PD[...]", i);
      break;
    }
    char kind = text[i];
    if (kind == 'X') {
      ++i;
      expect('[');
      std::array<std::int64_t, 4> x{};
      for (int k = 0; k < 4; ++k) x[k] = label();
      expect(']');
      pd.crossings.push_back(x);
    } else if (kind == 'O') {
      ++i;
      expect('[');
      pd.circles.push_back(label());
      expect(']');
    } else {
      throw ParseError(std::string("unexpected character '") + kind + "'", i);
    }
  }
  if (wrapped) throw ParseError("unterminated PD[", text.size());
  detail::PDAnalysis check(pd);  // multiplicity, orientation, successor structure
  return pd;
}

/// PD code of the closure of a braid word. Letters are signed 1-based
/// generator indices (k means sigma_k, -k its inverse). Edges are labelled
/// consecutively along each component; components are ordered by their
/// smallest strand position at the bottom of the braid.
inline PDCode braid_to_pd(const std::vector<int>& word, int strands) {
  if (strands < 1) throw InputError("braid needs at least one strand");
  for (int g : word) {
    if (g == 0 || std::abs(g) >= strands) {
      throw InputError("braid generator " + std::to_string(g) + " out of range for " +
                       std::to_string(strands) + " strands");
    }
  }
  // Temporary edge ids; strands run upward, positions left to right.
  std::vector<std::size_t> pos(strands);
  std::iota(pos.begin(), pos.end(), 0);
  std::size_t next_id = strands;
  std::vector<std::array<std::size_t, 4>> xs;
  for (int g : word) {
    std::size_t i = std::abs(g) - 1;
    std::size_t left = pos[i], right = pos[i + 1];
    std::size_t new_left = next_id++, new_right = next_id++;
    // The strand entering at the left leaves at the right, and vice versa.
    if (g > 0) {
      // Left strand passes over: under runs SE -> NW, over runs SW -> NE.
      xs.push_back({right, new_right, new_left, left});
    } else {
      // Left strand passes under: under runs SW -> NE, over runs SE -> NW.
      xs.push_back({left, right, new_right, new_left});
    }
    pos[i] = new_left;
    pos[i + 1] = new_right;
  }
  // Close up: the top edge at position p is the bottom edge p.
  std::vector<std::size_t> alias(next_id);
  std::iota(alias.begin(), alias.end(), 0);
  for (int p = 0; p < strands; ++p) alias[pos[p]] = p;
  for (auto& x : xs) {
    for (auto& e : x) e = alias[e];
  }
  // Successor along the strand: under in (slot 0) -> slot 2; over in -> over out.
  std::vector<std::size_t> succ(next_id, SIZE_MAX);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const auto& x = xs[k];
    succ[x[0]] = x[2];
    // The over-strand enters at the bottom: slot 3 when positive, slot 1 when negative.
    if (word[k] > 0) {
      succ[x[3]] = x[1];
    } else {
      succ[x[1]] = x[3];
    }
  }
  std::vector<std::int64_t> label(next_id, 0);
  std::vector<bool> done(strands, false);
  PDCode pd;
  std::int64_t counter = 1;
  for (int p = 0; p < strands; ++p) {
    if (done[p]) continue;
    std::size_t e = p;
    if (succ[e] == SIZE_MAX) {  // strand untouched by any crossing
      done[p] = true;
      pd.circles.push_back(counter++);
      continue;
    }
    do {
      if (e < static_cast<std::size_t>(strands)) done[e] = true;
      label[e] = counter++;
      e = succ[e];
    } while (e != static_cast<std::size_t>(p));
  }
  for (const auto& x : xs) {
    pd.crossings.push_back({label[x[0]], label[x[1]], label[x[2]], label[x[3]]});
  }
  return pd;
}

inline LinkDiagram diagram_from_pd(std::string_view text) { return orient_and_sign(parse_pd(text)); }

/// Half the signed count of crossings between components i and j.
inline int linking_number(const LinkDiagram& d, std::size_t i, std::size_t j) {
  if (i == j) throw InputError("linking number needs two distinct components");
  if (i >= d.component_count() || j >= d.component_count()) {
    throw InputError("component index out of range");
  }
  int sum = 0;
  for (const auto& x : d.crossings()) {
    std::size_t a = d.component_of(x.over), b = d.component_of(x.in);
    if ((a == i && b == j) || (a == j && b == i)) sum += x.sign;
  }
  if (sum % 2 != 0) throw InternalError("odd signed count of mixed crossings");
  return sum / 2;
}

/// Sum of signs of the component's self-crossings.
inline int writhe(const LinkDiagram& d, std::size_t comp) {
  int sum = 0;
  for (const auto& x : d.crossings()) {
    if (d.component_of(x.over) == comp && d.component_of(x.in) == comp) sum += x.sign;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Group words and Wirtinger presentations

struct Letter {
  std::size_t gen;
  int exp;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct GroupWord {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  GroupWord inverse() const {
    GroupWord w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->gen, -it->exp});
    return w;
  }

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    GroupWord w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
  }

  /// g^power as a word of ±1 letters.
  static GroupWord power(std::size_t gen, int power) {
    GroupWord w;
    int e = power > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(power); ++k) w.letters.push_back({gen, e});
    return w;
  }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

struct WirtingerPresentation {
  std::size_t generator_count = 0;
  std::vector<GroupWord> relators;
  std::vector<std::size_t> component_of;  // generator -> component
  std::vector<std::size_t> meridian_of;   // component -> generator
  std::size_t component_count = 0;
};

/// Image of a word in H_1 = Z^components.
inline Exponent abelianize(const GroupWord& w, const std::vector<std::size_t>& component_of,
                           std::size_t components) {
  Exponent e(components, 0);
  for (const auto& l : w.letters) {
    if (l.gen >= component_of.size()) throw InputError("generator index out of range");
    e[component_of[l.gen]] += l.exp;
  }
  return e;
}

/// One generator per arc; at each crossing the relator out * (over^s in over^-s)^-1.
inline WirtingerPresentation wirtinger(const LinkDiagram& d) {
  WirtingerPresentation p;
  p.generator_count = d.arc_count();
  p.component_count = d.component_count();
  p.component_of = d.arc_components();
  for (std::size_t c = 0; c < d.component_count(); ++c) p.meridian_of.push_back(d.lowest_arc(c));
  for (const auto& x : d.crossings()) {
    p.relators.push_back(GroupWord{{{x.out, 1}, {x.over, x.sign}, {x.in, -1}, {x.over, -x.sign}}});
  }
  return p;
}

/// Longitude of a component, read off by walking it from `start` (default:
/// its lowest-numbered arc a0). Passing under crossing k with over-arc x_k
/// and sign s_k conjugates the current meridian by x_k^{s_k}, so the word
/// x_m^{s_m} ... x_1^{s_1} commutes with a0. With framing correction,
/// a0^{-writhe} is appended, giving the zero-framed longitude.
inline GroupWord longitude_word(const LinkDiagram& d, std::size_t comp, bool framing_corrected,
                                std::optional<std::size_t> start = {}) {
  auto arcs = d.arcs_of(comp, start);
  GroupWord w;
  for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
    if (auto c = d.end_crossing(*it)) {
      const auto& x = d.crossings()[*c];
      w.letters.push_back({x.over, x.sign});
    }
  }
  if (framing_corrected) w = w * GroupWord::power(arcs.front(), -writhe(d, comp));
  return w;
}

// ---------------------------------------------------------------------------
// Component deletion

struct DeletionResult {
  LinkDiagram sub_diagram;
  /// arc of L -> arc of L'; empty for arcs of the deleted component.
  std::vector<std::optional<std::size_t>> arc_map;
  std::size_t deleted;
};

/// Removes component `comp`: crossings it passes over merge the two
/// under-arcs, crossings it passes under and its self-crossings disappear.
inline DeletionResult delete_component(const LinkDiagram& d, std::size_t comp) {
  if (d.component_count() < 2) throw InputError("cannot delete a component of a knot");
  if (comp >= d.component_count()) throw InputError("component index out of range");
  const std::size_t n = d.arc_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<Crossing> kept;
  for (const auto& x : d.crossings()) {
    bool over_deleted = d.component_of(x.over) == comp;
    bool under_deleted = d.component_of(x.in) == comp;
    if (under_deleted) continue;
    if (over_deleted) {
      std::size_t a = find(x.in), b = find(x.out);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
      continue;
    }
    kept.push_back(x);
  }
  // Class representatives are their minimum member, so numbering by
  // representative preserves the lowest-arc ordering.
  std::vector<std::optional<std::size_t>> arc_map(n);
  std::vector<std::size_t> new_index(n, SIZE_MAX);
  std::vector<std::size_t> arc_component;
  for (std::size_t a = 0; a < n; ++a) {
    if (d.component_of(a) == comp) continue;
    std::size_t r = find(a);
    if (new_index[r] == SIZE_MAX) {
      new_index[r] = arc_component.size();
      std::size_t c = d.component_of(a);
      arc_component.push_back(c > comp ? c - 1 : c);
    }
    arc_map[a] = new_index[r];
  }
  for (auto& x : kept) {
    x.over = *arc_map[x.over];
    x.in = *arc_map[x.in];
    x.out = *arc_map[x.out];
  }
  LinkDiagram sub(std::move(arc_component), std::move(kept), d.component_count() - 1);
  return {std::move(sub), std::move(arc_map), comp};
}

/// Exponents of T = prod_{i != comp} t_i^{lk(K_i, K_comp)}, indexed by the
/// surviving components in order.
inline Exponent linking_exponents(const LinkDiagram& d, std::size_t comp) {
  if (d.component_count() < 2) throw InputError("T needs at least two components");
  if (comp >= d.component_count()) throw InputError("component index out of range");
  Exponent e;
  for (std::size_t i = 0; i < d.component_count(); ++i) {
    if (i != comp) e.push_back(linking_number(d, i, comp));
  }
  return e;
}

template <class R>
Monomial<R> monomial_T(const R& ring, const LinkDiagram& d, std::size_t comp) {
  return {ring.one(), linking_exponents(d, comp)};
}

}  // namespace torres
