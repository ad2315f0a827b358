#pragma once

#include <string>
#include <vector>

#include "torres/diagram.hpp"

namespace torres {

/// A diagram given either as PD text or as a braid closure.
struct DiagramSource {
  std::string pd;
  std::vector<int> braid;
  int strands = 0;

  std::string pd_text() const { return strands > 0 ? to_string(braid_to_pd(braid, strands)) : pd; }
  LinkDiagram diagram() const { return diagram_from_pd(pd_text()); }
};

inline DiagramSource from_pd(std::string pd) { return {std::move(pd), {}, 0}; }
inline DiagramSource from_braid(std::vector<int> word, int strands) { return {"", std::move(word), strands}; }

/// Oriented link with several diagrams of it (same component order) and
/// tabulated invariants.
struct Fixture {
  std::string name;
  std::vector<DiagramSource> diagrams;
  std::size_t components = 1;
  /// lk(K_i, K_j) for i < j in row-major order.
  std::vector<int> linking;
  /// Multivariable Alexander polynomial up to units ("0" for split links).
  std::string alexander;
  /// Part of the Torres corpus (links with at least two components).
  bool torres = false;
};

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"unknot", {from_pd(""), from_pd("X[1,2,2,1]"), from_braid({1}, 2)}, 1, {}, "1", false},
      {"trefoil",
       {from_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"), from_braid({1, 1, 1}, 2), from_braid({1, 1, 1, 2}, 3)},
       1, {}, "t1^2 - t1 + 1", false},
      {"hopf", {from_pd("X[1,3,2,4] X[3,1,4,2]"), from_braid({1, 1}, 2), from_braid({1, 1, 2}, 3)},
       2, {1}, "1", true},
      {"torus_2_4", {from_braid({1, 1, 1, 1}, 2), from_braid({1, 1, 1, 1, 2}, 3), from_braid({1, 1, 1, 1, -2}, 3)},
       2, {2}, "t1*t2 + 1", true},
      {"torus_2_4_antiparallel",
       {from_pd("X[6,1,7,2] X[8,3,5,4] X[2,5,3,6] X[4,7,1,8]")}, 2, {-2}, "t1 + t2", true},
      {"whitehead",
       {from_pd("X[6,1,7,2] X[10,7,5,8] X[4,5,1,6] X[2,10,3,9] X[8,4,9,3]"), from_braid({1, -2, 1, -2, -2}, 3)},
       2, {0}, "t1*t2 - t1 - t2 + 1", true},
      {"borromean",
       {from_braid({1, -2, 1, -2, 1, -2}, 3), from_braid({1, -2, 1, -2, 1, -2, 3}, 4),
        from_braid({-2, 1, -2, 1, -2, 1}, 3)},
       3, {0, 0, 0}, "t1*t2*t3 - t1*t2 - t1*t3 + t1 - t2*t3 + t2 + t3 - 1", true},
      {"trefoil_split_unknot",
       {from_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2] O[7]"), from_braid({1, 1, 1}, 3), from_braid({1, 1, 1, 2, -2}, 3)},
       2, {0}, "0", true},
      {"chain_3", {from_braid({1, 1, 2, 2}, 3), from_braid({1, 1, 2, 2, 3}, 4), from_braid({2, 2, 1, 1}, 3)},
       3, {1, 0, 1}, "t2 - 1", true},
  };
  return all;
}

inline const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw InputError("no fixture named '" + name + "'");
}

}  // namespace torres
