#pragma once

// Membership facts established by hand arguments that no check here
// reproduces. They are data, not verdicts.

#include "betti/diagram.hpp"

#include <optional>
#include <string>
#include <vector>

namespace betti {

struct RecordedFact {
  std::string name;
  BettiDiagram diagram;
  bool in_module_semigroup;
  std::string reason;
};

/// (2,4,3,-; -,3,4,2)
inline BettiDiagram d2_diagram() {
  return BettiDiagram::from_table({{2, 4, 3, 0}, {0, 3, 4, 2}});
}

inline std::vector<RecordedFact> recorded_facts() {
  return {
      {"2*D2", scale(d2_diagram(), 2), true,
       "Betti diagram of N + N^v(4) with N = k[x,y,z]/(x,y,z)^2"},
      {"3*D2", scale(d2_diagram(), 3), false,
       "rank argument on the linear strand: T_1 would need 8 independent columns on 2 rows"},
  };
}

inline std::optional<RecordedFact> lookup_fact(const BettiDiagram& d) {
  for (auto& f : recorded_facts())
    if (f.diagram == d) return f;
  return std::nullopt;
}

}  // namespace betti
