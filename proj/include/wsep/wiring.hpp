#pragma once

#include <vector>

#include "wsep/gtiling.hpp"
#include "wsep/sets.hpp"

namespace wsep {

struct Crossing {
  int id = 0;
  int i = 0, j = 0;  // i < j
  bool black = false;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Wiring {
  int n = 0;
  std::vector<Crossing> crossings;       // indexed by id
  std::vector<std::vector<int>> wires;   // wires[i-1]: crossing ids along w_i

  friend bool operator==(const Wiring&, const Wiring&) = default;
};

// One step of a face boundary; wire == 0 marks a piece of bd(Z).
struct FaceStep {
  int wire = 0;
  int from = 0, to = 0;  // node ids of the rotation system
  bool along_wire = false;
};

struct WFace {
  std::vector<FaceStep> walk;
  Mask label = 0;
  bool cyclic = false;
  bool touches_boundary = false;
};

// Structural checks, (W2), face closure with the Euler count, (W3) and properness.
std::vector<Violation> validate_wiring(const Wiring& w);
std::vector<WFace> faces(const Wiring& w);
Collection spectrum(const Wiring& w);
Collection full_spectrum(const Wiring& w);
std::size_t cyclic_face_count(const Wiring& w);

Wiring tiling_to_wiring(const GTiling& t);
GTiling wiring_to_tiling(const Wiring& w);
Wiring remove_wire(const Wiring& w, int i);

}  // namespace wsep
