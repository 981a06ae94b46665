#pragma once

#include "zxec/Circuit.hpp"
#include "zxec/Diagram.hpp"

namespace zx {

/// Lowers an elementary-gate circuit to a ZX-diagram, chaining per-gate
/// gadgets along qubit wires. The initial layout is encoded in the input
/// wire order (input slot l attaches to the wire holding logical qubit l);
/// the output permutation is not baked in; the checker compares it against
/// the residual wiring of the reduced miter. Composite gates (CCX, RY, U2,
/// U3) must be decomposed first.
[[nodiscard]] Diagram circuitToDiagram(const Circuit& c);

} // namespace zx
