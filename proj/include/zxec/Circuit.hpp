#pragma once

#include "zxec/Phase.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zx {

enum class GateKind : std::uint8_t {
    X, Y, Z, H, S, Sdg, T, Tdg, RX, RY, RZ, U1, U2, U3, CX, CZ, SWAP, CCX, Barrier
};

[[nodiscard]] std::size_t gateArity(GateKind k);
[[nodiscard]] std::size_t gateParamCount(GateKind k);
[[nodiscard]] const char* gateName(GateKind k);

struct Gate {
    GateKind                 kind;
    std::vector<std::size_t> qubits;
    std::vector<Phase>       params;
};

class CircuitError : public std::runtime_error {
public:
    explicit CircuitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Named quantum register, flattened into the global qubit index space.
struct Register {
    std::string name;
    std::size_t offset;
    std::size_t size;
};

/// Gate-list IR with layout annotations. `initialLayout[p]` / `outputPermutation[p]`
/// name the logical qubit held by wire p at the start / end of the circuit;
/// both default to the identity. `ancillas[q]` optionally pins qubit q to a
/// constant basis state at both ends.
struct Circuit {
    std::size_t                           numQubits = 0;
    std::vector<Gate>                     gates;
    std::vector<std::size_t>              initialLayout;
    std::vector<std::size_t>              outputPermutation;
    std::vector<std::optional<bool>>      ancillas; // false = |0>, true = |1>
    std::vector<Register>                 registers;

    explicit Circuit(std::size_t nq = 0) { resize(nq); }

    void resize(std::size_t nq);
    void add(GateKind k, std::vector<std::size_t> qubits, std::vector<Phase> params = {});

    [[nodiscard]] bool hasNonTrivialLayout() const;
    [[nodiscard]] bool hasOutputPermutationDeclared() const noexcept { return outputDeclared_; }
    void               declareOutputPermutation(std::vector<std::size_t> perm);

    /// Resolves "reg[i]" / "regI" / plain integer to a flat qubit index.
    [[nodiscard]] std::optional<std::size_t> resolveQubit(const std::string& spec) const;

    /// Serializes back to OpenQASM 2.0 (layout comments included when
    /// non-trivial).
    [[nodiscard]] std::string toQasm() const;

private:
    bool outputDeclared_ = false;
};

/// Expands CCX (Clifford+T), RY, U2 and U3 into the elementary set; all other
/// gates pass through. Throws for gates outside {CCX, RY, U2, U3}.
[[nodiscard]] std::vector<Gate> decomposeGate(const Gate& g);

/// Applies decomposeGate to every composite gate in the circuit.
[[nodiscard]] Circuit decomposeComposites(const Circuit& c);

/// Replaces every maximal CX(a,b);CX(b,a);CX(a,b) pattern (no intervening
/// gate touching a or b) by SWAP(a,b).
[[nodiscard]] Circuit reconstructSwaps(const Circuit& c);

/// Validates that layout maps are bijections and that ancilla wires map to
/// themselves; throws CircuitError otherwise.
void validateLayouts(const Circuit& c);

} // namespace zx
