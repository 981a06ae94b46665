#include "zxec/CircuitToDiagram.hpp"

namespace zx {

Diagram circuitToDiagram(const Circuit& c) {
    validateLayouts(c);
    Diagram d;
    const auto n = c.numQubits;

    std::vector<Vertex>   cursor(n);
    std::vector<EdgeKind> pending(n, EdgeKind::Simple);
    std::vector<Vertex>   wireIn(n);
    for (std::size_t p = 0; p < n; ++p) {
        wireIn[p] = d.addBoundary();
        cursor[p] = wireIn[p];
    }

    const auto emit = [&](std::size_t wire, VertexKind kind, Phase phase) {
        const auto v = d.addVertex(kind, std::move(phase));
        d.addEdge(cursor[wire], v, pending[wire]);
        cursor[wire]  = v;
        pending[wire] = EdgeKind::Simple;
        return v;
    };

    for (const auto& g : c.gates) {
        switch (g.kind) {
        case GateKind::Barrier:
            break;
        case GateKind::H:
            pending[g.qubits[0]] = toggled(pending[g.qubits[0]]);
            break;
        case GateKind::Z:
            emit(g.qubits[0], VertexKind::Z, Phase(Rational(1)));
            break;
        case GateKind::S:
            emit(g.qubits[0], VertexKind::Z, Phase(Rational(1, 2)));
            break;
        case GateKind::Sdg:
            emit(g.qubits[0], VertexKind::Z, Phase(Rational(3, 2)));
            break;
        case GateKind::T:
            emit(g.qubits[0], VertexKind::Z, Phase(Rational(1, 4)));
            break;
        case GateKind::Tdg:
            emit(g.qubits[0], VertexKind::Z, Phase(Rational(7, 4)));
            break;
        case GateKind::RZ:
        case GateKind::U1:
            emit(g.qubits[0], VertexKind::Z, g.params[0]);
            break;
        case GateKind::X:
            emit(g.qubits[0], VertexKind::X, Phase(Rational(1)));
            break;
        case GateKind::RX:
            emit(g.qubits[0], VertexKind::X, g.params[0]);
            break;
        case GateKind::Y:
            // Y = i * X(pi) Z(pi); the scalar is dropped
            emit(g.qubits[0], VertexKind::Z, Phase(Rational(1)));
            emit(g.qubits[0], VertexKind::X, Phase(Rational(1)));
            break;
        case GateKind::CX: {
            const auto ctrl = emit(g.qubits[0], VertexKind::Z, Phase{});
            const auto targ = emit(g.qubits[1], VertexKind::X, Phase{});
            d.addEdge(ctrl, targ, EdgeKind::Simple);
            break;
        }
        case GateKind::CZ: {
            const auto a = emit(g.qubits[0], VertexKind::Z, Phase{});
            const auto b = emit(g.qubits[1], VertexKind::Z, Phase{});
            d.addEdge(a, b, EdgeKind::Hadamard);
            break;
        }
        case GateKind::SWAP: {
            std::swap(cursor[g.qubits[0]], cursor[g.qubits[1]]);
            std::swap(pending[g.qubits[0]], pending[g.qubits[1]]);
            break;
        }
        case GateKind::CCX:
        case GateKind::RY:
        case GateKind::U2:
        case GateKind::U3:
            throw CircuitError(std::string("circuitToDiagram: composite gate ") +
                               gateName(g.kind) + " must be decomposed first");
        }
    }

    // input slot l holds logical qubit l: attach it to the wire carrying l
    std::vector<std::size_t> wireOfLogical(n);
    for (std::size_t p = 0; p < n; ++p) {
        wireOfLogical[c.initialLayout[p]] = p;
    }
    for (std::size_t l = 0; l < n; ++l) {
        d.inputs().push_back(wireIn[wireOfLogical[l]]);
    }
    for (std::size_t p = 0; p < n; ++p) {
        const auto out = d.addBoundary();
        d.addEdge(cursor[p], out, pending[p]);
        d.outputs().push_back(out);
    }
    return d;
}

} // namespace zx
