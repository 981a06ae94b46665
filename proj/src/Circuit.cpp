#include "zxec/Circuit.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

namespace zx {

std::size_t gateArity(GateKind k) {
    switch (k) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::SWAP:
        return 2;
    case GateKind::CCX:
        return 3;
    case GateKind::Barrier:
        return 0; // variable
    default:
        return 1;
    }
}

std::size_t gateParamCount(GateKind k) {
    switch (k) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::U1:
        return 1;
    case GateKind::U2:
        return 2;
    case GateKind::U3:
        return 3;
    default:
        return 0;
    }
}

const char* gateName(GateKind k) {
    switch (k) {
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::U1: return "u1";
    case GateKind::U2: return "u2";
    case GateKind::U3: return "u3";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::SWAP: return "swap";
    case GateKind::CCX: return "ccx";
    case GateKind::Barrier: return "barrier";
    }
    return "?";
}

void Circuit::resize(std::size_t nq) {
    numQubits = nq;
    initialLayout.resize(nq);
    outputPermutation.resize(nq);
    for (std::size_t i = 0; i < nq; ++i) {
        initialLayout[i]     = i;
        outputPermutation[i] = i;
    }
    ancillas.assign(nq, std::nullopt);
}

void Circuit::add(GateKind k, std::vector<std::size_t> qubits, std::vector<Phase> params) {
    if (k != GateKind::Barrier && qubits.size() != gateArity(k)) {
        throw CircuitError(std::string("gate ") + gateName(k) + ": wrong qubit count");
    }
    if (params.size() != gateParamCount(k)) {
        throw CircuitError(std::string("gate ") + gateName(k) + ": wrong parameter count");
    }
    for (const auto q : qubits) {
        if (q >= numQubits) {
            throw CircuitError(std::string("gate ") + gateName(k) + ": qubit index out of range");
        }
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        for (std::size_t j = i + 1; j < qubits.size(); ++j) {
            if (qubits[i] == qubits[j]) {
                throw CircuitError(std::string("gate ") + gateName(k) + ": repeated qubit index");
            }
        }
    }
    gates.push_back(Gate{k, std::move(qubits), std::move(params)});
}

bool Circuit::hasNonTrivialLayout() const {
    for (std::size_t i = 0; i < numQubits; ++i) {
        if (initialLayout[i] != i || outputPermutation[i] != i) {
            return true;
        }
    }
    return false;
}

void Circuit::declareOutputPermutation(std::vector<std::size_t> perm) {
    outputPermutation = std::move(perm);
    outputDeclared_   = true;
}

std::optional<std::size_t> Circuit::resolveQubit(const std::string& spec) const {
    const auto tryParseIndex = [](const std::string& s) -> std::optional<std::size_t> {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c) != 0; })) {
            return std::nullopt;
        }
        return std::stoull(s);
    };
    if (const auto flat = tryParseIndex(spec)) {
        if (*flat < numQubits) {
            return flat;
        }
        return std::nullopt;
    }
    // "name[idx]" or "nameIdx"
    std::string name;
    std::string idx;
    if (const auto br = spec.find('['); br != std::string::npos && spec.back() == ']') {
        name = spec.substr(0, br);
        idx  = spec.substr(br + 1, spec.size() - br - 2);
    } else {
        auto split = spec.size();
        while (split > 0 && std::isdigit(static_cast<unsigned char>(spec[split - 1])) != 0) {
            --split;
        }
        name = spec.substr(0, split);
        idx  = spec.substr(split);
    }
    const auto offset = tryParseIndex(idx);
    if (!offset.has_value() || name.empty()) {
        return std::nullopt;
    }
    for (const auto& reg : registers) {
        if (reg.name == name && *offset < reg.size) {
            return reg.offset + *offset;
        }
    }
    return std::nullopt;
}

namespace {
std::string phaseToQasmExpr(const Phase& p) {
    std::ostringstream os;
    if (p.isExact()) {
        const auto& r = p.exact();
        if (r.isZero()) {
            return "0";
        }
        if (r.num() == 1) {
            os << "pi";
        } else {
            os << r.num() << "*pi";
        }
        if (r.den() != 1) {
            os << "/" << r.den();
        }
        return os.str();
    }
    os.precision(17);
    os << p.toRadians();
    return os.str();
}
} // namespace

std::string Circuit::toQasm() const {
    std::ostringstream os;
    bool nontrivialIn = false;
    for (std::size_t i = 0; i < numQubits; ++i) {
        nontrivialIn |= initialLayout[i] != i;
    }
    if (nontrivialIn) {
        os << "// i";
        for (const auto l : initialLayout) {
            os << " " << l;
        }
        os << "\n";
    }
    if (outputDeclared_) {
        os << "// o";
        for (const auto l : outputPermutation) {
            os << " " << l;
        }
        os << "\n";
    }
    os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    os << "qreg q[" << numQubits << "];\n";
    for (const auto& g : gates) {
        os << gateName(g.kind);
        if (!g.params.empty()) {
            os << "(";
            for (std::size_t i = 0; i < g.params.size(); ++i) {
                os << (i > 0 ? "," : "") << phaseToQasmExpr(g.params[i]);
            }
            os << ")";
        }
        for (std::size_t i = 0; i < g.qubits.size(); ++i) {
            os << (i > 0 ? "," : " ") << "q[" << g.qubits[i] << "]";
        }
        os << ";\n";
    }
    return os.str();
}

std::vector<Gate> decomposeGate(const Gate& g) {
    std::vector<Gate> out;
    const auto q1 = [&](GateKind k, std::size_t q, std::vector<Phase> p = {}) {
        out.push_back(Gate{k, {q}, std::move(p)});
    };
    switch (g.kind) {
    case GateKind::CCX: {
        // Clifford+T expansion of the Toffoli gate
        const auto a = g.qubits[0];
        const auto b = g.qubits[1];
        const auto c = g.qubits[2];
        const auto cx = [&](std::size_t x, std::size_t y) { out.push_back(Gate{GateKind::CX, {x, y}, {}}); };
        q1(GateKind::H, c);
        cx(b, c);
        q1(GateKind::Tdg, c);
        cx(a, c);
        q1(GateKind::T, c);
        cx(b, c);
        q1(GateKind::Tdg, c);
        cx(a, c);
        q1(GateKind::T, b);
        q1(GateKind::T, c);
        cx(a, b);
        q1(GateKind::H, c);
        q1(GateKind::T, a);
        q1(GateKind::Tdg, b);
        cx(a, b);
        break;
    }
    case GateKind::RY: {
        // RY(t) = S * RX(t) * Sdg, Sdg applied first
        const auto q = g.qubits[0];
        q1(GateKind::Sdg, q);
        q1(GateKind::RX, q, {g.params[0]});
        q1(GateKind::S, q);
        break;
    }
    case GateKind::U3: {
        // RZ(lambda), RY(theta), RZ(phi) in application order
        const auto q = g.qubits[0];
        q1(GateKind::RZ, q, {g.params[2]});
        const auto ry = decomposeGate(Gate{GateKind::RY, {q}, {g.params[0]}});
        out.insert(out.end(), ry.begin(), ry.end());
        q1(GateKind::RZ, q, {g.params[1]});
        break;
    }
    case GateKind::U2: {
        const auto u3 = decomposeGate(
                Gate{GateKind::U3, g.qubits, {Phase(Rational(1, 2)), g.params[0], g.params[1]}});
        out.insert(out.end(), u3.begin(), u3.end());
        break;
    }
    default:
        throw CircuitError(std::string("decomposeGate: ") + gateName(g.kind) + " is not decomposable");
    }
    return out;
}

Circuit decomposeComposites(const Circuit& c) {
    Circuit out = c;
    out.gates.clear();
    for (const auto& g : c.gates) {
        switch (g.kind) {
        case GateKind::CCX:
        case GateKind::RY:
        case GateKind::U2:
        case GateKind::U3: {
            const auto seq = decomposeGate(g);
            out.gates.insert(out.gates.end(), seq.begin(), seq.end());
            break;
        }
        default:
            out.gates.push_back(g);
        }
    }
    return out;
}

Circuit reconstructSwaps(const Circuit& c) {
    Circuit out = c;
    out.gates.clear();
    const auto& gs = c.gates;
    const auto touches = [](const Gate& g, std::size_t a, std::size_t b) {
        return std::find(g.qubits.begin(), g.qubits.end(), a) != g.qubits.end() ||
               std::find(g.qubits.begin(), g.qubits.end(), b) != g.qubits.end();
    };
    std::vector<bool> consumed(gs.size(), false);
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (consumed[i]) {
            continue;
        }
        const auto& g = gs[i];
        if (g.kind == GateKind::CX) {
            const auto a = g.qubits[0];
            const auto b = g.qubits[1];
            // find the next two gates touching a or b
            std::size_t j = i + 1;
            while (j < gs.size() && (consumed[j] || !touches(gs[j], a, b))) {
                ++j;
            }
            std::size_t k = j + 1;
            while (k < gs.size() && (consumed[k] || !touches(gs[k], a, b))) {
                ++k;
            }
            if (j < gs.size() && k < gs.size() && gs[j].kind == GateKind::CX &&
                gs[k].kind == GateKind::CX && gs[j].qubits[0] == b && gs[j].qubits[1] == a &&
                gs[k].qubits[0] == a && gs[k].qubits[1] == b) {
                consumed[j] = consumed[k] = true;
                out.gates.push_back(Gate{GateKind::SWAP, {a, b}, {}});
                continue;
            }
        }
        out.gates.push_back(g);
    }
    return out;
}

void validateLayouts(const Circuit& c) {
    const auto checkPerm = [&](const std::vector<std::size_t>& p, const char* what) {
        if (p.size() != c.numQubits) {
            throw CircuitError(std::string(what) + ": wrong length");
        }
        std::vector<bool> seen(c.numQubits, false);
        for (const auto v : p) {
            if (v >= c.numQubits || seen[v]) {
                throw CircuitError(std::string(what) + ": not a permutation");
            }
            seen[v] = true;
        }
    };
    checkPerm(c.initialLayout, "initial layout");
    checkPerm(c.outputPermutation, "output permutation");
    for (std::size_t q = 0; q < c.numQubits; ++q) {
        if (c.ancillas[q].has_value() &&
            (c.initialLayout[q] != q || c.outputPermutation[q] != q)) {
            throw CircuitError("ancilla qubits must not be permuted by layouts");
        }
    }
}

} // namespace zx
