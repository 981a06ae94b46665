#include "zxec/Oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

namespace zx {

namespace {
constexpr double invSqrt2 = 0.70710678118654752440;

Complex expi(double angle) { return {std::cos(angle), std::sin(angle)}; }
} // namespace

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw OracleError("matrix product: shape mismatch");
    }
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto aik = (*this)(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

Matrix Matrix::kron(const Matrix& rhs) const {
    Matrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto aij = (*this)(i, j);
            if (aij == Complex{}) {
                continue;
            }
            for (std::size_t r = 0; r < rhs.rows_; ++r) {
                for (std::size_t c = 0; c < rhs.cols_; ++c) {
                    out(i * rhs.rows_ + r, j * rhs.cols_ + c) = aij * rhs(r, c);
                }
            }
        }
    }
    return out;
}

Matrix Matrix::dagger() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Complex Matrix::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double Matrix::maxAbs() const {
    double m = 0.0;
    for (const auto& x : a_) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

std::string Matrix::toString() const {
    std::ostringstream os;
    os.precision(4);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto& x = (*this)(i, j);
            os << "(" << x.real() << (x.imag() < 0 ? "" : "+") << x.imag() << "i)";
            os << (j + 1 < cols_ ? " " : "");
        }
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// diagram interpretation
// ---------------------------------------------------------------------------

namespace {

/// A tensor over legs, each of dimension 2. `legs[0]` is the most significant
/// bit of the linear index.
struct Tensor {
    std::vector<int>     legs;
    std::vector<Complex> data;

    [[nodiscard]] std::size_t rank() const noexcept { return legs.size(); }
};

constexpr std::size_t maxRank = 26;

Tensor contract(const Tensor& a, const Tensor& b) {
    std::vector<int> shared;
    for (const auto l : a.legs) {
        if (std::find(b.legs.begin(), b.legs.end(), l) != b.legs.end()) {
            shared.push_back(l);
        }
    }
    Tensor out;
    for (const auto l : a.legs) {
        if (std::find(shared.begin(), shared.end(), l) == shared.end()) {
            out.legs.push_back(l);
        }
    }
    for (const auto l : b.legs) {
        if (std::find(shared.begin(), shared.end(), l) == shared.end()) {
            out.legs.push_back(l);
        }
    }
    if (out.rank() > maxRank) {
        throw OracleError("interpretDiagram: contraction width exceeds memory budget");
    }
    out.data.assign(std::size_t{1} << out.rank(), Complex{});

    const auto aFreeCount = a.rank() - shared.size();
    const auto bitOf = [](const Tensor& t, int leg) {
        const auto it = std::find(t.legs.begin(), t.legs.end(), leg);
        return t.rank() - 1 - static_cast<std::size_t>(it - t.legs.begin());
    };
    struct BitPair {
        std::size_t src;
        std::size_t dst;
    };
    std::vector<BitPair> aFree, bFree, sharedBits;
    for (std::size_t i = 0; i < out.rank(); ++i) {
        const auto leg    = out.legs[i];
        const auto outBit = out.rank() - 1 - i;
        if (i < aFreeCount) {
            aFree.push_back({bitOf(a, leg), outBit});
        } else {
            bFree.push_back({bitOf(b, leg), outBit});
        }
    }
    for (std::size_t i = 0; i < shared.size(); ++i) {
        sharedBits.push_back({bitOf(a, shared[i]), bitOf(b, shared[i])});
    }

    const std::size_t nOut    = out.data.size();
    const std::size_t nShared = std::size_t{1} << shared.size();
    for (std::size_t o = 0; o < nOut; ++o) {
        std::size_t aBase = 0;
        std::size_t bBase = 0;
        for (const auto& [src, dst] : aFree) {
            if (((o >> dst) & 1U) != 0U) {
                aBase |= std::size_t{1} << src;
            }
        }
        for (const auto& [src, dst] : bFree) {
            if (((o >> dst) & 1U) != 0U) {
                bBase |= std::size_t{1} << src;
            }
        }
        Complex acc{};
        for (std::size_t s = 0; s < nShared; ++s) {
            std::size_t ai = aBase;
            std::size_t bi = bBase;
            for (std::size_t i = 0; i < sharedBits.size(); ++i) {
                if (((s >> i) & 1U) != 0U) {
                    ai |= std::size_t{1} << sharedBits[i].src;
                    bi |= std::size_t{1} << sharedBits[i].dst;
                }
            }
            acc += a.data[ai] * b.data[bi];
        }
        out.data[o] = acc;
    }
    return out;
}

Tensor spiderTensor(VertexKind kind, const Phase& phase, std::vector<int> legs) {
    Tensor t;
    t.legs = std::move(legs);
    const auto r = t.rank();
    t.data.assign(std::size_t{1} << r, Complex{});
    const auto ph = expi(phase.toRadians());
    if (kind == VertexKind::Z) {
        t.data.front() = 1.0;
        t.data.back()  = ph;
        if (r == 0) {
            t.data.front() = 1.0 + ph;
        }
    } else {
        const double norm = std::pow(invSqrt2, static_cast<double>(r));
        for (std::size_t i = 0; i < t.data.size(); ++i) {
            const auto parity = std::popcount(i) % 2 == 0 ? 1.0 : -1.0;
            t.data[i]         = norm * (1.0 + ph * parity);
        }
    }
    return t;
}

} // namespace

Matrix interpretDiagram(const Diagram& d) {
    if (d.inputs().size() + d.outputs().size() > 24) {
        throw OracleError("interpretDiagram: too many open legs");
    }
    // assign leg labels: one per edge endpoint pair; Hadamard edges get a
    // 2x2 H factor inserted on the wire
    int                             nextLeg = 0;
    std::map<std::pair<Vertex, Vertex>, std::pair<int, int>> edgeLegs;
    std::vector<Tensor>                                      tensors;
    d.forEachEdge([&](Vertex u, Vertex v, EdgeKind k) {
        if (k == EdgeKind::Simple) {
            const int l = nextLeg++;
            edgeLegs[{u, v}] = {l, l};
        } else {
            const int lu = nextLeg++;
            const int lv = nextLeg++;
            edgeLegs[{u, v}] = {lu, lv};
            Tensor h;
            h.legs = {lu, lv};
            h.data = {invSqrt2, invSqrt2, invSqrt2, -invSqrt2};
            tensors.push_back(std::move(h));
        }
    });
    // open legs for inputs/outputs
    std::map<Vertex, int> openLeg;
    for (const auto b : d.inputs()) {
        openLeg[b] = nextLeg++;
    }
    for (const auto b : d.outputs()) {
        if (openLeg.count(b) != 0) {
            throw OracleError("interpretDiagram: boundary vertex in both inputs and outputs");
        }
        openLeg[b] = nextLeg++;
    }

    d.forEachVertex([&](Vertex v) {
        std::vector<int> legs;
        for (const auto& e : d.edges(v)) {
            const auto key = std::pair{std::min(v, e.to), std::max(v, e.to)};
            const auto& [lu, lv] = edgeLegs.at(key);
            legs.push_back(v == key.first ? lu : lv);
        }
        if (d.isBoundary(v)) {
            const auto it = openLeg.find(v);
            if (it == openLeg.end()) {
                throw OracleError("interpretDiagram: boundary vertex not listed as input/output");
            }
            legs.push_back(it->second);
            if (legs.size() != 2) {
                throw OracleError("interpretDiagram: boundary vertex degree must be 1");
            }
            Tensor id;
            id.legs = legs;
            id.data = {1.0, 0.0, 0.0, 1.0};
            tensors.push_back(std::move(id));
        } else {
            tensors.push_back(spiderTensor(d.kind(v), d.phase(v), std::move(legs)));
        }
    });

    if (tensors.empty()) {
        Matrix m(1, 1);
        m(0, 0) = 1.0;
        return m;
    }

    // greedy pairwise contraction: among tensor pairs sharing a leg, pick the
    // one with the smallest resulting rank (ties: lowest indices)
    std::vector<bool> dead(tensors.size(), false);
    auto              aliveCount = tensors.size();
    while (aliveCount > 1) {
        std::size_t bestI = 0, bestJ = 0;
        std::size_t bestRank = SIZE_MAX;
        for (std::size_t i = 0; i < tensors.size(); ++i) {
            if (dead[i]) {
                continue;
            }
            for (std::size_t j = i + 1; j < tensors.size(); ++j) {
                if (dead[j]) {
                    continue;
                }
                std::size_t sharedCount = 0;
                for (const auto l : tensors[i].legs) {
                    sharedCount += std::count(tensors[j].legs.begin(), tensors[j].legs.end(), l);
                }
                if (sharedCount == 0) {
                    continue;
                }
                const auto rank = tensors[i].rank() + tensors[j].rank() - 2 * sharedCount;
                if (rank < bestRank) {
                    bestRank = rank;
                    bestI    = i;
                    bestJ    = j;
                }
            }
        }
        if (bestRank == SIZE_MAX) {
            // disconnected components: combine the two lowest alive tensors
            std::size_t i = 0;
            while (dead[i]) {
                ++i;
            }
            std::size_t j = i + 1;
            while (j < tensors.size() && dead[j]) {
                ++j;
            }
            bestI = i;
            bestJ = j;
        }
        tensors[bestI] = contract(tensors[bestI], tensors[bestJ]);
        dead[bestJ]    = true;
        --aliveCount;
    }
    std::size_t root = 0;
    while (dead[root]) {
        ++root;
    }
    const auto& t = tensors[root];

    const auto nIn  = d.inputs().size();
    const auto nOut = d.outputs().size();
    Matrix     m(std::size_t{1} << nOut, std::size_t{1} << nIn);
    // locate each open leg's bit position in the final tensor
    const auto bitOf = [&](int leg) {
        const auto it = std::find(t.legs.begin(), t.legs.end(), leg);
        if (it == t.legs.end()) {
            throw OracleError("interpretDiagram: lost an open leg");
        }
        return t.rank() - 1 - static_cast<std::size_t>(it - t.legs.begin());
    };
    std::vector<std::size_t> inBits, outBits;
    for (const auto b : d.inputs()) {
        inBits.push_back(bitOf(openLeg.at(b)));
    }
    for (const auto b : d.outputs()) {
        outBits.push_back(bitOf(openLeg.at(b)));
    }
    for (std::size_t y = 0; y < m.rows(); ++y) {
        for (std::size_t x = 0; x < m.cols(); ++x) {
            std::size_t idx = 0;
            for (std::size_t q = 0; q < nOut; ++q) {
                if (((y >> (nOut - 1 - q)) & 1U) != 0U) {
                    idx |= std::size_t{1} << outBits[q];
                }
            }
            for (std::size_t q = 0; q < nIn; ++q) {
                if (((x >> (nIn - 1 - q)) & 1U) != 0U) {
                    idx |= std::size_t{1} << inBits[q];
                }
            }
            m(y, x) = t.data[idx];
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// circuits
// ---------------------------------------------------------------------------

namespace {

Matrix gate1(GateKind k, const std::vector<Phase>& params) {
    Matrix m(2, 2);
    const auto rot = [&](double theta, const Matrix& pauli) {
        Matrix r = Matrix::identity(2);
        const auto c = std::cos(theta / 2);
        const auto s = std::sin(theta / 2);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                r(i, j) = c * (i == j ? 1.0 : 0.0) - Complex{0, 1} * s * pauli(i, j);
            }
        }
        return r;
    };
    Matrix px(2, 2), py(2, 2), pz(2, 2);
    px(0, 1) = px(1, 0) = 1.0;
    py(0, 1) = Complex{0, -1};
    py(1, 0) = Complex{0, 1};
    pz(0, 0) = 1.0;
    pz(1, 1) = -1.0;
    switch (k) {
    case GateKind::X: return px;
    case GateKind::Y: return py;
    case GateKind::Z: return pz;
    case GateKind::H:
        m(0, 0) = m(0, 1) = m(1, 0) = invSqrt2;
        m(1, 1) = -invSqrt2;
        return m;
    case GateKind::S:
        m(0, 0) = 1.0;
        m(1, 1) = Complex{0, 1};
        return m;
    case GateKind::Sdg:
        m(0, 0) = 1.0;
        m(1, 1) = Complex{0, -1};
        return m;
    case GateKind::T:
        m(0, 0) = 1.0;
        m(1, 1) = expi(std::numbers::pi / 4);
        return m;
    case GateKind::Tdg:
        m(0, 0) = 1.0;
        m(1, 1) = expi(-std::numbers::pi / 4);
        return m;
    case GateKind::RX: return rot(params[0].toRadians(), px);
    case GateKind::RY: return rot(params[0].toRadians(), py);
    case GateKind::RZ: return rot(params[0].toRadians(), pz);
    case GateKind::U1:
        m(0, 0) = 1.0;
        m(1, 1) = expi(params[0].toRadians());
        return m;
    case GateKind::U2:
    case GateKind::U3: {
        const double theta = k == GateKind::U2 ? std::numbers::pi / 2 : params[0].toRadians();
        const double phi   = k == GateKind::U2 ? params[0].toRadians() : params[1].toRadians();
        const double lam   = k == GateKind::U2 ? params[1].toRadians() : params[2].toRadians();
        m(0, 0) = std::cos(theta / 2);
        m(0, 1) = -expi(lam) * std::sin(theta / 2);
        m(1, 0) = expi(phi) * std::sin(theta / 2);
        m(1, 1) = expi(lam + phi) * std::cos(theta / 2);
        return m;
    }
    default:
        throw OracleError(std::string("gate1: not a single-qubit gate: ") + gateName(k));
    }
}

/// U <- G * U for a single-qubit gate on `qubit` (qubit 0 = MSB).
void applyGate1InPlace(Matrix& u, const Matrix& g, std::size_t n, std::size_t qubit) {
    const std::size_t stride = std::size_t{1} << (n - 1 - qubit);
    const std::size_t dim    = u.rows();
    for (std::size_t r = 0; r < dim; ++r) {
        if ((r & stride) != 0U) {
            continue;
        }
        for (std::size_t c = 0; c < u.cols(); ++c) {
            const auto a0 = u(r, c);
            const auto a1 = u(r | stride, c);
            u(r, c)          = g(0, 0) * a0 + g(0, 1) * a1;
            u(r | stride, c) = g(1, 0) * a0 + g(1, 1) * a1;
        }
    }
}

void applyRowPermutation(Matrix& u, const std::vector<std::size_t>& rowMap) {
    Matrix out(u.rows(), u.cols());
    for (std::size_t r = 0; r < u.rows(); ++r) {
        for (std::size_t c = 0; c < u.cols(); ++c) {
            out(rowMap[r], c) = u(r, c);
        }
    }
    u = std::move(out);
}

} // namespace

Matrix layoutMatrix(const std::vector<std::size_t>& perm) {
    const auto        n   = perm.size();
    const std::size_t dim = std::size_t{1} << n;
    Matrix            m(dim, dim);
    for (std::size_t x = 0; x < dim; ++x) {
        std::size_t y = 0;
        for (std::size_t p = 0; p < n; ++p) {
            // wire p takes the value of logical qubit perm[p]
            if (((x >> (n - 1 - perm[p])) & 1U) != 0U) {
                y |= std::size_t{1} << (n - 1 - p);
            }
        }
        m(y, x) = 1.0;
    }
    return m;
}

Matrix circuitUnitary(const Circuit& c) {
    if (c.numQubits > 12) {
        throw OracleError("circuitUnitary: more than 12 qubits");
    }
    const auto        n   = c.numQubits;
    const std::size_t dim = std::size_t{1} << n;
    bool              nontrivialLayout = false;
    for (std::size_t i = 0; i < n; ++i) {
        nontrivialLayout |= c.initialLayout[i] != i;
    }
    Matrix u = nontrivialLayout ? layoutMatrix(c.initialLayout) : Matrix::identity(dim);

    const auto bitPos = [n](std::size_t q) { return n - 1 - q; };
    for (const auto& g : c.gates) {
        switch (g.kind) {
        case GateKind::Barrier:
            break;
        case GateKind::CX: {
            const std::size_t cm = std::size_t{1} << bitPos(g.qubits[0]);
            const std::size_t tm = std::size_t{1} << bitPos(g.qubits[1]);
            std::vector<std::size_t> rowMap(dim);
            for (std::size_t r = 0; r < dim; ++r) {
                rowMap[r] = (r & cm) != 0U ? (r ^ tm) : r;
            }
            applyRowPermutation(u, rowMap);
            break;
        }
        case GateKind::CZ: {
            const std::size_t cm = std::size_t{1} << bitPos(g.qubits[0]);
            const std::size_t tm = std::size_t{1} << bitPos(g.qubits[1]);
            for (std::size_t r = 0; r < dim; ++r) {
                if ((r & cm) != 0U && (r & tm) != 0U) {
                    for (std::size_t col = 0; col < dim; ++col) {
                        u(r, col) = -u(r, col);
                    }
                }
            }
            break;
        }
        case GateKind::SWAP: {
            const std::size_t am = std::size_t{1} << bitPos(g.qubits[0]);
            const std::size_t bm = std::size_t{1} << bitPos(g.qubits[1]);
            std::vector<std::size_t> rowMap(dim);
            for (std::size_t r = 0; r < dim; ++r) {
                const bool ba = (r & am) != 0U;
                const bool bb = (r & bm) != 0U;
                auto       t  = r & ~(am | bm);
                if (ba) {
                    t |= bm;
                }
                if (bb) {
                    t |= am;
                }
                rowMap[r] = t;
            }
            applyRowPermutation(u, rowMap);
            break;
        }
        case GateKind::CCX: {
            const std::size_t c1 = std::size_t{1} << bitPos(g.qubits[0]);
            const std::size_t c2 = std::size_t{1} << bitPos(g.qubits[1]);
            const std::size_t tm = std::size_t{1} << bitPos(g.qubits[2]);
            std::vector<std::size_t> rowMap(dim);
            for (std::size_t r = 0; r < dim; ++r) {
                rowMap[r] = ((r & c1) != 0U && (r & c2) != 0U) ? (r ^ tm) : r;
            }
            applyRowPermutation(u, rowMap);
            break;
        }
        default:
            applyGate1InPlace(u, gate1(g.kind, g.params), n, g.qubits[0]);
        }
    }
    return u;
}

Matrix fixAncilla(const Matrix& u, std::size_t qubit, bool one, double* defect) {
    if (u.rows() != u.cols()) {
        throw OracleError("fixAncilla: matrix must be square");
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < u.rows()) {
        ++n;
    }
    if ((std::size_t{1} << n) != u.rows() || qubit >= n) {
        throw OracleError("fixAncilla: qubit index out of range");
    }
    const auto        p    = n - 1 - qubit;
    const std::size_t low  = (std::size_t{1} << p) - 1;
    const auto        ins  = [&](std::size_t x) {
        const auto hi = (x & ~low) << 1;
        const auto s  = one ? (std::size_t{1} << p) : std::size_t{0};
        return hi | s | (x & low);
    };
    const std::size_t dim = std::size_t{1} << (n - 1);
    Matrix            out(dim, dim);
    for (std::size_t y = 0; y < dim; ++y) {
        for (std::size_t x = 0; x < dim; ++x) {
            out(y, x) = u(ins(y), ins(x));
        }
    }
    double worst = 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
        double norm = 0.0;
        for (std::size_t y = 0; y < dim; ++y) {
            norm += std::norm(out(y, x));
        }
        worst = std::max(worst, std::abs(norm - 1.0));
    }
    if (defect != nullptr) {
        *defect = worst;
    }
    if (worst > 1e-9) {
        std::cerr << "warning: fixing qubit " << qubit << " to |" << (one ? 1 : 0)
                  << "> yields a non-isometry (column norm defect " << worst << ")\n";
    }
    return out;
}

HsResult hsCheck(const Matrix& u, const Matrix& v, double tau) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
        throw OracleError("hsCheck: shape mismatch");
    }
    const auto   prod     = u.dagger() * v;
    const double fidelity = std::abs(prod.trace()) / static_cast<double>(u.rows());
    return {fidelity >= 1.0 - tau, fidelity};
}

bool proportional(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    // anchor the scalar at b's largest entry
    std::size_t kr = 0, kc = 0;
    double      best = -1.0;
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (std::abs(b(r, c)) > best) {
                best = std::abs(b(r, c));
                kr   = r;
                kc   = c;
            }
        }
    }
    if (best < tol) {
        return a.maxAbs() < tol;
    }
    const auto scale = a(kr, kc) / b(kr, kc);
    if (std::abs(scale) < tol) {
        return false;
    }
    const double bound = tol * std::max(1.0, std::abs(scale) * best);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (std::abs(a(r, c) - scale * b(r, c)) > bound) {
                return false;
            }
        }
    }
    return true;
}

} // namespace zx
