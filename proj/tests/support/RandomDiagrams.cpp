#include "RandomDiagrams.hpp"

#include <numbers>

namespace zxtest {

using namespace zx;

std::size_t pick(Rng& rng, std::size_t bound) { return rng() % bound; }

Phase randomCliffordPhase(Rng& rng) { return Phase{Rational(static_cast<std::int64_t>(pick(rng, 4)), 2)}; }

Phase randomPhase(Rng& rng) {
    switch (pick(rng, 4)) {
    case 0:
        return randomCliffordPhase(rng);
    case 1:
        return Phase{Rational(static_cast<std::int64_t>(pick(rng, 8)), 4)};
    case 2:
        return Phase{Rational(static_cast<std::int64_t>(pick(rng, 16)), 8)};
    default: {
        const double angle = (static_cast<double>(rng() % 20000) / 10000.0 - 1.0) * std::numbers::pi;
        return Phase::fromRadians(angle);
    }
    }
}

Diagram randomDiagram(Rng& rng, std::size_t nIn, std::size_t nOut, std::size_t nSpiders,
                      bool cliffordOnly) {
    Diagram d;
    std::vector<Vertex> spiders;
    for (std::size_t i = 0; i < nSpiders; ++i) {
        const auto kind  = pick(rng, 2) == 0 ? VertexKind::Z : VertexKind::X;
        const auto phase = cliffordOnly ? randomCliffordPhase(rng) : randomPhase(rng);
        spiders.push_back(d.addVertex(kind, phase));
    }
    // sprinkle edges between spiders
    if (nSpiders >= 2) {
        const auto nEdges = pick(rng, nSpiders * 2 + 1);
        for (std::size_t i = 0; i < nEdges; ++i) {
            const auto a = spiders[pick(rng, spiders.size())];
            const auto b = spiders[pick(rng, spiders.size())];
            if (a == b || d.connected(a, b)) {
                continue;
            }
            d.addEdge(a, b, pick(rng, 2) == 0 ? EdgeKind::Simple : EdgeKind::Hadamard);
        }
    }
    // wire every boundary to something
    for (std::size_t i = 0; i < nIn + nOut; ++i) {
        const auto b = d.addBoundary();
        if (i < nIn) {
            d.inputs().push_back(b);
        } else {
            d.outputs().push_back(b);
        }
        if (!spiders.empty()) {
            d.addEdge(b, spiders[pick(rng, spiders.size())],
                      pick(rng, 2) == 0 ? EdgeKind::Simple : EdgeKind::Hadamard);
        }
    }
    // a diagram with boundaries but no spiders: pair them up as wires
    if (spiders.empty()) {
        const auto& ins  = d.inputs();
        const auto& outs = d.outputs();
        for (std::size_t i = 0; i < ins.size() && i < outs.size(); ++i) {
            d.addEdge(ins[i], outs[i], EdgeKind::Simple);
        }
        // leftover unmatched boundaries get a state/effect spider
        for (std::size_t i = outs.size(); i < ins.size(); ++i) {
            const auto s = d.addVertex(VertexKind::Z, randomPhase(rng));
            d.addEdge(ins[i], s, EdgeKind::Simple);
        }
        for (std::size_t i = ins.size(); i < outs.size(); ++i) {
            const auto s = d.addVertex(VertexKind::Z, randomPhase(rng));
            d.addEdge(outs[i], s, EdgeKind::Simple);
        }
    }
    return d;
}

Diagram randomGraphLike(Rng& rng, std::size_t nIn, std::size_t nOut, std::size_t nSpiders,
                        bool cliffordOnly) {
    auto d = randomDiagram(rng, nIn, nOut, nSpiders, cliffordOnly);
    d.toGraphLike();
    return d;
}

bool sameUpToScalar(const Diagram& a, const Diagram& b, double tol) {
    return proportional(interpretDiagram(a), interpretDiagram(b), tol);
}

} // namespace zxtest
