#include "zxec/Simplify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>

namespace zx {

namespace {

void bump(SimplifyReport* r, const char* rule, std::size_t n = 1) {
    if (r != nullptr) {
        r->ruleCounts[rule] += n;
    }
}

bool isInteriorPauli(const Diagram& d, Vertex v) {
    return d.isSpider(v) && d.phase(v).isPauli() && d.isInterior(v);
}

bool allEdgesHadamard(const Diagram& d, Vertex v) {
    for (const auto& e : d.edges(v)) {
        if (e.kind != EdgeKind::Hadamard) {
            return false;
        }
    }
    return true;
}

/// Degree-1 Hadamard-attached neighbors of v (phase legs of a would-be hub).
std::vector<Vertex> phaseLegs(const Diagram& d, Vertex v) {
    std::vector<Vertex> legs;
    for (const auto& e : d.edges(v)) {
        if (e.kind == EdgeKind::Hadamard && d.isSpider(e.to) && d.degree(e.to) == 1) {
            legs.push_back(e.to);
        }
    }
    return legs;
}

/// A hub whose gadget is worth preserving: it carries a non-Pauli phase leg.
bool isProtectedHub(const Diagram& d, Vertex v) {
    for (const auto leg : phaseLegs(d, v)) {
        if (!d.phase(leg).isPauli()) {
            return true;
        }
    }
    return false;
}

bool touchesBoundary(const Diagram& d, Vertex v) {
    for (const auto& e : d.edges(v)) {
        if (d.isBoundary(e.to)) {
            return true;
        }
    }
    return false;
}

/// Boundary stubs may be plain; only spider-spider edges must be Hadamard.
bool interSpiderEdgesHadamard(const Diagram& d, Vertex v) {
    for (const auto& e : d.edges(v)) {
        if (d.isSpider(e.to) && e.kind != EdgeKind::Hadamard) {
            return false;
        }
    }
    return true;
}

std::vector<Vertex> neighborIds(const Diagram& d, Vertex v) {
    std::vector<Vertex> ns;
    ns.reserve(d.degree(v));
    for (const auto& e : d.edges(v)) {
        ns.push_back(e.to);
    }
    return ns;
}

} // namespace

std::size_t SimplifyReport::total() const {
    std::size_t n = 0;
    for (const auto& [rule, count] : ruleCounts) {
        n += count;
    }
    return n;
}

bool fuseSpidersPass(Diagram& d, SimplifyReport* report, std::ostream* trace) {
    bool       any   = false;
    const auto bound = d.idBound();
    for (Vertex v = 0; v < bound; ++v) {
        if (!d.isAlive(v) || !d.isSpider(v)) {
            continue;
        }
        bool rescan = true;
        while (rescan) {
            rescan = false;
            for (const auto& e : d.edges(v)) {
                if (e.kind == EdgeKind::Simple && v < e.to && d.isSpider(e.to) &&
                    d.kind(v) == d.kind(e.to)) {
                    if (trace != nullptr) {
                        *trace << "FUSE " << v << " <- " << e.to << "\n";
                    }
                    d.fuseInto(v, e.to);
                    bump(report, "fuse");
                    any    = true;
                    rescan = true;
                    break;
                }
            }
        }
    }
    return any;
}

bool removeIdentitiesPass(Diagram& d, SimplifyReport* report, std::ostream* trace) {
    bool       any   = false;
    const auto bound = d.idBound();
    for (Vertex v = 0; v < bound; ++v) {
        if (!d.isAlive(v) || !d.isSpider(v) || d.degree(v) != 2 || !d.phase(v).isZero()) {
            continue;
        }
        const auto e0 = d.edges(v)[0];
        const auto e1 = d.edges(v)[1];
        if (trace != nullptr) {
            *trace << "ID " << v << " splice " << e0.to << "-" << e1.to << "\n";
        }
        d.removeVertex(v);
        d.addEdgeSmart(e0.to, e1.to, composeEdges(e0.kind, e1.kind));
        bump(report, "id");
        any = true;
    }
    return any;
}

void localComplementation(Diagram& d, Vertex v) {
    if (!d.isSpider(v) || !d.phase(v).isProperClifford() || !d.isInterior(v) ||
        !allEdgesHadamard(d, v)) {
        throw DiagramError("localComplementation: vertex is not an interior proper-Clifford "
                           "spider with Hadamard edges");
    }
    const auto ns = neighborIds(d, v);
    // center +pi/2 -> neighbors lose pi/2; center -pi/2 -> neighbors gain pi/2
    const Phase shift = d.phase(v).exact() == Rational(1, 2) ? Phase(Rational(-1, 2))
                                                             : Phase(Rational(1, 2));
    d.removeVertex(v);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        for (std::size_t j = i + 1; j < ns.size(); ++j) {
            d.addEdgeSmart(ns[i], ns[j], EdgeKind::Hadamard);
        }
    }
    for (const auto n : ns) {
        d.addPhase(n, shift);
    }
}

void pivot(Diagram& d, Vertex u, Vertex v) {
    if (!isInteriorPauli(d, u) || !isInteriorPauli(d, v) ||
        d.edgeKind(u, v) != EdgeKind::Hadamard || !allEdgesHadamard(d, u) ||
        !allEdgesHadamard(d, v)) {
        throw DiagramError("pivot: needs two interior Pauli spiders joined by a Hadamard edge");
    }
    const Phase ju = d.phase(u);
    const Phase kv = d.phase(v);

    std::vector<Vertex> exclusiveU, common, exclusiveV;
    for (const auto n : neighborIds(d, u)) {
        if (n == v) {
            continue;
        }
        if (d.connected(v, n)) {
            common.push_back(n);
        } else {
            exclusiveU.push_back(n);
        }
    }
    for (const auto n : neighborIds(d, v)) {
        if (n != u && !d.connected(u, n)) {
            exclusiveV.push_back(n);
        }
    }
    d.removeVertex(u);
    d.removeVertex(v);

    const auto toggleAcross = [&d](const std::vector<Vertex>& xs, const std::vector<Vertex>& ys) {
        for (const auto x : xs) {
            for (const auto y : ys) {
                d.addEdgeSmart(x, y, EdgeKind::Hadamard);
            }
        }
    };
    toggleAcross(exclusiveU, common);
    toggleAcross(exclusiveU, exclusiveV);
    toggleAcross(common, exclusiveV);

    for (const auto n : exclusiveU) {
        d.addPhase(n, kv);
    }
    for (const auto n : exclusiveV) {
        d.addPhase(n, ju);
    }
    const Phase commonShift = ju + kv + Phase(Rational(1));
    for (const auto n : common) {
        d.addPhase(n, commonShift);
    }
}

void boundaryPivot(Diagram& d, Vertex u, Vertex v) {
    if (!isInteriorPauli(d, u) || !allEdgesHadamard(d, u) ||
        d.edgeKind(u, v) != EdgeKind::Hadamard) {
        throw DiagramError("boundaryPivot: u must be an interior Pauli spider H-connected to v");
    }
    const bool vBoundary = touchesBoundary(d, v);
    if (!vBoundary && d.phase(v).isPauli()) {
        throw DiagramError("boundaryPivot: plain pivot applies");
    }
    // detach v from its boundaries through fresh identity spiders
    if (vBoundary) {
        for (const auto& e : std::vector<Edge>(d.edges(v).begin(), d.edges(v).end())) {
            if (!d.isBoundary(e.to)) {
                continue;
            }
            d.removeEdge(v, e.to);
            const auto buffer = d.addVertex(VertexKind::Z);
            d.addEdge(e.to, buffer, toggled(e.kind));
            d.addEdge(buffer, v, EdgeKind::Hadamard);
        }
    }
    // lift a non-Pauli phase onto a fresh gadget targeting v
    if (!d.phase(v).isPauli()) {
        const auto hub = d.addVertex(VertexKind::Z);
        const auto leg = d.addVertex(VertexKind::Z, d.phase(v));
        d.setPhase(v, Phase{});
        d.addEdge(v, hub, EdgeKind::Hadamard);
        d.addEdge(hub, leg, EdgeKind::Hadamard);
    }
    pivot(d, u, v);
}

bool gadgetFusionPass(Diagram& d, SimplifyReport* report, std::ostream* trace) {
    bool any = true;
    bool ever = false;
    while (any) {
        any = false;
        // canonicalize: a pi hub with a single phase leg flips the leg's sign
        d.forEachVertex([&](Vertex v) {
            if (!d.isSpider(v) || !d.phase(v).isPi()) {
                return;
            }
            const auto legs = phaseLegs(d, v);
            if (legs.size() == 1 && d.degree(v) > 1) {
                d.setPhase(v, Phase{});
                d.setPhase(legs[0], -d.phase(legs[0]));
                bump(report, "hub_flip");
                if (trace != nullptr) {
                    *trace << "HUBFLIP " << v << "\n";
                }
                any = true;
            }
        });
        // collect gadgets: hub -> (leg, sorted targets)
        struct GadgetInfo {
            Vertex              hub;
            Vertex              leg;
            std::vector<Vertex> targets;
        };
        std::vector<GadgetInfo> gadgets;
        d.forEachVertex([&](Vertex v) {
            if (!d.isSpider(v) || !d.phase(v).isPauli() || !allEdgesHadamard(d, v)) {
                return;
            }
            const auto legs = phaseLegs(d, v);
            if (legs.size() != 1 || d.degree(v) < 2) {
                return;
            }
            GadgetInfo g;
            g.hub = v;
            g.leg = legs[0];
            for (const auto& e : d.edges(v)) {
                if (e.to != g.leg) {
                    g.targets.push_back(e.to);
                }
            }
            gadgets.push_back(std::move(g));
        });
        // (UG): unary gadget folds into its single spider target
        for (const auto& g : gadgets) {
            if (g.targets.size() == 1 && d.isAlive(g.hub) && d.isAlive(g.leg) &&
                d.isAlive(g.targets[0]) && d.isSpider(g.targets[0]) && d.phase(g.hub).isZero() &&
                d.degree(g.hub) == 2) {
                const Phase alpha = d.phase(g.leg);
                d.addPhase(g.targets[0], alpha);
                d.removeVertex(g.leg);
                d.removeVertex(g.hub);
                bump(report, "unary_gadget");
                if (trace != nullptr) {
                    *trace << "UG hub=" << g.hub << " -> " << g.targets[0] << "\n";
                }
                any = true;
            }
        }
        if (any) {
            ever = true;
            continue; // re-collect after structural changes
        }
        // (GF): merge the first pair of gadgets sharing a target set, then
        // re-collect (a merge may retire a hub that another gadget targets)
        std::map<std::vector<Vertex>, GadgetInfo> byTargets;
        for (const auto& g : gadgets) {
            const auto it = byTargets.find(g.targets);
            if (it == byTargets.end()) {
                byTargets.emplace(g.targets, g);
                continue;
            }
            const auto& keep = it->second;
            // (-1)^k alpha + (-1)^j beta with hub phases k*pi, j*pi
            Phase alpha = d.phase(keep.leg);
            if (d.phase(keep.hub).isPi()) {
                alpha = -alpha;
            }
            Phase beta = d.phase(g.leg);
            if (d.phase(g.hub).isPi()) {
                beta = -beta;
            }
            d.setPhase(keep.hub, Phase{});
            d.setPhase(keep.leg, alpha + beta);
            d.removeVertex(g.leg);
            d.removeVertex(g.hub);
            bump(report, "gadget_fusion");
            if (trace != nullptr) {
                *trace << "GF keep=" << keep.hub << " absorb=" << g.hub << "\n";
            }
            any = true;
            break;
        }
        ever |= any;
    }
    return ever;
}

bool roundPhases(Diagram& d, double epsilon, SimplifyReport* report, std::ostream* trace) {
    bool any = false;
    d.forEachVertex([&](Vertex v) {
        if (!d.isSpider(v)) {
            return;
        }
        auto p = d.phase(v);
        if (p.roundToClifford(epsilon)) {
            if (trace != nullptr) {
                *trace << "ROUND " << v << " -> " << p.toString() << "\n";
            }
            d.setPhase(v, p);
            bump(report, "round");
            any = true;
        }
    });
    return any;
}

namespace {

bool localComplementPass(Diagram& d, SimplifyReport* report, std::ostream* trace) {
    std::vector<Vertex> matches;
    std::vector<bool>   taken(d.idBound(), false);
    d.forEachVertex([&](Vertex v) {
        if (taken[v] || !d.isSpider(v) || !d.phase(v).isProperClifford() || !d.isInterior(v) ||
            !allEdgesHadamard(d, v)) {
            return;
        }
        matches.push_back(v);
        taken[v] = true;
        for (const auto& e : d.edges(v)) {
            taken[e.to] = true;
        }
    });
    for (const auto v : matches) {
        if (trace != nullptr) {
            *trace << "LC " << v << " phase=" << d.phase(v).toString() << "\n";
        }
        localComplementation(d, v);
        bump(report, "lc");
    }
    return !matches.empty();
}

/// Plain-pivot pair admissibility: degree-1 legs may always pivot with their
/// hub; otherwise gadget-bearing hubs are preserved.
bool pivotPairAllowed(const Diagram& d, Vertex u, Vertex v) {
    if (d.degree(u) == 1 || d.degree(v) == 1) {
        return true;
    }
    return !isProtectedHub(d, u) && !isProtectedHub(d, v);
}

bool pivotPass(Diagram& d, SimplifyReport* report, std::ostream* trace) {
    struct Pair {
        Vertex u, v;
    };
    std::vector<Pair> matches;
    std::vector<bool> taken(d.idBound(), false);
    d.forEachEdge([&](Vertex u, Vertex v, EdgeKind k) {
        if (k != EdgeKind::Hadamard || taken[u] || taken[v]) {
            return;
        }
        if (!isInteriorPauli(d, u) || !isInteriorPauli(d, v) || !allEdgesHadamard(d, u) ||
            !allEdgesHadamard(d, v) || !pivotPairAllowed(d, u, v)) {
            return;
        }
        matches.push_back({u, v});
        for (const auto w : {u, v}) {
            taken[w] = true;
            for (const auto& e : d.edges(w)) {
                taken[e.to] = true;
            }
        }
    });
    for (const auto& [u, v] : matches) {
        if (trace != nullptr) {
            *trace << "P " << u << "(" << d.phase(u).toString() << ") " << v << "("
                   << d.phase(v).toString() << ")\n";
        }
        pivot(d, u, v);
        bump(report, "pivot");
    }
    return !matches.empty();
}

bool boundaryPivotPass(Diagram& d, SimplifyReport* report, std::ostream* trace) {
    struct Pair {
        Vertex u, v;
    };
    std::vector<Pair> matches;
    std::vector<bool> taken(d.idBound(), false);
    d.forEachVertex([&](Vertex u) {
        if (taken[u] || !isInteriorPauli(d, u) || !allEdgesHadamard(d, u) ||
            !phaseLegs(d, u).empty()) {
            return;
        }
        // partner: smallest neighbor that is boundary-adjacent or carries a
        // non-Pauli phase
        Vertex partner   = 0;
        bool   havePartner = false;
        for (const auto& e : d.edges(u)) {
            if (taken[e.to] || !d.isSpider(e.to) || !interSpiderEdgesHadamard(d, e.to)) {
                continue;
            }
            if (d.degree(e.to) == 1) {
                continue;
            }
            if (touchesBoundary(d, e.to) || !d.phase(e.to).isPauli()) {
                partner     = e.to;
                havePartner = true;
                break;
            }
        }
        if (!havePartner) {
            return;
        }
        matches.push_back({u, partner});
        for (const auto w : {u, partner}) {
            taken[w] = true;
            for (const auto& e : d.edges(w)) {
                taken[e.to] = true;
            }
        }
    });
    for (const auto& [u, v] : matches) {
        if (trace != nullptr) {
            *trace << "GB " << u << "(" << d.phase(u).toString() << ") " << v << "("
                   << d.phase(v).toString() << ")\n";
        }
        boundaryPivot(d, u, v);
        bump(report, "pivot_boundary");
    }
    return !matches.empty();
}

/// Last resort for an interior Pauli spider that is fenced in by protected
/// hubs: pivot it with its smallest interior-Pauli neighbor regardless of
/// gadget protection. Sound (it is a plain pivot), strictly decreasing.
bool forcedPivot(Diagram& d, SimplifyReport* report, std::ostream* trace) {
    const auto bound = d.idBound();
    for (Vertex u = 0; u < bound; ++u) {
        if (!d.isAlive(u) || !isInteriorPauli(d, u) || !allEdgesHadamard(d, u) ||
            !phaseLegs(d, u).empty()) {
            continue;
        }
        for (const auto& e : d.edges(u)) {
            if (isInteriorPauli(d, e.to) && allEdgesHadamard(d, e.to)) {
                if (trace != nullptr) {
                    *trace << "P! " << u << " " << e.to << "\n";
                }
                pivot(d, u, e.to);
                bump(report, "pivot");
                return true;
            }
        }
    }
    return false;
}

/// Deletes connected components that contain no boundary vertex (closed
/// subdiagrams are scalars, dropped by scalar-free semantics).
bool cleanupScalars(Diagram& d, SimplifyReport* report, std::ostream* trace) {
    const auto        bound = d.idBound();
    std::vector<char> state(bound, 0); // 0 unseen, 1 scalar component, 2 anchored
    bool              any = false;
    for (Vertex v = 0; v < bound; ++v) {
        if (!d.isAlive(v) || state[v] != 0) {
            continue;
        }
        std::vector<Vertex> component{v};
        bool                anchored = false;
        state[v]                     = 1;
        for (std::size_t i = 0; i < component.size(); ++i) {
            const auto w = component[i];
            if (d.isBoundary(w)) {
                anchored = true;
            }
            for (const auto& e : d.edges(w)) {
                if (state[e.to] == 0) {
                    state[e.to] = 1;
                    component.push_back(e.to);
                }
            }
        }
        if (!anchored) {
            for (const auto w : component) {
                d.removeVertex(w);
                any = true;
            }
            bump(report, "scalar_cleanup", component.size());
            if (trace != nullptr) {
                *trace << "SCALAR component of " << component.size() << " removed\n";
            }
        }
    }
    return any;
}

} // namespace

SimplifyReport fullReduce(Diagram& d, const SimplifyOptions& opts) {
    SimplifyReport report;
    d.toGraphLike();
    report.spidersBefore = d.spiderCount();

    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration<double, std::milli>(opts.timeLimitMs);
    std::size_t iter = 0;
    for (;; ++iter) {
        if (iter >= opts.maxIterations) {
            throw DiagramError("fullReduce: iteration limit exceeded");
        }
        if (opts.timeLimitMs > 0 && std::chrono::steady_clock::now() >= deadline) {
            break; // partially reduced; the checker reads it as inconclusive
        }
        bool changed = false;
        // joint fuse/identity fixpoint keeps the graph Hadamard-only before
        // the complementation rules run
        for (bool more = true; more;) {
            more = fuseSpidersPass(d, &report, opts.trace);
            more |= removeIdentitiesPass(d, &report, opts.trace);
            changed |= more;
        }
        changed |= localComplementPass(d, &report, opts.trace);
        changed |= pivotPass(d, &report, opts.trace);
        changed |= boundaryPivotPass(d, &report, opts.trace);
        changed |= gadgetFusionPass(d, &report, opts.trace);
        if (opts.roundingEnabled) {
            changed |= roundPhases(d, opts.epsilon, &report, opts.trace);
        }
        changed |= cleanupScalars(d, &report, opts.trace);
        if (!changed) {
            if (forcedPivot(d, &report, opts.trace)) {
                continue;
            }
            break;
        }
    }
    report.iterations   = iter + 1;
    report.spidersAfter = d.spiderCount();
    return report;
}

bool isGadgetHub(const Diagram& d, Vertex v) {
    if (!d.isSpider(v) || !d.phase(v).isPauli() || !d.isInterior(v) || d.degree(v) < 2) {
        return false;
    }
    return phaseLegs(d, v).size() == 1;
}

std::size_t gadgetCount(const Diagram& d) {
    std::size_t n = 0;
    d.forEachVertex([&](Vertex v) {
        if (isGadgetHub(d, v)) {
            ++n;
        }
    });
    return n;
}

bool isReducedGadgetForm(const Diagram& d) {
    bool ok = true;
    d.forEachVertex([&](Vertex v) {
        if (!ok || !d.isSpider(v)) {
            return;
        }
        if (d.kind(v) == VertexKind::X) {
            ok = false;
            return;
        }
        // removable identity
        if (d.degree(v) == 2 && d.phase(v).isZero()) {
            ok = false;
            return;
        }
        // interior Clifford spiders must play a gadget role: a Pauli hub
        // carrying at least one non-Pauli phase leg (multi-leg hubs are
        // irreducible in this rule system and may remain)
        if (d.isInterior(v) && d.phase(v).isClifford()) {
            if (!d.phase(v).isPauli() || !isProtectedHub(d, v)) {
                ok = false;
            }
        }
    });
    if (!ok) {
        return false;
    }
    d.forEachEdge([&](Vertex u, Vertex v, EdgeKind k) {
        if (d.isSpider(u) && d.isSpider(v) && k == EdgeKind::Simple) {
            ok = false;
        }
    });
    return ok;
}

} // namespace zx
