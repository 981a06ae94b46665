// Acceptance suite: every criterion prints one PASS/FAIL line. Tolerances
// and thresholds are pinned in code.

#include "Fixtures.hpp"
#include "RandomDiagrams.hpp"
#include "zxec/Bench.hpp"
#include "zxec/CircuitToDiagram.hpp"
#include "zxec/EquivalenceChecker.hpp"
#include "zxec/Oracle.hpp"
#include "zxec/QasmParser.hpp"
#include "zxec/Simplify.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

using namespace zx;
using zxtest::Rng;

namespace {

class Criterion {
public:
    Criterion(int number, std::string name) : number_(number), name_(std::move(name)) {}
    ~Criterion() {
        const bool aborted = std::uncaught_exceptions() > 0;
        std::cout << "criterion " << number_ << " (" << name_ << "): "
                  << (ok_ && !aborted ? "PASS" : "FAIL") << detail_
                  << (aborted ? " [aborted by exception]" : "") << std::endl;
    }
    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok_ = false;
            detail_ += " [" + what + "]";
        }
        EXPECT_TRUE(condition) << what;
    }

private:
    int         number_;
    std::string name_;
    bool        ok_ = true;
    std::string detail_;
};

double elapsedSeconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

// ---------------------------------------------------------------------------
// 1. rule soundness: >= 500 randomized small instances per rewrite rule agree
//    with the dense oracle up to scalar, tolerance 1e-9, under 60 s
// ---------------------------------------------------------------------------

namespace {

constexpr double kScalarTol = 1e-9;

Diagram arenaWithTargets(Rng& rng, std::vector<Vertex>& targets, std::size_t n) {
    Diagram d;
    for (std::size_t i = 0; i < n; ++i) {
        const auto t  = d.addVertex(VertexKind::Z, zxtest::randomPhase(rng));
        const auto bi = d.addBoundary();
        d.addEdge(t, bi);
        d.inputs().push_back(bi);
        const auto bo = d.addBoundary();
        d.addEdge(t, bo, EdgeKind::Hadamard);
        d.outputs().push_back(bo);
        targets.push_back(t);
    }
    for (std::size_t i = 0; i + 1 < targets.size(); ++i) {
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (zxtest::pick(rng, 2) == 0) {
                d.addEdge(targets[i], targets[j], EdgeKind::Hadamard);
            }
        }
    }
    return d;
}

std::pair<Vertex, Vertex> plantGadgetOn(Diagram& d, const std::vector<Vertex>& targets,
                                        const Phase& leg, bool hubPi) {
    const auto hub = d.addVertex(VertexKind::Z, hubPi ? Phase{Rational(1)} : Phase{});
    const auto p   = d.addVertex(VertexKind::Z, leg);
    d.addEdge(hub, p, EdgeKind::Hadamard);
    for (const auto t : targets) {
        d.addEdge(hub, t, EdgeKind::Hadamard);
    }
    return {hub, p};
}

} // namespace

TEST(Acceptance, c1RuleSoundness) {
    Criterion  crit(1, "rule soundness, 500 oracle-checked instances per rule");
    const auto t0 = std::chrono::steady_clock::now();
    Rng        rng(1001);
    constexpr int kInstances = 500;

    // (f) spider fusion
    for (int i = 0; i < kInstances; ++i) {
        std::vector<Vertex> ts;
        auto d = arenaWithTargets(rng, ts, 2 + zxtest::pick(rng, 2));
        d.addEdgeSmart(ts[0], ts[1], EdgeKind::Simple);
        const auto before = d;
        fuseSpidersPass(d);
        if (!zxtest::sameUpToScalar(d, before, kScalarTol)) {
            crit.require(false, "(f) instance " + std::to_string(i));
            break;
        }
    }
    // (id) + (hh) identity removal
    for (int i = 0; i < kInstances; ++i) {
        Diagram    d;
        const auto in  = d.addBoundary();
        const auto out = d.addBoundary();
        const auto a   = d.addVertex(VertexKind::Z, zxtest::randomPhase(rng));
        const auto id1 = d.addVertex(VertexKind::Z);
        const auto k1  = zxtest::pick(rng, 2) == 0 ? EdgeKind::Simple : EdgeKind::Hadamard;
        const auto k2  = zxtest::pick(rng, 2) == 0 ? EdgeKind::Simple : EdgeKind::Hadamard;
        d.addEdge(in, a);
        d.addEdge(a, id1, k1);
        d.addEdge(id1, out, k2);
        d.inputs().push_back(in);
        d.outputs().push_back(out);
        const auto before = d;
        removeIdentitiesPass(d);
        if (!zxtest::sameUpToScalar(d, before, kScalarTol)) {
            crit.require(false, "(id)/(hh) instance " + std::to_string(i));
            break;
        }
    }
    // (ZHH) parallel Hadamard-edge annihilation: adding an H edge on top of
    // an existing one removes both, and toggling twice is the identity
    for (int i = 0; i < kInstances; ++i) {
        std::vector<Vertex> ts;
        auto d = arenaWithTargets(rng, ts, 2 + zxtest::pick(rng, 2));
        if (const auto k = d.edgeKind(ts[0], ts[1])) {
            if (*k == EdgeKind::Simple) {
                d.removeEdge(ts[0], ts[1]);
            }
        }
        if (!d.connected(ts[0], ts[1])) {
            d.addEdge(ts[0], ts[1], EdgeKind::Hadamard);
        }
        const auto before = d;
        d.addEdgeSmart(ts[0], ts[1], EdgeKind::Hadamard); // annihilate
        if (d.connected(ts[0], ts[1])) {
            crit.require(false, "(ZHH) pair survived, instance " + std::to_string(i));
            break;
        }
        d.addEdgeSmart(ts[0], ts[1], EdgeKind::Hadamard); // restore
        if (!zxtest::sameUpToScalar(d, before, kScalarTol)) {
            crit.require(false, "(ZHH) instance " + std::to_string(i));
            break;
        }
    }
    // (LC) local complementation
    for (int i = 0; i < kInstances; ++i) {
        std::vector<Vertex> ts;
        auto d = arenaWithTargets(rng, ts, 2 + zxtest::pick(rng, 3));
        const auto center = d.addVertex(
                VertexKind::Z, Phase{Rational(zxtest::pick(rng, 2) == 0 ? 1 : 3, 2)});
        for (const auto t : ts) {
            d.addEdge(center, t, EdgeKind::Hadamard);
        }
        const auto before = d;
        localComplementation(d, center);
        if (!zxtest::sameUpToScalar(d, before, kScalarTol)) {
            crit.require(false, "(LC) instance " + std::to_string(i));
            break;
        }
    }
    // (P) pivot
    for (int i = 0; i < kInstances; ++i) {
        std::vector<Vertex> ts;
        auto d = arenaWithTargets(rng, ts, 2 + zxtest::pick(rng, 3));
        const auto u = d.addVertex(VertexKind::Z,
                                   Phase{Rational(static_cast<std::int64_t>(zxtest::pick(rng, 2)))});
        const auto v = d.addVertex(VertexKind::Z,
                                   Phase{Rational(static_cast<std::int64_t>(zxtest::pick(rng, 2)))});
        d.addEdge(u, v, EdgeKind::Hadamard);
        for (const auto t : ts) {
            const auto where = zxtest::pick(rng, 3);
            if (where == 0 || where == 2) {
                d.addEdge(u, t, EdgeKind::Hadamard);
            }
            if (where == 1 || where == 2) {
                d.addEdge(v, t, EdgeKind::Hadamard);
            }
        }
        const auto before = d;
        pivot(d, u, v);
        if (!zxtest::sameUpToScalar(d, before, kScalarTol)) {
            crit.require(false, "(P) instance " + std::to_string(i));
            break;
        }
    }
    // (GB) boundary pivot (including the gadgetizing variant)
    for (int i = 0; i < kInstances; ++i) {
        Diagram    d;
        const auto u = d.addVertex(VertexKind::Z,
                                   Phase{Rational(static_cast<std::int64_t>(zxtest::pick(rng, 2)))});
        const auto v = d.addVertex(VertexKind::Z, zxtest::randomPhase(rng));
        d.addEdge(u, v, EdgeKind::Hadamard);
        const auto b = d.addBoundary();
        d.addEdge(v, b, zxtest::pick(rng, 2) == 0 ? EdgeKind::Simple : EdgeKind::Hadamard);
        d.inputs().push_back(b);
        for (std::size_t s = 0; s < 1 + zxtest::pick(rng, 2); ++s) {
            const auto w  = d.addVertex(VertexKind::Z, zxtest::randomPhase(rng));
            const auto bw = d.addBoundary();
            d.addEdge(w, bw);
            d.outputs().push_back(bw);
            d.addEdge(u, w, EdgeKind::Hadamard);
            if (zxtest::pick(rng, 2) == 0) {
                d.addEdge(v, w, EdgeKind::Hadamard);
            }
        }
        const auto before = d;
        boundaryPivot(d, u, v);
        if (!zxtest::sameUpToScalar(d, before, kScalarTol)) {
            crit.require(false, "(GB) instance " + std::to_string(i));
            break;
        }
    }
    // (GF) gadget fusion
    for (int i = 0; i < kInstances; ++i) {
        std::vector<Vertex> ts;
        auto d = arenaWithTargets(rng, ts, 2 + zxtest::pick(rng, 2));
        plantGadgetOn(d, ts, zxtest::randomPhase(rng), zxtest::pick(rng, 2) == 0);
        plantGadgetOn(d, ts, zxtest::randomPhase(rng), zxtest::pick(rng, 2) == 0);
        const auto before = d;
        gadgetFusionPass(d);
        if (!zxtest::sameUpToScalar(d, before, kScalarTol)) {
            crit.require(false, "(GF) instance " + std::to_string(i));
            break;
        }
    }
    // (UG) unary gadget folding
    for (int i = 0; i < kInstances; ++i) {
        std::vector<Vertex> ts;
        auto d = arenaWithTargets(rng, ts, 1);
        plantGadgetOn(d, ts, zxtest::randomPhase(rng), false);
        const auto before = d;
        gadgetFusionPass(d);
        if (!zxtest::sameUpToScalar(d, before, kScalarTol)) {
            crit.require(false, "(UG) instance " + std::to_string(i));
            break;
        }
    }
    const auto elapsed = elapsedSeconds(t0);
    crit.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s exceeds 60 s");
}

// ---------------------------------------------------------------------------
// 2. Clifford completeness: 200 random Clifford circuits vs layout-permuted
//    SWAP-padded copies all reduce to a pure permutation matching the
//    expectation, under 120 s, by rewriting alone
// ---------------------------------------------------------------------------

TEST(Acceptance, c2CliffordCompleteness) {
    Criterion  crit(2, "Clifford completeness on 200 mapped self-checks");
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t successes = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        BenchSpec spec;
        spec.family    = BenchFamily::Clifford;
        spec.qubits    = 2 + i % 7;                  // n in [2, 8]
        spec.gateCount = 40 + (i * 37) % 361;        // up to 400 gates
        spec.seed      = 10'000 + i;
        const auto c      = genRandom(spec);
        const auto mapped = deriveMappedCopy(c, spec.seed * 31 + 7);

        CheckOptions opts;
        opts.oracleMaxQubits = 0; // rewriting must succeed on its own
        const auto verdict   = checkEquivalence(c, mapped, opts);
        if (verdict.kind == VerdictKind::Equivalent ||
            verdict.kind == VerdictKind::EquivalentUpToPermutation) {
            ++successes;
        }
    }
    crit.require(successes == 200, "only " + std::to_string(successes) + "/200 reduced");
    const auto elapsed = elapsedSeconds(t0);
    crit.require(elapsed < 120.0, "runtime " + std::to_string(elapsed) + " s exceeds 120 s");
}

// ---------------------------------------------------------------------------
// 3. worked examples
// ---------------------------------------------------------------------------

TEST(Acceptance, c3WorkedExamples) {
    Criterion crit(3, "worked examples: GHZ mapping, Toffoli, CNOT ancilla");

    // (a) GHZ vs compiled GHZ: equivalent up to the q1<->q2 permutation
    {
        const auto a       = parseQasm(zxtest::ghzQasm);
        const auto b       = parseQasm(zxtest::ghzMappedQasm);
        const auto verdict = checkEquivalence(a, b, {});
        crit.require(verdict.kind == VerdictKind::EquivalentUpToPermutation,
                     "GHZ pair not equivalent-up-to-permutation");
        crit.require(verdict.permutation == std::vector<std::size_t>({0, 2, 1}),
                     "GHZ residual permutation is not q1<->q2");
    }
    // (b) CCX vs its Clifford+T expansion, cross-checked by the 8x8 oracle
    {
        const auto a       = parseQasm(zxtest::ccxQasm);
        const auto b       = parseQasm(zxtest::ccxDecomposedQasm);
        const auto verdict = checkEquivalence(a, b, {});
        crit.require(verdict.kind == VerdictKind::Equivalent, "CCX decomposition not equivalent");
        crit.require(hsCheck(circuitUnitary(a), circuitUnitary(b), 1e-9).equalUpToPhase,
                     "8x8 oracle disagrees");
    }
    // (c) CNOT with control plugged |1> reduces to a single X(pi)
    {
        Circuit cnot(2);
        cnot.add(GateKind::CX, {1, 0});
        auto d = plugAncillas(circuitToDiagram(cnot), {{1, true}}, {{1, true}});
        fullReduce(d);
        bool singlePi = d.spiderCount() == 1;
        d.forEachVertex([&](Vertex v) {
            if (d.isSpider(v) && !d.phase(v).isPi()) {
                singlePi = false;
            }
        });
        Matrix x(2, 2);
        x(0, 1) = x(1, 0) = 1.0;
        crit.require(singlePi, "plugged CNOT did not reduce to one pi-spider");
        crit.require(proportional(interpretDiagram(d), x, 1e-9),
                     "plugged CNOT residual is not Pauli X");
    }
    // (d) fix_ancilla on a CNOT control reproduces [[0,1],[1,0]] exactly
    {
        Circuit cnot(2);
        cnot.add(GateKind::CX, {1, 0});
        const auto fixed = fixAncilla(circuitUnitary(cnot), 1, true);
        const bool exact = std::abs(fixed(0, 0)) == 0.0 && std::abs(fixed(1, 1)) == 0.0 &&
                           fixed(0, 1) == Complex{1, 0} && fixed(1, 0) == Complex{1, 0};
        crit.require(exact, "fix_ancilla did not reproduce the Pauli X matrix exactly");
    }
}

// ---------------------------------------------------------------------------
// 4. incompleteness regression: the ancilla-plugged multi-controlled Toffoli
//    miter reduces to a non-identity, gadget-bearing residual
// ---------------------------------------------------------------------------

TEST(Acceptance, c4IncompletenessRegression) {
    Criterion  crit(4, "incompleteness regression on the ancilla Toffoli pair");
    const auto noAnc = parseQasm(zxtest::mcxNoAncillaQasm);
    auto       anc   = parseQasm(zxtest::mcxAncillaQasm);
    anc.ancillas[4]  = false; // a0 = |0>

    auto miter = buildMiter(noAnc, anc, {});
    fullReduce(miter);
    crit.require(!miter.isWireDiagram(), "residual unexpectedly reduced to wires");
    crit.require(gadgetCount(miter) >= 1, "residual carries no phase gadgets");
    crit.require(isReducedGadgetForm(miter), "residual is not in reduced gadget form");

    CheckOptions noOracle;
    noOracle.oracleMaxQubits = 0;
    crit.require(checkEquivalence(noAnc, anc, noOracle).kind == VerdictKind::NoInformation,
                 "rewriting alone should be inconclusive");
    CheckOptions withOracle;
    withOracle.oracleMaxQubits = 10; // 2^5-dimensional check
    crit.require(checkEquivalence(noAnc, anc, withOracle).kind == VerdictKind::Equivalent,
                 "oracle failed to prove equivalence");
}

// ---------------------------------------------------------------------------
// 5. fault detection: no rewrite-path false positives; the oracle refutes
//    >= 99% of faulted instances with a basis witness
// ---------------------------------------------------------------------------

TEST(Acceptance, c5FaultDetection) {
    Criterion   crit(5, "fault detection across the random corpora");
    std::size_t total = 0, refuted = 0, falseEquivalent = 0;
    for (const auto family : {BenchFamily::Clifford, BenchFamily::CliffordT}) {
        for (const auto fault : {FaultKind::RemoveRandomGate, FaultKind::FlipRandomCnot}) {
            for (std::uint64_t i = 0; i < 25; ++i) {
                BenchSpec spec;
                spec.family    = family;
                spec.qubits    = 2 + i % 7; // n in [2, 8]
                spec.gateCount = 30 + (i * 13) % 120;
                spec.seed      = 20'000 + i;
                const auto c = genRandom(spec);
                Circuit    f;
                try {
                    f = injectFault(c, fault, spec.seed ^ 0xabcdef);
                } catch (const CircuitError&) {
                    continue; // no CX to flip in this draw
                }
                ++total;

                CheckOptions rewriteOnly;
                rewriteOnly.oracleMaxQubits = 0;
                const auto r1               = checkEquivalence(c, f, rewriteOnly);
                const auto r2               = checkEquivalence(c, f, {});
                // a rewrite-path equivalence claim is only a false positive
                // when the oracle refutes the pair (a deleted gate may be a
                // no-op up to permutation by chance)
                if ((r1.kind == VerdictKind::Equivalent ||
                     r1.kind == VerdictKind::EquivalentUpToPermutation) &&
                    r2.kind == VerdictKind::NonEquivalent) {
                    ++falseEquivalent;
                }
                if (r2.kind == VerdictKind::NonEquivalent && !r2.witness.empty()) {
                    ++refuted;
                }
            }
        }
    }
    crit.require(falseEquivalent == 0,
                 std::to_string(falseEquivalent) + " rewrite-path false positives");
    crit.require(total > 0, "no faulted instances generated");
    const double rate = static_cast<double>(refuted) / static_cast<double>(total);
    crit.require(rate >= 0.99, "oracle refutation rate " + std::to_string(rate) + " below 0.99");
}

// ---------------------------------------------------------------------------
// 6. inaccuracy handling: 1e-15 phase noise blocks the exact check and is
//    absorbed by eps = 1e-10 rounding; oracle fidelity stays >= 1 - 1e-12
// ---------------------------------------------------------------------------

TEST(Acceptance, c6InaccuracyHandling) {
    Criterion crit(6, "phase-noise rounding on a Clifford+T pair");
    // a 3-qubit Clifford+T circuit; the copy perturbs two T angles by 1e-15
    Circuit a(3);
    a.add(GateKind::H, {0});
    a.add(GateKind::T, {0});
    a.add(GateKind::CX, {0, 1});
    a.add(GateKind::T, {1});
    a.add(GateKind::CX, {1, 2});
    a.add(GateKind::T, {2});
    a.add(GateKind::H, {2});
    a.add(GateKind::CX, {0, 2});
    a.add(GateKind::T, {2});
    a.add(GateKind::H, {1});

    auto b            = a;
    b.gates[1]        = Gate{GateKind::RZ, {0}, {Phase{Rational(1, 4), 1e-15}}};
    b.gates[5]        = Gate{GateKind::RZ, {2}, {Phase{Rational(1, 4), 1e-15}}};

    CheckOptions exact;
    exact.oracleMaxQubits = 0;
    crit.require(checkEquivalence(a, b, exact).kind == VerdictKind::NoInformation,
                 "noisy pair should be inconclusive without rounding");

    CheckOptions rounding;
    rounding.oracleMaxQubits          = 0;
    rounding.simplify.roundingEnabled = true;
    rounding.simplify.epsilon         = 1e-10;
    crit.require(checkEquivalence(a, b, rounding).kind == VerdictKind::Equivalent,
                 "rounding failed to absorb 1e-15 noise");

    const auto fidelity = hsCheck(circuitUnitary(a), circuitUnitary(b), 0.0).fidelity;
    crit.require(fidelity >= 1.0 - 1e-12,
                 "oracle fidelity " + std::to_string(fidelity) + " below 1 - 1e-12");
}

// ---------------------------------------------------------------------------
// 7. scaling: median self-check time grows with log-log slope in [0.8, 2.5]
//    over gate counts 250 -> 4000 at 8 and 16 qubits
// ---------------------------------------------------------------------------

TEST(Acceptance, c7ScalingProperty) {
    Criterion crit(7, "log-log scaling slope of the self-check series");
    for (const std::size_t qubits : {std::size_t{8}, std::size_t{16}}) {
        std::vector<double> logG, logT;
        for (const std::size_t gates : {250, 500, 1000, 2000, 4000}) {
            std::vector<double> times;
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                BenchSpec spec;
                spec.family    = BenchFamily::CliffordT;
                spec.qubits    = qubits;
                spec.gateCount = gates;
                spec.seed      = 30'000 + seed;
                const auto c      = genRandom(spec);
                const auto mapped = deriveMappedCopy(c, spec.seed * 13);
                CheckOptions opts;
                opts.oracleMaxQubits = 0;
                const auto verdict   = checkEquivalence(c, mapped, opts);
                times.push_back(verdict.timeMs);
            }
            std::sort(times.begin(), times.end());
            logG.push_back(std::log(static_cast<double>(gates)));
            logT.push_back(std::log(times[times.size() / 2]));
        }
        // least-squares slope
        double meanG = 0, meanT = 0;
        for (std::size_t i = 0; i < logG.size(); ++i) {
            meanG += logG[i];
            meanT += logT[i];
        }
        meanG /= static_cast<double>(logG.size());
        meanT /= static_cast<double>(logT.size());
        double num = 0, den = 0;
        for (std::size_t i = 0; i < logG.size(); ++i) {
            num += (logG[i] - meanG) * (logT[i] - meanT);
            den += (logG[i] - meanG) * (logG[i] - meanG);
        }
        const double slope = num / den;
        std::cout << "  scaling slope at " << qubits << " qubits: " << slope << "\n";
        crit.require(slope >= 0.8 && slope <= 2.5,
                     "slope " + std::to_string(slope) + " at " + std::to_string(qubits) +
                             " qubits outside [0.8, 2.5]");
    }
}

// ---------------------------------------------------------------------------
// 8. determinism: verdicts, reports and CSVs are identical across repeated
//    runs (timing columns excluded)
// ---------------------------------------------------------------------------

namespace {

std::string csvWithoutTime(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string        line;
    while (std::getline(in, line)) {
        // drop the time_ms column (7th field) from data rows
        if (line.empty() || line[0] == '#' || line.rfind("family,", 0) == 0) {
            out << line << "\n";
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream        ss(line);
        std::string              f;
        while (std::getline(ss, f, ',')) {
            fields.push_back(f);
        }
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i == 6) {
                continue;
            }
            out << fields[i] << (i + 1 < fields.size() ? "," : "");
        }
        out << "\n";
    }
    return out.str();
}

} // namespace

TEST(Acceptance, c8Determinism) {
    Criterion crit(8, "seed-stable verdicts, reports and CSVs");

    // repeated checks produce identical verdicts, permutations and reports
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        BenchSpec spec;
        spec.family    = BenchFamily::CliffordT;
        spec.qubits    = 4;
        spec.gateCount = 80;
        spec.seed      = seed;
        const auto c      = genRandom(spec);
        const auto mapped = deriveMappedCopy(c, seed * 3);
        const auto v1     = checkEquivalence(c, mapped, {});
        const auto v2     = checkEquivalence(c, mapped, {});
        crit.require(v1.kind == v2.kind, "verdict differs across runs");
        crit.require(v1.permutation == v2.permutation, "permutation differs across runs");
        crit.require(v1.report.ruleCounts == v2.report.ruleCounts, "report differs across runs");
    }

    // reduced miters are structurally identical across runs
    {
        const auto a  = parseQasm(zxtest::mcxNoAncillaQasm);
        auto       b  = parseQasm(zxtest::mcxAncillaQasm);
        b.ancillas[4] = false;
        auto m1 = buildMiter(a, b, {});
        auto m2 = buildMiter(a, b, {});
        fullReduce(m1);
        fullReduce(m2);
        crit.require(m1.toJson() == m2.toJson(), "reduced miter JSON differs across runs");
    }

    // bench CSVs agree modulo the timing column
    {
        std::vector<BenchSpec> specs;
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            BenchSpec s;
            s.family    = BenchFamily::Clifford;
            s.qubits    = 4;
            s.gateCount = 50;
            s.seed      = seed;
            s.fault     = seed % 2 == 0 ? FaultKind::None : FaultKind::FlipRandomCnot;
            specs.push_back(s);
        }
        std::ostringstream csv1, csv2;
        runSuite(specs, {}, csv1);
        runSuite(specs, {}, csv2);
        crit.require(csvWithoutTime(csv1.str()) == csvWithoutTime(csv2.str()),
                     "CSV rows differ across runs");
    }
}
