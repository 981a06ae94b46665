#include "zxec/Bench.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

namespace zx {

namespace {

/// std::uniform_int_distribution is implementation-defined; a plain modulo
/// draw keeps generated circuits identical everywhere.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return rng() % bound; }

std::pair<std::size_t, std::size_t> drawPair(std::mt19937_64& rng, std::size_t n) {
    const auto a = draw(rng, n);
    auto       b = draw(rng, n - 1);
    if (b >= a) {
        ++b;
    }
    return {a, b};
}

} // namespace

const char* familyName(BenchFamily f) {
    return f == BenchFamily::Clifford ? "clifford" : "cliffordt";
}

const char* faultName(FaultKind f) {
    switch (f) {
    case FaultKind::None: return "none";
    case FaultKind::RemoveRandomGate: return "remove_gate";
    case FaultKind::FlipRandomCnot: return "flip_cnot";
    }
    return "?";
}

Circuit genRandom(const BenchSpec& spec) {
    if (spec.qubits < 1) {
        throw CircuitError("genRandom: need at least one qubit");
    }
    std::mt19937_64 rng(spec.seed);
    Circuit         c(spec.qubits);
    for (std::size_t i = 0; i < spec.gateCount; ++i) {
        if (spec.family == BenchFamily::CliffordT) {
            const auto roll = draw(rng, 100);
            if (roll < 20) {
                c.add(GateKind::H, {draw(rng, spec.qubits)});
            } else if (roll < 40) {
                c.add(GateKind::T, {draw(rng, spec.qubits)});
            } else if (spec.qubits == 1) {
                c.add(GateKind::S, {draw(rng, spec.qubits)});
            } else {
                const auto [a, b] = drawPair(rng, spec.qubits);
                c.add(GateKind::CX, {a, b});
            }
        } else {
            const auto roll = draw(rng, 3);
            if (roll == 0) {
                c.add(GateKind::H, {draw(rng, spec.qubits)});
            } else if (roll == 1) {
                c.add(GateKind::S, {draw(rng, spec.qubits)});
            } else if (spec.qubits == 1) {
                c.add(GateKind::S, {draw(rng, spec.qubits)});
            } else {
                const auto [a, b] = drawPair(rng, spec.qubits);
                c.add(GateKind::CX, {a, b});
            }
        }
    }
    return c;
}

Circuit injectFault(const Circuit& c, FaultKind fault, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Circuit         out = c;
    switch (fault) {
    case FaultKind::None:
        break;
    case FaultKind::RemoveRandomGate: {
        if (c.gates.empty()) {
            throw CircuitError("injectFault: cannot remove a gate from an empty circuit");
        }
        out.gates.erase(out.gates.begin() +
                        static_cast<std::ptrdiff_t>(draw(rng, c.gates.size())));
        break;
    }
    case FaultKind::FlipRandomCnot: {
        std::vector<std::size_t> cxs;
        for (std::size_t i = 0; i < c.gates.size(); ++i) {
            if (c.gates[i].kind == GateKind::CX) {
                cxs.push_back(i);
            }
        }
        if (cxs.empty()) {
            throw CircuitError("injectFault: no CX gate to flip");
        }
        auto& g = out.gates[cxs[draw(rng, cxs.size())]];
        std::swap(g.qubits[0], g.qubits[1]);
        break;
    }
    }
    return out;
}

Circuit deriveMappedCopy(const Circuit& c, std::uint64_t seed) {
    if (c.hasNonTrivialLayout()) {
        throw CircuitError("deriveMappedCopy: source circuit must carry identity layouts");
    }
    std::mt19937_64 rng(seed);
    const auto      n = c.numQubits;
    Circuit         out(n);

    // random initial layout: wire p starts holding logical layout[p]
    std::vector<std::size_t> layout(n);
    for (std::size_t i = 0; i < n; ++i) {
        layout[i] = i;
    }
    if (n > 1) {
        for (std::size_t i = n - 1; i > 0; --i) {
            std::swap(layout[i], layout[draw(rng, i + 1)]);
        }
    }
    out.initialLayout = layout;
    std::vector<std::size_t> wireOfLogical(n);
    for (std::size_t p = 0; p < n; ++p) {
        wireOfLogical[layout[p]] = p;
    }
    for (const auto& g : c.gates) {
        Gate mapped = g;
        for (auto& q : mapped.qubits) {
            q = wireOfLogical[q];
        }
        out.gates.push_back(std::move(mapped));
    }

    // SWAP tail, emitted as CX triples; track where each logical ends up
    std::vector<std::size_t> content = layout; // wire p currently holds content[p]
    const auto               swaps   = n > 1 ? 1 + draw(rng, 3) : 0;
    for (std::size_t s = 0; s < swaps; ++s) {
        const auto [a, b] = drawPair(rng, n);
        out.add(GateKind::CX, {a, b});
        out.add(GateKind::CX, {b, a});
        out.add(GateKind::CX, {a, b});
        std::swap(content[a], content[b]);
    }
    out.declareOutputPermutation(content);
    return out;
}

std::vector<SuiteRow> runSuite(const std::vector<BenchSpec>& specs, const CheckOptions& opts,
                               std::ostream& out, const std::string& emitDir,
                               std::size_t workers) {
    std::vector<SuiteRow> rows(specs.size());
    const auto            runOne = [&](std::size_t idx) {
        const auto& spec     = specs[idx];
        const auto  original = genRandom(spec);
        Circuit     other;
        if (spec.fault == FaultKind::None) {
            other = deriveMappedCopy(original, spec.seed ^ 0x9e3779b97f4a7c15ULL);
        } else {
            other = injectFault(original, spec.fault, spec.seed ^ 0x9e3779b97f4a7c15ULL);
        }
        if (!emitDir.empty()) {
            const auto base = std::string(familyName(spec.family)) + "_q" +
                              std::to_string(spec.qubits) + "_g" + std::to_string(spec.gateCount) +
                              "_s" + std::to_string(spec.seed) + "_" + faultName(spec.fault);
            std::ofstream(std::filesystem::path(emitDir) / (base + "_a.qasm")) << original.toQasm();
            std::ofstream(std::filesystem::path(emitDir) / (base + "_b.qasm")) << other.toQasm();
        }
        const auto verdict = checkEquivalence(original, other, opts);
        rows[idx] = SuiteRow{spec, verdict.kind, verdict.timeMs, verdict.report.spidersBefore,
                             verdict.report.spidersAfter};
    };

    if (workers <= 1 || specs.size() <= 1) {
        for (std::size_t i = 0; i < specs.size(); ++i) {
            runOne(i);
        }
    } else {
        std::vector<std::thread> pool;
        std::mutex               mtx;
        std::size_t              next = 0;
        for (std::size_t w = 0; w < std::min(workers, specs.size()); ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t idx;
                    {
                        const std::lock_guard lock(mtx);
                        if (next >= specs.size()) {
                            return;
                        }
                        idx = next++;
                    }
                    runOne(idx);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    out << "# generator: clifford=uniform{h,s,cx} cliffordt={h:0.2,t:0.2,cx:0.6}\n";
    out << "family,qubits,gates,seed,fault,verdict,time_ms,spiders_before,spiders_after\n";
    for (const auto& r : rows) {
        out << familyName(r.spec.family) << "," << r.spec.qubits << "," << r.spec.gateCount << ","
            << r.spec.seed << "," << faultName(r.spec.fault) << "," << verdictName(r.verdict)
            << "," << r.timeMs << "," << r.spidersBefore << "," << r.spidersAfter << "\n";
    }
    return rows;
}

} // namespace zx
