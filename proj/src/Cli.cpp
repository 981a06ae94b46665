#include "zxec/Cli.hpp"

#include "zxec/Bench.hpp"
#include "zxec/CircuitToDiagram.hpp"
#include "zxec/EquivalenceChecker.hpp"
#include "zxec/QasmParser.hpp"
#include "zxec/Simplify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace zx {

namespace {

std::vector<std::size_t> parsePermList(const std::string& text) {
    std::vector<std::size_t> perm;
    std::stringstream        ss(text);
    std::string              part;
    while (std::getline(ss, part, ',')) {
        perm.push_back(std::stoull(part));
    }
    return perm;
}

/// "--ancilla SPEC" with SPEC = "<qubit>:<0|1>"; the qubit is a flat index
/// or a register reference like a0 / a[0]. Each spec applies to whichever
/// circuit can resolve it and must resolve in at least one.
void applyAncillaSpecs(Circuit& a, Circuit& b, const std::vector<std::string>& specs) {
    for (const auto& spec : specs) {
        const auto colon = spec.rfind(':');
        if (colon == std::string::npos || colon + 1 >= spec.size()) {
            throw CircuitError("ancilla spec must look like q:0 or a0:1");
        }
        const auto stateStr = spec.substr(colon + 1);
        if (stateStr != "0" && stateStr != "1") {
            throw CircuitError("ancilla state must be 0 or 1");
        }
        const auto name     = spec.substr(0, colon);
        bool       resolved = false;
        for (auto* c : {&a, &b}) {
            if (const auto q = c->resolveQubit(name)) {
                c->ancillas[*q] = stateStr == "1";
                resolved        = true;
            }
        }
        if (!resolved) {
            throw CircuitError("ancilla spec '" + spec + "' matches neither circuit");
        }
    }
}

struct CommonFlags {
    double      tolerance     = 1e-10;
    bool        rounding      = false;
    bool        noSwaps       = false;
    bool        json          = false;
    bool        trace         = false;
    std::size_t oracleMax     = 10;
    std::string expectPerm;
};

CheckOptions makeOptions(const CommonFlags& f, std::ostream& err) {
    CheckOptions opts;
    opts.simplify.roundingEnabled = f.rounding;
    opts.simplify.epsilon         = f.tolerance;
    opts.simplify.trace           = f.trace ? &err : nullptr;
    opts.reconstructSwaps         = !f.noSwaps;
    opts.oracleMaxQubits          = f.oracleMax;
    if (!f.expectPerm.empty()) {
        if (f.expectPerm == "any") {
            opts.expect = ExpectMode::Any;
        } else if (f.expectPerm == "identity") {
            opts.expect = ExpectMode::Identity;
        } else {
            opts.expect              = ExpectMode::Explicit;
            opts.expectedPermutation = parsePermList(f.expectPerm);
        }
    }
    return opts;
}

void printVerdictText(const Verdict& v, std::ostream& out) {
    out << verdictName(v.kind);
    if (!v.permutation.empty() && (v.kind == VerdictKind::Equivalent ||
                                   v.kind == VerdictKind::EquivalentUpToPermutation)) {
        out << " [";
        for (std::size_t i = 0; i < v.permutation.size(); ++i) {
            out << (i > 0 ? "," : "") << v.permutation[i];
        }
        out << "]";
    }
    if (!v.witness.empty()) {
        out << " witness " << v.witness;
    }
    out << " (" << v.report.spidersBefore << " -> " << v.report.spidersAfter << " spiders, "
        << v.timeMs << " ms)\n";
}

} // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ZX-calculus equivalence checker for quantum circuits"};
    app.require_subcommand(1);

    CommonFlags              flags;
    std::string              fileA, fileB, dumpPath;
    std::vector<std::string> ancillaSpecs;

    auto* check = app.add_subcommand("check", "decide equivalence of two QASM circuits");
    check->add_option("a", fileA, "first circuit")->required();
    check->add_option("b", fileB, "second circuit")->required();
    check->add_option("--ancilla", ancillaSpecs,
                      "fix a qubit to a constant state at both ends (e.g. a0:0)");
    check->add_option("--expect-perm", flags.expectPerm,
                      "expected residual permutation: comma list, 'any' or 'identity'");
    check->add_option("--tolerance", flags.tolerance, "phase rounding tolerance (radians)");
    check->add_flag("--round", flags.rounding, "round near-Clifford phases while reducing");
    check->add_flag("--no-swap-reconstruct", flags.noSwaps, "keep CX triples as written");
    check->add_option("--oracle-max", flags.oracleMax,
                      "dense oracle fallback qubit limit (0 disables)");
    check->add_flag("--json", flags.json, "machine-readable verdict");
    check->add_flag("--trace", flags.trace, "log each rewrite application to stderr");

    auto* reduce = app.add_subcommand("reduce", "reduce a circuit's diagram to gadget form");
    reduce->add_option("a", fileA, "circuit")->required();
    reduce->add_option("--dump-diagram", dumpPath, "write the reduced diagram JSON here");
    reduce->add_option("--tolerance", flags.tolerance, "phase rounding tolerance (radians)");
    reduce->add_flag("--round", flags.rounding, "round near-Clifford phases while reducing");
    reduce->add_flag("--trace", flags.trace, "log each rewrite application to stderr");

    auto* dump = app.add_subcommand("dump", "print a circuit's diagram JSON before reduction");
    dump->add_option("a", fileA, "circuit")->required();

    std::string  family = "cliffordt";
    std::size_t  qubits = 4, gates = 100, count = 1;
    std::uint64_t seed  = 1;
    std::string  faultStr = "none", emitDir, csvPath;
    std::size_t  workers  = 1;
    auto* bench = app.add_subcommand("bench", "generate and check random benchmark circuits");
    bench->add_option("--family", family, "clifford | cliffordt");
    bench->add_option("--qubits", qubits, "qubit count");
    bench->add_option("--gates", gates, "gate count");
    bench->add_option("--seed", seed, "base RNG seed");
    bench->add_option("--count", count, "number of instances (seeds seed..seed+count-1)");
    bench->add_option("--fault", faultStr, "none | remove_gate | flip_cnot");
    bench->add_option("--emit-dir", emitDir, "write generated QASM pairs here");
    bench->add_option("--csv", csvPath, "write the CSV report here instead of stdout");
    bench->add_option("--workers", workers, "parallel checks");
    bench->add_option("--oracle-max", flags.oracleMax,
                      "dense oracle fallback qubit limit (0 disables)");
    double timeoutMs = 0;
    bench->add_option("--timeout-ms", timeoutMs, "per-check reduction time limit (0 = none)");

    std::vector<std::string> cliArgs = args;
    std::reverse(cliArgs.begin(), cliArgs.end());
    try {
        app.parse(cliArgs);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (check->parsed()) {
            const auto opts = makeOptions(flags, err); // flags validated before file I/O
            auto       a    = parseQasmFile(fileA, &err);
            auto       b    = parseQasmFile(fileB, &err);
            applyAncillaSpecs(a, b, ancillaSpecs);
            const auto verdict = checkEquivalence(a, b, opts);
            if (flags.json) {
                out << verdict.toJson() << "\n";
            } else {
                printVerdictText(verdict, out);
            }
            switch (verdict.kind) {
            case VerdictKind::Equivalent:
            case VerdictKind::EquivalentUpToPermutation: return 0;
            case VerdictKind::NonEquivalent: return 2;
            case VerdictKind::NoInformation: return 3;
            }
        }
        if (reduce->parsed()) {
            const auto c = parseQasmFile(fileA, &err);
            auto       d = circuitToDiagram(reconstructSwaps(decomposeComposites(c)));
            SimplifyOptions sopts;
            sopts.roundingEnabled = flags.rounding;
            sopts.epsilon         = flags.tolerance;
            sopts.trace           = flags.trace ? &err : nullptr;
            const auto report     = fullReduce(d, sopts);
            out << "reduced " << report.spidersBefore << " -> " << report.spidersAfter
                << " spiders in " << report.iterations << " iterations\n";
            if (!dumpPath.empty()) {
                std::ofstream f(dumpPath);
                if (!f) {
                    throw CircuitError("cannot write '" + dumpPath + "'");
                }
                f << d.toJson() << "\n";
            } else {
                out << d.toJson() << "\n";
            }
            return 0;
        }
        if (dump->parsed()) {
            const auto c = parseQasmFile(fileA, &err);
            const auto d = circuitToDiagram(reconstructSwaps(decomposeComposites(c)));
            out << d.toJson() << "\n";
            return 0;
        }
        if (bench->parsed()) {
            BenchSpec base;
            if (family == "clifford") {
                base.family = BenchFamily::Clifford;
            } else if (family == "cliffordt") {
                base.family = BenchFamily::CliffordT;
            } else {
                throw CircuitError("unknown family '" + family + "'");
            }
            if (faultStr == "none") {
                base.fault = FaultKind::None;
            } else if (faultStr == "remove_gate") {
                base.fault = FaultKind::RemoveRandomGate;
            } else if (faultStr == "flip_cnot") {
                base.fault = FaultKind::FlipRandomCnot;
            } else {
                throw CircuitError("unknown fault '" + faultStr + "'");
            }
            base.qubits    = qubits;
            base.gateCount = gates;
            std::vector<BenchSpec> specs;
            for (std::size_t i = 0; i < count; ++i) {
                auto s = base;
                s.seed = seed + i;
                specs.push_back(s);
            }
            auto opts                 = makeOptions(flags, err);
            opts.simplify.timeLimitMs = timeoutMs;
            if (!csvPath.empty()) {
                std::ofstream f(csvPath);
                if (!f) {
                    throw CircuitError("cannot write '" + csvPath + "'");
                }
                runSuite(specs, opts, f, emitDir, workers);
            } else {
                runSuite(specs, opts, out, emitDir, workers);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace zx
