#pragma once

#include "zxec/Circuit.hpp"
#include "zxec/EquivalenceChecker.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zx {

enum class BenchFamily : std::uint8_t { Clifford, CliffordT };
enum class FaultKind : std::uint8_t { None, RemoveRandomGate, FlipRandomCnot };

struct BenchSpec {
    BenchFamily   family    = BenchFamily::CliffordT;
    std::size_t   qubits    = 2;
    std::size_t   gateCount = 0;
    std::uint64_t seed      = 0;
    FaultKind     fault     = FaultKind::None;
};

/// Deterministic pseudo-random circuit. CliffordT mix: 20% H, 20% T, 60% CX
/// (CX replaced by S on single-qubit specs); Clifford mix: uniform over
/// {H, S, CX}. Gate qubits are drawn uniformly without replacement.
[[nodiscard]] Circuit genRandom(const BenchSpec& spec);

/// Deletes one uniformly chosen gate, or swaps control and target of one
/// uniformly chosen CX. Throws when no applicable gate exists.
[[nodiscard]] Circuit injectFault(const Circuit& c, FaultKind fault, std::uint64_t seed);

/// A layout-permuted, SWAP-padded copy of `c` that stays equivalent to it as
/// a compiled artifact (tail swaps are emitted as CX triples; layout headers
/// are set accordingly).
[[nodiscard]] Circuit deriveMappedCopy(const Circuit& c, std::uint64_t seed);

struct SuiteRow {
    BenchSpec   spec;
    VerdictKind verdict;
    double      timeMs;
    std::size_t spidersBefore;
    std::size_t spidersAfter;
};

/// Checks every spec's circuit against a derived mapped copy (or a faulted
/// copy when the spec carries a fault) and streams CSV rows to `out`.
std::vector<SuiteRow> runSuite(const std::vector<BenchSpec>& specs, const CheckOptions& opts,
                               std::ostream& out, const std::string& emitDir = {},
                               std::size_t workers = 1);

[[nodiscard]] const char* familyName(BenchFamily f);
[[nodiscard]] const char* faultName(FaultKind f);

} // namespace zx
