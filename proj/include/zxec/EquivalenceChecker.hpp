#pragma once

#include "zxec/Circuit.hpp"
#include "zxec/Diagram.hpp"
#include "zxec/Simplify.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zx {

/// What residual wiring the reduced miter is expected to show.
enum class ExpectMode {
    FromHeaders, ///< derive from the circuits' declared output permutations
    Any,         ///< accept any permutation
    Identity,    ///< demand plain wires
    Explicit,    ///< match `expectedPermutation`
};

struct CheckOptions {
    SimplifyOptions          simplify;
    ExpectMode               expect = ExpectMode::FromHeaders;
    std::vector<std::size_t> expectedPermutation;
    std::size_t              oracleMaxQubits  = 10; // 0 disables the fallback
    bool                     reconstructSwaps = true;
};

enum class VerdictKind { Equivalent, EquivalentUpToPermutation, NonEquivalent, NoInformation };

[[nodiscard]] const char* verdictName(VerdictKind k);

struct Verdict {
    VerdictKind              kind = VerdictKind::NoInformation;
    std::vector<std::size_t> permutation; // residual wiring, when proven equivalent
    std::string              witness;     // distinguishing basis input, when oracle-refuted
    SimplifyReport           report;
    double                   timeMs = 0;

    [[nodiscard]] std::string toJson() const;
};

/// Replaces the listed input/output boundary vertices (by position in the
/// inputs()/outputs() lists) with X-spider states/effects: phase 0 for |0>,
/// pi for |1>. The plugged positions leave the boundary lists.
[[nodiscard]] Diagram plugAncillas(const Diagram&                           d,
                                   const std::map<std::size_t, bool>&       inputsToFix,
                                   const std::map<std::size_t, bool>&       outputsToFix);

/// adjoint(Da) composed with Db, with initial layouts encoded into wire
/// order, ancillas plugged per each circuit's mask, and composite gates
/// decomposed (plus SWAP reconstruction when enabled).
[[nodiscard]] Diagram buildMiter(const Circuit& a, const Circuit& b, const CheckOptions& opts);

/// If the diagram is nothing but boundary-to-boundary plain wires, the
/// induced input->output permutation; otherwise nullopt.
[[nodiscard]] std::optional<std::vector<std::size_t>> extractPermutation(const Diagram& d);

/// The full pipeline: plug, miter, reduce, extract; dense oracle fallback on
/// small instances when rewriting is inconclusive.
[[nodiscard]] Verdict checkEquivalence(const Circuit& a, const Circuit& b,
                                       const CheckOptions& opts = {});

} // namespace zx
