#pragma once

#include "zxec/Diagram.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>

namespace zx {

struct SimplifyOptions {
    bool          roundingEnabled = false;
    double        epsilon         = 1e-10;
    std::size_t   maxIterations   = 1000;
    double        timeLimitMs     = 0; // 0 = unlimited; expiry stops the reduction early
    std::ostream* trace           = nullptr; // one line per rule application when set
};

struct SimplifyReport {
    std::map<std::string, std::size_t> ruleCounts;
    std::size_t                        iterations    = 0;
    std::size_t                        spidersBefore = 0;
    std::size_t                        spidersAfter  = 0;

    [[nodiscard]] std::size_t total() const;
};

// --- individual rules ------------------------------------------------------
//
// The passes assume a graph-like diagram (Z-spiders, Hadamard inter-spider
// edges). "Interior" means not adjacent to a boundary vertex.

/// (f): fuses away every plain inter-spider edge.
bool fuseSpidersPass(Diagram& d, SimplifyReport* report = nullptr, std::ostream* trace = nullptr);

/// (id)+(hh): deletes degree-2 phase-0 spiders, splicing their edges with
/// Hadamard-parity composition.
bool removeIdentitiesPass(Diagram& d, SimplifyReport* report = nullptr,
                          std::ostream* trace = nullptr);

/// (LC) on one vertex: v must be an interior proper-Clifford spider.
void localComplementation(Diagram& d, Vertex v);

/// (P) on one Hadamard edge: u, v must be interior Pauli spiders.
void pivot(Diagram& d, Vertex u, Vertex v);

/// (GB): u interior Pauli; v either carries a non-Pauli phase or touches a
/// boundary. Buffers v away from its boundaries, extracts a non-Pauli phase
/// as a gadget, then pivots (u, v).
void boundaryPivot(Diagram& d, Vertex u, Vertex v);

/// (GF)+(UG): merges phase gadgets on identical target sets and folds unary
/// gadgets into their target.
bool gadgetFusionPass(Diagram& d, SimplifyReport* report = nullptr, std::ostream* trace = nullptr);

/// Snaps every spider phase within epsilon of a multiple of pi/2 to it.
bool roundPhases(Diagram& d, double epsilon, SimplifyReport* report = nullptr,
                 std::ostream* trace = nullptr);

// --- driver ----------------------------------------------------------------

/// Drives the diagram to reduced gadget form: converts to graph-like, then
/// iterates fuse / identity-removal / (LC) / (P) / (GB) / gadget fusion
/// (and rounding when enabled) to a fixpoint. Deterministic: candidates are
/// processed in ascending vertex-id order.
SimplifyReport fullReduce(Diagram& d, const SimplifyOptions& opts = {});

/// Fixpoint predicate for reduced gadget form: no plain inter-spider edge,
/// no parallel Hadamard edges (structural), no removable identity, and no
/// interior Clifford spider without a gadget role.
[[nodiscard]] bool isReducedGadgetForm(const Diagram& d);

/// True when `v` is the hub of a phase gadget: an interior Pauli spider with
/// exactly one degree-1 Hadamard neighbor (the phase spider).
[[nodiscard]] bool isGadgetHub(const Diagram& d, Vertex v);

/// Number of phase gadgets currently in the diagram.
[[nodiscard]] std::size_t gadgetCount(const Diagram& d);

} // namespace zx
