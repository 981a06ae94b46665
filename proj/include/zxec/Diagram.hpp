#pragma once

#include "zxec/Phase.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zx {

using Vertex = std::uint32_t;

enum class VertexKind : std::uint8_t { Boundary, Z, X };
enum class EdgeKind : std::uint8_t { Simple, Hadamard };

[[nodiscard]] constexpr EdgeKind composeEdges(EdgeKind a, EdgeKind b) noexcept {
    return a == b ? EdgeKind::Simple : EdgeKind::Hadamard;
}
[[nodiscard]] constexpr EdgeKind toggled(EdgeKind k) noexcept {
    return k == EdgeKind::Simple ? EdgeKind::Hadamard : EdgeKind::Simple;
}

struct VertexData {
    VertexKind kind;
    Phase      phase;
};

struct Edge {
    Vertex   to;
    EdgeKind kind;
};

class DiagramError : public std::runtime_error {
public:
    explicit DiagramError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An open graph of spiders and boundary vertices. Vertex ids are allocated
/// monotonically and never reused, so ascending-id iteration is a stable,
/// reproducible order. Edges are undirected, at most one per vertex pair;
/// addEdgeSmart resolves parallels and self-loops eagerly.
class Diagram {
public:
    Diagram() = default;

    /// n parallel bare wires (input i connected to output i).
    static Diagram identity(std::size_t nWires);

    [[nodiscard]] std::size_t vertexCount() const noexcept { return nVertices_; }
    [[nodiscard]] std::size_t edgeCount() const noexcept { return nEdges_; }
    [[nodiscard]] std::size_t spiderCount() const noexcept;
    [[nodiscard]] Vertex      idBound() const noexcept { return static_cast<Vertex>(data_.size()); }

    [[nodiscard]] bool isAlive(Vertex v) const noexcept {
        return v < data_.size() && data_[v].has_value();
    }
    [[nodiscard]] const VertexData& vdata(Vertex v) const { return *data_.at(v); }
    [[nodiscard]] VertexKind        kind(Vertex v) const { return data_.at(v)->kind; }
    [[nodiscard]] const Phase&      phase(Vertex v) const { return data_.at(v)->phase; }
    void                            setPhase(Vertex v, Phase p) { data_.at(v)->phase = std::move(p); }
    void                            addPhase(Vertex v, const Phase& p) { data_.at(v)->phase += p; }
    void                            setKind(Vertex v, VertexKind k) { data_.at(v)->kind = k; }

    [[nodiscard]] bool isBoundary(Vertex v) const { return kind(v) == VertexKind::Boundary; }
    [[nodiscard]] bool isSpider(Vertex v) const { return kind(v) != VertexKind::Boundary; }
    /// A spider not adjacent to any boundary vertex.
    [[nodiscard]] bool isInterior(Vertex v) const;

    [[nodiscard]] const std::vector<Edge>& edges(Vertex v) const { return adj_.at(v); }
    [[nodiscard]] std::size_t              degree(Vertex v) const { return adj_.at(v).size(); }
    [[nodiscard]] std::optional<EdgeKind>  edgeKind(Vertex u, Vertex v) const;
    [[nodiscard]] bool                     connected(Vertex u, Vertex v) const { return edgeKind(u, v).has_value(); }

    [[nodiscard]] const std::vector<Vertex>& inputs() const noexcept { return inputs_; }
    [[nodiscard]] const std::vector<Vertex>& outputs() const noexcept { return outputs_; }
    std::vector<Vertex>&                     inputs() noexcept { return inputs_; }
    std::vector<Vertex>&                     outputs() noexcept { return outputs_; }

    Vertex addVertex(VertexKind kind, Phase phase = {});
    Vertex addBoundary() { return addVertex(VertexKind::Boundary); }

    /// Plain insertion; throws if the edge already exists or violates a
    /// boundary degree constraint.
    void addEdge(Vertex u, Vertex v, EdgeKind kind = EdgeKind::Simple);

    /// Insertion with eager resolution: parallel Hadamard pairs between
    /// same-colored spiders annihilate, parallel plain edges are idempotent,
    /// mixed parallels fuse the endpoints, plain self-loops vanish and
    /// Hadamard self-loops add pi to the spider phase. Parallel edges between
    /// differently colored spiders are resolved by color-changing one side.
    void addEdgeSmart(Vertex u, Vertex v, EdgeKind kind);

    void removeEdge(Vertex u, Vertex v);
    void removeVertex(Vertex v);

    /// Merges spider `v` into spider `u` (spider fusion: phases add, edges
    /// migrate through addEdgeSmart). Any parallel connection between the two
    /// resolves via the self-loop rules.
    void fuseInto(Vertex u, Vertex v);

    /// Turns spider `v` into the other color, toggling every incident edge.
    void colorChange(Vertex v);

    /// Swapped inputs/outputs and negated spider phases; ids are preserved.
    [[nodiscard]] Diagram adjoint() const;

    /// Wire-splice composition: `this` first, then `rhs`. Requires
    /// |outputs()| == |rhs.inputs()|.
    [[nodiscard]] Diagram compose(const Diagram& rhs) const;

    /// Disjoint union with inputs/outputs concatenated, `this` first.
    [[nodiscard]] Diagram tensor(const Diagram& rhs) const;

    /// Rewrites in place to graph-like form: Z-spiders only, Hadamard-only
    /// inter-spider edges, no parallels or self-loops, every input/output
    /// attached to its own Z-spider through a plain wire segment. Bare
    /// boundary-to-boundary wires are left untouched.
    void toGraphLike();

    /// The four graph-like conditions, with bare wires accepted as the
    /// degenerate case. `strictBoundary` additionally demands plain boundary
    /// wire segments (the form toGraphLike establishes).
    [[nodiscard]] bool isGraphLike(bool strictBoundary = false) const;

    /// True when the diagram is nothing but boundary-to-boundary wires.
    [[nodiscard]] bool isWireDiagram() const;

    [[nodiscard]] std::string toJson() const;
    static Diagram            fromJson(const std::string& text);

    /// Ascending-id iteration over live vertices.
    template <typename F>
    void forEachVertex(F&& f) const {
        for (Vertex v = 0; v < data_.size(); ++v) {
            if (data_[v].has_value()) {
                f(v);
            }
        }
    }

    /// Ascending (u < v) iteration over live edges.
    template <typename F>
    void forEachEdge(F&& f) const {
        for (Vertex v = 0; v < data_.size(); ++v) {
            if (!data_[v].has_value()) {
                continue;
            }
            for (const auto& e : adj_[v]) {
                if (v < e.to) {
                    f(v, e.to, e.kind);
                }
            }
        }
    }

private:
    std::vector<std::optional<VertexData>> data_;
    std::vector<std::vector<Edge>>         adj_; // sorted by neighbor id
    std::vector<Vertex>                    inputs_;
    std::vector<Vertex>                    outputs_;
    std::vector<Vertex>                    mergedInto_; // forwarding for fused-away spiders
    std::size_t                            nVertices_ = 0;
    std::size_t                            nEdges_    = 0;

    /// Follows fusion forwarding to the live representative of `v`.
    [[nodiscard]] Vertex representative(Vertex v) const;

    void insertHalfEdge(Vertex from, Vertex to, EdgeKind kind);
    void eraseHalfEdge(Vertex from, Vertex to);
    void checkAlive(Vertex v, const char* what) const;

    /// Appends a copy of `other`'s vertices/edges with ids shifted by the
    /// current id bound; returns the shift.
    Vertex absorb(const Diagram& other);
};

} // namespace zx
