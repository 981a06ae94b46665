#include "zxec/Diagram.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace zx {

Diagram Diagram::identity(std::size_t nWires) {
    Diagram d;
    for (std::size_t i = 0; i < nWires; ++i) {
        const auto in  = d.addBoundary();
        const auto out = d.addBoundary();
        d.addEdge(in, out, EdgeKind::Simple);
        d.inputs_.push_back(in);
        d.outputs_.push_back(out);
    }
    return d;
}

std::size_t Diagram::spiderCount() const noexcept {
    std::size_t n = 0;
    for (const auto& vd : data_) {
        if (vd.has_value() && vd->kind != VertexKind::Boundary) {
            ++n;
        }
    }
    return n;
}

bool Diagram::isInterior(Vertex v) const {
    if (!isSpider(v)) {
        return false;
    }
    for (const auto& e : adj_[v]) {
        if (isBoundary(e.to)) {
            return false;
        }
    }
    return true;
}

std::optional<EdgeKind> Diagram::edgeKind(Vertex u, Vertex v) const {
    checkAlive(u, "edgeKind");
    checkAlive(v, "edgeKind");
    const auto& es = adj_[u];
    const auto  it = std::lower_bound(es.begin(), es.end(), v,
                                      [](const Edge& e, Vertex w) { return e.to < w; });
    if (it != es.end() && it->to == v) {
        return it->kind;
    }
    return std::nullopt;
}

Vertex Diagram::addVertex(VertexKind kind, Phase phase) {
    const auto id = static_cast<Vertex>(data_.size());
    data_.emplace_back(VertexData{kind, std::move(phase)});
    adj_.emplace_back();
    mergedInto_.push_back(id);
    ++nVertices_;
    return id;
}

Vertex Diagram::representative(Vertex v) const {
    while (mergedInto_[v] != v) {
        v = mergedInto_[v];
    }
    return v;
}

void Diagram::insertHalfEdge(Vertex from, Vertex to, EdgeKind kind) {
    auto&      es = adj_[from];
    const auto it = std::lower_bound(es.begin(), es.end(), to,
                                     [](const Edge& e, Vertex w) { return e.to < w; });
    es.insert(it, Edge{to, kind});
}

void Diagram::eraseHalfEdge(Vertex from, Vertex to) {
    auto&      es = adj_[from];
    const auto it = std::lower_bound(es.begin(), es.end(), to,
                                     [](const Edge& e, Vertex w) { return e.to < w; });
    if (it == es.end() || it->to != to) {
        throw DiagramError("no such edge");
    }
    es.erase(it);
}

void Diagram::checkAlive(Vertex v, const char* what) const {
    if (!isAlive(v)) {
        throw DiagramError(std::string(what) + ": unknown vertex id " + std::to_string(v));
    }
}

void Diagram::addEdge(Vertex u, Vertex v, EdgeKind kind) {
    checkAlive(u, "addEdge");
    checkAlive(v, "addEdge");
    if (u == v) {
        throw DiagramError("addEdge: self-loop; use addEdgeSmart");
    }
    if (edgeKind(u, v).has_value()) {
        throw DiagramError("addEdge: edge already present; use addEdgeSmart");
    }
    if ((isBoundary(u) && degree(u) == 1) || (isBoundary(v) && degree(v) == 1)) {
        throw DiagramError("addEdge: boundary vertex degree must stay 1");
    }
    insertHalfEdge(u, v, kind);
    insertHalfEdge(v, u, kind);
    ++nEdges_;
}

void Diagram::addEdgeSmart(Vertex u, Vertex v, EdgeKind k) {
    checkAlive(u, "addEdgeSmart");
    checkAlive(v, "addEdgeSmart");
    if (u == v) {
        if (!isSpider(u)) {
            throw DiagramError("addEdgeSmart: self-loop on boundary vertex");
        }
        // plain self-loop: drop; Hadamard self-loop: drop and add pi
        if (k == EdgeKind::Hadamard) {
            addPhase(u, Phase(Rational(1)));
        }
        return;
    }
    const auto existing = edgeKind(u, v);
    if (!existing.has_value()) {
        addEdge(u, v, k);
        return;
    }
    if (!isSpider(u) || !isSpider(v)) {
        throw DiagramError("addEdgeSmart: parallel edge on boundary vertex");
    }
    if (kind(u) != kind(v)) {
        // resolve mixed colors locally via a color change, then recurse
        colorChange(kind(u) == VertexKind::X ? u : v);
        addEdgeSmart(u, v, toggled(k));
        return;
    }
    // same-colored spiders
    if (*existing == EdgeKind::Hadamard && k == EdgeKind::Hadamard) {
        removeEdge(u, v); // parallel Hadamard edges annihilate
        return;
    }
    if (*existing == EdgeKind::Simple && k == EdgeKind::Simple) {
        return; // idempotent
    }
    // one plain, one Hadamard: fusing along the plain edge leaves a Hadamard
    // self-loop, i.e. an extra pi
    if (*existing == EdgeKind::Hadamard) {
        removeEdge(u, v);
        addEdge(u, v, EdgeKind::Simple);
    }
    const auto keep = std::min(u, v);
    addPhase(keep, Phase(Rational(1)));
    fuseInto(keep, std::max(u, v));
}

void Diagram::removeEdge(Vertex u, Vertex v) {
    checkAlive(u, "removeEdge");
    checkAlive(v, "removeEdge");
    eraseHalfEdge(u, v);
    eraseHalfEdge(v, u);
    --nEdges_;
}

void Diagram::removeVertex(Vertex v) {
    checkAlive(v, "removeVertex");
    for (const auto& e : adj_[v]) {
        eraseHalfEdge(e.to, v);
        --nEdges_;
    }
    adj_[v].clear();
    data_[v].reset();
    --nVertices_;
    const auto drop = [v](std::vector<Vertex>& io) {
        io.erase(std::remove(io.begin(), io.end(), v), io.end());
    };
    drop(inputs_);
    drop(outputs_);
}

void Diagram::fuseInto(Vertex u, Vertex v) {
    checkAlive(u, "fuseInto");
    checkAlive(v, "fuseInto");
    if (u == v || !isSpider(u) || !isSpider(v) || kind(u) != kind(v)) {
        throw DiagramError("fuseInto: needs two distinct same-colored spiders");
    }
    addPhase(u, phase(v));
    // fully detach v first, then replay its edges onto u; nested fusions may
    // retire vertices mid-replay, so edges are re-targeted via representatives
    const auto ves = adj_[v];
    for (const auto& e : ves) {
        removeEdge(v, e.to);
    }
    removeVertex(v);
    mergedInto_[v] = u;
    for (const auto& e : ves) {
        const auto self   = representative(u);
        const auto target = representative(e.to);
        if (target == self) {
            if (e.kind == EdgeKind::Hadamard) {
                addPhase(self, Phase(Rational(1)));
            }
            continue;
        }
        addEdgeSmart(self, target, e.kind);
    }
}

void Diagram::colorChange(Vertex v) {
    checkAlive(v, "colorChange");
    if (!isSpider(v)) {
        throw DiagramError("colorChange: boundary vertex");
    }
    setKind(v, kind(v) == VertexKind::Z ? VertexKind::X : VertexKind::Z);
    for (auto& e : adj_[v]) {
        e.kind = toggled(e.kind);
        auto& back = adj_[e.to];
        const auto it = std::lower_bound(back.begin(), back.end(), v,
                                         [](const Edge& ed, Vertex w) { return ed.to < w; });
        it->kind = e.kind;
    }
}

Diagram Diagram::adjoint() const {
    Diagram d = *this;
    std::swap(d.inputs_, d.outputs_);
    for (auto& vd : d.data_) {
        if (vd.has_value() && vd->kind != VertexKind::Boundary) {
            vd->phase = -vd->phase;
        }
    }
    return d;
}

Vertex Diagram::absorb(const Diagram& other) {
    const auto shift = idBound();
    data_.reserve(data_.size() + other.data_.size());
    adj_.reserve(adj_.size() + other.adj_.size());
    for (Vertex v = 0; v < other.data_.size(); ++v) {
        data_.push_back(other.data_[v]);
        auto es = other.adj_[v];
        for (auto& e : es) {
            e.to += shift;
        }
        adj_.push_back(std::move(es));
        mergedInto_.push_back(other.mergedInto_[v] + shift);
    }
    nVertices_ += other.nVertices_;
    nEdges_ += other.nEdges_;
    return shift;
}

Diagram Diagram::compose(const Diagram& rhs) const {
    if (outputs_.size() != rhs.inputs_.size()) {
        throw DiagramError("compose: arity mismatch (" + std::to_string(outputs_.size()) +
                           " outputs vs " + std::to_string(rhs.inputs_.size()) + " inputs)");
    }
    Diagram    d     = *this;
    const auto shift = d.absorb(rhs);

    std::vector<Vertex> lhsOuts = d.outputs_;
    std::vector<Vertex> rhsIns;
    rhsIns.reserve(rhs.inputs_.size());
    for (const auto v : rhs.inputs_) {
        rhsIns.push_back(v + shift);
    }
    d.outputs_.clear();
    for (const auto v : rhs.outputs_) {
        d.outputs_.push_back(v + shift);
    }

    for (std::size_t i = 0; i < lhsOuts.size(); ++i) {
        const auto a = lhsOuts[i];
        const auto b = rhsIns[i];
        // read the single stub edge of each boundary vertex
        const auto [an, ak] = std::pair{d.adj_[a][0].to, d.adj_[a][0].kind};
        const auto [bn, bk] = std::pair{d.adj_[b][0].to, d.adj_[b][0].kind};
        d.removeVertex(a);
        if (bn == a) {
            // the two boundaries were directly wired to each other: a closed
            // loop, i.e. a dropped scalar
            d.removeVertex(b);
            continue;
        }
        d.removeVertex(b);
        if (an == b) {
            continue; // same loop, seen from the other side
        }
        if (an == bn) {
            d.addEdgeSmart(an, an, composeEdges(ak, bk));
        } else {
            d.addEdgeSmart(an, bn, composeEdges(ak, bk));
        }
    }
    return d;
}

Diagram Diagram::tensor(const Diagram& rhs) const {
    Diagram    d     = *this;
    const auto shift = d.absorb(rhs);
    for (const auto v : rhs.inputs_) {
        d.inputs_.push_back(v + shift);
    }
    for (const auto v : rhs.outputs_) {
        d.outputs_.push_back(v + shift);
    }
    return d;
}

void Diagram::toGraphLike() {
    // 1. color-change every X-spider
    const auto bound = idBound();
    for (Vertex v = 0; v < bound; ++v) {
        if (isAlive(v) && kind(v) == VertexKind::X) {
            colorChange(v);
        }
    }
    // 2. fuse away plain inter-spider edges
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < idBound() && !changed; ++v) {
            if (!isAlive(v) || !isSpider(v)) {
                continue;
            }
            for (const auto& e : adj_[v]) {
                if (e.kind == EdgeKind::Simple && isSpider(e.to)) {
                    fuseInto(std::min(v, e.to), std::max(v, e.to));
                    changed = true;
                    break;
                }
            }
        }
    }
    // 3. boundary conditions: each input/output gets its own spider, attached
    //    through a plain wire segment
    std::vector<bool> claimed(idBound(), false);
    const auto fixBoundary = [this, &claimed](Vertex b) {
        const auto stub = adj_[b][0];
        if (isBoundary(stub.to)) {
            if (stub.kind == EdgeKind::Simple) {
                return; // bare wire, degenerate identity
            }
            // explicit Hadamard wire: B -S- s -H- t -S- B
            const auto s = addVertex(VertexKind::Z);
            const auto t = addVertex(VertexKind::Z);
            removeEdge(b, stub.to);
            addEdge(b, s, EdgeKind::Simple);
            addEdge(s, t, EdgeKind::Hadamard);
            addEdge(t, stub.to, EdgeKind::Simple);
            claimed.resize(idBound(), false);
            claimed[s] = claimed[t] = true;
            return;
        }
        if (stub.kind == EdgeKind::Simple && stub.to < claimed.size() && !claimed[stub.to]) {
            claimed[stub.to] = true;
            return;
        }
        // either a Hadamard stub or a spider already claimed by another
        // boundary: buffer with identity spiders
        removeEdge(b, stub.to);
        const auto s = addVertex(VertexKind::Z);
        addEdge(b, s, EdgeKind::Simple);
        if (stub.kind == EdgeKind::Hadamard) {
            addEdgeSmart(s, stub.to, EdgeKind::Hadamard);
        } else {
            const auto t = addVertex(VertexKind::Z);
            addEdge(s, t, EdgeKind::Hadamard);
            addEdgeSmart(t, stub.to, EdgeKind::Hadamard);
        }
        claimed.resize(idBound(), false);
        claimed[s] = true;
    };
    for (const auto b : std::vector<Vertex>(inputs_)) {
        fixBoundary(b);
    }
    for (const auto b : std::vector<Vertex>(outputs_)) {
        fixBoundary(b);
    }
}

bool Diagram::isGraphLike(bool strictBoundary) const {
    bool ok = true;
    forEachVertex([&](Vertex v) {
        if (kind(v) == VertexKind::X) {
            ok = false;
        }
    });
    if (!ok) {
        return false;
    }
    forEachEdge([&](Vertex u, Vertex v, EdgeKind k) {
        if (isSpider(u) && isSpider(v) && k != EdgeKind::Hadamard) {
            ok = false;
        }
    });
    if (!ok) {
        return false;
    }
    // boundary condition: every input/output wired to a Z-spider (bare wires
    // tolerated), no spider claimed twice
    std::vector<int> claims(idBound(), 0);
    for (const auto& io : {inputs_, outputs_}) {
        for (const auto b : io) {
            if (degree(b) != 1) {
                return false;
            }
            const auto& stub = adj_[b][0];
            if (isBoundary(stub.to)) {
                if (strictBoundary && stub.kind != EdgeKind::Simple) {
                    return false;
                }
                continue;
            }
            if (strictBoundary && stub.kind != EdgeKind::Simple) {
                return false;
            }
            if (++claims[stub.to] > 1) {
                return false;
            }
        }
    }
    return true;
}

bool Diagram::isWireDiagram() const {
    bool ok = true;
    forEachVertex([&](Vertex v) {
        if (isSpider(v)) {
            ok = false;
        }
    });
    if (!ok) {
        return false;
    }
    forEachEdge([&](Vertex, Vertex, EdgeKind k) {
        if (k != EdgeKind::Simple) {
            ok = false;
        }
    });
    return ok;
}

std::string Diagram::toJson() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    forEachVertex([&](Vertex v) {
        const auto& vd = vdata(v);
        const char* k  = vd.kind == VertexKind::Boundary ? "B" : (vd.kind == VertexKind::Z ? "Z" : "X");
        j["vertices"].push_back({{"id", v},
                                 {"kind", k},
                                 {"phase",
                                  {{"num", vd.phase.exact().num()},
                                   {"den", vd.phase.exact().den()},
                                   {"residual", vd.phase.residual()}}}});
    });
    j["edges"] = nlohmann::json::array();
    forEachEdge([&](Vertex u, Vertex v, EdgeKind k) {
        j["edges"].push_back({u, v, k == EdgeKind::Simple ? "S" : "H"});
    });
    j["inputs"]  = inputs_;
    j["outputs"] = outputs_;
    return j.dump(2);
}

Diagram Diagram::fromJson(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    Diagram    d;
    std::vector<Vertex> idMap; // external id -> internal id
    for (const auto& jv : j.at("vertices")) {
        const auto        ext = jv.at("id").get<Vertex>();
        const std::string k   = jv.at("kind").get<std::string>();
        VertexKind        kind;
        if (k == "B") {
            kind = VertexKind::Boundary;
        } else if (k == "Z") {
            kind = VertexKind::Z;
        } else if (k == "X") {
            kind = VertexKind::X;
        } else {
            throw DiagramError("fromJson: unknown vertex kind '" + k + "'");
        }
        const auto& jp = jv.at("phase");
        Phase       p{Rational(jp.at("num").get<std::int64_t>(), jp.at("den").get<std::int64_t>()),
                jp.at("residual").get<double>()};
        const auto  id = d.addVertex(kind, std::move(p));
        if (ext >= idMap.size()) {
            idMap.resize(ext + 1, UINT32_MAX);
        }
        if (idMap[ext] != UINT32_MAX) {
            throw DiagramError("fromJson: duplicate vertex id " + std::to_string(ext));
        }
        idMap[ext] = id;
    }
    const auto mapped = [&](Vertex ext) {
        if (ext >= idMap.size() || idMap[ext] == UINT32_MAX) {
            throw DiagramError("fromJson: unknown vertex id " + std::to_string(ext));
        }
        return idMap[ext];
    };
    for (const auto& je : j.at("edges")) {
        const auto        u = mapped(je.at(0).get<Vertex>());
        const auto        v = mapped(je.at(1).get<Vertex>());
        const std::string k = je.at(2).get<std::string>();
        d.addEdge(u, v, k == "H" ? EdgeKind::Hadamard : EdgeKind::Simple);
    }
    for (const auto& ji : j.at("inputs")) {
        d.inputs_.push_back(mapped(ji.get<Vertex>()));
    }
    for (const auto& jo : j.at("outputs")) {
        d.outputs_.push_back(mapped(jo.get<Vertex>()));
    }
    std::vector<bool> listed(d.idBound(), false);
    for (const auto& io : {d.inputs_, d.outputs_}) {
        for (const auto b : io) {
            if (!d.isBoundary(b) || d.degree(b) != 1) {
                throw DiagramError("fromJson: inputs/outputs must be degree-1 boundary vertices");
            }
            if (listed[b]) {
                throw DiagramError("fromJson: boundary vertex listed twice");
            }
            listed[b] = true;
        }
    }
    return d;
}

} // namespace zx
