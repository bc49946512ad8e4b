#include "hgc/hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace hgc {

namespace {

void sortEdges(std::vector<VertexSet>& edges) {
    std::sort(edges.begin(), edges.end(), [](VertexSet a, VertexSet b) {
        int sa = setSize(a), sb = setSize(b);
        return sa != sb ? sa < sb : a < b;
    });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<int> setToVertices(VertexSet s) {
    std::vector<int> out;
    for (int v = 0; v < kMaxVertices; ++v)
        if (contains(s, v)) out.push_back(v);
    return out;
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw DomainError("vertex count " + std::to_string(n) +
                          " outside supported range 0.." +
                          std::to_string(kMaxVertices));
    VertexSet full = fullSet(n);
    for (VertexSet e : edges) {
        if (e == 0) throw DomainError("empty edge");
        if ((e & ~full) != 0) throw DomainError("vertex index out of range");
    }
    sortEdges(edges);
    edges_ = std::move(edges);
}

bool Hypergraph::hasEdge(VertexSet e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](VertexSet a, VertexSet b) {
                                   int sa = setSize(a), sb = setSize(b);
                                   return sa != sb ? sa < sb : a < b;
                               });
    return it != edges_.end() && *it == e;
}

int Hypergraph::rank() const {
    int r = 0;
    for (VertexSet e : edges_) r = std::max(r, setSize(e));
    return r;
}

int Hypergraph::encodingSize() const {
    int s = n_;
    for (VertexSet e : edges_) s += setSize(e);
    return s;
}

VertexSet Hypergraph::neighbours(int v) const {
    VertexSet nb = 0;
    for (VertexSet e : edges_)
        if (contains(e, v)) nb |= e;
    return nb & ~(VertexSet{1} << v);
}

Hypergraph Hypergraph::gaifmanGraph() const {
    std::vector<VertexSet> pairEdges;
    for (int v = 0; v < n_; ++v) {
        VertexSet nb = neighbours(v);
        for (int u = v + 1; u < n_; ++u)
            if (contains(nb, u))
                pairEdges.push_back((VertexSet{1} << v) | (VertexSet{1} << u));
    }
    return Hypergraph(n_, std::move(pairEdges));
}

Hypergraph derive(const Hypergraph& h, VertexSet x, DeriveMode mode) {
    VertexSet full = h.vertexMask();
    if ((x & ~full) != 0) throw DomainError("derive: X out of range");

    VertexSet keep;  // vertices of the result, in the original labelling
    switch (mode) {
        case DeriveMode::Induced:
        case DeriveMode::Trim:
            if (x == 0) throw DomainError("derive: X must be non-empty");
            keep = x;
            break;
        case DeriveMode::DeleteKeep:
        case DeriveMode::DeleteTrim:
            keep = full & ~x;
            break;
    }

    // relabel kept vertices to 0..k-1 in increasing order
    std::vector<int> newLabel(kMaxVertices, -1);
    int k = 0;
    for (int v = 0; v < h.numVertices(); ++v)
        if (contains(keep, v)) newLabel[v] = k++;

    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges()) {
        VertexSet inside = e & keep;
        bool take = false;
        switch (mode) {
            case DeriveMode::Induced:
            case DeriveMode::DeleteKeep:
                take = (inside == e);
                break;
            case DeriveMode::Trim:
            case DeriveMode::DeleteTrim:
                take = (inside != 0);
                break;
        }
        if (!take) continue;
        VertexSet mapped = 0;
        for (int v : setToVertices(inside)) mapped |= VertexSet{1} << newLabel[v];
        edges.push_back(mapped);
    }
    return Hypergraph(k, std::move(edges));
}

std::vector<VertexSet> nonEdges(const Hypergraph& h) {
    std::vector<VertexSet> out;
    VertexSet limit = fullSet(h.numVertices());
    for (VertexSet s = 1; s <= limit; ++s)
        if (!h.hasEdge(s)) out.push_back(s);
    return out;
}

void forEachEdgeSupergraph(const Hypergraph& h,
                           const std::function<void(const Hypergraph&)>& fn,
                           int vertexCap) {
    if (h.numVertices() > vertexCap)
        throw BudgetError("edge_supergraphs: vertex cap " +
                          std::to_string(vertexCap) + " exceeded");
    std::vector<VertexSet> candidates = nonEdges(h);
    std::uint64_t total = std::uint64_t{1} << candidates.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<VertexSet> edges = h.edges();
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if ((mask >> i) & 1u) edges.push_back(candidates[i]);
        fn(Hypergraph(h.numVertices(), std::move(edges)));
    }
}

namespace {

struct Tokenized {
    std::vector<std::vector<std::string>> lines;  // token lists, with line numbers
    std::vector<int> lineNumbers;
};

Tokenized tokenize(const std::string& text) {
    Tokenized out;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        out.lines.push_back(std::move(toks));
        out.lineNumbers.push_back(lineNo);
    }
    return out;
}

int parseInt(const std::string& tok, int lineNo, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw DomainError("line " + std::to_string(lineNo) + ": expected " +
                          what + ", got '" + tok + "'");
    }
}

}  // namespace

ParseResult parseHypergraph(const std::string& text) {
    Tokenized tk = tokenize(text);
    if (tk.lines.empty()) throw DomainError("empty input: missing 'p hg' header");

    const auto& head = tk.lines[0];
    int headLine = tk.lineNumbers[0];
    if (head.size() != 4 || head[0] != "p" || head[1] != "hg")
        throw DomainError("line " + std::to_string(headLine) +
                          ": malformed header, expected 'p hg <n> <m>'");
    int n = parseInt(head[2], headLine, "vertex count");
    int m = parseInt(head[3], headLine, "edge count");
    if (n < 0 || n > kMaxVertices)
        throw DomainError("line " + std::to_string(headLine) +
                          ": vertex count out of range");

    ParseResult result;
    std::vector<VertexSet> edges;
    int seen = 0;
    for (std::size_t i = 1; i < tk.lines.size(); ++i) {
        const auto& toks = tk.lines[i];
        int lineNo = tk.lineNumbers[i];
        if (toks[0] != "e")
            throw DomainError("line " + std::to_string(lineNo) +
                              ": expected edge line 'e v1 v2 ...'");
        if (toks.size() < 2)
            throw DomainError("line " + std::to_string(lineNo) + ": empty edge");
        VertexSet e = 0;
        for (std::size_t j = 1; j < toks.size(); ++j) {
            int v = parseInt(toks[j], lineNo, "vertex index");
            if (v < 0 || v >= n)
                throw DomainError("line " + std::to_string(lineNo) +
                                  ": vertex index out of range");
            e |= VertexSet{1} << v;
        }
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            result.warnings.push_back("line " + std::to_string(lineNo) +
                                      ": duplicate edge ignored");
        else
            edges.push_back(e);
        ++seen;
    }
    if (seen != m)
        throw DomainError("header declares " + std::to_string(m) +
                          " edges but " + std::to_string(seen) + " edge lines found");
    result.hypergraph = Hypergraph(n, std::move(edges));
    return result;
}

std::string serializeHypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "p hg " << h.numVertices() << ' ' << h.numEdges() << '\n';
    for (VertexSet e : h.edges()) {
        out << 'e';
        for (int v : setToVertices(e)) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::string serializeInline(const Hypergraph& h) {
    std::ostringstream out;
    out << "p hg " << h.numVertices() << ' ' << h.numEdges();
    for (VertexSet e : h.edges()) {
        out << " e";
        for (int v : setToVertices(e)) out << ' ' << v;
    }
    return out.str();
}

Hypergraph parseInline(const std::string& line) {
    std::istringstream in(line);
    std::string p, hg;
    int n = 0, m = 0;
    if (!(in >> p >> hg >> n >> m) || p != "p" || hg != "hg")
        throw DomainError("malformed inline hypergraph: '" + line + "'");
    if (n < 0 || n > kMaxVertices)
        throw DomainError("inline hypergraph: vertex count out of range");
    std::vector<VertexSet> edges;
    std::string tok;
    VertexSet current = 0;
    bool open = false;
    auto flush = [&] {
        if (!open) return;
        if (current == 0) throw DomainError("inline hypergraph: empty edge");
        edges.push_back(current);
        current = 0;
    };
    while (in >> tok) {
        if (tok == "e") {
            flush();
            open = true;
        } else {
            int v = parseInt(tok, 0, "vertex index");
            if (v < 0 || v >= n)
                throw DomainError("inline hypergraph: vertex index out of range");
            current |= VertexSet{1} << v;
        }
    }
    flush();
    if (static_cast<int>(edges.size()) != m)
        throw DomainError("inline hypergraph: edge count mismatch");
    return Hypergraph(n, std::move(edges));
}

std::string toJson(const Hypergraph& h) {
    nlohmann::json j;
    j["n"] = h.numVertices();
    j["edges"] = nlohmann::json::array();
    for (VertexSet e : h.edges()) j["edges"].push_back(setToVertices(e));
    return j.dump();
}

Hypergraph fromJson(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<VertexSet> edges;
    for (const auto& arr : j.at("edges")) {
        VertexSet e = 0;
        for (int v : arr.get<std::vector<int>>()) {
            if (v < 0 || v >= n)
                throw DomainError("json hypergraph: vertex index out of range");
            e |= VertexSet{1} << v;
        }
        if (e == 0) throw DomainError("json hypergraph: empty edge");
        edges.push_back(e);
    }
    return Hypergraph(n, std::move(edges));
}

}  // namespace hgc
