#include "eft/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace eft {

namespace {

struct Line {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

class Reader {
public:
    Reader(std::istream& in, std::string source) : source_(std::move(source)) {
        std::string raw;
        std::size_t number = 0;
        while (std::getline(in, raw)) {
            ++number;
            if (auto hash = raw.find('#'); hash != std::string::npos) {
                raw.erase(hash);
            }
            std::istringstream words(raw);
            Line line{number, {}};
            for (std::string w; words >> w;) {
                line.tokens.push_back(std::move(w));
            }
            if (!line.tokens.empty()) {
                lines_.push_back(std::move(line));
            }
        }
    }

    bool done() const { return pos_ >= lines_.size(); }
    const Line& peek() const { return lines_[pos_]; }
    const Line& next() {
        if (done()) {
            fail(lines_.empty() ? 0 : lines_.back().number, "unexpected end of input");
        }
        return lines_[pos_++];
    }

    [[noreturn]] void fail(std::size_t line, const std::string& what) const {
        throw InputError(source_ + ":" + std::to_string(line) + ": " + what);
    }

    template <class Int>
    Int integer(const Line& line, std::size_t index, const char* what) const {
        if (index >= line.tokens.size()) {
            fail(line.number, std::string("missing ") + what);
        }
        const std::string& tok = line.tokens[index];
        Int value{};
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            fail(line.number, std::string("expected ") + what + ", got '" + tok + "'");
        }
        return value;
    }

    double real(const Line& line, std::size_t index, const char* what) const {
        if (index >= line.tokens.size()) {
            fail(line.number, std::string("missing ") + what);
        }
        const std::string& tok = line.tokens[index];
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            fail(line.number, std::string("expected ") + what + ", got '" + tok + "'");
        }
        return value;
    }

    void arity(const Line& line, std::size_t count, const char* shape) const {
        if (line.tokens.size() != count) {
            fail(line.number, std::string("expected '") + shape + "'");
        }
    }

private:
    std::string source_;
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

void parse_emulator(Reader& reader, const Line& head, Document& doc) {
    if (doc.members) {
        reader.fail(head.number, "duplicate EMULATOR section");
    }
    if (head.tokens.size() < 2 || head.tokens.size() % 2 != 0) {
        reader.fail(head.number, "expected 'EMULATOR count [f F] [k K]'");
    }
    const auto count = reader.integer<std::size_t>(head, 1, "member count");
    for (std::size_t i = 2; i < head.tokens.size(); i += 2) {
        const std::string& key = head.tokens[i];
        const auto value = reader.integer<std::size_t>(head, i + 1, "parameter value");
        if (key == "f") {
            doc.f = value;
        } else if (key == "k") {
            doc.k = value;
        } else {
            reader.fail(head.number, "unknown EMULATOR parameter '" + key + "'");
        }
    }
    std::vector<EdgeId> members;
    while (members.size() < count) {
        const Line& line = reader.next();
        if (members.size() + line.tokens.size() > count) {
            reader.fail(line.number, "more member ids than the declared " + std::to_string(count));
        }
        for (std::size_t i = 0; i < line.tokens.size(); ++i) {
            auto e = reader.integer<EdgeId>(line, i, "edge id");
            if (!doc.graph.valid_edge(e)) {
                reader.fail(line.number, "edge id " + std::to_string(e) + " out of range");
            }
            members.push_back(e);
        }
    }
    doc.members = std::move(members);
}

void parse_witness(Reader& reader, const Line& line, Document& doc) {
    if (!doc.members) {
        reader.fail(line.number, "WITNESS before EMULATOR");
    }
    if (line.tokens.size() < 2 || line.tokens[1].empty() || line.tokens[1].back() != ':') {
        reader.fail(line.number, "expected 'WITNESS e: x1 x2 ...'");
    }
    Line head = line;
    head.tokens[1].pop_back();
    const auto e = reader.integer<EdgeId>(head, 1, "edge id");
    std::vector<EdgeId> faults;
    for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        auto x = reader.integer<EdgeId>(line, i, "edge id");
        if (!doc.graph.valid_edge(x)) {
            reader.fail(line.number, "edge id " + std::to_string(x) + " out of range");
        }
        faults.push_back(x);
    }
    if (!doc.witnesses.emplace(e, FaultSet(std::move(faults))).second) {
        reader.fail(line.number, "second witness for edge " + std::to_string(e));
    }
}

void parse_blocks(Reader& reader, const Line& head, Document& doc) {
    if (doc.blocks) {
        reader.fail(head.number, "duplicate BLOCKS section");
    }
    reader.arity(head, 2, "BLOCKS count");
    const auto count = reader.integer<std::size_t>(head, 1, "block count");
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < count; ++i) {
        const Line& line = reader.next();
        reader.arity(line, 2, "e1 e2");
        auto x = reader.integer<EdgeId>(line, 0, "edge id");
        auto y = reader.integer<EdgeId>(line, 1, "edge id");
        if (!doc.graph.valid_edge(x) || !doc.graph.valid_edge(y)) {
            reader.fail(line.number, "block edge out of range");
        }
        if (x == y) {
            reader.fail(line.number, "block pairs an edge with itself");
        }
        blocks.emplace_back(std::min(x, y), std::max(x, y));
    }
    doc.blocks = std::move(blocks);
}

void parse_clouds(Reader& reader, const Line& head, Document& doc) {
    if (doc.clouds) {
        reader.fail(head.number, "duplicate CLOUDS section");
    }
    reader.arity(head, 2, "CLOUDS clones");
    CloudAnnotation clouds;
    clouds.clones = reader.integer<std::size_t>(head, 1, "clone count");
    if (clouds.clones == 0) {
        reader.fail(head.number, "clone count must be positive");
    }
    const std::size_t n = doc.graph.node_count();
    clouds.base_of.assign(n, 0);
    clouds.clone_of.assign(n, 0);
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Line& line = reader.next();
        reader.arity(line, 3, "node base clone");
        auto x = reader.integer<NodeId>(line, 0, "node id");
        if (x >= n || seen[x]) {
            reader.fail(line.number, "bad or repeated node id " + std::to_string(x));
        }
        seen[x] = 1;
        clouds.base_of[x] = reader.integer<NodeId>(line, 1, "base node");
        clouds.clone_of[x] = reader.integer<std::uint32_t>(line, 2, "clone index");
        if (clouds.clone_of[x] >= clouds.clones) {
            reader.fail(line.number, "clone index out of range");
        }
    }
    doc.clouds = std::move(clouds);
}

}

Document parse_document(std::istream& in, const std::string& source) {
    Reader reader(in, source);
    Document doc;
    if (reader.done()) {
        reader.fail(0, "empty input, expected 'n m'");
    }
    const Line& header = reader.next();
    reader.arity(header, 2, "n m");
    const auto n = reader.integer<std::size_t>(header, 0, "node count");
    const auto m = reader.integer<std::size_t>(header, 1, "edge count");
    std::vector<Edge> edges;
    edges.reserve(m);
    std::vector<std::size_t> edge_line;
    for (std::size_t i = 0; i < m; ++i) {
        const Line& line = reader.next();
        reader.arity(line, 3, "u v w");
        Edge edge;
        edge.a = reader.integer<NodeId>(line, 0, "node id");
        edge.b = reader.integer<NodeId>(line, 1, "node id");
        edge.weight = reader.real(line, 2, "weight");
        edges.push_back(edge);
        edge_line.push_back(line.number);
    }
    try {
        doc.graph = Graph(n, std::move(edges));
    } catch (const InputError& err) {
        reader.fail(edge_line.empty() ? header.number : edge_line.back(), err.what());
    }

    while (!reader.done()) {
        const Line& line = reader.next();
        const std::string& tag = line.tokens.front();
        if (tag == "EMULATOR") {
            parse_emulator(reader, line, doc);
        } else if (tag == "WITNESS") {
            parse_witness(reader, line, doc);
        } else if (tag == "BLOCKS") {
            parse_blocks(reader, line, doc);
        } else if (tag == "CLOUDS") {
            parse_clouds(reader, line, doc);
        } else if (doc.graph.edge_count() == m && !doc.members && !doc.blocks && !doc.clouds) {
            reader.fail(line.number, "more edge lines than the declared " + std::to_string(m));
        } else {
            reader.fail(line.number, "unknown section '" + tag + "'");
        }
    }
    if (doc.members) {
        try {
            (void)doc.emulator();
        } catch (const InputError& err) {
            throw InputError(source + ": " + err.what());
        }
    }
    return doc;
}

Document parse_document_text(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    return parse_document(in, source);
}

Document read_document(const std::string& path) {
    if (path == "-") {
        return parse_document(std::cin, "<stdin>");
    }
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "' for reading");
    }
    return parse_document(in, path);
}

Emulator Document::emulator() const {
    if (!members) {
        throw InputError("input has no EMULATOR section");
    }
    for (const auto& [e, w] : witnesses) {
        if (!graph.valid_edge(e)) {
            throw InputError("witness for unknown edge " + std::to_string(e));
        }
    }
    return Emulator(graph, *members, witnesses);
}

BlockingSet Document::blocking() const {
    if (!blocks) {
        throw InputError("input has no BLOCKS section");
    }
    return BlockingSet(*blocks);
}

CloudGraph Document::cloud_graph() const {
    if (!clouds) {
        throw InputError("input has no CLOUDS section");
    }
    CloudGraph lb;
    lb.clones = clouds->clones;
    lb.base_of = clouds->base_of;
    lb.clone_of = clouds->clone_of;
    std::size_t base_nodes = 0;
    for (NodeId x = 0; x < graph.node_count(); ++x) {
        base_nodes = std::max<std::size_t>(base_nodes, lb.base_of[x] + 1);
        if (lb.node(lb.base_of[x], lb.clone_of[x]) != x) {
            throw InputError("cloud annotation of node " + std::to_string(x)
                             + " does not follow the base * clones + clone numbering");
        }
    }
    std::map<std::pair<NodeId, NodeId>, EdgeId> base_ids;
    std::vector<Edge> base_edges;
    for (const Edge& edge : graph.edges()) {
        NodeId a = lb.base_of[edge.a];
        NodeId b = lb.base_of[edge.b];
        if (a == b) {
            throw InputError("edge inside cloud " + std::to_string(a));
        }
        auto key = std::minmax(a, b);
        auto [it, fresh] = base_ids.emplace(std::pair{key.first, key.second},
                                            static_cast<EdgeId>(base_edges.size()));
        if (fresh) {
            base_edges.push_back({a, b, 1.0});
        }
        lb.bundle_of.push_back(it->second);
    }
    lb.base = Graph(base_nodes, std::move(base_edges));
    lb.graph = graph;
    return lb;
}

std::string format_length(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

void write_graph(std::ostream& out, const Graph& graph) {
    out << graph.node_count() << ' ' << graph.edge_count() << '\n';
    for (const Edge& e : graph.edges()) {
        out << e.a << ' ' << e.b << ' ' << format_length(e.weight) << '\n';
    }
}

void write_emulator(std::ostream& out, const Emulator& h, std::optional<std::size_t> f,
                    std::optional<std::size_t> k) {
    out << "EMULATOR " << h.size();
    if (f) {
        out << " f " << *f;
    }
    if (k) {
        out << " k " << *k;
    }
    out << '\n';
    for (std::size_t i = 0; i < h.size(); ++i) {
        out << h.members()[i] << ((i + 1) % 16 == 0 || i + 1 == h.size() ? '\n' : ' ');
    }
    for (const auto& [e, faults] : h.witnesses()) {
        out << "WITNESS " << e << ':';
        for (EdgeId x : faults) {
            out << ' ' << x;
        }
        out << '\n';
    }
}

void write_blocks(std::ostream& out, const BlockingSet& blocks) {
    out << "BLOCKS " << blocks.size() << '\n';
    for (auto [x, y] : blocks.blocks()) {
        out << x << ' ' << y << '\n';
    }
}

void write_clouds(std::ostream& out, const CloudGraph& lb) {
    out << "CLOUDS " << lb.clones << '\n';
    for (NodeId x = 0; x < lb.graph.node_count(); ++x) {
        out << x << ' ' << lb.base_of[x] << ' ' << lb.clone_of[x] << '\n';
    }
}

void write_document(std::ostream& out, const Document& doc) {
    write_graph(out, doc.graph);
    if (doc.members) {
        write_emulator(out, doc.emulator(), doc.f, doc.k);
    }
    if (doc.blocks) {
        write_blocks(out, doc.blocking());
    }
    if (doc.clouds) {
        write_clouds(out, doc.cloud_graph());
    }
}

std::string to_text(const Document& doc) {
    std::ostringstream out;
    write_document(out, doc);
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot open '" + path + "' for writing");
    }
    out << text;
}

}
