#ifndef EFT_GRAPH_IO_HPP
#define EFT_GRAPH_IO_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eft/blocking.hpp"
#include "eft/emulator.hpp"
#include "eft/graph.hpp"
#include "eft/lower_bound.hpp"

namespace eft {

/*
 * Text interchange format.
 *
 *   n m
 *   u v w            (m lines, 0-based ids, decimal weight)
 *   EMULATOR c [f F] [k K]
 *   e1 e2 ... ec     (member ids, may wrap over lines)
 *   WITNESS e: x1 x2 ...
 *   BLOCKS c
 *   e1 e2            (c lines)
 *   CLOUDS s
 *   x base clone     (n lines)
 *
 * Everything after a '#' is a comment. All sections are optional.
 */
struct CloudAnnotation {
    std::size_t clones = 0;
    std::vector<NodeId> base_of;
    std::vector<std::uint32_t> clone_of;
};

struct Document {
    Graph graph;
    std::optional<std::vector<EdgeId>> members;
    std::map<EdgeId, FaultSet> witnesses;
    std::optional<std::size_t> f;
    std::optional<std::size_t> k;
    std::optional<std::vector<Block>> blocks;
    std::optional<CloudAnnotation> clouds;

    bool has_emulator() const { return members.has_value(); }
    Emulator emulator() const;      // throws InputError without an EMULATOR section
    BlockingSet blocking() const;   // throws InputError without a BLOCKS section
    CloudGraph cloud_graph() const; // throws InputError without a CLOUDS section
};

/// Throws InputError naming `source` and the offending line.
Document parse_document(std::istream& in, const std::string& source = "<input>");
Document parse_document_text(const std::string& text, const std::string& source = "<input>");

// "-" reads standard input
Document read_document(const std::string& path);

std::string format_length(double value);

void write_graph(std::ostream& out, const Graph& graph);
void write_emulator(std::ostream& out, const Emulator& h, std::optional<std::size_t> f = {},
                    std::optional<std::size_t> k = {});
void write_blocks(std::ostream& out, const BlockingSet& blocks);
void write_clouds(std::ostream& out, const CloudGraph& lb);
void write_document(std::ostream& out, const Document& doc);

std::string to_text(const Document& doc);

// "-" writes standard output
void write_text_file(const std::string& path, const std::string& text);

}

#endif /* EFT_GRAPH_IO_HPP */
