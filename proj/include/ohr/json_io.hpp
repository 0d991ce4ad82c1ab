#pragma once

#include <stdexcept>
#include <string>

#include "ohr/hypergraph.hpp"

namespace ohr {

enum class ParseErrorCode {
    MalformedJson,
    MissingField,
    BadFieldType,
    ArityMismatch,
    VertexOutOfRange,
    DuplicateEdge,
};

struct HypergraphParseError : std::runtime_error {
    HypergraphParseError(ParseErrorCode c, const std::string& what)
        : std::runtime_error(what), code(c) {}
    ParseErrorCode code;
};

// {"k":3,"n":5,"edges":[[0,1,2],...]}; edges may arrive unsorted and are
// canonicalized. Duplicates, wrong arity and out-of-range vertices are each
// rejected with their own error code.
OrderedHypergraph parse_hypergraph(const std::string& text);

// Canonical form: edges sorted ascending (as sorted tuples), trailing newline.
// parse(serialize(h)) == h.
std::string serialize_hypergraph(const OrderedHypergraph& h);

}  // namespace ohr
