#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <variant>

#include "jck/curves.hpp"
#include "jck/geometry.hpp"
#include "jck/groups.hpp"
#include "jck/trees.hpp"

namespace jck {

// A braided-automorphism document is only meaningful next to a tree
// document, so the two travel together.
struct BAutDocument {
    std::shared_ptr<const RootedTree> tree;
    BAutElement element;
};

using Document = std::variant<CircleConfiguration, JordanConfiguration, RootedTree, BraidWord>;

enum class DocumentKind { Circles, Curves, Tree, Braid };

DocumentKind document_kind(const Document& d);

// Parses one JSON document; the kind is detected from the top-level keys
// ("circles", "curves", "parents", "strands").  Throws std::invalid_argument
// with a line of context on malformed input.
Document parse_document(const std::string& text);
Document load_document(const std::string& path);

// Braided-automorphism elements: {"braid": {...}, "children": [...]},
// parsed against an already-loaded tree.
BAutDocument parse_baut(const std::string& text, std::shared_ptr<const RootedTree> tree);
BAutDocument load_baut(const std::string& path, std::shared_ptr<const RootedTree> tree);

std::string serialize(const CircleConfiguration& c);
std::string serialize(const JordanConfiguration& j);
std::string serialize(const RootedTree& t);
std::string serialize(const BraidWord& b);
std::string serialize(const BAutElement& e);

}  // namespace jck
