#include "jck/documents.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace jck {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("document: ") + e.what());
    }
}

double number_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw std::invalid_argument(std::string("document: missing numeric field '") + key + "'");
    return j[key].get<double>();
}

CircleConfiguration circles_from(const json& j) {
    CircleConfiguration out;
    if (!j["circles"].is_array())
        throw std::invalid_argument("document: 'circles' must be an array");
    for (const json& c : j["circles"])
        out.circles.push_back({number_field(c, "x"), number_field(c, "y"), number_field(c, "r")});
    return out;
}

JordanConfiguration curves_from(const json& j) {
    JordanConfiguration out;
    if (!j["curves"].is_array())
        throw std::invalid_argument("document: 'curves' must be an array");
    for (const json& c : j["curves"]) {
        if (!c.contains("vertices") || !c["vertices"].is_array())
            throw std::invalid_argument("document: curve without 'vertices'");
        std::vector<Vec2> verts;
        for (const json& v : c["vertices"]) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw std::invalid_argument("document: vertex must be [x, y]");
            verts.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        try {
            out.curves.push_back(Curve::polygon(PolyCurve(std::move(verts))));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("document: ") + e.what());
        }
    }
    return out;
}

RootedTree tree_from(const json& j) {
    RootedTree t;
    if (!j["parents"].is_array())
        throw std::invalid_argument("document: 'parents' must be an array");
    for (const json& p : j["parents"]) {
        if (!p.is_number_integer())
            throw std::invalid_argument("document: parent entries must be integers");
        t.parents.push_back(p.get<int>());
    }
    if (j.contains("labeled")) {
        if (!j["labeled"].is_boolean())
            throw std::invalid_argument("document: 'labeled' must be a boolean");
        t.labeled = j["labeled"].get<bool>();
    }
    validate_tree(t);
    return t;
}

BraidWord braid_from(const json& j) {
    BraidWord b;
    if (!j["strands"].is_number_integer())
        throw std::invalid_argument("document: 'strands' must be an integer");
    b.strands = j["strands"].get<int>();
    if (!j.contains("word") || !j["word"].is_array())
        throw std::invalid_argument("document: missing 'word' array");
    for (const json& l : j["word"]) {
        if (!l.is_number_integer())
            throw std::invalid_argument("document: braid letters must be integers");
        b.word.push_back(l.get<int>());
    }
    validate_braid(b);
    return b;
}

BAutElement baut_from(const json& j, std::shared_ptr<const RootedTree> tree, int vertex) {
    if (!j.contains("braid"))
        throw std::invalid_argument("document: element node without 'braid'");
    BraidWord braid = braid_from(j["braid"]);
    const std::vector<int> children = tree_children(*tree, vertex);
    std::vector<BAutElement> kids;
    if (!children.empty()) {
        if (!j.contains("children") || !j["children"].is_array() ||
            j["children"].size() != children.size())
            throw std::invalid_argument(
                "document: element children do not match the tree at vertex " +
                std::to_string(vertex));
        for (size_t i = 0; i < children.size(); ++i)
            kids.push_back(baut_from(j["children"][i], tree, children[i]));
    }
    return BAutElement::node(tree, vertex, std::move(braid), std::move(kids));
}

json to_json(const BraidWord& b) {
    return json{{"strands", b.strands}, {"word", b.word}};
}

json to_json(const BAutElement& e) {
    json out;
    out["braid"] = to_json(e.braid());
    json kids = json::array();
    for (const BAutElement& k : e.children()) kids.push_back(to_json(k));
    out["children"] = std::move(kids);
    return out;
}

}  // namespace

DocumentKind document_kind(const Document& d) {
    switch (d.index()) {
        case 0: return DocumentKind::Circles;
        case 1: return DocumentKind::Curves;
        case 2: return DocumentKind::Tree;
        default: return DocumentKind::Braid;
    }
}

Document parse_document(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw std::invalid_argument("document: top level must be an object");
    if (j.contains("circles")) return circles_from(j);
    if (j.contains("curves")) return curves_from(j);
    if (j.contains("parents")) return tree_from(j);
    if (j.contains("strands")) return braid_from(j);
    throw std::invalid_argument("document: unrecognized kind (expected circles, curves, parents or strands)");
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("document: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

BAutDocument parse_baut(const std::string& text, std::shared_ptr<const RootedTree> tree) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("braid"))
        throw std::invalid_argument("document: element must be an object with a 'braid'");
    return {tree, baut_from(j, tree, 0)};
}

BAutDocument load_baut(const std::string& path, std::shared_ptr<const RootedTree> tree) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("document: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_baut(ss.str(), tree);
}

std::string serialize(const CircleConfiguration& c) {
    json arr = json::array();
    for (const Circle& k : c.circles) arr.push_back({{"x", k.x}, {"y", k.y}, {"r", k.r}});
    return json{{"circles", std::move(arr)}}.dump();
}

std::string serialize(const JordanConfiguration& jc) {
    json arr = json::array();
    for (const Curve& c : jc.curves) {
        json verts = json::array();
        for (const Vec2& v : c.poly().vertices()) verts.push_back({v.x, v.y});
        arr.push_back({{"vertices", std::move(verts)}});
    }
    return json{{"curves", std::move(arr)}}.dump();
}

std::string serialize(const RootedTree& t) {
    return json{{"parents", t.parents}, {"labeled", t.labeled}}.dump();
}

std::string serialize(const BraidWord& b) { return to_json(b).dump(); }

std::string serialize(const BAutElement& e) { return to_json(e).dump(); }

}  // namespace jck
