// jck: nesting trees, rounding retractions and braided automorphism algebra
// for configurations of disjoint Jordan curves in the plane.
//
// Exit codes: 0 ok, 1 classify verdict false, 2 invalid input, 3 numerical
// failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "jck/conformal.hpp"
#include "jck/curves.hpp"
#include "jck/documents.hpp"
#include "jck/geometry.hpp"
#include "jck/groups.hpp"
#include "jck/sampling.hpp"
#include "jck/svg.hpp"
#include "jck/trees.hpp"

namespace {

using nlohmann::json;

jck::JordanConfiguration as_curves(const jck::Document& d) {
    if (const auto* c = std::get_if<jck::CircleConfiguration>(&d)) {
        jck::JordanConfiguration j;
        j.curves.reserve(c->circles.size());
        for (const jck::Circle& k : c->circles)
            j.curves.push_back(jck::Curve::circle({{k.x, k.y}, k.r}));
        return j;
    }
    if (const auto* j = std::get_if<jck::JordanConfiguration>(&d)) return *j;
    throw std::invalid_argument("expected a circles or curves document");
}

jck::RootedTree nesting_tree(const jck::Document& d) {
    if (const auto* c = std::get_if<jck::CircleConfiguration>(&d))
        return jck::circle_nesting_tree(*c);
    if (const auto* j = std::get_if<jck::JordanConfiguration>(&d))
        return jck::curve_nesting_tree(*j);
    throw std::invalid_argument("expected a circles or curves document");
}

json pairs_to_json(const std::vector<std::pair<int, int>>& v) {
    json a = json::array();
    for (auto [i, k] : v) a.push_back(json::array({i, k}));
    return a;
}

int cmd_validate(const std::string& path) {
    const jck::Document d = jck::load_document(path);
    json rep;
    bool ok = true;
    switch (jck::document_kind(d)) {
        case jck::DocumentKind::Circles: {
            const auto val = jck::validate_configuration(std::get<jck::CircleConfiguration>(d));
            rep["kind"] = "circles";
            rep["bad_radius"] = val.bad_radius;
            rep["intersecting"] = pairs_to_json(val.intersecting);
            ok = val.ok();
            break;
        }
        case jck::DocumentKind::Curves: {
            const auto val = jck::validate_curves(std::get<jck::JordanConfiguration>(d));
            rep["kind"] = "curves";
            rep["not_simple"] = val.not_simple;
            rep["overlapping"] = pairs_to_json(val.overlapping);
            ok = val.ok();
            break;
        }
        case jck::DocumentKind::Tree:
            rep["kind"] = "tree";  // structural checks already ran at load
            break;
        case jck::DocumentKind::Braid:
            rep["kind"] = "braid";
            break;
    }
    rep["ok"] = ok;
    std::cout << rep.dump() << "\n";
    return ok ? 0 : 2;
}

int cmd_tree(const std::string& path) {
    const jck::RootedTree t = nesting_tree(jck::load_document(path));
    std::cout << jck::serialize(t) << "\n";
    return 0;
}

json tree_to_json(const jck::RootedTree& t) {
    return json{{"parents", t.parents}, {"labeled", t.labeled}};
}

int cmd_classify(const std::vector<std::string>& paths, bool labeled) {
    if (paths.size() != 2)
        throw std::invalid_argument("classify needs exactly two --input documents");
    const jck::RootedTree a = nesting_tree(jck::load_document(paths[0]));
    const jck::RootedTree b = nesting_tree(jck::load_document(paths[1]));
    const bool same = labeled ? a.parents == b.parents
                              : jck::canonical_code(a) == jck::canonical_code(b);
    json out;
    out["same_component"] = same;
    out["tree_a"] = tree_to_json(a);
    out["tree_b"] = tree_to_json(b);
    std::cout << out.dump() << "\n";
    return same ? 0 : 1;
}

int cmd_count_components(int n, long long samples, unsigned long long seed) {
    const auto codes = jck::enumerate_trees(n);
    const long long enumerated = static_cast<long long>(codes.size());
    if (samples <= 0) samples = 10 * enumerated;
    std::mt19937_64 rng(seed);
    std::set<std::string> seen;
    for (long long s = 0; s < samples; ++s) {
        const jck::CircleConfiguration cfg = jck::random_circle_configuration(n, rng);
        seen.insert(jck::canonical_code(jck::circle_nesting_tree(cfg)));
    }
    json out;
    out["n"] = n;
    out["samples"] = samples;
    out["seed"] = seed;
    out["enumerated"] = enumerated;
    out["observed"] = static_cast<long long>(seen.size());
    std::cout << out.dump() << "\n";
    return 0;
}

void emit_frame(const jck::JordanConfiguration& frame, const std::string& format,
                const jck::SvgBounds& bounds) {
    if (format == "svg")
        std::cout << jck::render_svg(frame, bounds);
    else
        std::cout << jck::serialize(frame) << "\n";
}

int cmd_retract(const std::string& path, int frames, const std::string& format,
                const std::string& pipeline) {
    const jck::JordanConfiguration j = as_curves(jck::load_document(path));

    bool convex = true;
    for (const jck::Curve& c : j.curves)
        if (!c.is_circle() && !jck::polygon_is_convex(c.poly())) convex = false;
    std::string chosen = pipeline;
    if (chosen == "auto") chosen = convex ? "convex" : "conformal";

    const jck::SvgBounds bounds = jck::svg_bounds(j);
    if (chosen == "convex") {
        const jck::DepthIndex di = jck::depth_index(jck::curve_nesting_tree(j));
        const int total = (di.dmax + 1) * frames;
        for (int f = 0; f <= total; ++f)
            emit_frame(jck::convex_retract_frame(j, static_cast<double>(f) / total), format,
                       bounds);
        return 0;
    }

    const jck::RetractResult result = jck::conformal_retract(j, frames);
    for (const jck::StageDiagnostics& d : result.diagnostics) {
        json y = json::object(), err = json::object();
        for (auto [label, v] : d.y) y[std::to_string(label)] = v;
        for (auto [label, v] : d.map_error) err[std::to_string(label)] = v;
        std::cerr << json{{"stage", d.stage}, {"active", d.active}, {"y", y}, {"map_error", err}}
                         .dump()
                  << "\n";
    }
    for (const jck::JordanConfiguration& frame : result.frames) emit_frame(frame, format, bounds);
    return 0;
}

jck::RootedTree tree_document(const std::string& path) {
    jck::Document d = jck::load_document(path);
    if (auto* t = std::get_if<jck::RootedTree>(&d)) return std::move(*t);
    throw std::invalid_argument("expected a tree document: " + path);
}

int cmd_group_aut_order(const std::vector<std::string>& paths) {
    if (paths.size() != 1) throw std::invalid_argument("aut-order takes one tree --input");
    std::cout << json{{"aut_order", jck::aut_order(tree_document(paths[0]))}}.dump() << "\n";
    return 0;
}

int cmd_group_signature(const std::vector<std::string>& paths) {
    if (paths.size() != 1) throw std::invalid_argument("signature takes one tree --input");
    std::cout << json{{"signature", jck::pure_signature(tree_document(paths[0]))}}.dump() << "\n";
    return 0;
}

int cmd_group_compose(const std::vector<std::string>& paths) {
    if (paths.size() < 3)
        throw std::invalid_argument("compose takes a tree --input and at least two elements");
    const auto tree = std::make_shared<const jck::RootedTree>(tree_document(paths[0]));
    jck::BAutElement acc = jck::load_baut(paths[1], tree).element;
    for (size_t i = 2; i < paths.size(); ++i)
        acc = jck::baut_compose(acc, jck::load_baut(paths[i], tree).element);
    std::cout << jck::serialize(acc) << "\n";
    return 0;
}

int cmd_group_is_pure(const std::vector<std::string>& paths) {
    if (paths.size() != 2)
        throw std::invalid_argument("is-pure takes a tree --input and one element");
    const auto tree = std::make_shared<const jck::RootedTree>(tree_document(paths[0]));
    const bool pure = jck::baut_is_pure(jck::load_baut(paths[1], tree).element);
    std::cout << json{{"pure", pure}}.dump() << "\n";
    return 0;
}

int cmd_group_project(const std::vector<std::string>& paths) {
    if (paths.size() != 2)
        throw std::invalid_argument("project takes a tree --input and one element");
    const auto tree = std::make_shared<const jck::RootedTree>(tree_document(paths[0]));
    const jck::TreeAutomorphism a = jck::baut_project(jck::load_baut(paths[1], tree).element);
    std::cout << json{{"images", a.images}}.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nesting trees, rounding retractions and braided tree automorphisms\n"
                 "for configurations of disjoint Jordan curves in the plane"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "check a document, report problems as JSON");
    std::string validate_input;
    validate->add_option("--input", validate_input, "document path")->required();

    auto* tree = app.add_subcommand("tree", "print the nesting tree of a configuration");
    std::string tree_input;
    tree->add_option("--input", tree_input, "circles or curves document")->required();

    auto* classify = app.add_subcommand("classify", "same component test for two configurations");
    std::vector<std::string> classify_inputs;
    bool labeled = false;
    classify->add_option("--input", classify_inputs, "two circles/curves documents")
        ->required()
        ->expected(1, 2);
    classify->add_flag("--labeled", labeled, "compare labeled trees (parent arrays)");

    auto* count = app.add_subcommand("count-components",
                                     "sample random configurations, count distinct trees");
    int count_n = 1;
    long long count_samples = 0;
    unsigned long long seed = 0;
    count->add_option("--n", count_n, "number of curves")->required()->check(CLI::Range(1, 6));
    count->add_option("--samples", count_samples, "sample count (default 10x enumerated)");
    count->add_option("--seed", seed, "random seed");

    auto* retract = app.add_subcommand("retract", "deform a configuration to round circles");
    std::string retract_input, format = "json", pipeline = "auto";
    int frames = 33;
    retract->add_option("--input", retract_input, "circles or curves document")->required();
    retract->add_option("--frames", frames, "frames per stage")->check(CLI::Range(1, 10000));
    retract->add_option("--format", format, "frame output format")
        ->check(CLI::IsMember({"json", "svg"}));
    retract->add_option("--pipeline", pipeline, "retraction pipeline")
        ->check(CLI::IsMember({"auto", "convex", "conformal"}));

    auto* group = app.add_subcommand("group", "braided tree automorphism computations");
    group->require_subcommand(1);
    std::vector<std::string> group_inputs;
    const char* group_help = "tree document, then element documents";
    auto* aut = group->add_subcommand("aut-order", "automorphism group order of a tree");
    aut->add_option("--input", group_inputs, group_help)->required();
    auto* compose = group->add_subcommand("compose", "product of elements, left to right");
    compose->add_option("--input", group_inputs, group_help)->required();
    auto* pure = group->add_subcommand("is-pure", "does the element project to the identity");
    pure->add_option("--input", group_inputs, group_help)->required();
    auto* project = group->add_subcommand("project", "underlying tree automorphism");
    project->add_option("--input", group_inputs, group_help)->required();
    auto* signature = group->add_subcommand("signature", "pure subgroup signature of a tree");
    signature->add_option("--input", group_inputs, group_help)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(validate_input);
        if (tree->parsed()) return cmd_tree(tree_input);
        if (classify->parsed()) return cmd_classify(classify_inputs, labeled);
        if (count->parsed()) return cmd_count_components(count_n, count_samples, seed);
        if (retract->parsed()) return cmd_retract(retract_input, frames, format, pipeline);
        if (aut->parsed()) return cmd_group_aut_order(group_inputs);
        if (compose->parsed()) return cmd_group_compose(group_inputs);
        if (pure->parsed()) return cmd_group_is_pure(group_inputs);
        if (project->parsed()) return cmd_group_project(group_inputs);
        if (signature->parsed()) return cmd_group_signature(group_inputs);
    } catch (const jck::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const jck::ReductionBudget& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
