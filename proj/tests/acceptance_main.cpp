// End-to-end acceptance checks, one report line per shipped guarantee.
// Each criterion carries its own runtime budget; a budget overrun fails the
// criterion even when every individual check passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <memory>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jck/conformal.hpp"
#include "jck/curves.hpp"
#include "jck/geometry.hpp"
#include "jck/groups.hpp"
#include "jck/sampling.hpp"
#include "jck/trees.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#ifndef JCK_TEST_DATA_DIR
#define JCK_TEST_DATA_DIR "tests/data"
#endif

using namespace jck;

namespace {

CircleConfiguration seven_circles() {
    CircleConfiguration c;
    c.circles = {{-2, -0.5, 0.3}, {0, 0, 1},      {-0.2, 0.3, 0.2}, {-0.2, -0.3, 0.3},
                 {0.6, 0, 2},     {1, 1, 0.15},   {1.2, 1.2, 0.5}};
    return c;
}

double roundness(const Curve& c) {
    const CurveMetrics m = curve_metrics(c);
    return (m.outradius - m.inradius) / m.inradius;
}

double config_scale(const JordanConfiguration& j) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const Curve& c : j.curves)
        for (const Vec2& v : c.poly().vertices()) {
            xmin = std::min(xmin, v.x);
            xmax = std::max(xmax, v.x);
            ymin = std::min(ymin, v.y);
            ymax = std::max(ymax, v.y);
        }
    return std::hypot(xmax - xmin, ymax - ymin);
}

double hausdorff(const PolyCurve& a, const PolyCurve& b) {
    double h = 0;
    for (const Vec2& v : a.vertices()) h = std::max(h, dist_to_polygon(v, b));
    for (const Vec2& v : b.vertices()) h = std::max(h, dist_to_polygon(v, a));
    return h;
}

// ---------------------------------------------------------------- criterion 1

bool crit_component_counts(std::string& detail) {
    const long long expected[] = {1, 2, 4, 9, 20};
    for (int n = 1; n <= 5; ++n) {
        const auto codes = enumerate_trees(n);
        const long long enumerated = static_cast<long long>(codes.size());
        if (enumerated != expected[n - 1]) {
            detail = "enumerated " + std::to_string(enumerated) + " shapes for n=" +
                     std::to_string(n);
            return false;
        }
        if (oracle::count_tree_shapes(n) != expected[n - 1]) {
            detail = "brute-force shape count disagrees at n=" + std::to_string(n);
            return false;
        }
        // same experiment as the count-components command: fixed seed,
        // 10x enumerated samples, distinct canonical codes observed
        std::mt19937_64 rng(0);
        std::set<std::string> seen;
        for (long long s = 0; s < 10 * enumerated; ++s)
            seen.insert(canonical_code(circle_nesting_tree(random_circle_configuration(n, rng))));
        if (static_cast<long long>(seen.size()) != enumerated) {
            detail = "n=" + std::to_string(n) + ": observed " + std::to_string(seen.size()) +
                     " of " + std::to_string(enumerated) + " components";
            return false;
        }
    }
    detail = "enumerated = observed = (1, 2, 4, 9, 20), brute-force counts agree";
    return true;
}

// ---------------------------------------------------------------- criterion 2

bool crit_nesting_tree(std::string& detail) {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 1000; ++it) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const CircleConfiguration cfg = random_circle_configuration(n, rng);
        if (circle_nesting_tree(cfg).parents != oracle::nesting_tree(cfg).parents) {
            detail = "tree mismatch on random configuration " + std::to_string(it);
            return false;
        }
    }
    const std::vector<int> want{0, 5, 2, 2, 0, 7, 5};
    if (circle_nesting_tree(seven_circles()).parents != want) {
        detail = "seven-circle configuration produced the wrong parent map";
        return false;
    }
    detail = "1000 random configurations (n <= 8) match the containment oracle exactly";
    return true;
}

// ---------------------------------------------------------------- criterion 3

bool crit_convex_retraction(std::string& detail) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const JordanConfiguration j = testgen::random_convex_configuration(n, 3, rng);
        const RootedTree t0 = curve_nesting_tree(j);
        const int stages = depth_index(t0).dmax + 1;
        const int total = 33 * stages;
        for (int k = 0; k <= total; ++k) {
            const JordanConfiguration f = convex_retract_frame(j, double(k) / total);
            if (!validate_curves(f).ok()) {
                detail = "invalid frame " + std::to_string(k) + "/" + std::to_string(total) +
                         " on configuration " + std::to_string(it);
                return false;
            }
            if (curve_nesting_tree(f).parents != t0.parents) {
                detail = "tree changed at frame " + std::to_string(k) + " on configuration " +
                         std::to_string(it);
                return false;
            }
            if (k == total)
                for (const Curve& c : f.curves)
                    if (roundness(c) > 1e-9) {
                        detail = "final roundness " + std::to_string(roundness(c)) +
                                 " on configuration " + std::to_string(it);
                        return false;
                    }
        }
    }

    // all-circle input: every frame must reproduce the input bit for bit
    std::mt19937_64 rng2(12);
    for (int it = 0; it < 20; ++it) {
        const CircleConfiguration cfg =
            random_circle_configuration(1 + static_cast<int>(rng2() % 6), rng2);
        JordanConfiguration j;
        for (const Circle& c : cfg.circles)
            j.curves.push_back(Curve::circle({{c.x, c.y}, c.r}));
        for (const double t : {0.0, 0.31, 0.5, 0.77, 1.0}) {
            const JordanConfiguration f = convex_retract_frame(j, t);
            for (int c = 0; c < j.size(); ++c) {
                const bool same =
                    f.curves[c].is_circle() &&
                    f.curves[c].circle_shape().center.x == j.curves[c].circle_shape().center.x &&
                    f.curves[c].circle_shape().center.y == j.curves[c].circle_shape().center.y &&
                    f.curves[c].circle_shape().radius == j.curves[c].circle_shape().radius;
                if (!same) {
                    detail = "round input moved at t=" + std::to_string(t);
                    return false;
                }
                const auto& a = j.curves[c].poly().vertices();
                const auto& b = f.curves[c].poly().vertices();
                if (a.size() != b.size()) {
                    detail = "round input resampled at t=" + std::to_string(t);
                    return false;
                }
                for (size_t v = 0; v < a.size(); ++v)
                    if (a[v].x != b[v].x || a[v].y != b[v].y) {
                        detail = "round input vertices moved at t=" + std::to_string(t);
                        return false;
                    }
            }
        }
    }

    // retracting a transformed copy equals transforming the retraction
    std::mt19937_64 rng3(13);
    for (int it = 0; it < 20; ++it) {
        const int n = 1 + static_cast<int>(rng3() % 6);
        const JordanConfiguration j = testgen::random_convex_configuration(n, 3, rng3);
        const testgen::Similarity s = testgen::random_similarity(rng3);
        const JordanConfiguration js = testgen::transformed(j, s);
        const double tol = 1e-9 * s.scale * config_scale(j);
        for (const double t : {0.37, 0.81, 1.0}) {
            const JordanConfiguration fa = testgen::transformed(convex_retract_frame(j, t), s);
            const JordanConfiguration fb = convex_retract_frame(js, t);
            for (int c = 0; c < j.size(); ++c) {
                const auto& a = fa.curves[c].poly().vertices();
                const auto& b = fb.curves[c].poly().vertices();
                if (a.size() != b.size()) {
                    detail = "equivariance: vertex counts diverged at t=" + std::to_string(t);
                    return false;
                }
                for (size_t v = 0; v < a.size(); ++v)
                    if (dist(a[v], b[v]) > tol) {
                        detail = "equivariance error " + std::to_string(dist(a[v], b[v]) /
                                 (s.scale * config_scale(j))) + " at t=" + std::to_string(t);
                        return false;
                    }
            }
        }
    }
    detail = "200 configurations, 33 frames per stage valid, final roundness <= 1e-9, "
             "round inputs constant, equivariance <= 1e-9";
    return true;
}

// ---------------------------------------------------------------- criterion 4

bool crit_conformal(std::string& detail) {
    // identity sanity on an already-round domain
    {
        std::vector<Vec2> verts;
        for (int i = 0; i < 64; ++i) {
            const double a = 2 * std::numbers::pi * i / 64;
            verts.push_back({std::cos(a), std::sin(a)});
        }
        const DiskMap m(PolyCurve(verts), {0, 0});
        double worst = 0;
        for (const double r : {0.0, 0.3, 0.6, 0.85, 0.97, 1.0})
            for (int k = 0; k < 24; ++k) {
                const double a = 2 * std::numbers::pi * k / 24;
                const std::complex<double> z = r * std::complex<double>(std::cos(a), std::sin(a));
                worst = std::max(worst, std::abs(m.eval(z) - z));
            }
        if (worst > 5e-3) {
            detail = "disk identity error " + std::to_string(worst);
            return false;
        }
    }

    std::mt19937_64 rng(21);
    for (int it = 0; it < 50; ++it) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const JordanConfiguration j = testgen::random_nonconvex_configuration(n, rng);
        const RootedTree t0 = curve_nesting_tree(j);
        const RetractResult r = conformal_retract(j);
        for (size_t k = 0; k < r.frames.size(); ++k) {
            if (!validate_curves(r.frames[k]).ok()) {
                detail = "invalid frame " + std::to_string(k) + " on configuration " +
                         std::to_string(it);
                return false;
            }
            if (curve_nesting_tree(r.frames[k]).parents != t0.parents) {
                detail = "tree changed at frame " + std::to_string(k) + " on configuration " +
                         std::to_string(it);
                return false;
            }
        }
        for (const Curve& c : r.frames.back().curves)
            if (roundness(c) > 1e-2) {
                detail = "final roundness " + std::to_string(roundness(c)) +
                         " on configuration " + std::to_string(it);
                return false;
            }
    }

    // the shrink parameter only depends on the domain up to scale
    std::mt19937_64 rng2(22);
    for (int it = 0; it < 6; ++it) {
        const JordanConfiguration j = testgen::random_nonconvex_configuration(1, rng2);
        const Curve& c = j.curves[0];
        const Vec2 ctr = curve_center(c);
        const DiskMap m(c.poly(), ctr);
        const double target = 0.9 * curve_metrics(c).inradius;
        const ShrinkSolution a = solve_shrink_parameter(m, target);

        std::vector<Vec2> scaled;
        for (const Vec2& v : c.poly().vertices()) scaled.push_back({37 * v.x, 37 * v.y});
        const DiskMap ms(PolyCurve(scaled), {37 * ctr.x, 37 * ctr.y});
        const ShrinkSolution b = solve_shrink_parameter(ms, 37 * target);
        if (std::abs(a.y - b.y) > 1e-6) {
            detail = "shrink parameter drifted " + std::to_string(std::abs(a.y - b.y)) +
                     " under scaling";
            return false;
        }
    }

    // equivariance, up to the pipeline's own accuracy
    std::mt19937_64 rng3(23);
    for (int it = 0; it < 8; ++it) {
        const int n = 1 + static_cast<int>(rng3() % 2);
        const JordanConfiguration j = testgen::random_nonconvex_configuration(n, rng3);
        const testgen::Similarity s = testgen::random_similarity(rng3);
        const RetractResult ra = conformal_retract(j, 5);
        const RetractResult rb = conformal_retract(testgen::transformed(j, s), 5);
        if (ra.frames.size() != rb.frames.size()) {
            detail = "equivariance: frame counts diverged";
            return false;
        }
        const double tol = 1e-2 * s.scale * config_scale(j);
        for (size_t k = 0; k < ra.frames.size(); ++k)
            for (int c = 0; c < j.size(); ++c) {
                const JordanConfiguration fa = testgen::transformed(ra.frames[k], s);
                const double h = hausdorff(fa.curves[c].poly(), rb.frames[k].curves[c].poly());
                if (h > tol) {
                    detail = "equivariance error " + std::to_string(h / (s.scale *
                             config_scale(j))) + " at frame " + std::to_string(k);
                    return false;
                }
            }
    }
    detail = "50 configurations valid throughout, final roundness <= 1e-2, disk identity "
             "<= 5e-3, scale invariance <= 1e-6, equivariance <= 1e-2";
    return true;
}

// ---------------------------------------------------------------- criterion 5

bool crit_groups(std::string& detail) {
    for (int n = 0; n <= 7; ++n)
        for (const std::string& code : enumerate_trees(n)) {
            const RootedTree t = tree_from_code(code);
            if (aut_order(t) != static_cast<unsigned long long>(oracle::aut_order(t))) {
                detail = "automorphism order mismatch on " + code;
                return false;
            }
        }

    std::mt19937_64 rng(31);
    for (int it = 0; it < 500; ++it) {
        const int strands = 2 + static_cast<int>(rng() % 4);
        BraidWord b = testgen::random_braid(strands, 16, rng);
        if (it % 4 == 0) b = braid_concat(b, braid_inverse_word(b));
        if (braid_is_trivial(b) != oracle::braid_trivial(b.strands, b.word)) {
            detail = "word problem disagrees with the free-group action on word " +
                     std::to_string(it);
            return false;
        }
    }

    std::mt19937_64 rng2(32);
    for (int tr = 0; tr < 20; ++tr) {
        const int n = 1 + static_cast<int>(rng2() % 7);
        auto t = std::make_shared<const RootedTree>(testgen::random_tree_depth(n, n, rng2));
        const BAutElement e = BAutElement::identity(t);
        for (int it = 0; it < 100; ++it) {
            const BAutElement a = testgen::random_baut(t, rng2);
            const BAutElement b = testgen::random_baut(t, rng2);
            const BAutElement c = testgen::random_baut(t, rng2);
            auto equal = [](const BAutElement& x, const BAutElement& y) {
                return baut_is_trivial(baut_compose(x, baut_inverse(y)));
            };
            if (!equal(baut_compose(a, e), a) || !equal(baut_compose(e, a), a)) {
                detail = "identity law failed";
                return false;
            }
            if (!baut_is_trivial(baut_compose(a, baut_inverse(a)))) {
                detail = "inverse law failed";
                return false;
            }
            if (!equal(baut_compose(baut_compose(a, b), c),
                       baut_compose(a, baut_compose(b, c)))) {
                detail = "associativity failed";
                return false;
            }
            const TreeAutomorphism pa = baut_project(a);
            const TreeAutomorphism pb = baut_project(b);
            const TreeAutomorphism pab = baut_project(baut_compose(a, b));
            for (int v = 1; v <= n; ++v)
                if (pab.images[v - 1] != pa.images[pb.images[v - 1] - 1]) {
                    detail = "projection is not a homomorphism";
                    return false;
                }
        }
    }

    std::mt19937_64 rng3(33);
    for (int it = 0; it < 50; ++it) {
        RootedTree t = testgen::random_tree_depth(1 + static_cast<int>(rng3() % 7), 7, rng3);
        t.labeled = true;
        auto sp = std::make_shared<const RootedTree>(std::move(t));
        if (!baut_is_pure(testgen::random_baut(sp, rng3))) {
            detail = "labeled-tree element is not pure";
            return false;
        }
    }
    detail = "automorphism orders exact to 7 vertices, 500 braid words match the oracle, "
             "axioms and projection hold on 20 trees x 100 samples, labeled implies pure";
    return true;
}

// ---------------------------------------------------------------- criterion 6

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool crit_determinism(std::string& detail) {
    const char* bin = std::getenv("JCK_BIN");
    if (!bin) {
        detail = "JCK_BIN is not set";
        return false;
    }
    const std::string data = JCK_TEST_DATA_DIR;
    const std::vector<std::string> commands = {
        std::string(bin) + " tree --input " + data + "/fig4_circles.json",
        std::string(bin) + " tree --input " + data + "/fig6_curves.json",
        std::string(bin) + " retract --input " + data + "/fig4_circles.json --frames 4 --format json",
        std::string(bin) + " retract --input " + data + "/fig4_circles.json --frames 4 --format svg",
        std::string(bin) + " retract --input " + data + "/fig6_curves.json --frames 4 --format json",
        std::string(bin) + " retract --input " + data + "/fig6_curves.json --frames 4 --format svg",
    };
    for (size_t i = 0; i < commands.size(); ++i) {
        const std::string fa = "acceptance_run_a.tmp", fb = "acceptance_run_b.tmp";
        for (const std::string& f : {fa, fb})
            if (std::system((commands[i] + " > " + f + " 2>/dev/null").c_str()) != 0) {
                detail = "command failed: " + commands[i];
                return false;
            }
        const std::string a = slurp(fa), b = slurp(fb);
        std::remove(fa.c_str());
        std::remove(fb.c_str());
        if (a.empty() || a != b) {
            detail = "outputs differ across runs for: " + commands[i];
            return false;
        }
    }
    detail = "tree and retraction outputs byte-identical across runs (JSON and SVG)";
    return true;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        double budget_s;  // 0 = no budget
        bool (*fn)(std::string&);
    };
    const Entry entries[] = {
        {"component counts by sampling", 30, crit_component_counts},
        {"nesting tree vs containment oracle", 10, crit_nesting_tree},
        {"convex retraction", 60, crit_convex_retraction},
        {"conformal retraction", 300, crit_conformal},
        {"group layer", 60, crit_groups},
        {"deterministic outputs", 0, crit_determinism},
    };
    int failures = 0;
    for (size_t i = 0; i < std::size(entries); ++i) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = entries[i].fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && entries[i].budget_s > 0 && elapsed > entries[i].budget_s) {
            ok = false;
            detail = "over budget (" + std::to_string(entries[i].budget_s) + " s)";
        }
        std::printf("[%s] %zu %s: %s (%.1f s)\n", ok ? "PASS" : "FAIL", i + 1, entries[i].name,
                    detail.c_str(), elapsed);
        std::fflush(stdout);
        failures += ok ? 0 : 1;
    }
    if (failures == 0)
        std::printf("all 6 criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
