#include "oldset/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "oldset/canonical.hpp"
#include "oldset/construct.hpp"
#include "oldset/edge_list.hpp"
#include "oldset/enumerate.hpp"
#include "oldset/forcing.hpp"
#include "oldset/old_solver.hpp"
#include "oldset/trees.hpp"

namespace oldset {

namespace {

struct ShardOut {
    std::vector<std::string> counterexamples;
    std::array<std::uint64_t, 4> counters{};
};

// Shards [0, count) across workers; the merge is order-independent because
// every claim sorts its counterexamples before emission.
ShardOut scan_indices(std::uint64_t count, int workers,
                      const std::function<void(std::uint64_t, ShardOut&)>& fn) {
    ShardOut total;
    if (workers <= 1 || count < 1024) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i, total);
        return total;
    }
    const int t = std::min<std::uint64_t>(workers, count);
    std::vector<ShardOut> parts(t);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (count + t - 1) / t;
    for (int w = 0; w < t; ++w) {
        threads.emplace_back([&, w] {
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min(count, lo + chunk);
            for (std::uint64_t i = lo; i < hi; ++i) fn(i, parts[w]);
        });
    }
    for (auto& th : threads) th.join();
    for (auto& part : parts) {
        total.counterexamples.insert(total.counterexamples.end(), part.counterexamples.begin(),
                                     part.counterexamples.end());
        for (std::size_t c = 0; c < total.counters.size(); ++c)
            total.counters[c] += part.counters[c];
    }
    return total;
}

std::uint64_t encode_arcs(const Digraph& d) {
    std::uint64_t code = 0;
    for (const auto& [u, v] : d.arcs()) code |= 1ull << (u * d.order() + v);
    return code;
}

Digraph symmetric_from_mask(int n, std::uint64_t mask, bool with_loops) {
    Digraph d(n);
    int p = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++p)
            if ((mask >> p) & 1u) {
                d.add_arc(u, v);
                d.add_arc(v, u);
            }
    if (with_loops)
        for (int v = 0; v < n; ++v) d.add_arc(v, v);
    return d;
}

// Reflexive digraph without directed 2-cycles: one base-3 digit per vertex
// pair (none / u->v / v->u), loops everywhere.
Digraph reflexive_oriented_from_index(int n, std::uint64_t index) {
    Digraph d(n);
    for (int v = 0; v < n; ++v) d.add_arc(v, v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            switch (index % 3) {
                case 1: d.add_arc(u, v); break;
                case 2: d.add_arc(v, u); break;
                default: break;
            }
            index /= 3;
        }
    return d;
}

void for_each_rooted_tree(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n == 1) {
        fn(std::vector<int>{-1});
        return;
    }
    for (int root = 0; root < n; ++root) {
        std::vector<int> choice(n, 0);
        while (true) {
            std::vector<int> parent(n, -1);
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                if (v == root) continue;
                parent[v] = choice[v];
                if (parent[v] == v) ok = false;
            }
            if (ok) {
                for (int v = 0; v < n && ok; ++v) {
                    int steps = 0;
                    for (int a = parent[v]; a != -1; a = parent[a])
                        if (++steps > n) {
                            ok = false;
                            break;
                        }
                }
            }
            if (ok) fn(parent);
            int i = 0;
            while (i < n) {
                if (i == root) {
                    ++i;
                    continue;
                }
                if (++choice[i] < n) break;
                choice[i++] = 0;
            }
            if (i >= n) break;
        }
    }
}

bool is_tc_of_rooted_tree_plus_loops(const Digraph& d) {
    const int n = d.order();
    Digraph loopless(n);
    for (const auto& [u, v] : d.arcs())
        if (u != v) loopless.add_arc(u, v);
    const std::uint64_t want = encode_arcs(reflexive_closure(loopless));
    bool found = false;
    for_each_rooted_tree(n, [&](const std::vector<int>& parent) {
        if (found) return;
        if (encode_arcs(build_tc_rooted_tree(parent, true)) == want) found = true;
    });
    return found;
}

std::uint64_t pow3(int e) {
    std::uint64_t out = 1;
    while (e-- > 0) out *= 3;
    return out;
}

struct ClaimContext {
    int max_n;
    int workers;
    VerificationReport report;
};

void note_order_line(ClaimContext& ctx, int n, const std::string& text) {
    ctx.report.notes.push_back("n=" + std::to_string(n) + ": " + text);
}

// ---------------------------------------------------------------------------
// Claims over the full labelled-digraph populations (orders 1..max_n).
// ---------------------------------------------------------------------------

void claim_over_all_digraphs(
    ClaimContext& ctx, const std::string& population,
    const std::function<void(const Digraph&, ShardOut&)>& check,
    const std::function<std::string(const ShardOut&)>& describe = nullptr) {
    ctx.report.population = population + ", orders 1.." + std::to_string(ctx.max_n);
    for (int n = 1; n <= ctx.max_n; ++n) {
        const LabelledDigraphFamily family = labelled_digraphs(n, ctx.max_n);
        ShardOut out = scan_indices(family.size(), ctx.workers, [&](std::uint64_t i, ShardOut& s) {
            check(family.at(i), s);
        });
        ctx.report.instances_checked += family.size();
        std::string line = std::to_string(family.size()) + " scanned";
        if (describe) line += ", " + describe(out);
        note_order_line(ctx, n, line);
        ctx.report.counterexamples.insert(ctx.report.counterexamples.end(),
                                          out.counterexamples.begin(), out.counterexamples.end());
    }
}

void claim_main(ClaimContext& ctx) {
    claim_over_all_digraphs(
        ctx, "all labelled digraphs with loops",
        [](const Digraph& d, ShardOut& s) {
            if (!is_locatable(d)) return;
            ++s.counters[0];
            const bool brute = is_extremal(d);
            const bool structural = is_extremal_structural(d);
            if (brute) ++s.counters[1];
            if (brute != structural)
                s.counterexamples.push_back("gamma=n is " + std::string(brute ? "true" : "false") +
                                            " but spanning forcing cycles is " +
                                            std::string(structural ? "true" : "false") + " | " +
                                            compact_edge_list(d));
        },
        [](const ShardOut& s) {
            return std::to_string(s.counters[0]) + " locatable, " + std::to_string(s.counters[1]) +
                   " extremal";
        });
}

void claim_no_double(ClaimContext& ctx) {
    claim_over_all_digraphs(ctx, "all labelled digraphs with loops",
                            [](const Digraph& d, ShardOut& s) {
                                if (!is_locatable(d) || !is_extremal(d)) return;
                                ++s.counters[0];
                                if (forced_report(d).any_double_forced())
                                    s.counterexamples.push_back("extremal digraph with a "
                                                                "double-forced vertex | " +
                                                                compact_edge_list(d));
                            },
                            [](const ShardOut& s) {
                                return std::to_string(s.counters[0]) + " extremal";
                            });
}

void claim_bondy(ClaimContext& ctx) {
    claim_over_all_digraphs(ctx, "all labelled digraphs with loops",
                            [](const Digraph& d, ShardOut& s) {
                                if (!is_locatable(d)) return;
                                ++s.counters[0];
                                const int lf = forced_report(d).location_forced_set().size();
                                if (lf > d.order() - 1)
                                    s.counterexamples.push_back(
                                        std::to_string(lf) + " location-forced vertices | " +
                                        compact_edge_list(d));
                            },
                            [](const ShardOut& s) {
                                return std::to_string(s.counters[0]) + " locatable";
                            });
}

void claim_all_forced(ClaimContext& ctx) {
    claim_over_all_digraphs(
        ctx, "all labelled digraphs with loops", [](const Digraph& d, ShardOut& s) {
            if (!is_locatable(d)) return;
            ++s.counters[0];
            const ForcedReport rep = forced_report(d);
            const VertexSet all = VertexSet::full(d.order());
            for (int v = 0; v < d.order(); ++v) {
                if (rep.vertices[v].forced()) continue;
                VertexSet without = all;
                without.remove(v);
                if (!is_old_set(d, without))
                    s.counterexamples.push_back("unforced vertex " + std::to_string(v) +
                                                " whose deletion is not an OLD set | " +
                                                compact_edge_list(d));
            }
        });
}

void claim_corloc(ClaimContext& ctx) {
    claim_over_all_digraphs(
        ctx, "all labelled digraphs with loops", [](const Digraph& d, ShardOut& s) {
            if (forced_report(d).forced_set() != VertexSet::full(d.order())) return;
            ++s.counters[0];
            if (!is_locatable(d))
                s.counterexamples.push_back("all vertices forced but not locatable | " +
                                            compact_edge_list(d));
        },
        [](const ShardOut& s) { return std::to_string(s.counters[0]) + " with all forced"; });
}

void claim_h_forest(ClaimContext& ctx) {
    claim_over_all_digraphs(
        ctx, "all labelled digraphs with loops", [](const Digraph& d, ShardOut& s) {
            if (!is_locatable(d) || !is_extremal(d)) return;
            ++s.counters[0];
            const auto fail = [&](const std::string& why) {
                s.counterexamples.push_back(why + " | " + compact_edge_list(d));
            };
            const ForcingDecomposition fd = forcing_decomposition(d);
            if (!fd.spans_cycles) return fail("extremal but forcing arcs do not span cycles");
            const HForest h = build_h_digraph(d);
            if (!h.is_forest) return fail("H(D) is not a forest");
            const ForcedReport rep = forced_report(d);
            VertexSet root_preimages(d.order());
            for (int v = 0; v < d.order(); ++v) {
                if (h.roots.contains(v)) {
                    root_preimages.add(fd.f_minus[v]);
                    if (!rep.vertices[fd.f_minus[v]].domination_forced())
                        fail("root " + std::to_string(v) + " has f-(" + std::to_string(v) +
                             ") not domination-forced");
                } else if (!rep.vertices[fd.f_minus[v]].location_forced()) {
                    fail("non-root " + std::to_string(v) + " has f-(" + std::to_string(v) +
                         ") not location-forced");
                }
            }
            if (root_preimages != rep.domination_forced_set())
                fail("f-(roots) differ from the domination-forced set");
        },
        [](const ShardOut& s) { return std::to_string(s.counters[0]) + " extremal"; });
}

void claim_strip(ClaimContext& ctx) {
    claim_over_all_digraphs(
        ctx, "all labelled digraphs with loops", [](const Digraph& d, ShardOut& s) {
            if (!is_locatable(d) || !is_extremal(d)) return;
            ++s.counters[0];
            const ForcedReport rep = forced_report(d);
            const std::vector<Arc> original = forcing_arcs(d);
            for (int x = 0; x < d.order(); ++x) {
                const Digraph stripped = strip_non_forcing_arcs(d, x);
                if (!is_locatable(stripped) || !is_extremal(stripped)) {
                    s.counterexamples.push_back("stripping non-forcing arcs at " +
                                                std::to_string(x) + " loses extremality | " +
                                                compact_edge_list(d));
                    continue;
                }
                if (!rep.vertices[x].location_forced() && forcing_arcs(stripped) != original)
                    s.counterexamples.push_back("forcing arcs changed by stripping at the non-"
                                                "location-forced vertex " +
                                                std::to_string(x) + " | " + compact_edge_list(d));
            }
        },
        [](const ShardOut& s) { return std::to_string(s.counters[0]) + " extremal"; });
}

void claim_source_sink(ClaimContext& ctx) {
    claim_over_all_digraphs(
        ctx, "all labelled digraphs with loops", [](const Digraph& d, ShardOut& s) {
            const StructureFlags flags = classify(d);
            if (!flags.source_exists && !flags.sink_exists) return;
            ++s.counters[0];
            if (is_extremal_structural(d) || is_extremal(d))
                s.counterexamples.push_back("digraph with a source or sink is extremal | " +
                                            compact_edge_list(d));
        },
        [](const ShardOut& s) {
            return std::to_string(s.counters[0]) + " with a source or sink";
        });
}

// ---------------------------------------------------------------------------
// CONSTRUCT: blueprint soundness, completeness and round-trips.
// ---------------------------------------------------------------------------

void claim_construct(ClaimContext& ctx) {
    ctx.report.population =
        "all labelled digraphs and all blueprints, orders 1.." + std::to_string(ctx.max_n);
    for (int n = 1; n <= ctx.max_n; ++n) {
        std::map<CanonicalForm, std::string> scanned;  // extremal classes from the scan
        const LabelledDigraphFamily family = labelled_digraphs(n, ctx.max_n);
        ShardOut scan = scan_indices(family.size(), ctx.workers, [&](std::uint64_t i, ShardOut& s) {
            const Digraph d = family.at(i);
            if (!is_locatable(d) || !is_extremal(d)) return;
            ++s.counters[0];
            // Round-trip on every extremal instance found by brute force.
            const Digraph rebuilt = construct_from_blueprint(decompose_to_blueprint(d));
            if (rebuilt.arcs() != d.arcs())
                s.counterexamples.push_back("decompose/construct round-trip changed the arcs | " +
                                            compact_edge_list(d));
        });
        ctx.report.instances_checked += family.size();
        ctx.report.counterexamples.insert(ctx.report.counterexamples.end(),
                                          scan.counterexamples.begin(), scan.counterexamples.end());
        for (std::uint64_t i = 0; i < family.size(); ++i) {
            const Digraph d = family.at(i);
            if (is_locatable(d) && is_extremal(d))
                scanned.try_emplace(canonical_form(d), compact_edge_list(d));
        }

        std::map<CanonicalForm, std::string> constructed;
        std::map<std::uint64_t, std::uint64_t> multiplicity;
        const std::uint64_t blueprints = enumerate_blueprints(
            n,
            [&](const ExtremalBlueprint& b) {
                const Digraph d = construct_from_blueprint(b);
                ++multiplicity[encode_arcs(d)];
                if (!is_locatable(d) || !is_extremal(d)) {
                    ctx.report.counterexamples.push_back(
                        "blueprint construction is not extremal | " + compact_edge_list(d));
                    return;
                }
                constructed.try_emplace(canonical_form(d), compact_edge_list(d));
                const Digraph rebuilt = construct_from_blueprint(decompose_to_blueprint(d));
                if (rebuilt.arcs() != d.arcs())
                    ctx.report.counterexamples.push_back(
                        "blueprint round-trip changed the arcs | " + compact_edge_list(d));
            },
            std::max(ctx.max_n, 5));
        ctx.report.instances_checked += blueprints;

        for (const auto& [form, example] : scanned)
            if (!constructed.count(form))
                ctx.report.counterexamples.push_back(
                    "extremal class missed by the constructions | " + example);
        for (const auto& [form, example] : constructed)
            if (!scanned.count(form))
                ctx.report.counterexamples.push_back(
                    "constructed class not found extremal by the scan | " + example);

        std::uint64_t max_mult = 0;
        for (const auto& [code, count] : multiplicity) max_mult = std::max(max_mult, count);
        note_order_line(ctx, n,
                        std::to_string(blueprints) + " blueprints, " +
                            std::to_string(scanned.size()) + " extremal classes, max blueprint "
                            "multiplicity per labelled digraph " +
                            std::to_string(max_mult));
    }
}

// ---------------------------------------------------------------------------
// Section-3 populations.
// ---------------------------------------------------------------------------

void claim_reflex_sym(ClaimContext& ctx) {
    ctx.report.population = "connected reflexive symmetric locatable digraphs, orders 2.." +
                            std::to_string(ctx.max_n);
    for (int n = 2; n <= ctx.max_n; ++n) {
        const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
        ShardOut out = scan_indices(masks, ctx.workers, [&](std::uint64_t mask, ShardOut& s) {
            const Digraph d = symmetric_from_mask(n, mask, true);
            if (!underlying_graph(d).connected() || !is_locatable(d)) return;
            ++s.counters[0];
            if (is_extremal(d))
                s.counterexamples.push_back("gamma equals the order beyond n=1 | " +
                                            compact_edge_list(d));
        });
        ctx.report.instances_checked += masks;
        note_order_line(ctx, n,
                        std::to_string(masks) + " graphs scanned, " +
                            std::to_string(out.counters[0]) + " connected locatable");
        ctx.report.counterexamples.insert(ctx.report.counterexamples.end(),
                                          out.counterexamples.begin(), out.counterexamples.end());
    }
}

void claim_reflex_orient(ClaimContext& ctx) {
    ctx.report.population = "connected reflexive digraphs without directed 2-cycles, orders 1.." +
                            std::to_string(ctx.max_n) + ", plus all rooted trees on up to " +
                            std::to_string(ctx.max_n + 1) + " vertices";
    for (int n = 1; n <= ctx.max_n; ++n) {
        const std::uint64_t states = pow3(n * (n - 1) / 2);
        ShardOut out = scan_indices(states, ctx.workers, [&](std::uint64_t index, ShardOut& s) {
            const Digraph d = reflexive_oriented_from_index(n, index);
            if (!underlying_graph(d).connected()) return;
            ++s.counters[0];
            const bool extremal = is_extremal(d);
            const bool tc_form = is_tc_of_rooted_tree_plus_loops(d);
            if (extremal != tc_form)
                s.counterexamples.push_back(
                    std::string("extremal=") + (extremal ? "yes" : "no") +
                    " but rooted-tree transitive closure form=" + (tc_form ? "yes" : "no") +
                    " | " + compact_edge_list(d));
        });
        ctx.report.instances_checked += states;
        note_order_line(ctx, n,
                        std::to_string(states) + " scanned, " + std::to_string(out.counters[0]) +
                            " connected");
        ctx.report.counterexamples.insert(ctx.report.counterexamples.end(),
                                          out.counterexamples.begin(), out.counterexamples.end());
    }
    for (int m = 1; m <= ctx.max_n + 1; ++m) {
        std::uint64_t trees = 0;
        for_each_rooted_tree(m, [&](const std::vector<int>& parent) {
            ++trees;
            const Digraph d = build_tc_rooted_tree(parent, true);
            if (!is_locatable(d) || !is_extremal(d))
                ctx.report.counterexamples.push_back(
                    "rooted-tree transitive closure with loops is not extremal | " +
                    compact_edge_list(d));
        });
        ctx.report.instances_checked += trees;
        ctx.report.notes.push_back("trees m=" + std::to_string(m) + ": " + std::to_string(trees) +
                                   " rooted trees all extremal after closure");
    }
}

void claim_half(ClaimContext& ctx) {
    ctx.report.population =
        "connected symmetric loop-free locatable digraphs, orders 1.." + std::to_string(ctx.max_n);
    std::map<int, CanonicalForm> half_canon;
    for (int k = 1; 2 * k <= ctx.max_n; ++k)
        half_canon.emplace(k, canonical_form(build_half_graph_digraph(k), 2 * k));
    for (int n = 1; n <= ctx.max_n; ++n) {
        const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
        ShardOut out = scan_indices(masks, ctx.workers, [&](std::uint64_t mask, ShardOut& s) {
            const Digraph d = symmetric_from_mask(n, mask, false);
            if (!underlying_graph(d).connected() || !is_locatable(d)) return;
            ++s.counters[0];
            const bool extremal = is_extremal(d);
            if (extremal) ++s.counters[1];
            const bool is_half = n % 2 == 0 && canonical_form(d, n) == half_canon.at(n / 2);
            if (extremal != is_half)
                s.counterexamples.push_back(std::string("extremal=") + (extremal ? "yes" : "no") +
                                            " but half-graph realization=" +
                                            (is_half ? "yes" : "no") + " | " +
                                            compact_edge_list(d));
        });
        ctx.report.instances_checked += masks;
        note_order_line(ctx, n,
                        std::to_string(masks) + " graphs scanned, " +
                            std::to_string(out.counters[0]) + " connected locatable, " +
                            std::to_string(out.counters[1]) + " extremal");
        ctx.report.counterexamples.insert(ctx.report.counterexamples.end(),
                                          out.counterexamples.begin(), out.counterexamples.end());
    }
    for (int k = 1; k <= 3 && 2 * k <= ctx.max_n; ++k) {
        const Digraph hk = build_half_graph_digraph(k);
        const OldResult r = min_old_set(hk);
        ++ctx.report.instances_checked;
        if (!r.gamma || *r.gamma != 2 * k)
            ctx.report.counterexamples.push_back(
                "gamma of the half-graph H_" + std::to_string(k) + " is " +
                (r.gamma ? std::to_string(*r.gamma) : std::string("undefined")) + ", expected " +
                std::to_string(2 * k) + " | " + compact_edge_list(hk));
        else
            ctx.report.notes.push_back("H_" + std::to_string(k) +
                                       ": gamma=" + std::to_string(*r.gamma));
    }
}

// ---------------------------------------------------------------------------
// Tree-family claims.
// ---------------------------------------------------------------------------

void claim_trees(ClaimContext& ctx) {
    ctx.report.population =
        "digraphs whose underlying graph is a tree, orders 1.." + std::to_string(ctx.max_n);
    const std::vector<TreeCatalog> recursive = enumerate_tree_catalogs(ctx.max_n, ctx.max_n);
    const std::vector<TreeCatalog> oracle = oracle_tree_catalogs(ctx.max_n, ctx.max_n);
    for (int n = 1; n <= ctx.max_n; ++n)
        ctx.report.instances_checked += tree_digraphs(n, ctx.max_n).size();

    const std::array<std::size_t, 2> base_expected{1, 3};
    for (int n = 1; n <= std::min(2, ctx.max_n); ++n)
        if (recursive[n - 1].members.size() != base_expected[n - 1])
            ctx.report.counterexamples.push_back(
                "base catalog size for order " + std::to_string(n) + " is " +
                std::to_string(recursive[n - 1].members.size()) + ", expected " +
                std::to_string(base_expected[n - 1]));

    for (int n = 1; n <= ctx.max_n; ++n) {
        const TreeCatalog& rec = recursive[n - 1];
        const TreeCatalog& ora = oracle[n - 1];
        for (const auto& m : ora.members)
            if (!rec.contains(m.form))
                ctx.report.counterexamples.push_back("class missed by the recursive build | " +
                                                     compact_edge_list(m.digraph));
        for (const auto& m : rec.members)
            if (!ora.contains(m.form))
                ctx.report.counterexamples.push_back("recursive build produced a non-member | " +
                                                     compact_edge_list(m.digraph));
        if (rec.labelled_count != ora.labelled_count)
            ctx.report.counterexamples.push_back(
                "labelled counts differ at order " + std::to_string(n) + ": recursive " +
                std::to_string(rec.labelled_count) + " vs oracle " +
                std::to_string(ora.labelled_count));
        note_order_line(ctx, n,
                        std::to_string(rec.members.size()) + " classes, " +
                            std::to_string(rec.labelled_count) + " labelled digraphs");
    }

    if (ctx.max_n >= 3) {
        const Digraph pendant_a(3, {{2, 2}, {0, 1}, {1, 0}, {1, 1}, {1, 2}});
        const Digraph pendant_b(3, {{2, 2}, {0, 1}, {1, 0}, {1, 2}});
        for (const Digraph* d : {&pendant_a, &pendant_b})
            if (!recursive[2].contains(canonical_form(*d)))
                ctx.report.counterexamples.push_back(
                    "order-3 pendant digraph missing from the catalog | " + compact_edge_list(*d));
    }

    // Deletion inverses: a forcing loop at a leaf peels one vertex, a forcing
    // 2-cycle at the leaf of a length-2 pendant path peels two.
    for (int n = 3; n <= ctx.max_n; ++n) {
        for (const auto& member : oracle[n - 1].members) {
            const Digraph& d = member.digraph;
            const UndirectedGraph tree = underlying_graph(d);
            const ForcingDecomposition fd = forcing_decomposition(d);
            if (!fd.spans_cycles) continue;  // reported via MAIN
            const VertexSet all = VertexSet::full(n);
            for (int a = 0; a < n; ++a) {
                if (tree.degree(a) != 1) continue;
                if (fd.f_plus[a] == a) {
                    VertexSet keep = all;
                    keep.remove(a);
                    const Digraph peeled = induced_subgraph(d, keep);
                    if (!oracle[n - 2].contains(canonical_form(peeled)))
                        ctx.report.counterexamples.push_back(
                            "deleting the looped leaf " + std::to_string(a) +
                            " leaves a non-member | " + compact_edge_list(d));
                } else {
                    const int b = fd.f_plus[a];
                    if (tree.degree(b) != 2 || fd.f_plus[b] != a) continue;
                    if (d.has_loop(a))
                        ctx.report.counterexamples.push_back(
                            "leaf " + std::to_string(a) +
                            " of a forcing 2-cycle carries a loop | " + compact_edge_list(d));
                    VertexSet keep = all;
                    keep.remove(a);
                    keep.remove(b);
                    const Digraph peeled = induced_subgraph(d, keep);
                    if (!oracle[n - 3].contains(canonical_form(peeled)))
                        ctx.report.counterexamples.push_back(
                            "deleting the pendant pair {" + std::to_string(a) + "," +
                            std::to_string(b) + "} leaves a non-member | " + compact_edge_list(d));
                }
            }
        }
    }
}

void claim_tree_lemmas(ClaimContext& ctx) {
    ctx.report.population = "all members of the oracle tree catalogs, orders 1.." +
                            std::to_string(ctx.max_n);
    const std::vector<TreeCatalog> oracle = oracle_tree_catalogs(ctx.max_n, ctx.max_n);
    for (const TreeCatalog& cat : oracle) {
        for (const auto& member : cat.members) {
            ++ctx.report.instances_checked;
            const TreeLemmaReport rep = check_tree_lemmas(member.digraph);
            for (const auto& violation : rep.violations)
                ctx.report.counterexamples.push_back(violation + " | " +
                                                     compact_edge_list(member.digraph));
        }
        note_order_line(ctx, cat.order, std::to_string(cat.members.size()) + " members checked");
    }
}

struct ClaimSpec {
    const char* name;
    int default_max_n;
    int hard_cap;
    void (*run)(ClaimContext&);
};

constexpr ClaimSpec claim_table[] = {
    {"MAIN", 4, 5, claim_main},
    {"NO-DOUBLE", 4, 5, claim_no_double},
    {"BONDY", 4, 5, claim_bondy},
    {"ALL-FORCED", 4, 5, claim_all_forced},
    {"CORLOC", 4, 5, claim_corloc},
    {"H-FOREST", 4, 5, claim_h_forest},
    {"STRIP", 4, 5, claim_strip},
    {"SOURCE-SINK", 4, 5, claim_source_sink},
    {"CONSTRUCT", 4, 5, claim_construct},
    {"REFLEX-SYM", 5, 6, claim_reflex_sym},
    {"REFLEX-ORIENT", 4, 5, claim_reflex_orient},
    {"HALF", 6, 7, claim_half},
    {"TREES", 5, 6, claim_trees},
    {"TREE-LEMMAS", 5, 6, claim_tree_lemmas},
};

}  // namespace

int default_worker_count() {
    if (const char* env = std::getenv("OLDSET_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& spec : claim_table) out.emplace_back(spec.name);
        return out;
    }();
    return names;
}

VerificationReport verify_claim(std::string_view claim, const VerifyOptions& options) {
    for (const auto& spec : claim_table) {
        if (claim != spec.name) continue;
        ClaimContext ctx;
        ctx.max_n = options.max_n.value_or(spec.default_max_n);
        if (ctx.max_n < 1 || ctx.max_n > spec.hard_cap)
            throw std::length_error(std::string(claim) + ": order cap exceeded (hard cap " +
                                    std::to_string(spec.hard_cap) + ")");
        ctx.workers = options.workers > 0 ? options.workers : default_worker_count();
        ctx.report.claim = spec.name;
        const auto start = std::chrono::steady_clock::now();
        spec.run(ctx);
        std::sort(ctx.report.counterexamples.begin(), ctx.report.counterexamples.end());
        ctx.report.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return ctx.report;
    }
    throw std::invalid_argument("unknown claim: " + std::string(claim));
}

std::string format_report(const VerificationReport& report, bool include_elapsed) {
    std::ostringstream out;
    out << "claim: " << report.claim << "\n";
    out << "population: " << report.population << "\n";
    out << "instances: " << report.instances_checked << "\n";
    for (const auto& note : report.notes) out << "note: " << note << "\n";
    out << "counterexamples: " << report.counterexamples.size() << "\n";
    for (const auto& cex : report.counterexamples) out << "  - " << cex << "\n";
    out << "verdict: " << (report.verified() ? "VERIFIED" : "COUNTEREXAMPLES FOUND") << "\n";
    if (include_elapsed) {
        out.precision(2);
        out << std::fixed << "elapsed: " << report.elapsed_seconds << "s\n";
    }
    return out.str();
}

}  // namespace oldset
