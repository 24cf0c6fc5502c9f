#include "crystal/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace crystal {

namespace {

struct LsModel {
    const CartanData& cd;
    int i;
    using Elem = LSPath;

    Elem root() const { return highest_path(i); }
    std::optional<Elem> lower(const Elem& x, int k) const { return f_path(cd, x, k); }
    std::string label(const Elem& x) const { return format_path(x); }
    ClWeight weight(const Elem& x) const { return wt(cd, x); }
};

struct MonoModel {
    const CartanData& cd;
    int i;
    long long shift;
    using Elem = LaurentMonomial;

    Elem root() const { return LaurentMonomial::variable(shift, i); }
    std::optional<Elem> lower(const Elem& x, int k) const { return f_mono(cd, x, k); }
    std::string label(const Elem& x) const { return format_monomial(x); }
    ClWeight weight(const Elem& x) const { return mono_wt(x); }
};

// BFS closure in discovery order. The crystal is graded, so the first
// discovery depth of an element is its only depth.
template <class Model>
struct Closure {
    std::vector<typename Model::Elem> elems;
    std::vector<int> depth;
    std::map<std::string, int> index_by_label;
    std::vector<std::tuple<int, int, int>> edges;  // (src, dst, k) in discovery ids
};

template <class Model>
Closure<Model> close_under_f(const Model& model, int depth_bound) {
    if (depth_bound < 0) throw std::invalid_argument("depth bound must be non-negative");
    Closure<Model> c;
    auto add = [&](typename Model::Elem e, int d) -> int {
        std::string lab = model.label(e);
        auto it = c.index_by_label.find(lab);
        if (it != c.index_by_label.end()) return it->second;
        int id = static_cast<int>(c.elems.size());
        c.elems.push_back(std::move(e));
        c.depth.push_back(d);
        c.index_by_label.emplace(std::move(lab), id);
        return id;
    };
    add(model.root(), 0);
    for (std::size_t head = 0; head < c.elems.size(); ++head) {
        if (c.depth[head] >= depth_bound) continue;
        for (int k = 1; k <= 2; ++k) {
            auto child = model.lower(c.elems[head], k);
            if (!child) continue;
            int cid = add(std::move(*child), c.depth[head] + 1);
            c.edges.emplace_back(static_cast<int>(head), cid, k);
        }
    }
    return c;
}

// wt + sign * alpha_k
ClWeight add_root(const CartanData& cd, const ClWeight& w, int k, long long sign) {
    ClWeight alpha = simple_root(cd, k);
    return ClWeight{checked_add(w.c1, checked_mul(sign, alpha.c1)),
                    checked_add(w.c2, checked_mul(sign, alpha.c2))};
}

template <class Model>
CrystalGraph graph_from_closure(const Closure<Model>& c, const Model& model, GraphKind kind,
                                const CartanData& cd, int i, long long shift, int depth_bound) {
    CrystalGraph g;
    g.kind = kind;
    g.a = cd.a;
    g.b = cd.b;
    g.i = i;
    g.shift = shift;
    g.depth_bound = depth_bound;

    const std::size_t n = c.elems.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::string> labels(n);
    for (std::size_t id = 0; id < n; ++id) labels[id] = model.label(c.elems[id]);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return std::tie(c.depth[x], labels[x]) < std::tie(c.depth[y], labels[y]);
    });
    std::vector<int> position(n);
    for (std::size_t pos = 0; pos < n; ++pos) position[order[pos]] = static_cast<int>(pos);

    g.nodes.reserve(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        int id = order[pos];
        g.nodes.push_back(GraphNode{static_cast<int>(pos), labels[id], model.weight(c.elems[id]),
                                    c.depth[id]});
    }
    g.edges.reserve(c.edges.size());
    for (const auto& [src, dst, k] : c.edges) g.edges.push_back(GraphEdge{position[src], position[dst], k});
    std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
        return std::tie(x.src, x.dst, x.k) < std::tie(y.src, y.dst, y.k);
    });
    g.root = position[0];
    return g;
}

}  // namespace

CrystalGraph generate(GraphKind kind, const CartanData& cd, int i, long long shift, int depth_bound) {
    check_node(i);
    if (kind == GraphKind::ls) {
        LsModel model{cd, i};
        return graph_from_closure(close_under_f(model, depth_bound), model, kind, cd, i, shift,
                                  depth_bound);
    }
    MonoModel model{cd, i, shift};
    return graph_from_closure(close_under_f(model, depth_bound), model, kind, cd, i, shift, depth_bound);
}

VerifyReport verify_isomorphism(const CartanData& cd, int i, long long shift, int depth_bound) {
    check_node(i);
    VerifyReport rep;
    rep.a = cd.a;
    rep.b = cd.b;
    rep.i = i;
    rep.shift = shift;
    rep.depth_bound = depth_bound;

    LsModel lsm{cd, i};
    MonoModel mm{cd, i, shift};
    auto ls = close_under_f(lsm, depth_bound);
    auto mono = close_under_f(mm, depth_bound);
    rep.ls_nodes = ls.elems.size();
    rep.mono_nodes = mono.elems.size();
    rep.ls_edges = ls.edges.size();
    rep.mono_edges = mono.edges.size();

    auto fail = [&](const std::string& check, const std::string& witness) {
        rep.failures.push_back(VerifyFailure{check, witness});
    };
    // Runs one named check over every LS node, trapping exceptions as failures.
    auto for_each_node = [&](const std::string& check, auto&& body) {
        std::size_t count = 0;
        for (std::size_t id = 0; id < ls.elems.size(); ++id) {
            try {
                count += body(id);
            } catch (const std::exception& ex) {
                fail(check, format_path(ls.elems[id]) + ": " + ex.what());
            }
        }
        rep.check_counts.emplace_back(check, count);
    };

    std::vector<LaurentMonomial> image(ls.elems.size());

    for_each_node("membership", [&](std::size_t id) -> std::size_t {
        if (!is_member(cd, ls.elems[id])) fail("membership", format_path(ls.elems[id]));
        return 1;
    });

    {
        std::map<std::string, std::size_t> seen;
        for_each_node("bijection", [&](std::size_t id) -> std::size_t {
            image[id] = phi_map(cd, i, shift, ls.elems[id]);
            std::string lab = format_monomial(image[id]);
            auto it = mono.index_by_label.find(lab);
            if (it == mono.index_by_label.end())
                fail("bijection", format_path(ls.elems[id]) + " -> " + lab + " missing on monomial side");
            else if (mono.depth[it->second] != ls.depth[id])
                fail("bijection", format_path(ls.elems[id]) + " -> " + lab + " lands at the wrong depth");
            auto [prev, inserted] = seen.emplace(lab, id);
            if (!inserted)
                fail("bijection", format_path(ls.elems[prev->second]) + " and " +
                                      format_path(ls.elems[id]) + " share the image " + lab);
            return 1;
        });
        // Per-depth counts must agree; with injectivity this pins the bijection.
        std::map<int, long long> balance;
        for (int d : ls.depth) ++balance[d];
        for (int d : mono.depth) --balance[d];
        for (const auto& [d, diff] : balance)
            if (diff != 0)
                fail("bijection", "node counts differ at depth " + std::to_string(d) + " by " +
                                      std::to_string(diff));
    }

    for_each_node("preservation", [&](std::size_t id) -> std::size_t {
        const LSPath& pi = ls.elems[id];
        if (wt(cd, pi) != mono_wt(image[id])) fail("preservation", format_path(pi) + ": wt differs");
        for (int k = 1; k <= 2; ++k) {
            if (epsilon(cd, pi, k) != mono_eps(image[id], k))
                fail("preservation", format_path(pi) + ": eps_" + std::to_string(k) + " differs");
            if (phi(cd, pi, k) != mono_phi(image[id], k))
                fail("preservation", format_path(pi) + ": phi_" + std::to_string(k) + " differs");
        }
        return 1;
    });

    for_each_node("f_commutes", [&](std::size_t id) -> std::size_t {
        if (ls.depth[id] >= depth_bound) return 0;
        const LSPath& pi = ls.elems[id];
        for (int k = 1; k <= 2; ++k) {
            auto down = f_path(cd, pi, k);
            auto mdown = f_mono(cd, image[id], k);
            if (down.has_value() != mdown.has_value())
                fail("f_commutes", format_path(pi) + ": f_" + std::to_string(k) + " defined on one side only");
            else if (down && phi_map(cd, i, shift, *down) != *mdown)
                fail("f_commutes", format_path(pi) + ": f_" + std::to_string(k) + " images differ");
        }
        return 2;
    });

    for_each_node("e_commutes", [&](std::size_t id) -> std::size_t {
        if (ls.depth[id] >= depth_bound) return 0;
        const LSPath& pi = ls.elems[id];
        for (int k = 1; k <= 2; ++k) {
            auto up = e_path(cd, pi, k);
            auto mup = e_mono(cd, image[id], k);
            if (up.has_value() != mup.has_value())
                fail("e_commutes", format_path(pi) + ": e_" + std::to_string(k) + " defined on one side only");
            else if (up && phi_map(cd, i, shift, *up) != *mup)
                fail("e_commutes", format_path(pi) + ": e_" + std::to_string(k) + " images differ");
        }
        return 2;
    });

    for_each_node("roundtrip", [&](std::size_t id) -> std::size_t {
        if (phi_inverse(cd, i, shift, image[id]) != ls.elems[id])
            fail("roundtrip", format_path(ls.elems[id]));
        return 1;
    });

    for_each_node("axioms_ls", [&](std::size_t id) -> std::size_t {
        const LSPath& pi = ls.elems[id];
        ClWeight w = wt(cd, pi);
        for (int k = 1; k <= 2; ++k) {
            long long ep = epsilon(cd, pi, k);
            long long ph = phi(cd, pi, k);
            if (ph != checked_add(ep, w.pairing(k)))
                fail("axioms_ls", format_path(pi) + ": phi != eps + <h,wt>");
            auto up = e_path(cd, pi, k);
            if (up.has_value() != (ep > 0)) fail("axioms_ls", format_path(pi) + ": e defined iff eps > 0");
            if (up) {
                if (wt(cd, *up) != add_root(cd, w, k, +1))
                    fail("axioms_ls", format_path(pi) + ": wt(e) != wt + alpha");
                if (epsilon(cd, *up, k) != ep - 1 || phi(cd, *up, k) != ph + 1)
                    fail("axioms_ls", format_path(pi) + ": eps/phi of e off by one");
                auto back = f_path(cd, *up, k);
                if (!back || !(*back == pi)) fail("axioms_ls", format_path(pi) + ": f(e(pi)) != pi");
            }
            if (ls.depth[id] < depth_bound) {
                auto down = f_path(cd, pi, k);
                if (down.has_value() != (ph > 0))
                    fail("axioms_ls", format_path(pi) + ": f defined iff phi > 0");
                if (down) {
                    if (wt(cd, *down) != add_root(cd, w, k, -1))
                        fail("axioms_ls", format_path(pi) + ": wt(f) != wt - alpha");
                    if (epsilon(cd, *down, k) != ep + 1 || phi(cd, *down, k) != ph - 1)
                        fail("axioms_ls", format_path(pi) + ": eps/phi of f off by one");
                    auto back = e_path(cd, *down, k);
                    if (!back || !(*back == pi)) fail("axioms_ls", format_path(pi) + ": e(f(pi)) != pi");
                }
            }
        }
        return 2;
    });

    for_each_node("axioms_monomial", [&](std::size_t id) -> std::size_t {
        const LaurentMonomial& X = image[id];
        ClWeight w = mono_wt(X);
        for (int k = 1; k <= 2; ++k) {
            long long ep = mono_eps(X, k);
            long long ph = mono_phi(X, k);
            if (ph != checked_add(ep, w.pairing(k)))
                fail("axioms_monomial", format_monomial(X) + ": phi != eps + <h,wt>");
            auto up = e_mono(cd, X, k);
            if (up.has_value() != (ep > 0))
                fail("axioms_monomial", format_monomial(X) + ": e defined iff eps > 0");
            if (up) {
                if (mono_wt(*up) != add_root(cd, w, k, +1))
                    fail("axioms_monomial", format_monomial(X) + ": wt(e) != wt + alpha");
                if (mono_eps(*up, k) != ep - 1 || mono_phi(*up, k) != ph + 1)
                    fail("axioms_monomial", format_monomial(X) + ": eps/phi of e off by one");
                auto back = f_mono(cd, *up, k);
                if (!back || !(*back == X)) fail("axioms_monomial", format_monomial(X) + ": f(e(X)) != X");
            }
            if (ls.depth[id] < depth_bound) {
                auto down = f_mono(cd, X, k);
                if (down.has_value() != (ph > 0))
                    fail("axioms_monomial", format_monomial(X) + ": f defined iff phi > 0");
                if (down) {
                    if (mono_wt(*down) != add_root(cd, w, k, -1))
                        fail("axioms_monomial", format_monomial(X) + ": wt(f) != wt - alpha");
                    if (mono_eps(*down, k) != ep + 1 || mono_phi(*down, k) != ph - 1)
                        fail("axioms_monomial", format_monomial(X) + ": eps/phi of f off by one");
                    auto back = e_mono(cd, *down, k);
                    if (!back || !(*back == X)) fail("axioms_monomial", format_monomial(X) + ": e(f(X)) != X");
                }
            }
        }
        return 2;
    });

    return rep;
}

std::string VerifyReport::to_text() const {
    std::string out = "verify cartan=" + std::to_string(a) + "," + std::to_string(b) +
                      " weight=" + std::to_string(i) + " shift=" + std::to_string(shift) +
                      " depth=" + std::to_string(depth_bound) + "\n";
    out += "nodes: ls=" + std::to_string(ls_nodes) + " monomial=" + std::to_string(mono_nodes) + "\n";
    out += "edges: ls=" + std::to_string(ls_edges) + " monomial=" + std::to_string(mono_edges) + "\n";
    for (const auto& [check, count] : check_counts)
        out += "check " + check + ": " + std::to_string(count) + "\n";
    out += "failures: " + std::to_string(failures.size()) + "\n";
    for (const auto& f : failures) out += "  " + f.check + ": " + f.witness + "\n";
    out += verified() ? "result: verified\n" : "result: FAILED\n";
    return out;
}

std::string export_dot(const CrystalGraph& g) {
    std::string out = "digraph crystal {\n";
    for (const GraphNode& n : g.nodes)
        out += "  n" + std::to_string(n.id) + " [label=\"" + n.label + "\"];\n";
    for (const GraphEdge& e : g.edges)
        out += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) + " [label=\"" +
               std::to_string(e.k) + "\"];\n";
    out += "}\n";
    return out;
}

std::string export_json(const CrystalGraph& g) {
    nlohmann::ordered_json j;
    j["kind"] = g.kind == GraphKind::ls ? "ls" : "monomial";
    j["cartan"] = {g.a, g.b};
    j["i"] = g.i;
    j["shift"] = g.shift;
    j["depth"] = g.depth_bound;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const GraphNode& n : g.nodes) {
        nlohmann::ordered_json jn;
        jn["id"] = n.id;
        jn["label"] = n.label;
        jn["wt"] = {n.weight.c1, n.weight.c2};
        jn["depth"] = n.depth;
        j["nodes"].push_back(std::move(jn));
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const GraphEdge& e : g.edges) {
        nlohmann::ordered_json je;
        je["src"] = e.src;
        je["dst"] = e.dst;
        je["k"] = e.k;
        j["edges"].push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

CrystalGraph parse_graph_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CrystalGraph g;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "ls")
        g.kind = GraphKind::ls;
    else if (kind == "monomial")
        g.kind = GraphKind::monomial;
    else
        throw std::invalid_argument("unknown graph kind " + kind);
    g.a = j.at("cartan").at(0).get<long long>();
    g.b = j.at("cartan").at(1).get<long long>();
    g.i = j.at("i").get<int>();
    g.shift = j.at("shift").get<long long>();
    g.depth_bound = j.at("depth").get<int>();
    for (const auto& jn : j.at("nodes")) {
        GraphNode n;
        n.id = jn.at("id").get<int>();
        n.label = jn.at("label").get<std::string>();
        n.weight = ClWeight{jn.at("wt").at(0).get<long long>(), jn.at("wt").at(1).get<long long>()};
        n.depth = jn.at("depth").get<int>();
        if (n.depth == 0) g.root = n.id;
        g.nodes.push_back(std::move(n));
    }
    for (const auto& je : j.at("edges"))
        g.edges.push_back(GraphEdge{je.at("src").get<int>(), je.at("dst").get<int>(), je.at("k").get<int>()});
    return g;
}

}  // namespace crystal
