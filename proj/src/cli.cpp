#include "crystal/cli.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "crystal/graph.hpp"

namespace crystal::cli {

namespace {

long long parse_ll(const std::string& text, const char* what) {
    long long value = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument(std::string(what) + ": '" + text + "' is not an integer");
    return value;
}

CartanData parse_cartan(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--cartan expects two comma-separated integers, e.g. 1,2");
    return CartanData(parse_ll(text.substr(0, comma), "--cartan"),
                      parse_ll(text.substr(comma + 1), "--cartan"));
}

std::string graph_text(const CrystalGraph& g) {
    std::string out = "graph kind=";
    out += g.kind == GraphKind::ls ? "ls" : "monomial";
    out += " cartan=" + std::to_string(g.a) + "," + std::to_string(g.b) + " weight=" +
           std::to_string(g.i) + " shift=" + std::to_string(g.shift) + " depth=" +
           std::to_string(g.depth_bound) + "\n";
    for (const GraphNode& n : g.nodes)
        out += "node " + std::to_string(n.id) + " depth=" + std::to_string(n.depth) + " wt=(" +
               std::to_string(n.weight.c1) + "," + std::to_string(n.weight.c2) + ") " + n.label + "\n";
    for (const GraphEdge& e : g.edges)
        out += "edge " + std::to_string(e.src) + " -> " + std::to_string(e.dst) + " k=" +
               std::to_string(e.k) + "\n";
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank-2 crystal graphs: LS paths, Nakajima monomials and the isomorphism between them"};
    app.require_subcommand(1);

    std::string cartan;
    int weight = 0;
    long long shift = 0;
    int depth = 12;
    std::string format = "text";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cartan", cartan, "Cartan parameters a,b (matrix [[2,-a],[-b,2]])")->required();
        sub->add_option("--weight", weight, "fundamental weight index")->required()->check(CLI::Range(1, 2));
        sub->add_option("--shift", shift, "first index of the highest-weight variable", true);
        sub->add_option("--depth", depth, "truncation depth for generation", true)
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", format, "output format", true)
            ->check(CLI::IsMember({"text", "dot", "json"}));
    };

    std::string kind;
    CLI::App* graph_cmd = app.add_subcommand("graph", "generate a crystal graph by closing under f");
    graph_cmd->add_option("--kind", kind, "ls or monomial")
        ->required()
        ->check(CLI::IsMember({"ls", "monomial"}));
    add_common(graph_cmd);

    std::string path_text;
    CLI::App* map_cmd = app.add_subcommand("map", "map an LS path to its monomial");
    map_cmd->add_option("--path", path_text, "path text, e.g. taus=2,1;a=0,1/2,1")->required();
    add_common(map_cmd);

    std::string mono_text;
    CLI::App* invert_cmd = app.add_subcommand("invert", "map a monomial back to its LS path");
    invert_cmd->add_option("--monomial", mono_text, "monomial text, e.g. X[0,2]*X[1,2]^-1")->required();
    add_common(invert_cmd);

    long long bound = 0;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "list all LS paths with top coset length <= bound");
    enum_cmd->add_option("--bound", bound, "largest top coset length")->required();
    add_common(enum_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "check the isomorphism on a truncated crystal");
    add_common(verify_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        CartanData cd = parse_cartan(cartan);
        if (graph_cmd->parsed()) {
            CrystalGraph g = generate(kind == "ls" ? GraphKind::ls : GraphKind::monomial, cd, weight,
                                      shift, depth);
            if (format == "dot")
                out << export_dot(g);
            else if (format == "json")
                out << export_json(g);
            else
                out << graph_text(g);
        } else if (map_cmd->parsed()) {
            LSPath pi = parse_path(path_text, weight);
            if (!is_member(cd, pi))
                throw std::invalid_argument("path " + path_text + " is not an LS path for this algebra");
            out << format_monomial(phi_map(cd, weight, shift, pi)) << "\n";
        } else if (invert_cmd->parsed()) {
            out << format_path(phi_inverse(cd, weight, shift, parse_monomial(mono_text))) << "\n";
        } else if (enum_cmd->parsed()) {
            for (const LSPath& pi : enumerate_paths(cd, weight, bound)) out << format_path(pi) << "\n";
        } else if (verify_cmd->parsed()) {
            VerifyReport rep = verify_isomorphism(cd, weight, shift, depth);
            out << rep.to_text();
            if (!rep.verified()) return 2;
        }
        return 0;
    } catch (const std::overflow_error& e) {
        err << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace crystal::cli
