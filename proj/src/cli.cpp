#include "tropcone/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "tropcone/io.hpp"

namespace tropcone::cli {

namespace {

using io::json;

struct Options {
    std::string input;
    std::string output;
    long long budget = Budget{}.max_candidates;
    bool pretty = false;
    bool plot = false;
    int n = 0;
};

json read_input(const Options& opt, std::istream& in) {
    std::string text;
    if (opt.input.empty()) {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(opt.input);
        if (!file) throw ParseError("cannot open input file: " + opt.input);
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("input is not valid JSON: ") + e.what());
    }
}

void write_output(const json& doc, const Options& opt, std::ostream& out) {
    std::string text = doc.dump(opt.pretty ? 2 : -1);
    text += "\n";
    if (opt.output.empty()) {
        out << text;
    } else {
        std::ofstream file(opt.output);
        if (!file) throw ParseError("cannot open output file: " + opt.output);
        file << text;
    }
}

// A named section of a composite input; a bare document of the right kind
// is accepted when only one payload is needed.
json section(const json& root, const std::string& name, const std::string& kind) {
    if (root.is_object() && root.contains("kind") && root["kind"] == kind) return root;
    if (root.is_object() && root.contains(name)) return root[name];
    throw ParseError("input needs a \"" + name + "\" section (kind \"" + kind + "\")");
}

HalfSpace single_halfspace(const json& root, int expected_dim) {
    json doc = section(root, "halfspaces", "halfspaces");
    int dim = 0;
    std::vector<HalfSpace> hs = io::halfspaces_from_json(doc, &dim);
    if (dim != expected_dim) throw ShapeError("half-space dimension mismatch");
    if (hs.size() != 1) throw ParseError("expected exactly one half-space");
    return hs[0];
}

json indices_to_json(const std::vector<int>& idx) {
    json arr = json::array();
    for (int k : idx) arr.push_back(k + 1);
    return arr;
}

json pin_first_coordinate(const std::vector<TropVector>& vs) {
    json arr = json::array();
    for (const TropVector& v : vs) {
        if (!v.empty() && v[0].is_finite())
            arr.push_back(io::vector_to_json(v_scale(t_neg(v[0]), v)));
        else
            arr.push_back(io::vector_to_json(v));
    }
    return arr;
}

json minimality_to_json(const MinimalityResult& res) {
    json cert;
    cert["covering"] = res.covering;
    cert["uncovered"] = indices_to_json(res.uncovered);
    json lw = json::array();
    for (const auto& w : res.lhs_witnesses)
        lw.push_back({{"i", w.i + 1}, {"j", w.j + 1}, {"generator", w.r + 1}});
    cert["lhs_witnesses"] = lw;
    cert["lhs_violations"] = indices_to_json(res.lhs_violations);
    json rw = json::array();
    for (const auto& w : res.rhs_witnesses)
        rw.push_back({{"j", w.j + 1}, {"i", w.i + 1}, {"generator", w.r + 1}});
    cert["rhs_witnesses"] = rw;
    cert["rhs_violations"] = indices_to_json(res.rhs_violations);
    return cert;
}

json dispatch(const std::string& cmd, const Options& opt, std::istream& in, std::ostream& err) {
    Budget budget{opt.budget};

    if (cmd == "padovan" || cmd == "sperner") {
        json out;
        out["kind"] = "value";
        out["value"] = cmd == "padovan" ? padovan(opt.n) : sperner_bound(opt.n);
        return out;
    }

    json root = read_input(opt, in);

    if (cmd == "vrep2hrep") {
        Cone V = io::cone_from_json(section(root, "cone", "cone"));
        return io::halfspaces_to_json(vrep_to_hrep(V, budget), V.dim());
    }
    if (cmd == "hrep2vrep") {
        int dim = 0;
        auto hs = io::halfspaces_from_json(section(root, "halfspaces", "halfspaces"), &dim);
        return io::cone_to_json(hrep_to_vrep(hs, dim, budget));
    }
    if (cmd == "reduce") {
        Cone V = io::cone_from_json(section(root, "cone", "cone"));
        return io::cone_to_json(reduce(V));
    }
    if (cmd == "member") {
        Cone V = io::cone_from_json(section(root, "cone", "cone"));
        TropVector x = io::point_from_json(section(root, "point", "point"));
        if (static_cast<int>(x.size()) != V.dim())
            throw ShapeError("point dimension mismatch");
        TropVector proj = project(V.generators(), x);
        json out;
        out["kind"] = "member-result";
        out["dim"] = V.dim();
        out["member"] = proj == x;
        out["projection"] = io::vector_to_json(proj);
        if (proj == x) out["witness"] = io::vector_to_json(residual(V.generators(), x).lambda);
        return out;
    }
    if (cmd == "type") {
        Cone V = io::cone_from_json(section(root, "cone", "cone"));
        TropVector x = io::point_from_json(section(root, "point", "point"));
        TypeVector S = type_of(x, V);
        json out;
        out["kind"] = "type";
        out["dim"] = V.dim();
        json sets = json::array();
        for (const auto& Sj : S)
            sets.push_back(indices_to_json(std::vector<int>(Sj.begin(), Sj.end())));
        out["sets"] = sets;
        out["cell_dimension"] = cell_dimension(S);
        out["vertex"] = cell_dimension(S) == 1;
        return out;
    }
    if (cmd == "minimal-check") {
        Cone V = io::cone_from_json(section(root, "cone", "cone"));
        HalfSpace H = single_halfspace(root, V.dim());
        MinimalityResult res = is_minimal_halfspace(H, V);
        json out;
        out["kind"] = "minimal-check";
        out["dim"] = V.dim();
        out["minimal"] = res.minimal;
        out["certificate"] = minimality_to_json(res);
        return out;
    }
    if (cmd == "minimal-at-apex") {
        Cone V = io::cone_from_json(section(root, "cone", "cone"));
        TropVector apex = io::point_from_json(section(root, "point", "point"));
        CoveringsResult cov = enumerate_minimal_coverings(apex, V);
        if (!cov.apex_in_cone)
            err << "warning: apex is not a member of the cone\n";
        std::vector<HalfSpace> hs = minimal_halfspaces_at_apex(apex, V);
        json out;
        out["kind"] = "coverings";
        out["dim"] = V.dim();
        out["apex_in_cone"] = cov.apex_in_cone;
        json coverings = json::array();
        for (const auto& J : cov.coverings) coverings.push_back(indices_to_json(J));
        out["coverings"] = coverings;
        json hj = json::array(), minimal = json::array();
        for (const HalfSpace& H : hs) {
            hj.push_back(io::halfspace_to_json(H));
            minimal.push_back(is_minimal_halfspace(H, V).minimal);
        }
        out["halfspaces"] = hj;
        out["minimal"] = minimal;
        if (opt.plot) {
            json plot;
            plot["apex"] = pin_first_coordinate({apex})[0];
            plot["generators"] = pin_first_coordinate(V.generators().columns());
            out["plot"] = plot;
        }
        return out;
    }
    if (cmd == "vertices") {
        Cone V = io::cone_from_json(section(root, "cone", "cone"));
        std::vector<TropVector> verts = enumerate_vertices(V, budget);
        json out;
        out["kind"] = "vertices";
        out["dim"] = V.dim();
        json arr = json::array();
        for (const TropVector& v : verts) arr.push_back(io::vector_to_json(v));
        out["vertices"] = arr;
        if (opt.plot) out["plot"] = {{"points", pin_first_coordinate(verts)}};
        return out;
    }
    if (cmd == "separate") {
        Cone V = io::cone_from_json(section(root, "cone", "cone"));
        TropVector y = io::point_from_json(section(root, "point", "point"));
        Separation sep = separate(y, V, budget);
        json out;
        out["kind"] = "separation";
        out["dim"] = V.dim();
        out["member"] = sep.is_member;
        out["projection"] = io::vector_to_json(sep.projection);
        if (sep.is_member) {
            out["witness"] = io::vector_to_json(sep.witness);
        } else {
            out["halfspace"] = io::halfspace_to_json(*sep.separator);
            out["apex"] = io::vector_to_json(sep.apex);
        }
        return out;
    }
    if (cmd == "decompose") {
        Polyhedron P = io::polyhedron_from_json(section(root, "polyhedron", "polyhedron"));
        return io::polyhedron_to_json(decompose(P));
    }
    if (cmd == "recession") {
        Polyhedron P = io::polyhedron_from_json(section(root, "polyhedron", "polyhedron"));
        return io::cone_to_json(recession_cone(P));
    }
    if (cmd == "polar-extremes") {
        Cone V = io::cone_from_json(section(root, "cone", "cone"));
        return io::polar_to_json(polar_extremes(V, budget), V.dim());
    }
    if (cmd == "polar-check") {
        Cone V = io::cone_from_json(section(root, "cone", "cone"));
        int dim = 0;
        auto W = io::polar_from_json(section(root, "polar", "polar"), &dim);
        if (dim != V.dim()) throw ShapeError("polar vector dimension mismatch");
        if (W.size() != 1) throw ParseError("expected exactly one polar vector");
        json out;
        out["kind"] = "polar-check";
        out["dim"] = V.dim();
        bool in_polar = polar_member(W[0], V);
        out["member"] = in_polar;
        if (!in_polar) {
            out["extreme"] = false;
            out["reason"] = "inequality does not hold on the cone";
            return out;
        }
        PolarExtremeResult res = is_extreme_polar(W[0], V);
        out["extreme"] = res.extreme;
        out["trivial"] = res.trivial;
        out["reason"] = res.reason;
        json witnesses = json::object();
        for (const auto& [j, r] : res.witnesses)
            witnesses[std::to_string(j + 1)] = r + 1;
        out["witnesses"] = witnesses;
        out["unwitnessed"] = indices_to_json(res.unwitnessed);
        if (res.extreme) {
            SupportVectors sup = support_vectors(W[0], V);
            out["support_vectors"] = indices_to_json(sup.generators);
            out["support_degenerate"] = sup.degenerate;
        }
        return out;
    }
    if (cmd == "face") {
        Cone V = io::cone_from_json(section(root, "cone", "cone"));
        HalfSpace H = single_halfspace(root, V.dim());
        return io::cone_to_json(face(V, H, budget));
    }
    throw ParseError("unknown subcommand: " + cmd);
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Exact max-plus cones and polyhedra: representation conversion, "
                 "cell analysis, minimal half-spaces, polars, separation."};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"vrep2hrep", "Half-spaces cutting out a cone given by generators"},
        {"hrep2vrep", "Generators of the intersection of half-spaces"},
        {"reduce", "One generator per extreme ray"},
        {"member", "Membership of a point in a cone, with projection"},
        {"type", "Type of a point relative to the generators"},
        {"minimal-check", "Minimality certificate of a half-space"},
        {"minimal-at-apex", "Minimal coverings and half-spaces at an apex"},
        {"vertices", "Vertices of the natural cell decomposition"},
        {"separate", "Separating half-space with a vertex apex"},
        {"decompose", "Canonical extreme points and recession rays"},
        {"recession", "Recession cone of a polyhedron"},
        {"polar-extremes", "Extreme vectors of the polar cone"},
        {"polar-check", "Extremality certificate of a polar vector"},
        {"face", "Face cut out by a half-space"},
        {"padovan", "Padovan number P(n)"},
        {"sperner", "Binomial bound C(n, floor(n/2))"},
    };

    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (name == "padovan" || name == "sperner") {
            sub->add_option("--n", opt.n, "Argument n")->required();
        } else {
            sub->add_option("--input,-i", opt.input, "Input JSON file (default stdin)");
        }
        sub->add_option("--output,-o", opt.output, "Output file (default stdout)");
        sub->add_option("--budget", opt.budget, "Enumeration candidate budget");
        sub->add_flag("--pretty", opt.pretty, "Indent the output document");
        if (name == "vertices" || name == "minimal-at-apex")
            sub->add_flag("--emit-plot-data", opt.plot,
                          "Include coordinates pinned to first coordinate 0");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        auto active = app.get_subcommands();
        out << (active.empty() ? app.help() : active.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        write_output(dispatch(cmd, opt, in, err), opt, out);
        return 0;
    } catch (const ResourceError& e) {
        err << "error: budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: precondition violation: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace tropcone::cli
