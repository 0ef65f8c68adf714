#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "xm/bijection.hpp"
#include "xm/energy.hpp"
#include "xm/fermionic.hpp"
#include "xm/json_io.hpp"

using namespace xm;
using nlohmann::json;

namespace {

constexpr int kDefaultMaxN = 5;
constexpr int kDefaultMaxBoxes = 12;

std::string shape_str(const TensorShape& shape) {
    std::string out;
    for (size_t i = 0; i < shape.factors.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(shape.factors[i].first) + "x" +
               std::to_string(shape.factors[i].second);
    }
    return out.empty() ? "(empty)" : out;
}

std::string weight_str(const Weight& w) {
    std::string out;
    for (int i = 1; i <= w.n(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(w.entry(i));
    }
    return out;
}

void check_caps(const TensorShape& shape, bool force) {
    if (force) return;
    if (shape.n > kDefaultMaxN)
        throw std::invalid_argument("rank exceeds the default cap n <= " +
                                    std::to_string(kDefaultMaxN) + "; pass --force to override");
    if (shape.total_boxes() > kDefaultMaxBoxes)
        throw std::invalid_argument("instance exceeds the default cap of " +
                                    std::to_string(kDefaultMaxBoxes) +
                                    " boxes; pass --force to override");
    for (auto [r, s] : shape.factors)
        if (r < 1 || r > shape.n - 1 || s < 1)
            throw std::invalid_argument("factor " + std::to_string(r) + "x" + std::to_string(s) +
                                        " needs 1 <= rows <= n-1 and columns >= 1");
}

QLaurent compute_poly(const std::string& side, const std::string& kind, const TensorShape& shape,
                      const Weight& lambda, int level) {
    if (side == "x") {
        PathRestriction r = kind == "classical"      ? PathRestriction::Classical
                            : kind == "unrestricted" ? PathRestriction::Unrestricted
                                                     : PathRestriction::Level;
        return config_sum(shape, lambda, r, level);
    }
    MultiplicityArray L = multiplicity_of(shape);
    if (kind == "classical") return m_bar(L, lambda);
    if (kind == "unrestricted") return m_unrestricted(L, lambda);
    return m_level(L, lambda, level);
}

void print_poly(const QLaurent& p, bool as_json) {
    if (as_json)
        std::cout << poly_to_json(p).dump() << "\n";
    else
        std::cout << p.str() << "\n";
}

// ---------------------------------------------------------------- verify --

struct SuiteReport {
    std::string name;
    long long checked = 0;
    bool asserted = true;  // informational suites never fail the run
    bool ok = true;
    std::string counterexample;
};

std::vector<TensorShape> shape_grid(int max_n, int max_boxes) {
    std::vector<TensorShape> out;
    for (int n = 2; n <= max_n; ++n) {
        TensorShape shape;
        shape.n = n;
        std::function<void(int)> rec = [&](int remaining) {
            if (!shape.factors.empty()) out.push_back(shape);
            for (int r = 1; r <= n - 1; ++r)
                for (int s = 1; r * s <= remaining; ++s) {
                    shape.factors.push_back({r, s});
                    rec(remaining - r * s);
                    shape.factors.pop_back();
                }
        };
        rec(max_boxes);
    }
    return out;
}

std::vector<Weight> partition_weights(int total, int n) {
    std::vector<Weight> out;
    for (const Partition& mu : partitions_of(total, total)) {
        if (mu.length() > n) continue;
        std::vector<int> entries = mu.parts();
        entries.resize(n, 0);
        out.push_back(Weight(entries));
    }
    return out;
}

bool component_isomorphic(const Path& start, const RiggedConfiguration& rc0) {
    long long cc0 = rc0.cocharge();
    std::map<Path, RiggedConfiguration> seen{{start, rc0}};
    std::queue<Path> todo;
    todo.push(start);
    while (!todo.empty()) {
        Path b = todo.front();
        todo.pop();
        RiggedConfiguration rc = seen.at(b);
        if (rc.weight() != b.weight().entries() || rc.cocharge() != cc0) return false;
        for (int i = 1; i <= b.n() - 1; ++i) {
            auto fb = classical_f(b, i);
            auto frc = rc_f(rc, i);
            if (fb.has_value() != frc.has_value()) return false;
            if (!fb) continue;
            auto it = seen.find(*fb);
            if (it != seen.end()) {
                if (it->second != *frc) return false;
            } else {
                seen.emplace(*fb, *frc);
                todo.push(*fb);
            }
        }
    }
    return true;
}

SuiteReport run_suite(const std::string& name, const std::vector<TensorShape>& shapes,
                      bool corrupt) {
    SuiteReport rep;
    rep.name = name;
    auto fail = [&](const std::string& what) {
        if (rep.ok) rep.counterexample = what;
        rep.ok = false;
    };
    for (const TensorShape& shape : shapes) {
        MultiplicityArray L = multiplicity_of(shape);
        int boxes = shape.total_boxes();
        if (name == "x-equals-m") {
            int max_width = 0;
            for (auto [r, s] : shape.factors) max_width = std::max(max_width, s);
            for (const Weight& lambda : partition_weights(boxes, shape.n)) {
                std::string inst = shape_str(shape) + " lambda=" + weight_str(lambda);
                if (m_bar(L, lambda) != config_sum(shape, lambda, PathRestriction::Classical))
                    fail("classical " + inst);
                if (m_unrestricted(L, lambda) !=
                    config_sum(shape, lambda, PathRestriction::Unrestricted))
                    fail("unrestricted " + inst);
                int level = std::max(max_width, lambda.entry(1) - lambda.entry(lambda.n()));
                if (m_level(L, lambda, level) !=
                    config_sum(shape, lambda, PathRestriction::Level, level))
                    fail("level-" + std::to_string(level) + " " + inst);
                rep.checked += 3;
            }
        } else if (name == "bijection-roundtrip") {
            for (const Path& b : enumerate_paths(shape)) {
                if (phi_inverse(phi(b), shape) != b) fail(shape_str(shape) + " " + b.str());
                ++rep.checked;
            }
        } else if (name == "statistic") {
            for (const Path& b : enumerate_paths(shape)) {
                RiggedConfiguration rc = phi(b);
                if (corrupt && !rc.strings(1).empty()) {
                    auto nu = rc.nu();
                    nu[0][0].rig -= 1;
                    rc = RiggedConfiguration(rc.L(), nu);
                    corrupt = false;
                }
                if (rc.cocharge() != tail_energy(b))
                    fail(shape_str(shape) + " path " + b.str() + " vs rc " + rc.str());
                ++rep.checked;
            }
        } else if (name == "dualities") {
            int max_width = 0;
            for (auto [r, s] : shape.factors) max_width = std::max(max_width, s);
            for (const Path& b : enumerate_paths(shape)) {
                if (!is_classically_highest(b) || !b.weight().is_partition_shaped()) continue;
                RiggedConfiguration rc = phi_bar(b);
                if (phi_bar(evacuation(b)) != theta(rc))
                    fail("evacuation square " + shape_str(shape) + " " + b.str());
                if (phi_bar(contragredient_path(b)) != reverse_rc(rc))
                    fail("contragredient square " + shape_str(shape) + " " + b.str());
                int nt = std::max(default_transpose_rank(b), max_width + 1);
                for (int a = 1; a <= shape.n - 1; ++a)
                    nt = std::max(nt, rc.largest_part(a) + 1);
                if (phi_bar(transpose_path(b, nt)) !=
                    transpose_rc(rc, b.weight().to_partition(), nt))
                    fail("transpose square " + shape_str(shape) + " " + b.str());
                rep.checked += 3;
            }
        } else if (name == "rc-crystal-iso") {
            for (const Path& b : enumerate_paths(shape)) {
                if (!is_classically_highest(b) || !b.weight().is_partition_shaped()) continue;
                if (!component_isomorphic(b, phi_bar(b)))
                    fail(shape_str(shape) + " component of " + b.str());
                ++rep.checked;
            }
        } else if (name == "promotion") {
            rep.asserted = shape.factors.size() == 1;
            for (const Path& b : enumerate_paths(shape)) {
                if (phi(promotion(b)) != rc_promotion(phi(b))) {
                    if (shape.factors.size() == 1) fail(shape_str(shape) + " " + b.str());
                }
                ++rep.checked;
            }
            rep.asserted = true;  // single-factor failures recorded above
        }
    }
    return rep;
}

int cmd_verify(const std::string& suite, int max_n, int max_boxes, const std::string& tensor,
               int n, bool corrupt) {
    std::vector<TensorShape> shapes;
    if (!tensor.empty()) {
        TensorShape s = parse_tensor_shape(n, tensor);
        check_caps(s, false);
        shapes.push_back(s);
    } else {
        shapes = shape_grid(max_n, max_boxes);
    }
    std::vector<std::string> names = {"x-equals-m", "bijection-roundtrip", "statistic",
                                      "dualities",  "rc-crystal-iso",      "promotion"};
    if (suite != "all") names = {suite};
    bool all_ok = true;
    for (const std::string& name : names) {
        SuiteReport rep = run_suite(name, shapes, corrupt);
        std::cout << rep.name << ": " << (rep.ok ? "pass" : "FAIL") << " (" << rep.checked
                  << " checks)";
        if (!rep.ok) std::cout << " first counterexample: " << rep.counterexample;
        std::cout << "\n";
        all_ok = all_ok && rep.ok;
    }
    return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------- export --

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

int cmd_export(const std::string& universe, const TensorShape& shape, const std::string& lambda_csv,
               int component, const std::string& dot_file, const std::string& json_file) {
    std::vector<Path> nodes;
    if (!lambda_csv.empty()) {
        Weight lambda = parse_weight(lambda_csv, shape.n);
        std::vector<Path> roots;
        for (const Path& b : enumerate_paths(shape))
            if (b.weight() == lambda && is_classically_highest(b)) roots.push_back(b);
        if (component > 0) {
            if (component > static_cast<int>(roots.size()))
                throw std::invalid_argument("component index exceeds the number of components");
            roots = {roots[component - 1]};
        }
        std::set<Path> closure(roots.begin(), roots.end());
        std::queue<Path> todo;
        for (const Path& b : roots) todo.push(b);
        while (!todo.empty()) {
            Path b = todo.front();
            todo.pop();
            for (int i = 1; i <= shape.n - 1; ++i)
                if (auto f = classical_f(b, i))
                    if (closure.insert(*f).second) todo.push(*f);
        }
        nodes.assign(closure.begin(), closure.end());
    } else {
        nodes = enumerate_paths(shape);
    }

    std::map<Path, int> index;
    for (size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = static_cast<int>(i);
    struct Edge {
        int from, to, label;
    };
    std::vector<Edge> edges;
    for (const Path& b : nodes)
        for (int i = 1; i <= shape.n - 1; ++i)
            if (auto f = classical_f(b, i)) {
                auto it = index.find(*f);
                if (it != index.end()) edges.push_back({index[b], it->second, i});
            }

    std::vector<json> labels;
    for (const Path& b : nodes)
        labels.push_back(universe == "rc" ? rc_to_json(phi(b)) : path_to_json(b));

    if (!dot_file.empty()) {
        std::ofstream out(dot_file);
        if (!out) {
            std::cerr << "cannot open " << dot_file << "\n";
            return 4;
        }
        out << "digraph crystal {\n";
        for (size_t i = 0; i < nodes.size(); ++i)
            out << "  v" << i << " [label=\"" << dot_escape(labels[i].dump()) << "\"];\n";
        for (const Edge& e : edges)
            out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
        out << "}\n";
        if (!out.good()) return 4;
    }
    if (!json_file.empty()) {
        json j;
        j["nodes"] = labels;
        j["edges"] = json::array();
        for (const Edge& e : edges)
            j["edges"].push_back(json{{"from", e.from}, {"to", e.to}, {"label", e.label}});
        std::ofstream out(json_file);
        if (!out) {
            std::cerr << "cannot open " << json_file << "\n";
            return 4;
        }
        out << j.dump(2) << "\n";
        if (!out.good()) return 4;
    }
    std::cout << nodes.size() << " nodes, " << edges.size() << " edges\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact configuration sums, fermionic formulas, and their bijection"};
    app.require_subcommand(1);

    // shared options
    int n = 0, level = 0, sites = 0, down = 0, component = 0;
    int max_n = 3, max_boxes = 5;
    std::string tensor, lambda_csv, side = "m", kind = "classical";
    std::string direction, input_file, output_file, suite = "all";
    std::string universe = "path", dot_file, json_file;
    bool as_json = false, force = false, corrupt = false;

    auto add_instance = [&](CLI::App* cmd, bool need_lambda) {
        cmd->add_option("--n", n, "rank (alphabet size)")->required();
        cmd->add_option("--tensor", tensor, "factors, e.g. 2x2,2x1 (leftmost first)");
        if (need_lambda) cmd->add_option("--lambda", lambda_csv, "weight, e.g. 2,2,1,1");
        cmd->add_flag("--force", force, "lift the built-in size caps");
    };

    CLI::App* compute = app.add_subcommand("compute", "print one graded polynomial");
    add_instance(compute, true);
    compute->add_option("--side", side)->check(CLI::IsMember({"x", "m"}));
    compute->add_option("--kind", kind)->check(CLI::IsMember({"classical", "unrestricted", "level"}));
    compute->add_option("--level", level, "level for --kind level");
    compute->add_flag("--json", as_json, "emit the polynomial as JSON");

    CLI::App* cmd_x = app.add_subcommand("x", "configuration sum over paths");
    add_instance(cmd_x, true);
    cmd_x->add_option("--kind", kind)->check(CLI::IsMember({"classical", "unrestricted", "level"}));
    cmd_x->add_option("--level", level);
    cmd_x->add_flag("--json", as_json);

    CLI::App* cmd_m = app.add_subcommand("m", "fermionic formula over rigged configurations");
    add_instance(cmd_m, true);
    cmd_m->add_option("--kind", kind)->check(CLI::IsMember({"classical", "unrestricted", "level"}));
    cmd_m->add_option("--level", level);
    cmd_m->add_flag("--json", as_json);

    CLI::App* bethe = app.add_subcommand("bethe", "rank-one string-counting formula");
    bethe->add_option("--sites", sites)->required();
    bethe->add_option("--down", down)->required();

    CLI::App* bij = app.add_subcommand("bij", "apply the bijection to a JSON object");
    bij->add_option("--direction", direction)
        ->required()
        ->check(CLI::IsMember({"to-rc", "to-path"}));
    bij->add_option("--n", n, "rank (required for to-path)");
    bij->add_option("--tensor", tensor, "factor order (required for to-path)");
    bij->add_option("--input", input_file, "input file (default: stdin)");
    bij->add_option("--output", output_file, "output file (default: stdout)");
    bij->add_flag("--force", force);

    CLI::App* verify = app.add_subcommand("verify", "run verification sweeps");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "x-equals-m", "bijection-roundtrip", "statistic",
                               "dualities", "rc-crystal-iso", "promotion"}));
    verify->add_option("--max-n", max_n, "grid cap on the rank (default 3)");
    verify->add_option("--max-boxes", max_boxes, "grid cap on total boxes (default 5)");
    verify->add_option("--n", n, "rank for --tensor");
    verify->add_option("--tensor", tensor, "verify a single instance instead of the grid");
    verify->add_flag("--corrupt", corrupt, "inject one corrupted rigging (negative control)");

    CLI::App* exp = app.add_subcommand("export", "write crystal graphs and JSON dumps");
    add_instance(exp, true);
    exp->add_option("--universe", universe)->check(CLI::IsMember({"path", "rc"}));
    exp->add_option("--component", component, "restrict to one classical component (1-based)");
    exp->add_option("--dot", dot_file, "DOT output file");
    exp->add_option("--json-out", json_file, "JSON output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed() || cmd_x->parsed() || cmd_m->parsed()) {
            if (cmd_x->parsed()) side = "x";
            if (cmd_m->parsed()) side = "m";
            TensorShape shape = parse_tensor_shape(n, tensor);
            check_caps(shape, force);
            Weight lambda = parse_weight(lambda_csv, n);
            print_poly(compute_poly(side, kind, shape, lambda, level), as_json);
            return 0;
        }
        if (bethe->parsed()) {
            std::cout << bethe_count(sites, down).str() << "\n";
            return 0;
        }
        if (bij->parsed()) {
            json in;
            if (!input_file.empty()) {
                std::ifstream f(input_file);
                if (!f) {
                    std::cerr << "cannot open " << input_file << "\n";
                    return 4;
                }
                f >> in;
            } else {
                std::cin >> in;
            }
            json out;
            if (direction == "to-rc") {
                Path b = path_from_json(in);
                check_caps(b.shape(), force);
                out = rc_to_json(phi(b));
            } else {
                if (tensor.empty() || n == 0)
                    throw std::invalid_argument("to-path requires --n and --tensor");
                TensorShape shape = parse_tensor_shape(n, tensor);
                check_caps(shape, force);
                out = path_to_json(phi_inverse(rc_from_json(in), shape));
            }
            if (!output_file.empty()) {
                std::ofstream f(output_file);
                if (!f) {
                    std::cerr << "cannot open " << output_file << "\n";
                    return 4;
                }
                f << out.dump(2) << "\n";
            } else {
                std::cout << out.dump(2) << "\n";
            }
            return 0;
        }
        if (verify->parsed()) return cmd_verify(suite, max_n, max_boxes, tensor, n, corrupt);
        if (exp->parsed()) {
            TensorShape shape = parse_tensor_shape(n, tensor);
            check_caps(shape, force);
            return cmd_export(universe, shape, lambda_csv, component, dot_file, json_file);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
