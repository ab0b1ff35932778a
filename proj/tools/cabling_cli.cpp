// Command-line front end: exact Farey-path queries, tight-structure
// enumeration, cable classification, Legendrian-large-cable arithmetic, and
// mountain-range rendering.  All numeric output is exact; byte-identical
// output for identical inputs.
//
// Exit codes: 0 success, 2 validation error (JSON diagnostic on stderr),
// 1 internal invariant violation.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cabling/json_io.hpp"
#include "cabling/llc.hpp"
#include "cabling/negcable.hpp"
#include "cabling/poscable.hpp"
#include "cabling/render.hpp"

namespace {

using namespace cabling;

Int parse_integer(const std::string& text, const std::string& what) {
    try {
        if (text.empty()) throw std::runtime_error("empty");
        for (std::size_t i = text[0] == '+' || text[0] == '-' ? 1 : 0; i < text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw std::runtime_error("digit");
        return Int(text);
    } catch (const std::runtime_error&) {
        throw validation_error(what + ": '" + text + "' is not an integer");
    }
}

void emit(const std::string& output_path, const std::string& text) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw validation_error("cannot write '" + output_path + "'");
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json block_to_json(const BalancedBlock& block) {
    Json signs = Json::array();
    for (Sign s : block.signs) signs.push_back(std::string(1, sign_char(s)));
    Json path = Json::array();
    for (const Slope& v : block.path().vertices) path.push_back(v.str());
    return Json{{"center", block.center.str()},
                {"half_length", json_int(block.half_length)},
                {"step", Json::array({json_int(block.step.x), json_int(block.step.y)})},
                {"signs", std::move(signs)},
                {"vertices", std::move(path)}};
}

bool slope_like(const std::string& s) {
    if (s == "inf" || s == "+inf" || s == "-inf") return true;
    if (s.empty()) return false;
    std::size_t i = s[0] == '+' || s[0] == '-' ? 1 : 0;
    bool digit = false, slash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/') {
            if (slash || !digit) return false;
            slash = true;
            digit = false;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digit = true;
        } else {
            return false;
        }
    }
    return digit;
}

// Slopes and negative integers start with '-' and would be mistaken for
// flags; fuse values into --flag=value / -fvalue form and name the farey
// positionals before the parser sees them.
std::vector<std::string> fuse_dash_values(int argc, char** argv) {
    const std::vector<std::string> long_flags = {"--from",  "--to",     "--solid-torus", "--tb",
                                                 "--floor", "--target", "--a",           "--b"};
    const std::vector<std::string> short_flags = {"-p", "-q", "-m"};
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && args[0] == "farey" && args.size() >= 2) {
        int seen = 0;
        for (std::size_t i = 2; i < args.size(); ++i) {
            if (!slope_like(args[i])) continue;
            if (args[1] == "product") {
                args[i] = (seen++ == 0 ? "--a=" : "--b=") + args[i];
                if (seen == 2) break;
            } else {
                args[i] = "--target=" + args[i];
                break;
            }
        }
    }
    std::vector<std::string> fused;
    for (std::size_t i = 0; i < args.size(); ++i) {
        bool is_long = std::find(long_flags.begin(), long_flags.end(), args[i]) != long_flags.end();
        bool is_short = std::find(short_flags.begin(), short_flags.end(), args[i]) != short_flags.end();
        if (is_long && i + 1 < args.size()) {
            fused.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        } else if (is_short && i + 1 < args.size()) {
            fused.push_back(args[i] + args[i + 1]);
            ++i;
        } else {
            fused.push_back(args[i]);
        }
    }
    return fused;
}

struct CommonOut {
    std::string output;
};

void add_output_flag(CLI::App* cmd, CommonOut& out) {
    cmd->add_option("--output", out.output, "write the result to a file instead of stdout");
}

Json path_report(const Slope& target) {
    FareyPath p = shortest_path(target);
    Json verts = Json::array();
    for (const Slope& v : p.vertices) verts.push_back(v.str());
    Json cont = Json::array();
    Int k = 0;
    if (p.edge_count() > 0) {
        Tail t = tail(target);
        k = t.k;
        for (const Slope& v : t.continuation) cont.push_back(v.str());
    }
    return Json{{"path", std::move(verts)}, {"tail", json_int(k)}, {"continuation", std::move(cont)}};
}

Json decorated_list_json(const std::vector<DecoratedPath>& list) {
    Json out = Json::array();
    for (const DecoratedPath& d : list) out.push_back(to_json(d));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact calculus of Legendrian and transverse cable knots"};
    app.require_subcommand(1);

    // farey path|product|tail
    CLI::App* farey = app.add_subcommand("farey", "slope arithmetic and Farey paths");
    farey->require_subcommand(1);
    CommonOut farey_out;
    std::string farey_target, farey_a, farey_b;
    CLI::App* farey_path = farey->add_subcommand("path", "minimal clockwise path from floor(s) to s");
    farey_path->add_option("--target", farey_target, "target slope q/p")->required();
    add_output_flag(farey_path, farey_out);
    CLI::App* farey_product = farey->add_subcommand("product", "a.num*b.den - a.den*b.num");
    farey_product->add_option("--a", farey_a, "first slope")->required();
    farey_product->add_option("--b", farey_b, "second slope")->required();
    add_output_flag(farey_product, farey_out);
    CLI::App* farey_tail = farey->add_subcommand("tail", "tail length and continuation vertices");
    farey_tail->add_option("--target", farey_target, "target slope q/p")->required();
    add_output_flag(farey_tail, farey_out);

    // tci enumerate|count
    CLI::App* tci = app.add_subcommand("tci", "tight contact structures on T2xI and S1xD2");
    tci->require_subcommand(1);
    CommonOut tci_out;
    std::string tci_from, tci_to, tci_solid;
    for (const char* name : {"enumerate", "count"}) {
        CLI::App* sub = tci->add_subcommand(name, name[0] == 'e' ? "list canonical decorated paths"
                                                                 : "count tight structures");
        sub->add_option("--from", tci_from, "back boundary slope (thickened torus)");
        sub->add_option("--to", tci_to, "front boundary slope (thickened torus)");
        sub->add_option("--solid-torus", tci_solid, "boundary slope (solid torus)");
        add_output_flag(sub, tci_out);
    }

    // cable positive|negative|tb-bound
    CLI::App* cable = app.add_subcommand("cable", "cable classification engines");
    cable->require_subcommand(1);
    CommonOut cable_out;
    std::string cable_atlas_path, cable_tori_path, cable_render, cable_floor;
    std::string cable_p, cable_q;
    bool cable_transverse = false;
    CLI::App* cable_pos = cable->add_subcommand("positive", "expand a base atlas to the cable atlas");
    cable_pos->add_option("--atlas", cable_atlas_path, "base atlas JSON file")->required();
    cable_pos->add_option("-p", cable_p)->required();
    cable_pos->add_option("-q", cable_q)->required();
    cable_pos->add_flag("--transverse", cable_transverse, "include transverse self-linking intervals");
    cable_pos->add_option("--floor", cable_floor, "tb floor for rendering / transverse intervals");
    cable_pos->add_option("--render", cable_render, "render the mountain range (ascii|svg|json)");
    add_output_flag(cable_pos, cable_out);
    CLI::App* cable_neg = cable->add_subcommand("negative", "classify a negative cable from declared tori");
    cable_neg->add_option("--tori", cable_tori_path, "tori atlas JSON file")->required();
    cable_neg->add_option("--floor", cable_floor, "tb floor for rendering");
    cable_neg->add_option("--render", cable_render, "render the mountain range (ascii|svg|json)");
    add_output_flag(cable_neg, cable_out);
    CLI::App* cable_bound = cable->add_subcommand("tb-bound", "upper bound for tb of a cable");
    cable_bound->add_option("--atlas", cable_atlas_path, "base atlas JSON file")->required();
    cable_bound->add_option("-p", cable_p)->required();
    cable_bound->add_option("-q", cable_q)->required();
    add_output_flag(cable_bound, cable_out);

    // llc check|bound|yasui
    CLI::App* llc = app.add_subcommand("llc", "Legendrian large cables");
    llc->require_subcommand(1);
    CommonOut llc_out;
    std::string llc_p, llc_q, llc_tb, llc_m, llc_atlas_path;
    CLI::App* llc_check = llc->add_subcommand("check", "balanced-block criterion for tb > pq");
    llc_check->add_option("-p", llc_p)->required();
    llc_check->add_option("-q", llc_q)->required();
    llc_check->add_option("--tb", llc_tb)->required();
    add_output_flag(llc_check, llc_out);
    CLI::App* llc_bound = llc->add_subcommand("bound", "upper bound for tb of a cable");
    llc_bound->add_option("--atlas", llc_atlas_path, "base atlas JSON file")->required();
    llc_bound->add_option("-p", llc_p)->required();
    llc_bound->add_option("-q", llc_q)->required();
    add_output_flag(llc_bound, llc_out);
    CLI::App* llc_yasui = llc->add_subcommand("yasui", "width bound from the twisted-family cables");
    llc_yasui->add_option("-m", llc_m)->required();
    add_output_flag(llc_yasui, llc_out);

    // render
    CLI::App* render = app.add_subcommand("render", "render an atlas mountain range");
    CommonOut render_out;
    std::string render_atlas_path, render_format = "ascii", render_floor, render_labels = "counts";
    render->add_option("--atlas", render_atlas_path, "atlas JSON file")->required();
    render->add_option("--format", render_format, "ascii|svg|json");
    render->add_option("--floor", render_floor, "tb floor (default: max_tb - 4)");
    render->add_option("--labels", render_labels, "counts|ids");
    add_output_flag(render, render_out);

    std::vector<std::string> args = fuse_dash_values(argc, argv);
    std::vector<const char*> cargs{argv[0]};
    for (const std::string& a : args) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (farey_path->parsed()) {
        emit(farey_out.output, dump(path_report(parse_slope(farey_target))));
    } else if (farey_product->parsed()) {
        Slope a = parse_slope(farey_a), b = parse_slope(farey_b);
        emit(farey_out.output, dump(Json{{"a", a.str()}, {"b", b.str()}, {"product", json_int(product(a, b))}}));
    } else if (farey_tail->parsed()) {
        Tail t = tail(parse_slope(farey_target));
        Json cont = Json::array();
        for (const Slope& v : t.continuation) cont.push_back(v.str());
        emit(farey_out.output,
             dump(Json{{"tail", json_int(t.k)},
                       {"step", Json::array({json_int(t.step.x), json_int(t.step.y)})},
                       {"continuation", std::move(cont)}}));
    } else if (tci->parsed()) {
        bool solid = !tci_solid.empty();
        bool thickened = !tci_from.empty() || !tci_to.empty();
        if (solid == thickened)
            throw validation_error("give either --from/--to or --solid-torus");
        bool counting = tci->get_subcommands().front()->get_name() == "count";
        if (solid) {
            Slope s = parse_slope(tci_solid);
            if (counting) emit(tci_out.output, count_solid_torus(s).str() + "\n");
            else
                emit(tci_out.output, dump(Json{{"boundary", s.str()},
                                               {"count", json_int(count_solid_torus(s))},
                                               {"structures", decorated_list_json(enumerate_solid_torus(s))}}));
        } else {
            if (tci_from.empty() || tci_to.empty()) throw validation_error("--from and --to go together");
            Slope s0 = parse_slope(tci_from), s1 = parse_slope(tci_to);
            if (counting) emit(tci_out.output, count_thickened(s0, s1).str() + "\n");
            else
                emit(tci_out.output, dump(Json{{"from", s0.str()},
                                               {"to", s1.str()},
                                               {"count", json_int(count_thickened(s0, s1))},
                                               {"structures", decorated_list_json(enumerate_thickened(s0, s1))}}));
        }
    } else if (cable_pos->parsed()) {
        LegendrianAtlas base = load_atlas(cable_atlas_path);
        Int p = parse_integer(cable_p, "-p"), q = parse_integer(cable_q, "-q");
        ExpandResult res = expand(base, p, q);
        Int floor = cable_floor.empty() ? res.atlas.max_tb - 2 * p : parse_integer(cable_floor, "--floor");
        if (!cable_render.empty()) {
            RenderSpec spec{parse_render_format(cable_render), floor, LabelMode::counts};
            emit(cable_out.output, render_mountain_range(mountain_range(res.atlas, floor), spec));
        } else {
            Json out = to_json(res.atlas);
            Json meta{{"slope", cable_slope(p, q).str()},
                      {"gating_bound", json_int(res.slope_bound)},
                      {"gating_bound_source", res.bound_from_max_tb ? "max_tb + 1" : "ceil_width"}};
            if (cable_transverse) {
                Json intervals = Json::array();
                Int sl_floor = floor;  // reuse the tb floor as the base sl floor
                for (const TransverseInterval& ti : transverse_intervals(base, p, q, sl_floor)) {
                    Json ids = Json::array();
                    for (const std::string& id : ti.base_class) ids.push_back(id);
                    Json sls = Json::array();
                    for (const Int& sl : ti.cable_sl) sls.push_back(json_int(sl));
                    intervals.push_back(Json{{"base_sl", json_int(ti.base_sl)},
                                             {"base_class", std::move(ids)},
                                             {"cable_sl", std::move(sls)}});
                }
                meta["transverse_intervals"] = std::move(intervals);
            }
            out["metadata"] = std::move(meta);
            emit(cable_out.output, dump(out));
        }
    } else if (cable_neg->parsed()) {
        ToriAtlas ta = load_tori_atlas(cable_tori_path);
        Classification cls = classify(ta);
        std::cerr << cls.report.str();
        if (!cable_render.empty()) {
            Int floor = cable_floor.empty() ? cls.atlas.max_tb - 4 : parse_integer(cable_floor, "--floor");
            RenderSpec spec{parse_render_format(cable_render), floor, LabelMode::counts};
            emit(cable_out.output, render_mountain_range(mountain_range(cls.atlas, floor), spec));
        } else {
            Json out = to_json(cls.atlas);
            Json report_lines = Json::array();
            for (const std::string& line : cls.report.lines) report_lines.push_back(line);
            Json flagged = Json::array();
            for (const std::string& f : cls.report.flagged) flagged.push_back(f);
            out["metadata"] = Json{{"report", std::move(report_lines)}, {"flagged", std::move(flagged)}};
            emit(cable_out.output, dump(out));
        }
    } else if (cable_bound->parsed() || llc_bound->parsed()) {
        bool via_llc = llc_bound->parsed();
        LegendrianAtlas base = load_atlas(via_llc ? llc_atlas_path : cable_atlas_path);
        Int p = parse_integer(via_llc ? llc_p : cable_p, "-p");
        Int q = parse_integer(via_llc ? llc_q : cable_q, "-q");
        Int width = base.ceil_width ? *base.ceil_width : base.max_tb + 1;
        TbBound bound = tb_upper_bound(p, q, width, base.max_tb);
        Json out{{"slope", cable_slope(p, q).str()},
                 {"bound", json_int(bound.bound)},
                 {"branch", bound.tail_branch ? "pq + tail" : "pq + p*max_tb - q"},
                 {"gating_bound_source", base.ceil_width ? "ceil_width" : "max_tb + 1"}};
        if (bound.tail_branch) out["tail"] = json_int(bound.tail_k);
        emit((via_llc ? llc_out : cable_out).output, dump(out));
    } else if (llc_check->parsed()) {
        Int p = parse_integer(llc_p, "-p"), q = parse_integer(llc_q, "-q"), tb = parse_integer(llc_tb, "--tb");
        auto m = required_block(tb, p, q);
        Json out{{"slope", cable_slope(p, q).str()}, {"tb", json_int(tb)}, {"pq", json_int(p * q)}};
        if (!m) {
            out["large"] = false;
        } else {
            out["large"] = true;
            out["m"] = json_int(*m);
            std::vector<Sign> signs;
            for (Int i = 0; i < *m; ++i) signs.push_back(Sign::minus);
            for (Int i = 0; i < *m; ++i) signs.push_back(Sign::plus);
            out["block"] = block_to_json(balanced_block(cable_slope(p, q), *m, signs));
        }
        emit(llc_out.output, dump(out));
    } else if (llc_yasui->parsed()) {
        Int m = parse_integer(llc_m, "-m");
        YasuiBound bound = yasui_width_bound(m);
        emit(llc_out.output, dump(Json{{"m", json_int(m)},
                                       {"width_lower_bound", bound.width_lower_bound.str()},
                                       {"witness_n_max", json_int(bound.witness_n_max)}}));
    } else if (render->parsed()) {
        LegendrianAtlas atlas = load_atlas(render_atlas_path);
        Int floor = render_floor.empty() ? atlas.max_tb - 4 : parse_integer(render_floor, "--floor");
        LabelMode labels;
        if (render_labels == "counts") labels = LabelMode::counts;
        else if (render_labels == "ids") labels = LabelMode::ids;
        else throw validation_error("unknown label mode '" + render_labels + "' (expected counts or ids)");
        RenderSpec spec{parse_render_format(render_format), floor, labels};
        emit(render_out.output, render_mountain_range(mountain_range(atlas, floor), spec));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const validation_error& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
