#include "cabling/json_io.hpp"

#include <fstream>

namespace cabling {

namespace {

const Json& require(const Json& j, const std::string& key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) throw validation_error(what + ": missing field '" + key + "'");
    return *it;
}

std::vector<Sign> signs_from_json(const Json& j, const std::string& what) {
    if (!j.is_array()) throw validation_error(what + ": signs must be an array of \"+\"/\"-\"");
    std::vector<Sign> out;
    for (const Json& s : j) out.push_back(parse_sign(s.get<std::string>()));
    return out;
}

Json signs_to_json(const std::vector<Sign>& signs) {
    Json out = Json::array();
    for (Sign s : signs) out.push_back(std::string(1, sign_char(s)));
    return out;
}

}  // namespace

Json json_int(const Int& v) {
    if (v >= Int(std::numeric_limits<long long>::min()) && v <= Int(std::numeric_limits<long long>::max()))
        return v.convert_to<long long>();
    return v.str();
}

Int int_from_json(const Json& j, const std::string& context) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw validation_error(context + ": expected an integer");
}

Json to_json(const Slope& s) { return s.str(); }

Json to_json(const DecoratedPath& d) {
    Json out;
    Json verts = Json::array();
    for (const Slope& v : d.path.vertices) verts.push_back(v.str());
    out["vertices"] = std::move(verts);
    out["signs"] = signs_to_json(d.signs);
    out["last_unsigned"] = d.last_unsigned;
    return out;
}

DecoratedPath decorated_path_from_json(const Json& j) {
    DecoratedPath d;
    for (const Json& v : require(j, "vertices", "decorated path")) d.path.vertices.push_back(parse_slope(v.get<std::string>()));
    d.signs = signs_from_json(require(j, "signs", "decorated path"), "decorated path");
    d.last_unsigned = require(j, "last_unsigned", "decorated path").get<bool>();
    d.validate();
    return d;
}

Json to_json(const LegendrianAtlas& atlas) {
    Json out;
    out["name"] = atlas.name;
    out["max_tb"] = json_int(atlas.max_tb);
    if (atlas.ceil_width) out["ceil_width"] = json_int(*atlas.ceil_width);
    Json gens = Json::array();
    for (const Generator& g : atlas.generators)
        gens.push_back(Json{{"id", g.id}, {"tb", json_int(g.tb)}, {"rot", json_int(g.rot)}});
    out["generators"] = std::move(gens);
    Json merges = Json::array();
    for (const MergeRule& r : atlas.merges)
        merges.push_back(Json{{"a", r.a},
                              {"ka", json_int(r.ka)},
                              {"la", json_int(r.la)},
                              {"b", r.b},
                              {"kb", json_int(r.kb)},
                              {"lb", json_int(r.lb)}});
    out["merges"] = std::move(merges);
    return out;
}

LegendrianAtlas atlas_from_json(const Json& j) {
    LegendrianAtlas atlas;
    atlas.name = require(j, "name", "atlas").get<std::string>();
    atlas.max_tb = int_from_json(require(j, "max_tb", "atlas"), "atlas max_tb");
    if (j.contains("ceil_width")) atlas.ceil_width = int_from_json(j["ceil_width"], "atlas ceil_width");
    for (const Json& g : require(j, "generators", "atlas")) {
        atlas.generators.push_back({require(g, "id", "generator").get<std::string>(),
                                    int_from_json(require(g, "tb", "generator"), "generator tb"),
                                    int_from_json(require(g, "rot", "generator"), "generator rot")});
    }
    if (j.contains("merges")) {
        for (const Json& r : j["merges"]) {
            atlas.merges.push_back({require(r, "a", "merge rule").get<std::string>(),
                                    int_from_json(require(r, "ka", "merge rule"), "merge rule ka"),
                                    int_from_json(require(r, "la", "merge rule"), "merge rule la"),
                                    require(r, "b", "merge rule").get<std::string>(),
                                    int_from_json(require(r, "kb", "merge rule"), "merge rule kb"),
                                    int_from_json(require(r, "lb", "merge rule"), "merge rule lb")});
        }
    }
    atlas.validate();
    return atlas;
}

namespace {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::pair<Int, Int> torus_ref_from_json(const Json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2) throw validation_error(what + ": torus reference must be [i, j]");
    return {int_from_json(j[0], what), int_from_json(j[1], what)};
}

Json torus_ref_to_json(const std::pair<Int, Int>& ref) {
    return Json::array({json_int(ref.first), json_int(ref.second)});
}

}  // namespace

Json to_json(const ToriAtlas& ta) {
    Json out;
    out["cable"] = Json{{"p", json_int(ta.p)}, {"q", json_int(ta.q)}};
    if (ta.mode == CableMode::negative)
        out["mode"] = "negative";
    else
        out["mode"] = Json{{"in_between", ta.omega ? ta.omega->str() : ""}};
    out["base_atlas"] = to_json(ta.base);
    out["minimally_thickenable"] = ta.minimally_thickenable;
    Json tori = Json::array();
    for (const TorusDecl& t : ta.tori) {
        Json decl;
        decl["i"] = json_int(t.i);
        decl["j"] = json_int(t.j);
        decl["base_generator"] = t.base_generator;
        decl["signs"] = signs_to_json(t.signs);
        Json targets = Json::array();
        for (const auto& ref : t.destabilizes_into) targets.push_back(torus_ref_to_json(ref));
        decl["destabilizes_into"] = std::move(targets);
        tori.push_back(std::move(decl));
    }
    out["tori"] = std::move(tori);
    Json comm = Json::array();
    for (const CommensuratingDecl& c : ta.commensurating) {
        Json decl;
        decl["a"] = torus_ref_to_json(c.a);
        decl["b"] = torus_ref_to_json(c.b);
        decl["m"] = json_int(c.m);
        if (!c.signs_below_a.empty() || !c.signs_below_b.empty())
            decl["signs_below"] = Json{{"a", signs_to_json(c.signs_below_a)}, {"b", signs_to_json(c.signs_below_b)}};
        comm.push_back(std::move(decl));
    }
    out["commensurating"] = std::move(comm);
    Json super = Json::array();
    for (const SuperCommensuratingDecl& s : ta.super_commensurating) {
        super.push_back(Json{{"a", torus_ref_to_json(s.a)},
                             {"b", torus_ref_to_json(s.b)},
                             {"slope", s.slope.str()},
                             {"signs_a", signs_to_json(s.signs_a)},
                             {"signs_b", signs_to_json(s.signs_b)}});
    }
    out["super_commensurating"] = std::move(super);
    return out;
}

ToriAtlas tori_atlas_from_json(const Json& j) {
    ToriAtlas ta;
    const Json& cable = require(j, "cable", "tori atlas");
    ta.p = int_from_json(require(cable, "p", "cable"), "cable p");
    ta.q = int_from_json(require(cable, "q", "cable"), "cable q");
    const Json& mode = require(j, "mode", "tori atlas");
    if (mode.is_string() && mode.get<std::string>() == "negative") {
        ta.mode = CableMode::negative;
    } else if (mode.is_object() && mode.contains("in_between")) {
        ta.mode = CableMode::in_between;
        ta.omega = parse_slope(mode["in_between"].get<std::string>());
    } else {
        throw validation_error("tori atlas: mode must be \"negative\" or {\"in_between\": \"w/x\"}");
    }
    ta.base = atlas_from_json(require(j, "base_atlas", "tori atlas"));
    ta.minimally_thickenable = require(j, "minimally_thickenable", "tori atlas").get<bool>();
    for (const Json& t : require(j, "tori", "tori atlas")) {
        TorusDecl decl;
        decl.i = int_from_json(require(t, "i", "torus"), "torus i");
        decl.j = int_from_json(require(t, "j", "torus"), "torus j");
        decl.base_generator = require(t, "base_generator", "torus").get<std::string>();
        decl.signs = signs_from_json(require(t, "signs", "torus"), "torus signs");
        if (t.contains("destabilizes_into"))
            for (const Json& ref : t["destabilizes_into"])
                decl.destabilizes_into.push_back(torus_ref_from_json(ref, "destabilizes_into"));
        ta.tori.push_back(std::move(decl));
    }
    if (j.contains("commensurating")) {
        for (const Json& c : j["commensurating"]) {
            CommensuratingDecl decl;
            decl.a = torus_ref_from_json(require(c, "a", "commensurating"), "commensurating a");
            decl.b = torus_ref_from_json(require(c, "b", "commensurating"), "commensurating b");
            decl.m = int_from_json(require(c, "m", "commensurating"), "commensurating m");
            if (c.contains("signs_below")) {
                decl.signs_below_a = signs_from_json(require(c["signs_below"], "a", "signs_below"), "signs_below a");
                decl.signs_below_b = signs_from_json(require(c["signs_below"], "b", "signs_below"), "signs_below b");
            }
            ta.commensurating.push_back(std::move(decl));
        }
    }
    if (j.contains("super_commensurating")) {
        for (const Json& s : j["super_commensurating"]) {
            SuperCommensuratingDecl decl;
            decl.a = torus_ref_from_json(require(s, "a", "super_commensurating"), "super_commensurating a");
            decl.b = torus_ref_from_json(require(s, "b", "super_commensurating"), "super_commensurating b");
            decl.slope = parse_slope(require(s, "slope", "super_commensurating").get<std::string>());
            decl.signs_a = signs_from_json(require(s, "signs_a", "super_commensurating"), "signs_a");
            decl.signs_b = signs_from_json(require(s, "signs_b", "super_commensurating"), "signs_b");
            ta.super_commensurating.push_back(std::move(decl));
        }
    }
    validate_tori_atlas(ta);
    return ta;
}

LegendrianAtlas load_atlas(const std::string& path) { return atlas_from_json(load_json_file(path)); }

ToriAtlas load_tori_atlas(const std::string& path) { return tori_atlas_from_json(load_json_file(path)); }

Json to_json(const MountainRange& range) {
    Json out;
    out["tb_floor"] = json_int(range.tb_floor);
    Json points = Json::array();
    for (const RangePoint& p : range.points) {
        Json groups = Json::array();
        for (const auto& group : p.groups) {
            Json members = Json::array();
            for (const LegendrianClass& c : group) {
                members.push_back(Json{{"gen", c.gen}, {"k+", json_int(c.kplus)}, {"k-", json_int(c.kminus)}});
            }
            groups.push_back(std::move(members));
        }
        points.push_back(Json{{"rot", json_int(p.rot)},
                              {"tb", json_int(p.tb)},
                              {"count", groups.size()},
                              {"classes", std::move(groups)}});
    }
    out["points"] = std::move(points);
    return out;
}

}  // namespace cabling
