#include "cabling/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cabling/json_io.hpp"

namespace cabling {

RenderFormat parse_render_format(const std::string& text) {
    if (text == "ascii") return RenderFormat::ascii;
    if (text == "svg") return RenderFormat::svg;
    if (text == "json") return RenderFormat::json;
    throw validation_error("unknown render format '" + text + "' (expected ascii, svg or json)");
}

namespace {

std::string node_label(const RangePoint& p, LabelMode mode) {
    if (mode == LabelMode::counts) return std::to_string(p.groups.size());
    std::string out;
    for (std::size_t g = 0; g < p.groups.size(); ++g) {
        if (g) out += "|";
        const LegendrianClass& c = p.groups[g].front();
        out += c.gen;
        if (c.kplus != 0 || c.kminus != 0) out += "(" + c.kplus.str() + "," + c.kminus.str() + ")";
    }
    return out;
}

std::string render_ascii(const MountainRange& range, const RenderSpec& spec) {
    std::map<Int, std::map<Int, const RangePoint*>> rows;  // tb -> rot -> point
    Int rot_min = 0, rot_max = 0, tb_min = 0, tb_max = 0;
    bool first = true;
    for (const RangePoint& p : range.points) {
        rows[p.tb][p.rot] = &p;
        if (first) {
            rot_min = rot_max = p.rot;
            tb_min = tb_max = p.tb;
            first = false;
        }
        rot_min = std::min(rot_min, p.rot);
        rot_max = std::max(rot_max, p.rot);
        tb_min = std::min(tb_min, p.tb);
        tb_max = std::max(tb_max, p.tb);
    }
    if (first) throw validation_error("empty mountain range");

    // Column widths per rot value keep node labels aligned across rows.
    std::map<Int, std::size_t> width;
    for (Int r = rot_min; r <= rot_max; ++r) width[r] = 1;
    for (const RangePoint& p : range.points)
        width[p.rot] = std::max(width[p.rot], node_label(p, spec.label_mode).size());

    std::map<Int, std::size_t> column;
    std::size_t x = 0;
    std::size_t tb_label_width = 0;
    for (Int t = tb_max; t >= tb_min; --t) tb_label_width = std::max(tb_label_width, ("tb " + t.str()).size());
    for (Int r = rot_min; r <= rot_max; ++r) {
        column[r] = x + width[r] / 2;
        x += width[r] + 3;
    }

    std::ostringstream os;
    for (Int t = tb_max; t >= tb_min; --t) {
        auto row = rows.find(t);
        std::string label = "tb " + t.str();
        std::string line(tb_label_width, ' ');
        line.replace(0, label.size(), label);
        line += "  ";
        std::string arrows(line.size(), ' ');
        if (row != rows.end()) {
            for (const auto& [rot, point] : row->second) {
                std::string text = node_label(*point, spec.label_mode);
                std::size_t at = tb_label_width + 2 + column[rot] - text.size() / 2;
                if (line.size() < at + text.size()) line.resize(at + text.size(), ' ');
                line.replace(at, text.size(), text);
                // Arrows to the two stabilization children, when present.
                if (t > tb_min) {
                    auto child_row = rows.find(t - 1);
                    if (child_row != rows.end()) {
                        std::size_t base = tb_label_width + 2 + column[rot];
                        if (child_row->second.count(rot - 1)) {
                            if (arrows.size() < base) arrows.resize(base, ' ');
                            arrows.replace(base - 1, 1, "/");
                        }
                        if (child_row->second.count(rot + 1)) {
                            if (arrows.size() < base + 2) arrows.resize(base + 2, ' ');
                            arrows.replace(base + 1, 1, "\\");
                        }
                    }
                }
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
        while (!arrows.empty() && arrows.back() == ' ') arrows.pop_back();
        if (!arrows.empty() && t > tb_min) os << arrows << "\n";
    }
    std::ostringstream head;
    head << "rot " << rot_min.str() << " .. " << rot_max.str() << "\n";
    return head.str() + os.str();
}

constexpr int kSvgScale = 48;

std::string render_svg(const MountainRange& range, const RenderSpec& spec) {
    Int rot_min = range.points.front().rot, rot_max = rot_min;
    Int tb_min = range.points.front().tb, tb_max = tb_min;
    for (const RangePoint& p : range.points) {
        rot_min = std::min(rot_min, p.rot);
        rot_max = std::max(rot_max, p.rot);
        tb_min = std::min(tb_min, p.tb);
        tb_max = std::max(tb_max, p.tb);
    }
    auto px_x = [&](const Int& rot) { return to_int64((rot - rot_min) * kSvgScale) + kSvgScale; };
    auto px_y = [&](const Int& tb) { return to_int64((tb_max - tb) * kSvgScale) + kSvgScale; };
    long long w = px_x(rot_max) + kSvgScale;
    long long h = px_y(tb_min) + kSvgScale;

    std::map<std::pair<Int, Int>, const RangePoint*> at;
    for (const RangePoint& p : range.points) at[{p.tb, p.rot}] = &p;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    for (const RangePoint& p : range.points) {
        for (int dr : {-1, 1}) {
            if (!at.count({p.tb - 1, p.rot + dr})) continue;
            os << "  <line x1=\"" << px_x(p.rot) << "\" y1=\"" << px_y(p.tb) << "\" x2=\"" << px_x(p.rot + dr)
               << "\" y2=\"" << px_y(p.tb - 1) << "\" stroke=\"black\"/>\n";
        }
    }
    for (const RangePoint& p : range.points) {
        os << "  <circle cx=\"" << px_x(p.rot) << "\" cy=\"" << px_y(p.tb) << "\" r=\"14\" fill=\"white\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << px_x(p.rot) << "\" y=\"" << px_y(p.tb) + 4
           << "\" text-anchor=\"middle\" font-size=\"12\">" << node_label(p, spec.label_mode) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render_mountain_range(const MountainRange& range, const RenderSpec& spec) {
    if (range.points.empty()) throw validation_error("empty mountain range");
    switch (spec.format) {
        case RenderFormat::ascii:
            return render_ascii(range, spec);
        case RenderFormat::svg:
            return render_svg(range, spec);
        case RenderFormat::json:
            return to_json(range).dump(2) + "\n";
    }
    throw internal_error("unhandled render format");
}

}  // namespace cabling
