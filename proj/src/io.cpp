#include "cactus5/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cactus5 {

namespace {

const char* family_name(Family f) { return f == Family::first ? "first" : "second"; }
const char* equivalence_name(Equivalence e) { return e == Equivalence::fixed_labels ? "fixed" : "rotated"; }

ordered_json first_edges_json(const FirstCactus& c) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : c.edges) arr.push_back({e.label, e.a, e.b});
    return arr;
}

ordered_json second_edges_json(const SecondCactus& c) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : c.edges) {
        ordered_json row = {e.label, e.a, e.b};
        if (e.chamber)
            row.push_back(std::string(1, chamber_letter(*e.chamber)));
        else
            row.push_back(nullptr);
        arr.push_back(row);
    }
    return arr;
}

std::string first_edges_text(const FirstCactus& c) {
    std::ostringstream out;
    for (size_t i = 0; i < c.edges.size(); ++i) {
        if (i) out << "  ";
        out << c.edges[i].label << ":(" << c.edges[i].a << "," << c.edges[i].b << ")";
    }
    return out.str();
}

std::string second_edges_text(const SecondCactus& c) {
    std::ostringstream out;
    for (size_t i = 0; i < c.edges.size(); ++i) {
        const auto& e = c.edges[i];
        if (i) out << "  ";
        out << e.label << ":(" << e.a << "," << e.b;
        if (e.chamber) out << "," << chamber_letter(*e.chamber);
        out << ")";
    }
    return out.str();
}

std::string walk_text(const std::vector<std::vector<MarkedItem>>& walks) {
    std::ostringstream out;
    for (size_t i = 0; i < walks.size(); ++i) {
        out << "oval " << i << ":";
        for (const auto& item : walks[i]) {
            out << " ";
            switch (item.kind) {
            case MarkedItem::Kind::plain: out << item.label; break;
            case MarkedItem::Kind::gluing:
                out << "[" << item.label;
                if (item.chamber) out << chamber_letter(*item.chamber);
                out << "]";
                break;
            case MarkedItem::Kind::inner_dot: out << "(" << item.label << ")"; break;
            }
        }
        out << "\n";
    }
    return out.str();
}

// crude layered tree layout: BFS from oval 0, children spread below parents
std::map<int, std::pair<double, double>> tree_layout(int ovals, const std::vector<std::pair<int, int>>& links) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(ovals));
    for (auto [a, b] : links) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());

    std::map<int, std::pair<double, double>> pos;
    std::vector<int> level(static_cast<size_t>(ovals), -1);
    std::vector<int> order{0};
    level[0] = 0;
    for (size_t h = 0; h < order.size(); ++h)
        for (int nb : adj[static_cast<size_t>(order[h])])
            if (level[static_cast<size_t>(nb)] < 0) {
                level[static_cast<size_t>(nb)] = level[static_cast<size_t>(order[h])] + 1;
                order.push_back(nb);
            }
    std::map<int, int> seen_on_level;
    for (int v : order) {
        int l = level[static_cast<size_t>(v)];
        int k = seen_on_level[l]++;
        pos[v] = {static_cast<double>(k) * 1.6 - 0.8 * l, -1.4 * l};
    }
    return pos;
}

std::string dot_tree(int ovals, const std::vector<std::tuple<int, int, std::string>>& labeled,
                     const std::string& big_style) {
    std::ostringstream out;
    out << "graph cactus {\n  node [shape=circle fontsize=10];\n";
    for (int v = 0; v < ovals; ++v) {
        out << "  o" << v;
        if (v == 0 && !big_style.empty()) out << " [" << big_style << "]";
        out << ";\n";
    }
    for (const auto& [a, b, lab] : labeled)
        out << "  o" << a << " -- o" << b << " [label=\"" << lab << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string tikz_tree(int ovals, const std::vector<std::tuple<int, int, std::string>>& labeled, bool mark_big) {
    auto pos = tree_layout(ovals, [&] {
        std::vector<std::pair<int, int>> links;
        for (const auto& [a, b, lab] : labeled) links.emplace_back(a, b);
        return links;
    }());
    std::ostringstream out;
    out << "\\begin{tikzpicture}[every node/.style={draw,circle,inner sep=2pt}]\n";
    for (int v = 0; v < ovals; ++v) {
        auto [x, y] = pos[v];
        out << "  \\node";
        if (v == 0 && mark_big) out << "[double]";
        out << " (o" << v << ") at (" << x << "," << y << ") {$" << v << "$};\n";
    }
    for (const auto& [a, b, lab] : labeled)
        out << "  \\draw (o" << a << ") -- node[draw=none,fill=white,inner sep=1pt] {$" << lab << "$} (o" << b
            << ");\n";
    out << "\\end{tikzpicture}\n";
    return out.str();
}

} // namespace

ordered_json atlas_to_json(const Atlas& atlas) {
    ordered_json j;
    j["family"] = family_name(atlas.family);
    j["degree"] = atlas.degree;
    j["equivalence"] = equivalence_name(atlas.equivalence);
    j["count"] = atlas.size();
    ordered_json classes = ordered_json::array();
    for (int i = 0; i < atlas.size(); ++i) {
        const CactusClass& c = atlas.at(i);
        ordered_json row;
        row["index"] = i;
        row["key"] = key_to_hex(c.canonical_key);
        if (c.family == Family::first) {
            row["edges"] = first_edges_json(c.first());
            row["shape"] = shape_descriptor(c.first()).text;
        } else {
            row["edges"] = second_edges_json(c.second());
            row["shape"] = shape_descriptor(c.second()).text;
        }
        classes.push_back(row);
    }
    j["classes"] = classes;
    return j;
}

std::string atlas_to_text(const Atlas& atlas) {
    std::ostringstream out;
    out << family_name(atlas.family) << " degree " << atlas.degree << " (" << equivalence_name(atlas.equivalence)
        << "): " << atlas.size() << " classes\n";
    for (int i = 0; i < atlas.size(); ++i) {
        const CactusClass& c = atlas.at(i);
        out << "  #" << i << "  ";
        if (c.family == Family::first)
            out << first_edges_text(c.first()) << "  " << shape_descriptor(c.first()).text;
        else
            out << second_edges_text(c.second()) << "  " << shape_descriptor(c.second()).text;
        out << "\n";
    }
    return out.str();
}

ordered_json classification_to_json(const Classification& cl) {
    ordered_json j;
    j["family"] = cl.kind == CaseKind::quadrangle ? "first" : "second";
    j["case"] = cl.kind == CaseKind::quadrangle ? "quadrangle" : "triangle";
    j["index"] = cl.atlas_index;
    j["key"] = key_to_hex(cl.canonical_key);
    j["shape"] = cl.shape;
    return j;
}

ordered_json sample_table_to_json(const SampleTable& table) {
    ordered_json j;
    j["count"] = table.count;
    j["seed"] = table.seed;
    j["stable"] = table.stable;
    ordered_json by_class = ordered_json::object();
    for (const auto& [k, v] : table.by_class) by_class[k] = v;
    j["by_class"] = by_class;
    ordered_json failures = ordered_json::object();
    for (const auto& [k, v] : table.failures) failures[k] = v;
    j["failures"] = failures;
    return j;
}

ordered_json oracle_report_to_json(const OracleReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["tuples"] = report.tuple_count;
    j["classes"] = report.class_count;
    j["per_class"] = report.per_class;
    j["tree_fixed"] = report.tree_fixed_count;
    j["tree_rotated"] = report.tree_rotated_count;
    j["agree"] = report.agree;
    return j;
}

std::string oracle_report_to_text(const OracleReport& report) {
    std::ostringstream out;
    out << "n=" << report.n << ": " << report.tuple_count << " tuples, " << report.class_count
        << " conjugation classes (" << report.per_class << " per class), tree census " << report.tree_fixed_count
        << " fixed / " << report.tree_rotated_count << " rotated, "
        << (report.agree ? "consistent" : "INCONSISTENT") << "\n";
    return out.str();
}

std::string render_first(const FirstCactus& c, const std::string& format) {
    if (format == "text") {
        std::ostringstream out;
        out << "first, degree " << c.degree << ", " << shape_descriptor(c).text << "\n";
        out << "edges: " << first_edges_text(c) << "\n";
        out << walk_text(boundary_walks(c).ovals);
        return out.str();
    }
    if (format == "json") {
        ordered_json j;
        j["family"] = "first";
        j["degree"] = c.degree;
        j["edges"] = first_edges_json(c);
        j["shape"] = shape_descriptor(c).text;
        return j.dump(2) + "\n";
    }
    std::vector<std::tuple<int, int, std::string>> labeled;
    for (const auto& e : c.edges) labeled.emplace_back(e.a, e.b, std::to_string(e.label));
    if (format == "dot") return dot_tree(c.degree, labeled, "");
    if (format == "tikz") return tikz_tree(c.degree, labeled, false);
    throw Error(Errc::UnknownFormat, "unknown render format: " + format);
}

std::string render_second(const SecondCactus& c, const std::string& format) {
    if (format == "text") {
        std::ostringstream out;
        out << "second, degree 5, " << shape_descriptor(c).text << "\n";
        out << "edges: " << second_edges_text(c) << "\n";
        out << walk_text(boundary_walks(c).ovals);
        return out.str();
    }
    if (format == "json") {
        ordered_json j;
        j["family"] = "second";
        j["degree"] = 5;
        j["edges"] = second_edges_json(c);
        j["shape"] = shape_descriptor(c).text;
        return j.dump(2) + "\n";
    }
    std::vector<std::tuple<int, int, std::string>> labeled;
    for (const auto& e : c.edges) {
        std::string lab = std::to_string(e.label);
        if (e.chamber) lab += chamber_letter(*e.chamber);
        labeled.emplace_back(e.a, e.b, lab);
    }
    if (format == "dot") return dot_tree(4, labeled, "style=bold");
    if (format == "tikz") return tikz_tree(4, labeled, true);
    throw Error(Errc::UnknownFormat, "unknown render format: " + format);
}

} // namespace cactus5
