#ifndef PETINDUCE_SVG_HPP
#define PETINDUCE_SVG_HPP

// SVG rendering of 2-dimensional labeled partitions.  Coordinates are
// evaluated in doubles for display only; exactness lives in the JSON files.

#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "partition.hpp"

namespace petinduce {

struct SvgStyle {
    double scale = 120.0;
    double margin = 10.0;
    std::string stroke = "#333333";
    double stroke_width = 1.0;
    bool show_labels = true;
    int label_font_size = 14;
};

namespace detail {

inline int uf_find(std::vector<int>& parent, int i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

inline int shared_vertices(const ConvexPolytope<2>& a, const ConvexPolytope<2>& b) {
    int n = 0;
    for (const auto& p : a.vertices())
        for (const auto& q : b.vertices())
            if (p == q) ++n;
    return n;
}

}  // namespace detail

// One filled polygon per cell; one label per maximal group of edge-adjacent
// cells sharing a label (so a split non-convex atom carries a single label).
inline std::string render_svg(const LabeledPartition<2>& p, const SvgStyle& style = {}) {
    static const char* palette[] = {"#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99",
                                    "#e31a1c", "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a",
                                    "#ffff99", "#b15928", "#8dd3c7", "#bebada", "#fccde5",
                                    "#80b1d3", "#fdb462", "#b3de69", "#d9d9d9", "#bc80bd"};
    constexpr std::size_t palette_size = sizeof(palette) / sizeof(palette[0]);

    auto [lo, hi] = p.domain().bounding_box();
    double x0 = lo[0].to_double(), y0 = lo[1].to_double();
    double x1 = hi[0].to_double(), y1 = hi[1].to_double();
    double s = style.scale, m = style.margin;
    double width = (x1 - x0) * s + 2 * m, height = (y1 - y0) * s + 2 * m;
    auto tx = [&](double x) { return m + (x - x0) * s; };
    auto ty = [&](double y) { return m + (y1 - y) * s; };  // flip: SVG y grows downward

    std::ostringstream out;
    out.precision(12);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

    const auto& atoms = p.atoms();
    for (const auto& atom : atoms) {
        out << "  <polygon points=\"";
        bool first = true;
        for (const auto& v : atom.cell.vertices()) {
            if (!first) out << ' ';
            out << tx(v[0].to_double()) << ',' << ty(v[1].to_double());
            first = false;
        }
        out << "\" fill=\""
            << palette[static_cast<std::size_t>(atom.label >= 0 ? atom.label : -atom.label) %
                       palette_size]
            << "\" stroke=\"" << style.stroke << "\" stroke-width=\"" << style.stroke_width
            << "\"/>\n";
    }

    if (style.show_labels) {
        // union-find over edge-adjacent cells of equal label
        std::vector<int> parent(atoms.size());
        std::iota(parent.begin(), parent.end(), 0);
        for (std::size_t i = 0; i < atoms.size(); ++i)
            for (std::size_t j = i + 1; j < atoms.size(); ++j)
                if (atoms[i].label == atoms[j].label &&
                    detail::shared_vertices(atoms[i].cell, atoms[j].cell) >= 2)
                    parent[detail::uf_find(parent, static_cast<int>(j))] =
                        detail::uf_find(parent, static_cast<int>(i));
        std::vector<double> sum_x(atoms.size(), 0), sum_y(atoms.size(), 0);
        std::vector<int> count(atoms.size(), 0);
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            int root = detail::uf_find(parent, static_cast<int>(i));
            Vec<2> c = atoms[i].cell.centroid();
            sum_x[root] += c[0].to_double();
            sum_y[root] += c[1].to_double();
            count[root] += 1;
        }
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (count[i] == 0) continue;  // not a root
            double cx = sum_x[i] / count[i], cy = sum_y[i] / count[i];
            out << "  <text x=\"" << tx(cx) << "\" y=\"" << ty(cy)
                << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-size=\""
                << style.label_font_size << "\">" << atoms[i].label << "</text>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

// Number of label placements render_svg would emit (group count).
inline int label_group_count(const LabeledPartition<2>& p) {
    const auto& atoms = p.atoms();
    std::vector<int> parent(atoms.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            if (atoms[i].label == atoms[j].label &&
                detail::shared_vertices(atoms[i].cell, atoms[j].cell) >= 2)
                parent[detail::uf_find(parent, static_cast<int>(j))] =
                    detail::uf_find(parent, static_cast<int>(i));
    int groups = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (detail::uf_find(parent, static_cast<int>(i)) == static_cast<int>(i)) ++groups;
    return groups;
}

}  // namespace petinduce

#endif  // PETINDUCE_SVG_HPP
