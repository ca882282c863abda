#ifndef PETINDUCE_PET_HPP
#define PETINDUCE_PET_HPP

// Polytope exchange transformations: piecewise translations of a convex
// domain, constructed directly or from toral translations, with composition,
// inversion, atom merging, affine conjugation and orbit coding.

#include <algorithm>
#include <map>
#include <type_traits>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "partition.hpp"

namespace petinduce {

template <int D>
struct LatticeSpec {
    std::array<Vec<D>, D> basis;        // lattice basis vectors
    ConvexPolytope<D> fundamental_domain;  // axis-aligned box
};

template <int D>
class Pet {
public:
    Pet() = default;
    Pet(LabeledPartition<D> atoms, std::map<int, Vec<D>> translations)
        : atoms_(std::move(atoms)), translations_(std::move(translations)) {}

    const ConvexPolytope<D>& domain() const { return atoms_.domain(); }
    const LabeledPartition<D>& atoms() const { return atoms_; }
    const std::map<int, Vec<D>>& translations() const { return translations_; }

    const Vec<D>& translation(int label) const { return translations_.at(label); }

    static Pet identity(ConvexPolytope<D> domain) {
        LabeledPartition<D> atoms(domain, {{0, domain}});
        return {std::move(atoms), {{0, Vec<D>{}}}};
    }

    Vec<D> apply(const Vec<D>& x) const {
        for (const auto& atom : atoms_.atoms())
            if (atom.cell.contains_interior(x)) return x + translations_.at(atom.label);
        throw OnBoundary("apply: point on an atom boundary or outside the domain");
    }

    // T^n(x); negative n goes through the inverse map.
    Vec<D> apply_power(const Vec<D>& x, long n) const {
        Vec<D> y = x;
        if (n >= 0) {
            for (long k = 0; k < n; ++k) y = apply(y);
        } else {
            Pet inv = inverse();
            for (long k = 0; k < -n; ++k) y = inv.apply(y);
        }
        return y;
    }

    Pet inverse() const {
        std::vector<LabeledAtom<D>> out;
        std::map<int, Vec<D>> trans;
        for (const auto& atom : atoms_.atoms())
            out.push_back({atom.label, atom.cell.translate(translations_.at(atom.label))});
        for (const auto& [label, t] : translations_) trans[label] = -t;
        return {LabeledPartition<D>(domain(), std::move(out)), std::move(trans)};
    }

    // The image cells must again partition the domain (the PET property).
    void validate() const {
        atoms_.validate();
        inverse().atoms_.validate();
    }

    // Image of a labeled partition: refine with the continuity atoms, then
    // translate each piece.
    LabeledPartition<D> image_of(const LabeledPartition<D>& p) const {
        if (p.domain() != domain()) throw DomainMismatch("image_of: domains differ");
        std::vector<LabeledAtom<D>> out;
        for (const auto& a : p.atoms())
            for (const auto& g : atoms_.atoms()) {
                ConvexPolytope<D> c = a.cell.intersect(g.cell);
                if (!c.empty())
                    out.push_back({a.label, c.translate(translations_.at(g.label))});
            }
        return {domain(), std::move(out)};
    }

    // this after other:  x -> this(other(x)).  Atoms are the refinement of
    // other's atoms with other-preimages of this's atoms; translations sum.
    Pet compose_after(const Pet& other) const {
        if (domain() != other.domain()) throw DomainMismatch("compose: domains differ");
        std::vector<LabeledAtom<D>> out;
        std::map<int, Vec<D>> trans;
        int next = 0;
        for (const auto& g1 : other.atoms_.atoms()) {
            Vec<D> t1 = other.translations_.at(g1.label);
            ConvexPolytope<D> img = g1.cell.translate(t1);
            for (const auto& g2 : atoms_.atoms()) {
                ConvexPolytope<D> c = img.intersect(g2.cell);
                if (c.empty()) continue;
                out.push_back({next, c.translate(-t1)});
                trans[next] = t1 + translations_.at(g2.label);
                ++next;
            }
        }
        return {LabeledPartition<D>(domain(), std::move(out)), std::move(trans)};
    }

    // Atoms sharing a translation vector are grouped under one label
    // (first-occurrence order); a group is fused into a single cell when its
    // union is convex (checked by an exact hull-volume comparison).
    Pet merge_atoms_with_same_translation() const {
        std::vector<Vec<D>> order;
        std::map<int, std::vector<ConvexPolytope<D>>> groups;  // index into order
        for (const auto& atom : atoms_.atoms()) {
            const Vec<D>& t = translations_.at(atom.label);
            int idx = -1;
            for (std::size_t i = 0; i < order.size(); ++i)
                if (order[i] == t) { idx = static_cast<int>(i); break; }
            if (idx < 0) {
                idx = static_cast<int>(order.size());
                order.push_back(t);
            }
            groups[idx].push_back(atom.cell);
        }
        std::vector<LabeledAtom<D>> out;
        std::map<int, Vec<D>> trans;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int label = static_cast<int>(i);
            trans[label] = order[i];
            auto& cells = groups[label];
            if (cells.size() > 1) {
                std::vector<Vec<D>> pts;
                FieldElem total(0);
                for (const auto& c : cells) {
                    pts.insert(pts.end(), c.vertices().begin(), c.vertices().end());
                    total += c.volume();
                }
                ConvexPolytope<D> hull = convex_hull(pts);
                if (!hull.empty() && hull.volume() == total) {
                    out.push_back({label, std::move(hull)});
                    continue;
                }
            }
            for (auto& c : cells) out.push_back({label, std::move(c)});
        }
        return {LabeledPartition<D>(domain(), std::move(out)), std::move(trans)};
    }

    // h o T o h^{-1} for h(x) = c x + u; translations scale by c.
    Pet conjugate_affine(const FieldElem& c, const Vec<D>& u) const {
        std::vector<LabeledAtom<D>> out;
        std::map<int, Vec<D>> trans;
        for (const auto& atom : atoms_.atoms())
            out.push_back({atom.label, atom.cell.affine(c, u)});
        for (const auto& [label, t] : translations_) trans[label] = c * t;
        return {LabeledPartition<D>(domain().affine(c, u), std::move(out)), std::move(trans)};
    }

    static ConvexPolytope<D> convex_hull(std::vector<Vec<D>> pts) {
        if constexpr (D == 1) {
            Vec<1> lo = pts.at(0), hi = pts.at(0);
            for (const auto& p : pts) {
                if (p[0] < lo[0]) lo = p;
                if (hi[0] < p[0]) hi = p;
            }
            return ConvexPolytope<1>::from_vertices({lo, hi});
        } else {
            std::sort(pts.begin(), pts.end(),
                      [](const Vec<2>& x, const Vec<2>& y) { return lex_less(x, y); });
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            if (pts.size() < 3) return {};
            auto half = [](const std::vector<Vec<2>>& ps) {
                std::vector<Vec<2>> h;
                for (const auto& p : ps) {
                    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p).sign() <= 0)
                        h.pop_back();
                    h.push_back(p);
                }
                return h;
            };
            std::vector<Vec<2>> lower = half(pts);
            std::reverse(pts.begin(), pts.end());
            std::vector<Vec<2>> upper = half(pts);
            lower.pop_back();
            upper.pop_back();
            lower.insert(lower.end(), upper.begin(), upper.end());
            return ConvexPolytope<2>::from_vertices(std::move(lower));
        }
    }

private:
    LabeledPartition<D> atoms_;
    std::map<int, Vec<D>> translations_;
};

namespace detail {

// Integer range [lo, hi] with lo = ceil(a), hi = floor(b) for field bounds.
inline std::pair<long, long> integer_range(const FieldElem& a, const FieldElem& b) {
    mpz_class lo = (-((-a).floor()));  // ceil(a)
    mpz_class hi = b.floor();
    return {lo.get_si(), hi.get_si()};
}

}  // namespace detail

// The PET on L.fundamental_domain realizing x -> x + t mod L: one atom per
// lattice vector gamma with (D + t - gamma) meeting D full-dimensionally.
// Atoms are ordered by translation vector, lexicographically descending under
// the field order, and labeled 0..k-1.
template <int D>
Pet<D> toral_translation(const LatticeSpec<D>& lattice, const std::type_identity_t<Vec<D>>& t) {
    const ConvexPolytope<D>& dom = lattice.fundamental_domain;
    auto [lo, hi] = dom.bounding_box();

    // Solve basis * (i_0..i_{D-1}) = gamma over the box of feasible gamma
    // (componentwise bbox(D + t) - bbox(D)) to bound the integer search.
    std::vector<std::array<long, D>> candidates;
    if constexpr (D == 1) {
        const FieldElem& len = lattice.basis[0][0];
        if (len.sign() == 0) throw GeometryError("toral_translation: singular basis");
        FieldElem q1 = ((lo[0] + t[0]) - hi[0]) / len, q2 = ((hi[0] + t[0]) - lo[0]) / len;
        if (q2 < q1) std::swap(q1, q2);
        auto [ilo, ihi] = detail::integer_range(q1, q2);
        for (long i = ilo; i <= ihi; ++i) candidates.push_back({i});
    } else {
        const Vec<2>&b1 = lattice.basis[0], &b2 = lattice.basis[1];
        FieldElem det = b1[0] * b2[1] - b2[0] * b1[1];
        if (det.sign() == 0) throw GeometryError("toral_translation: singular basis");
        FieldElem inv_det = det.inverse();
        Vec<2> glo = {(lo[0] + t[0]) - hi[0], (lo[1] + t[1]) - hi[1]};
        Vec<2> ghi = {(hi[0] + t[0]) - lo[0], (hi[1] + t[1]) - lo[1]};
        // map the 4 gamma-box corners through basis^{-1} and take int bounds
        FieldElem imin, imax, jmin, jmax;
        bool first = true;
        for (int cx = 0; cx < 2; ++cx)
            for (int cy = 0; cy < 2; ++cy) {
                Vec<2> g = {cx ? ghi[0] : glo[0], cy ? ghi[1] : glo[1]};
                FieldElem ci = inv_det * (b2[1] * g[0] - b2[0] * g[1]);
                FieldElem cj = inv_det * (b1[0] * g[1] - b1[1] * g[0]);
                if (first || ci < imin) imin = ci;
                if (first || imax < ci) imax = ci;
                if (first || cj < jmin) jmin = cj;
                if (first || jmax < cj) jmax = cj;
                first = false;
            }
        auto [ilo, ihi] = detail::integer_range(imin, imax);
        auto [jlo, jhi] = detail::integer_range(jmin, jmax);
        for (long i = ilo; i <= ihi; ++i)
            for (long j = jlo; j <= jhi; ++j) candidates.push_back({i, j});
    }

    std::vector<std::pair<ConvexPolytope<D>, Vec<D>>> pieces;
    for (const auto& coeffs : candidates) {
        Vec<D> gamma{};
        for (int k = 0; k < D; ++k)
            gamma = gamma + FieldElem(coeffs[k]) * lattice.basis[k];
        Vec<D> shift = t - gamma;
        ConvexPolytope<D> piece = dom.translate(shift).intersect(dom);
        if (!piece.empty()) pieces.emplace_back(piece.translate(-shift), shift);
    }

    std::sort(pieces.begin(), pieces.end(), [](const auto& x, const auto& y) {
        return lex_less(y.second, x.second);  // descending
    });

    FieldElem total(0);
    for (const auto& [cell, shift] : pieces) total += cell.volume();
    if (total != dom.volume())
        throw GeometryError("toral_translation: pieces do not tile the fundamental domain");

    std::vector<LabeledAtom<D>> atoms;
    std::map<int, Vec<D>> trans;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        atoms.push_back({static_cast<int>(i), pieces[i].first});
        trans[static_cast<int>(i)] = pieces[i].second;
    }
    return Pet<D>(LabeledPartition<D>(dom, std::move(atoms)), std::move(trans));
}

// Config window: labels of P at T1^{n1} T2^{n2} (x) for n1 in [lo1, hi1],
// n2 in [lo2, hi2]; grid[i][j] corresponds to (lo1 + i, lo2 + j).
inline std::vector<std::vector<int>> code_config(const Pet<2>& t1, const Pet<2>& t2,
                                                 const LabeledPartition<2>& p, const Vec<2>& x,
                                                 long lo1, long hi1, long lo2, long hi2) {
    std::vector<std::vector<int>> grid;
    for (long n1 = lo1; n1 <= hi1; ++n1) {
        Vec<2> base = t1.apply_power(x, n1);
        std::vector<int> column;
        Vec<2> y = t2.apply_power(base, lo2);
        for (long n2 = lo2; n2 <= hi2; ++n2) {
            column.push_back(p.label_of(y));
            if (n2 < hi2) y = t2.apply(y);
        }
        grid.push_back(std::move(column));
    }
    return grid;
}

}  // namespace petinduce

#endif  // PETINDUCE_PET_HPP
