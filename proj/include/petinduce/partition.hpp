#ifndef PETINDUCE_PARTITION_HPP
#define PETINDUCE_PARTITION_HPP

// Labeled topological partitions of a convex domain.  The same label may
// appear on several cells; cells have pairwise empty (not full-dimensional)
// intersections and their volumes sum to the domain volume.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace petinduce {

template <int D>
struct LabeledAtom {
    int label = 0;
    ConvexPolytope<D> cell;
};

template <int D>
class LabeledPartition {
public:
    LabeledPartition() = default;
    LabeledPartition(ConvexPolytope<D> domain, std::vector<LabeledAtom<D>> atoms)
        : domain_(std::move(domain)), atoms_(std::move(atoms)) {}

    const ConvexPolytope<D>& domain() const { return domain_; }
    const std::vector<LabeledAtom<D>>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }

    std::set<int> alphabet() const {
        std::set<int> a;
        for (const auto& atom : atoms_) a.insert(atom.label);
        return a;
    }

    // Throws GeometryError when the atoms do not form a partition of domain.
    void validate() const {
        FieldElem total(0);
        for (const auto& atom : atoms_) {
            if (atom.cell.empty()) throw GeometryError("partition: empty cell");
            if (atom.cell.intersect(domain_) != atom.cell)
                throw GeometryError("partition: cell not contained in domain");
            total += atom.cell.volume();
        }
        if (total != domain_.volume()) throw GeometryError("partition: volumes do not cover domain");
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            for (std::size_t j = i + 1; j < atoms_.size(); ++j)
                if (!atoms_[i].cell.intersect(atoms_[j].cell).empty())
                    throw GeometryError("partition: overlapping cells");
    }

    // Label of the atom whose interior contains x.
    int label_of(const Vec<D>& x) const {
        for (const auto& atom : atoms_)
            if (atom.cell.contains_interior(x)) return atom.label;
        throw OnBoundary("label_of: point on an atom boundary or outside the domain");
    }

    bool contains_interior_point(const Vec<D>& x) const {
        for (const auto& atom : atoms_)
            if (atom.cell.contains_interior(x)) return true;
        return false;
    }

    // All full-dimensional pairwise intersections, labeled by combine.
    LabeledPartition refine(const LabeledPartition& other,
                            const std::function<int(int, int)>& combine) const {
        if (domain_ != other.domain_) throw DomainMismatch("refine: domains differ");
        std::vector<LabeledAtom<D>> out;
        for (const auto& a : atoms_)
            for (const auto& b : other.atoms_) {
                ConvexPolytope<D> c = a.cell.intersect(b.cell);
                if (!c.empty()) out.push_back({combine(a.label, b.label), std::move(c)});
            }
        return {domain_, std::move(out)};
    }

    LabeledPartition translate(const Vec<D>& t) const {
        std::vector<LabeledAtom<D>> out;
        out.reserve(atoms_.size());
        for (const auto& a : atoms_) out.push_back({a.label, a.cell.translate(t)});
        return {domain_.translate(t), std::move(out)};
    }

    // Image under x -> c x + u.
    LabeledPartition affine(const FieldElem& c, const Vec<D>& u) const {
        std::vector<LabeledAtom<D>> out;
        out.reserve(atoms_.size());
        for (const auto& a : atoms_) out.push_back({a.label, a.cell.affine(c, u)});
        return {domain_.affine(c, u), std::move(out)};
    }

    LabeledPartition relabel(const std::map<int, int>& perm) const {
        std::vector<LabeledAtom<D>> out;
        out.reserve(atoms_.size());
        for (const auto& a : atoms_) out.push_back({perm.at(a.label), a.cell});
        return {domain_, std::move(out)};
    }

    std::map<int, std::set<ConvexPolytope<D>>> cells_by_label() const {
        std::map<int, std::set<ConvexPolytope<D>>> g;
        for (const auto& a : atoms_) g[a.label].insert(a.cell);
        return g;
    }

    bool same_cells(const LabeledPartition& other) const {
        std::set<ConvexPolytope<D>> mine, theirs;
        for (const auto& a : atoms_) mine.insert(a.cell);
        for (const auto& a : other.atoms_) theirs.insert(a.cell);
        return mine == theirs;
    }

    // Bijection pi on labels with union-of-cells(a) == union-of-cells(pi(a)),
    // compared as sets of canonical polytopes; nullopt when none exists.
    std::optional<std::map<int, int>> keys_permutation(const LabeledPartition& other) const {
        auto mine = cells_by_label();
        auto theirs = cells_by_label_of(other);
        if (mine.size() != theirs.size()) return std::nullopt;
        std::map<int, int> perm;
        std::set<int> used;
        for (const auto& [a, cells] : mine) {
            bool found = false;
            for (const auto& [b, cells2] : theirs) {
                if (used.count(b)) continue;
                if (cells == cells2) {
                    perm[a] = b;
                    used.insert(b);
                    found = true;
                    break;
                }
            }
            if (!found) return std::nullopt;
        }
        return perm;
    }

    FieldElem total_volume() const {
        FieldElem s(0);
        for (const auto& a : atoms_) s += a.cell.volume();
        return s;
    }

private:
    static std::map<int, std::set<ConvexPolytope<D>>> cells_by_label_of(
        const LabeledPartition& p) {
        return p.cells_by_label();
    }

    ConvexPolytope<D> domain_;
    std::vector<LabeledAtom<D>> atoms_;
};

}  // namespace petinduce

#endif  // PETINDUCE_PARTITION_HPP
