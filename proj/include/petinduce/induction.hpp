#ifndef PETINDUCE_INDUCTION_HPP
#define PETINDUCE_INDUCTION_HPP

// Rauzy induction of a PET on a half-space window: the induced partition
// with its natural substitution, and the induced transformation.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "partition.hpp"
#include "pet.hpp"
#include "words.hpp"

namespace petinduce {

enum class Direction { row, column };

template <int D>
struct InductionResult {
    LabeledPartition<D> induced_partition;            // partition of W
    std::map<int, std::vector<int>> substitution;     // letter -> return word
    Direction direction = Direction::row;             // how 1D images embed in 2D
    std::vector<std::vector<int>> return_words;       // the ordered language L

    // The substitution as a 2-dimensional morphism (row or column images).
    Morphism2D substitution_morphism() const {
        std::map<int, Word2D> images;
        for (const auto& [b, w] : substitution)
            images.emplace(b, direction == Direction::row ? Word2D::row(w) : Word2D::column(w));
        return Morphism2D(std::move(images));
    }
};

// Return-word order: shorter words first, ties broken lexicographically
// reading position 0 first.
inline bool word_less(const std::vector<int>& u, const std::vector<int>& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
}

// Algorithm 1.  T: the transformation; G: a partition on whose atoms T is
// continuous; v: the half-space defining the window W = T.domain clipped by
// v; P: the partition being induced.  Word position k holds the P-label of
// T^k(x) for k = 0 .. r-1 where r is the return time.
template <int D>
InductionResult<D> induced_partition(const Pet<D>& t, const LabeledPartition<D>& g,
                                     const HalfSpace<D>& v, const LabeledPartition<D>& p,
                                     Direction direction, long max_iter = 10000) {
    if (p.domain() != t.domain()) throw DomainMismatch("induced_partition: domains differ");
    ConvexPolytope<D> w = t.domain().clip(v);
    if (w.empty()) throw EmptyWindow("induced_partition: window is not full-dimensional");
    HalfSpace<D> not_v = v.complement();

    // K = T(P wedge G), remembering each piece's translation for pull-back.
    struct KEntry {
        int label;
        ConvexPolytope<D> image;
        Vec<D> shift;
    };
    std::vector<KEntry> k_entries;
    for (const auto& pa : p.atoms())
        for (const auto& ga : g.atoms()) {
            ConvexPolytope<D> c = pa.cell.intersect(ga.cell);
            if (!c.empty()) {
                Vec<D> shift = t.translation(ga.label);
                k_entries.push_back({pa.label, c.translate(shift), shift});
            }
        }

    using Tagged = std::pair<std::vector<int>, ConvexPolytope<D>>;
    std::vector<Tagged> queue{{{}, w}};
    std::vector<Tagged> collected;
    long iter = 0;
    while (!queue.empty()) {
        if (++iter > max_iter)
            throw NonTerminating("induced_partition: iteration cap (" + std::to_string(max_iter) +
                                 ") reached");
        // Q <- T^{-1}(Q wedge K), prepending the new letter
        std::vector<Tagged> next;
        for (const auto& [word, q] : queue)
            for (const auto& ke : k_entries) {
                ConvexPolytope<D> c = q.intersect(ke.image);
                if (c.empty()) continue;
                std::vector<int> extended;
                extended.reserve(word.size() + 1);
                extended.push_back(ke.label);
                extended.insert(extended.end(), word.begin(), word.end());
                next.emplace_back(std::move(extended), c.translate(-ke.shift));
            }
        queue.clear();
        // S <- S + (Q wedge H_v);  Q <- Q wedge complement(H_v)
        for (auto& [word, q] : next) {
            ConvexPolytope<D> inside = q.clip(v);
            if (!inside.empty()) collected.emplace_back(word, std::move(inside));
            ConvexPolytope<D> outside = q.clip(not_v);
            if (!outside.empty()) queue.emplace_back(std::move(word), std::move(outside));
        }
    }

    std::vector<std::vector<int>> language;
    for (const auto& [word, cell] : collected) language.push_back(word);
    std::sort(language.begin(), language.end(), word_less);
    language.erase(std::unique(language.begin(), language.end()), language.end());

    std::map<std::vector<int>, int> letter_of;
    std::map<int, std::vector<int>> substitution;
    for (std::size_t i = 0; i < language.size(); ++i) {
        letter_of[language[i]] = static_cast<int>(i);
        substitution[static_cast<int>(i)] = language[i];
    }

    std::vector<LabeledAtom<D>> atoms;
    for (auto& [word, cell] : collected)
        atoms.push_back({letter_of.at(word), std::move(cell)});

    return {LabeledPartition<D>(w, std::move(atoms)), std::move(substitution), direction,
            std::move(language)};
}

// Convenience overload with G = T's own atom partition.
template <int D>
InductionResult<D> induced_partition(const Pet<D>& t, const HalfSpace<D>& v,
                                     const LabeledPartition<D>& p, Direction direction,
                                     long max_iter = 10000) {
    return induced_partition(t, t.atoms(), v, p, direction, max_iter);
}

// Algorithm 2: induced transformation of T on the window cut out by v.  The
// induced PET translates each new atom b by the sum of the original
// translations along its return word.
template <int D>
std::pair<Pet<D>, InductionResult<D>> induced_transformation(const Pet<D>& t,
                                                             const HalfSpace<D>& v,
                                                             Direction direction = Direction::row,
                                                             long max_iter = 10000) {
    InductionResult<D> result = induced_partition(t, v, t.atoms(), direction, max_iter);
    std::map<int, Vec<D>> translations;
    for (const auto& [b, word] : result.substitution) {
        Vec<D> sum{};
        for (int a : word) sum = sum + t.translation(a);
        translations[b] = sum;
    }
    Pet<D> induced(result.induced_partition, std::move(translations));
    return {std::move(induced), std::move(result)};
}

}  // namespace petinduce

#endif  // PETINDUCE_INDUCTION_HPP
