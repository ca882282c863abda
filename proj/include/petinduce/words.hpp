#ifndef PETINDUCE_WORDS_HPP
#define PETINDUCE_WORDS_HPP

// Two-dimensional words (shaped arrays of letters, Cartesian convention:
// j grows upward) and 2-dimensional morphisms with directional concatenation,
// application, composition, incidence matrices, primitivity and expansivity.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace petinduce {

class Word2D {
public:
    Word2D() = default;
    // entries in column-major order, j ascending: entries[i * n2 + j] = w(i, j).
    Word2D(int n1, int n2, std::vector<int> entries)
        : n1_(n1), n2_(n2), entries_(std::move(entries)) {
        if (static_cast<int>(entries_.size()) != n1_ * n2_)
            throw ShapeMismatch("Word2D: entry count does not match shape");
    }

    static Word2D letter(int a) { return {1, 1, {a}}; }

    // Row word: position 0 leftmost.
    static Word2D row(const std::vector<int>& w) {
        return {static_cast<int>(w.size()), 1, w};
    }

    // Column word: position 0 at the bottom (j = 0).
    static Word2D column(const std::vector<int>& w) {
        return {1, static_cast<int>(w.size()), w};
    }

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    const std::vector<int>& entries() const { return entries_; }

    int at(int i, int j) const { return entries_.at(static_cast<std::size_t>(i) * n2_ + j); }

    bool operator==(const Word2D& o) const {
        return n1_ == o.n1_ && n2_ == o.n2_ && entries_ == o.entries_;
    }
    bool operator!=(const Word2D& o) const { return !(*this == o); }

    // u (*this) then v along direction dir (v to the right for dir=1,
    // v above for dir=2); the other shape component must agree.
    Word2D concat(const Word2D& v, int dir) const {
        if (dir == 1) {
            if (n2_ != v.n2_) throw ShapeMismatch("concat in direction 1: heights differ");
            std::vector<int> e = entries_;
            e.insert(e.end(), v.entries_.begin(), v.entries_.end());
            return {n1_ + v.n1_, n2_, std::move(e)};
        }
        if (dir == 2) {
            if (n1_ != v.n1_) throw ShapeMismatch("concat in direction 2: widths differ");
            std::vector<int> e;
            e.reserve(entries_.size() + v.entries_.size());
            for (int i = 0; i < n1_; ++i) {
                e.insert(e.end(), entries_.begin() + static_cast<std::ptrdiff_t>(i) * n2_,
                         entries_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n2_);
                e.insert(e.end(), v.entries_.begin() + static_cast<std::ptrdiff_t>(i) * v.n2_,
                         v.entries_.begin() + static_cast<std::ptrdiff_t>(i + 1) * v.n2_);
            }
            return {n1_, n2_ + v.n2_, std::move(e)};
        }
        throw ShapeMismatch("concat: direction must be 1 or 2");
    }

private:
    int n1_ = 0;
    int n2_ = 0;
    std::vector<int> entries_;
};

class Morphism2D {
public:
    Morphism2D() = default;
    explicit Morphism2D(std::map<int, Word2D> images) : images_(std::move(images)) {}

    static Morphism2D from_permutation(const std::map<int, int>& p) {
        std::set<int> targets;
        for (const auto& [a, b] : p) targets.insert(b);
        if (targets.size() != p.size())
            throw NotAPermutation("from_permutation: map is not injective");
        std::map<int, Word2D> images;
        for (const auto& [a, b] : p) images.emplace(a, Word2D::letter(b));
        return Morphism2D(std::move(images));
    }

    // Inverse of a letter-to-letter bijective morphism.
    Morphism2D inverse_permutation() const {
        std::map<int, Word2D> images;
        for (const auto& [a, w] : images_) {
            if (w.n1() != 1 || w.n2() != 1)
                throw NotAPermutation("inverse_permutation: image is not a single letter");
            if (!images.emplace(w.at(0, 0), Word2D::letter(a)).second)
                throw NotAPermutation("inverse_permutation: map is not injective");
        }
        return Morphism2D(std::move(images));
    }

    const std::map<int, Word2D>& images() const { return images_; }

    const Word2D& image(int a) const {
        auto it = images_.find(a);
        if (it == images_.end())
            throw UnknownLetter("morphism: no image for letter " + std::to_string(a));
        return it->second;
    }

    bool operator==(const Morphism2D& o) const { return images_ == o.images_; }
    bool operator!=(const Morphism2D& o) const { return !(*this == o); }

    // Block substitution: image columns are stacked with concat(.., 2),
    // then columns are joined left-to-right with concat(.., 1).
    Word2D apply(const Word2D& u) const {
        if (u.n1() == 0 || u.n2() == 0) throw ShapeMismatch("apply: empty word");
        Word2D result;
        for (int i = 0; i < u.n1(); ++i) {
            Word2D col = image(u.at(i, 0));
            for (int j = 1; j < u.n2(); ++j) col = col.concat(image(u.at(i, j)), 2);
            result = i == 0 ? col : result.concat(col, 1);
        }
        return result;
    }

    // this o other.
    Morphism2D compose_after(const Morphism2D& other) const {
        std::map<int, Word2D> images;
        for (const auto& [a, w] : other.images_) images.emplace(a, apply(w));
        return Morphism2D(std::move(images));
    }

    std::set<int> domain_alphabet() const {
        std::set<int> a;
        for (const auto& [k, w] : images_) a.insert(k);
        return a;
    }

    std::set<int> image_alphabet() const {
        std::set<int> a;
        for (const auto& [k, w] : images_) a.insert(w.entries().begin(), w.entries().end());
        return a;
    }

    // Count of letter b in the image of a, as matrix[index(b)][index(a)] over
    // the sorted union alphabet.
    std::vector<std::vector<long long>> incidence_matrix(std::vector<int>* alphabet_out) const {
        std::set<int> alpha = domain_alphabet();
        std::set<int> img = image_alphabet();
        alpha.insert(img.begin(), img.end());
        std::vector<int> alphabet(alpha.begin(), alpha.end());
        std::map<int, int> index;
        for (std::size_t i = 0; i < alphabet.size(); ++i) index[alphabet[i]] = static_cast<int>(i);
        std::vector<std::vector<long long>> m(alphabet.size(),
                                              std::vector<long long>(alphabet.size(), 0));
        for (const auto& [a, w] : images_)
            for (int b : w.entries()) m[index.at(b)][index.at(a)] += 1;
        if (alphabet_out) *alphabet_out = alphabet;
        return m;
    }

    // Primitive when some power m <= m_max of the incidence matrix is
    // positive.  Default m_max is 2 |A|^2.
    bool is_primitive(int m_max = 0, int* witness = nullptr) const {
        require_endomorphism("is_primitive");
        std::vector<int> alphabet;
        auto inc = incidence_matrix(&alphabet);
        std::size_t n = alphabet.size();
        if (m_max <= 0) m_max = static_cast<int>(2 * n * n);
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) adj[i][j] = inc[i][j] > 0;
        std::vector<std::vector<bool>> power = adj;
        for (int m = 1; m <= m_max; ++m) {
            bool all = true;
            for (std::size_t i = 0; i < n && all; ++i)
                for (std::size_t j = 0; j < n && all; ++j)
                    if (!power[i][j]) all = false;
            if (all) {
                if (witness) *witness = m;
                return true;
            }
            std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    if (power[i][k])
                        for (std::size_t j = 0; j < n; ++j)
                            if (adj[k][j]) next[i][j] = true;
            power = std::move(next);
        }
        return false;
    }

    // Expansive when for some m <= m_max, min(shape(omega^m(a))) > K for
    // every letter a.  Shapes are computed by recursion, without
    // materializing the iterated images.
    bool is_expansive(int m_max = 20, long long threshold = 10, int* witness = nullptr) const {
        require_endomorphism("is_expansive");
        // shape[a] holds the shape of omega^m(a) for the current m
        std::map<int, std::pair<long long, long long>> shape;
        for (const auto& [a, w] : images_) shape[a] = {w.n1(), w.n2()};
        for (int m = 1; m <= m_max; ++m) {
            bool all = true;
            for (const auto& [a, s] : shape)
                if (s.first <= threshold || s.second <= threshold) { all = false; break; }
            if (all) {
                if (witness) *witness = m;
                return true;
            }
            // shape of omega^{m+1}(a): widths add along the bottom row of the
            // image block, heights along its left column
            std::map<int, std::pair<long long, long long>> next;
            for (const auto& [a, w] : images_) {
                long long width = 0, height = 0;
                for (int i = 0; i < w.n1(); ++i) width += shape.at(w.at(i, 0)).first;
                for (int j = 0; j < w.n2(); ++j) height += shape.at(w.at(0, j)).second;
                next[a] = {width, height};
            }
            shape = std::move(next);
        }
        return false;
    }

private:
    void require_endomorphism(const char* who) const {
        std::set<int> dom = domain_alphabet();
        for (int b : image_alphabet())
            if (!dom.count(b))
                throw NotEndomorphism(std::string(who) + ": image letter outside the domain");
    }

    std::map<int, Word2D> images_;
};

}  // namespace petinduce

#endif  // PETINDUCE_WORDS_HPP
