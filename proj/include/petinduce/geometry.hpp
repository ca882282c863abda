#ifndef PETINDUCE_GEOMETRY_HPP
#define PETINDUCE_GEOMETRY_HPP

// Exact convex polytopes in dimension 1 (intervals) and 2 (convex polygons),
// stored by their closures in canonical form; "empty" means the point set is
// not full-dimensional.  All predicates are exact.

#include <algorithm>
#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace petinduce {

template <int D>
using Vec = std::array<FieldElem, D>;

// The vector operators deduce the std::array size parameter, which is
// std::size_t, so they cannot share the int dimension parameter used by the
// class templates below.
template <std::size_t N>
inline std::array<FieldElem, N> operator+(const std::array<FieldElem, N>& x,
                                          const std::array<FieldElem, N>& y) {
    std::array<FieldElem, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = x[i] + y[i];
    return r;
}

template <std::size_t N>
inline std::array<FieldElem, N> operator-(const std::array<FieldElem, N>& x,
                                          const std::array<FieldElem, N>& y) {
    std::array<FieldElem, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = x[i] - y[i];
    return r;
}

template <std::size_t N>
inline std::array<FieldElem, N> operator-(const std::array<FieldElem, N>& x) {
    std::array<FieldElem, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = -x[i];
    return r;
}

template <std::size_t N>
inline std::array<FieldElem, N> operator*(const FieldElem& c, const std::array<FieldElem, N>& x) {
    std::array<FieldElem, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = c * x[i];
    return r;
}

template <std::size_t N>
inline bool lex_less(const std::array<FieldElem, N>& x, const std::array<FieldElem, N>& y) {
    for (std::size_t i = 0; i < N; ++i) {
        if (x[i] < y[i]) return true;
        if (y[i] < x[i]) return false;
    }
    return false;
}

// { x : v0 + v1 x1 + ... + vD xD >= 0 }
template <int D>
struct HalfSpace {
    std::array<FieldElem, D + 1> v;

    FieldElem eval(const Vec<D>& p) const {
        FieldElem s = v[0];
        for (int i = 0; i < D; ++i) s += v[i + 1] * p[i];
        return s;
    }

    HalfSpace complement() const {
        HalfSpace h;
        for (int i = 0; i <= D; ++i) h.v[i] = -v[i];
        return h;
    }
};

inline FieldElem cross(const Vec<2>& o, const Vec<2>& a, const Vec<2>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

template <int D>
class ConvexPolytope {
public:
    ConvexPolytope() = default;  // empty

    // Canonicalize an arbitrary vertex list; not-full-dimensional input
    // yields the empty polytope.
    static ConvexPolytope from_vertices(std::vector<Vec<D>> vs) {
        ConvexPolytope p;
        p.verts_ = canonicalize(std::move(vs));
        return p;
    }

    static ConvexPolytope interval(FieldElem lo, FieldElem hi)
        requires(D == 1)
    {
        return from_vertices({Vec<1>{std::move(lo)}, Vec<1>{std::move(hi)}});
    }

    static ConvexPolytope box(const FieldElem& x0, const FieldElem& x1, const FieldElem& y0,
                              const FieldElem& y1)
        requires(D == 2)
    {
        return from_vertices({Vec<2>{x0, y0}, Vec<2>{x1, y0}, Vec<2>{x1, y1}, Vec<2>{x0, y1}});
    }

    bool empty() const { return verts_.empty(); }
    const std::vector<Vec<D>>& vertices() const { return verts_; }

    bool operator==(const ConvexPolytope& o) const { return verts_ == o.verts_; }
    bool operator!=(const ConvexPolytope& o) const { return !(*this == o); }
    bool operator<(const ConvexPolytope& o) const {
        std::size_t n = std::min(verts_.size(), o.verts_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (lex_less(verts_[i], o.verts_[i])) return true;
            if (lex_less(o.verts_[i], verts_[i])) return false;
        }
        return verts_.size() < o.verts_.size();
    }

    // Exact length (d=1) / area (d=2); zero for empty.
    FieldElem volume() const {
        if (empty()) return FieldElem(0);
        if constexpr (D == 1) {
            return verts_[1][0] - verts_[0][0];
        } else {
            FieldElem s(0);
            std::size_t n = verts_.size();
            for (std::size_t i = 0; i < n; ++i) {
                const Vec<2>&p = verts_[i], &q = verts_[(i + 1) % n];
                s += p[0] * q[1] - q[0] * p[1];
            }
            return s / FieldElem(2);
        }
    }

    // Closure of interior(P) cut by H: empty when not full-dimensional.
    ConvexPolytope clip(const HalfSpace<D>& h) const {
        if (empty()) return {};
        if constexpr (D == 1) {
            FieldElem lo = verts_[0][0], hi = verts_[1][0];
            int s1 = h.v[1].sign();
            if (s1 == 0) return h.v[0].sign() >= 0 ? *this : ConvexPolytope{};
            FieldElem cut = -h.v[0] / h.v[1];
            if (s1 > 0) {  // x >= cut
                if (cut > lo) lo = cut;
            } else {  // x <= cut
                if (cut < hi) hi = cut;
            }
            if (!(lo < hi)) return {};  // disjoint; interval() would reorder
            return interval(lo, hi);
        } else {
            std::vector<Vec<2>> out;
            std::size_t n = verts_.size();
            for (std::size_t i = 0; i < n; ++i) {
                const Vec<2>&cur = verts_[i], &nxt = verts_[(i + 1) % n];
                FieldElem fc = h.eval(cur), fn = h.eval(nxt);
                int sc = fc.sign(), sn = fn.sign();
                if (sc >= 0) out.push_back(cur);
                if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
                    FieldElem t = fc / (fc - fn);
                    out.push_back({cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
                }
            }
            ConvexPolytope p;
            p.verts_ = canonicalize(std::move(out));
            return p;
        }
    }

    // Full-dimensional intersection, by clipping against each facet of q.
    ConvexPolytope intersect(const ConvexPolytope& q) const {
        if (empty() || q.empty()) return {};
        if constexpr (D == 1) {
            FieldElem lo = verts_[0][0] > q.verts_[0][0] ? verts_[0][0] : q.verts_[0][0];
            FieldElem hi = verts_[1][0] < q.verts_[1][0] ? verts_[1][0] : q.verts_[1][0];
            if (!(lo < hi)) return {};  // disjoint; interval() would reorder
            return interval(lo, hi);
        } else {
            ConvexPolytope r = *this;
            std::size_t n = q.verts_.size();
            for (std::size_t i = 0; i < n && !r.empty(); ++i) {
                const Vec<2>&a = q.verts_[i], &b = q.verts_[(i + 1) % n];
                // interior side = left of the CCW edge a -> b
                HalfSpace<2> h{{a[0] * b[1] - a[1] * b[0], a[1] - b[1], b[0] - a[0]}};
                r = r.clip(h);
            }
            return r;
        }
    }

    ConvexPolytope translate(const Vec<D>& t) const {
        ConvexPolytope p;
        p.verts_ = verts_;
        for (auto& v : p.verts_) v = v + t;
        if constexpr (D == 2) p.rotate_to_lex_min();
        return p;
    }

    ConvexPolytope scale(const FieldElem& c) const {
        if (c.sign() == 0) throw ZeroScale("scale: zero factor");
        std::vector<Vec<D>> vs = verts_;
        for (auto& v : vs) v = c * v;
        return from_vertices(std::move(vs));
    }

    // Image under x -> c x + u.
    ConvexPolytope affine(const FieldElem& c, const Vec<D>& u) const {
        if (c.sign() == 0) throw ZeroScale("affine: zero factor");
        std::vector<Vec<D>> vs = verts_;
        for (auto& v : vs) v = c * v + u;
        return from_vertices(std::move(vs));
    }

    // Strict interior membership.
    bool contains_interior(const Vec<D>& p) const {
        if (empty()) return false;
        if constexpr (D == 1) {
            return verts_[0][0] < p[0] && p[0] < verts_[1][0];
        } else {
            std::size_t n = verts_.size();
            for (std::size_t i = 0; i < n; ++i)
                if (cross(verts_[i], verts_[(i + 1) % n], p).sign() <= 0) return false;
            return true;
        }
    }

    bool contains_closed(const Vec<D>& p) const {
        if (empty()) return false;
        if constexpr (D == 1) {
            return verts_[0][0] <= p[0] && p[0] <= verts_[1][0];
        } else {
            std::size_t n = verts_.size();
            for (std::size_t i = 0; i < n; ++i)
                if (cross(verts_[i], verts_[(i + 1) % n], p).sign() < 0) return false;
            return true;
        }
    }

    // Componentwise bounding interval [lo, hi] of the vertices.
    std::pair<Vec<D>, Vec<D>> bounding_box() const {
        Vec<D> lo = verts_.at(0), hi = verts_.at(0);
        for (const auto& v : verts_)
            for (int i = 0; i < D; ++i) {
                if (v[i] < lo[i]) lo[i] = v[i];
                if (hi[i] < v[i]) hi[i] = v[i];
            }
        return {lo, hi};
    }

    Vec<D> centroid() const {
        Vec<D> c{};
        for (const auto& v : verts_) c = c + v;
        FieldElem inv = FieldElem(static_cast<long>(verts_.size())).inverse();
        return inv * c;
    }

private:
    static std::vector<Vec<D>> canonicalize(std::vector<Vec<D>> vs) {
        if constexpr (D == 1) {
            if (vs.size() != 2) {
                if (vs.empty()) return {};
                throw GeometryError("interval needs two endpoints");
            }
            if (vs[1][0] < vs[0][0]) std::swap(vs[0], vs[1]);
            if ((vs[1][0] - vs[0][0]).sign() <= 0) return {};
            return vs;
        } else {
            if (vs.size() < 3) return {};
            FieldElem twice_area(0);
            std::size_t n = vs.size();
            for (std::size_t i = 0; i < n; ++i)
                twice_area += vs[i][0] * vs[(i + 1) % n][1] - vs[(i + 1) % n][0] * vs[i][1];
            int s = twice_area.sign();
            if (s == 0) return {};
            if (s < 0) std::reverse(vs.begin(), vs.end());
            // drop consecutive duplicates, then collinear vertices (to a fixed point)
            std::vector<Vec<2>> out;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (out.empty() || vs[i] != out.back()) out.push_back(vs[i]);
            while (out.size() > 1 && out.front() == out.back()) out.pop_back();
            bool removed = true;
            while (removed && out.size() >= 3) {
                removed = false;
                for (std::size_t i = 0; i < out.size(); ++i) {
                    std::size_t m = out.size();
                    const Vec<2>&p = out[(i + m - 1) % m], &q = out[i], &r = out[(i + 1) % m];
                    if (cross(p, q, r).sign() == 0) {
                        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                        removed = true;
                        break;
                    }
                }
            }
            if (out.size() < 3) return {};
            std::size_t k = 0;
            for (std::size_t i = 1; i < out.size(); ++i)
                if (lex_less(out[i], out[k])) k = i;
            std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k), out.end());
            return out;
        }
    }

    void rotate_to_lex_min()
        requires(D == 2)
    {
        if (verts_.empty()) return;
        std::size_t k = 0;
        for (std::size_t i = 1; i < verts_.size(); ++i)
            if (lex_less(verts_[i], verts_[k])) k = i;
        std::rotate(verts_.begin(), verts_.begin() + static_cast<std::ptrdiff_t>(k), verts_.end());
    }

    std::vector<Vec<D>> verts_;
};

using Interval = ConvexPolytope<1>;
using Polygon = ConvexPolytope<2>;

}  // namespace petinduce

#endif  // PETINDUCE_GEOMETRY_HPP
