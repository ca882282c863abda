#ifndef PETINDUCE_PIPELINE_HPP
#define PETINDUCE_PIPELINE_HPP

// The full renormalization chain over the golden-ratio torus: ten induction
// steps, base change, rescalings, permutation detection, verification against
// golden substitution tables, pointwise shear/desubstitution checks, and the
// 1-dimensional continued-fraction driver.

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "geometry.hpp"
#include "induction.hpp"
#include "partition.hpp"
#include "pet.hpp"
#include "words.hpp"

namespace petinduce {

// One induction step: the system it started from, the induced system, and
// the natural substitution connecting their codings.
struct ChainStep {
    std::string name;
    LabeledPartition<2> original_partition;
    Pet<2> orig_e1, orig_e2;
    LabeledPartition<2> induced;
    Pet<2> ind_e1, ind_e2;
    Morphism2D beta;
    Direction direction = Direction::row;
};

struct ChainRecord {
    std::vector<ChainStep> steps;  // beta0, beta2, ..., beta9
    LabeledPartition<2> p0, p1, p8, p10;
    Pet<2> r0e1, r0e2, r1e1, r1e2, r2e1, r2e2;
    std::map<int, int> tau;

    const ChainStep& step(const std::string& name) const {
        for (const auto& s : steps)
            if (s.name == name) return s;
        throw std::out_of_range("no chain step named " + name);
    }
};

struct ExpectedTables {
    std::map<std::string, Morphism2D> betas;  // "beta0", "beta2", ..., "beta9"
    std::map<int, int> tau;
    std::map<int, int> zeta;
    Morphism2D self_similarity;  // beta8 beta9 tau
    Morphism2D omega_u;          // zeta^{-1} beta8 beta9 tau zeta
};

inline FieldElem phi() { return FieldElem::phi(); }

// Half-spaces used along the chain.
inline HalfSpace<2> hs_y_le_1() { return {{FieldElem(1), FieldElem(0), FieldElem(-1)}}; }
inline HalfSpace<2> hs_x_le_1() { return {{FieldElem(1), FieldElem(-1), FieldElem(0)}}; }
inline HalfSpace<2> hs_x_le_inv_phi() {
    return {{phi() - 1, FieldElem(-1), FieldElem(0)}};
}
inline HalfSpace<2> hs_y_le_inv_phi() {
    return {{phi() - 1, FieldElem(0), FieldElem(-1)}};
}

inline LatticeSpec<2> golden_lattice() {
    FieldElem p = phi();
    return {{Vec<2>{p, FieldElem(0)}, Vec<2>{FieldElem(1), FieldElem(3) + p}},
            ConvexPolytope<2>::box(FieldElem(0), p, FieldElem(0), FieldElem(3) + p)};
}

// Executes the fourteen chain operations in order, validating every
// intermediate partition.
inline ChainRecord run_chain(const LabeledPartition<2>& p0, long max_iter = 10000) {
    ChainRecord rec;
    rec.steps.reserve(16);  // keep references returned by push_step stable
    rec.p0 = p0;
    rec.p0.validate();

    LatticeSpec<2> lattice = golden_lattice();
    rec.r0e1 = toral_translation(lattice, {FieldElem(1), FieldElem(0)});
    rec.r0e2 = toral_translation(lattice, {FieldElem(0), FieldElem(1)});

    auto push_step = [&rec](std::string name, const LabeledPartition<2>& orig_p,
                            const Pet<2>& oe1, const Pet<2>& oe2, InductionResult<2> result,
                            const Pet<2>& ie1, const Pet<2>& ie2) -> const ChainStep& {
        result.induced_partition.validate();
        rec.steps.push_back({std::move(name), orig_p, oe1, oe2, result.induced_partition, ie1,
                             ie2, result.substitution_morphism(), result.direction});
        return rec.steps.back();
    };

    // (1) induce R0 on y <= 1 -> P1, beta0, R1
    auto b0 = induced_partition(rec.r0e2, hs_y_le_1(), p0, Direction::column, max_iter);
    rec.r1e1 = induced_transformation(rec.r0e1, hs_y_le_1(), Direction::row, max_iter).first;
    rec.r1e2 = induced_transformation(rec.r0e2, hs_y_le_1(), Direction::column, max_iter).first;
    rec.p1 = b0.induced_partition;
    push_step("beta0", p0, rec.r0e1, rec.r0e2, std::move(b0), rec.r1e1, rec.r1e2);

    // (2) base change R2^{e2} = merge(R1^{e1} o R1^{e2}), P2 = P1
    rec.r2e1 = rec.r1e1;
    rec.r2e2 = rec.r1e1.compose_after(rec.r1e2).merge_atoms_with_same_translation();

    // (3) induce on x <= 1 (row) -> P3, beta2, R3
    auto b2 = induced_partition(rec.r2e1, hs_x_le_1(), rec.p1, Direction::row, max_iter);
    Pet<2> r3e1 = induced_transformation(rec.r2e1, hs_x_le_1(), Direction::row, max_iter).first;
    Pet<2> r3e2 = induced_transformation(rec.r2e2, hs_x_le_1(), Direction::row, max_iter).first;
    const ChainStep& s2 =
        push_step("beta2", rec.p1, rec.r2e1, rec.r2e2, std::move(b2), r3e1, r3e2);

    // (4) x <= 1/phi (row) -> P4, beta3, R4
    auto b3 = induced_partition(r3e1, hs_x_le_inv_phi(), s2.induced, Direction::row, max_iter);
    Pet<2> r4e1 =
        induced_transformation(r3e1, hs_x_le_inv_phi(), Direction::row, max_iter).first;
    Pet<2> r4e2 =
        induced_transformation(r3e2, hs_x_le_inv_phi(), Direction::row, max_iter).first;
    const ChainStep& s3 = push_step("beta3", s2.induced, r3e1, r3e2, std::move(b3), r4e1, r4e2);

    // (5) y <= 1/phi (column) -> P5, beta4, R5
    auto b4 = induced_partition(r4e2, hs_y_le_inv_phi(), s3.induced, Direction::column, max_iter);
    Pet<2> r5e1 =
        induced_transformation(r4e1, hs_y_le_inv_phi(), Direction::column, max_iter).first;
    Pet<2> r5e2 =
        induced_transformation(r4e2, hs_y_le_inv_phi(), Direction::column, max_iter).first;
    const ChainStep& s4 =
        push_step("beta4", s3.induced, r4e1, r4e2, std::move(b4), r5e1, r5e2);

    // (6) conjugate by h(x) = -phi x + (1,1)
    FieldElem c = -phi();
    Vec<2> u{FieldElem(1), FieldElem(1)};
    LabeledPartition<2> p5s = s4.induced.affine(c, u);
    Pet<2> r5e1s = r5e1.conjugate_affine(c, u);
    Pet<2> r5e2s = r5e2.conjugate_affine(c, u);

    // (7) x <= 1/phi (row) -> P6, beta5, R6
    auto b5 = induced_partition(r5e1s, hs_x_le_inv_phi(), p5s, Direction::row, max_iter);
    Pet<2> r6e1 =
        induced_transformation(r5e1s, hs_x_le_inv_phi(), Direction::row, max_iter).first;
    Pet<2> r6e2 =
        induced_transformation(r5e2s, hs_x_le_inv_phi(), Direction::row, max_iter).first;
    const ChainStep& s5 = push_step("beta5", p5s, r5e1s, r5e2s, std::move(b5), r6e1, r6e2);

    // (8) y <= 1/phi (column) -> P7, beta6, R7
    auto b6 = induced_partition(r6e2, hs_y_le_inv_phi(), s5.induced, Direction::column, max_iter);
    Pet<2> r7e1 =
        induced_transformation(r6e1, hs_y_le_inv_phi(), Direction::column, max_iter).first;
    Pet<2> r7e2 =
        induced_transformation(r6e2, hs_y_le_inv_phi(), Direction::column, max_iter).first;
    const ChainStep& s6 =
        push_step("beta6", s5.induced, r6e1, r6e2, std::move(b6), r7e1, r7e2);

    // (9) conjugate -> P7', R7'
    LabeledPartition<2> p7s = s6.induced.affine(c, u);
    Pet<2> r7e1s = r7e1.conjugate_affine(c, u);
    Pet<2> r7e2s = r7e2.conjugate_affine(c, u);

    // (10) x <= 1/phi (row) -> P8, beta7, R8
    auto b7 = induced_partition(r7e1s, hs_x_le_inv_phi(), p7s, Direction::row, max_iter);
    Pet<2> r8e1 =
        induced_transformation(r7e1s, hs_x_le_inv_phi(), Direction::row, max_iter).first;
    Pet<2> r8e2 =
        induced_transformation(r7e2s, hs_x_le_inv_phi(), Direction::row, max_iter).first;
    const ChainStep& s7 = push_step("beta7", p7s, r7e1s, r7e2s, std::move(b7), r8e1, r8e2);
    rec.p8 = s7.induced;

    // (11) y <= 1/phi (column) -> P9, beta8, R9
    auto b8 = induced_partition(r8e2, hs_y_le_inv_phi(), rec.p8, Direction::column, max_iter);
    Pet<2> r9e1 =
        induced_transformation(r8e1, hs_y_le_inv_phi(), Direction::column, max_iter).first;
    Pet<2> r9e2 =
        induced_transformation(r8e2, hs_y_le_inv_phi(), Direction::column, max_iter).first;
    const ChainStep& s8 = push_step("beta8", rec.p8, r8e1, r8e2, std::move(b8), r9e1, r9e2);

    // (12) conjugate -> P9', R9'
    LabeledPartition<2> p9s = s8.induced.affine(c, u);
    Pet<2> r9e1s = r9e1.conjugate_affine(c, u);
    Pet<2> r9e2s = r9e2.conjugate_affine(c, u);

    // (13) x <= 1/phi (row) -> P10, beta9, R10
    auto b9 = induced_partition(r9e1s, hs_x_le_inv_phi(), p9s, Direction::row, max_iter);
    Pet<2> r10e1 =
        induced_transformation(r9e1s, hs_x_le_inv_phi(), Direction::row, max_iter).first;
    Pet<2> r10e2 =
        induced_transformation(r9e2s, hs_x_le_inv_phi(), Direction::row, max_iter).first;
    const ChainStep& s9 = push_step("beta9", p9s, r9e1s, r9e2s, std::move(b9), r10e1, r10e2);
    rec.p10 = s9.induced;

    // (14) the chain is self-induced: P10 carries the same cells as P8
    if (!rec.p8.same_cells(rec.p10))
        throw SelfInductionFailed("run_chain: P8 and P10 differ as cell sets");
    auto tau = rec.p8.keys_permutation(rec.p10);
    if (!tau) throw SelfInductionFailed("run_chain: no label bijection between P8 and P10");
    rec.tau = *tau;
    return rec;
}

inline Morphism2D self_similarity_morphism(const ChainRecord& rec) {
    Morphism2D beta8 = rec.step("beta8").beta;
    Morphism2D beta9 = rec.step("beta9").beta;
    Morphism2D tau = Morphism2D::from_permutation(rec.tau);
    return beta8.compose_after(beta9.compose_after(tau));
}

inline Morphism2D omega_u_morphism(const ChainRecord& rec, const std::map<int, int>& zeta) {
    Morphism2D z = Morphism2D::from_permutation(zeta);
    return z.inverse_permutation().compose_after(self_similarity_morphism(rec).compose_after(z));
}

// The conjugated copy of P8 under g(x, y) = (-phi x, y), relabeled through
// the inverse of zeta; this is the partition the coding identity
// Code8 = zeta o CodeU o g singles out.
inline LabeledPartition<2> p_u_partition(const LabeledPartition<2>& p8,
                                         const std::map<int, int>& zeta) {
    std::map<int, int> zeta_inv;
    for (const auto& [a, b] : zeta) {
        if (!zeta_inv.emplace(b, a).second)
            throw NotAPermutation("p_u_partition: zeta is not injective");
    }
    std::vector<LabeledAtom<2>> atoms;
    FieldElem c = -phi();
    for (const auto& a : p8.atoms()) {
        std::vector<Vec<2>> vs;
        for (const auto& v : a.cell.vertices()) vs.push_back({c * v[0], v[1]});
        atoms.push_back({zeta_inv.at(a.label), ConvexPolytope<2>::from_vertices(std::move(vs))});
    }
    std::vector<Vec<2>> dom_vs;
    for (const auto& v : p8.domain().vertices()) dom_vs.push_back({c * v[0], v[1]});
    return {ConvexPolytope<2>::from_vertices(std::move(dom_vs)), std::move(atoms)};
}

// Checks that g(P8) equals P_U up to the zeta relabeling, cell-set exactly.
inline bool verify_conjugacy_to_u(const LabeledPartition<2>& p8, const std::map<int, int>& zeta) {
    LabeledPartition<2> pu = p_u_partition(p8, zeta);
    pu.validate();
    FieldElem c = -phi();
    std::vector<LabeledAtom<2>> atoms;
    for (const auto& a : p8.atoms()) {
        std::vector<Vec<2>> vs;
        for (const auto& v : a.cell.vertices()) vs.push_back({c * v[0], v[1]});
        atoms.push_back({a.label, ConvexPolytope<2>::from_vertices(std::move(vs))});
    }
    LabeledPartition<2> g_p8(pu.domain(), std::move(atoms));
    if (!g_p8.same_cells(pu)) return false;
    auto perm = g_p8.keys_permutation(pu);
    if (!perm) return false;
    // the detected permutation must be exactly zeta^{-1}
    for (const auto& [a, b] : *perm)
        if (zeta.at(b) != a) return false;
    return true;
}

struct VerifyReport {
    std::vector<std::pair<std::string, bool>> tables;  // 12 verdicts
    bool all_pass = true;
};

inline VerifyReport verify_chain(const ChainRecord& rec, const ExpectedTables& expected) {
    VerifyReport report;
    auto add = [&report](const std::string& name, bool ok) {
        report.tables.emplace_back(name, ok);
        if (!ok) report.all_pass = false;
    };
    for (const auto& step : rec.steps)
        add(step.name, step.beta == expected.betas.at(step.name));
    add("tau", rec.tau == expected.tau);
    add("zeta", verify_conjugacy_to_u(rec.p8, expected.zeta));
    add("omega_U", omega_u_morphism(rec, expected.zeta) == expected.omega_u &&
                       self_similarity_morphism(rec) == expected.self_similarity);
    return report;
}

// --------------------------------------------------------------------------
// Pointwise sampling checks.

// Deterministic rational sample in the interior of a 2-dimensional domain;
// coordinates have denominator `den` (prime, so boundary hits stay rare).
inline Vec<2> random_point_in(const ConvexPolytope<2>& domain, std::mt19937_64& rng,
                              long den = 9973) {
    auto [lo, hi] = domain.bounding_box();
    std::uniform_int_distribution<long> dist(1, den - 1);
    for (int tries = 0; tries < 1000; ++tries) {
        Rational fx(dist(rng), den), fy(dist(rng), den);
        fx.canonicalize();
        fy.canonicalize();
        Vec<2> p{lo[0] + FieldElem(fx) * (hi[0] - lo[0]), lo[1] + FieldElem(fy) * (hi[1] - lo[1])};
        if (domain.contains_interior(p)) return p;
    }
    throw GeometryError("random_point_in: could not sample an interior point");
}

// First return time of iterating `t` from x until the orbit re-enters the
// interior of `window_domain`.
inline long first_return_time(const Pet<2>& t, const ConvexPolytope<2>& window_domain,
                              const Vec<2>& x, long cap = 1000) {
    Vec<2> y = x;
    for (long k = 1; k <= cap; ++k) {
        y = t.apply(y);
        if (window_domain.contains_interior(y)) return k;
    }
    throw NonTerminating("first_return_time: no return within cap");
}

// Distinct first-return times of `t` to the window over `samples` interior
// points (resampling on boundary hits).
inline std::set<long> sample_return_times(const Pet<2>& t, const ConvexPolytope<2>& window_domain,
                                          int samples, std::mt19937_64& rng) {
    std::set<long> times;
    int done = 0;
    while (done < samples) {
        Vec<2> x = random_point_in(window_domain, rng);
        try {
            times.insert(first_return_time(t, window_domain, x));
            ++done;
        } catch (const OnBoundary&) {
            // redraw
        }
    }
    return times;
}

inline Word2D config_word(const Pet<2>& t1, const Pet<2>& t2, const LabeledPartition<2>& p,
                          const Vec<2>& x, int n1, int n2) {
    auto grid = code_config(t1, t2, p, x, 0, n1 - 1, 0, n2 - 1);
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n1) * n2);
    for (const auto& column : grid) entries.insert(entries.end(), column.begin(), column.end());
    return {n1, n2, std::move(entries)};
}

// Desubstitution identity at one chain step: the beta-image of the induced
// coding of x must equal the original coding of x on the image window.
inline bool check_desubstitution(const ChainStep& step, const Vec<2>& x, int window) {
    Word2D induced = config_word(step.ind_e1, step.ind_e2, step.induced, x, window, window);
    Word2D expanded = step.beta.apply(induced);
    Word2D original = config_word(step.orig_e1, step.orig_e2, step.original_partition, x,
                                  expanded.n1(), expanded.n2());
    return expanded == original;
}

// Runs the desubstitution check at every chain step for `points` samples,
// redrawing on boundary hits.
inline bool verify_desubstitution(const ChainRecord& rec, int points, int window,
                                  std::mt19937_64& rng) {
    for (const auto& step : rec.steps) {
        int done = 0;
        while (done < points) {
            Vec<2> x = random_point_in(step.induced.domain(), rng);
            try {
                if (!check_desubstitution(step, x, window)) return false;
                ++done;
            } catch (const OnBoundary&) {
                // redraw
            }
        }
    }
    return true;
}

// Shear relation: Code2(R2^{(m-n, n)} x) = Code1(R1^{(m, n)} x) over an
// n-by-n window of exponents, for `samples` interior points.
inline bool verify_shear(const ChainRecord& rec, int samples, int window, std::mt19937_64& rng) {
    int done = 0;
    while (done < samples) {
        Vec<2> x = random_point_in(rec.p1.domain(), rng);
        try {
            for (int m = 0; m < window; ++m)
                for (int n = 0; n < window; ++n) {
                    Vec<2> lhs = rec.r2e2.apply_power(rec.r2e1.apply_power(x, m - n), n);
                    Vec<2> rhs = rec.r1e2.apply_power(rec.r1e1.apply_power(x, m), n);
                    if (rec.p1.label_of(lhs) != rec.p1.label_of(rhs)) return false;
                }
            ++done;
        } catch (const OnBoundary&) {
            // redraw
        }
    }
    return true;
}

// --------------------------------------------------------------------------
// 1-dimensional continued-fraction driver.

struct SturmianResult {
    std::vector<long> digits;            // continued-fraction digits a0, a1, ...
    std::vector<Morphism2D> morphisms;   // tau_i^{a_i} on letters {0 = L, 1 = R}
};

// tau_even: L -> L, R -> LR;  tau_odd: L -> LR, R -> R.
inline Morphism2D sturmian_tau(int parity) {
    std::map<int, Word2D> images;
    if (parity % 2 == 0) {
        images.emplace(0, Word2D::row({0}));
        images.emplace(1, Word2D::row({0, 1}));
    } else {
        images.emplace(0, Word2D::row({0, 1}));
        images.emplace(1, Word2D::row({1}));
    }
    return Morphism2D(std::move(images));
}

inline SturmianResult sturmian_chain(FieldElem alpha, int steps) {
    SturmianResult result;
    if (steps > 0 && alpha.sign() <= 0)
        throw RationalAlpha("sturmian_chain: alpha must be positive");
    for (int i = 0; i < steps; ++i) {
        mpz_class a = alpha.floor();
        result.digits.push_back(a.get_si());
        Morphism2D tau = sturmian_tau(i);
        Morphism2D power = Morphism2D::from_permutation({{0, 0}, {1, 1}});
        for (mpz_class k = 0; k < a; ++k) power = power.compose_after(tau);
        result.morphisms.push_back(power);
        FieldElem frac = alpha - FieldElem(Rational(a));
        if (frac.sign() == 0) {
            if (i + 1 < steps)
                throw RationalAlpha("sturmian_chain: expansion terminated after " +
                                    std::to_string(result.digits.size()) + " digits");
            break;
        }
        alpha = frac.inverse();
    }
    return result;
}

// The 2-interval circle PET of the appendix: rotation x -> x + 1 on
// R / (1 + alpha) Z over the fundamental domain [-1, alpha], with the
// two-letter partition 0 = dark [-1, 0], 1 = light [0, alpha].
struct CircleSystem {
    Pet<1> rotation;
    LabeledPartition<1> partition;
};

inline CircleSystem sturmian_circle(const FieldElem& alpha) {
    if (alpha.sign() <= 0) throw RationalAlpha("sturmian_circle: alpha must be positive");
    ConvexPolytope<1> dom = ConvexPolytope<1>::interval(FieldElem(-1), alpha);
    LatticeSpec<1> lattice{{Vec<1>{FieldElem(1) + alpha}}, dom};
    Pet<1> rot = toral_translation(lattice, Vec<1>{FieldElem(1)});
    LabeledPartition<1> p(dom, {{0, ConvexPolytope<1>::interval(FieldElem(-1), FieldElem(0))},
                                {1, ConvexPolytope<1>::interval(FieldElem(0), alpha)}});
    return {std::move(rot), std::move(p)};
}

// First induction of the appendix scheme: the circle rotation induced on the
// dark interval x <= 0.  Return words must be a dark letter followed by
// floor(alpha) or floor(alpha)+1 light letters.
inline InductionResult<1> sturmian_first_induction(const FieldElem& alpha, long max_iter = 10000) {
    CircleSystem sys = sturmian_circle(alpha);
    HalfSpace<1> dark{{FieldElem(0), FieldElem(-1)}};  // -x >= 0
    return induced_partition(sys.rotation, dark, sys.partition, Direction::row, max_iter);
}

}  // namespace petinduce

#endif  // PETINDUCE_PIPELINE_HPP
