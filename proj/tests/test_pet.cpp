#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <utility>

#include "petinduce/errors.hpp"
#include "petinduce/pet.hpp"

using namespace petinduce;

namespace {
FieldElem phi() { return FieldElem::phi(); }

FieldElem frac(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return FieldElem(r);
}

LatticeSpec<2> unit_lattice() {
    return {{Vec<2>{FieldElem(1), FieldElem(0)}, Vec<2>{FieldElem(0), FieldElem(1)}},
            Polygon::box(0, 1, 0, 1)};
}

LatticeSpec<2> golden_lattice() {
    return {{Vec<2>{phi(), FieldElem(0)}, Vec<2>{FieldElem(1), FieldElem(3) + phi()}},
            Polygon::box(FieldElem(0), phi(), FieldElem(0), FieldElem(3) + phi())};
}
}  // namespace

TEST_CASE("toral translation on the unit torus") {
    Pet<2> t = toral_translation(unit_lattice(), {frac(1, 2), frac(1, 3)});
    CHECK(t.atoms().size() == 4);
    CHECK_NOTHROW(t.validate());
    // atoms ordered by translation vector, lexicographically descending
    CHECK(t.translation(0) == Vec<2>{frac(1, 2), frac(1, 3)});
    CHECK(t.translation(1) == Vec<2>{frac(1, 2), frac(-2, 3)});
    CHECK(t.translation(2) == Vec<2>{frac(-1, 2), frac(1, 3)});
    CHECK(t.translation(3) == Vec<2>{frac(-1, 2), frac(-2, 3)});
    // sample the four regions
    CHECK(t.apply({frac(1, 4), frac(1, 4)}) == Vec<2>{frac(3, 4), frac(7, 12)});
    CHECK(t.apply({frac(3, 4), frac(3, 4)}) == Vec<2>{frac(1, 4), frac(1, 12)});
}

TEST_CASE("toral translation on the golden-ratio torus") {
    LatticeSpec<2> lat = golden_lattice();
    Pet<2> r0e1 = toral_translation(lat, {FieldElem(1), FieldElem(0)});
    REQUIRE(r0e1.atoms().size() == 2);
    CHECK(r0e1.translation(0) == Vec<2>{FieldElem(1), FieldElem(0)});
    CHECK(r0e1.translation(1) == Vec<2>{FieldElem(1) - phi(), FieldElem(0)});
    CHECK_NOTHROW(r0e1.validate());

    // the skew generator (1, 3+phi) splits the wrap strip into two pieces
    Pet<2> r0e2 = toral_translation(lat, {FieldElem(0), FieldElem(1)});
    REQUIRE(r0e2.atoms().size() == 3);
    CHECK_NOTHROW(r0e2.validate());
    std::set<std::pair<std::string, std::string>> shifts;
    for (const auto& [label, v] : r0e2.translations()) shifts.insert({v[0].str(), v[1].str()});
    std::set<std::pair<std::string, std::string>> expected{
        {FieldElem(0).str(), FieldElem(1).str()},
        {(phi() - FieldElem(1)).str(), (FieldElem(-2) - phi()).str()},
        {FieldElem(-1).str(), (FieldElem(-2) - phi()).str()}};
    CHECK(shifts == expected);
    // labels follow the translation vectors in descending lexicographic order
    for (std::size_t i = 0; i + 1 < r0e2.translations().size(); ++i)
        CHECK(lex_less(r0e2.translation(static_cast<int>(i) + 1),
                       r0e2.translation(static_cast<int>(i))));
}

TEST_CASE("toral translation in dimension 1") {
    ConvexPolytope<1> dom = Interval::interval(FieldElem(-1), phi());
    LatticeSpec<1> lat{{Vec<1>{FieldElem(1) + phi()}}, dom};
    Pet<1> rot = toral_translation(lat, Vec<1>{FieldElem(1)});
    REQUIRE(rot.atoms().size() == 2);
    CHECK(rot.translation(0) == Vec<1>{FieldElem(1)});
    CHECK(rot.translation(1) == Vec<1>{-phi()});
    CHECK_NOTHROW(rot.validate());
    CHECK(rot.apply(Vec<1>{FieldElem(0)}) == Vec<1>{FieldElem(1)});
    CHECK(rot.apply(Vec<1>{FieldElem(1)}) == Vec<1>{FieldElem(1) - phi()});
}

TEST_CASE("apply, inverse and powers") {
    Pet<2> t = toral_translation(unit_lattice(), {frac(1, 2), frac(1, 3)});
    Pet<2> inv = t.inverse();
    Vec<2> x{frac(1, 7), frac(2, 7)};
    CHECK(inv.apply(t.apply(x)) == x);
    CHECK(t.apply_power(x, 6) == x);  // order of (1/2, 1/3) in the torus
    CHECK(t.apply_power(x, -2) == inv.apply(inv.apply(x)));
    CHECK(t.apply_power(x, 0) == x);
    CHECK_THROWS_AS(t.apply({frac(1, 2), frac(1, 4)}), OnBoundary);  // on the atom wall
}

TEST_CASE("composition adds translations") {
    Pet<2> a = toral_translation(unit_lattice(), {frac(1, 2), FieldElem(0)});
    Pet<2> b = toral_translation(unit_lattice(), {FieldElem(0), frac(1, 3)});
    Pet<2> c = a.compose_after(b);
    CHECK_NOTHROW(c.validate());
    Vec<2> x{frac(1, 7), frac(2, 7)};
    CHECK(c.apply(x) == a.apply(b.apply(x)));
    Pet<2> d = toral_translation(unit_lattice(), {frac(1, 2), frac(1, 3)});
    for (int i = 1; i < 7; ++i)
        for (int j = 1; j < 7; ++j) {
            Vec<2> p{frac(i, 7), frac(j, 7)};
            CHECK(c.apply(p) == d.apply(p));
        }
}

TEST_CASE("merging atoms with equal translations") {
    // composing a map with its inverse yields many atoms, all translation 0;
    // merging collapses them back to the identity on one atom
    Pet<2> a = toral_translation(unit_lattice(), {frac(1, 2), frac(1, 3)});
    Pet<2> c = a.inverse().compose_after(a);
    CHECK(c.atoms().size() > 1);
    Pet<2> m = c.merge_atoms_with_same_translation();
    CHECK(m.atoms().size() == 1);
    CHECK(m.translation(0) == Vec<2>{FieldElem(0), FieldElem(0)});
    CHECK_NOTHROW(m.validate());
}

TEST_CASE("merge keeps non-convex unions split under one label") {
    // L-shaped union: two translation-0 cells whose union is not convex
    Polygon dom = Polygon::box(0, 2, 0, 2);
    LabeledPartition<2> atoms{
        dom,
        {{0, Polygon::box(FieldElem(0), FieldElem(1), FieldElem(0), FieldElem(2))},
         {1, Polygon::box(FieldElem(1), FieldElem(2), FieldElem(0), FieldElem(1))},
         {2, Polygon::box(FieldElem(1), FieldElem(2), FieldElem(1), FieldElem(2))}}};
    Vec<2> zero{FieldElem(0), FieldElem(0)};
    Pet<2> t{atoms, {{0, zero}, {1, zero}, {2, {FieldElem(0), FieldElem(0)}}}};
    Pet<2> m = t.merge_atoms_with_same_translation();
    // all three merge into one convex cell equal to the domain
    CHECK(m.atoms().size() == 1);
    CHECK(m.atoms().atoms()[0].cell == dom);

    // now give the corner cell a different translation: the remaining
    // group 0 + 1 forms an L, which must stay as two cells
    Pet<2> s{atoms,
             {{0, zero}, {1, zero}, {2, {FieldElem(0), FieldElem(-1)}}}};
    Pet<2> ms = s.merge_atoms_with_same_translation();
    CHECK(ms.atoms().size() == 3);
    CHECK(ms.translations().size() == 2);
}

TEST_CASE("affine conjugation") {
    Pet<2> t = toral_translation(unit_lattice(), {frac(1, 2), frac(1, 3)});
    FieldElem c = -phi();
    Vec<2> u{FieldElem(1), FieldElem(1)};
    Pet<2> conj = t.conjugate_affine(c, u);
    CHECK_NOTHROW(conj.validate());
    // h o T = conj o h pointwise
    Vec<2> x{frac(1, 7), frac(2, 7)};
    Vec<2> hx{c * x[0] + u[0], c * x[1] + u[1]};
    Vec<2> lhs = t.apply(x);
    Vec<2> expected{c * lhs[0] + u[0], c * lhs[1] + u[1]};
    CHECK(conj.apply(hx) == expected);
}

TEST_CASE("coding a configuration window") {
    Pet<2> t1 = toral_translation(unit_lattice(), {frac(1, 2), FieldElem(0)});
    Pet<2> t2 = toral_translation(unit_lattice(), {FieldElem(0), frac(1, 2)});
    // partition into quadrants labeled 0..3 (label = 2*(x-half) + (y-half))
    Polygon dom = Polygon::box(0, 1, 0, 1);
    LabeledPartition<2> p{
        dom,
        {{0, Polygon::box(FieldElem(0), frac(1, 2), FieldElem(0), frac(1, 2))},
         {1, Polygon::box(FieldElem(0), frac(1, 2), frac(1, 2), FieldElem(1))},
         {2, Polygon::box(frac(1, 2), FieldElem(1), FieldElem(0), frac(1, 2))},
         {3, Polygon::box(frac(1, 2), FieldElem(1), frac(1, 2), FieldElem(1))}}};
    auto grid = code_config(t1, t2, p, {frac(1, 4), frac(1, 4)}, 0, 3, 0, 3);
    REQUIRE(grid.size() == 4);
    REQUIRE(grid[0].size() == 4);
    // the coding is 2-periodic in both directions starting at label 0
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(grid[i][j] == 2 * (i % 2) + (j % 2));
    // negative exponents run through the inverse
    auto grid2 = code_config(t1, t2, p, {frac(1, 4), frac(1, 4)}, -2, 1, -2, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(grid2[i][j] == 2 * (i % 2) + (j % 2));
}

TEST_CASE("randomized toral translations are bijective") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-7, 7), den(2, 9);
    for (int k = 0; k < 100; ++k) {
        FieldElem tx = frac(num(rng), den(rng)), ty = frac(num(rng), den(rng));
        Pet<2> t = toral_translation(unit_lattice(), {tx, ty});
        CHECK_NOTHROW(t.validate());
        CHECK(t.atoms().total_volume() == FieldElem(1));
    }
}
