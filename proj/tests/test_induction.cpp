#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "petinduce/errors.hpp"
#include "petinduce/induction.hpp"

using namespace petinduce;

namespace {
FieldElem frac(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return FieldElem(r);
}

// rotation by 1/4 on the circle [0, 1]
Pet<1> quarter_rotation() {
    ConvexPolytope<1> dom = Interval::interval(FieldElem(0), FieldElem(1));
    LatticeSpec<1> lat{{Vec<1>{FieldElem(1)}}, dom};
    return toral_translation(lat, Vec<1>{frac(1, 4)});
}
}  // namespace

TEST_CASE("return-word order: by length, then position 0 first") {
    CHECK(word_less({0}, {0, 1}));
    CHECK(word_less({1}, {0, 0}));      // shorter always first
    CHECK(word_less({0, 1}, {1, 0}));   // then lexicographic from position 0
    CHECK_FALSE(word_less({1, 0}, {0, 1}));
    CHECK_FALSE(word_less({0, 1}, {0, 1}));
}

TEST_CASE("induction of the quarter rotation on half the circle") {
    Pet<1> t = quarter_rotation();
    // window x <= 1/2
    HalfSpace<1> v{{frac(1, 2), FieldElem(-1)}};
    // two-letter partition: 0 on [0, 1/2], 1 on [1/2, 1]
    LabeledPartition<1> p(t.domain(),
                          {{0, Interval::interval(FieldElem(0), frac(1, 2))},
                           {1, Interval::interval(frac(1, 2), FieldElem(1))}});
    InductionResult<1> r = induced_partition(t, v, p, Direction::row);

    // return words: (0) on [0, 1/4] and (0, 1, 1) on [1/4, 1/2]
    REQUIRE(r.return_words.size() == 2);
    CHECK(r.return_words[0] == std::vector<int>{0});
    CHECK(r.return_words[1] == std::vector<int>{0, 1, 1});
    CHECK(r.substitution.at(0) == std::vector<int>{0});
    CHECK(r.substitution.at(1) == std::vector<int>{0, 1, 1});

    CHECK(r.induced_partition.domain() == Interval::interval(FieldElem(0), frac(1, 2)));
    CHECK_NOTHROW(r.induced_partition.validate());
    CHECK(r.induced_partition.label_of(Vec<1>{frac(1, 8)}) == 0);
    CHECK(r.induced_partition.label_of(Vec<1>{frac(3, 8)}) == 1);

    // word position k carries the label of T^k(x)
    Vec<1> x{frac(3, 8)};
    CHECK(p.label_of(x) == 0);
    CHECK(p.label_of(t.apply(x)) == 1);
    CHECK(p.label_of(t.apply(t.apply(x))) == 1);
}

TEST_CASE("induced transformation is the first-return map") {
    Pet<1> t = quarter_rotation();
    HalfSpace<1> v{{frac(1, 2), FieldElem(-1)}};
    auto [ind, result] = induced_transformation(t, v);
    CHECK_NOTHROW(ind.validate());
    // translations: +1/4 on the short word, -1/4 on the long one
    CHECK(ind.translation(0) == Vec<1>{frac(1, 4)});
    CHECK(ind.translation(1) == Vec<1>{frac(-1, 4)});
    // agreement with iterating t until first return
    for (long n = 1; n < 8; n += 2) {
        Vec<1> x{frac(n, 16)};
        Vec<1> y = t.apply(x);
        while (!ind.domain().contains_interior(y)) y = t.apply(y);
        CHECK(ind.apply(x) == y);
    }
}

TEST_CASE("induction in dimension 2 with column images") {
    // vertical rotation by 1/3 on the unit torus, induced on y <= 1/3
    LatticeSpec<2> lat{{Vec<2>{FieldElem(1), FieldElem(0)}, Vec<2>{FieldElem(0), FieldElem(1)}},
                       Polygon::box(0, 1, 0, 1)};
    Pet<2> t = toral_translation(lat, {FieldElem(0), frac(1, 3)});
    HalfSpace<2> v{{frac(1, 3), FieldElem(0), FieldElem(-1)}};
    InductionResult<2> r = induced_partition(t, v, t.atoms(), Direction::column);
    // the whole window returns together after 3 steps
    REQUIRE(r.return_words.size() == 1);
    CHECK(r.return_words[0] == std::vector<int>{0, 0, 1});
    CHECK(r.direction == Direction::column);
    Morphism2D m = r.substitution_morphism();
    CHECK(m.image(0) == Word2D::column({0, 0, 1}));
    auto [ind, result] = induced_transformation(t, v, Direction::column);
    // first-return map of a period-3 vertical rotation is the identity
    CHECK(ind.translation(0) == Vec<2>{FieldElem(0), FieldElem(0)});
    CHECK_NOTHROW(ind.validate());
}

TEST_CASE("substitution morphism respects the direction") {
    Pet<1> t = quarter_rotation();
    HalfSpace<1> v{{frac(1, 2), FieldElem(-1)}};
    LabeledPartition<1> p = t.atoms();
    Morphism2D row = induced_partition(t, v, p, Direction::row).substitution_morphism();
    Morphism2D col = induced_partition(t, v, p, Direction::column).substitution_morphism();
    CHECK(row.image(1).n1() == 3);
    CHECK(row.image(1).n2() == 1);
    CHECK(col.image(1).n1() == 1);
    CHECK(col.image(1).n2() == 3);
    CHECK(row.image(1).entries() == col.image(1).entries());
}

TEST_CASE("failure modes") {
    Pet<1> t = quarter_rotation();
    // iteration cap too small
    HalfSpace<1> v{{frac(1, 2), FieldElem(-1)}};
    CHECK_THROWS_AS(induced_partition(t, v, t.atoms(), Direction::row, 1), NonTerminating);
    // window not full-dimensional
    HalfSpace<1> empty{{FieldElem(0), FieldElem(-1)}};  // x <= 0
    CHECK_THROWS_AS(induced_partition(t, empty, t.atoms(), Direction::row), EmptyWindow);
    // mismatched partition domain
    LabeledPartition<1> other(Interval::interval(FieldElem(0), FieldElem(2)),
                              {{0, Interval::interval(FieldElem(0), FieldElem(2))}});
    CHECK_THROWS_AS(induced_partition(t, v, other, Direction::row), DomainMismatch);
}
