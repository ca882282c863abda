#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "petinduce/errors.hpp"
#include "petinduce/json_io.hpp"
#include "petinduce/pipeline.hpp"

using namespace petinduce;

namespace {

std::string data_dir() { return PETINDUCE_DATA_DIR; }

const LabeledPartition<2>& p0() {
    static LabeledPartition<2> p =
        partition_from_json<2>(load_json_file(data_dir() + "/p0.json"));
    return p;
}

ExpectedTables expected_tables() {
    json j = load_json_file(data_dir() + "/expected_tables.json");
    ExpectedTables t;
    for (const auto& [name, m] : j.at("betas").items()) t.betas[name] = morphism_from_json(m);
    t.tau = permutation_from_json(j.at("tau"));
    t.zeta = permutation_from_json(j.at("zeta"));
    t.self_similarity = morphism_from_json(j.at("self_similarity"));
    t.omega_u = morphism_from_json(j.at("omega_u"));
    return t;
}

const ChainRecord& chain() {
    static ChainRecord rec = run_chain(p0());
    return rec;
}

}  // namespace

TEST_CASE("initial partition is valid with the right area") {
    CHECK(p0().size() == 21);
    CHECK_NOTHROW(p0().validate());
    CHECK(p0().domain().volume() == FieldElem(1) + FieldElem(4) * FieldElem::phi());
}

TEST_CASE("chain runs and every table matches the stored ones") {
    VerifyReport report = verify_chain(chain(), expected_tables());
    REQUIRE(report.tables.size() == 12);
    for (const auto& [name, ok] : report.tables) {
        INFO(name);
        CHECK(ok);
    }
    CHECK(report.all_pass);
}

TEST_CASE("chain step alphabets have the right sizes") {
    const std::vector<std::pair<std::string, std::size_t>> sizes{
        {"beta0", 28}, {"beta2", 20}, {"beta3", 20}, {"beta4", 22}, {"beta5", 18},
        {"beta6", 21}, {"beta7", 19}, {"beta8", 21}, {"beta9", 19}};
    for (const auto& [name, n] : sizes) {
        INFO(name);
        CHECK(chain().step(name).beta.images().size() == n);
    }
}

TEST_CASE("self-induction: P10 repeats the cells of P8") {
    const ChainRecord& rec = chain();
    CHECK(rec.p8.same_cells(rec.p10));
    CHECK(rec.tau.size() == rec.p8.alphabet().size());
    // tau really transports P8 onto P10
    CHECK(rec.p8.relabel(rec.tau).same_cells(rec.p10));
    auto perm = rec.p8.keys_permutation(rec.p10);
    REQUIRE(perm.has_value());
    CHECK(*perm == rec.tau);
}

TEST_CASE("self-similarity morphism is primitive and expansive") {
    Morphism2D m = self_similarity_morphism(chain());
    int wp = 0, we = 0;
    CHECK(m.is_primitive(0, &wp));
    CHECK(wp <= 20);
    CHECK(m.is_expansive(20, 10, &we));
    CHECK(we <= 20);
}

TEST_CASE("conjugacy to the relabeled partition") {
    ExpectedTables t = expected_tables();
    CHECK(verify_conjugacy_to_u(chain().p8, t.zeta));
    LabeledPartition<2> pu = p_u_partition(chain().p8, t.zeta);
    CHECK_NOTHROW(pu.validate());
    CHECK(pu.alphabet().size() == 19);
}

TEST_CASE("return times of the vertical rotation to the window") {
    const ChainRecord& rec = chain();
    ConvexPolytope<2> w = rec.r0e2.domain().clip(hs_y_le_1());
    std::mt19937_64 rng(7);
    std::set<long> times = sample_return_times(rec.r0e2, w, 100, rng);
    CHECK(times == std::set<long>{4, 5});
    std::set<long> times_e1 = sample_return_times(rec.r0e1, w, 50, rng);
    CHECK(times_e1 == std::set<long>{1});
}

TEST_CASE("desubstitution on sampled configurations") {
    std::mt19937_64 rng(11);
    CHECK(verify_desubstitution(chain(), 3, 4, rng));
}

TEST_CASE("shear relation between the two base systems") {
    std::mt19937_64 rng(13);
    CHECK(verify_shear(chain(), 3, 4, rng));
}

TEST_CASE("continued-fraction driver on the reference slope") {
    FieldElem alpha = FieldElem::parse("186/55+3/55*phi");
    SturmianResult r = sturmian_chain(alpha, 7);
    CHECK(r.digits == std::vector<long>{3, 2, 7, 1, 5, 1, 5});
    REQUIRE(r.morphisms.size() == 7);
    // the first morphism is tau_even cubed
    Morphism2D te = sturmian_tau(0);
    Morphism2D cubed = te.compose_after(te.compose_after(te));
    CHECK(r.morphisms[0] == cubed);
}

TEST_CASE("continued-fraction driver rejects bad slopes") {
    CHECK_THROWS_AS(sturmian_chain(FieldElem(0), 3), RationalAlpha);
    CHECK_THROWS_AS(sturmian_chain(FieldElem(-2), 3), RationalAlpha);
    // 7/2 = [3; 2] terminates after two digits
    FieldElem r72 = FieldElem(Rational(7, 2));
    SturmianResult two = sturmian_chain(r72, 2);
    CHECK(two.digits == std::vector<long>{3, 2});
    CHECK_THROWS_AS(sturmian_chain(r72, 5), RationalAlpha);
}

TEST_CASE("circle system of the appendix") {
    FieldElem alpha = FieldElem::parse("186/55+3/55*phi");
    CircleSystem sys = sturmian_circle(alpha);
    CHECK_NOTHROW(sys.rotation.validate());
    CHECK_NOTHROW(sys.partition.validate());
    CHECK(sys.partition.domain().volume() == FieldElem(1) + alpha);
    InductionResult<1> first = sturmian_first_induction(alpha);
    // return words: one dark letter then floor(alpha) or floor(alpha)+1 lights
    REQUIRE(first.return_words.size() == 2);
    CHECK(first.return_words[0] == std::vector<int>{0, 1, 1, 1});
    CHECK(first.return_words[1] == std::vector<int>{0, 1, 1, 1, 1});
    CHECK_NOTHROW(first.induced_partition.validate());
}

TEST_CASE("verification detects a corrupted table") {
    ExpectedTables t = expected_tables();
    // swap two letters in one stored table
    Morphism2D good = t.betas.at("beta4");
    std::map<int, Word2D> images = good.images();
    std::swap(images.at(0), images.at(1));
    t.betas.at("beta4") = Morphism2D(std::move(images));
    VerifyReport report = verify_chain(chain(), t);
    CHECK_FALSE(report.all_pass);
    for (const auto& [name, ok] : report.tables)
        if (name == "beta4") CHECK_FALSE(ok);
}
