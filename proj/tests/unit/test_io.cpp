#include "support.hpp"

#include "liecomp/error.hpp"
#include "liecomp/io.hpp"
#include "liecomp/lie_structure.hpp"
#include "liecomp/tensor.hpp"

#include <doctest.h>

using namespace liecomp;

namespace {

Json algebra_doc(const std::string& brackets) {
    return Json::parse(R"({"field":{"kind":"rational"},"dim":3,"brackets":)" + brackets + "}");
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("reading the bundled algebras") {
    const LieAlgebra h = algebra_from_json(read_json_file(testing::data_path("heisenberg.json")));
    CHECK(h == heisenberg());
    CHECK(h.basis_names() == std::vector<std::string>{"x", "y", "z"});
    const LieAlgebra s = algebra_from_json(read_json_file(testing::data_path("sl2.json")));
    CHECK(s == sl2());
    const LieAlgebra he = algebra_from_json(read_json_file(testing::data_path("heisenberg_over_Qsqrt2.json")));
    CHECK(he == heisenberg(testing::qsqrt2()));
}

TEST_CASE("algebra round trip") {
    for (const LieAlgebra& l : {heisenberg(), sl2(), n_plus(4), heisenberg(testing::qcbrt2())}) {
        const LieAlgebra back = algebra_from_json(Json::parse(to_json(l).dump()));
        CHECK(back == l);
        CHECK(back.basis_names() == l.basis_names());
    }
}

TEST_CASE("malformed algebras are rejected") {
    CHECK_THROWS_AS(algebra_from_json(algebra_doc(R"([{"i":1,"j":0,"value":[]}])")), EncodingError);
    CHECK_THROWS_AS(algebra_from_json(algebra_doc(R"([{"i":0,"j":3,"value":[]}])")), EncodingError);
    CHECK_THROWS_AS(algebra_from_json(algebra_doc(R"([{"i":0,"j":1,"value":[{"k":5,"coeff":"1"}]}])")),
                    EncodingError);
    CHECK_THROWS_AS(algebra_from_json(algebra_doc(R"([{"i":0,"j":1,"value":[]},{"i":0,"j":1,"value":[]}])")),
                    EncodingError);
    CHECK_THROWS_AS(
        algebra_from_json(algebra_doc(R"([{"i":0,"j":1,"value":[{"k":2,"coeff":"1"},{"k":2,"coeff":"1"}]}])")),
        EncodingError);
    CHECK_THROWS_AS(algebra_from_json(algebra_doc(R"([{"i":0,"j":1,"value":[{"k":2,"coeff":"1/0"}]}])")),
                    ParseError);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"field":{"kind":"rational"},"dim":0})")), EncodingError);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim":2})")), EncodingError);
    CHECK_THROWS_AS(read_json_file(testing::data_path("no_such_file.json")), ParseError);
}

TEST_CASE("field element encodings") {
    const NumberField e = testing::qsqrt2();
    CHECK(element_from_json(Json::parse(R"(["1","-1/2"])"), e) == e.element({1, Rational(-1, 2)}));
    CHECK(element_from_json(Json::parse(R"("3")"), e) == e.from_rational(3));
    CHECK_THROWS_AS(element_from_json(Json::parse(R"(["1"])"), e), EncodingError);
    CHECK(to_json(e.element({0, 1})).dump() == R"(["0","1"])");
    CHECK(to_json(NumberField::rationals().from_rational(Rational(2, 3))).dump() == R"("2/3")");
}

TEST_CASE("fields") {
    CHECK(field_from_json(Json::parse(R"({"kind":"rational"})")).is_rationals());
    CHECK(field_from_json(Json::parse(R"({"kind":"number_field","minpoly":["0","1"]})")).is_rationals());
    CHECK(field_from_json(Json::parse(R"({"kind":"number_field","minpoly":["-2","0","1"]})")) == testing::qsqrt2());
    CHECK_THROWS_AS(field_from_json(Json::parse(R"({"kind":"number_field","minpoly":["-1","0","1"]})")),
                    NotIrreducible);
    CHECK_THROWS_AS(field_from_json(Json::parse(R"({"kind":"number_field","minpoly":["-2","0","2"]})")),
                    EncodingError);
    CHECK_THROWS_AS(field_from_json(Json::parse(R"({"kind":"number_field","minpoly":["-2","0","1"]})"), 1),
                    DegreeTooLarge);
    CHECK(parse_coefficient_list("-2,0,1") == Polynomial{-2, 0, 1});
}

TEST_CASE("twist files") {
    const LieAlgebra h = heisenberg(testing::qsqrt2());
    const TwistData all = twist_from_json(read_json_file(testing::data_path("full_id.json")), h);
    CHECK(all.I.dim() == 6);
    CHECK(all.sigma.is_identity());
    const TwistData c = twist_from_json(read_json_file(testing::data_path("center_conj.json")), h);
    CHECK(c.I == center(restrict_scalars(h)));
    CHECK_FALSE(c.sigma.is_identity());
    CHECK_THROWS_AS(twist_from_json(Json::parse(R"({"ideal_gens":"all","sigma_root":["1","0"]})"), h),
                    EncodingError);
    CHECK_THROWS_AS(twist_from_json(Json::parse(R"({"ideal_gens":"most"})"), h), EncodingError);
}

TEST_CASE("completion documents read back as structures") {
    const LieAlgebra h = heisenberg(testing::qsqrt2());
    const Completion c = twisted_completion(h, identity_twist(h));
    const Json doc = Json::parse(to_json(c).dump());
    CHECK(algebra_from_json(doc) == c.K);
    const TwoSortedStructure m = structure_from_json(doc);
    const TwoSortedStructure direct = make_structure(c);
    CHECK(m.L_basis == direct.L_basis);
    REQUIRE(m.constants.size() == direct.constants.size());
    for (std::size_t i = 0; i < m.constants.size(); ++i) {
        CHECK(m.constants[i].label == direct.constants[i].label);
        CHECK(m.constants[i].value == direct.constants[i].value);
        CHECK(m.constants[i].coords == direct.constants[i].coords);
    }
}

} // TEST_SUITE
