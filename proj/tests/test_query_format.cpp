#include <catch2/catch_amalgamated.hpp>

#include "ipf/format.hpp"
#include "ipf/query.hpp"

using namespace ipf;
using V = std::vector<int>;

TEST_CASE("tuple syntax") {
    CHECK(parse_tuple("(1,2,3)") == V{1, 2, 3});
    CHECK(parse_tuple(" ( 5 , 1,3 ) ") == V{5, 1, 3});
    CHECK(parse_tuple("()").empty());
    CHECK(parse_tuple("( )").empty());
    CHECK(format_tuple(V{1, 2}) == "(1,2)");
    CHECK(format_tuple(V{}) == "()");
    for (const char* bad : {"", "1,2", "(1,2", "(1,,2)", "(1 2)", "(a)", "(1)x", "(3,)"}) {
        CHECK_THROWS_AS(parse_tuple(bad), Error);
    }
}

TEST_CASE("every applicable method agrees") {
    QueryOptions opts;
    for (Family f : kAllFamilies) {
        for (int n = 0; n <= 4; ++n) {
            for (int m = n; m <= n + 2; ++m) {
                if (f == Family::IPF_PAIR && m > 4) continue;
                for (int ell = 0; ell <= 3; ++ell) {
                    const FamilyTag tag(f, n, m, ell);
                    const auto values = evaluate_all(tag, opts);
                    REQUIRE(!values.empty());
                    std::string desc = std::string(to_string(f)) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                       " ell=" + std::to_string(ell);
                    for (const auto& v : values) desc += " " + std::string(to_string(v.method)) + "=" + v.value.str();
                    INFO(desc);
                    REQUIRE(agree(values));
                }
            }
        }
    }
}

TEST_CASE("method applicability") {
    CHECK(applicable({Family::ND_ELL_IPF, 3, 3, 1}, Method::GeneratingFunction));
    CHECK_FALSE(applicable({Family::ND_ELL_IPF, 3, 5, 1}, Method::GeneratingFunction));
    CHECK(applicable({Family::ND_ELL_IPF, 3, 5, 1}, Method::Recursion));
    CHECK_FALSE(applicable({Family::ND_ELL_IPF, 3, 3, 1}, Method::Recursion));
    CHECK_FALSE(applicable({Family::IPF_PAIR, 2, 3}, Method::ClosedForm));
    CHECK_THROWS_AS(evaluate({{Family::PF, 2, 3}, Method::GeneratingFunction}), Error);
    CHECK(method_from_string("bijection_image") == Method::BijectionImage);
    CHECK_THROWS_AS(method_from_string("magic"), Error);
}

TEST_CASE("worked counts through the query layer") {
    CHECK(evaluate({{Family::ELL_IPF, 7, 7, 2}, Method::Recursion}) == 109438);
    const auto u = evaluate_all({Family::UIRPF, 2, 4});
    CHECK(u.size() >= 3);
    for (const auto& v : u) CHECK(v.value == 15);
}

TEST_CASE("table CSV layout") {
    const std::string t1 = table_csv(table1_spec());
    CHECK(t1.rfind("ell,1,2,3,4,5,6,7,8,9\n0,1,2,6,24,120,720,5040,40320,362880\n", 0) == 0);
    CHECK(t1.find("\n4,1,3,16,125,1296,15511,212978,3321091,58196400\n") != std::string::npos);
    const std::string t2 = table_csv(table2_spec());
    CHECK(t2.find("\n1,1,1,2,3,5,8,13,21,34,55,89\n") != std::string::npos);
    CHECK(t2.find("\n3,1,1,2,4,8,15,29,56,108,208,401\n") != std::string::npos);
    CHECK_THROWS_AS(table_spec("table3"), Error);
}

TEST_CASE("b-files and the exact-height triangle") {
    CHECK(bfile({Count(1), Count(3), Count(13)}, 1) == "1 1\n2 3\n3 13\n");
    const auto tri = exact_height_triangle(4);
    const std::vector<int> expected{1, 1, 1, 1, 3, 1, 1, 7, 5, 1};
    REQUIRE(tri.size() == expected.size());
    for (std::size_t i = 0; i < tri.size(); ++i) CHECK(tri[i] == expected[i]);
}
