#include <doctest.h>

#include "hhq/hilbert.hpp"

using namespace hhq;

namespace {

std::vector<long> expand(CaseTag tag, unsigned r, int N) {
    auto coeffs = series_coefficients(series_for_case({tag, r}), N);
    std::vector<long> out;
    for (const auto& c : coeffs) out.push_back(c.get_si());
    return out;
}

}  // namespace

TEST_CASE("frozen expansions") {
    CHECK(expand(CaseTag::Generic, 0, 6) == std::vector<long>{2, 2, 1, 0, 0, 0, 0});
    CHECK(expand(CaseTag::OddRoot, 3, 14) ==
          std::vector<long>{2, 2, 1, 0, 0, 0, 3, 6, 3, 0, 0, 0, 5, 10, 5});
    CHECK(expand(CaseTag::OddRoot, 5, 12) ==
          std::vector<long>{2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 3, 6, 3});
    CHECK(expand(CaseTag::EvenRootOrChar2, 4, 13) ==
          std::vector<long>{2, 2, 1, 0, 2, 4, 2, 0, 3, 6, 3, 0, 4, 8});
    CHECK(expand(CaseTag::EvenRootOrChar2, 6, 14) ==
          std::vector<long>{2, 2, 1, 0, 0, 0, 2, 4, 2, 0, 0, 0, 3, 6, 3});
    CHECK(expand(CaseTag::Char2Q1, 1, 6) == std::vector<long>{4, 8, 12, 16, 20, 24, 28});
    CHECK(expand(CaseTag::QMinusOne, 2, 8) == std::vector<long>{4, 4, 5, 6, 7, 8, 9, 10, 11});
    CHECK(expand(CaseTag::QOne, 1, 6) == std::vector<long>{2, 4, 6, 8, 10, 12, 14});
    CHECK(expand(CaseTag::QZero, 0, 8) == std::vector<long>{1, 2, 3, 5, 7, 9, 11, 13, 15});
}

TEST_CASE("coefficients stay nonnegative far out") {
    for (auto [tag, r] : std::vector<std::pair<CaseTag, unsigned>>{
             {CaseTag::OddRoot, 3}, {CaseTag::OddRoot, 7}, {CaseTag::EvenRootOrChar2, 6},
             {CaseTag::QMinusOne, 2}, {CaseTag::QZero, 0}}) {
        auto coeffs = series_coefficients(series_for_case({tag, r}), 200);
        for (const auto& c : coeffs) CHECK(c >= 0);
    }
}

TEST_CASE("vanishing pattern at roots of unity") {
    for (unsigned r : {3u, 5u}) {
        auto coeffs = expand(CaseTag::OddRoot, r, 6 * r);
        for (int n = 3; n <= 6 * static_cast<int>(r); ++n) {
            bool in_window = n % (2 * r) <= 2;
            CHECK((coeffs[n] > 0) == in_window);
        }
    }
    for (unsigned r : {4u, 6u}) {
        auto coeffs = expand(CaseTag::EvenRootOrChar2, r, 4 * r);
        for (int n = 3; n <= 4 * static_cast<int>(r); ++n) {
            bool in_window = n % r <= 2;
            CHECK((coeffs[n] > 0) == in_window);
        }
    }
}

TEST_CASE("series match computed dimensions") {
    auto Q = FieldContext::rationals();
    for (long qv : {2L, 1L, -1L}) {
        MinimalResolution res(LambdaAlgebra(Q, FieldScalar::from_int(Q, qv)));
        auto rep = compare_dims(res, 8);
        CHECK(rep.all_passed());
        for (const auto& c : rep.checks) CHECK(c.status == CheckStatus::Pass);
    }
    auto F7 = FieldContext::prime_field(7);
    CHECK(compare_dims(MinimalResolution(LambdaAlgebra(F7, FieldScalar::from_int(F7, 2))), 14)
              .all_passed());
}

TEST_CASE("q = 0 degree-zero mismatch is annotated, not corrected") {
    auto Q = FieldContext::rationals();
    MinimalResolution res(LambdaAlgebra(Q, FieldScalar::zero(Q)));
    auto rep = compare_dims(res, 6);
    CHECK(rep.all_passed());
    REQUIRE(!rep.checks.empty());
    CHECK(rep.checks[0].status == CheckStatus::PassWithNote);
    CHECK(rep.checks[0].note.find("erratum") != std::string::npos);
    for (std::size_t i = 1; i < rep.checks.size(); ++i)
        CHECK(rep.checks[i].status == CheckStatus::Pass);
}

TEST_CASE("mis-specified series throw") {
    SeriesSpec bad{CaseTag::Generic, 0, {1, -2}, {1}};
    CHECK_THROWS_AS(series_coefficients(bad, 3), std::domain_error);
    SeriesSpec no_unit{CaseTag::Generic, 0, {1}, {0, 1}};
    CHECK_THROWS_AS(series_coefficients(no_unit, 3), std::invalid_argument);
}
