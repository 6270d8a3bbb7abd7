// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hhq/barcomplex.hpp"
#include "hhq/cup.hpp"
#include "hhq/hilbert.hpp"
#include "hhq/koszul.hpp"
#include "hhq/lambda.hpp"
#include "hhq/resolution.hpp"

using namespace hhq;

namespace {

int failures = 0;

void line(int idx, const std::string& what, bool ok, const std::string& note = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool dims_match(const MinimalResolution& res, const std::vector<unsigned>& want) {
    for (std::size_t n = 0; n < want.size(); ++n)
        if (res.hh_dimension(static_cast<int>(n)) != want[n]) return false;
    return true;
}

MinimalResolution make(const FieldContextPtr& ctx, long qv) {
    return MinimalResolution(LambdaAlgebra(ctx, FieldScalar::from_int(ctx, qv)));
}

}  // namespace

int main() {
    auto Q = FieldContext::rationals();
    auto F2 = FieldContext::prime_field(2);
    auto F3 = FieldContext::prime_field(3);
    auto F5 = FieldContext::prime_field(5);
    auto F7 = FieldContext::prime_field(7);

    // 1: generic case, q = 2 over Q
    {
        auto t0 = std::chrono::steady_clock::now();
        auto res = make(Q, 2);
        std::vector<unsigned> want{2, 2, 1};
        want.resize(13, 0);
        bool ok = dims_match(res, want) && verify_presentation(res, 6).all_passed();
        double dt = seconds_since(t0);
        line(1, "generic q=2 over Q: dims to 12 and ring presentation", ok && dt < 1.0,
             ok ? (dt < 1.0 ? "" : "exceeded 1s") : "value mismatch");
    }

    // 2: odd root of unity, q = 2 over F_7 (r = 3)
    {
        auto t0 = std::chrono::steady_clock::now();
        auto res = make(F7, 2);
        bool dims_ok = dims_match(res, {2, 2, 1, 0, 0, 0, 3, 6, 3, 0, 0, 0, 5, 10, 5});
        bool gap_ok = true;
        for (int n = 3; n <= 14; ++n)
            if ((res.hh_dimension(n) > 0) != (n % 6 <= 2)) gap_ok = false;
        // w0 w2 and w1^2 agree in HH^12
        auto rep = verify_presentation(res, 12);
        double dt = seconds_since(t0);
        line(2, "odd root r=3 over F_7: dims to 14, gaps, w0*w2 = w1^2",
             dims_ok && gap_ok && rep.all_passed() && dt < 10.0,
             dt < 10.0 ? "" : "exceeded 10s");
    }

    // 3: even-order root, q = 2 over F_5 (r = 4)
    {
        auto res = make(F5, 2);
        bool dims_ok = dims_match(res, {2, 2, 1, 0, 2, 4, 2, 0, 3, 6, 3, 0, 4, 8});
        line(3, "even order r=4 over F_5: dims to 13 and generation",
             dims_ok && verify_presentation(res, 13).all_passed());
    }

    // 4: char 2 with q = 1
    {
        auto res = make(F2, 1);
        bool ok = true;
        for (int n = 1; n <= 8; ++n) ok = ok && res.delta_star_matrix(n).is_zero();
        for (int n = 0; n <= 8; ++n) ok = ok && res.hh_dimension(n) == 4u * (n + 1);
        ok = ok && verify_presentation(res, 6).all_passed();
        line(4, "char 2, q=1: zero differentials, dims 4(n+1), generation", ok);
    }

    // 5: q = -1 over Q
    {
        auto res = make(Q, -1);
        bool ok = dims_match(res, {4, 4, 5, 6, 7, 8, 9, 10, 11}) &&
                  verify_presentation(res, 6).all_passed();
        line(5, "q=-1 over Q: dims to 8 and relations", ok);
    }

    // 6: q = 1 over Q
    {
        auto res = make(Q, 1);
        bool ok = dims_match(res, {2, 4, 6, 8, 10, 12, 14, 16, 18}) &&
                  verify_presentation(res, 6).all_passed();
        line(6, "q=1 over Q: dims 2(n+1) and the quadric ideal", ok);
    }

    // 7: q = 0 over Q
    {
        auto res = make(Q, 0);
        bool dims_ok = dims_match(res, {2, 2, 3, 5, 7, 9, 11, 13, 15});
        auto rep = compare_dims(res, 8);
        bool flagged = !rep.checks.empty() && rep.checks[0].status == CheckStatus::PassWithNote;
        bool prod_ok = verify_presentation(res, 6).all_passed();
        line(7, "q=0 over Q: dims to 8, degree-0 discrepancy flagged, products vanish",
             dims_ok && rep.all_passed() && flagged && prod_ok);
    }

    // 8: bar-complex oracle agreement
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::vector<LambdaAlgebra> reps = {
            LambdaAlgebra(F7, FieldScalar::from_int(F7, 2)),  // odd root
            LambdaAlgebra(F5, FieldScalar::from_int(F5, 2)),  // even order
            LambdaAlgebra(F2, FieldScalar::one(F2)),          // char 2, q = 1
            LambdaAlgebra(F7, FieldScalar::from_int(F7, 6)),  // q = -1
            LambdaAlgebra(F3, FieldScalar::one(F3)),          // q = 1
            LambdaAlgebra(F3, FieldScalar::zero(F3)),         // q = 0
        };
        for (const auto& alg : reps) {
            MinimalResolution res(alg);
            auto oracle = oracle_hh_dimensions(4, alg);
            for (int n = 0; n <= 4; ++n) ok = ok && res.hh_dimension(n) == oracle[n];
        }
        {
            auto res = make(Q, 2);
            auto oracle = oracle_hh_dimensions(3, LambdaAlgebra(Q, FieldScalar::from_int(Q, 2)));
            for (int n = 0; n <= 3; ++n) ok = ok && res.hh_dimension(n) == oracle[n];
        }
        double dt = seconds_since(t0);
        line(8, "bar-complex oracle matches to degree 4 (3 over Q)", ok && dt < 120.0,
             dt < 120.0 ? "" : "exceeded 120s");
    }

    // 9: structural suites for all seven representatives
    {
        bool ok = true;
        auto K3 = FieldContext::cyclotomic(3);
        std::vector<LambdaAlgebra> reps = {
            LambdaAlgebra(Q, FieldScalar::from_int(Q, 2)),
            LambdaAlgebra(F7, FieldScalar::from_int(F7, 2)),
            LambdaAlgebra(F5, FieldScalar::from_int(F5, 2)),
            LambdaAlgebra(F2, FieldScalar::one(F2)),
            LambdaAlgebra(Q, FieldScalar::from_int(Q, -1)),
            LambdaAlgebra(Q, FieldScalar::one(Q)),
            LambdaAlgebra(Q, FieldScalar::zero(Q)),
            LambdaAlgebra(K3, FieldScalar::zeta(K3)),
        };
        for (const auto& alg : reps) {
            MinimalResolution res(alg);
            ok = ok && res.verify_complex(8).all_passed();
            ok = ok && res.verify_comultiplication(8).all_passed();
            ok = ok && res.verify_minimality(8).all_passed();
        }
        line(9, "complex, comultiplication and minimality to degree 8, all cases", ok);
    }

    // 10: graded centres of the Koszul dual
    {
        bool ok = verify_centre_proposition(LambdaAlgebra(Q, FieldScalar::from_int(Q, 2)), 12)
                      .all_passed();
        ok = ok && verify_centre_proposition(LambdaAlgebra(F2, FieldScalar::one(F2)), 4)
                       .all_passed();
        ok = ok && verify_centre_proposition(LambdaAlgebra(F5, FieldScalar::from_int(F5, 2)), 16)
                       .all_passed();
        ok = ok && verify_centre_proposition(LambdaAlgebra(F7, FieldScalar::from_int(F7, 2)), 12)
                       .all_passed();
        line(10, "graded centres match their closed forms", ok);
    }

    // 11: Hilbert-series comparison everywhere
    {
        bool ok = true;
        ok = ok && compare_dims(make(Q, 2), 10).all_passed();
        ok = ok && compare_dims(make(F7, 2), 14).all_passed();
        ok = ok && compare_dims(make(F5, 2), 13).all_passed();
        ok = ok && compare_dims(make(F2, 1), 8).all_passed();
        ok = ok && compare_dims(make(Q, -1), 8).all_passed();
        ok = ok && compare_dims(make(Q, 1), 8).all_passed();
        ok = ok && compare_dims(make(Q, 0), 8).all_passed();
        line(11, "dimension tables match the closed-form series", ok);
    }

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
