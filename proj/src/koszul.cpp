#include "hhq/koszul.hpp"

#include <algorithm>

namespace hhq {

QuantumMonomial quantum_multiply(const QuantumMonomial& m1, const QuantumMonomial& m2,
                                 const FieldScalar& q) {
    QuantumMonomial out;
    out.a = m1.a + m2.a;
    out.b = m1.b + m2.b;
    out.coeff = m1.coeff * m2.coeff * q.pow(static_cast<long>(m2.a) * m1.b);
    return out;
}

unsigned e_dimension(unsigned n) { return n + 1; }

bool graded_central(unsigned a, unsigned b, const FieldScalar& q) {
    FieldScalar sign = FieldScalar::from_int(q.context(), (a + b) % 2 == 0 ? 1 : -1);
    return q.pow(b) == sign && q.pow(a) == sign;
}

std::vector<std::pair<unsigned, unsigned>> graded_centre_monomials(const LambdaAlgebra& alg,
                                                                   unsigned max_total_degree) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned d = 0; d <= max_total_degree; ++d)
        for (unsigned a = 0; a <= d; ++a)
            if (graded_central(a, d - a, alg.q())) out.emplace_back(a, d - a);
    return out;
}

std::vector<std::pair<unsigned, unsigned>> expected_centre_monomials(const LambdaAlgebra& alg,
                                                                     unsigned max_total_degree) {
    std::vector<std::pair<unsigned, unsigned>> out;
    MultOrder ord = mult_order(alg.q());
    if (ord.kind != OrderKind::Finite) {
        out.emplace_back(0, 0);  // just k
        return out;
    }
    unsigned r = static_cast<unsigned>(ord.value);
    bool char2 = alg.context()->characteristic() == 2;
    bool xy_yr_only = (r % 2 == 0) || char2;  // k[x^r, y^r]
    for (unsigned d = 0; d <= max_total_degree; ++d)
        for (unsigned a = 0; a <= d; ++a) {
            unsigned b = d - a;
            if (a % r != 0 || b % r != 0) continue;
            if (xy_yr_only || ((a + b) / r) % 2 == 0) out.emplace_back(a, b);
        }
    return out;
}

Report verify_centre_proposition(const LambdaAlgebra& alg, unsigned max_total_degree) {
    Report rep;
    auto got = graded_centre_monomials(alg, max_total_degree);
    auto want = expected_centre_monomials(alg, max_total_degree);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    std::string label;
    MultOrder ord = mult_order(alg.q());
    if (ord.kind != OrderKind::Finite)
        label = "k";
    else if (ord.value % 2 == 0 || alg.context()->characteristic() == 2)
        label = "k[x^r, y^r], r = " + std::to_string(ord.value);
    else
        label = "k[x^2r, x^r y^r, y^2r], r = " + std::to_string(ord.value);
    rep.record("graded centre matches " + label, got == want,
               got == want ? "" : "enumerated " + std::to_string(got.size()) +
                                      " monomials, expected " + std::to_string(want.size()));
    return rep;
}

}  // namespace hhq
