#include "hhq/cup.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hhq {

Cochain cup(const MinimalResolution& res, const Cochain& eta, const Cochain& theta) {
    if (!res.is_cocycle(eta) || !res.is_cocycle(theta))
        throw std::invalid_argument("cup product requires cocycle representatives");
    const FieldContextPtr& ctx = res.context();
    const LambdaAlgebra& alg = res.algebra();
    int m = eta.degree(), n = theta.degree();
    Cochain out = Cochain::zero(ctx, m + n);
    for (int i = 0; i <= m + n; ++i) {
        AlgebraElement v = AlgebraElement::zero(ctx);
        for (int j = std::max(0, i - n); j <= std::min(m, i); ++j) {
            const AlgebraElement& a = eta.entries[j];
            const AlgebraElement& b = theta.entries[i - j];
            if (a.is_zero() || b.is_zero()) continue;
            FieldScalar c = res.q().pow(static_cast<long>(j) * (n - i + j));
            v += alg.multiply(a, b).scaled(c);
        }
        out.entries[i] = v;
    }
    return out;
}

std::vector<FieldScalar> reduce_to_basis(const MinimalResolution& res, const Cochain& c) {
    if (!res.is_cocycle(c)) throw std::invalid_argument("reduction requires a cocycle");
    const CohomologySpace& space = res.hh_basis(c.degree());
    auto sol = solve_in_span(space.solve_matrix, c.coordinates());
    if (!sol) throw std::logic_error("cocycle outside ker/im decomposition");
    unsigned b = space.coboundary_basis.cols();
    return {sol->begin() + b, sol->end()};
}

bool reduces_to_zero(const MinimalResolution& res, const Cochain& c) {
    for (const auto& s : reduce_to_basis(res, c))
        if (!s.is_zero()) return false;
    return true;
}

namespace {

std::string coords_to_string(const std::vector<FieldScalar>& v) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i].to_string();
    }
    out << "]";
    return out.str();
}

// Formal relation: sum of integer-coefficient generator monomials.
struct Relation {
    std::string label;
    std::vector<std::pair<long, std::vector<int>>> terms;
};

Cochain unit_cochain(const FieldContextPtr& ctx) {
    Cochain c = Cochain::zero(ctx, 0);
    c.entries[0] = AlgebraElement::one(ctx);
    return c;
}

Cochain eval_monomial(const MinimalResolution& res,
                      const std::vector<PresentationGenerator>& gens,
                      const std::vector<int>& word) {
    Cochain acc = unit_cochain(res.context());
    for (int gi : word) acc = cup(res, acc, gens[gi].rep);
    return acc;
}

struct RelationSet {
    std::vector<Relation> rels;

    void mono(std::string label, std::vector<int> w) {
        rels.push_back({std::move(label), {{1, std::move(w)}}});
    }
    void binom(std::string label, long c1, std::vector<int> w1, long c2, std::vector<int> w2) {
        rels.push_back({std::move(label), {{c1, std::move(w1)}, {c2, std::move(w2)}}});
    }
    void square_zero(const std::vector<PresentationGenerator>& g, int a) {
        mono(g[a].name + "^2", {a, a});
    }
    void kills(const std::vector<PresentationGenerator>& g, int a, int b) {
        mono(g[a].name + "*" + g[b].name, {a, b});
        mono(g[b].name + "*" + g[a].name, {b, a});
    }
    void anticommute(const std::vector<PresentationGenerator>& g, int a, int b) {
        binom(g[a].name + "*" + g[b].name + " + " + g[b].name + "*" + g[a].name, 1, {a, b}, 1,
              {b, a});
    }
    void commute(const std::vector<PresentationGenerator>& g, int a, int b) {
        binom(g[a].name + "*" + g[b].name + " - " + g[b].name + "*" + g[a].name, 1, {a, b}, -1,
              {b, a});
    }
};

}  // namespace

std::vector<PresentationGenerator> presentation_generators(const MinimalResolution& res) {
    const FieldContextPtr& ctx = res.context();
    CaseDescriptor cd = res.algebra().classify();
    auto deg0 = [&](const char* name, unsigned bi) {
        Cochain c = Cochain::zero(ctx, 0);
        c.entries[0] = AlgebraElement::basis(ctx, bi);
        return PresentationGenerator{name, c};
    };
    auto coord = [&](std::string name, int deg, unsigned k, unsigned bi) {
        return PresentationGenerator{std::move(name), Cochain::basis(ctx, deg, k, bi)};
    };
    const unsigned kOne = AlgebraElement::kOne, kX = AlgebraElement::kX,
                   kY = AlgebraElement::kY, kYX = AlgebraElement::kYX;

    std::vector<PresentationGenerator> g;
    switch (cd.tag) {
        case CaseTag::Generic:
        case CaseTag::QZero:
            g = {deg0("z", kYX), coord("u0", 1, 0, kX), coord("u1", 1, 1, kY)};
            break;
        case CaseTag::OddRoot: {
            int r = static_cast<int>(cd.r);
            g = {deg0("z", kYX), coord("u0", 1, 0, kX), coord("u1", 1, 1, kY),
                 coord("w0", 2 * r, 0, kOne), coord("w1", 2 * r, r, kOne),
                 coord("w2", 2 * r, 2 * r, kOne)};
            break;
        }
        case CaseTag::EvenRootOrChar2: {
            int r = static_cast<int>(cd.r);
            g = {deg0("z", kYX), coord("u0", 1, 0, kX), coord("u1", 1, 1, kY),
                 coord("w0", r, 0, kOne), coord("w1", r, r, kOne)};
            break;
        }
        case CaseTag::Char2Q1:
            g = {deg0("X", kX), deg0("Y", kY), coord("w0", 1, 0, kOne), coord("w1", 1, 1, kOne)};
            break;
        case CaseTag::QMinusOne:
            g = {deg0("X", kX),           deg0("Y", kY),           coord("u0", 1, 0, kX),
                 coord("u1", 1, 1, kY),   coord("w0", 2, 0, kOne), coord("w1", 2, 2, kOne)};
            break;
        case CaseTag::QOne:
            g = {deg0("z", kYX),          coord("u0", 1, 0, kX),   coord("u1", 1, 0, kY),
                 coord("u2", 1, 1, kX),   coord("u3", 1, 1, kY),   coord("w0", 2, 0, kOne),
                 coord("w1", 2, 1, kOne), coord("w2", 2, 2, kOne)};
            break;
    }
    return g;
}

namespace {

RelationSet case_relations(const MinimalResolution& res,
                           const std::vector<PresentationGenerator>& g) {
    CaseDescriptor cd = res.algebra().classify();
    RelationSet rs;
    switch (cd.tag) {
        case CaseTag::Generic: {
            // k[z]/(z^2) x_k Wedge(u0, u1)
            rs.square_zero(g, 0);
            rs.kills(g, 0, 1);
            rs.kills(g, 0, 2);
            rs.square_zero(g, 1);
            rs.square_zero(g, 2);
            rs.anticommute(g, 1, 2);
            break;
        }
        case CaseTag::OddRoot: {
            // k[z]/(z^2) x_k (Wedge(u0,u1)[w0,w1,w2]/(w0w2 - w1^2))
            rs.square_zero(g, 0);
            for (int u : {1, 2}) rs.kills(g, 0, u);
            for (int w : {3, 4, 5}) rs.kills(g, 0, w);
            rs.square_zero(g, 1);
            rs.square_zero(g, 2);
            rs.anticommute(g, 1, 2);
            for (int u : {1, 2})
                for (int w : {3, 4, 5}) rs.commute(g, u, w);
            rs.commute(g, 3, 4);
            rs.commute(g, 3, 5);
            rs.commute(g, 4, 5);
            rs.binom("w0*w2 - w1^2", 1, {3, 5}, -1, {4, 4});
            break;
        }
        case CaseTag::EvenRootOrChar2: {
            // k[z]/(z^2) x_k (Wedge(u0,u1)[w0,w1])
            rs.square_zero(g, 0);
            for (int u : {1, 2}) rs.kills(g, 0, u);
            for (int w : {3, 4}) rs.kills(g, 0, w);
            rs.square_zero(g, 1);
            rs.square_zero(g, 2);
            rs.anticommute(g, 1, 2);
            for (int u : {1, 2})
                for (int w : {3, 4}) rs.commute(g, u, w);
            rs.commute(g, 3, 4);
            break;
        }
        case CaseTag::Char2Q1: {
            // Lambda[w0, w1]
            rs.square_zero(g, 0);
            rs.square_zero(g, 1);
            rs.commute(g, 0, 1);
            for (int a : {0, 1})
                for (int w : {2, 3}) rs.commute(g, a, w);
            rs.commute(g, 2, 3);
            break;
        }
        case CaseTag::QMinusOne: {
            // (Lambda (x) Wedge(u0,u1))[w0,w1]/(x u0, y u1, x w0, y w1)
            rs.square_zero(g, 0);
            rs.square_zero(g, 1);
            rs.commute(g, 0, 1);
            rs.square_zero(g, 2);
            rs.square_zero(g, 3);
            rs.anticommute(g, 2, 3);
            rs.kills(g, 0, 2);  // x u0
            rs.kills(g, 1, 3);  // y u1
            rs.kills(g, 0, 4);  // x w0
            rs.kills(g, 1, 5);  // y w1
            rs.commute(g, 0, 3);
            rs.commute(g, 1, 2);
            for (int u : {2, 3})
                for (int w : {4, 5}) rs.commute(g, u, w);
            rs.commute(g, 4, 5);
            break;
        }
        case CaseTag::QOne: {
            // (k[z]/(z^2) x_k Wedge(u0..u3))[w0,w1,w2]/I
            rs.square_zero(g, 0);
            for (int u : {1, 2, 3, 4}) {
                rs.kills(g, 0, u);
                rs.square_zero(g, u);
            }
            for (int a = 1; a <= 4; ++a)
                for (int b = a + 1; b <= 4; ++b) rs.anticommute(g, a, b);
            for (int w : {5, 6, 7}) rs.commute(g, 0, w);
            for (int u : {1, 2, 3, 4})
                for (int w : {5, 6, 7}) rs.commute(g, u, w);
            rs.commute(g, 5, 6);
            rs.commute(g, 5, 7);
            rs.commute(g, 6, 7);
            // ideal I as printed
            rs.mono("u0*u2", {1, 3});
            rs.mono("u1*u3", {2, 4});
            rs.binom("u0*u1 + z*w0", 1, {1, 2}, 1, {0, 5});
            rs.binom("u0*u3 + z*w1", 1, {1, 4}, 1, {0, 6});
            rs.binom("u2*u3 + z*w2", 1, {3, 4}, 1, {0, 7});
            rs.binom("u1*u2 - z*w1", 1, {2, 3}, -1, {0, 6});
            rs.binom("u0*w1 - u2*w0", 1, {1, 6}, -1, {3, 5});
            rs.binom("u1*w1 - u3*w0", 1, {2, 6}, -1, {4, 5});
            rs.binom("u0*w2 - u2*w1", 1, {1, 7}, -1, {3, 6});
            rs.binom("u1*w2 - u3*w1", 1, {2, 7}, -1, {4, 6});
            rs.binom("w0*w2 - w1^2", 1, {5, 7}, -1, {6, 6});
            break;
        }
        case CaseTag::QZero:
            break;  // handled directly in verify_presentation
    }
    return rs;
}

void check_relations(const MinimalResolution& res,
                     const std::vector<PresentationGenerator>& gens, const RelationSet& rs,
                     Report& rep) {
    const FieldContextPtr& ctx = res.context();
    for (const Relation& rel : rs.rels) {
        Cochain sum;
        bool first = true;
        for (const auto& [coeff, word] : rel.terms) {
            Cochain term = eval_monomial(res, gens, word).scaled(FieldScalar::from_int(ctx, coeff));
            sum = first ? term : sum + term;
            first = false;
        }
        auto coords = reduce_to_basis(res, sum);
        bool zero = std::all_of(coords.begin(), coords.end(),
                                [](const FieldScalar& s) { return s.is_zero(); });
        rep.record("relation " + rel.label, zero,
                   zero ? "" : "erratum candidate: reduces to " + coords_to_string(coords));
    }
}

void check_generation(const MinimalResolution& res,
                      const std::vector<PresentationGenerator>& gens, int degree_cap,
                      Report& rep) {
    const FieldContextPtr& ctx = res.context();
    // reduced coordinates of generator monomials, bucketed by degree
    std::vector<std::vector<std::vector<FieldScalar>>> bucket(degree_cap + 1);
    auto record = [&](const Cochain& c) {
        bucket[c.degree()].push_back(reduce_to_basis(res, c));
    };
    // Depth-first over exponent vectors; degree-0 generators are nilpotent so
    // exponent 2 saturates their contribution to the span.
    std::vector<int> degs;
    for (const auto& g : gens) degs.push_back(g.rep.degree());
    std::function<void(std::size_t, Cochain)> walk = [&](std::size_t gi, Cochain acc) {
        if (gi == gens.size()) {
            record(acc);
            return;
        }
        walk(gi + 1, acc);
        int max_exp = degs[gi] == 0 ? 2 : (degree_cap - acc.degree()) / degs[gi];
        Cochain cur = acc;
        for (int e = 1; e <= max_exp; ++e) {
            cur = cup(res, cur, gens[gi].rep);
            if (cur.degree() > degree_cap) break;
            walk(gi + 1, cur);
        }
    };
    walk(0, unit_cochain(ctx));

    for (int n = 0; n <= degree_cap; ++n) {
        unsigned dim = res.hh_dimension(n);
        unsigned spanned = 0;
        if (!bucket[n].empty() && dim > 0)
            spanned = rank(ExactMatrix::from_columns(ctx, dim, bucket[n]));
        bool ok = spanned == dim;
        rep.record("generation in degree " + std::to_string(n), ok,
                   ok ? "" : "monomials span " + std::to_string(spanned) + " of " +
                                 std::to_string(dim) + " dimensions");
    }
}

void verify_qzero_products(const MinimalResolution& res, int degree_cap, Report& rep) {
    const FieldContextPtr& ctx = res.context();
    Cochain z = Cochain::zero(ctx, 0);
    z.entries[0] = AlgebraElement::yx(ctx);
    rep.record("relation z^2", reduces_to_zero(res, cup(res, z, z)));
    // all products of positive-degree classes (and of z) vanish
    for (int m = 0; m <= degree_cap / 2; ++m) {
        for (int n = std::max(1, m); m + n <= degree_cap; ++n) {
            if (m == 0 && n == 0) continue;
            const auto& sm = res.hh_basis(m);
            const auto& sn = res.hh_basis(n);
            bool ok = true;
            for (const auto& a : sm.representatives) {
                // degree-0 classes other than yx act invertibly; only z = yx
                // belongs to the vanishing statement
                if (m == 0 && a.entries[0].coeff(AlgebraElement::kYX).is_zero()) continue;
                for (const auto& b : sn.representatives) {
                    if (!reduces_to_zero(res, cup(res, a, b)) ||
                        !reduces_to_zero(res, cup(res, b, a)))
                        ok = false;
                }
            }
            rep.record("products HH^" + std::to_string(m) + " * HH^" + std::to_string(n) +
                           " vanish",
                       ok, ok ? "" : "nonzero product found");
        }
    }
    for (int n = 0; n <= degree_cap; ++n) {
        // generators v_ij are exactly the chosen basis classes; spanning is
        // by construction, asserted for the report
        rep.record("generation in degree " + std::to_string(n),
                   res.hh_basis(n).dimension == res.hh_dimension(n));
    }
}

}  // namespace

Report verify_presentation(const MinimalResolution& res, int degree_cap) {
    Report rep;
    CaseDescriptor cd = res.algebra().classify();
    if (cd.tag == CaseTag::QZero) {
        verify_qzero_products(res, degree_cap, rep);
        return rep;
    }
    auto gens = presentation_generators(res);
    for (const auto& g : gens)
        rep.record("generator " + g.name + " is a cocycle", res.is_cocycle(g.rep));
    check_relations(res, gens, case_relations(res, gens), rep);
    check_generation(res, gens, degree_cap, rep);
    return rep;
}

std::vector<std::pair<std::string, std::string>> product_table(const MinimalResolution& res,
                                                               int degree_cap) {
    std::vector<std::pair<std::string, std::string>> table;
    auto gens = presentation_generators(res);
    for (const auto& a : gens)
        for (const auto& b : gens) {
            if (a.rep.degree() + b.rep.degree() > degree_cap) continue;
            auto coords = reduce_to_basis(res, cup(res, a.rep, b.rep));
            table.emplace_back(a.name + "*" + b.name, coords_to_string(coords));
        }
    return table;
}

}  // namespace hhq
