#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>

#include "affex/boundary.hpp"
#include "affex/oracle.hpp"
#include "support.hpp"

using namespace affex;
using oracle::FreeForm;
using oracle::FreeTerm;
using oracle::PointCoords;

namespace {

PointCoords coords(std::initializer_list<long> values) {
    PointCoords out;
    for (long v : values) out.emplace_back(v);
    return out;
}

PointCoords rand_point_coords(gen::Rng& rng, int n, long bound = 20) {
    PointCoords out;
    for (int i = 0; i < n; ++i) out.push_back(gen::rand_rational(rng, bound));
    return out;
}

FreeForm rand_free_form(gen::Rng& rng, int n, int k, int max_terms = 3) {
    std::vector<FreeTerm> terms;
    const int count = static_cast<int>(gen::rand_long(rng, 0, max_terms));
    for (int t = 0; t < count; ++t) {
        FreeTerm term;
        term.coeff = gen::rand_rational(rng, 20);
        for (int i = 0; i < k; ++i) term.points.push_back(rand_point_coords(rng, n));
        terms.push_back(std::move(term));
    }
    return {n, k, std::move(terms)};
}

/// Rewrites f into a different free representative of the same class:
/// permutes tuples (tracking sign), splits coefficients, and appends terms
/// that vanish in the quotient (cancelling pairs and repeated-point tuples).
FreeForm reshuffle(const FreeForm& f, gen::Rng& rng) {
    std::vector<FreeTerm> terms;
    for (const auto& term : f.terms()) {
        FreeTerm shuffled = term;
        int sign = 1;
        for (std::size_t i = shuffled.points.size(); i > 1; --i) {
            const auto j =
                static_cast<std::size_t>(gen::rand_long(rng, 0, static_cast<long>(i) - 1));
            if (j != i - 1) {
                std::swap(shuffled.points[j], shuffled.points[i - 1]);
                sign = -sign;
            }
        }
        if (sign < 0) shuffled.coeff = -shuffled.coeff;

        if (gen::rand_long(rng, 0, 1) == 0) {
            const Rational split = gen::rand_rational(rng, 20);
            FreeTerm rest = shuffled;
            shuffled.coeff -= split;
            rest.coeff = split;
            terms.push_back(std::move(rest));
        }
        terms.push_back(std::move(shuffled));
    }

    FreeTerm cancel;
    cancel.coeff = gen::rand_nonzero_rational(rng, 20);
    for (int i = 0; i < f.degree(); ++i)
        cancel.points.push_back(rand_point_coords(rng, f.dimension()));
    FreeTerm negated = cancel;
    negated.coeff = -negated.coeff;
    terms.push_back(cancel);
    terms.push_back(negated);

    if (f.degree() >= 2) {
        FreeTerm repeated;
        repeated.coeff = gen::rand_nonzero_rational(rng, 20);
        const PointCoords p = rand_point_coords(rng, f.dimension());
        repeated.points.assign(f.degree(), p);
        terms.push_back(std::move(repeated));
    }
    return {f.dimension(), f.degree(), std::move(terms)};
}

}  // namespace

TEST_CASE("direct volume evaluation") {
    const std::array<PointCoords, 4> simplex{coords({0, 0, 0}), coords({1, 0, 0}),
                                             coords({0, 1, 0}), coords({0, 0, 1})};
    CHECK(oracle::simplex_volume(3, simplex) == 1);

    const std::array<PointCoords, 4> swapped{coords({1, 0, 0}), coords({0, 0, 0}),
                                             coords({0, 1, 0}), coords({0, 0, 1})};
    CHECK(oracle::simplex_volume(3, swapped) == -1);

    const std::array<PointCoords, 4> flat{coords({0, 0, 0}), coords({1, 0, 0}),
                                          coords({2, 0, 0}), coords({0, 0, 1})};
    CHECK(oracle::simplex_volume(3, flat) == 0);

    CHECK_THROWS_AS(oracle::simplex_volume(3, std::span<const PointCoords>(
                                                  simplex.data(), 3)),
                    ArityError);
}

TEST_CASE("alternating tuples vanish") {
    const PointCoords a = coords({1, 2, 3});
    const PointCoords b = coords({4, 5, 6});
    const FreeForm sum(3, 2, {{1, {a, b}}, {1, {b, a}}});
    CHECK(oracle::free_equals(sum, FreeForm(3, 2)));
}

TEST_CASE("degree-1 midpoint identity") {
    const FreeForm lhs(3, 1, {{1, {coords({0, 0, 0})}}, {1, {coords({2, 0, 0})}}});
    const FreeForm rhs(3, 1, {{2, {coords({1, 0, 0})}}});
    CHECK(oracle::free_equals(lhs, rhs));
    CHECK_FALSE(oracle::free_equals(lhs, FreeForm(3, 1)));
}

TEST_CASE("collinear tripoint vanishes") {
    const FreeForm tripoint(
        3, 3,
        {{1, {coords({0, 0, 0}), coords({1, 0, 0}), coords({2, 0, 0})}}});
    CHECK(oracle::free_equals(tripoint, FreeForm(3, 3)));
}

TEST_CASE("canonicalize basics") {
    const Frame f3(3);
    const PointCoords a = coords({1, 2, 3});
    const PointCoords b = coords({4, 5, 6});
    const FreeForm pair(3, 2, {{1, {a, b}}});
    CHECK(equals(oracle::canonicalize(pair),
                 wedge(make_point(f3, a), make_point(f3, b))));
    CHECK(oracle::canonicalize(FreeForm(3, 2)).is_zero());
}

TEST_CASE("free equality mirrors canonical equality") {
    gen::Rng rng(53);
    int equal_seen = 0;
    for (int i = 0; i < 120; ++i) {
        const int n = static_cast<int>(gen::rand_long(rng, 2, 3));
        const int k = static_cast<int>(gen::rand_long(rng, 1, n + 1));
        const FreeForm f = rand_free_form(rng, n, k);
        const FreeForm g = (i % 2 == 0) ? reshuffle(f, rng) : rand_free_form(rng, n, k);

        const bool free_eq = oracle::free_equals(f, g);
        const bool canon_eq =
            equals(oracle::canonicalize(f), oracle::canonicalize(g));
        CHECK(free_eq == canon_eq);
        if (free_eq) ++equal_seen;
    }
    CHECK(equal_seen >= 50);  // the reshuffled half must land equal
}

TEST_CASE("free equality is an equivalence relation") {
    gen::Rng rng(59);
    for (int i = 0; i < 25; ++i) {
        const FreeForm a = rand_free_form(rng, 3, 2);
        const FreeForm b = reshuffle(a, rng);
        const FreeForm c = reshuffle(b, rng);
        CHECK(oracle::free_equals(a, a));
        CHECK(oracle::free_equals(a, b));
        CHECK(oracle::free_equals(b, a));
        CHECK(oracle::free_equals(b, c));
        CHECK(oracle::free_equals(a, c));
    }
}

TEST_CASE("vanishing on simplex completions extends to random completions") {
    gen::Rng rng(61);
    for (int i = 0; i < 20; ++i) {
        const int k = static_cast<int>(gen::rand_long(rng, 1, 3));
        const FreeForm f = rand_free_form(rng, 3, k);
        const FreeForm g = reshuffle(f, rng);
        REQUIRE(oracle::free_equals(f, g));

        std::vector<FreeTerm> difference = f.terms();
        for (const auto& term : g.terms())
            difference.push_back({-term.coeff, term.points});

        for (int trial = 0; trial < 5; ++trial) {
            std::vector<PointCoords> completion;
            for (int j = 0; j < 3 + 1 - k; ++j)
                completion.push_back(rand_point_coords(rng, 3));
            Rational total(0);
            for (const auto& term : difference) {
                std::vector<PointCoords> assembled = term.points;
                assembled.insert(assembled.end(), completion.begin(),
                                 completion.end());
                total += term.coeff * oracle::simplex_volume(3, assembled);
            }
            CHECK(total == 0);
        }
    }
}

TEST_CASE("blade-wise boundary agrees with the point-difference expansion") {
    gen::Rng rng(67);
    for (int n : {2, 3}) {
        for (int m = 2; m <= n + 1; ++m) {
            for (int i = 0; i < 20; ++i) {
                std::vector<PointCoords> tuple;
                for (int j = 0; j < m; ++j)
                    tuple.push_back(rand_point_coords(rng, n));

                const FreeForm product(n, m, {{1, tuple}});
                const FreeForm expanded =
                    oracle::point_difference_expansion(n, tuple);
                CHECK(equals(omega(oracle::canonicalize(product)),
                             oracle::canonicalize(expanded)));
            }
        }
    }

    // Degree 1: the boundary of a single point is the scalar 1.
    const Frame f3(3);
    const FreeForm single(3, 1, {{1, {coords({5, -1, 2})}}});
    CHECK(equals(omega(oracle::canonicalize(single)), make_scalar(f3, 1)));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(FreeForm(3, 0), GradeError);
    CHECK_THROWS_AS(FreeForm(3, 5), GradeError);
    CHECK_THROWS_AS(FreeForm(3, 2, {{1, {coords({1, 2, 3})}}}), ArityError);
    CHECK_THROWS_AS(FreeForm(3, 1, {{1, {coords({1, 2})}}}), ArityError);
    CHECK_THROWS_AS(oracle::free_equals(FreeForm(3, 1), FreeForm(3, 2)),
                    GradeError);
    CHECK_THROWS_AS(oracle::free_equals(FreeForm(2, 1), FreeForm(3, 1)),
                    FrameMismatch);
}
