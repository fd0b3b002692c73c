#include <catch2/catch_amalgamated.hpp>

#include <hessex/quotient.hpp>
#include <hessex/schubert.hpp>

using namespace hessex;

static MultiPoly P(const std::string& text, int nvars) { return parse_poly(text, nvars); }

TEST_CASE("permutations") {
    Permutation w = parse_permutation("4123");
    CHECK(w.length() == 3);
    CHECK(Permutation::identity(4).length() == 0);
    CHECK(Permutation::longest(4).length() == 6);
    CHECK_THROWS_AS(parse_permutation("4124"), DomainError);
    CHECK(to_string(w) == "4123");
    CHECK(parse_permutation("4,1,2,3") == w);

    // pivot priority: length descending, then one-line lex descending
    CHECK(schubert_pivot_greater(parse_permutation("4123"), parse_permutation("3142")));
    CHECK(schubert_pivot_greater(parse_permutation("4213"), parse_permutation("4123")));
}

TEST_CASE("Schubert polynomials") {
    CHECK(schubert_poly(parse_permutation("321")) == P("x1^2*x2", 3));
    CHECK(schubert_poly(Permutation::identity(4)) == P("1", 4));
    CHECK(schubert_poly(parse_permutation("2134")) == P("x1", 4));
    CHECK(schubert_poly(parse_permutation("2134")) == f_poly(4, 1, 1));
    CHECK(schubert_poly(parse_permutation("132")) == P("x1+x2", 3));

    // independence of the reduced path
    for (int n = 2; n <= 5; ++n)
        for (auto& w : all_permutations(n))
            CHECK(schubert_poly(w) == schubert_poly_last_ascent(w));
}

TEST_CASE("build_w_k") {
    CHECK(build_w_k(4, 1, 1, 4) == parse_permutation("4123"));
    CHECK(build_w_k(4, 1, 2, 4) == parse_permutation("3142"));
    CHECK(build_w_k(4, 1, 3, 4) == parse_permutation("2341"));
    CHECK(build_w_k(2, 1, 1, 2) == parse_permutation("21"));
    CHECK_THROWS_AS(build_w_k(4, 1, 4, 4), DomainError);
    CHECK_THROWS_AS(build_w_k(1, 1, 1, 4), DomainError);

    // one-line description agrees with the product of simple transpositions
    for (int n = 2; n <= 6; ++n)
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j)
                for (int k = 1; k <= i - j; ++k)
                    CHECK(build_w_k(i, j, k, n) == build_w_k_by_product(i, j, k, n));

    // fixed outside [j,i], w(j) = i-k+1, w(i) = i-k, increasing in between
    Permutation w = build_w_k(5, 2, 2, 6);
    CHECK(w(1) == 1);
    CHECK(w(6) == 6);
    CHECK(w(2) == 4);
    CHECK(w(5) == 3);
    CHECK(w(3) < w(4));
}

TEST_CASE("alternating decomposition equals f_{i-1,j}") {
    // Example 7.12 identities
    SchubertExpr f31 = alt_decomposition(4, 1, 4);
    SchubertExpr expect31;
    expect31.add(parse_permutation("4123"), 1);
    expect31.add(parse_permutation("3142"), -1);
    expect31.add(parse_permutation("2341"), 1);
    CHECK(f31 == expect31);
    CHECK(to_poly(f31, 4) == f_poly(4, 3, 1));

    SchubertExpr f21 = alt_decomposition(3, 1, 4);
    SchubertExpr expect21;
    expect21.add(parse_permutation("3124"), 1);
    expect21.add(parse_permutation("2314"), -1);
    CHECK(f21 == expect21);
    CHECK(to_poly(f21, 4) == f_poly(4, 2, 1));

    // one-term case: f_{1,1} = S_{21}
    CHECK(to_poly(alt_decomposition(2, 1, 2), 2) == P("x1", 2));

    // exact identity for all 1 <= j < i <= n <= 6
    for (int n = 2; n <= 6; ++n)
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j)
                CHECK(to_poly(alt_decomposition(i, j, n), n) == f_poly(n, i - 1, j));
}

TEST_CASE("Monk expansion") {
    // x1 * sigma_e = sigma_{2134}
    SchubertExpr e1 = monk_expand(1, Permutation::identity(4));
    SchubertExpr expect1;
    expect1.add(parse_permutation("2134"), 1);
    CHECK(e1 == expect1);

    // x2 * sigma_{2134} = sigma_{2314}
    SchubertExpr e2 = monk_expand(2, parse_permutation("2134"));
    SchubertExpr expect2;
    expect2.add(parse_permutation("2314"), 1);
    CHECK(e2 == expect2);

    // x_r * sigma_{w0} = 0: no admissible interchange stays in S_n
    for (int r = 1; r <= 3; ++r) CHECK(monk_expand(r, Permutation::longest(4)).is_zero());

    CHECK_THROWS_AS(monk_expand(4, Permutation::identity(4)), DomainError);
    CHECK_THROWS_AS(monk_expand(0, Permutation::identity(4)), DomainError);

    // against the flag-quotient oracle, exhaustively for n <= 4
    for (int n = 2; n <= 4; ++n) {
        QuotientRing ring(HessFunc::validate(std::vector<int>(n, n)), 1);
        for (auto& w : all_permutations(n))
            for (int r = 1; r <= n - 1; ++r) {
                ClassVector lhs = ring.normal_form(MultiPoly::variable(n, r) * schubert_poly(w));
                MultiPoly rhs(n);
                for (auto& [v, c] : monk_expand(r, w).terms) rhs = rhs + c * schubert_poly(v);
                CHECK(lhs == ring.normal_form(rhs));
            }
    }
}
