#include <catch2/catch_amalgamated.hpp>

#include <hessex/relations.hpp>

using namespace hessex;

static MultiPoly P(const std::string& text, int nvars) { return parse_poly(text, nvars); }

namespace {

// "4123 = 3142 - 2341" or "4231 = 0", coefficients as p/q or integers
SolvedRow parse_row(const std::string& text) {
    auto eq = text.find('=');
    REQUIRE(eq != std::string::npos);
    std::string lhs = text.substr(0, eq);
    lhs.erase(std::remove(lhs.begin(), lhs.end(), ' '), lhs.end());
    SolvedRow row{parse_permutation(lhs), {}};
    std::istringstream is(text.substr(eq + 1));
    std::string tok;
    Rational sign = 1;
    while (is >> tok) {
        if (tok == "+") { sign = 1; continue; }
        if (tok == "-") { sign = -1; continue; }
        Rational coeff = 1;
        std::string perm = tok;
        auto star = tok.find('*');
        if (star != std::string::npos) {
            coeff = parse_rational(tok.substr(0, star));
            perm = tok.substr(star + 1);
        }
        if (perm == "0") continue;
        row.rhs.add(parse_permutation(perm), sign * coeff);
        sign = 1;
    }
    return row;
}

void check_solved_match(const std::vector<SolvedRow>& got,
                        const std::vector<std::string>& expect_rows) {
    REQUIRE(got.size() == expect_rows.size());
    std::map<Permutation, SchubertExpr> by_lead;
    for (auto& row : got) by_lead.emplace(row.lead, row.rhs);
    for (auto& text : expect_rows) {
        SolvedRow want = parse_row(text);
        auto it = by_lead.find(want.lead);
        REQUIRE(it != by_lead.end());
        CHECK(it->second == want.rhs);
    }
}

} // namespace

TEST_CASE("kernel bases") {
    // Example 7.12, first step: corner (4,1) of h = (4,4,4,4)
    HessFunc flag = parse_hess("4,4,4,4");
    auto kb = kernel_basis(flag, {4, 1}, 1);
    CHECK(kb.size() == 6);
    std::set<std::string> got;
    for (auto& p : kb) got.insert(to_string(p));
    MultiPoly f31 = f_poly(4, 3, 1);
    std::set<std::string> expect;
    for (auto& m : {"1", "x2", "x3", "x2^2", "x2*x3", "x2^2*x3"})
        expect.insert(to_string(P(m, 4) * f31));
    CHECK(got == expect);

    // second step: corner (3,1) of (3,4,4,4) with f_{2,1} times the same monomials
    auto kb2 = kernel_basis(parse_hess("3,4,4,4"), {3, 1}, 1);
    CHECK(kb2.size() == 6);
    MultiPoly f21 = f_poly(4, 2, 1);
    std::set<std::string> got2, expect2;
    for (auto& p : kb2) got2.insert(to_string(p));
    for (auto& m : {"1", "x2", "x3", "x2^2", "x2*x3", "x2^2*x3"})
        expect2.insert(to_string(P(m, 4) * f21));
    CHECK(got2 == expect2);

    // Prop 7.8 base case: h=(2,2), corner (2,1), s=2 gives {g_{1,1}} = {1}
    auto kb3 = kernel_basis(parse_hess("2,2"), {2, 1}, 2);
    REQUIRE(kb3.size() == 1);
    CHECK(kb3[0] == MultiPoly::constant(2, 1));

    CHECK_THROWS_AS(kernel_basis(flag, {3, 1}, 1), DomainError);  // not a corner
    CHECK_THROWS_AS(kernel_basis(parse_hess("1,2"), {1, 1}, 1), DomainError);  // i = j
}

TEST_CASE("corner chains") {
    auto chain = corner_chain(parse_hess("2,4,4,4"));
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].first == parse_hess("4,4,4,4"));
    CHECK(chain[0].second == Corner{4, 1});
    CHECK(chain[1].first == parse_hess("3,4,4,4"));
    CHECK(chain[1].second == Corner{3, 1});

    CHECK(corner_chain(parse_hess("4,4,4,4")).empty());

    // chain length = number of removed boxes
    for (auto& h : enumerate_hess(4))
        CHECK(static_cast<int>(corner_chain(h).size()) == box_count(parse_hess("4,4,4,4")) - box_count(h));
}

TEST_CASE("derived relations reproduce Example 7.12 for h1 = (3,4,4,4)") {
    auto rel = derive_relations(parse_hess("3,4,4,4"));
    CHECK(rel.relations.size() == 6);
    check_solved_match(rel.solved, {
        "4123 = 3142 - 2341",
        "4213 = 3412 + 2*3241 - 2431",
        "4132 = 3241",
        "4312 = 3421",
        "4231 = 0",
        "4321 = 0",
    });
}

TEST_CASE("derived relations reproduce Example 7.12 for h = (2,4,4,4)") {
    auto rel = derive_relations(parse_hess("2,4,4,4"));
    CHECK(rel.relations.size() == 12);
    check_solved_match(rel.solved, {
        "3124 = 2314",
        "4123 = 1/2*2413",
        "3214 = 1/2*2413",
        "3142 = 1/2*2413 + 2341",
        "4213 = 0",
        "3241 = 1/2*2431",
        "4132 = 1/2*2431",
        "3412 = 0",
        "4312 = 0",
        "3421 = 0",
        "4231 = 0",
        "4321 = 0",
    });
}

TEST_CASE("flag variety has no relations") {
    auto rel = derive_relations(parse_hess("4,4,4,4"));
    CHECK(rel.relations.empty());
    CHECK(rel.solved.empty());
}

TEST_CASE("derived relations match the direct kernel oracle") {
    for (int n = 2; n <= 4; ++n)
        for (auto& h : enumerate_hess(n)) {
            auto derived = derive_relations(h);
            auto oracle = relation_solved_form_oracle(h);
            REQUIRE(derived.solved.size() == oracle.size());
            for (std::size_t k = 0; k < oracle.size(); ++k) {
                CHECK(derived.solved[k].lead == oracle[k].lead);
                CHECK(derived.solved[k].rhs == oracle[k].rhs);
            }
        }
}

TEST_CASE("solved form is independent of the corner-removal chain") {
    // enumerate every chain from (4,4,4,4) down to h and compare solved forms
    auto all_chains = [](const HessFunc& target) {
        std::vector<std::vector<std::pair<HessFunc, Corner>>> out;
        std::vector<std::pair<HessFunc, Corner>> cur;
        HessFunc start = HessFunc::validate(std::vector<int>(target.n(), target.n()));
        std::function<void(HessFunc)> rec = [&](HessFunc hk) {
            if (hk == target) {
                out.push_back(cur);
                return;
            }
            for (auto& c : corners(hk)) {
                if (c.i <= c.j || hk(c.j) <= target(c.j)) continue;
                cur.emplace_back(hk, c);
                rec(remove_corner(hk, c));
                cur.pop_back();
            }
        };
        rec(start);
        return out;
    };
    for (auto hv : {std::vector<int>{2, 4, 4, 4}, {2, 3, 4, 4}, {3, 3, 4, 4}}) {
        HessFunc h = HessFunc::validate(hv);
        auto chains = all_chains(h);
        REQUIRE(!chains.empty());
        auto reference = derive_relations(h).solved;
        for (auto& chain : chains) {
            auto got = derive_relations_with_chain(h, chain).solved;
            REQUIRE(got.size() == reference.size());
            for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == reference[k]);
        }
    }
}

TEST_CASE("question 7.1 checks") {
    for (auto& h : enumerate_hess(4)) CHECK(question71_check(h).is_basis);

    // Peterson case h = (2,3,...,n,n) for n <= 5
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> pv(n);
        for (int i = 1; i <= n; ++i) pv[i - 1] = std::min(i + 1, n);
        auto rep = question71_check(HessFunc::validate(pv));
        CHECK(rep.is_basis);
        CHECK(rep.admissible_count == rep.ring_dim);
    }

    // flag: all of S_n
    auto flag = question71_check(parse_hess("4,4,4,4"));
    CHECK(flag.is_basis);
    CHECK(flag.admissible_count == 24);
}
