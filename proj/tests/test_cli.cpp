#include <catch2/catch_amalgamated.hpp>

#include <hessex/cli.hpp>

#include <sstream>

using namespace hessex;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("gen prints canonical polynomials") {
    auto r = run_cli({"gen", "--n", "4", "--kind", "f", "--i", "3", "--j", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == to_string(f_poly(4, 3, 1)) + "\n");

    auto g = run_cli({"gen", "--n", "3", "--kind", "g", "--i", "3", "--j", "3"});
    CHECK(g.code == 0);
    CHECK(g.out == "3\n");
}

TEST_CASE("poincare text output shows the factored form and all methods") {
    auto r = run_cli({"poincare", "--h", "2,3,4,4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(1+t)^3 = 1 + 3t + 3t^2 + t^3") != std::string::npos);
    CHECK(r.out.find("inductive: 1 + 3t + 3t^2 + t^3") != std::string::npos);
    CHECK(r.out.find("rank oracle: 1 + 3t + 3t^2 + t^3") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("poincare json output carries all three series") {
    auto r = run_cli({"poincare", "--h", "2,3,4,4", "--json"});
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    json expect = {1, 3, 3, 1};
    CHECK(doc["closed"] == expect);
    CHECK(doc["inductive"] == expect);
    CHECK(doc["oracle"] == expect);
    CHECK(doc["summands"].size() == 4);
}

TEST_CASE("basis json lists exponent vectors") {
    auto r = run_cli({"basis", "--h", "2,4,4,4", "--json"});
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["basis"].size() == 12);
}

TEST_CASE("nf reduces modulo the ideal") {
    auto r = run_cli({"nf", "--h", "2,3,3", "--poly", "x1^2"});
    CHECK(r.code == 0);
    CHECK(r.out == "x1*x2\n");

    auto z = run_cli({"nf", "--h", "2,3,3", "--poly", "4*x1*x2+2*x2^2"});
    CHECK(z.code == 0);
    CHECK(z.out == "0\n");
}

TEST_CASE("relations text output") {
    auto r = run_cli({"relations", "--h", "2,4,4,4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("S[4123] = 1/2*S[2413]") != std::string::npos);
    CHECK(r.out.find("S[4321] = 0") != std::string::npos);

    auto flag = run_cli({"relations", "--h", "4,4,4,4"});
    CHECK(flag.out.find("no relations") != std::string::npos);
}

TEST_CASE("exit codes") {
    // domain error: invalid Hessenberg function
    auto bad_h = run_cli({"poincare", "--h", "2,1,3"});
    CHECK(bad_h.code == 1);
    CHECK(bad_h.err.find("h(i+1) >= h(i)") != std::string::npos);

    // domain error: zero ring
    auto zero_ring = run_cli({"basis", "--h", "1,2,3", "--s", "2"});
    CHECK(zero_ring.code == 1);
    CHECK(zero_ring.err.find("zero ring") != std::string::npos);

    // domain error: non-corner
    auto bad_corner = run_cli({"kernel", "--h", "3,4,4,4", "--corner", "4,1", "--s", "1"});
    CHECK(bad_corner.code == 1);

    // usage error: unknown flag
    auto usage = run_cli({"poincare", "--zzz", "1"});
    CHECK(usage.code == 2);

    // usage error: unknown subcommand
    auto unknown = run_cli({"frobnicate"});
    CHECK(unknown.code == 2);

    // flag-only operation on non-flag h
    auto nonflag = run_cli({"hess-schubert", "--n", "4", "--w", "2314"});
    CHECK(nonflag.code == 0);
    auto err_hs = run_cli({"nf", "--h", "2,2", "--poly", "x3"});
    CHECK(err_hs.code == 1);
}

TEST_CASE("json polynomial output round-trips") {
    auto r = run_cli({"gen", "--n", "3", "--kind", "f", "--i", "3", "--j", "2", "--json"});
    CHECK(r.code == 0);
    MultiPoly back = poly_from_json(json::parse(r.out));
    CHECK(back == f_poly(3, 3, 2));
}

TEST_CASE("determinism across runs") {
    auto a = run_cli({"relations", "--h", "2,4,4,4", "--json"});
    auto b = run_cli({"relations", "--h", "2,4,4,4", "--json"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

TEST_CASE("--out writes the payload to a file") {
    std::string path = "/tmp/hessex_cli_test_out.json";
    auto r = run_cli({"hilbert", "--h", "2,4,4,4", "--json", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    json doc = json::parse(f);
    json expect = {1, 3, 4, 3, 1};
    CHECK(doc == expect);
}

TEST_CASE("question71 subcommand") {
    auto r = run_cli({"question71", "--h", "2,3,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("basis: yes") != std::string::npos);
    CHECK(r.out.find("all true") != std::string::npos);
}

TEST_CASE("monk and alt-decomp subcommands") {
    auto m = run_cli({"monk", "--r", "1", "--w", "1234"});
    CHECK(m.code == 0);
    CHECK(m.out.find("S[2134]") != std::string::npos);

    auto a = run_cli({"alt-decomp", "--i", "4", "--j", "1", "--n", "4"});
    CHECK(a.code == 0);
    CHECK(a.out.find("f_{3,1} = S[4123] - S[3142] + S[2341]") != std::string::npos);
}

TEST_CASE("remaining subcommands smoke-test cleanly") {
    auto beta = run_cli({"beta", "--h", "2,2"});
    CHECK(beta.code == 0);
    CHECK(beta.out == "1/2*x1-1/2*x2\n");

    auto pair = run_cli({"pair", "--h", "2,4,4,4", "--d", "2"});
    CHECK(pair.code == 0);
    CHECK(pair.out.find("nonsingular") != std::string::npos);

    auto pair_json = run_cli({"pair", "--h", "2,2", "--d", "1", "--json"});
    CHECK(pair_json.code == 0);
    CHECK(json::parse(pair_json.out) == json::parse("[[\"1\"]]"));

    auto iso = run_cli({"iso-check", "--h", "2,3,4,4", "--s", "2"});
    CHECK(iso.code == 0);
    CHECK(iso.out.find("iso-check OK") != std::string::npos);

    auto filt = run_cli({"filtration", "--h", "2,3,4,4"});
    CHECK(filt.code == 0);
    CHECK(filt.out.find("filtration OK") != std::string::npos);
    CHECK(filt.out.find("dim A_s=8") != std::string::npos);

    auto reg = run_cli({"check-regular", "--h", "2,3,3", "--s", "1"});
    CHECK(reg.code == 0);
    CHECK(reg.out.find("regular sequence") == 0);

    auto schub = run_cli({"schubert", "--w", "321"});
    CHECK(schub.code == 0);
    CHECK(schub.out == "x1^2*x2\n");

    auto kern = run_cli({"kernel", "--h", "4,4,4,4", "--corner", "4,1", "--s", "1"});
    CHECK(kern.code == 0);
    CHECK(std::count(kern.out.begin(), kern.out.end(), '\n') == 6);

    auto hil = run_cli({"hilbert", "--h", "2,4,4,4"});
    CHECK(hil.code == 0);
    CHECK(hil.out == "1 + 3t + 4t^2 + 3t^3 + t^4\n");

    auto hs = run_cli({"hess-schubert", "--n", "4", "--w", "2314", "--json"});
    CHECK(hs.code == 0);
    CHECK(poly_from_json(json::parse(hs.out)) == schubert_poly(parse_permutation("2314")));
}

TEST_CASE("hessenberg JSON round-trip") {
    HessFunc h = parse_hess("2,4,4,5,6,6");
    CHECK(hess_from_json(to_json(h)) == h);
    CHECK(to_json(h)["n"] == 6);
}

TEST_CASE("verify subcommand at n = 1 passes quickly") {
    auto r = run_cli({"verify", "--max-n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("suite polycore") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}
