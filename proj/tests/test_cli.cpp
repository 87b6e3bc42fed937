#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "relbell/cli.hpp"
#include "relbell/observables.hpp"

using namespace relbell;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args, std::optional<std::string> env = std::nullopt, VerifyHooks hooks = {})
{
    args.insert(args.begin(), "relbell");
    std::ostringstream out, err;
    int const code = cli::run(args, out, err, env, hooks);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(std::string const& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

std::string slurp(std::filesystem::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

WignerRotation flipped_axis(BoostSpec const& b, FourMomentum const& p)
{
    WignerRotation w = little_group_closed(b, p);
    w.axis = -w.axis;
    w.su2 = adjoint(w.su2);
    return w;
}

} // namespace

TEST_CASE("wigner-scan default grid")
{
    Result const r = run_cli({"wigner-scan"});
    REQUIRE(r.code == 0);
    std::vector<std::string> const l = lines(r.out);
    CHECK(l.size() == 301);
    CHECK(l[0] == "beta,e_over_m,omega_rad");
    CHECK(l[1] == "0,10,0");
    CHECK(l[100].rfind("0.98999999999999999,10,", 0) == 0);
    CHECK(l[201] == "0,1000,0");
    CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("wigner-scan two steps")
{
    Result const r = run_cli({"wigner-scan", "--steps", "2", "--beta-max", "0.5", "--e-over-m", "10"});
    REQUIRE(r.code == 0);
    std::vector<std::string> const l = lines(r.out);
    REQUIRE(l.size() == 3);
    CHECK(l[1] == "0,10,0");
    CHECK(l[2].rfind("0.5,10,", 0) == 0);
    CHECK(std::abs(std::stod(l[2].substr(7)) - 0.47556781101712092) < 1e-15);
}

TEST_CASE("chsh-scan case2 round trips through the universal curve")
{
    Result const r = run_cli({"chsh-scan", "--steps", "11"});
    REQUIRE(r.code == 0);
    std::vector<std::string> const l = lines(r.out);
    REQUIRE(l.size() == 12);
    CHECK(l[0] == "beta,chsh,omega_rad");
    for (std::size_t k = 1; k < l.size(); ++k) {
        double const beta = std::stod(l[k].substr(0, l[k].find(',')));
        double const value = std::stod(l[k].substr(l[k].find(',') + 1));
        CHECK(std::abs(value - chsh_universal(beta)) < 1e-12);
        CHECK(l[k].back() == ',');
    }
    CHECK(l[1] == "0,2.8284271247461907,");
    CHECK(l.back().rfind("0.99999999999900002,", 0) == 0);
}

TEST_CASE("chsh-scan case1 on 00 reports omega")
{
    Result const r = run_cli({"chsh-scan", "--state", "00", "--vectors", "case1", "--steps", "3"});
    REQUIRE(r.code == 0);
    std::vector<std::string> const l = lines(r.out);
    REQUIRE(l.size() == 4);
    double const omega = std::stod(l[2].substr(l[2].rfind(',') + 1));
    double const value = std::stod(l[2].substr(4));
    CHECK(std::abs(omega - 0.47556781101712092) < 1e-15);
    CHECK(std::abs(value - chsh_case1_exact(0.5, omega)) < 1e-12);
}

TEST_CASE("csv output is byte-identical across runs and seeds resolve by precedence")
{
    auto const dir = std::filesystem::temp_directory_path();
    auto const a = dir / "relbell_cli_a.csv", b = dir / "relbell_cli_b.csv", c = dir / "relbell_cli_c.csv";
    std::vector<std::string> base{"chsh-scan", "--vectors", "optimal", "--steps", "3", "--restarts", "2", "--tol", "1e-6"};
    auto with = [&](std::vector<std::string> extra) {
        std::vector<std::string> v = base;
        v.insert(v.end(), extra.begin(), extra.end());
        return v;
    };
    REQUIRE(run_cli(with({"--out", a.string(), "--seed", "5"})).code == 0);
    REQUIRE(run_cli(with({"--out", b.string()}), "5").code == 0);
    REQUIRE(run_cli(with({"--out", c.string(), "--seed", "5"}), "9").code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) == slurp(c));
    CHECK_FALSE(slurp(a).empty());
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    std::filesystem::remove(c);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"optimize", "--beta", "1.5"}).code == 2);
    CHECK(run_cli({"wigner-scan", "--steps", "1"}).code == 2);
    CHECK(run_cli({"wigner-scan", "--beta-min", "0.5", "--beta-max", "0.4"}).code == 2);
    CHECK(run_cli({"chsh-scan", "--state", "21"}).code == 2);
    CHECK(run_cli({"chsh-scan", "--vectors", "best"}).code == 2);
    CHECK(run_cli({"chsh-scan", "--e-over-m", "10", "100"}).code == 2);
    CHECK(run_cli({"verify", "--samples", "0"}).code == 2);
    CHECK(run_cli({"verify", "--samples", "1"}, "notanumber").code == 2);
    CHECK(run_cli({"wigner-scan", "--out", "/nonexistent-dir/x.csv"}).code == 2);
    CHECK(run_cli({"eval", "--vectors", "optimal"}).code == 2);
}

TEST_CASE("help exits 0")
{
    Result const r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("chsh-scan") != std::string::npos);
}

TEST_CASE("verify exit codes")
{
    Result const ok = run_cli({"verify", "--samples", "1"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    Result const bad = run_cli({"verify", "--samples", "200"}, std::nullopt, VerifyHooks{&flipped_axis});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL little group: closed form = three-factor oracle") != std::string::npos);
    CHECK(bad.out.find("failing input: sample") != std::string::npos);
}

TEST_CASE("optimize report")
{
    Result const r = run_cli({"optimize", "--state", "10", "--beta", "0", "--seed", "7"});
    REQUIRE(r.code == 0);
    std::string const key = "value=";
    auto const pos = r.out.find("\nvalue=");
    REQUIRE(pos != std::string::npos);
    CHECK(std::abs(std::stod(r.out.substr(pos + 1 + key.size())) - 2.8284271247461903) < 1e-6);
    CHECK(r.out.find("baseline_value=") != std::string::npos);
    CHECK(r.out.find("converged=true") != std::string::npos);
    Result const tight = run_cli({"optimize", "--beta", "0.5", "--restarts", "1", "--tol", "1e-300"});
    CHECK(tight.code == 0);
    CHECK(tight.out.find("warning:") != std::string::npos);
}

TEST_CASE("eval")
{
    Result const r = run_cli({"eval", "--state", "00", "--vectors", "case1", "--beta", "0.6", "--dump"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("omega_rad=0.58568554345715096\n") != std::string::npos);
    CHECK(r.out.find("chsh_case1_closed=2.550838110847232") != std::string::npos);
    CHECK(r.out.find("kin_factor ") != std::string::npos);
}
