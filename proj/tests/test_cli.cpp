#include <catch2/catch_amalgamated.hpp>

#include "cwnet/cli.hpp"

using namespace cwnet;

namespace {
cli_parse_result parse(std::initializer_list<const char*> args) {
    return parse_cli(std::vector<std::string>(args.begin(), args.end()));
}
}  // namespace

TEST_CASE("a full flag set parses into the config") {
    auto r = parse({"--scenario", "recon-smooth", "--params", "sigma2", "--n-min", "2",
                    "--n-max", "5", "--out", "x.csv", "--emit", "table"});
    REQUIRE(r.ok);
    CHECK(r.cfg.scenario == "recon-smooth");
    CHECK(r.cfg.params == "sigma2");
    CHECK(r.cfg.ps.name == "sigma2");
    CHECK(r.cfg.ps.q == 2.0);
    REQUIRE(r.cfg.n_min);
    CHECK(*r.cfg.n_min == 2);
    REQUIRE(r.cfg.n_max);
    CHECK(*r.cfg.n_max == 5);
    REQUIRE(r.cfg.out);
    CHECK(*r.cfg.out == "x.csv");
    REQUIRE(r.cfg.emit);
    CHECK(*r.cfg.emit == emit_kind::table);
    CHECK_FALSE(r.cfg.condition_warning);
}

TEST_CASE("defaults stay unset so the driver can fill them per scenario") {
    auto r = parse({"--scenario", "dam-break-a"});
    REQUIRE(r.ok);
    CHECK(r.cfg.params == "sigma1");
    CHECK_FALSE(r.cfg.n_min);
    CHECK_FALSE(r.cfg.n_max);
    CHECK_FALSE(r.cfg.out);
    CHECK_FALSE(r.cfg.emit);
    CHECK_FALSE(r.cfg.times);
}

TEST_CASE("missing or unknown pieces are usage errors") {
    CHECK_FALSE(parse({}).ok);
    CHECK_FALSE(parse({"--scenario"}).ok);                           // dangling value
    CHECK_FALSE(parse({"--scenario", "no-such"}).ok);                // unknown scenario
    CHECK_FALSE(parse({"--scenario", "recon-smooth", "--x"}).ok);    // unknown flag
    CHECK_FALSE(parse({"--scenario", "recon-smooth", "--params", "sigma9"}).ok);
    CHECK_FALSE(parse({"--n-max", "3"}).ok);                         // scenario required
}

TEST_CASE("level bounds are validated") {
    CHECK_FALSE(parse({"--scenario", "recon-smooth", "--n-min", "7", "--n-max", "3"}).ok);
    CHECK_FALSE(parse({"--scenario", "recon-smooth", "--n-min", "-1"}).ok);
    CHECK_FALSE(parse({"--scenario", "recon-smooth", "--n-min", "two"}).ok);
    CHECK(parse({"--scenario", "recon-smooth", "--n-min", "3", "--n-max", "3"}).ok);
}

TEST_CASE("times must be a strictly increasing list") {
    auto r = parse({"--scenario", "dam-break-a", "--times", "0.35,0.6"});
    REQUIRE(r.ok);
    REQUIRE(r.cfg.times);
    CHECK(r.cfg.times->size() == 2);
    CHECK((*r.cfg.times)[0] == Catch::Approx(0.35));
    CHECK((*r.cfg.times)[1] == Catch::Approx(0.6));

    CHECK_FALSE(parse({"--scenario", "dam-break-a", "--times", "0.6,0.35"}).ok);
    CHECK_FALSE(parse({"--scenario", "dam-break-a", "--times", "0.1,,0.2"}).ok);
    CHECK_FALSE(parse({"--scenario", "dam-break-a", "--times", "abc"}).ok);
}

TEST_CASE("emit kind must match the scenario") {
    CHECK_FALSE(parse({"--scenario", "traffic-jam", "--emit", "table"}).ok);
    CHECK_FALSE(parse({"--scenario", "recon-smooth", "--emit", "snapshot"}).ok);
    CHECK(parse({"--scenario", "traffic-jam", "--emit", "snapshot"}).ok);
    CHECK_FALSE(parse({"--scenario", "traffic-jam", "--emit", "csv"}).ok);
}

TEST_CASE("custom parameters are only reachable through --params custom") {
    CHECK_FALSE(parse({"--scenario", "recon-smooth", "--q", "1.5"}).ok);
    CHECK_FALSE(parse({"--scenario", "recon-smooth", "--params", "sigma1", "--K0", "2"}).ok);

    auto r = parse({"--scenario", "recon-smooth", "--params", "custom", "--q", "1.5",
                    "--gamma0", "1.5", "--K1", "0.5"});
    REQUIRE(r.ok);
    CHECK(r.cfg.ps.name == "custom");
    CHECK(r.cfg.ps.q == Catch::Approx(1.5));
    CHECK(r.cfg.ps.gamma0 == Catch::Approx(1.5));
    CHECK(r.cfg.ps.K1 == Catch::Approx(0.5));
}

TEST_CASE("violated order conditions warn instead of failing") {
    // gamma0 below q breaks the smooth-case requirement
    auto r = parse({"--scenario", "recon-smooth", "--params", "custom", "--q", "2",
                    "--gamma0", "1"});
    REQUIRE(r.ok);
    CHECK(r.cfg.condition_warning);

    // defaults plus q = 1 satisfy all three conditions
    auto ok = parse({"--scenario", "recon-smooth", "--params", "custom", "--q", "1"});
    REQUIRE(ok.ok);
    CHECK_FALSE(ok.cfg.condition_warning);

    // constant epsilon cannot satisfy the h-scaling conditions
    auto eps = parse({"--scenario", "recon-smooth", "--params", "custom", "--eps", "1e-3"});
    REQUIRE(eps.ok);
    CHECK(eps.cfg.ps.eps_const);
    CHECK(eps.cfg.ps.eps_value == Catch::Approx(1e-3));
    CHECK(eps.cfg.condition_warning);
}

TEST_CASE("the weight power is a positive integer") {
    CHECK_FALSE(parse({"--scenario", "recon-smooth", "--params", "custom", "--p", "0"}).ok);
    CHECK_FALSE(parse({"--scenario", "recon-smooth", "--params", "custom", "--p", "1.5"}).ok);
    auto r = parse({"--scenario", "recon-smooth", "--params", "custom", "--p", "3"});
    REQUIRE(r.ok);
    CHECK(r.cfg.ps.p == 3);
}

TEST_CASE("usage text names every flag") {
    const std::string u = cli_usage();
    for (const char* flag : {"--scenario", "--params", "--n-min", "--n-max", "--out",
                             "--emit", "--times", "--K0", "--gamma1", "--eps"})
        CHECK(u.find(flag) != std::string::npos);
}
