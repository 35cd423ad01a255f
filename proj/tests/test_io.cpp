#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "spinchain/io.hpp"

using namespace spinchain;

TEST_CASE("angle grammar") {
    const double pi = kGateTime;
    CHECK(io::parse_angle("pi") == pi);
    CHECK(io::parse_angle("-pi") == -pi);
    CHECK(io::parse_angle("+pi") == pi);
    CHECK(io::parse_angle("2pi") == doctest::Approx(2 * pi));
    CHECK(io::parse_angle("0.3pi") == doctest::Approx(0.3 * pi));
    CHECK(io::parse_angle("pi/2") == doctest::Approx(pi / 2));
    CHECK(io::parse_angle("2pi/5") == doctest::Approx(2 * pi / 5));
    CHECK(io::parse_angle(" 1.5 ") == 1.5);
    CHECK(io::parse_angle("0") == 0.0);
    CHECK(io::parse_angle("-0.25") == -0.25);

    CHECK_THROWS_AS(io::parse_angle(""), ConfigError);
    CHECK_THROWS_AS(io::parse_angle("pie"), ConfigError);
    CHECK_THROWS_AS(io::parse_angle("pi/0"), ConfigError);
    CHECK_THROWS_AS(io::parse_angle("2x"), ConfigError);
    CHECK_THROWS_AS(io::parse_angle("pi/"), ConfigError);
}

TEST_CASE("double formatting round-trips") {
    for (double v : {0.0, 1.0, -0.1, kGateTime, 0.993881967623130, 1e-17, -3.5e300}) {
        const std::string s = io::format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
        CHECK(s.find(',') == std::string::npos);
    }
}

TEST_CASE("companion mean path derivation") {
    CHECK(io::companion_mean_path("out.csv") == "out_mean.csv");
    CHECK(io::companion_mean_path("dir/out.json") == "dir/out_mean.json");
    CHECK(io::companion_mean_path("noext") == "noext_mean");
    CHECK(io::companion_mean_path("dir.v/plain") == "dir.v/plain_mean");
}

TEST_CASE("trace csv layout") {
    FidelityTrace trace;
    trace.times = {0.0, 0.5, 1.0};
    trace.values = {1.0, 0.25, 0.75};
    const io::Metadata meta{{"command", "trace"}, {"n", "2"}};

    std::ostringstream os;
    io::write_trace_csv(os, trace, meta);
    CHECK(os.str() ==
          "# command=trace\n"
          "# n=2\n"
          "t,F\n"
          "0,1\n"
          "0.5,0.25\n"
          "1,0.75\n");
}

TEST_CASE("csv output is deterministic") {
    SweepResult sweep;
    sweep.times = {0.0, kGateTime};
    sweep.mean_f = {1.0, 0.99848};
    sweep.min_f = {1.0, 0.9929};
    sweep.max_f = {1.0, 1.0};
    const io::Metadata meta{{"command", "sweep"}};

    std::ostringstream a, b;
    io::write_sweep_csv(a, sweep, meta);
    io::write_sweep_csv(b, sweep, meta);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("t,mean_F,min_F,max_F") != std::string::npos);
}

TEST_CASE("disorder csv and companion layout") {
    DisorderSweepResult run;
    run.mode = DisorderMode::kJoint;
    run.deltas = {0.0, 0.01};
    run.triples = {GateAngles{0.1, 0.2, 0.3}};
    run.per_point = {{0.999}, {0.998}};
    run.mean_f = {0.999, 0.998};
    const io::Metadata meta{{"command", "disorder"}};

    std::ostringstream os;
    io::write_disorder_csv(os, {run}, meta);
    const std::string text = os.str();
    CHECK(text.find("scenario,delta,triple_index,varphi,omega,phi,F") != std::string::npos);
    CHECK(text.find("joint,0,0,") != std::string::npos);
    CHECK(text.find("joint,0.01,0,") != std::string::npos);

    std::ostringstream mos;
    io::write_disorder_mean_csv(mos, {run}, meta);
    CHECK(mos.str().find("scenario,delta,mean_F") != std::string::npos);
    CHECK(mos.str().find("joint,0.01,0.998") != std::string::npos);
}

TEST_CASE("json mirrors the records and metadata") {
    FidelityTrace trace;
    trace.times = {0.0, 1.0};
    trace.values = {1.0, 0.5};
    std::ostringstream os;
    io::write_trace_json(os, trace, {{"command", "trace"}, {"n", "2"}});
    const std::string text = os.str();
    CHECK(text.find("\"metadata\"") != std::string::npos);
    CHECK(text.find("\"command\": \"trace\"") != std::string::npos);
    CHECK(text.find("\"records\"") != std::string::npos);
    CHECK(text.find("\"F\": 0.5") != std::string::npos);
}
