#include "accelramsey/config.hpp"
#include "accelramsey/error.hpp"

#include <doctest.h>

#include <sstream>

using namespace accelramsey;

namespace {

RunConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

ErrorKind kind_of(const std::string& text) {
    try {
        parse(text).validate();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::domain;
}

}  // namespace

TEST_CASE("defaults") {
    const RunConfig c;
    CHECK(c.grid.size() == 60);
    CHECK(c.grid.front() == 1e16);
    CHECK(c.grid.back() == 1e18);
    CHECK(c.params.lambda_k == 5e7);
    CHECK(c.output.precision == 12);
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("grid parser") {
    const GridSpec log = parse_grid("1e16:1e18:3:log");
    const auto v = log.values();
    REQUIRE(v.size() == 3);
    CHECK(v[1] == doctest::Approx(1e17).epsilon(1e-14));
    const auto lin = parse_grid("0:1:5:lin").values();
    CHECK(lin[2] == doctest::Approx(0.5));
    CHECK_THROWS_AS(parse_grid("1:2:3"), Error);
    CHECK_THROWS_AS(parse_grid("1:2:3:cubic"), Error);
    CHECK_THROWS_AS(parse_grid("a:2:3:log"), Error);
    CHECK_THROWS_AS(parse_grid("0:2:3:log").values(), Error);
    CHECK_THROWS_AS(parse_grid("1:2:0:log").values(), Error);
}

TEST_CASE("flat key = value documents") {
    const RunConfig c = parse(
        "# comment\n"
        "omega = 2e9   # trailing comment\n"
        "window_T = inf\n"
        "freq_convention = hertz\n"
        "detuning = signed\n"
        "grid_values = 1e17, 2e17, 3e17\n"
        "\n"
        "precision = 8\n"
        "format = json\n");
    CHECK(c.params.omega == 2e9);
    CHECK(c.params.window_T.is_infinite());
    CHECK(c.conventions.freq == FrequencyConvention::hertz);
    CHECK(c.conventions.detuning == DetuningConvention::keep_sign);
    CHECK(c.grid.size() == 3);
    CHECK(c.output.precision == 8);
    CHECK(c.output.format == OutputFormat::json);
}

TEST_CASE("unknown keys carry the line number") {
    try {
        parse("omega = 1e9\nkapa = 2e8\n");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::config);
        CHECK(std::string(e.what()).find(":2:") != std::string::npos);
        CHECK(std::string(e.what()).find("kapa") != std::string::npos);
    }
}

TEST_CASE("validation errors") {
    CHECK(kind_of("grid_values = 3e17, 2e17\n") == ErrorKind::config);
    CHECK(kind_of("grid_values = 1e17, 1e17\n") == ErrorKind::config);
    CHECK(kind_of("precision = 5\n") == ErrorKind::config);
    CHECK(kind_of("precision = 18\n") == ErrorKind::config);
    CHECK(kind_of("omega = -1\n") == ErrorKind::config);
    CHECK(kind_of("omega = 1e9 Hz\n") == ErrorKind::config);
    CHECK(kind_of("no equals sign\n") == ErrorKind::config);
    CHECK(kind_of("window_T = 0\n") == ErrorKind::config);
    CHECK(kind_of("tau_span_in_T = 4\n") == ErrorKind::config);
    CHECK(kind_of("amplitude_source = magic\n") == ErrorKind::config);
    RunConfig empty;
    empty.grid.clear();
    CHECK_THROWS_AS(empty.validate(), Error);
}

TEST_CASE("missing file is an I/O error") {
    try {
        load_config_file("/nonexistent/accelramsey.cfg");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::io);
    }
}

TEST_CASE("json echo is stable") {
    const RunConfig c;
    CHECK(c.to_json().dump() == RunConfig{}.to_json().dump());
    CHECK(c.to_json()["window_T"] == 1e-9);
    CHECK(c.to_json()["detuning"] == "magnitude");
}
