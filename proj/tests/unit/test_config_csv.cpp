#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "sphquad/config.hpp"
#include "sphquad/csv.hpp"
#include "sphquad/errors.hpp"

using namespace sphquad;

namespace {

std::filesystem::path write_temp(const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / "sphquad_config_test.cfg";
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("config files: comments, blanks, trimming, overwrites") {
    const auto path = write_temp(
        "# header comment\n"
        "\n"
        "  rule = trapezoidal  # trailing comment\n"
        "n = 8\n"
        "n = 16\n"
        "tol =   1e-9\n");
    const Config cfg = Config::from_file(path.string());
    CHECK(cfg.get_string("rule", "") == "trapezoidal");
    CHECK(cfg.get_int("n", 0) == 16);
    CHECK(cfg.get_double("tol", 0.0) == 1e-9);
    CHECK(cfg.has("tol"));
    CHECK(!cfg.has("missing"));
    CHECK(cfg.get_string("missing", "fallback") == "fallback");
    std::filesystem::remove(path);
}

TEST_CASE("config parse errors carry 1-based line numbers") {
    const auto path = write_temp("a = 1\nnot an assignment\n");
    try {
        Config::from_file(path.string());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::filesystem::remove(path);

    const auto path2 = write_temp("= value\n");
    CHECK_THROWS_AS(Config::from_file(path2.string()), ParseError);
    std::filesystem::remove(path2);

    CHECK_THROWS_AS(Config::from_file("/nonexistent/sphquad.cfg"), std::invalid_argument);
}

TEST_CASE("set trims and overwrites; empty keys rejected") {
    Config cfg;
    cfg.set(" key ", "  a value  ");
    CHECK(cfg.get_string("key", "") == "a value");
    cfg.set("key", "other");
    CHECK(cfg.get_string("key", "") == "other");
    CHECK_THROWS_AS(cfg.set("  ", "x"), std::invalid_argument);
}

TEST_CASE("typed getters validate full consumption and name the key") {
    Config cfg;
    cfg.set("n", "12");
    cfg.set("bad_int", "12x");
    cfg.set("tol", "2.5e-3");
    cfg.set("bad_double", "1.0rest");

    CHECK(cfg.get_int("n", 0) == 12);
    CHECK(cfg.get_double("tol", 0.0) == 2.5e-3);
    CHECK(cfg.get_int("absent", -7) == -7);
    CHECK(cfg.get_double("absent", 1.5) == 1.5);

    try {
        cfg.get_int("bad_int", 0);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("bad_int") != std::string::npos);
    }
    try {
        cfg.get_double("bad_double", 0.0);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("bad_double") != std::string::npos);
    }
}

TEST_CASE("boolean spellings") {
    Config cfg;
    const char* truthy[] = {"on", "true", "1", "yes"};
    const char* falsy[] = {"off", "false", "0", "no"};
    for (const char* v : truthy) {
        cfg.set("flag", v);
        CHECK(cfg.get_bool("flag", false));
    }
    for (const char* v : falsy) {
        cfg.set("flag", v);
        CHECK(!cfg.get_bool("flag", true));
    }
    CHECK(cfg.get_bool("absent", true));
    CHECK(!cfg.get_bool("absent", false));
    cfg.set("flag", "maybe");
    CHECK_THROWS_AS(cfg.get_bool("flag", false), std::invalid_argument);
}

TEST_CASE("list getters split on commas and validate every item") {
    Config cfg;
    cfg.set("names", "a, b ,c,,");
    cfg.set("ns", "1, 2, 3");
    cfg.set("qs", "1.5,2.0 , 3");
    cfg.set("bad", "1, x, 3");

    CHECK(cfg.get_strings("names", {}) == std::vector<std::string>{"a", "b", "c"});
    CHECK(cfg.get_ints("ns", {}) == std::vector<int>{1, 2, 3});
    CHECK(cfg.get_doubles("qs", {}) == std::vector<double>{1.5, 2.0, 3.0});
    CHECK(cfg.get_ints("absent", {9}) == std::vector<int>{9});
    try {
        cfg.get_ints("bad", {});
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("bad") != std::string::npos);
    }
}

TEST_CASE("require_known accepts common keys and names the command") {
    Config cfg;
    cfg.set("rule", "design");
    cfg.set("out", "x.csv");
    cfg.set("seed", "7");
    cfg.set("threads", "2");
    cfg.set("resolution", "100");
    cfg.set("timings", "on");
    CHECK_NOTHROW(cfg.require_known("integrate", {"rule", "n"}));

    cfg.set("surprise", "1");
    try {
        cfg.require_known("integrate", {"rule", "n"});
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("integrate") != std::string::npos);
        CHECK(msg.find("surprise") != std::string::npos);
    }
}

TEST_CASE("csv writer: header, quoting, LF endings, width checks") {
    std::ostringstream os;
    CsvWriter w(os, {"name", "value"});
    w.row({"plain", "1"});
    w.row({"with,comma", "2"});
    w.row({"with\"quote", "3"});
    CHECK(os.str() ==
          "name,value\n"
          "plain,1\n"
          "\"with,comma\",2\n"
          "\"with\"\"quote\",3\n");
    CHECK(os.str().find('\r') == std::string::npos);
    CHECK_THROWS_AS(w.row({"only-one"}), std::logic_error);
}

TEST_CASE("numeric fields round trip through 17 significant digits") {
    const double values[] = {0.1, 1.0 / 3.0, 3.1415926535897932384626433832795,
                             -2.5e-308, 6.6961822200736179523, 4e300};
    for (double v : values) {
        const std::string s = CsvWriter::field(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(CsvWriter::field(42) == "42");
    CHECK(CsvWriter::field(static_cast<long long>(-7)) == "-7");
    CHECK(CsvWriter::field(std::size_t{961}) == "961");
}
