#include <sstream>

#include "doctest.h"

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = wormcalc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli examples") {
    auto r = invoke({"ot", "--compact", "2103"});
    CHECK(r.code == 0);
    CHECK(r.out == "w^(w^w) + w^w\n");

    r = invoke({"hexp", "w", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "phi(1,0)\n");

    r = invoke({"cmp", "--compact", "1", "101", "--xi", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "incomparable\n");
}

TEST_CASE("cli subcommands") {
    CHECK(invoke({"ot", "[w]"}).out == "phi(1,0)\n");
    CHECK(invoke({"ot", "--compact", "2103", "--xi", "1"}).out == "w\n");
    CHECK(invoke({"cmp", "--compact", "11", "101"}).out == "GT\n");
    CHECK(invoke({"cmp", "--compact", "10", "1"}).out == "EQ\n");
    CHECK(invoke({"cmp", "[w]", "[w, w]", "--xi", "w"}).out == "LT\n");
    CHECK(invoke({"cmp", "[w, w]", "[w]", "--xi", "w"}).out == "GT\n");
    CHECK(invoke({"seq", "[w]"}).out == "0 -> phi(1,0)\nw -> 1\nw + 1 -> 0\n");
    CHECK(invoke({"hlog", "w", "phi(1,0)"}).out == "1\n");
    CHECK(invoke({"wormof", "phi(1,0)"}).out == "[w, 0]\n");
    CHECK(invoke({"--compact", "wormof", "3"}).out == "000\n");
    CHECK(invoke({"norm", "w^phi(1,0)"}).out == "phi(1,0)\n");

    auto r = invoke({"selfcheck", "--len", "3", "--alphabet", "0,1,w"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS: 40 worms", 0) == 0);
}

TEST_CASE("cli json output is stable") {
    const std::vector<std::string> args{"--json", "ot", "--compact", "2103"};
    const auto first = invoke(args);
    CHECK(first.code == 0);
    CHECK(first.out ==
          "{\"command\":\"ot\",\"inputs\":[\"2103\"],\"result\":\"w^(w^w) + w^w\"}\n");
    CHECK(invoke(args).out == first.out);

    const auto seq = invoke({"--json", "seq", "[0]"});
    CHECK(seq.out == "{\"command\":\"seq\",\"inputs\":[\"[0]\"],\"result\":"
                     "[{\"start\":\"0\",\"value\":\"1\"},{\"start\":\"1\",\"value\":\"0\"}]}\n");
}

TEST_CASE("cli exit codes") {
    auto r = invoke({"ot", "[w,"});
    CHECK(r.code == 1);
    CHECK(r.err.find("parse error at position 3") != std::string::npos);

    r = invoke({"hexp", "(w+1)^2", "1"});
    CHECK(r.code == 1);

    r = invoke({"frobnicate"});
    CHECK(r.code == 1);

    r = invoke({});
    CHECK(r.code == 1);

    r = invoke({"selfcheck", "--len", "9"});
    CHECK(r.code == 2);
    CHECK(r.err.find("precondition") != std::string::npos);

    r = invoke({"--help"});
    CHECK(r.code == 0);
}
