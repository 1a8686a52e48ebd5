#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace pfrep;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;

    std::string last_line() const {
        const auto end = out.find_last_not_of('\n');
        const auto start = out.rfind('\n', end);
        return out.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
    }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("pfrep_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

}  // namespace

TEST(CliRepresent, QuarticJsonReverifies) {
    const auto r = run({"represent", "--ring", "int", "--format", "json", "x^4+y^4+z^4"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    Json doc;
    in >> doc;
    EXPECT_EQ(doc["size"], 8);
    const IntegerRing zz;
    const auto forms = form_ring(zz);
    EXPECT_TRUE(verify(forms, representation_from_json(zz, doc), parse(forms, "x^4+y^4+z^4")));
}

TEST(CliRepresent, CompositeModulus) {
    const auto r = run({"represent", "--ring", "mod:6", "x*y"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(4x4)"), std::string::npos);
}

TEST(CliRepresent, LatexAndSym) {
    const auto r = run({"represent", "--ring", "sym", "--format", "latex", "T1*x^2 + T2*y*z"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\\Theta_{1}"), std::string::npos);
}

TEST(CliRepresent, ZeroFormNeedsDegree) {
    EXPECT_EQ(run({"represent", "0"}).code, 3);
    EXPECT_EQ(run({"represent", "--degree", "3", "0"}).code, 0);
}

TEST(CliRepresent, ErrorCodes) {
    const auto unsupported = run({"represent", "x^6"});
    EXPECT_EQ(unsupported.code, 3);
    EXPECT_NE(unsupported.err.find("unsupported"), std::string::npos);
    const auto parse_error = run({"represent", "x^"});
    EXPECT_EQ(parse_error.code, 2);
    EXPECT_NE(parse_error.err.find("offset 2"), std::string::npos);
    EXPECT_EQ(run({"represent", "x^2 + y"}).code, 3);
    EXPECT_EQ(run({"represent", "--ring", "mod:1", "x"}).code, 2);
    EXPECT_EQ(run({"represent", "--format", "pdf", "x"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(CliRepresent, WritesFile) {
    const auto path = (std::filesystem::temp_directory_path() / "pfrep_test_written.json").string();
    const auto r = run({"represent", "--format", "json", "-o", path, "x^3 - y*z^2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(run({"verify", "x^3 - y*z^2", path}).code, 0);
}

TEST(CliVerify, RoundTripPerturbAndMismatch) {
    const auto doc = run({"represent", "--format", "json", "x^4+y^4+z^4"});
    ASSERT_EQ(doc.code, 0);
    const auto path = temp_file("quartic.json", doc.out);
    const auto good = run({"verify", "--cross-check", "x^4+y^4+z^4", path});
    EXPECT_EQ(good.code, 0);
    EXPECT_NE(good.out.find("det(M) = f^2: yes"), std::string::npos);

    std::istringstream in(doc.out);
    Json j;
    in >> j;
    j["matrices"]["A"][0][2] = "2";
    const auto tampered = run({"verify", "x^4+y^4+z^4", temp_file("tampered.json", j.dump())});
    EXPECT_EQ(tampered.code, 1);
    EXPECT_NE(tampered.out.find("Pf(M) - f = "), std::string::npos);

    EXPECT_EQ(run({"verify", "x^4+y^4+2*z^4", path}).code, 1);
}

TEST(CliVerify, RingMismatchAndMalformed) {
    const auto doc = run({"represent", "--ring", "rat", "--format", "json", "x^2"});
    ASSERT_EQ(doc.code, 0);
    EXPECT_EQ(run({"verify", "--ring", "int", "x^2", temp_file("rat.json", doc.out)}).code, 2);
    EXPECT_EQ(run({"verify", "x^2", temp_file("garbage.json", "{not json")}).code, 2);
    EXPECT_EQ(run({"verify", "x^2", "/nonexistent/pfrep.json"}).code, 2);
}

TEST(CliPf, Examples) {
    const auto inst = temp_file("inst4.json", R"({"size": 4, "entries": [[1,2,"2"],[1,3,"3"],[1,4,"1"],[2,3,"4"],[2,4,"7"],[3,4,"5"]]})");
    const auto r = run({"pf", inst});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "-7");
    const auto two = run({"pf", temp_file("two.json", R"({"size": 2, "entries": [[1,2,"5"]]})")});
    EXPECT_EQ(two.out.substr(0, two.out.find('\n')), "5");
    const auto empty = run({"pf", temp_file("empty.json", R"({"size": 4, "entries": []})")});
    EXPECT_EQ(empty.out.substr(0, empty.out.find('\n')), "0");
    const auto mod = run({"pf", "--ring", "mod:5", inst});
    EXPECT_EQ(mod.out.substr(0, mod.out.find('\n')), "3");
}

TEST(CliPf, Errors) {
    EXPECT_EQ(run({"pf", temp_file("odd.json", R"({"size": 3, "entries": []})")}).code, 3);
    EXPECT_EQ(run({"pf", temp_file("bad.json", R"({"size": 2, "entries": [[1,2]]})")}).code, 2);
    EXPECT_EQ(run({"pf", "--ring", "sym", temp_file("two_sym.json", R"({"size": 2, "entries": [[1,2,"5"]]})")}).code, 2);
}

TEST(CliNice, Verdicts) {
    for (const char* d : {"2", "3", "4"}) {
        const auto r = run({"nice", d});
        EXPECT_EQ(r.code, 0);
        EXPECT_NE(r.out.find("nice: true"), std::string::npos) << d;
    }
    const auto five = run({"nice", "5"});
    EXPECT_EQ(five.code, 0);
    EXPECT_NE(five.out.find("nice: false"), std::string::npos);
    EXPECT_NE(five.out.find("A[2,3] = "), std::string::npos);
}

TEST(CliNice, JsonAndRange) {
    const auto r = run({"nice", "--format", "json", "5"});
    std::istringstream in(r.out);
    Json doc;
    in >> doc;
    EXPECT_EQ(doc["nice"], false);
    EXPECT_FALSE(doc["witnesses"].empty());
    EXPECT_EQ(run({"nice", "1"}).code, 3);
    EXPECT_EQ(run({"nice", "6"}).code, 3);
}

TEST(CliSelftest, DefaultSummary) {
    const auto r = run({"selftest"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("selftest: 5/5 symbolic identities, 100x4 ring trials: all pass"), std::string::npos) << r.out;
}

TEST(CliSelftest, DeterministicForFixedSeed) {
    const auto a = run({"selftest", "--trials", "5", "--seed", "42"});
    const auto b = run({"selftest", "--trials", "5", "--seed", "42"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(CliSelftest, SingleCompositeTrial) {
    const auto r = run({"selftest", "--trials", "1", "--ring", "mod:6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1x1 ring trials: all pass"), std::string::npos);
    EXPECT_EQ(run({"selftest", "--trials", "0"}).code, 2);
}

TEST(CliContract, EveryRunEndsWithStatusLine) {
    const std::vector<std::vector<std::string>> cases{
        {"represent", "x"}, {"represent", "x^6"}, {"represent", "x^"}, {"nice", "4"}, {"bogus"}, {"pf", "/nonexistent"}};
    for (const auto& args : cases) {
        const auto r = run(args);
        const auto last = r.last_line();
        EXPECT_EQ(last.rfind("status: ", 0), 0u) << last;
        EXPECT_NE(last.find("exit=" + std::to_string(r.code)), std::string::npos) << last;
        EXPECT_TRUE(r.code >= 0 && r.code <= 4);
    }
}
