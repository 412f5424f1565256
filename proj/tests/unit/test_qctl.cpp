// Copyright 2026 The hullprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hullprop/codekit.hpp"
#include "hullprop/fixtures.hpp"
#include "json.hpp"
#include "qctl.hpp"

using namespace hullprop;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = qctl::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "qctl_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string write_file(const std::string& name, const std::string& text) {
    const auto p = scratch(name);
    std::ofstream(p) << text;
    return p.string();
}

LinearCode read_file(const std::string& path) {
    std::ifstream in(path);
    return read_code(in);
}

}  // namespace

TEST_CASE("construct writes a code file") {
    const Result r = run({"construct", "grscon1", "q=2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("code GF(2^2) 4 2\n", 0) == 0);
    const std::string path = scratch("grs.code").string();
    CHECK(run({"construct", "grscon1", "q=2", "--out", path}).code == 0);
    CHECK(read_file(path).k() == 2);
    CHECK(run({"construct", "bogus"}).code == 3);
}

TEST_CASE("inspect the fixture") {
    const Result r = run({"inspect", "fixture28"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("d = 9") != std::string::npos);
    CHECK(r.out.find("hermitian hull: dim 1, d 20, d2 1") != std::string::npos);
    const Result j = run({"inspect", "fixture28", "--format", "json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["hull_hermitian"]["dim"] == 1);
    CHECK(doc["d"] == "9");
    CHECK(doc.contains("hull_euclid"));
}

TEST_CASE("inspect honours the budget") {
    const Result r = run({"inspect", "fixture28", "--budget", "10"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("d = >=") != std::string::npos);
}

TEST_CASE("inspect of a zero-dimensional file is a parse error") {
    const std::string path = write_file("zero.code", "code GF(2^2) 4 0\n");
    const Result r = run({"inspect", "--in", path});
    CHECK(r.code == 3);
    CHECK(r.err.find("ParseError") != std::string::npos);
}

TEST_CASE("hull, puncture, shorten and lcd") {
    const std::string hull_path = scratch("hull.code").string();
    CHECK(run({"hull", "fixture28", "--out", hull_path}).code == 0);
    CHECK(read_file(hull_path) == hull(fixture_28_10(), InnerProduct::Hermitian).hull);

    const Result p = run({"puncture", "fixture28", "--S", "0,1,2,3,4,5"});
    REQUIRE(p.code == 0);
    CHECK(p.err.find("hull dim 2") != std::string::npos);
    CHECK(p.err.find("containment only") != std::string::npos);

    const Result s = run({"shorten", "fixture28", "--s", "6"});
    REQUIRE(s.code == 0);
    CHECK(s.err.find("hull dim 1, (Hull)_S dim 0") != std::string::npos);

    const std::string lcd_path = scratch("lcd.code").string();
    CHECK(run({"lcd", "fixture28", "--mode", "shorten", "--out", lcd_path}).code == 0);
    const LinearCode l = read_file(lcd_path);
    CHECK(l.n() == 27);
    CHECK(hull(l, InnerProduct::Hermitian).ell == 0);
    CHECK(run({"lcd", "fixture28", "--mode", "sideways"}).code == 64);
}

TEST_CASE("quantum parameters and propagation") {
    const Result e = run({"eaqecc", "grscon1", "q=2"});
    REQUIRE(e.code == 0);
    CHECK(e.out.rfind("[[4,1,3;1]]_2  pure=yes optimal=yes", 0) == 0);

    const Result s = run({"subsystem", "grscon1", "q=3", "--format", "json"});
    REQUIRE(s.code == 0);
    CHECK(nlohmann::json::parse(s.out)["kappa"] == 4);

    const Result pr = run({"propagate", "grscon1", "q=2", "--s", "1", "--mode", "shorten"});
    REQUIRE(pr.code == 0);
    CHECK(pr.out.rfind("[[3,2,2;1]]_2", 0) == 0);

    const Result ps = run({"propagate", "grscon1", "q=3", "--s", "1", "--kind", "subsystem"});
    REQUIRE(ps.code == 0);
    CHECK(ps.out.rfind("[[8,4,2,2]]_3", 0) == 0);

    CHECK(run({"propagate", "grscon1", "q=2", "--s", "5"}).code == 3);
}

TEST_CASE("table commands") {
    const Result t = run({"table1", "--q", "2"});
    CHECK(t.code == 0);
    CHECK(t.out.rfind("family,q,k,m,s,", 0) == 0);
    const Result j = run({"table2", "--q", "2", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out).is_array());
    CHECK(run({"table1", "--q", "5"}).code == 3);
    CHECK(run({"table1", "--q", "5", "--formula-only"}).code == 0);
}

TEST_CASE("verify-counterexample") {
    const Result ok = run({"verify-counterexample"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);

    const Result empty = run({"verify-counterexample", "--S", ""});
    CHECK(empty.code == 0);
    CHECK(empty.out.find("dim Hull(C^S): expected 1, got 1") != std::string::npos);

    // Flip one entry outside the identity block.
    std::string text = format_code(fixture_28_10());
    std::istringstream lines(text);
    std::string header, mheader, row0;
    std::getline(lines, header);
    std::getline(lines, mheader);
    std::getline(lines, row0);
    std::istringstream entries(row0);
    std::vector<std::string> cells;
    for (std::string c; entries >> c;) cells.push_back(c);
    cells[12] = cells[12] == "0" ? "a^0" : "0";
    std::string flipped;
    for (std::size_t i = 0; i < cells.size(); ++i) flipped += (i ? " " : "") + cells[i];
    const std::string rest = text.substr(header.size() + mheader.size() + row0.size() + 3);
    const std::string path = write_file("flipped.code", header + "\n" + mheader + "\n" + flipped + "\n" + rest);

    const Result bad = run({"verify-counterexample", "--in", path});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("located: canonical generator differs from the stock fixture at row 0, column 12") !=
          std::string::npos);
}

TEST_CASE("compare-known") {
    const Result r = run({"compare-known", "--q", "3", "--n", "8", "--kappa", "5", "--delta", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("table 3 row 6") != std::string::npos);
    const Result none = run({"compare-known", "--q", "2", "--n", "100", "--kappa", "1", "--delta", "1"});
    CHECK(none.out.find("no known-family match") != std::string::npos);
    const Result sub = run({"compare-known", "--kind", "subsystem", "--q", "4", "--n", "17", "--kappa", "9", "--r",
                            "4", "--delta", "3"});
    CHECK(sub.out.find("table 4 row 3") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({"table1"}).code != 0);
    CHECK(run({"nonsense"}).code != 0);
    CHECK(run({"hull", "fixture28", "--ip", "other"}).code == 64);
}
