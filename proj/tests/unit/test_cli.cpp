#include "commands.hpp"

#include "browder/io/spec_json.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace browder;
using namespace browder::cli;

namespace {

const std::string data_dir = BROWDER_DATA_DIR;
std::string spec(const char* name) { return data_dir + "/" + name; }

std::filesystem::path scratch(const char* name) {
    auto p = std::filesystem::temp_directory_path() / ("browder_cli_test_" + std::string(name));
    std::filesystem::remove_all(p);
    return p;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("classify reports") {
    RunConfig cfg;
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_classify(spec("shift.json"), std::nullopt, cfg, out, err) == Exit::ok);
    const io::Json j = io::Json::parse(out.str());
    CHECK(j["fredholm"]["alpha"] == 0);
    CHECK(j["fredholm"]["beta"] == 1);
    CHECK(j["fredholm"]["index"] == -1);
    CHECK(j["class"]["left_semi_browder"] == "yes");

    out.str("");
    CHECK(cmd_classify(spec("identity.json"), std::nullopt, cfg, out, err) == Exit::ok);
    for (const auto& [name, value] : io::Json::parse(out.str())["class"].items()) CHECK_MESSAGE(value == "yes", name);

    out.str("");
    CHECK(cmd_classify(spec("circle_zero.json"), std::nullopt, cfg, out, err) == Exit::ok);
    CHECK(io::Json::parse(out.str())["fredholm"]["semi_fredholm"] == false);

    out.str("");
    CHECK(cmd_classify(spec("shift.json"), std::string("1"), cfg, out, err) == Exit::ok);
    CHECK(io::Json::parse(out.str())["fredholm"]["semi_fredholm"] == false);
}

TEST_CASE("classify exit code 3 when a flag is undecided") {
    const auto dir = scratch("undecided");
    std::filesystem::create_directories(dir);
    // [[S, 0], [0, S*]]: ascent never stabilises below a cap of 2.
    const BetOperator m = assemble_MC(BetOperator::shift(), BetOperator::backward_shift(), BetOperator::zero());
    io::write_json_file((dir / "m.json").string(), io::to_json(m));
    RunConfig cfg;
    cfg.power_cap = 2;
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_classify((dir / "m.json").string(), std::nullopt, cfg, out, err) == Exit::undecided);
}

TEST_CASE("parse errors exit 2 with a position") {
    const auto dir = scratch("parse");
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "bad.json") << "{\n \"symbol\": {\"1\": [1, 0]\n";
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_classify((dir / "bad.json").string(), std::nullopt, RunConfig{}, out, err) == Exit::bad_input);
    CHECK(err.str().find("line") != std::string::npos);
}

TEST_CASE("complete and verify") {
    const auto dir = scratch("complete");
    RunConfig cfg;
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_complete(spec("shift.json"), spec("backshift.json"), "browder", dir.string(), cfg, out, err) == Exit::ok);
    CHECK(out.str().find("verified") != std::string::npos);
    const BetOperator c = io::read_operator_file((dir / "C.json").string());
    REQUIRE(c.perturbation().size() == 1);
    CHECK(c.entry(0, 0, 0, 0).exact() == GaussQ(1));
    CHECK(cmd_verify((dir / "certificate.json").string(), cfg, out, err) == Exit::ok);

    io::Json cert = io::read_json_file((dir / "certificate.json").string());
    cert["corner"]["entries"][0][0] = io::Json::array({"0", "0"});
    io::write_json_file((dir / "tampered.json").string(), cert);
    out.str("");
    CHECK(cmd_verify((dir / "tampered.json").string(), cfg, out, err) == Exit::failure);
    CHECK(out.str().find("corner not invertible") != std::string::npos);
}

TEST_CASE("complete: identity pair and refusals") {
    const auto dir = scratch("complete_identity");
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_complete(spec("identity.json"), spec("identity.json"), "invertible", dir.string(), RunConfig{}, out,
                       err) == Exit::ok);
    const BetOperator c = io::read_operator_file((dir / "C.json").string());
    CHECK(c.symbol() == MatrixSymbol::identity(1));
    CHECK(c.perturbation().empty());

    CHECK(cmd_complete(spec("shift.json"), spec("shift.json"), "browder", "", RunConfig{}, out, err) ==
          Exit::precondition);
    CHECK(err.str().find("condition (c) fails") != std::string::npos);
}

TEST_CASE("scan writes CSV and SVG") {
    const auto dir = scratch("scan");
    ScanRequest req;
    req.spec_a = spec("shift.json");
    req.spec_b = spec("backshift.json");
    req.region = "-2,2,-2,2";
    req.step = "1/2";
    req.out_dir = dir.string();
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_scan(req, RunConfig{}, out, err) == Exit::ok);
    CHECK(out.str().find("yes: 4, no: 77, undecided: 0") != std::string::npos);
    CHECK(slurp(dir / "scan.csv").rfind("re,im,mode,", 0) == 0);
    CHECK(slurp(dir / "scan.svg").find("<svg") == 0);

    req.region = "-2,2,oops,2";
    CHECK(cmd_scan(req, RunConfig{}, out, err) == Exit::bad_input);
    req.region = "-2,2,-2,2";
    req.step = "0";
    CHECK(cmd_scan(req, RunConfig{}, out, err) == Exit::bad_input);
}

TEST_CASE("oracle suites") {
    std::ostringstream out;
    std::ostringstream err;
    CHECK(cmd_oracle("six-term", 50, 1, out, err) == Exit::ok);
    CHECK(cmd_oracle("two-of-three", 50, 1, out, err) == Exit::ok);
    CHECK(cmd_oracle("corner", 50, 1, out, err) == Exit::ok);
    CHECK(out.str().find("seed 1") != std::string::npos);
    CHECK(cmd_oracle("nope", 50, 1, out, err) == Exit::bad_input);
}
