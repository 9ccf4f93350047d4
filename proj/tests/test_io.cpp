#include <doctest.h>

#include "oracle.hpp"

#include <fstream>
#include <sstream>

using namespace nichols;

namespace {

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(NICHOLS_FIXTURES) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string error_location(const std::string& text, int max_theta = default_max_theta) {
    try {
        parse_braiding_input(text, "in", max_theta);
    } catch (const InputError& e) {
        return e.location();
    }
    return "";
}

}  // namespace

TEST_CASE("parse valid inputs") {
    const auto in = parse_braiding_input(read_fixture("g2b_i.json"), "g2b_i.json");
    CHECK(in.theta == 2);
    CHECK(in.conductor == 8);
    CHECK(in.q_exponents == std::vector<std::vector<int>>{{2, 1}, {0, 7}});
    CHECK(in.braiding().q(1, 1) == root_of_unity(8, 2));
    for (const char* f : {"a1_a1.json", "a2_zeta3.json", "b2_symmetric_zeta5.json", "chain_c2_zeta4_1.json"})
        CHECK_NOTHROW(parse_braiding_input(read_fixture(f), f));
}

TEST_CASE("parse errors carry locations") {
    CHECK(error_location(read_fixture("malformed.json")) == "in.q_exponents[1][1]");
    CHECK(error_location("{\"theta\": 2,\n \"conductor\": }") == "in:2:15");
    CHECK(error_location("[1, 2]") == "in");
    CHECK(error_location(R"({"conductor": 3, "q_exponents": [[0]]})") == "in");
    CHECK(error_location(R"({"theta": "2", "conductor": 3, "q_exponents": [[0]]})") == "in.theta");
    CHECK(error_location(R"({"theta": 1, "conductor": 0, "q_exponents": [[0]]})") == "in.conductor");
    CHECK(error_location(R"({"theta": 2, "conductor": 3, "q_exponents": [[0, 1]]})") == "in.q_exponents");
    CHECK(error_location(R"({"theta": 2, "conductor": 3, "q_exponents": [[0, 1], [2]]})") == "in.q_exponents[1]");
    CHECK(error_location(R"({"theta": 1, "conductor": 3, "q_exponents": [[1.5]]})") == "in.q_exponents[0][0]");
    CHECK(error_location(R"({"theta": 1, "conductor": 3, "q_exponents": [[-1]]})") == "in.q_exponents[0][0]");
}

TEST_CASE("schema version and theta bounds") {
    const std::string body = R"("theta": 1, "conductor": 3, "q_exponents": [[1]])";
    CHECK_NOTHROW(parse_braiding_input("{\"schema_version\": 1, " + body + "}"));
    CHECK(error_location("{\"schema_version\": 2, " + body + "}") == "in.schema_version");
    CHECK(error_location(R"({"theta": 0, "conductor": 3, "q_exponents": []})") == "in.theta");
    std::string nine = R"({"theta": 9, "conductor": 2, "q_exponents": [)";
    for (int r = 0; r < 9; ++r) nine += std::string(r ? "," : "") + "[0,0,0,0,0,0,0,0,0]";
    nine += "]}";
    CHECK(error_location(nine) == "in.theta");
    CHECK_NOTHROW(parse_braiding_input(nine, "in", 9));
    CHECK(error_location(R"({"theta": 2, "conductor": 3, "q_exponents": [[0,1],[1,0]]})", 1) == "in.theta");
}

TEST_CASE("report builders are deterministic") {
    const BraidingMatrix B = parse_braiding_input(read_fixture("g2b_i.json")).braiding();
    CHECK(analyze_json(B).dump() == analyze_json(B).dump());
    CHECK(dim_json(B).dump() == dim_json(B).dump());
    const auto d = dim_json(B);
    CHECK(d["oracle"] == 4096);
    CHECK(d["formula"] == 4096);
    CHECK(d["agree"] == true);
    CHECK(d["heights"].size() == 6);
    const auto a = analyze_json(B);
    CHECK(a["cartan_type"] == "G2");
    CHECK(a["standard"] == true);
    CHECK(a["classification"].is_object());
}

TEST_CASE("report for a non-standard braiding") {
    const auto a = analyze_json(BraidingMatrix(2, 5, {{0, 1}, {0, 2}}));
    CHECK(a["cartan_matrix"].is_null());
    CHECK(a["cartan_type"] == "undefined");
    CHECK(a["standard"] == false);
}
