#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "seqmo/instance_io.hpp"

using namespace seqmo;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "seqmo-io-tests";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("motsp round trip is bit exact") {
    seqmo::RngStream rng(15);
    const MotspInstance inst = generate_motsp(15, 2, rng);
    const fs::path path = temp_file("motsp15.txt");
    save_instance(inst, path.string());
    const ProblemInstance loaded = load_instance(path.string());
    const auto& back = std::get<MotspInstance>(loaded);
    REQUIRE(back.n_cities == inst.n_cities);
    REQUIRE(back.seed == inst.seed);
    REQUIRE(back.distance_matrices.size() == 2);
    REQUIRE(back.distance_matrices[0] == inst.distance_matrices[0]);
    REQUIRE(back.distance_matrices[1] == inst.distance_matrices[1]);
}

TEST_CASE("moqap round trip is bit exact") {
    seqmo::RngStream rng(16);
    const MoqapInstance inst = generate_moqap(8, 3, rng);
    const fs::path path = temp_file("moqap8.txt");
    save_instance(inst, path.string());
    const ProblemInstance loaded = load_instance(path.string());
    const auto& back = std::get<MoqapInstance>(loaded);
    REQUIRE(back.distance_matrix == inst.distance_matrix);
    REQUIRE(back.flow_matrices == inst.flow_matrices);
}

TEST_CASE("truncated file names the missing section") {
    seqmo::RngStream rng(17);
    const MotspInstance inst = generate_motsp(5, 2, rng);
    const fs::path path = temp_file("trunc.txt");
    save_instance(inst, path.string());

    // chop the file before the second matrix
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    const auto cut = content.find("matrix 2");
    std::ofstream out(path);
    out << content.substr(0, cut);
    out.close();

    try {
        load_instance(path.string());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(std::string(e.what()).find("matrix") != std::string::npos);
    }
}

TEST_CASE("wrong row length reports a dimension error with the line number") {
    const fs::path path = temp_file("short-row.txt");
    std::ofstream out(path);
    out << "seqmo instance v1\nproblem motsp\nn 3\nk 2\nseed 0\nmatrix 1\n"
        << "0 0.5 0.5\n0.5 0\n0.5 0.5 0\n";  // second row too short
    out.close();
    try {
        load_instance(path.string());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 8);
        REQUIRE(std::string(e.what()).find("expected 3") != std::string::npos);
    }
}

TEST_CASE("unknown tags are rejected") {
    const fs::path path = temp_file("bad-tag.txt");
    std::ofstream out(path);
    out << "not an instance\n";
    out.close();
    REQUIRE_THROWS_AS(load_instance(path.string()), ParseError);
}
