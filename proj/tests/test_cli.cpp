#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status = -1;
    std::string output;  // stdout + stderr
};

std::string binary_path() {
    const char* env = std::getenv("PERFCAST_BIN");
    REQUIRE_MESSAGE(env != nullptr, "PERFCAST_BIN must point at the CLI binary");
    return env;
}

RunResult run(const std::string& args) {
    const std::string command = binary_path() + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) {
        result.output.append(buffer, n);
    }
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("closed-form prints the optimizer value") {
    auto symmetric = run("closed-form --p 0.5 --alpha 0.7 --q 2 --c 1");
    CHECK(symmetric.status == 0);
    CHECK(symmetric.output == "0.5\n");

    auto shifted = run("closed-form --p 0.75 --alpha 0.5 --q 2 --c 1");
    CHECK(shifted.status == 0);
    CHECK(shifted.output == "0.875\n");
}

TEST_CASE("closed-form reports concavity violations with exit 1") {
    auto violated = run("closed-form --p 0.3 --alpha 0.9 --q 2 --c 0.1");
    CHECK(violated.status == 1);
    CHECK(contains(violated.output, "ConcavityViolation"));
}

TEST_CASE("eval prints reward and derivative") {
    auto result = run("eval --rule quadratic --phi drift --alpha 0.5 --q 2 --c 1 "
                      "--p 0.3 --p-hat 0.8");
    CHECK(result.status == 0);
    CHECK(contains(result.output, "reward -0.56"));
    CHECK(contains(result.output, "reward_derivative -1.2"));
}

TEST_CASE("optimize prints the optimum report") {
    auto result = run("optimize --rule quadratic --phi drift --alpha 0.5 --q 2 --c 1 --p 0.75");
    CHECK(result.status == 0);
    CHECK(contains(result.output, "p_hat_star 0.875"));
    CHECK(contains(result.output, "ic incompatible"));
}

TEST_CASE("check-ic exit code follows the verdict") {
    auto compatible = run("check-ic --rule constant --k 1 --phi reversion --q 2 --c 1 --p 0.3");
    CHECK(compatible.status == 0);
    CHECK(contains(compatible.output, "verdict compatible"));

    auto incompatible =
        run("check-ic --rule quadratic --phi drift --alpha 0.5 --q 2 --c 1 --p 0.75");
    CHECK(incompatible.status == 1);
    CHECK(contains(incompatible.output, "verdict incompatible"));
    CHECK(contains(incompatible.output, "worst_deviation 0.12"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("optimize --rule quadratic --p 1.5").status == 2);
    CHECK(run("optimize --rule pinball --p 0.5").status == 2);
    CHECK(run("eval --p 0.5").status == 2);       // missing --p-hat
    CHECK(run("no-such-command").status == 2);
    CHECK(run("").status == 2);                   // a subcommand is required
    CHECK(run("closed-form --p 0.5 --q 3").status == 2);
}

TEST_CASE("log rule outside its domain is a domain error") {
    auto result = run("eval --rule log --phi identity --p 0.5 --p-hat 0.000001");
    CHECK(result.status == 2);
    CHECK(contains(result.output, "domain"));
}

TEST_CASE("verify runs the self-checks and exits 0") {
    auto result = run("verify");
    CHECK(result.status == 0);
    CHECK(contains(result.output, "all checks passed"));
    CHECK(!contains(result.output, "FAIL"));
}

TEST_CASE("figures writes both formats twice with identical bytes") {
    const fs::path base = fs::current_path() / "cli-figures-test";
    fs::remove_all(base);
    const fs::path dir_a = base / "a";
    const fs::path dir_b = base / "b";

    auto first = run("figures --out " + dir_a.string());
    CHECK(first.status == 0);
    CHECK(contains(first.output, "wrote 11 figures"));
    auto second = run("figures --out " + dir_b.string());
    CHECK(second.status == 0);

    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir_a)) {
        CHECK(slurp(entry.path()) == slurp(dir_b / entry.path().filename()));
        ++files;
    }
    CHECK(files == 23);  // 11 csv + 11 svg + manifest

    auto csv_only = run("figures --out " + (base / "c").string() + " --format csv");
    CHECK(csv_only.status == 0);
    for (const auto& entry : fs::directory_iterator(base / "c")) {
        CHECK(entry.path().extension() != ".svg");
    }
    fs::remove_all(base);
}
