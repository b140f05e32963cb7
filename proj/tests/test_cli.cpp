#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "xirp/io.hpp"

namespace fs = std::filesystem;

namespace {

fs::path workdir() {
    const fs::path dir = fs::temp_directory_path() / ("xirp_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args) {
    const std::string cmd = std::string(XIRP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cli exit codes") {
    const fs::path dir = workdir();
    CHECK(run("") == 1);
    CHECK(run("generate lorenz --out " + (dir / "x").string()) == 1);
    CHECK(run("encode " + (dir / "nope.csv").string() + " --out " + (dir / "n.xt").string()) == 2);

    CHECK(run("generate sine --out " + (dir / "sine").string()) == 0);
    int csvs = 0;
    for (const auto& e : fs::directory_iterator(dir / "sine")) csvs += e.path().extension() == ".csv";
    CHECK(csvs == 9);
    CHECK(fs::exists(dir / "sine" / "manifest.json"));

    const std::string series = (dir / "sine" / "sine_0.csv").string();
    CHECK(run("encode " + series + " --kind binary-rp --d 10 --out " + (dir / "rp.xt").string()) == 0);
    CHECK(run("invert " + (dir / "rp.xt").string() + " --method im --out " + (dir / "rp.csv").string()) == 2);

    CHECK(run("encode " + series + " --kind xirp --d 2000 --out " + (dir / "long.xt").string()) == 2);
}

TEST_CASE("cli encode shapes and deterministic IRC") {
    const fs::path dir = workdir();
    REQUIRE(run("generate brownian --n 1 --seed 4 --out " + (dir / "bm").string()) == 0);
    const std::string series = (dir / "bm" / "brownian_0.csv").string();

    REQUIRE(run("encode " + series + " --kind xirp --d 20 --stride 20 --out " + (dir / "s20.xt").string()) == 0);
    CHECK(xirp::io::read_tensor(dir / "s20.xt").shape == std::vector<std::uint64_t>{50, 20, 20});

    REQUIRE(run("encode " + series + " --kind gasf --d 20 --out " + (dir / "g.xt").string()) == 0);
    CHECK(xirp::io::read_tensor(dir / "g.xt").shape == std::vector<std::uint64_t>{981, 20, 20});

    REQUIRE(run("invert " + (dir / "g.xt").string() + " --method irc --seed 9 --out " + (dir / "a.csv").string()) == 0);
    REQUIRE(run("invert " + (dir / "g.xt").string() + " --method irc --seed 9 --out " + (dir / "b.csv").string()) == 0);
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    CHECK(slurp(dir / "a.csv.meta.json").find("mt19937_64") != std::string::npos);
}

TEST_CASE("cli aggregate") {
    const fs::path dir = workdir();
    std::ofstream(dir / "scores.csv") << "dataset,series_id,contender,metric,inversion,value\n"
                                         "Sine,0,TS,S_D,,0.5\nSine,0,XIRP,S_D,,0.6\n"
                                         "Sine,1,TS,S_D,,0.7\nSine,1,XIRP,S_D,,0.2\n";
    CHECK(run("aggregate " + (dir / "scores.csv").string() + " --mode best --format csv --out " +
              (dir / "best.csv").string()) == 0);
    const std::string best = slurp(dir / "best.csv");
    CHECK(best.find("Sine,S_D,TS,1") != std::string::npos);
    CHECK(best.find("Sine,S_D,XIRP,1") != std::string::npos);
    CHECK(run("aggregate " + (dir / "scores.csv").string() + " --mode bogus") == 1);

    std::ofstream(dir / "broken.csv") << "dataset,series_id,contender,metric,inversion,value\nSine,0,TS,S_D,,x\n";
    CHECK(run("aggregate " + (dir / "broken.csv").string() + " --mode summary") == 2);
}
