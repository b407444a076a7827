// SPDX-License-Identifier: Apache-2.0
//
// xlmimo-ee: energy-efficiency modeling for mid-band XL-MIMO systems
// Copyright (C) 2026 The xlmimo-ee authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace
{
    namespace fs = std::filesystem;

    int run(const std::string &args)
    {
        const std::string cmd = std::string(XLMIMO_CLI_PATH) + " " + args + " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string capture(const std::string &args)
    {
        const std::string cmd = std::string(XLMIMO_CLI_PATH) + " " + args + " 2>/dev/null";
        std::string out;
        if (FILE *p = popen(cmd.c_str(), "r"))
        {
            char buf[512];
            while (std::fgets(buf, sizeof buf, p))
                out += buf;
            pclose(p);
        }
        return out;
    }

    std::string slurp(const fs::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    struct TempDir
    {
        fs::path path;
        TempDir()
        {
            path = fs::temp_directory_path() / ("xlmimo_cli_" + std::to_string(::getpid()));
            fs::create_directories(path);
        }
        ~TempDir() { fs::remove_all(path); }
        std::string file(const std::string &name, const std::string &content = {}) const
        {
            const auto p = path / name;
            if (!content.empty())
                std::ofstream(p) << content;
            return p.string();
        }
    };
}

TEST_CASE("CLI exit codes")
{
    TempDir dir;
    CHECK(run("--help") == 0);
    CHECK(run("") == 2);
    CHECK(run("sweep --axis bandwidth") == 2);
    CHECK(run("sweep --axis planets --values 1 --out " + dir.file("a.csv")) == 2);

    const std::string bad = dir.file("bad.cfg", "xi_ul = 0.7\n");
    CHECK(run("limits --scenario " + bad) == 2);
    CHECK(run("limits --scenario " + dir.file("missing.cfg")) == 4);

    const std::string wide = dir.file("wide.cfg", "num_antennas = 8000\n"); // aperture beyond r_min
    CHECK(run("limits --scenario " + wide) == 3);

    CHECK(run("sweep --axis bandwidth --values 1e8,2e8 --out /nonexistent/dir/out.csv") == 4);
    CHECK(run("sweep --axis bandwidth --values 2e8,1e8 --out " + dir.file("b.csv")) == 2);
    CHECK(run("sweep --axis bandwidth --values 1e8 --mode monte_carlo --trials 0 --out " + dir.file("c.csv")) == 2);
}

TEST_CASE("CLI limits output")
{
    const std::string out = capture("limits");
    CHECK_THAT(out, Catch::Matchers::ContainsSubstring("ee_bandwidth_limit_bits_per_joule = "));
    CHECK_THAT(out, Catch::Matchers::ContainsSubstring("knee_point_antennas = "));
    CHECK_THAT(out, Catch::Matchers::ContainsSubstring("knee_low_power_regime = true"));
}

TEST_CASE("CLI sweeps are reproducible")
{
    TempDir dir;
    const std::string scenario = dir.file("small.cfg", "num_antennas = 64\nnum_users = 4\n");
    const std::string common = "sweep --scenario " + scenario +
                               " --axis tx_power --values log:-150dBm/Hz:-130dBm/Hz:3 --mode both --trials 30"
                               " --seed 11 --out ";
    const std::string a = dir.file("a.csv"), b = dir.file("b.csv");
    REQUIRE(run(common + a + " --workers 1") == 0);
    REQUIRE(run(common + b + " --workers 3") == 0);
    const std::string csv = slurp(a);
    CHECK(csv == slurp(b));
    CHECK(csv.rfind("axis_value,N,K,", 0) == 0);
    CHECK(fs::exists(a + ".manifest.json"));

    const std::string c = dir.file("c.csv");
    REQUIRE(run("compare --pgrid log:-170dBm/Hz:-130dBm/Hz:5 --out " + c) == 0);
    CHECK_THAT(slurp(c), Catch::Matchers::ContainsSubstring("setup=setup3"));
}
