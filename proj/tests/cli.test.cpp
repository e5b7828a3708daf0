//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/cli.test.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "polcontrast/format.hpp"
#include "polcontrast/random.hpp"
#include "polcontrast/wishart.hpp"

namespace polcontrast
{
namespace test
{
namespace
{
namespace fs = std::filesystem;

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> const& args)
{
    std::ostringstream out, err;
    int const code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(fs::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::map<std::string, std::string> key_values(std::string const& text)
{
    std::istringstream in(text);
    return parse_key_values(in);
}

class CliTest : public ::testing::Test
{
  protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path()
               / (std::string("polcontrast_cli_")
                  + ::testing::UnitTest::GetInstance()
                        ->current_test_info()
                        ->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(char const* name) const { return (dir_ / name).string(); }

    std::string write_covariances(char const* name, double rho, int n,
                                  std::uint64_t seed) const
    {
        WishartSampler const sample({unit_covariance(rho), Looks{4}});
        RandomStream rng(seed);
        std::ofstream out(path(name));
        out << "z11,re_z12,im_z12,z22\n";
        for (int i = 0; i < n; ++i)
        {
            auto const z = sample(rng);
            out << format_number(z.z11) << ',' << format_number(z.z12.real())
                << ',' << format_number(z.z12.imag()) << ','
                << format_number(z.z22) << '\n';
        }
        return path(name);
    }

    fs::path dir_;
};
}  // namespace

//---------------------------------------------------------------------------//

TEST_F(CliTest, help)
{
    auto const r = run({"--help"});
    EXPECT_EQ(0, r.code);
    EXPECT_NE(std::string::npos, r.out.find("compare"));
    EXPECT_EQ(0, run({"compare", "--help"}).code);
}

TEST_F(CliTest, usage_errors)
{
    EXPECT_EQ(2, run({}).code);
    EXPECT_EQ(2, run({"frobnicate"}).code);
    EXPECT_EQ(2, run({"sensitivity", "--rho1", "0.5"}).code);
    EXPECT_EQ(2, run({"sensitivity", "--rho1", "x", "--looks", "2", "--n1",
                      "1", "--n2", "1", "--step", "0.01"})
                     .code);
    auto const file = write_covariances("a.csv", 0.5, 20, 1);
    EXPECT_EQ(2, run({"compare", "--region-a", file, "--region-b", file,
                      "--format", "tiff", "--looks", "4", "--eta", "0.05"})
                     .code);
}

TEST_F(CliTest, missing_looks)
{
    auto const file = write_covariances("a.csv", 0.5, 20, 1);
    auto const r = run({"compare", "--region-a", file, "--region-b", file,
                        "--format", "covariances", "--eta", "0.05"});
    EXPECT_EQ(2, r.code);
    EXPECT_NE(std::string::npos, r.err.find("estimate"));
}

TEST_F(CliTest, compare_identical)
{
    auto const file = write_covariances("a.csv", 0.5, 200, 1);
    auto const r
        = run({"compare", "--region-a", file, "--region-b", file, "--format",
               "covariances", "--looks", "4", "--eta", "0.05", "--machine",
               "--out", path("report.txt")});
    ASSERT_EQ(0, r.code) << r.err;
    auto const kv = key_values(r.out);
    EXPECT_EQ("Similar", kv.at("decision_kl"));
    EXPECT_EQ("Similar", kv.at("decision_hellinger"));
    EXPECT_EQ("1", kv.at("p_kl"));
    EXPECT_EQ("0", kv.at("d_hellinger"));
    EXPECT_EQ(r.out, slurp(path("report.txt")));

    auto const table
        = run({"compare", "--region-a", file, "--region-b", file, "--format",
               "covariances", "--looks", "4", "--eta", "0.05"});
    EXPECT_EQ(0, table.code);
    EXPECT_NE(std::string::npos, table.out.find("Similar"));
}

TEST_F(CliTest, compare_distinct)
{
    auto const a = write_covariances("a.csv", 0.2, 2000, 1);
    auto const b = write_covariances("b.csv", 0.8, 2000, 2);
    auto const r = run({"compare", "--region-a", a, "--region-b", b,
                        "--format", "covariances", "--looks", "4", "--eta",
                        "0.05", "--machine", "--hellinger-mode", "inverted",
                        "--quantile", "lower", "--beta", "0.3"});
    ASSERT_EQ(0, r.code) << r.err;
    auto const kv = key_values(r.out);
    EXPECT_EQ("Distinct", kv.at("decision_kl"));
    EXPECT_EQ("Distinct", kv.at("decision_hellinger"));
    EXPECT_EQ("inverted", kv.at("hellinger_mode"));
    EXPECT_EQ("lower", kv.at("quantile"));
    EXPECT_EQ("0.3", kv.at("beta"));
}

TEST_F(CliTest, data_errors)
{
    std::ofstream(path("bad.csv")) << "z11,re_z12,im_z12,z22\n1,0,0,1\n"
                                      "1,0.5,0\n";
    auto const good = write_covariances("a.csv", 0.5, 20, 1);
    auto r = run({"compare", "--region-a", good, "--region-b", path("bad.csv"),
                  "--format", "covariances", "--looks", "4", "--eta", "0.05"});
    EXPECT_EQ(3, r.code);
    EXPECT_NE(std::string::npos, r.err.find("bad.csv:3:")) << r.err;

    r = run({"estimate", "--input", path("missing.csv"), "--format", "looks"});
    EXPECT_EQ(3, r.code);

    std::ofstream(path("empty.csv")) << "# nothing\n";
    r = run({"estimate", "--input", path("empty.csv"), "--format", "looks"});
    EXPECT_EQ(3, r.code);
}

TEST_F(CliTest, domain_errors)
{
    auto const file = write_covariances("a.csv", 0.5, 20, 1);
    auto r = run({"compare", "--region-a", file, "--region-b", file,
                  "--format", "covariances", "--looks", "1", "--eta", "0.05"});
    EXPECT_EQ(4, r.code);
    r = run({"sensitivity", "--rho1", "0.5", "--looks", "2", "--n1", "1",
             "--n2", "1", "--step", "0.2"});
    EXPECT_EQ(4, r.code);
    r = run({"simulate", "size", "--runs", "10"});
    EXPECT_EQ(4, r.code);
}

TEST_F(CliTest, sensitivity)
{
    auto const r = run({"sensitivity", "--rho1", "0.70710678", "--looks", "2",
                        "--n1", "1", "--n2", "1", "--step", "0.01", "--out",
                        path("curve.csv")});
    ASSERT_EQ(0, r.code) << r.err;
    auto const csv = slurp(path("curve.csv"));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ("rho2,s_kl,s_renyi,s_bhattacharyya,s_hellinger", line);
    int rows = 0;
    bool zero_row = false;
    while (std::getline(in, line))
    {
        ++rows;
        if (line == "0.70710678,0,0,0,0")
        {
            zero_row = true;
        }
    }
    EXPECT_EQ(100, rows);
    EXPECT_TRUE(zero_row);

    auto const meta = key_values(slurp(path("curve.csv.meta")));
    EXPECT_EQ("100", meta.at("points"));
    EXPECT_EQ("0.70710678", meta.at("rho1"));

    run({"sensitivity", "--rho1", "0.70710678", "--looks", "2", "--n1", "1",
         "--n2", "1", "--step", "0.01", "--out", path("again.csv")});
    EXPECT_EQ(csv, slurp(path("again.csv")));

    auto const stdout_run = run({"sensitivity", "--rho1", "0.70710678",
                                 "--looks", "2", "--n1", "1", "--n2", "1",
                                 "--step", "0.01"});
    EXPECT_EQ(csv, stdout_run.out);
}

TEST_F(CliTest, simulate_deterministic)
{
    std::vector<std::vector<std::string>> const commands{
        {"simulate", "size", "--rho", "0.5", "--runs", "200", "--n", "100",
         "--seed", "11"},
        {"simulate", "power", "--rho1", "0.3", "--rho2", "0.5", "--runs",
         "100", "--n", "50", "--seed", "12", "--estimator", "sample"},
        {"simulate", "oracle", "--rho1", "0", "--rho2", "0.6", "--samples",
         "5000", "--seed", "13"},
    };
    for (auto const& base : commands)
    {
        auto one = base;
        one.insert(one.end(), {"--workers", "1"});
        auto many = base;
        many.insert(many.end(), {"--workers", "4"});
        auto const a = run(one);
        auto const b = run(many);
        auto const c = run(many);
        ASSERT_EQ(0, a.code) << a.err;
        EXPECT_EQ(a.out, b.out) << base[1];
        EXPECT_EQ(b.out, c.out) << base[1];
    }
}

TEST_F(CliTest, simulate_oracle_kinds)
{
    auto const r = run({"simulate", "oracle", "--kind", "kl", "--rho1", "0",
                        "--rho2", "0.6", "--samples", "20000", "--out",
                        path("oracle.txt")});
    ASSERT_EQ(0, r.code) << r.err;
    auto const kv = key_values(slurp(path("oracle.txt")));
    EXPECT_EQ(1u, kv.count("kl.mc_value"));
    EXPECT_EQ(0u, kv.count("hellinger.mc_value"));
    EXPECT_DOUBLE_EQ(2.25, std::stod(kv.at("kl.closed_form")));
    EXPECT_EQ(2, run({"simulate", "oracle", "--kind", "tv", "--rho1", "0",
                      "--rho2", "0.6"})
                     .code);
}

TEST_F(CliTest, estimate)
{
    std::ofstream(path("looks.csv")) << "re_y1,im_y1,re_y2,im_y2\n"
                                        "1,0,1,0\n1,0,-1,0\n2,0,0.5,0\n";
    auto const r
        = run({"estimate", "--input", path("looks.csv"), "--format", "looks"});
    ASSERT_EQ(0, r.code) << r.err;
    auto const kv = key_values(r.out);
    EXPECT_EQ(1u, kv.count("rho_modulus"));
    EXPECT_EQ(1u, kv.count("enl_channel1"));
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace polcontrast
