//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file format.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/format.hpp"

#include <charconv>
#include <concepts>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <string_view>

#include "polcontrast/errors.hpp"

namespace polcontrast
{
namespace
{
//---------------------------------------------------------------------------//
class KeyValueWriter
{
  public:
    explicit KeyValueWriter(std::ostream& out) : out_(out) {}

    void operator()(std::string_view key, std::string_view value)
    {
        out_ << key << '=' << value << '\n';
    }
    void operator()(std::string_view key, double value)
    {
        (*this)(key, format_number(value));
    }
    template<std::unsigned_integral T>
    void operator()(std::string_view key, T value)
    {
        out_ << key << '=' << value << '\n';
    }

  private:
    std::ostream& out_;
};

std::string_view estimator_name(CorrelationEstimator e)
{
    return e == CorrelationEstimator::sample ? "sample" : "unit-ml";
}

void write_region(KeyValueWriter& kv,
                  std::string const& prefix,
                  RegionSummary const& r)
{
    kv(prefix + ".rows", r.rows);
    kv(prefix + ".n", r.n);
    kv(prefix + ".rho_modulus", std::abs(r.rho));
    kv(prefix + ".rho_phase", std::arg(r.rho));
    kv(prefix + ".sigma11", r.sigma.z11);
    kv(prefix + ".sigma12_re", r.sigma.z12.real());
    kv(prefix + ".sigma12_im", r.sigma.z12.imag());
    kv(prefix + ".sigma22", r.sigma.z22);
}

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::string format_number(double x)
{
    if (x == 0)
    {
        return "0";
    }
    if (std::isnan(x))
    {
        return "nan";
    }
    if (std::isinf(x))
    {
        return x > 0 ? "inf" : "-inf";
    }
    char buffer[64];
    auto const [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
    return std::string(buffer, end);
}

std::string format_significant(double x, int digits)
{
    if (x == 0)
    {
        return "0";
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, x);
    return buffer;
}

//---------------------------------------------------------------------------//
void write_report_machine(std::ostream& out, ContrastReport const& report)
{
    KeyValueWriter kv(out);
    auto const& opt = report.options;
    kv("looks", opt.looks.value());
    kv("eta", opt.eta_level);
    kv("beta", opt.beta);
    kv("quantile", to_string(opt.quantile));
    kv("hellinger_mode", to_string(opt.hellinger_mode));
    kv("estimator", estimator_name(opt.estimator));
    write_region(kv, "region_a", report.region_a);
    write_region(kv, "region_b", report.region_b);
    for (auto const& m : report.measures)
    {
        std::string const name(m.kind.name());
        kv("d_" + name, m.test.distance);
        kv("s_" + name, m.test.statistic);
        kv("p_" + name, m.test.p_value);
    }
    kv("dof", static_cast<std::size_t>(report.measures[0].test.dof));
    kv("xi1", report.xi1);
    kv("t_kl", report.t_kl);
    kv("decision_kl", to_string(report.kl_decision.verdict));
    kv("xi2", report.xi2);
    kv("t_h", report.t_h);
    kv("decision_hellinger", to_string(report.hellinger_decision.verdict));
}

void write_report_table(std::ostream& out, ContrastReport const& report)
{
    auto g = [](double x) { return format_significant(x); };
    auto const& opt = report.options;
    out << "L = " << g(opt.looks.value()) << ", eta = " << g(opt.eta_level)
        << ", beta = " << g(opt.beta) << ", quantile = "
        << to_string(opt.quantile)
        << ", hellinger = " << to_string(opt.hellinger_mode)
        << ", estimator = " << estimator_name(opt.estimator) << "\n\n";

    out << pad("Region", 8) << pad("N", 10) << pad("|rho|", 12)
        << pad("arg(rho)", 12) << pad("sigma11", 12) << pad("sigma22", 12)
        << "|sigma12|\n";
    for (auto const& [label, r] :
         {std::pair{"A", &report.region_a}, std::pair{"B", &report.region_b}})
    {
        out << pad(label, 8) << pad(std::to_string(r->n), 10)
            << pad(g(std::abs(r->rho)), 12) << pad(g(std::arg(r->rho)), 12)
            << pad(g(r->sigma.z11), 12) << pad(g(r->sigma.z22), 12)
            << g(std::abs(r->sigma.z12)) << '\n';
    }

    out << '\n'
        << pad("Measure", 16) << pad("distance", 14) << pad("statistic", 14)
        << "p-value\n";
    for (auto const& m : report.measures)
    {
        out << pad(std::string(m.kind.name()), 16)
            << pad(g(m.test.distance), 14) << pad(g(m.test.statistic), 14)
            << g(m.test.p_value) << '\n';
    }

    out << '\n'
        << pad("Rule", 12) << pad("xi", 12) << pad("threshold", 12)
        << "Decision\n";
    out << pad("KL", 12) << pad(g(report.xi1), 12) << pad(g(report.t_kl), 12)
        << to_string(report.kl_decision.verdict) << '\n';
    out << pad("Hellinger", 12) << pad(g(report.xi2), 12)
        << pad(g(report.t_h), 12)
        << to_string(report.hellinger_decision.verdict) << '\n';
}

//---------------------------------------------------------------------------//
void write_curve_csv(std::ostream& out, std::vector<CurvePoint> const& curve)
{
    out << "rho2,s_kl,s_renyi,s_bhattacharyya,s_hellinger\n";
    for (auto const& p : curve)
    {
        out << format_number(p.rho2_mod);
        for (double s : p.statistic)
        {
            out << ',' << format_number(s);
        }
        out << '\n';
    }
}

void write_size_power(std::ostream& out, SizePowerResult const& result)
{
    KeyValueWriter kv(out);
    auto const& sc = result.scenario;
    kv("seed", result.seed);
    kv("runs", result.runs);
    kv("rho1_modulus", std::abs(sc.rho1));
    kv("rho2_modulus", std::abs(sc.rho2));
    kv("looks", sc.looks.value());
    kv("n", sc.n);
    kv("eta", result.config.eta_level);
    kv("quantile", to_string(result.config.quantile));
    kv("hellinger_mode", to_string(result.config.hellinger_mode));
    kv("kl_rejections", result.kl_rejections);
    kv("kl_rejection_rate", result.rejection_rate);
    kv("hellinger_rejections", result.hellinger_rejections);
    kv("hellinger_rejection_rate", result.hellinger_rejection_rate);
    kv("kl_statistic_exceedances", result.exceedances);
    kv("kl_statistic_exceedance_rate", result.exceedance_rate);
}

void write_oracle(std::ostream& out,
                  SimulationScenario const& scenario,
                  std::vector<OracleRow> const& rows)
{
    KeyValueWriter kv(out);
    kv("rho1_modulus", std::abs(scenario.rho1));
    kv("rho2_modulus", std::abs(scenario.rho2));
    kv("looks", scenario.looks.value());
    if (!rows.empty())
    {
        kv("samples", rows.front().estimate.n_samples);
        kv("seed", rows.front().estimate.seed);
    }
    for (auto const& row : rows)
    {
        std::string const name(row.kind.name());
        if (row.kind.family() == DistanceFamily::renyi)
        {
            kv("beta", row.kind.beta());
        }
        kv(name + ".mc_value", row.estimate.value);
        kv(name + ".mc_std_error", row.estimate.std_error);
        kv(name + ".closed_form", row.closed_form);
        double const z = row.estimate.std_error > 0
                             ? (row.estimate.value - row.closed_form)
                                   / row.estimate.std_error
                             : 0.0;
        kv(name + ".z_score", z);
    }
}

void write_estimate(std::ostream& out,
                    RegionData const& data,
                    std::string const& source)
{
    KeyValueWriter kv(out);
    kv("input", source);
    std::vector<double> power1, power2;
    HermitianMatrix2 sigma;
    Complex rho;
    if (auto const* covs = std::get_if<RegionSample>(&data))
    {
        kv("format", "covariances");
        kv("rows", covs->size());
        sigma = estimate_covariance_ml(*covs);
        rho = estimate_correlation_from_covariances(*covs);
        for (auto const& m : covs->observations)
        {
            power1.push_back(m.z11);
            power2.push_back(m.z22);
        }
    }
    else
    {
        auto const& looks = std::get<ScatteringVectorSample>(data);
        kv("format", "looks");
        kv("rows", looks.size());
        sigma = estimate_covariance_ml(looks);
        rho = estimate_correlation_from_looks(looks);
        for (auto const& [y1, y2] : looks.looks)
        {
            power1.push_back(std::norm(y1));
            power2.push_back(std::norm(y2));
        }
    }
    kv("rho_modulus", std::abs(rho));
    kv("rho_phase", std::arg(rho));
    kv("sigma11", sigma.z11);
    kv("sigma12_re", sigma.z12.real());
    kv("sigma12_im", sigma.z12.imag());
    kv("sigma22", sigma.z22);
    kv("enl_channel1", estimate_enl(power1));
    kv("enl_channel2", estimate_enl(power2));
}

//---------------------------------------------------------------------------//
std::map<std::string, std::string> parse_key_values(std::istream& in)
{
    std::map<std::string, std::string> result;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line))
    {
        ++number;
        if (line.empty() || line.front() == '#')
            continue;
        auto const eq = line.find('=');
        if (eq == std::string::npos)
        {
            throw ParseError(number, "expected key=value");
        }
        result[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
