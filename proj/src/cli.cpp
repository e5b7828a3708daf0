//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cli.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "polcontrast/errors.hpp"
#include "polcontrast/format.hpp"
#include "polcontrast/io.hpp"
#include "polcontrast/monte_carlo.hpp"
#include "polcontrast/workflow.hpp"

namespace polcontrast
{
namespace
{
//---------------------------------------------------------------------------//
class UsageError : public Error
{
  public:
    using Error::Error;
};

std::map<std::string, SampleFormat> const format_names{
    {"looks", SampleFormat::looks}, {"covariances", SampleFormat::covariances}};
std::map<std::string, QuantileConvention> const quantile_names{
    {"upper", QuantileConvention::upper_tail},
    {"lower", QuantileConvention::lower_tail}};
std::map<std::string, HellingerMode> const hellinger_names{
    {"paper", HellingerMode::paper}, {"inverted", HellingerMode::inverted}};
std::map<std::string, CorrelationEstimator> const estimator_names{
    {"sample", CorrelationEstimator::sample},
    {"unit-ml", CorrelationEstimator::unit_ml}};

template<class T>
CLI::CheckedTransformer choices(std::map<std::string, T> const& names)
{
    return CLI::CheckedTransformer(names, CLI::ignore_case);
}

//! Write to `path`, or to `fallback` when no path was given.
void emit(std::string const& path,
          std::ostream& fallback,
          std::function<void(std::ostream&)> const& write)
{
    if (path.empty())
    {
        write(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
    {
        throw DataError("cannot write '" + path + "'");
    }
    write(file);
    if (!file)
    {
        throw DataError("error while writing '" + path + "'");
    }
}

//---------------------------------------------------------------------------//
struct CompareArgs
{
    std::string region_a;
    std::string region_b;
    SampleFormat format{SampleFormat::covariances};
    std::optional<double> looks;
    double eta{0.05};
    double beta{0.5};
    QuantileConvention quantile{QuantileConvention::upper_tail};
    HellingerMode hellinger{HellingerMode::paper};
    CorrelationEstimator estimator{CorrelationEstimator::sample};
    std::string out;
    bool machine{false};
};

void run_compare(CompareArgs const& args, std::ostream& out)
{
    if (!args.looks)
    {
        throw UsageError(
            "compare: --looks is required; the number of looks must be "
            "known. Run 'polcontrast estimate --input FILE --format FORMAT' "
            "for an equivalent-number-of-looks estimate.");
    }
    CompareOptions options;
    options.looks = Looks{*args.looks};
    options.eta_level = args.eta;
    options.beta = args.beta;
    options.quantile = args.quantile;
    options.hellinger_mode = args.hellinger;
    options.estimator = args.estimator;

    auto const a = read_region_samples(args.region_a, args.format);
    auto const b = read_region_samples(args.region_b, args.format);
    auto const report = compare_regions(a, b, options);

    if (args.machine)
    {
        write_report_machine(out, report);
    }
    else
    {
        write_report_table(out, report);
    }
    if (!args.out.empty())
    {
        emit(args.out, out, [&](std::ostream& os) {
            write_report_machine(os, report);
        });
    }
}

//---------------------------------------------------------------------------//
struct SensitivityArgs
{
    double rho1{0};
    double looks{2};
    double beta{0.5};
    std::size_t n1{1};
    std::size_t n2{1};
    double step{0.01};
    std::string out;
};

void run_sensitivity(SensitivityArgs const& args, std::ostream& out)
{
    auto const curve = sensitivity_curve(
        args.rho1, Looks{args.looks}, args.beta, args.n1, args.n2, args.step);
    emit(args.out, out, [&](std::ostream& os) { write_curve_csv(os, curve); });
    if (!args.out.empty())
    {
        // Parameters live beside the data so the CSV itself stays minimal
        emit(args.out + ".meta", out, [&](std::ostream& os) {
            os << "tool=polcontrast sensitivity\n"
               << "rho1=" << format_number(args.rho1) << '\n'
               << "looks=" << format_number(args.looks) << '\n'
               << "beta=" << format_number(args.beta) << '\n'
               << "n1=" << args.n1 << '\n'
               << "n2=" << args.n2 << '\n'
               << "step=" << format_number(args.step) << '\n'
               << "points=" << curve.size() << '\n';
        });
    }
}

//---------------------------------------------------------------------------//
struct SimulateArgs
{
    std::uint64_t seed{1};
    std::size_t runs{1000};
    unsigned workers{0};
    double rho1{0.5};
    double rho2{0.5};
    double looks{4};
    std::size_t n{500};
    double eta{0.05};
    QuantileConvention quantile{QuantileConvention::upper_tail};
    HellingerMode hellinger{HellingerMode::paper};
    CorrelationEstimator estimator{CorrelationEstimator::unit_ml};
    std::string kind{"all"};
    double beta{0.5};
    std::size_t samples{100000};
    std::string out;
};

void run_rejections(SimulateArgs const& args, bool same_rho, std::ostream& out)
{
    RegionTestConfig cfg;
    cfg.eta_level = args.eta;
    cfg.quantile = args.quantile;
    cfg.hellinger_mode = args.hellinger;
    SimulationOptions options;
    options.estimator = args.estimator;
    options.workers = args.workers;
    SimulationScenario const scenario{
        args.rho1, same_rho ? args.rho1 : args.rho2, Looks{args.looks}, args.n};
    auto const result
        = simulate_rejections(scenario, cfg, args.runs, args.seed, options);
    emit(args.out, out, [&](std::ostream& os) { write_size_power(os, result); });
}

void run_oracle(SimulateArgs const& args, std::ostream& out)
{
    std::vector<DistanceKind> kinds;
    for (auto kind : all_distance_kinds(args.beta))
    {
        if (args.kind == "all" || args.kind == kind.name())
        {
            kinds.push_back(kind);
        }
    }
    if (kinds.empty())
    {
        throw UsageError("simulate oracle: unknown --kind '" + args.kind
                         + "'");
    }
    SimulationScenario const scenario{
        args.rho1, args.rho2, Looks{args.looks}, args.samples};
    WishartParams const p1{unit_covariance(args.rho1), scenario.looks};
    WishartParams const p2{unit_covariance(args.rho2), scenario.looks};

    std::vector<OracleRow> rows;
    for (auto kind : kinds)
    {
        rows.push_back(
            {kind,
             mc_divergence(kind, p1, p2, args.samples, args.seed, args.workers),
             distance(kind, args.rho1, args.rho2, scenario.looks)});
    }
    emit(args.out, out, [&](std::ostream& os) {
        write_oracle(os, scenario, rows);
    });
}

//---------------------------------------------------------------------------//
struct EstimateArgs
{
    std::string input;
    SampleFormat format{SampleFormat::covariances};
    std::string out;
};

void run_estimate(EstimateArgs const& args, std::ostream& out)
{
    auto const data = read_region_samples(args.input, args.format);
    emit(args.out, out, [&](std::ostream& os) {
        write_estimate(os, data, args.input);
    });
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
int run_cli(std::vector<std::string> const& args,
            std::ostream& out,
            std::ostream& err)
{
    CLI::App app{"Contrast between PolSAR regions from closed-form "
                 "stochastic distances of correlation-parametrized Wishart "
                 "models",
                 "polcontrast"};
    app.require_subcommand(1);

    CompareArgs compare_args;
    auto* compare = app.add_subcommand(
        "compare", "Compare two regions and decide Similar/Distinct");
    compare->add_option("--region-a", compare_args.region_a, "First region file")
        ->required();
    compare->add_option("--region-b", compare_args.region_b, "Second region file")
        ->required();
    compare->add_option("--format", compare_args.format, "looks|covariances")
        ->required()
        ->transform(choices(format_names));
    compare->add_option("--looks", compare_args.looks, "Number of looks L");
    compare->add_option("--eta", compare_args.eta, "Nominal level")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    compare->add_option("--beta", compare_args.beta, "Renyi order")
        ->capture_default_str();
    compare->add_option("--quantile", compare_args.quantile, "upper|lower")
        ->transform(choices(quantile_names));
    compare->add_option("--hellinger-mode", compare_args.hellinger,
                        "paper|inverted")
        ->transform(choices(hellinger_names));
    compare->add_option("--estimator", compare_args.estimator, "sample|unit-ml")
        ->transform(choices(estimator_names));
    compare->add_option("--out", compare_args.out,
                        "Write the key=value report here");
    compare->add_flag("--machine", compare_args.machine,
                      "Print the key=value report instead of the table");

    SensitivityArgs sens_args;
    auto* sensitivity = app.add_subcommand(
        "sensitivity", "Statistics as |rho2| sweeps [0, 1) (CSV)");
    sensitivity->add_option("--rho1", sens_args.rho1, "|rho1|")->required();
    sensitivity->add_option("--looks", sens_args.looks, "Number of looks")
        ->required();
    sensitivity->add_option("--beta", sens_args.beta, "Renyi order")
        ->capture_default_str();
    sensitivity->add_option("--n1", sens_args.n1, "First sample size")
        ->required();
    sensitivity->add_option("--n2", sens_args.n2, "Second sample size")
        ->required();
    sensitivity->add_option("--step", sens_args.step, "Grid step")->required();
    sensitivity->add_option("--out", sens_args.out, "CSV output path");

    SimulateArgs sim_args;
    auto* simulate
        = app.add_subcommand("simulate", "Monte Carlo size, power and oracle");
    simulate->require_subcommand(1);
    auto add_common = [&sim_args](CLI::App* cmd) {
        cmd->add_option("--seed", sim_args.seed, "Random seed")
            ->capture_default_str();
        cmd->add_option("--workers", sim_args.workers,
                        "Worker threads (0 = all cores)");
        cmd->add_option("--out", sim_args.out, "Output path");
    };
    auto add_test = [&](CLI::App* cmd) {
        add_common(cmd);
        cmd->add_option("--runs", sim_args.runs, "Simulated region pairs")
            ->capture_default_str();
        cmd->add_option("--looks", sim_args.looks, "Integer number of looks")
            ->capture_default_str();
        cmd->add_option("--n", sim_args.n, "Observations per region")
            ->capture_default_str();
        cmd->add_option("--eta", sim_args.eta, "Nominal level")
            ->capture_default_str();
        cmd->add_option("--quantile", sim_args.quantile, "upper|lower")
            ->transform(choices(quantile_names));
        cmd->add_option("--hellinger-mode", sim_args.hellinger,
                        "paper|inverted")
            ->transform(choices(hellinger_names));
        cmd->add_option("--estimator", sim_args.estimator, "sample|unit-ml")
            ->transform(choices(estimator_names));
    };
    auto* size = simulate->add_subcommand("size", "Rejection rate under H0");
    add_test(size);
    size->add_option("--rho", sim_args.rho1, "Common |rho|")
        ->capture_default_str();
    auto* power
        = simulate->add_subcommand("power", "Rejection rate for rho1 != rho2");
    add_test(power);
    power->add_option("--rho1", sim_args.rho1, "|rho1|")->required();
    power->add_option("--rho2", sim_args.rho2, "|rho2|")->required();
    auto* oracle = simulate->add_subcommand(
        "oracle", "Sampled divergences against the closed forms");
    add_common(oracle);
    oracle->add_option("--kind", sim_args.kind,
                       "kl|renyi|bhattacharyya|hellinger|all")
        ->capture_default_str();
    oracle->add_option("--rho1", sim_args.rho1, "|rho1|")->required();
    oracle->add_option("--rho2", sim_args.rho2, "|rho2|")->required();
    oracle->add_option("--looks", sim_args.looks, "Integer number of looks")
        ->capture_default_str();
    oracle->add_option("--samples", sim_args.samples, "Draws per model")
        ->capture_default_str();
    oracle->add_option("--beta", sim_args.beta, "Renyi order")
        ->capture_default_str();

    EstimateArgs est_args;
    auto* estimate = app.add_subcommand(
        "estimate", "Estimate rho, Sigma and the ENL of one region");
    estimate->add_option("--input", est_args.input, "Region file")->required();
    estimate->add_option("--format", est_args.format, "looks|covariances")
        ->required()
        ->transform(choices(format_names));
    estimate->add_option("--out", est_args.out, "Output path");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (*compare)
            run_compare(compare_args, out);
        else if (*sensitivity)
            run_sensitivity(sens_args, out);
        else if (*size)
            run_rejections(sim_args, true, out);
        else if (*power)
            run_rejections(sim_args, false, out);
        else if (*oracle)
            run_oracle(sim_args, out);
        else if (*estimate)
            run_estimate(est_args, out);
    }
    catch (CLI::CallForHelp const&)
    {
        out << (app.get_subcommands().empty()
                    ? app.help()
                    : app.get_subcommands().back()->help());
        return exit_success;
    }
    catch (CLI::CallForAllHelp const&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_success;
    }
    catch (CLI::ParseError const& e)
    {
        err << "polcontrast: " << e.what() << '\n'
            << "Run with --help for usage.\n";
        return exit_usage;
    }
    catch (UsageError const& e)
    {
        err << "polcontrast: " << e.what() << '\n';
        return exit_usage;
    }
    catch (DataError const& e)
    {
        err << "polcontrast: data error: " << e.what() << '\n';
        return exit_data;
    }
    catch (DomainError const& e)
    {
        err << "polcontrast: numeric domain error: " << e.what() << '\n';
        return exit_domain;
    }
    catch (LooksMismatch const& e)
    {
        err << "polcontrast: numeric domain error: " << e.what() << '\n';
        return exit_domain;
    }
    catch (std::exception const& e)
    {
        err << "polcontrast: internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_success;
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
