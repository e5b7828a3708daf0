//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file monte_carlo.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>
#include <vector>

#include "polcontrast/errors.hpp"

namespace polcontrast
{
namespace
{
//---------------------------------------------------------------------------//
//! Run fn(i) for i in [0, count) on up to `workers` threads.
template<class F>
void parallel_for(std::size_t count, unsigned workers, F&& fn)
{
    if (workers == 0)
    {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(
        std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
        {
            fn(i);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++)
        {
            try
            {
                fn(i);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
    {
        pool.emplace_back(work);
    }
    pool.clear();
    if (failure)
    {
        std::rethrow_exception(failure);
    }
}

//---------------------------------------------------------------------------//
//! Welford mean and squared deviations, mergeable (Chan et al.).
struct Moments
{
    std::size_t n{0};
    double mean{0};
    double m2{0};

    void add(double x)
    {
        ++n;
        double const delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    void merge(Moments const& other)
    {
        if (other.n == 0)
            return;
        double const na = static_cast<double>(n);
        double const nb = static_cast<double>(other.n);
        double const delta = other.mean - mean;
        double const total = na + nb;
        mean += delta * nb / total;
        m2 += other.m2 + delta * delta * na * nb / total;
        n += other.n;
    }

    //! Variance of the sample mean.
    double mean_variance() const
    {
        double const count = static_cast<double>(n);
        return n > 1 ? m2 / (count - 1) / count : 0;
    }
};

//! Moments of exp(w) accumulated from log-weights w with a running shift.
struct LogMoments
{
    std::size_t n{0};
    double shift{-std::numeric_limits<double>::infinity()};
    double s1{0};  // sum of exp(w - shift)
    double s2{0};  // sum of exp(2 (w - shift))

    void rescale(double new_shift)
    {
        if (new_shift > shift)
        {
            double const f = std::exp(shift - new_shift);
            s1 *= f;
            s2 *= f * f;
            shift = new_shift;
        }
    }

    void add(double w)
    {
        ++n;
        this->rescale(w);
        double const e = std::exp(w - shift);
        s1 += e;
        s2 += e * e;
    }

    void merge(LogMoments other)
    {
        if (other.n == 0)
            return;
        double const common = std::max(shift, other.shift);
        this->rescale(common);
        other.rescale(common);
        s1 += other.s1;
        s2 += other.s2;
        n += other.n;
    }

    //! Mean and variance of the mean, both scaled by exp(-shift).
    double scaled_mean() const { return s1 / static_cast<double>(n); }
    double scaled_mean_variance() const
    {
        double const count = static_cast<double>(n);
        double const m = this->scaled_mean();
        double const var = std::max(0.0, s2 / count - m * m) * count
                           / (count - 1);
        return var / count;
    }
};

struct BlockSummary
{
    Moments kl1, kl2;
    LogMoments aff1, aff2;
};

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
McEstimate mc_divergence(DistanceKind kind,
                         WishartParams const& p1,
                         WishartParams const& p2,
                         std::size_t n,
                         std::uint64_t seed,
                         unsigned workers)
{
    if (n < 1000)
    {
        throw DomainError("mc_divergence needs at least 1000 draws");
    }
    WishartDensity const f1(p1);
    WishartDensity const f2(p2);
    WishartSampler const draw1(p1);
    WishartSampler const draw2(p2);

    bool const is_kl = kind.family() == DistanceFamily::kullback_leibler;
    double const exponent = kind.family() == DistanceFamily::renyi
                                ? 1 - kind.beta()
                                : 0.5;

    std::size_t const nblocks = (n + kDrawsPerBlock - 1) / kDrawsPerBlock;
    std::vector<BlockSummary> blocks(nblocks);
    parallel_for(nblocks, workers, [&](std::size_t b) {
        RandomStream rng1(seed, 2 * b);
        RandomStream rng2(seed, 2 * b + 1);
        std::size_t const begin = b * kDrawsPerBlock;
        std::size_t const end = std::min(n, begin + kDrawsPerBlock);
        BlockSummary& out = blocks[b];
        for (std::size_t i = begin; i < end; ++i)
        {
            HermitianMatrix2 const z1 = draw1(rng1);
            HermitianMatrix2 const z2 = draw2(rng2);
            // log f1/f2 under model 1, log f2/f1 under model 2
            double const r1 = f1.log_density(z1) - f2.log_density(z1);
            double const r2 = f2.log_density(z2) - f1.log_density(z2);
            if (is_kl)
            {
                out.kl1.add(r1);
                out.kl2.add(r2);
            }
            else
            {
                out.aff1.add(-exponent * r1);
                out.aff2.add(-exponent * r2);
            }
        }
    });

    BlockSummary total;
    for (auto const& b : blocks)
    {
        total.kl1.merge(b.kl1);
        total.kl2.merge(b.kl2);
        total.aff1.merge(b.aff1);
        total.aff2.merge(b.aff2);
    }

    McEstimate result;
    result.n_samples = n;
    result.seed = seed;
    if (is_kl)
    {
        result.value = 0.5 * (total.kl1.mean + total.kl2.mean);
        result.std_error = 0.5
                           * std::sqrt(total.kl1.mean_variance()
                                       + total.kl2.mean_variance());
        return result;
    }

    // Sum of the two affinities in units of exp(common)
    double const common = std::max(total.aff1.shift, total.aff2.shift);
    double const w1 = std::exp(total.aff1.shift - common);
    double const w2 = std::exp(total.aff2.shift - common);
    double const sum = w1 * total.aff1.scaled_mean()
                       + w2 * total.aff2.scaled_mean();
    double const sum_se
        = std::sqrt(w1 * w1 * total.aff1.scaled_mean_variance()
                    + w2 * w2 * total.aff2.scaled_mean_variance());
    double const log_sum = common + std::log(sum);

    switch (kind.family())
    {
        case DistanceFamily::renyi:
            result.value = (std::numbers::ln2 - log_sum) / (1 - kind.beta());
            result.std_error = sum_se / sum / (1 - kind.beta());
            break;
        case DistanceFamily::bhattacharyya:
            result.value = std::numbers::ln2 - log_sum;
            result.std_error = sum_se / sum;
            break;
        case DistanceFamily::hellinger: {
            double const scale = std::exp(common);
            result.value = 1 - 0.5 * sum * scale;
            result.std_error = 0.5 * sum_se * scale;
            break;
        }
        case DistanceFamily::kullback_leibler:
            break;
    }
    return result;
}

//---------------------------------------------------------------------------//
SizePowerResult simulate_rejections(SimulationScenario const& scenario,
                                    RegionTestConfig const& cfg,
                                    std::size_t runs,
                                    std::uint64_t seed,
                                    SimulationOptions const& options)
{
    if (runs < 100)
    {
        throw DomainError("simulation needs at least 100 runs");
    }
    if (scenario.n < 10)
    {
        throw DomainError("simulated regions need at least 10 observations");
    }

    SizePowerResult result;
    result.scenario = scenario;
    result.seed = seed;
    result.runs = runs;
    result.config = cfg;
    result.config.n1 = scenario.n;
    result.config.n2 = scenario.n;
    result.config.looks = scenario.looks;

    double const q = critical_value(result.config);
    double const t_kl = kl_threshold(result.config);
    double const t_h = hellinger_threshold(result.config);

    WishartSampler const draw1({unit_covariance(scenario.rho1), scenario.looks});
    WishartSampler const draw2({unit_covariance(scenario.rho2), scenario.looks});

    enum : unsigned char
    {
        kl_reject = 1,
        hellinger_reject = 2,
        exceeds = 4
    };
    std::vector<unsigned char> outcome(runs, 0);
    parallel_for(runs, options.workers, [&](std::size_t run) {
        RandomStream rng(seed, run);
        RegionSample region1, region2;
        region1.observations.reserve(scenario.n);
        region2.observations.reserve(scenario.n);
        for (std::size_t i = 0; i < scenario.n; ++i)
        {
            region1.observations.push_back(draw1(rng));
        }
        for (std::size_t i = 0; i < scenario.n; ++i)
        {
            region2.observations.push_back(draw2(rng));
        }
        Complex const r1 = estimate_correlation(region1, options.estimator);
        Complex const r2 = estimate_correlation(region2, options.estimator);

        unsigned char flags = 0;
        if (decide_kl(xi1(r1, r2), t_kl).verdict == Verdict::distinct)
            flags |= kl_reject;
        if (decide_hellinger(xi2(r1, r2), t_h).verdict == Verdict::distinct)
            flags |= hellinger_reject;
        double const s_kl = test_statistic(DistanceKind::kullback_leibler(),
                                           d_kl(r1, r2, scenario.looks),
                                           scenario.n,
                                           scenario.n);
        if (s_kl > q)
            flags |= exceeds;
        outcome[run] = flags;
    });

    for (unsigned char flags : outcome)
    {
        result.kl_rejections += (flags & kl_reject) ? 1 : 0;
        result.hellinger_rejections += (flags & hellinger_reject) ? 1 : 0;
        result.exceedances += (flags & exceeds) ? 1 : 0;
    }
    double const total = static_cast<double>(runs);
    result.rejection_rate = static_cast<double>(result.kl_rejections) / total;
    result.hellinger_rejection_rate
        = static_cast<double>(result.hellinger_rejections) / total;
    result.exceedance_rate = static_cast<double>(result.exceedances) / total;
    return result;
}

SizePowerResult empirical_test_size(Complex rho,
                                    Looks looks,
                                    std::size_t n,
                                    RegionTestConfig const& cfg,
                                    std::size_t runs,
                                    std::uint64_t seed,
                                    SimulationOptions const& options)
{
    return simulate_rejections({rho, rho, looks, n}, cfg, runs, seed, options);
}

SizePowerResult empirical_power(Complex rho1,
                                Complex rho2,
                                Looks looks,
                                std::size_t n,
                                RegionTestConfig const& cfg,
                                std::size_t runs,
                                std::uint64_t seed,
                                SimulationOptions const& options)
{
    return simulate_rejections({rho1, rho2, looks, n}, cfg, runs, seed, options);
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
