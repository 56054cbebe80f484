#include "winding/sde.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/random/normal_distribution.hpp>

#include "winding/errors.hpp"

namespace winding {

namespace {

constexpr int kMaxMirrors = 64;
constexpr int kMaxConsecutiveRejections = 100;

}  // namespace

Geometry Geometry::disk_exterior(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("disk radius a must be positive");
    return Geometry{Kind::DiskExterior, a, 0.0};
}

Geometry Geometry::annulus(double a, double b) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("annulus inner radius a must be positive");
    if (!(b > a) || !std::isfinite(b)) throw ConfigError("annulus outer radius b must exceed a");
    return Geometry{Kind::Annulus, a, b};
}

std::string Geometry::name() const {
    switch (kind_) {
        case Kind::FreePlane: return "point";
        case Kind::DiskExterior: return "disk";
        case Kind::Annulus: return "annulus";
    }
    return "unknown";
}

SimParams SimParams::with_defaults(double beta, double t_final, double r0) {
    SimParams p;
    p.beta = beta;
    p.t_final = t_final;
    p.r0 = r0;
    p.dt_max = t_final / 1000.0;
    return p;
}

void validate(const SimParams& p, const Geometry& g) {
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    if (!(p.beta >= 0.0) || !std::isfinite(p.beta)) fail("beta must be finite and >= 0");
    if (!(p.t_final > 0.0) || !std::isfinite(p.t_final)) fail("t_final must be positive");
    if (!(p.r0 > 0.0) || !std::isfinite(p.r0)) fail("r0 must be positive");
    if (!(p.delta > 0.0 && p.delta <= 0.5)) fail("delta must lie in (0, 0.5]");
    if (!(p.dt_max > 0.0)) fail("dt_max must be positive");
    if (!(p.dt_min > 0.0)) fail("dt_min must be positive");
    if (p.dt_min > p.dt_max) fail("dt_min must not exceed dt_max");
    if (p.n_realizations < 1) fail("n_realizations must be >= 1");
    if (g.has_inner() && !(p.r0 > g.inner_radius())) fail("r0 must exceed the inner radius a");
    if (g.has_outer() && !(p.r0 < g.outer_radius())) fail("r0 must be below the outer radius b");
}

RngStream make_substream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      0x9e3779b9u};
    return RngStream(seq);
}

Vec2 drift_velocity(Vec2 position, double beta) {
    const double r2 = dot(position, position);
    if (r2 == 0.0) throw DomainError("drift undefined at the origin");
    const double omega = beta / r2;
    return {-position.y * omega, position.x * omega};
}

double choose_dt(const ParticleState& state, const Geometry&, const SimParams& params) {
    const double r2 = dot(state.position, state.position);
    double dt = std::clamp(0.5 * params.delta * params.delta * r2, params.dt_min, params.dt_max);
    if (params.beta > 0.0) dt = std::min(dt, params.delta * r2 / params.beta);
    return std::min(dt, params.t_final - state.time);
}

Vec2 reflect(Vec2 position, const Geometry& geometry) {
    const double r2 = dot(position, position);
    if (r2 == 0.0) throw StepRejected("reflection undefined at the origin");
    if (geometry.contains_squared(r2)) return position;
    const double r = std::sqrt(r2);

    const double a = geometry.inner_radius();
    const double b = geometry.outer_radius();
    double mirrored = r;
    for (int i = 0; i < kMaxMirrors; ++i) {
        if (geometry.has_inner() && mirrored < a) {
            mirrored = 2.0 * a - mirrored;
        } else if (geometry.has_outer() && mirrored > b) {
            mirrored = 2.0 * b - mirrored;
        } else {
            break;
        }
        if (!(mirrored > 0.0)) throw StepRejected("mirrored radius is not positive");
    }
    if (!geometry.contains(mirrored)) throw StepRejected("reflection did not converge");
    return (mirrored / r) * position;
}

ParticleState step(const ParticleState& state, double dt, Vec2 noise, const Geometry& geometry,
                   const SimParams& params) {
    const Vec2 drift = drift_velocity(state.position, params.beta);
    const Vec2 candidate = state.position + dt * drift + std::sqrt(2.0 * dt) * noise;
    const Vec2 next = reflect(candidate, geometry);

    ParticleState out;
    out.position = next;
    out.theta_acc = state.theta_acc + std::atan2(cross(state.position, next), dot(state.position, next));
    out.time = state.time + dt;
    return out;
}

WindingSample simulate_winding(const SimParams& params, const Geometry& geometry, RngStream& stream,
                               std::size_t index, const StepObserver& observer) {
    boost::random::normal_distribution<double> normal;
    ParticleState state;
    state.position = {params.r0, 0.0};

    std::uint64_t n_steps = 0;
    int rejected = 0;
    while (state.time < params.t_final) {
        const double dt = choose_dt(state, geometry, params);
        const Vec2 noise{normal(stream), normal(stream)};
        ParticleState next;
        try {
            next = step(state, dt, noise, geometry, params);
        } catch (const StepRejected& e) {
            if (++rejected >= kMaxConsecutiveRejections) {
                std::ostringstream msg;
                msg << "trajectory " << index << ": " << rejected
                    << " consecutive rejected steps at t=" << state.time << " (" << e.what() << ")";
                throw IntegratorFailure(index, msg.str());
            }
            continue;
        }
        rejected = 0;
        // Land exactly on the horizon despite rounding in time + dt.
        if (dt >= params.t_final - state.time) next.time = params.t_final;
        state = next;
        ++n_steps;
        if (observer) observer(state, dt);
    }
    return {state.theta_acc, n_steps, index};
}

std::vector<WindingSample> run_ensemble(const SimParams& params, const Geometry& geometry,
                                        unsigned threads) {
    validate(params, geometry);
    const std::size_t n = params.n_realizations;
    std::vector<WindingSample> out(n);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex failure_mutex;
    std::size_t failed_index = std::numeric_limits<std::size_t>::max();
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            if (stop.load(std::memory_order_relaxed)) return;
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            try {
                RngStream stream = make_substream(params.seed, i);
                out[i] = simulate_winding(params, geometry, stream, i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
                stop.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace winding
