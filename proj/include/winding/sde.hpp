#pragma once

// Euler-Maruyama integration of planar Brownian motion with a point-vortex
// drift, dR = R^perp * beta/|R|^2 dt + sqrt(2) dW, with radial-mirror
// reflection at circular boundaries. The observable is the continuous winding
// angle around the origin.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace winding {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator+(Vec2 l, Vec2 r) { return {l.x + r.x, l.y + r.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 l, Vec2 r) { return l.x * r.x + l.y * r.y; }
constexpr double cross(Vec2 l, Vec2 r) { return l.x * r.y - l.y * r.x; }
inline double norm(Vec2 v) { return std::sqrt(dot(v, v)); }

class Geometry {
public:
    enum class Kind { FreePlane, DiskExterior, Annulus };

    static Geometry free_plane() { return Geometry{Kind::FreePlane, 0.0, 0.0}; }
    // Throws ConfigError unless a > 0.
    static Geometry disk_exterior(double a);
    // Throws ConfigError unless 0 < a < b.
    static Geometry annulus(double a, double b);

    Kind kind() const { return kind_; }
    bool has_inner() const { return kind_ != Kind::FreePlane; }
    bool has_outer() const { return kind_ == Kind::Annulus; }
    // Zero when absent.
    double inner_radius() const { return a_; }
    double outer_radius() const { return b_; }

    // "point", "disk" or "annulus"; the CLI and file headers use these names.
    std::string name() const;

    bool contains(double r) const {
        return (!has_inner() || r >= a_) && (!has_outer() || r <= b_);
    }
    bool contains_squared(double r2) const {
        return (!has_inner() || r2 >= a_ * a_) && (!has_outer() || r2 <= b_ * b_);
    }

private:
    Geometry(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}
    Kind kind_;
    double a_;
    double b_;
};

struct SimParams {
    double beta = 0.0;
    double t_final = 1.0;
    double r0 = 1.0;
    double delta = 0.05;
    double dt_max = 1e-3;
    double dt_min = 1e-12;
    std::size_t n_realizations = 1;
    std::uint64_t seed = 0;

    // Default step knobs: delta = 0.05, dt_max = t_final/1000, dt_min = 1e-12.
    static SimParams with_defaults(double beta, double t_final, double r0);
};

// Throws ConfigError describing the first violated invariant.
void validate(const SimParams& params, const Geometry& geometry);

struct ParticleState {
    Vec2 position;
    double theta_acc = 0.0;
    double time = 0.0;
};

struct WindingSample {
    double theta_final = 0.0;
    std::uint64_t n_steps = 0;
    std::size_t seed_index = 0;
};

using RngStream = std::mt19937_64;

// Independent generator for trajectory `index` of an ensemble seeded with `seed`.
RngStream make_substream(std::uint64_t seed, std::uint64_t index);

// Tangential drift position^perp * beta / |position|^2. Throws DomainError at the origin.
Vec2 drift_velocity(Vec2 position, double beta);

// Adaptive step: clamp((delta r)^2/2, dt_min, dt_max), then capped so the
// deterministic rotation beta dt / r^2 stays below delta, then clipped to the
// remaining horizon.
double choose_dt(const ParticleState& state, const Geometry& geometry, const SimParams& params);

// Radial mirror into the closed domain, polar angle preserved.
// Throws StepRejected at the origin, for nonpositive mirrored radii, or after 64 mirrors.
Vec2 reflect(Vec2 position, const Geometry& geometry);

// One Euler-Maruyama step with the given standard-normal increment.
ParticleState step(const ParticleState& state, double dt, Vec2 noise, const Geometry& geometry,
                   const SimParams& params);

using StepObserver = std::function<void(const ParticleState&, double dt)>;

// Integrates one trajectory from (r0, 0) to t_final. `observer`, when set,
// sees every accepted state together with the step that produced it.
WindingSample simulate_winding(const SimParams& params, const Geometry& geometry, RngStream& stream,
                               std::size_t index = 0, const StepObserver& observer = {});

// Runs params.n_realizations trajectories; sample i uses make_substream(seed, i).
// The result does not depend on `threads` (0 selects the hardware concurrency).
std::vector<WindingSample> run_ensemble(const SimParams& params, const Geometry& geometry,
                                        unsigned threads = 0);

}  // namespace winding
