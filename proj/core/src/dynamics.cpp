#include "qcorr/dynamics.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "qcorr/channels.hpp"
#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kCrossCheckTol = 1e-12;

unsigned resolve_workers(unsigned requested, std::size_t jobs) {
    unsigned w = requested;
    if (w == 0) {
        w = std::thread::hardware_concurrency();
        if (w == 0) w = 1;
    }
    if (static_cast<std::size_t>(w) > jobs) w = static_cast<unsigned>(jobs);
    return std::max(w, 1u);
}

// Index fan-out over a worker pool.  Exceptions from workers are captured and
// rethrown on the calling thread after join.
void parallel_for_index(std::size_t count, unsigned workers,
                        const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    workers = resolve_workers(workers, count);
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) {
        throw ParameterOutOfRange("trajectory grid must not be empty");
    }
    if (grid.front() != 0.0) {
        throw ParameterOutOfRange("trajectory grid must start at 0");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw ParameterOutOfRange("trajectory grid must be strictly ascending");
        }
    }
}

void cross_check_operator_sum(const DensityMatrix& rho0, double gamma_t,
                              const DensityMatrix& closed_form) {
    const KrausChannel lifted =
        lift_to_composite(qutrit_dephasing_gamma_t(gamma_t), rho0.index());
    const DensityMatrix via_kraus = apply(lifted, rho0);
    const double residual = max_abs_difference(via_kraus.matrix(), closed_form.matrix());
    if (residual > kCrossCheckTol) {
        throw Error("trajectory cross-check failed: operator-sum and closed-form paths "
                    "disagree beyond 1e-12");
    }
}

} // namespace

std::string to_string(DiscordClass c) {
    switch (c) {
        case DiscordClass::Invariant: return "invariant";
        case DiscordClass::FrozenThenDecay: return "frozen-then-decay";
        case DiscordClass::Decaying: return "decaying";
    }
    return "invariant";
}

std::optional<DiscordClass> discord_class_from_string(const std::string& s) {
    if (s == "invariant") return DiscordClass::Invariant;
    if (s == "frozen-then-decay") return DiscordClass::FrozenThenDecay;
    if (s == "decaying") return DiscordClass::Decaying;
    return std::nullopt;
}

std::vector<double> uniform_grid(double start, double stop, double step) {
    if (!(step > 0.0)) throw ParameterOutOfRange("grid step must be > 0");
    if (stop < start) throw ParameterOutOfRange("grid stop must be >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
    std::vector<double> grid(count + 1);
    for (std::size_t i = 0; i <= count; ++i) grid[i] = start + static_cast<double>(i) * step;
    return grid;
}

Trajectory run_trajectory(const TrajectoryConfig& cfg) {
    check_grid(cfg.gamma_t);
    const DensityMatrix rho0 = family_state(cfg.p);

    Trajectory tr;
    tr.config = cfg;
    tr.points.resize(cfg.gamma_t.size());

    const std::size_t n = cfg.gamma_t.size();
    std::vector<std::size_t> checked{0};
    if (n > 2) checked.push_back(n / 2);
    if (n > 1) checked.push_back(n - 1);

    parallel_for_index(n, cfg.workers, [&](std::size_t i) {
        const double gamma_t = cfg.gamma_t[i];
        const double gamma = DephasingParams::from_gamma_t(gamma_t).gamma;
        const DensityMatrix evolved = evolve_closed_form(rho0, gamma);
        for (std::size_t k : checked) {
            if (k == i) cross_check_operator_sum(rho0, gamma_t, evolved);
        }
        tr.points[i] = TrajectoryPoint{gamma_t, discord(evolved, cfg.optimizer)};
    });
    return tr;
}

std::optional<double> detect_sudden_death(const Trajectory& tr, double death_tol) {
    const auto& pts = tr.points;
    std::size_t first_dead = pts.size();
    for (std::size_t i = pts.size(); i-- > 0;) {
        if (pts[i].report.negativity > death_tol) break;
        first_dead = i;
    }
    if (first_dead == pts.size()) return std::nullopt;
    return pts[first_dead].gamma_t;
}

PhenomenonSummary classify_discord(const Trajectory& tr, double flat_tol, double death_tol) {
    const auto& pts = tr.points;
    PhenomenonSummary summary;
    summary.sudden_death_time = detect_sudden_death(tr, death_tol);
    summary.asymptotic_discord = pts.back().report.discord;

    const double d0 = pts.front().report.discord;
    std::size_t first_departure = pts.size();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (std::abs(pts[i].report.discord - d0) > flat_tol) {
            first_departure = i;
            break;
        }
    }

    if (first_departure == pts.size()) {
        summary.discord_class = DiscordClass::Invariant;
        summary.frozen_until = pts.back().gamma_t;
        return summary;
    }
    // A genuine frozen interval needs at least one flat step beyond t = 0,
    // and the decay must level off at a nonzero value.
    if (first_departure >= 2 && summary.asymptotic_discord > flat_tol) {
        summary.discord_class = DiscordClass::FrozenThenDecay;
        summary.frozen_until = pts[first_departure - 1].gamma_t;
    } else {
        summary.discord_class = DiscordClass::Decaying;
    }
    return summary;
}

std::vector<std::pair<double, PhenomenonSummary>> sweep_p(
    const std::vector<FamilyParameter>& p_values, const std::vector<double>& grid,
    const OptimizerConfig& opt, double flat_tol, double death_tol, unsigned workers) {
    if (p_values.empty()) {
        throw ParameterOutOfRange("sweep: the list of family parameters must not be empty");
    }
    std::vector<std::pair<double, PhenomenonSummary>> out;
    out.reserve(p_values.size());
    for (const FamilyParameter& p : p_values) {
        TrajectoryConfig cfg{p, grid, opt, workers};
        const Trajectory tr = run_trajectory(cfg);
        out.emplace_back(p.value(), classify_discord(tr, flat_tol, death_tol));
    }
    return out;
}

} // namespace qcorr
