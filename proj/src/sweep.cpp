#include "casimir/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"
#include "casimir/pfa.hpp"

namespace casimir {

std::string to_string(SweepModel m) {
    switch (m) {
        case SweepModel::plasma: return "plasma";
        case SweepModel::drude: return "drude";
        case SweepModel::ideal: return "ideal";
        case SweepModel::thermal: return "thermal";
        case SweepModel::lowT: return "lowT";
    }
    return "?";
}

SweepModel sweep_model_from_string(const std::string& s) {
    if (s == "plasma") return SweepModel::plasma;
    if (s == "drude") return SweepModel::drude;
    if (s == "ideal") return SweepModel::ideal;
    if (s == "thermal") return SweepModel::thermal;
    if (s == "lowT" || s == "lowt") return SweepModel::lowT;
    throw ValidationError("unknown sweep model '" + s + "'");
}

void SweepSpec::validate() const {
    if (!(d_min > 0.0 && d_min < d_max))
        throw ValidationError("sweep needs 0 < d_min < d_max");
    if (points < 2) throw ValidationError("sweep needs at least 2 points");
    if (models.empty()) throw ValidationError("sweep needs at least one model");
    if (!(temperature > 0.0)) throw ValidationError("temperature must be > 0 K");
    if (cylinder_plane) {
        if (!(length > 0.0 && radius > 0.0))
            throw ValidationError("cylinder-plane sweep needs L > 0 and a > 0");
    } else {
        if (!(area > 0.0)) throw ValidationError("parallel-plate sweep needs area > 0");
    }
    numerics.validate();
}

namespace {

double grid_point(const SweepSpec& s, int i) {
    const double f = static_cast<double>(i) / (s.points - 1);
    if (s.spacing == Spacing::log)
        return s.d_min * std::pow(s.d_max / s.d_min, f);
    return s.d_min + f * (s.d_max - s.d_min);
}

Row evaluate_row(const SweepSpec& spec, const MaterialRecord& mat, double d,
                 SweepModel model) {
    Row row{};
    row.d_m = d;
    row.T_K = spec.temperature;
    row.model = to_string(model);
    row.geometry = spec.cylinder_plane ? "cp" : "pp";
    row.unit = "N";

    const double T = spec.temperature;
    switch (model) {
        case SweepModel::plasma:
        case SweepModel::drude: {
            const DielectricModel dm = model == SweepModel::plasma ? DielectricModel::plasma
                                                                   : DielectricModel::drude;
            const MaterialRecord m2 = mat.with_model(dm);
            ForceResult r;
            if (spec.cylinder_plane)
                r = force_cp(m2, {spec.length, spec.radius, d}, T, spec.numerics);
            else
                r = force_pp(m2, {spec.area, d}, T, spec.numerics);
            row.value = r.magnitude;
            row.m_terms = r.m_terms_used;
            row.rel_err = r.rel_error_estimate;
            break;
        }
        case SweepModel::ideal:
            row.value = spec.cylinder_plane
                            ? ideal_cp_force(spec.length, spec.radius, d)
                            : ideal_pp_pressure(d) * spec.area;
            break;
        case SweepModel::thermal:
            row.value = spec.cylinder_plane
                            ? thermal_cp_force(spec.length, spec.radius, d, T)
                            : thermal_pp_pressure(d, T) * spec.area;
            break;
        case SweepModel::lowT: {
            const ExpansionInputs x{T / t_eff(d), plasma_delta(mat) / d};
            if (spec.cylinder_plane)
                row.value = lowT_ratio_cp(x).ratio * ideal_cp_force(spec.length, spec.radius, d);
            else
                row.value = lowT_ratio_pp(x).ratio * ideal_pp_pressure(d) * spec.area;
            break;
        }
    }
    return row;
}

}  // namespace

std::vector<Row> run_sweep(const SweepSpec& spec, const MaterialRecord& mat,
                           unsigned threads) {
    spec.validate();
    mat.validate();

    const std::size_t n_tasks =
        static_cast<std::size_t>(spec.points) * spec.models.size();
    std::vector<Row> rows(n_tasks);
    std::vector<std::exception_ptr> failures(n_tasks);

    const auto work = [&](std::size_t idx) {
        const int point = static_cast<int>(idx / spec.models.size());
        const SweepModel model = spec.models[idx % spec.models.size()];
        try {
            rows[idx] = evaluate_row(spec, mat, grid_point(spec, point), model);
        } catch (...) {
            failures[idx] = std::current_exception();
        }
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < n_tasks; ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        const unsigned n_workers = std::min<std::size_t>(threads, n_tasks);
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n_tasks; i = next.fetch_add(1))
                    work(i);
            });
        }
        for (auto& t : pool) t.join();
    }

    // surface the first failure in input order
    for (std::size_t i = 0; i < n_tasks; ++i)
        if (failures[i]) std::rethrow_exception(failures[i]);
    return rows;
}

}  // namespace casimir
