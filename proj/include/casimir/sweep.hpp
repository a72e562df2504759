#ifndef CASIMIR_SWEEP_HPP
#define CASIMIR_SWEEP_HPP

#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/table.hpp"

namespace casimir {

/// Curves that a sweep can tabulate: the two full Lifshitz models plus the
/// closed-form limits (ideal conductor, thermal, low-T expansion).
enum class SweepModel { plasma, drude, ideal, thermal, lowT };
std::string to_string(SweepModel m);
SweepModel sweep_model_from_string(const std::string& s);

enum class Spacing { log, linear };

struct SweepSpec {
    bool cylinder_plane = false;  // false: parallel plates
    double area = 0.0;            // pp: S, m^2
    double length = 0.0;          // cp: L, m
    double radius = 0.0;          // cp: a, m
    double d_min = 0.0;
    double d_max = 0.0;
    int points = 2;
    Spacing spacing = Spacing::log;
    std::vector<SweepModel> models;
    double temperature = 300.0;
    NumericsConfig numerics;

    void validate() const;
};

/// Evaluate the sweep grid. Rows come out ordered by distance point, then by
/// model in the order given; results are independent of `threads`.
std::vector<Row> run_sweep(const SweepSpec& spec, const MaterialRecord& mat,
                           unsigned threads = 1);

}  // namespace casimir

#endif
