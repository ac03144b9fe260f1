#ifndef QUIVERINV_DRIVER_HPP
#define QUIVERINV_DRIVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "quiverinv/json_io.hpp"

namespace quiverinv {

/// Common knobs for the batch verification commands. tol rescales every
/// pass threshold relative to its default (which is calibrated to tol = 1e-9),
/// so an absurd tol makes every run fail -- the tolerance sanity inversion.
struct RunConfig {
    int n = 1;
    int m = 1;
    int trials = 100;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    int max_degree = 8;
    bool timing = true;

    void validate() const;
    double factor() const { return tol / 1e-9; }
};

struct CheckRecord {
    std::string name;
    double residual = 0.0;   // worst observed value (or a violation count)
    double threshold = 0.0;  // pass iff residual <= threshold
    bool pass = false;

    double margin() const { return threshold - residual; }
};

struct Report {
    std::string command;
    RunConfig config;
    std::vector<CheckRecord> checks;
    double wall_ms = 0.0;

    bool pass() const;
    Json to_json() const;
};

Report run_verify_chevalley(const RunConfig& cfg);
Report run_verify_double(const RunConfig& cfg);
Report run_molien(const RunConfig& cfg);
Report run_generation(const RunConfig& cfg, WreathRep rep, int R_override = 0);
Report run_jacobian(const RunConfig& cfg);

/// Resamples random_rep until is_generic succeeds (bounded attempts).
RepPoint sample_generic_rep(QuiverShape shape, std::uint64_t seed);

}  // namespace quiverinv

#endif
