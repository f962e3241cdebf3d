#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geoberg/potentials.hpp"

namespace geoberg {

struct PotentialSpec {
    std::string family = "fs";      // "fs" | "dilation" | "bump"
    std::vector<double> params;
};

/** One experiment: an endpoint pair, the levels to sweep, grid and
    quadrature resolution, tolerance scaling, and run plumbing. Every field
    has a default; a config file or command-line override only needs to
    state deviations. See the README for the file schema. */
struct ExperimentConfig {
    PotentialSpec phi0;             // default fs
    PotentialSpec phi1{"dilation", {1.0}};
    std::vector<int> k_list{8, 16, 32, 64, 128};
    std::size_t t_nodes = 129;
    std::size_t x_nodes = 801;
    double x_max = 40.0;
    std::size_t quad_extra = 16;    // quadrature uses k + quad_extra nodes
    double tol_scale = 1.0;
    std::uint64_t seed = 0x5EED;
    std::size_t harnack_samples = 50;
    std::size_t dp_window = 8;
    std::string out_dir = "out";

    /** Throws ConfigError naming the offending field. */
    void validate() const;

    /** Hash of the semantically meaningful fields: everything except the
        output directory. Two configs produce the same tables iff their
        hashes agree. */
    std::uint64_t hash() const;
};

/** Parse the flat INI-style config file. Unknown sections or keys are
    errors, not warnings; missing keys keep their defaults. */
ExperimentConfig load_config(const std::string& path);

/** Apply one "section.key=value" override (the CLI flag form). */
void apply_override(ExperimentConfig& cfg, const std::string& assignment);

/** Build the endpoint potential a spec describes. Family and parameter
    count problems are ConfigError; parameter values that leave positive
    curvature surface later as PositivityViolation. */
RadialPotential make_potential(const PotentialSpec& spec);

} // namespace geoberg
