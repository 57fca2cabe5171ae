#include "polyqm/app.hpp"

#include "polyqm/classical.hpp"
#include "polyqm/geometry.hpp"
#include "polyqm/io.hpp"
#include "polyqm/oracle.hpp"
#include "polyqm/spectrum.hpp"
#include "polyqm/verify.hpp"
#include "polyqm/wavefunction.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace polyqm {

namespace {

using nlohmann::ordered_json;

const std::vector<int> kCircleLimitSides = {10, 100, 1000, 10000};

Waveform parse_form(const std::string& name) {
    if (name == "symmetric") return Waveform::Symmetric;
    if (name == "antisymmetric") return Waveform::Antisymmetric;
    if (name == "plane_plus") return Waveform::PlanePlus;
    if (name == "plane_minus") return Waveform::PlaneMinus;
    throw std::invalid_argument(
        "unknown form '" + name +
        "' (expected symmetric, antisymmetric, plane_plus, or plane_minus)");
}

NormConvention parse_convention(const std::string& name) {
    if (name == "xi_measure" || name == "xi") return NormConvention::Xi;
    if (name == "arc_measure" || name == "arc") return NormConvention::Arc;
    throw std::invalid_argument("unknown normalization convention '" + name +
                                "' (expected xi_measure or arc_measure)");
}

PolygonSpec make_spec(const RunConfig& cfg) {
    PolygonSpec spec;
    spec.n_sides = cfg.n_sides;
    spec.circumradius = cfg.radius;
    spec.constants.hbar = cfg.hbar;
    validate(spec);
    return spec;
}

std::string fmt(double value, const RunConfig& cfg) {
    return io::format_number(value, cfg.precision);
}

ordered_json base_metadata(const RunConfig& cfg, const char* command) {
    ordered_json meta;
    meta["command"] = command;
    if (!cfg.run_id.empty()) meta["run_id"] = cfg.run_id;
    return meta;
}

struct Emitted {
    std::string payload;
    bool passed = true;
};

Emitted emit_spectrum(const RunConfig& cfg) {
    const PolygonSpec spec = make_spec(cfg);
    const PolygonGeometry geom = derive_geometry(spec);
    if (cfg.levels < 1) throw std::invalid_argument("levels must be >= 1");
    if (cfg.n_min < 0) throw std::invalid_argument("n_min must be >= 0");

    std::vector<EnergyLevel> levels;
    std::vector<EnergyLevel> ring;
    for (int n = cfg.n_min; n < cfg.n_min + cfg.levels; ++n) {
        levels.push_back(energy_level(n, spec, geom));
        if (cfg.perimeter_extension)
            ring.push_back(perimeter_level(n * spec.n_sides, spec, geom));
    }

    if (cfg.format == OutputFormat::Json) {
        ordered_json doc;
        ordered_json meta = base_metadata(cfg, "spectrum");
        meta["N"] = spec.n_sides;
        meta["a"] = spec.circumradius;
        meta["hbar"] = spec.constants.hbar;
        meta["mass"] = 1.0;
        meta["n_min"] = cfg.n_min;
        meta["levels"] = cfg.levels;
        if (cfg.perimeter_extension) meta["extension"] = "perimeter";
        doc["metadata"] = meta;
        doc["levels"] = ordered_json::array();
        for (size_t i = 0; i < levels.size(); ++i) {
            ordered_json row;
            row["n"] = levels[i].n;
            row["k"] = levels[i].k;
            row["E"] = levels[i].energy;
            row["degeneracy"] = levels[i].degeneracy;
            if (cfg.perimeter_extension) {
                row["j"] = levels[i].n * spec.n_sides;
                row["E_perimeter"] = ring[i].energy;
            }
            doc["levels"].push_back(row);
        }
        return {doc.dump(2) + "\n"};
    }

    std::string text = cfg.perimeter_extension ? "n,k,E,j,E_perimeter\n" : "n,k,E\n";
    for (size_t i = 0; i < levels.size(); ++i) {
        std::vector<std::string> cells = {std::to_string(levels[i].n),
                                          fmt(levels[i].k, cfg),
                                          fmt(levels[i].energy, cfg)};
        if (cfg.perimeter_extension) {
            cells.push_back(std::to_string(levels[i].n * spec.n_sides));
            cells.push_back(fmt(ring[i].energy, cfg));
        }
        text += io::join_csv(cells) + "\n";
    }
    return {text};
}

Emitted emit_wavefunction(const RunConfig& cfg) {
    const PolygonSpec spec = make_spec(cfg);
    const PolygonGeometry geom = derive_geometry(spec);
    const Waveform form = parse_form(cfg.form);
    const NormConvention convention = parse_convention(cfg.convention);
    if (cfg.n < 0) throw std::invalid_argument("n must be >= 0");

    const EnergyLevel level = energy_level(cfg.n, spec, geom);
    const WavefunctionSpec wf = make_wavefunction(form, level, spec, geom, convention);
    const std::vector<WavefunctionSample> rows =
        sample(wf, cfg.samples_per_side, spec, geom);

    if (cfg.format == OutputFormat::Json) {
        ordered_json doc;
        ordered_json meta = base_metadata(cfg, "wavefunction");
        meta["N"] = spec.n_sides;
        meta["a"] = spec.circumradius;
        meta["hbar"] = spec.constants.hbar;
        meta["n"] = cfg.n;
        meta["form"] = to_string(form);
        meta["norm_convention"] = to_string(convention);
        meta["norm_constant"] = wf.norm_constant;
        meta["samples_per_side"] = cfg.samples_per_side;
        doc["metadata"] = meta;
        doc["samples"] = ordered_json::array();
        for (const WavefunctionSample& row : rows) {
            ordered_json item;
            item["xi"] = row.xi;
            item["side_index"] = row.side_index;
            item["q"] = row.q;
            item["s"] = row.s;
            item["re"] = row.re;
            item["im"] = row.im;
            doc["samples"].push_back(item);
        }
        return {doc.dump(2) + "\n"};
    }

    std::string text = "xi,side_index,q,s,re,im\n";
    for (const WavefunctionSample& row : rows) {
        text += io::join_csv({fmt(row.xi, cfg), std::to_string(row.side_index),
                              fmt(row.q, cfg), fmt(row.s, cfg), fmt(row.re, cfg),
                              fmt(row.im, cfg)}) +
                "\n";
    }
    return {text};
}

Emitted emit_verify(const RunConfig& cfg) {
    VerifyOptions options;
    options.grid_points = cfg.grid_points;
    options.well_grid_points = cfg.well_grid_points;
    options.probe_seed = cfg.probe_seed;
    const std::vector<VerifyCheck> checks = run_suite(cfg.suite, options);
    const bool passed = all_passed(checks);

    Emitted result;
    result.passed = passed;
    if (cfg.format == OutputFormat::Json) {
        ordered_json doc;
        ordered_json meta = base_metadata(cfg, "verify");
        meta["suite"] = cfg.suite;
        meta["grid_points"] = cfg.grid_points;
        meta["well_grid_points"] = cfg.well_grid_points;
        meta["probe_seed"] = cfg.probe_seed;
        doc["metadata"] = meta;
        doc["checks"] = ordered_json::array();
        for (const VerifyCheck& check : checks) {
            ordered_json item;
            item["suite"] = check.suite;
            item["check"] = check.name;
            item["measured"] = check.measured;
            item["bound"] = check.bound;
            item["lower"] = check.lower;
            item["pass"] = check.pass;
            doc["checks"].push_back(item);
        }
        doc["all_passed"] = passed;
        result.payload = doc.dump(2) + "\n";
        return result;
    }

    std::string text = "suite,check,measured,bound,lower,status\n";
    for (const VerifyCheck& check : checks) {
        text += io::join_csv({check.suite, check.name, fmt(check.measured, cfg),
                              fmt(check.bound, cfg), fmt(check.lower, cfg),
                              check.pass ? "PASS" : "FAIL"}) +
                "\n";
    }
    result.payload = text;
    return result;
}

Emitted emit_limits(const RunConfig& cfg) {
    if (cfg.table != "circle" && cfg.table != "well" && cfg.table != "both")
        throw std::invalid_argument("table must be circle, well, or both");
    if (cfg.levels < 1) throw std::invalid_argument("levels must be >= 1");
    if (cfg.n_min < 1) throw std::invalid_argument("n_min must be >= 1 for limits");

    struct CircleRow {
        int n, n_sides;
        double l, deviation, bound;
    };
    std::vector<CircleRow> circle;
    if (cfg.table != "well") {
        for (int n = cfg.n_min; n < cfg.n_min + cfg.levels; ++n) {
            for (int n_sides : kCircleLimitSides) {
                PolygonSpec spec;
                spec.n_sides = n_sides;
                spec.circumradius = cfg.radius;
                spec.constants.hbar = cfg.hbar;
                const CircleLimitLevel level = circle_limit_level(n, spec);
                const double bound =
                    std::numbers::pi * std::numbers::pi / (5.0 * n_sides * n_sides);
                circle.push_back({n, n_sides, level.l,
                                  std::abs(level.l / n - 1.0), bound});
            }
        }
    }

    struct WellRow {
        int n;
        double closed, fd, rel_err;
    };
    std::vector<WellRow> well;
    if (cfg.table != "circle") {
        const ComputedSpectrum fd =
            solve_dirichlet_well(2.0 * cfg.radius, cfg.well_grid_points, cfg.hbar);
        PolygonSpec segment;
        segment.n_sides = 2;
        segment.circumradius = cfg.radius;
        segment.constants.hbar = cfg.hbar;
        for (int n = cfg.n_min; n < cfg.n_min + cfg.levels; ++n) {
            const double closed = well_level(n, segment).energy;
            const double approx = fd.eigenvalues[n - 1];
            well.push_back({n, closed, approx, std::abs(approx / closed - 1.0)});
        }
    }

    if (cfg.format == OutputFormat::Json) {
        ordered_json doc;
        ordered_json meta = base_metadata(cfg, "limits");
        meta["table"] = cfg.table;
        meta["a"] = cfg.radius;
        meta["hbar"] = cfg.hbar;
        meta["n_min"] = cfg.n_min;
        meta["levels"] = cfg.levels;
        meta["well_grid_points"] = cfg.well_grid_points;
        doc["metadata"] = meta;
        if (!circle.empty() || cfg.table != "well") {
            doc["circle"] = ordered_json::array();
            for (const CircleRow& row : circle) {
                ordered_json item;
                item["n"] = row.n;
                item["N"] = row.n_sides;
                item["l"] = row.l;
                item["deviation"] = row.deviation;
                item["bound"] = row.bound;
                doc["circle"].push_back(item);
            }
        }
        if (!well.empty() || cfg.table != "circle") {
            doc["well"] = ordered_json::array();
            for (const WellRow& row : well) {
                ordered_json item;
                item["n"] = row.n;
                item["E_closed"] = row.closed;
                item["E_fd"] = row.fd;
                item["relative_error"] = row.rel_err;
                doc["well"].push_back(item);
            }
        }
        return {doc.dump(2) + "\n"};
    }

    std::string text;
    if (cfg.table != "well") {
        text += "n,N,l,deviation,bound\n";
        for (const CircleRow& row : circle) {
            text += io::join_csv({std::to_string(row.n), std::to_string(row.n_sides),
                                  fmt(row.l, cfg), fmt(row.deviation, cfg),
                                  fmt(row.bound, cfg)}) +
                    "\n";
        }
    }
    if (cfg.table == "both") text += "\n";
    if (cfg.table != "circle") {
        text += "n,E_closed,E_fd,relative_error\n";
        for (const WellRow& row : well) {
            text += io::join_csv({std::to_string(row.n), fmt(row.closed, cfg),
                                  fmt(row.fd, cfg), fmt(row.rel_err, cfg)}) +
                    "\n";
        }
    }
    return {text};
}

Emitted emit_classical(const RunConfig& cfg) {
    const PolygonSpec spec = make_spec(cfg);
    const PolygonGeometry geom = derive_geometry(spec);
    const BounceModel model = make_bounce_model(cfg.speed, spec, geom);
    const int bounces = cfg.bounces < 0 ? spec.n_sides : cfg.bounces;
    const std::vector<BouncePoint> trace = trace_bounces(model, bounces);

    const double force = average_force(model);
    const double reference = cfg.speed * cfg.speed / cfg.radius;
    const double gap = std::abs(force / reference - 1.0);

    if (cfg.format == OutputFormat::Json) {
        ordered_json doc;
        ordered_json meta = base_metadata(cfg, "classical");
        meta["N"] = spec.n_sides;
        meta["a"] = spec.circumradius;
        meta["speed"] = cfg.speed;
        meta["bounces"] = bounces;
        doc["metadata"] = meta;
        doc["trace"] = ordered_json::array();
        for (const BouncePoint& point : trace) {
            ordered_json item;
            item["x"] = point.position.x();
            item["y"] = point.position.y();
            item["px"] = point.momentum.x();
            item["py"] = point.momentum.y();
            doc["trace"].push_back(item);
        }
        doc["force_check"] = {{"average_force", force},
                              {"v_squared_over_a", reference},
                              {"relative_gap", gap}};
        return {doc.dump(2) + "\n"};
    }

    std::string text = "x,y,px,py\n";
    for (const BouncePoint& point : trace) {
        text += io::join_csv({fmt(point.position.x(), cfg), fmt(point.position.y(), cfg),
                              fmt(point.momentum.x(), cfg),
                              fmt(point.momentum.y(), cfg)}) +
                "\n";
    }
    text += "\naverage_force,v_squared_over_a,relative_gap\n";
    text += io::join_csv({fmt(force, cfg), fmt(reference, cfg), fmt(gap, cfg)}) + "\n";
    return {text};
}

ordered_json error_json(const char* type, const std::string& message) {
    ordered_json doc;
    doc["error"] = {{"type", type}, {"message", message}};
    return doc;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Emitted result;
        switch (cfg.command) {
            case Command::Spectrum: result = emit_spectrum(cfg); break;
            case Command::Wavefunction: result = emit_wavefunction(cfg); break;
            case Command::Verify: result = emit_verify(cfg); break;
            case Command::Limits: result = emit_limits(cfg); break;
            case Command::Classical: result = emit_classical(cfg); break;
        }
        if (cfg.output_path.empty()) {
            out << result.payload;
        } else {
            std::ofstream file(cfg.output_path, std::ios::binary);
            if (!file)
                throw std::invalid_argument("cannot open output file: " + cfg.output_path);
            file << result.payload;
            if (!file)
                throw std::runtime_error("failed writing output file: " + cfg.output_path);
        }
        return result.passed ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        err << error_json("validation", e.what()).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << error_json("internal", e.what()).dump() << "\n";
        return 1;
    }
}

}  // namespace polyqm
