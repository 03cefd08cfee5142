#include "sphquad/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "sphquad/csv.hpp"
#include "sphquad/designs.hpp"
#include "sphquad/errors.hpp"
#include "sphquad/geometry.hpp"
#include "sphquad/pointset.hpp"
#include "sphquad/rules.hpp"
#include "sphquad/singular.hpp"
#include "sphquad/testfns.hpp"
#include "sphquad/transforms.hpp"
#include "sphquad/wce.hpp"

namespace sphquad {

namespace {

// Output sink: a file path, or stdout for "-".
class OutStream {
public:
    explicit OutStream(const std::string& target) {
        if (target == "-") return;
        file_ = std::make_unique<std::ofstream>(target, std::ios::binary);
        if (!*file_) throw std::invalid_argument("cannot open output file: " + target);
    }
    std::ostream& get() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string wall_field(bool timings, const Timer& timer) {
    if (!timings) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", timer.ms());
    return buf;
}

TransformKind parse_transform_kind(const std::string& name) {
    if (name == "none") return TransformKind::None;
    if (name == "atkinson") return TransformKind::Atkinson;
    if (name == "sidi") return TransformKind::Sidi;
    throw std::invalid_argument("unknown transform: " + name + " (none | atkinson | sidi)");
}

double default_grading(TransformKind kind) {
    switch (kind) {
        case TransformKind::Atkinson: return 2.5;
        case TransformKind::Sidi: return 3.0;
        case TransformKind::None: return 1.0;
    }
    return 1.0;
}

DesignOptions design_options(const Config& cfg) {
    DesignOptions opts;
    opts.seed = static_cast<std::uint64_t>(cfg.get_int("seed", 0));
    opts.tolerance = cfg.get_double("tolerance", opts.tolerance);
    opts.max_iterations = cfg.get_int("max_iterations", opts.max_iterations);
    return opts;
}

// Generated designs shared across cells of one run.
class DesignCache {
public:
    explicit DesignCache(const DesignOptions& opts) : opts_(opts) {}

    const PointSet& get(int t, int N) {
        const auto key = std::make_pair(t, N);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        DesignResult result = generate_design(t, N, opts_);
        if (!result.converged) {
            throw NonConvergedError("design generation for t=" + std::to_string(t) +
                                        " N=" + std::to_string(result.points.size()),
                                    result.residual, result.iterations);
        }
        return cache_.emplace(key, std::move(result.points)).first->second;
    }

private:
    DesignOptions opts_;
    std::map<std::pair<int, int>, PointSet> cache_;
};

int claimed_degree(const Config& cfg, const PointSet& ps) {
    const int from_cfg = cfg.get_int("t", -1);
    return from_cfg >= 0 ? from_cfg : ps.provenance().degree;
}

std::string degree_field(int t) { return t >= 0 ? CsvWriter::field(t) : std::string(); }

// The integration problem of one test function: the grading spec plus the
// aligned singular point (ellipsoid singularities are pulled back to the
// sphere) and the surface.
TransformSpec problem_spec(const TestFunction& fn, TransformKind kind, double grading) {
    TransformSpec spec;
    spec.kind = kind;
    spec.grading = kind == TransformKind::None ? 1.0 : grading;
    spec.surface = fn.surface;
    if (fn.singular_point) {
        spec.singular_point = fn.surface ? ellipsoid_preimage(*fn.surface, *fn.singular_point)
                                         : UnitPoint::checked(*fn.singular_point);
    }
    spec.validate();
    return spec;
}

template <class Fn>
CommandOutcome guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {exit_code_for(e), e.what()};
    }
}

}  // namespace

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const NonConvergedError*>(&e) || dynamic_cast<const SingularGramError*>(&e) ||
        dynamic_cast<const SingularHitError*>(&e) ||
        dynamic_cast<const NonFiniteValueError*>(&e) ||
        dynamic_cast<const NegativeRadicandError*>(&e)) {
        return 3;
    }
    return 2;
}

CommandOutcome cmd_integrate(const Config& cfg) {
    return guarded([&]() -> CommandOutcome {
        cfg.require_known("integrate", {"rule", "t_list", "N_list", "n_list", "points_file", "t",
                                        "function", "transform", "grading", "tolerance",
                                        "max_iterations"});
        const std::string rule_kind = cfg.get_string("rule", "design");
        const int threads = cfg.get_int("threads", 1);
        const bool timings = cfg.get_bool("timings", false);

        // rule instances in config order: {label, t_or_n, rule}
        struct Instance {
            std::string label;
            int t_or_n = -1;
            QuadratureRule rule;
        };
        std::vector<Instance> instances;
        DesignCache designs(design_options(cfg));
        if (rule_kind == "design") {
            for (int t : cfg.get_ints("t_list", {30})) {
                instances.push_back({"design", t, design_rule(designs.get(t, -1), t)});
            }
        } else if (rule_kind == "equal_area") {
            for (int N : cfg.get_ints("N_list", {400})) {
                instances.push_back({"equal_area", -1, equal_area_rule(N)});
            }
        } else if (rule_kind == "trapezoidal") {
            for (int n : cfg.get_ints("n_list", {10})) {
                instances.push_back({"trapezoidal", n, trapezoidal_rule(n)});
            }
        } else if (rule_kind == "file") {
            const auto paths = cfg.get_strings("points_file", {});
            if (paths.empty()) {
                throw std::invalid_argument("rule=file needs points_file=<path>[,<path>...]");
            }
            for (const std::string& path : paths) {
                PointSet ps = load_pointset(path);
                const int t = claimed_degree(cfg, ps);
                instances.push_back({"file:" + std::filesystem::path(path).stem().string(), t,
                                     design_rule(std::move(ps), t)});
            }
        } else {
            throw std::invalid_argument("unknown rule: " + rule_kind +
                                        " (design | equal_area | trapezoidal | file)");
        }

        std::vector<const TestFunction*> functions;
        for (const std::string& id : cfg.get_strings("function", {"f1"})) {
            functions.push_back(&test_function(id));
        }

        // trapezoidal rules default to Atkinson grading, everything else to none
        const std::string transform_name =
            cfg.get_string("transform", rule_kind == "trapezoidal" ? "atkinson" : "none");
        const TransformKind kind = parse_transform_kind(transform_name);
        const std::vector<double> gradings =
            kind == TransformKind::None ? std::vector<double>{1.0}
                                        : cfg.get_doubles("grading", {default_grading(kind)});

        OutStream out(cfg.get_string("out", "-"));
        CsvWriter csv(out.get(), {"rule", "N", "t_or_n", "function", "transform", "q_or_m",
                                  "value", "exact", "abs_error", "rel_error", "wall_ms"});
        for (const Instance& inst : instances) {
            for (const TestFunction* fn : functions) {
                for (double g : gradings) {
                    const TransformSpec spec = problem_spec(*fn, kind, g);
                    Timer timer;
                    const double value = integrate_singular(inst.rule, fn->eval, spec, threads);
                    const std::string wall = wall_field(timings, timer);
                    const double abs_error = std::abs(value - fn->exact);
                    csv.row({inst.label, CsvWriter::field(inst.rule.size()),
                             degree_field(inst.t_or_n), fn->id, transform_name,
                             kind == TransformKind::None ? "" : CsvWriter::field(g),
                             CsvWriter::field(value), CsvWriter::field(fn->exact),
                             CsvWriter::field(abs_error),
                             CsvWriter::field(abs_error / std::abs(fn->exact)), wall});
                }
            }
        }
        return {};
    });
}

CommandOutcome cmd_wce(const Config& cfg) {
    return guarded([&]() -> CommandOutcome {
        cfg.require_known("wce", {"points_file", "t_list", "t", "s_list", "conjecture",
                                  "conjecture_t", "conjecture_N_list", "tolerance",
                                  "max_iterations"});
        const int threads = cfg.get_int("threads", 1);
        const std::vector<double> s_list = cfg.get_doubles("s_list", {1.5});
        for (double s : s_list) validate_sobolev_order(s);

        struct Entry {
            std::string label;
            int t = -1;
            PointSet points;
            std::string note;
        };
        std::vector<Entry> entries;
        DesignCache designs(design_options(cfg));
        for (const std::string& path : cfg.get_strings("points_file", {})) {
            PointSet ps = load_pointset(path);
            const int t = claimed_degree(cfg, ps);
            entries.push_back(
                {std::filesystem::path(path).stem().string(), t, std::move(ps), ""});
        }
        const bool have_files = !entries.empty();
        for (int t : cfg.get_ints("t_list", have_files ? std::vector<int>{}
                                                       : std::vector<int>{4, 8, 12, 16, 20})) {
            entries.push_back({"design_t" + std::to_string(t), t, designs.get(t, -1), ""});
        }
        if (cfg.get_bool("conjecture", true)) {
            const int ct = cfg.get_int("conjecture_t", 3);
            for (int N : cfg.get_ints("conjecture_N_list", {6, 8, 10, 12, 16})) {
                entries.push_back({"design_t" + std::to_string(ct) + "_N" + std::to_string(N), ct,
                                   designs.get(ct, N), "report-only"});
            }
        }
        if (entries.empty()) throw std::invalid_argument("no point sets requested");

        OutStream out(cfg.get_string("out", "-"));
        CsvWriter csv(out.get(), {"pointset", "N", "t", "s", "wce", "note"});
        for (const Entry& entry : entries) {
            for (double s : s_list) {
                csv.row({entry.label, CsvWriter::field(entry.points.size()),
                         degree_field(entry.t), CsvWriter::field(s),
                         CsvWriter::field(wce(entry.points, s, threads)), entry.note});
            }
        }
        return {};
    });
}

CommandOutcome cmd_geometry(const Config& cfg) {
    return guarded([&]() -> CommandOutcome {
        cfg.require_known("geometry", {"equal_area_N_list", "design_t_list", "trapezoidal_n_list",
                                       "points_file", "t", "tolerance", "max_iterations"});
        const int resolution = cfg.get_int("resolution", 200);
        const bool timings = cfg.get_bool("timings", false);

        struct Entry {
            std::string label;
            std::size_t raw_size = 0;
            PointSet points;  // deduplicated
        };
        std::vector<Entry> entries;
        const bool any_source = cfg.has("equal_area_N_list") || cfg.has("design_t_list") ||
                                cfg.has("trapezoidal_n_list") || cfg.has("points_file");
        DesignCache designs(design_options(cfg));
        for (int N : cfg.get_ints("equal_area_N_list",
                                  any_source ? std::vector<int>{} : std::vector<int>{100, 400, 900,
                                                                                     1600})) {
            PointSet ps = equal_area_rule(N).points;
            entries.push_back({"equal_area_N" + std::to_string(N), ps.size(), std::move(ps)});
        }
        for (int t : cfg.get_ints("design_t_list",
                                  any_source ? std::vector<int>{} : std::vector<int>{4, 8, 12, 16,
                                                                                     20})) {
            PointSet ps = designs.get(t, -1);
            entries.push_back({"design_t" + std::to_string(t), ps.size(), std::move(ps)});
        }
        for (int n : cfg.get_ints("trapezoidal_n_list",
                                  any_source ? std::vector<int>{} : std::vector<int>{5, 10, 15,
                                                                                     20})) {
            PointSet raw = trapezoidal_rule(n).points;
            const std::size_t raw_size = raw.size();
            entries.push_back(
                {"trapezoidal_n" + std::to_string(n), raw_size, unique_points(raw)});
        }
        for (const std::string& path : cfg.get_strings("points_file", {})) {
            PointSet ps = load_pointset(path);
            entries.push_back(
                {std::filesystem::path(path).stem().string(), ps.size(), std::move(ps)});
        }
        if (entries.empty()) throw std::invalid_argument("no point sets requested");

        OutStream out(cfg.get_string("out", "-"));
        CsvWriter csv(out.get(), {"pointset", "N", "unique_N", "resolution", "mesh_norm",
                                  "min_angle", "mesh_ratio", "wall_ms"});
        for (const Entry& entry : entries) {
            Timer timer;
            const GeometryReport report = geometry_report(entry.points, resolution);
            const std::string wall = wall_field(timings, timer);
            csv.row({entry.label, CsvWriter::field(entry.raw_size),
                     CsvWriter::field(entry.points.size()), CsvWriter::field(resolution),
                     CsvWriter::field(report.mesh_norm), CsvWriter::field(report.min_angle),
                     CsvWriter::field(report.mesh_ratio), wall});
        }
        return {};
    });
}

CommandOutcome cmd_gen_design(const Config& cfg) {
    return guarded([&]() -> CommandOutcome {
        cfg.require_known("gen-design", {"t", "N", "tolerance", "max_iterations"});
        if (!cfg.has("t")) throw std::invalid_argument("gen-design needs t=<degree>");
        const int t = cfg.get_int("t", -1);
        const int N = cfg.get_int("N", -1);
        const std::string out = cfg.get_string("out", "-");
        if (out == "-") throw std::invalid_argument("gen-design needs --out <file>");

        const DesignResult result = generate_design(t, N, design_options(cfg));
        PointSet ps = result.points;
        ps.set_provenance({"design", t});
        save_pointset(ps, out);

        std::ostringstream msg;
        msg << "wrote " << out << " N=" << ps.size() << " t=" << t << " residual="
            << CsvWriter::field(result.residual) << " iterations=" << result.iterations
            << " converged=" << (result.converged ? "true" : "false");
        if (!result.converged) {
            return {3, msg.str()};
        }
        return {0, msg.str()};
    });
}

CommandOutcome cmd_verify(const Config& cfg) {
    return guarded([&]() -> CommandOutcome {
        cfg.require_known("verify", {"points_file", "t", "tolerance"});
        const std::string path = cfg.get_string("points_file", "");
        if (path.empty()) throw std::invalid_argument("verify needs points_file=<path>");
        const PointSet ps = load_pointset(path);
        const int t = claimed_degree(cfg, ps);
        if (t < 0) {
            throw std::invalid_argument(
                "verify needs t=<degree> (none claimed by the file name)");
        }
        const double tol = cfg.get_double("tolerance", 1e-12);
        const VerifyReport report = verify_design(ps, t, tol);

        std::ostringstream msg;
        msg << "file=" << path << "\nN=" << ps.size() << "\nt=" << t << "\ntolerance="
            << CsvWriter::field(tol) << "\nresidual=" << CsvWriter::field(report.residual)
            << "\nmax_poly_error=" << CsvWriter::field(report.max_poly_error)
            << "\nok=" << (report.ok ? "true" : "false");

        OutStream out(cfg.get_string("out", "-"));
        out.get() << msg.str() << '\n';
        return {report.ok ? 0 : 3, report.ok ? "" : "residual above tolerance"};
    });
}

CommandOutcome cmd_partition(const Config& cfg) {
    return guarded([&]() -> CommandOutcome {
        cfg.require_known("partition", {"N"});
        if (!cfg.has("N")) throw std::invalid_argument("partition needs N=<count>");
        const int N = cfg.get_int("N", -1);
        const std::string out = cfg.get_string("out", "-");

        const QuadratureRule rule = equal_area_rule(N);
        if (out == "-") {
            std::cout << format_pointset(rule.points);
        } else {
            save_pointset(rule.points, out);
        }
        return {0, out == "-" ? "" : "wrote " + out + " N=" + std::to_string(rule.size())};
    });
}

}  // namespace sphquad
