// lpc: constants, bodies, mixed volumes and verification batches.
#include "lpc/io.hpp"
#include "lpc/mixed.hpp"
#include "lpc/moment.hpp"
#include "lpc/oracles.hpp"
#include "lpc/params.hpp"
#include "lpc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>

using namespace lpc;
using nlohmann::json;

namespace {

struct RunConfig {
    Resolution res;
    double R = 20.0;
    std::optional<double> slack;
    std::uint64_t seed = 0;
    std::string output;
    std::string format = "json";
    std::string summary;
    bool timing = false;
    bool doubling = false;
};

void add_params(CLI::App* sub, ParamSet& ps) {
    sub->add_option("--n", ps.n, "dimension")->check(CLI::Range(2, 3));
    sub->add_option("--p", ps.p, "moment exponent p >= 1");
    sub->add_option("--r", ps.r, "exponent r in [1, n)");
    sub->add_option("--lambda", ps.lambda, "norm exponent lambda");
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw Error(ErrorKind::InvalidArgument, "cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

int emit_reports(const std::vector<DeficitReport>& reports, const RunConfig& cfg) {
    Output out(cfg.output);
    if (cfg.format == "csv")
        write_csv(out.stream(), reports, cfg.timing);
    else
        write_jsonl(out.stream(), reports, cfg.timing);
    if (!cfg.summary.empty()) {
        std::ofstream s(cfg.summary);
        write_csv(s, reports, cfg.timing);
    }
    for (const auto& r : reports)
        if (!r.ok()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Busemann-Petty centroid and functional mixed-volume toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.set_config("--config", "", "key=value configuration file (flags win)")->envname("LPC_CONFIG");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.add_option("--circle-nodes", cfg.res.circle_nodes, "direction nodes on the circle")->check(CLI::PositiveNumber);
    app.add_option("--sphere-theta", cfg.res.sphere_theta, "polar rings of the 3D direction grid")->check(CLI::PositiveNumber);
    app.add_option("--sphere-phi", cfg.res.sphere_phi, "azimuthal nodes of the 3D direction grid")->check(CLI::PositiveNumber);
    app.add_option("--field-nodes", cfg.res.field_nodes, "grid field nodes per axis (n = 2)")->check(CLI::PositiveNumber);
    app.add_option("--field-nodes-3d", cfg.res.field_nodes_3d, "grid field nodes per axis (n = 3)")->check(CLI::PositiveNumber);
    app.add_option("--levels", cfg.res.levels, "level sets used by the chain check")->check(CLI::PositiveNumber);
    app.add_option("--R", cfg.R, "truncation radius for extremals with lambda < 1")->check(CLI::PositiveNumber);
    app.add_option("--slack", cfg.slack, "override the per-check slack")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", cfg.seed, "first seed");
    app.add_option("--output", cfg.output, "output path (stdout if empty)");
    app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--summary", cfg.summary, "also write the CSV summary here");
    app.add_flag("--timing", cfg.timing, "include elapsed times (output no longer reproducible)");
    app.add_flag("--doubling", cfg.doubling, "repeat every check at doubled resolution");

    ParamSet ps_constants{2, 1.0, 1.0, 2.0};
    auto* constants_cmd = app.add_subcommand("constants", "constant bundle for (n, p, r, lambda) as JSON");
    add_params(constants_cmd, ps_constants);

    ParamSet ps_moment{2, 1.0, 1.0, 2.0};
    std::string body_in;
    bool centroid = false;
    auto* moment_cmd = app.add_subcommand("moment-body", "L_p moment (or centroid) body of a convex body as JSON");
    moment_cmd->add_option("--in", body_in, "body: JSON file, inline JSON, or disk/square")->required();
    moment_cmd->add_option("--p", ps_moment.p, "moment exponent p >= 1");
    moment_cmd->add_option("--n", ps_moment.n, "dimension for named bodies")->check(CLI::Range(2, 3));
    moment_cmd->add_flag("--centroid", centroid, "normalize to the centroid body");

    std::string k_arg, l_arg;
    ParamSet ps_mixed{2, 1.0, 1.0, 2.0};
    auto* mixed_cmd = app.add_subcommand("mixed-volume", "V_r(K, L) with its computation path");
    mixed_cmd->add_option("--k", k_arg, "body K")->required();
    mixed_cmd->add_option("--l", l_arg, "body L")->required();
    mixed_cmd->add_option("--r", ps_mixed.r, "exponent r >= 1");
    mixed_cmd->add_option("--n", ps_mixed.n, "dimension for named bodies")->check(CLI::Range(2, 3));

    ParamSet ps_verify{2, 1.0, 1.0, 2.0};
    std::string id_arg = "bp", generator;
    int seeds = 1;
    bool transform = false;
    auto* verify_cmd = app.add_subcommand("verify", "run one check over a batch of seeds (JSONL or CSV)");
    verify_cmd->add_option("--id", id_arg, "check id")->required();
    verify_cmd->add_option("--seeds", seeds, "number of seeds")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--generator", generator, "instance generator (default depends on the check)");
    verify_cmd->add_flag("--transform", transform, "compose instances with a random determinant-one map");
    add_params(verify_cmd, ps_verify);

    ParamSet ps_sweep{2, 1.0, 1.0, 2.0};
    std::string sweep_id = "main", sweep_generator;
    int sweep_seeds = 1;
    std::vector<double> lambdas;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a check over a lambda grid (ten values per branch by default)");
    sweep_cmd->add_option("--id", sweep_id, "check id");
    sweep_cmd->add_option("--seeds", sweep_seeds, "seeds per lambda")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--generator", sweep_generator, "instance generator");
    sweep_cmd->add_option("--lambda-grid", lambdas, "explicit lambda values");
    sweep_cmd->add_option("--n", ps_sweep.n, "dimension")->check(CLI::Range(2, 3));
    sweep_cmd->add_option("--p", ps_sweep.p, "moment exponent p >= 1");
    sweep_cmd->add_option("--r", ps_sweep.r, "exponent r in [1, n)");

    auto* oracle_cmd = app.add_subcommand("oracle", "independent oracles");
    oracle_cmd->require_subcommand(1);
    auto* oracle_constants = oracle_cmd->add_subcommand("constants", "rebuild constants by numerical minimization");

    for (auto* sub : {constants_cmd, moment_cmd, mixed_cmd, verify_cmd, sweep_cmd, oracle_cmd}) sub->fallthrough();
    oracle_constants->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    try {
        if (*constants_cmd) {
            validate(ps_constants);
            json j = io::to_json(constants(ps_constants));
            j["params"] = io::to_json(ps_constants);
            Output(cfg.output).stream() << j.dump(2) << '\n';
            return 0;
        }
        if (*moment_cmd) {
            const ConvexBody K = io::parse_body(body_in, ps_moment.n);
            const GridPtr grid = cfg.res.directions(K.dim());
            const MomentBody m = centroid ? centroid_body(K, ps_moment.p, grid) : moment_body(K, ps_moment.p, grid);
            json j = io::to_json(m);
            j["centroid"] = centroid;
            Output(cfg.output).stream() << j.dump(2) << '\n';
            return 0;
        }
        if (*mixed_cmd) {
            const ConvexBody K = io::parse_body(k_arg, ps_mixed.n);
            const ConvexBody L = io::parse_body(l_arg, ps_mixed.n);
            const MixedVolumeReport rep = mixed_volume_report(K, L, ps_mixed.r);
            const json j = {{"value", rep.value},       {"path", to_string(rep.path)},
                            {"fallback", rep.fallback}, {"rel_diff", rep.rel_diff},
                            {"r", ps_mixed.r},          {"volume_K", K.volume()},
                            {"volume_L", L.volume()}};
            Output(cfg.output).stream() << j.dump(2) << '\n';
            return 0;
        }
        CheckOptions opt;
        opt.slack = cfg.slack;
        opt.doubling = cfg.doubling;
        if (*verify_cmd) {
            validate(ps_verify);
            const CheckId id = check_from_string(id_arg);
            InstanceSpec spec;
            spec.kind = generator.empty() ? default_generator(id) : generator_from_string(generator);
            spec.seed = cfg.seed;
            spec.n = ps_verify.n;
            spec.res = cfg.res;
            spec.R = cfg.R;
            spec.transform = transform;
            return emit_reports(run_batch(id, spec, seeds, ps_verify, opt), cfg);
        }
        if (*sweep_cmd) {
            const CheckId id = check_from_string(sweep_id);
            InstanceSpec spec;
            spec.kind = sweep_generator.empty() ? default_generator(id) : generator_from_string(sweep_generator);
            spec.seed = cfg.seed;
            spec.n = ps_sweep.n;
            spec.res = cfg.res;
            spec.R = cfg.R;
            if (lambdas.empty()) lambdas = lambda_grid(ps_sweep.n, ps_sweep.p);
            return emit_reports(sweep(id, spec, sweep_seeds, ps_sweep, lambdas, opt), cfg);
        }
        if (*oracle_constants) {
            const auto rows = oracle::constant_oracles();
            double worst = 0.0;
            json out = json::array();
            for (const auto& row : rows) {
                worst = std::max(worst, row.rel_error);
                out.push_back({{"name", row.name}, {"params", io::to_json(row.params)}, {"value", row.value},
                               {"oracle", row.oracle}, {"rel_error", row.rel_error}});
            }
            const json j = {{"rows", out}, {"max_rel_error", worst}};
            Output(cfg.output).stream() << j.dump(2) << '\n';
            return worst < 1e-8 ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return e.kind() == ErrorKind::InvalidArgument ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 2;
}
