// Command-line front end: each subcommand drives one library operation and
// persists its outputs under [output].dir. Exit codes: 0 success, 1 config or
// I/O errors, 2 regime exit (positivity loss).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ns1d/checkpoint.hpp"
#include "ns1d/config.hpp"
#include "ns1d/csv.hpp"
#include "ns1d/diagnostics.hpp"
#include "ns1d/errors.hpp"
#include "ns1d/experiments.hpp"
#include "ns1d/identities.hpp"
#include "ns1d/initial_data.hpp"
#include "ns1d/solver.hpp"
#include "ns1d/svg.hpp"

namespace fs = std::filesystem;
using namespace ns1d;

namespace {

void echo_config(const RunConfig& cfg) {
    std::printf("# ns1d effective configuration (hash %016llx)\n",
                static_cast<unsigned long long>(config_hash(cfg)));
    std::fputs(canonical_config_text(cfg).c_str(), stdout);
    if (cfg.gamma - 1.0 >= 1.0) {
        std::puts("# note: h3_norm column is unscaled (gamma - 1 >= 1)");
    }
}

void emit_series_svgs(const std::vector<DiagnosticsRecord>& series, const fs::path& dir) {
    std::vector<double> ts, sups, etas;
    for (const DiagnosticsRecord& r : series) {
        ts.push_back(r.t);
        sups.push_back(r.sup_perturbation);
        etas.push_back(r.eta_total);
    }
    write_polyline_svg((dir / "sup_perturbation.svg").string(), "sup |(v-1, u, theta-1)|",
                       ts, sups);
    write_polyline_svg((dir / "eta_total.svg").string(), "total entropy", ts, etas);
}

struct SeriesSummary {
    double sup0, sup_end, max_balance;
    double v_min, v_max, theta_min, theta_max;
};

SeriesSummary summarize(const std::vector<DiagnosticsRecord>& series) {
    SeriesSummary s{series.front().sup_perturbation, series.back().sup_perturbation, 0.0,
                    series.front().v_min, series.front().v_max,
                    series.front().theta_min, series.front().theta_max};
    for (const DiagnosticsRecord& r : series) {
        s.max_balance = std::max(s.max_balance, std::abs(r.balance_residual));
        s.v_min = std::min(s.v_min, r.v_min);
        s.v_max = std::max(s.v_max, r.v_max);
        s.theta_min = std::min(s.theta_min, r.theta_min);
        s.theta_max = std::max(s.theta_max, r.theta_max);
    }
    return s;
}

int cmd_run(const RunConfig& cfg, double halt_at_time) {
    echo_config(cfg);
    const GasParams gas = cfg.gas();
    const TransportLaw law = cfg.law();
    const Grid grid = cfg.grid();
    const BuiltInitialState built = build_initial_state(cfg.ic(), grid, gas);
    std::printf("# ic windows: v0 [%s, %s], theta0 [%s, %s]\n",
                format_double_short(built.v0_min).c_str(),
                format_double_short(built.v0_max).c_str(),
                format_double_short(built.theta0_min).c_str(),
                format_double_short(built.theta0_max).c_str());

    fs::create_directories(cfg.dir);
    const fs::path dir(cfg.dir);
    SeriesWriter series((dir / "series.csv").string(), /*append=*/false);
    const std::uint64_t hash = config_hash(cfg);
    const std::string cp_path = (dir / "checkpoint.ns1c").string();

    RunOptions opts;
    opts.t_end = cfg.t_end;
    opts.ctl = cfg.ctl();
    opts.record_every = cfg.record_every;
    opts.halt_at_time = halt_at_time;

    const RunResult result = run(built.state, opts, grid, gas, law,
                                 [&](const State& s, const DiagnosticsRecord& r) {
                                     series.write(r);
                                     save_checkpoint(cp_path, hash, s, grid, gas, law);
                                 });
    series.flush();
    if (cfg.emit_svg) {
        emit_series_svgs(result.series, dir);
    }
    std::printf("%s after %ld steps at t = %s, sup perturbation %s -> %s\n",
                result.halted ? "halted" : "completed", result.steps,
                format_double_short(result.final_state.t).c_str(),
                format_double_short(result.series.front().sup_perturbation).c_str(),
                format_double_short(result.series.back().sup_perturbation).c_str());
    return 0;
}

int cmd_resume(const RunConfig& cfg, const std::string& checkpoint_path) {
    echo_config(cfg);
    const LoadedCheckpoint cp = load_checkpoint(checkpoint_path);
    const std::uint64_t hash = config_hash(cfg);
    if (cp.config_hash != hash) {
        throw ConfigError("checkpoint config hash mismatch: checkpoint was produced by a "
                          "different configuration");
    }
    const GasParams gas = cfg.gas();
    const TransportLaw law = cfg.law();
    const Grid grid = cfg.grid();
    if (cp.n != static_cast<std::uint64_t>(grid.n)) {
        throw ConfigError("checkpoint grid size mismatch");
    }

    const fs::path dir(cfg.dir);
    const std::string series_path = (dir / "series.csv").string();
    const std::vector<DiagnosticsRecord> old_rows = read_series(series_path);
    std::size_t cut = old_rows.size();
    for (std::size_t i = 0; i < old_rows.size(); ++i) {
        if (old_rows[i].t == cp.state.t) {
            cut = i;
            break;
        }
    }
    if (cut == old_rows.size()) {
        throw ConfigError("series.csv has no record at the checkpoint time " +
                          format_double(cp.state.t));
    }
    // Rewind the series to the checkpoint row, then append from there.
    write_series(std::vector<DiagnosticsRecord>(old_rows.begin(),
                                                old_rows.begin() + cut + 1),
                 series_path);
    SeriesWriter series(series_path, /*append=*/true);

    DissipationAccumulator acc = DissipationAccumulator::restored(
        old_rows.front().eta_total, old_rows[cut].dissipation_cum,
        dissipation_rate(cp.state, grid, gas, law));

    RunOptions opts;
    opts.t_end = cfg.t_end;
    opts.ctl = cfg.ctl();
    opts.record_every = cfg.record_every;

    const std::string cp_path = (dir / "checkpoint.ns1c").string();
    const RunResult result = run_resumed(cp.state, acc, opts, grid, gas, law,
                                         [&](const State& s, const DiagnosticsRecord& r) {
                                             series.write(r);
                                             save_checkpoint(cp_path, hash, s, grid, gas, law);
                                         });
    series.flush();
    if (cfg.emit_svg) {
        emit_series_svgs(read_series(series_path), dir);
    }
    std::printf("resumed from t = %s, completed %ld steps to t = %s\n",
                format_double_short(cp.state.t).c_str(), result.steps,
                format_double_short(result.final_state.t).c_str());
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    echo_config(cfg);
    SweepConfig sweep;
    sweep.gamma_list = cfg.gamma_list;
    sweep.ic = cfg.ic();
    sweep.n = cfg.n;
    sweep.half_width = cfg.L;
    sweep.t_end = cfg.t_end;
    sweep.record_every = cfg.record_every;
    sweep.ctl = cfg.ctl();
    sweep.R = cfg.R;
    sweep.A = cfg.A;
    sweep.law = cfg.law();

    const std::vector<SweepRow> rows = gamma_sweep(sweep);

    fs::create_directories(cfg.dir);
    std::ofstream out(fs::path(cfg.dir) / "sweep.csv", std::ios::binary);
    out << "gamma,completed,exit_time,v_min,v_max,theta_min,theta_max,"
           "theta_lo,theta_hi,theta_in_window,sup0,sup_end,sup_ratio,"
           "max_balance_residual,flat\n";
    for (const SweepRow& r : rows) {
        out << format_double(r.gamma) << ',' << (r.completed ? 1 : 0) << ','
            << format_double(r.exit_time) << ',' << format_double(r.v_min) << ','
            << format_double(r.v_max) << ',' << format_double(r.theta_min) << ','
            << format_double(r.theta_max) << ',' << format_double(r.theta_lo) << ','
            << format_double(r.theta_hi) << ',' << (r.theta_in_window ? 1 : 0) << ','
            << format_double(r.sup0) << ',' << format_double(r.sup_end) << ','
            << format_double(r.sup_ratio) << ',' << format_double(r.max_balance_residual)
            << ',' << (r.flat ? 1 : 0) << "\n";
        const std::string status =
            r.completed ? "completed" : "regime exit at t=" + format_double_short(r.exit_time);
        std::printf("gamma %-8s %s  theta window [%s, %s]%s  sup ratio %s%s\n",
                    format_double_short(r.gamma).c_str(), status.c_str(),
                    format_double_short(r.theta_min).c_str(),
                    format_double_short(r.theta_max).c_str(),
                    r.theta_in_window ? "" : " (outside hypothesis window)",
                    format_double_short(r.sup_ratio).c_str(), r.flat ? " (flat)" : "");
    }
    return 0;
}

int cmd_decay(const RunConfig& cfg) {
    echo_config(cfg);
    DecayConfig decay;
    decay.gamma = cfg.gamma;
    decay.ic = cfg.ic();
    decay.n = cfg.n;
    decay.half_width = cfg.L;
    decay.t_end = cfg.t_end;
    decay.record_every = cfg.record_every;
    decay.ctl = cfg.ctl();
    decay.R = cfg.R;
    decay.A = cfg.A;
    decay.law = cfg.law();

    const DecayResult result = decay_study(decay);
    fs::create_directories(cfg.dir);
    const fs::path dir(cfg.dir);
    write_series(result.series, (dir / "decay.csv").string());
    if (cfg.emit_svg) {
        emit_series_svgs(result.series, dir);
    }
    std::printf("decay: sup %s -> %s (ratio %s), envelope %s\n",
                format_double_short(result.sup0).c_str(),
                format_double_short(result.sup_end).c_str(),
                format_double_short(result.ratio).c_str(),
                result.envelope_ok ? "non-increasing" : "VIOLATED");
    std::printf("seam drift %s, scaled H3 %s\n",
                format_double_short(result.seam_drift).c_str(),
                result.h3_bounded ? "within 3x of initial" : "EXCEEDED 3x initial");
    return (result.envelope_ok && result.h3_bounded) ? 0 : 1;
}

int cmd_convergence(const RunConfig& cfg) {
    echo_config(cfg);
    ConvergenceStudy study;
    study.levels = cfg.levels;
    study.half_width = cfg.L;
    study.t_end = cfg.t_end;
    study.amplitude = cfg.amplitude;
    study.ctl = cfg.ctl();

    const ConvergenceResult result = manufactured_convergence(study, cfg.gas(), cfg.law());

    fs::create_directories(cfg.dir);
    std::ofstream out(fs::path(cfg.dir) / "convergence.csv", std::ios::binary);
    out << "field,n,error,order\n";
    const char* names[3] = {"v", "u", "theta"};
    bool all_ok = true;
    for (int f = 0; f < 3; ++f) {
        for (std::size_t l = 0; l < result.levels.size(); ++l) {
            out << names[f] << ',' << result.levels[l] << ','
                << format_double(result.errors[f][l]) << ','
                << format_double(result.orders[f]) << "\n";
        }
        std::printf("%-6s order %.3f\n", names[f], result.orders[f]);
        all_ok = all_ok && result.orders[f] >= 1.8 && result.orders[f] <= 2.2;
    }
    return all_ok ? 0 : 1;
}

int cmd_check_identities(const RunConfig& cfg) {
    echo_config(cfg);
    SmoothFieldSpec spec;
    spec.seed = cfg.seed;
    spec.amplitude = cfg.amplitude;

    fs::create_directories(cfg.dir);
    std::ofstream out(fs::path(cfg.dir) / "identity_orders.csv", std::ios::binary);
    out << "tag,kind,order\n";
    bool all_ok = true;
    for (IdentityId id : all_identities) {
        const OrderReport report =
            measure_order(id, spec, cfg.levels, cfg.L, cfg.law(), cfg.gas());
        if (report.exact) {
            out << identity_name(id) << ",exact,\n";
            std::printf("%-6s exact\n", identity_name(id));
        } else {
            out << identity_name(id) << ",order," << format_double(report.order) << "\n";
            std::printf("%-6s order %.3f\n", identity_name(id), report.order);
            all_ok = all_ok && report.order >= 1.8 && report.order <= 2.2;
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_kanel(const RunConfig& cfg) {
    echo_config(cfg);
    // Canonical 50-point log grid over [1e-6, 1e6].
    std::vector<double> samples;
    for (int i = 0; i < 50; ++i) {
        samples.push_back(std::pow(10.0, -6.0 + 12.0 * i / 49.0));
    }
    const KanelGrowthReport report = kanel_growth_check(samples);

    fs::create_directories(cfg.dir);
    std::ofstream out(fs::path(cfg.dir) / "kanel.csv", std::ios::binary);
    out << "v,psi\n";
    bool increasing = true;
    double prev = -std::numeric_limits<double>::infinity();
    for (double v : samples) {
        const double psi = kanel_psi(v);
        increasing = increasing && psi > prev;
        prev = psi;
        out << format_double(v) << ',' << format_double(psi) << "\n";
    }
    std::printf("growth bound fit: A1 = %s, A2 = %s\n",
                format_double_short(report.a1).c_str(),
                format_double_short(report.a2).c_str());
    std::printf("asymptotic ratios: large %s, small %s (%s)\n",
                format_double_short(report.ratio_large).c_str(),
                format_double_short(report.ratio_small).c_str(),
                report.asymptotics_ok ? "within 15%" : "OUTSIDE 15%");
    std::printf("monotone on grid: %s\n", increasing ? "yes" : "NO");
    return (report.asymptotics_ok && increasing) ? 0 : 1;
}

int cmd_report(const RunConfig& cfg) {
    const fs::path dir(cfg.dir);
    const std::string series_path = (dir / "series.csv").string();
    const std::vector<DiagnosticsRecord> series = read_series(series_path);
    if (series.empty()) {
        throw std::runtime_error("report: empty series " + series_path);
    }
    const SeriesSummary s = summarize(series);
    std::printf("records: %zu over t in [%s, %s]\n", series.size(),
                format_double_short(series.front().t).c_str(),
                format_double_short(series.back().t).c_str());
    std::printf("eta_total: %s -> %s, max |balance residual| %s\n",
                format_double_short(series.front().eta_total).c_str(),
                format_double_short(series.back().eta_total).c_str(),
                format_double_short(s.max_balance).c_str());
    std::printf("v window [%s, %s], theta window [%s, %s]\n",
                format_double_short(s.v_min).c_str(), format_double_short(s.v_max).c_str(),
                format_double_short(s.theta_min).c_str(),
                format_double_short(s.theta_max).c_str());
    std::printf("sup perturbation: %s -> %s\n", format_double_short(s.sup0).c_str(),
                format_double_short(s.sup_end).c_str());
    const double mass0 = series.front().mass;
    double mass_drift = 0.0, mom_drift = 0.0;
    for (const DiagnosticsRecord& r : series) {
        mass_drift = std::max(mass_drift, std::abs(r.mass - mass0) / mass0);
        mom_drift = std::max(mom_drift, std::abs(r.momentum - series.front().momentum));
    }
    std::printf("mass drift %s rel, momentum drift %s abs\n",
                format_double_short(mass_drift).c_str(),
                format_double_short(mom_drift).c_str());
    if (cfg.emit_svg) {
        emit_series_svgs(series, dir);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D Lagrangian compressible Navier-Stokes simulator with "
                 "entropy/Kanel diagnostics"};
    app.require_subcommand(1);

    std::string config_path;
    std::string checkpoint_path;
    double halt_at_time = std::numeric_limits<double>::infinity();

    auto add_config = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "configuration file")->required();
    };

    CLI::App* run_cmd = app.add_subcommand("run", "integrate one configuration");
    add_config(run_cmd);
    run_cmd->add_option("--halt-at-time", halt_at_time,
                        "stop at the first record boundary past this time (for resume)");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "gamma sweep over [experiment].gamma_list");
    add_config(sweep_cmd);
    CLI::App* decay_cmd = app.add_subcommand("decay", "long-horizon decay study");
    add_config(decay_cmd);
    CLI::App* conv_cmd = app.add_subcommand("convergence", "manufactured-solution orders");
    add_config(conv_cmd);
    CLI::App* ident_cmd = app.add_subcommand("check-identities", "expanded-identity orders");
    add_config(ident_cmd);
    CLI::App* kanel_cmd = app.add_subcommand("kanel", "Kanel functional growth check");
    add_config(kanel_cmd);
    CLI::App* resume_cmd = app.add_subcommand("resume", "continue a run from a checkpoint");
    add_config(resume_cmd);
    resume_cmd->add_option("--checkpoint", checkpoint_path, "checkpoint file")->required();
    CLI::App* report_cmd = app.add_subcommand("report", "summarize an emitted series");
    add_config(report_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        const RunConfig cfg = load_config(config_path);
        if (run_cmd->parsed()) return cmd_run(cfg, halt_at_time);
        if (sweep_cmd->parsed()) return cmd_sweep(cfg);
        if (decay_cmd->parsed()) return cmd_decay(cfg);
        if (conv_cmd->parsed()) return cmd_convergence(cfg);
        if (ident_cmd->parsed()) return cmd_check_identities(cfg);
        if (kanel_cmd->parsed()) return cmd_kanel(cfg);
        if (resume_cmd->parsed()) return cmd_resume(cfg, checkpoint_path);
        if (report_cmd->parsed()) return cmd_report(cfg);
        std::fputs("no subcommand\n", stderr);
        return 1;
    } catch (const RegimeExit& exit) {
        std::fprintf(stderr, "regime exit: %s[%zu] = %s at t = %s\n", exit.field.c_str(),
                     exit.index, format_double_short(exit.value).c_str(),
                     format_double_short(exit.time).c_str());
        return 2;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
}
