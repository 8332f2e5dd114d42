// accelramsey: sweeps, figure data and self-checks from the command line.

#include "accelramsey/config.hpp"
#include "accelramsey/error.hpp"
#include "accelramsey/output.hpp"
#include "accelramsey/selfcheck.hpp"
#include "accelramsey/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace accelramsey;

enum Exit { ok = 0, config_error = 1, invariant_error = 2, io_error = 3 };

struct Overrides {
    std::string config_path;
    std::optional<std::string> freq;
    std::optional<std::string> detuning;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::string> grid;
    std::optional<std::string> precision;
};

void add_common(CLI::App* cmd, Overrides& o, bool allow_both) {
    cmd->add_option("--config", o.config_path, "flat key = value config file");
    auto* freq = cmd->add_option("--freq-convention", o.freq, "frequency inputs in rad/s or Hz");
    freq->check(allow_both ? CLI::IsMember({"angular", "hertz", "both"}) : CLI::IsMember({"angular", "hertz"}));
    cmd->add_option("--detuning", o.detuning, "use |Delta| or signed Delta")
        ->check(CLI::IsMember({"magnitude", "signed"}));
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--grid", o.grid, "start:stop:npoints:log|lin");
    cmd->add_option("--precision", o.precision, "significant digits, 6..17");
}

RunConfig build_config(const Overrides& o, bool* both = nullptr) {
    RunConfig config;
    if (!o.config_path.empty()) {
        config = load_config_file(o.config_path, config);
    }
    const auto set = [&](std::string_view key, const std::optional<std::string>& value) {
        if (value) {
            apply_setting(config, key, *value);
        }
    };
    if (o.freq && *o.freq == "both") {
        *both = true;
    } else {
        set("freq_convention", o.freq);
    }
    set("detuning", o.detuning);
    set("out", o.out);
    set("format", o.format);
    set("grid", o.grid);
    set("precision", o.precision);
    config.validate();
    return config;
}

int finish(const SweepOutput& output, const RunConfig& config) {
    write_output(output, config);
    if (!output.ok()) {
        for (const auto& c : output.checks) {
            if (c.hard && !c.passed) {
                std::cerr << "check failed: " << c.name << ": " << c.detail << "\n";
            }
        }
        return invariant_error;
    }
    return ok;
}

int run(int argc, char** argv) {
    CLI::App app{"Acceleration-radiation Ramsey interferometer: sweeps and checks"};
    app.require_subcommand(1);

    Overrides amp_o, vis_o, fig3_o, fig4_o;
    auto* amplitude = app.add_subcommand("amplitude", "closed-form and quadrature amplitude over the grid");
    add_common(amplitude, amp_o, false);
    auto* visibility = app.add_subcommand("visibility", "P_g, V and delta V over the grid");
    add_common(visibility, vis_o, false);
    auto* fig3 = app.add_subcommand("fig3", "delta V(a) at T = 1 ns and T -> infinity");
    add_common(fig3, fig3_o, true);
    auto* fig4 = app.add_subcommand("fig4", "delta V(a) for the six caption (kappa, delta omega) pairs");
    add_common(fig4, fig4_o, false);

    auto* selfcheck = app.add_subcommand("selfcheck", "run the invariant suite; JSON report");
    std::optional<std::string> check_out;
    std::optional<double> inject;
    selfcheck->add_option("--out", check_out, "report path (default stdout)");
    selfcheck->add_option("--inject-tolerance", inject)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return config_error;
    }

    if (*selfcheck) {
        SelfcheckOptions options;
        options.tolerance_override = inject;
        const SelfcheckReport report = run_selfcheck(options);
        const std::string text = report.to_json().dump(2) + "\n";
        if (check_out) {
            std::ofstream file(*check_out, std::ios::binary | std::ios::trunc);
            if (!(file << text)) {
                throw Error(ErrorKind::io, "cannot write report '" + *check_out + "'");
            }
        } else {
            std::cout << text;
        }
        if (!report.ok()) {
            for (const auto& c : report.checks) {
                if (!c.passed) {
                    std::cerr << "selfcheck failed: " << c.name << "\n";
                }
            }
            return invariant_error;
        }
        return ok;
    }
    if (*amplitude) {
        const RunConfig config = build_config(amp_o);
        return finish(run_amplitude(config), config);
    }
    if (*visibility) {
        const RunConfig config = build_config(vis_o);
        return finish(run_visibility(config), config);
    }
    if (*fig3) {
        bool both = false;
        const RunConfig config = build_config(fig3_o, &both);
        const std::vector<FrequencyConvention> conventions =
            both ? std::vector{FrequencyConvention::angular, FrequencyConvention::hertz}
                 : std::vector{config.conventions.freq};
        return finish(run_fig3(config, conventions), config);
    }
    const RunConfig config = build_config(fig4_o);
    return finish(run_fig4(config), config);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "accelramsey: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::config: return config_error;
            case ErrorKind::io: return io_error;
            default: return invariant_error;
        }
    } catch (const std::exception& e) {
        std::cerr << "accelramsey: " << e.what() << "\n";
        return invariant_error;
    }
}
