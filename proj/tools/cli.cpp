#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hddlogic/channel.hpp"
#include "hddlogic/detector.hpp"
#include "hddlogic/drive.hpp"
#include "hddlogic/errors.hpp"
#include "hddlogic/logic.hpp"
#include "hddlogic/medium.hpp"

namespace hddlogic::cli {

namespace {

struct PipelineOptions {
    int guard = 1;
    std::string medium = "longitudinal";
    double hk1 = 1.0;
    double hk2 = 0.5;
    bool mc = false;
    std::size_t particles = 10000;
    std::uint64_t seed = 1;
    std::string head = "standard";
    double theta_low = 0.5;
    double theta_high = 1.5;
    bool verbose = false;
    double pw50 = 0.5;
    CLI::Option* pw50_opt = nullptr;

    void attach(CLI::App* app) {
        app->add_option("--guard", guard, "baseline half-cells after each pulse")->check(CLI::PositiveNumber);
        app->add_option("--medium", medium, "recording medium")
            ->check(CLI::IsMember({"longitudinal", "perpendicular"}));
        app->add_option("--hk1", hk1, "perpendicular: anisotropy field of the hard population");
        app->add_option("--hk2", hk2, "perpendicular: anisotropy field of the soft population");
        app->add_flag("--mc", mc, "Monte Carlo particle ensembles per cell");
        app->add_option("--particles", particles, "particles per cell (Monte Carlo)")->check(CLI::PositiveNumber);
        app->add_option("--seed", seed, "ensemble seed (Monte Carlo)");
        app->add_option("--head", head, "head type for cost accounting")
            ->check(CLI::IsMember({"standard", "tandem"}));
        app->add_option("--theta-low", theta_low, "MEDIUM detection threshold (units of M)");
        app->add_option("--theta-high", theta_high, "LARGE detection threshold (units of M)");
        app->add_flag("-v,--verbose", verbose, "print the cell profile, peaks and cost");
        pw50_opt = app->add_option("--pw50", pw50, "detect on a Lorentzian readback of this width (half-cells)");
    }

    PipelineConfig config() const {
        PipelineConfig cfg;
        cfg.guard = guard;
        cfg.theta_low = theta_low;
        cfg.theta_high = theta_high;
        if (medium == "perpendicular") {
            if (mc) throw InvalidArgument("--mc applies to the longitudinal medium only");
            cfg.medium = PerpendicularMedium{hk1, hk2};
        } else {
            LongitudinalMedium lm;
            if (mc) {
                lm.mode = MediumMode::MonteCarlo;
                lm.particles_per_cell = particles;
                lm.seed = seed;
            }
            cfg.medium = lm;
        }
        validate(cfg.medium);
        if (pw50_opt != nullptr && pw50_opt->count() > 0) cfg.shaping = ShapingConfig{pw50, 16};
        return cfg;
    }
};

std::string class_name(PeakClass c) { return c == PeakClass::Large ? "LARGE" : "MEDIUM"; }

std::string mode_name(DetectMode m) {
    switch (m) {
        case DetectMode::Any: return "any";
        case DetectMode::LargeOnly: return "large-only";
        case DetectMode::MediumOnly: return "medium-only";
    }
    return "?";
}

void print_profile(const Track& track, std::ostream& out) {
    const auto m = track.magnetizations();
    for (std::size_t i = 0; i < m.size(); ++i) out << i << ' ' << m[i] << '\n';
}

void print_stage(const StageTrace& st, std::ostream& out) {
    out << "# profile\n";
    print_profile(st.run.track, out);
    out << "# peaks (" << mode_name(st.mode) << ")\n";
    for (const auto& e : st.events) out << e.boundary_index << ' ' << e.amplitude << ' ' << class_name(e.cls) << '\n';
    out << "# stage result " << st.result.str() << '\n';
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("grid entry '" + tok + "' is not a number");
        }
        if (used != tok.size()) throw InvalidArgument("grid entry '" + tok + "' is not a number");
        if (v < 0.0 || v > 1.0) throw InvalidArgument("grid entry " + tok + " is outside [0, 1]");
        grid.push_back(v);
    }
    if (grid.empty()) throw InvalidArgument("empty grid");
    return grid;
}

// Rounds to three decimals without printing "-0.000".
std::string fixed3(double v) {
    std::ostringstream s;
    double r = std::round(v * 1000.0) / 1000.0;
    if (r == 0.0) r = 0.0;
    s << std::fixed << std::setprecision(3) << r;
    return s.str();
}

int physics_sweep(const std::string& grid_text, std::size_t particles, std::uint64_t seed, std::ostream& out) {
    const auto grid = parse_grid(grid_text);
    const ParticleEnsemble fresh = sample_ensemble(particles, seed);

    std::size_t nearest = 0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (std::fabs(grid[i] - balanced_field()) < std::fabs(grid[nearest] - balanced_field())) nearest = i;

    out << "h2       analytic  montecarlo  abs_error\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double h2 = grid[i];
        ParticleEnsemble e = fresh;
        apply_field(e, h2, Direction::Negative);
        const double mc = net_magnetization(e);
        const double an = remanence_after_opposed(h2);
        out << std::left << std::setw(9) << fixed3(h2) << std::setw(10) << fixed3(an) << std::setw(12) << fixed3(mc)
            << std::fixed << std::setprecision(6) << std::fabs(mc - an) << std::defaultfloat;
        if (i == nearest) out << "  <- zero crossing (balanced field " << std::setprecision(7) << balanced_field()
                              << std::defaultfloat << std::setprecision(6) << ")";
        out << '\n';
    }
    out << "particles " << particles << " seed " << seed << '\n';
    return 0;
}

int throughput(double rps, std::uint64_t bits, const std::string& head, bool exact, std::ostream& out) {
    DriveGeometry geom{rps, bits, parse_head(head)};
    const double v = throughput_bits_per_second(geom);
    out << std::fixed << std::setprecision(0) << std::floor(v) << std::defaultfloat << '\n';
    if (exact) {
        const auto rot = static_cast<std::uint64_t>(rotations_for_op(geom.head, false));
        if (rps == std::floor(rps) && rps < 1e15) {
            std::uint64_t num = static_cast<std::uint64_t>(rps) * bits;
            const std::uint64_t g = std::gcd(num, rot);
            num /= g;
            const std::uint64_t den = rot / g;
            out << "exact " << num;
            if (den != 1) out << '/' << den;
            out << '\n';
        } else {
            out << "exact " << std::setprecision(17) << v << '\n';
        }
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hard-disk track logic simulator", "hddlogic"};
    app.require_subcommand(1);

    // gate
    auto* gate_cmd = app.add_subcommand("gate", "run a logic gate through the recording pipeline");
    std::string gate_name_arg;
    std::string a_text;
    std::string b_text;
    PipelineOptions gate_opts;
    gate_cmd->add_option("gate", gate_name_arg, "or|and|xor|xorneg|not|nand|nor|xnor")
        ->required()
        ->check(CLI::IsMember({"or", "and", "xor", "xorneg", "not", "nand", "nor", "xnor"}));
    gate_cmd->add_option("A", a_text, "first operand (0/1 string, MSB first)")->required();
    gate_cmd->add_option("B", b_text, "second operand");
    gate_opts.attach(gate_cmd);

    // add
    auto* add_cmd = app.add_subcommand("add", "add two words with XOR/AND rounds");
    std::string add_a;
    std::string add_b;
    PipelineOptions add_opts;
    add_cmd->add_option("A", add_a)->required();
    add_cmd->add_option("B", add_b)->required();
    add_opts.attach(add_cmd);

    // physics-sweep
    auto* sweep_cmd = app.add_subcommand("physics-sweep", "Monte Carlo vs closed-form opposed-pass remanence");
    std::string grid_text = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0";
    std::size_t sweep_particles = 1'000'000;
    std::uint64_t sweep_seed = 1;
    sweep_cmd->add_option("--grid", grid_text, "comma-separated h2 values in [0, 1]");
    sweep_cmd->add_option("--particles", sweep_particles)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", sweep_seed);

    // throughput
    auto* tp_cmd = app.add_subcommand("throughput", "bit operations per second of the drive");
    double rps = 100.0;
    std::uint64_t bits = 1'000'000;
    std::string tp_head = "standard";
    bool exact = false;
    tp_cmd->add_option("--rps", rps, "revolutions per second");
    tp_cmd->add_option("--bits", bits, "bits per track");
    tp_cmd->add_option("--head", tp_head)->check(CLI::IsMember({"standard", "tandem"}));
    tp_cmd->add_flag("--exact", exact, "also print the exact rational");

    // track
    auto* track_cmd = app.add_subcommand("track", "track images");
    track_cmd->require_subcommand(1);
    auto* save_cmd = track_cmd->add_subcommand("save", "superimpose A and B and save the track image");
    std::string save_path;
    std::string save_a;
    std::string save_b;
    bool save_negative = false;
    PipelineOptions save_opts;
    save_cmd->add_option("path", save_path)->required();
    save_cmd->add_option("A", save_a)->required();
    save_cmd->add_option("B", save_b)->required();
    save_cmd->add_flag("--negative", save_negative, "write B as a negative pulse train");
    save_opts.attach(save_cmd);
    auto* load_cmd = track_cmd->add_subcommand("load", "decode a saved track in all detector modes");
    std::string load_path;
    double load_low = 0.5;
    double load_high = 1.5;
    load_cmd->add_option("path", load_path)->required();
    load_cmd->add_option("--theta-low", load_low);
    load_cmd->add_option("--theta-high", load_high);
    auto* show_cmd = track_cmd->add_subcommand("show", "print a saved track");
    std::string show_path;
    show_cmd->add_option("path", show_path)->required();

    // run
    auto* run_cmd = app.add_subcommand("run", "execute a command file (one gate/add per line)");
    std::string program_path;
    PipelineOptions run_opts;
    run_cmd->add_option("file", program_path)->required();
    run_opts.attach(run_cmd);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (gate_cmd->parsed()) {
            const Gate g = parse_gate(gate_name_arg);
            const auto cfg = gate_opts.config();
            const Word a = Word::parse(a_text);
            std::optional<Word> b;
            if (!b_text.empty()) b = Word::parse(b_text);
            const auto r = run_gate(g, a, b, cfg);
            if (gate_opts.verbose)
                for (const auto& st : r.stages) print_stage(st, out);
            out << r.result.str() << '\n';
            if (gate_opts.verbose)
                out << "rotations " << rotations_for_op(parse_head(gate_opts.head), is_composed(g)) << ' '
                    << gate_opts.head << '\n';
            return 0;
        }
        if (add_cmd->parsed()) {
            const auto cfg = add_opts.config();
            const auto r = add(Word::parse(add_a), Word::parse(add_b), cfg);
            out << r.sum.str() << '\n';
            out << "iterations " << r.iterations << '\n';
            if (add_opts.verbose)
                out << "rotations " << 2 * r.iterations * rotations_for_op(parse_head(add_opts.head), false) << ' '
                    << add_opts.head << '\n';
            return 0;
        }
        if (sweep_cmd->parsed()) return physics_sweep(grid_text, sweep_particles, sweep_seed, out);
        if (tp_cmd->parsed()) return throughput(rps, bits, tp_head, exact, out);
        if (save_cmd->parsed()) {
            const auto cfg = save_opts.config();
            TrainSpec sa{Polarity::Positive, cfg.guard, std::nullopt};
            TrainSpec sb{save_negative ? Polarity::Negative : Polarity::Positive, cfg.guard, std::nullopt};
            const auto s = run_superimposition(cfg.medium, Word::parse(save_a), sa, Word::parse(save_b), sb);
            save_track(s.track, std::filesystem::path(save_path));
            out << "saved " << s.track.cell_count() << " cells to " << save_path << '\n';
            return 0;
        }
        if (load_cmd->parsed()) {
            const Track t = load_track(std::filesystem::path(load_path));
            const auto signal = read_ideal(t);
            for (DetectMode m : {DetectMode::Any, DetectMode::LargeOnly, DetectMode::MediumOnly}) {
                DetectorConfig det{load_low, load_high, m};
                const auto events = detect_peaks(signal, det);
                out << mode_name(m) << ' ' << decode_word(window_flags(events, t.bit_count(), t.guard(), m)).str()
                    << '\n';
            }
            return 0;
        }
        if (show_cmd->parsed()) {
            const Track t = load_track(std::filesystem::path(show_path));
            out << "guard " << t.guard() << " bits " << t.bit_count() << " cells " << t.cell_count() << " passes "
                << t.pass_log().size() << '\n';
            print_profile(t, out);
            return 0;
        }
        if (run_cmd->parsed()) {
            std::ifstream in(program_path);
            if (!in) throw InvalidArgument("cannot open program '" + program_path + "'");
            const auto steps = parse_program(in);
            DriveGeometry geom;
            geom.head = parse_head(run_opts.head);
            const auto r = run_program(geom, run_opts.config(), steps);
            for (const auto& w : r.results) out << w.str() << '\n';
            out << "rotations " << r.ledger.rotations << " operations " << r.ledger.operations << '\n';
            return 0;
        }
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace hddlogic::cli
