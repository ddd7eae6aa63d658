#include "hddlogic/drive.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hddlogic/errors.hpp"

namespace hddlogic {

namespace {

std::string format_real(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

double parse_real(const std::string& token, const char* what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw MalformedImageError(std::string("bad ") + what + " value '" + token + "'");
    return v;
}

template <class Int>
Int parse_int(const std::string& token, const char* what) {
    Int v{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw MalformedImageError(std::string("bad ") + what + " value '" + token + "'");
    return v;
}

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::vector<std::string> fields(const char* what) {
        std::string line;
        if (!std::getline(in_, line)) throw MalformedImageError(std::string("image truncated before ") + what);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::vector<std::string> out;
        for (std::string tok; ss >> tok;) out.push_back(tok);
        if (out.empty()) throw MalformedImageError(std::string("blank line where ") + what + " was expected");
        return out;
    }

    std::string keyed(const char* key) {
        auto f = fields(key);
        if (f.size() != 2 || f[0] != key) throw MalformedImageError(std::string("expected '") + key + " <value>'");
        return f[1];
    }

    bool at_end() {
        std::string line;
        while (std::getline(in_, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos) return false;
        return true;
    }

private:
    std::istream& in_;
};

std::string medium_line(const Medium& medium) {
    if (const auto* p = std::get_if<PerpendicularMedium>(&medium))
        return "perpendicular " + format_real(p->hk1) + " " + format_real(p->hk2);
    const auto& l = std::get<LongitudinalMedium>(medium);
    if (l.mode == MediumMode::Analytic) return "longitudinal analytic " + format_real(l.hk);
    return "longitudinal montecarlo " + format_real(l.hk) + " " + std::to_string(l.particles_per_cell) + " " +
           std::to_string(l.seed);
}

Medium parse_medium(const std::vector<std::string>& f) {
    if (f.size() == 4 && f[1] == "perpendicular")
        return PerpendicularMedium{parse_real(f[2], "hk1"), parse_real(f[3], "hk2")};
    if (f.size() == 4 && f[1] == "longitudinal" && f[2] == "analytic")
        return LongitudinalMedium{parse_real(f[3], "hk"), MediumMode::Analytic};
    if (f.size() == 6 && f[1] == "longitudinal" && f[2] == "montecarlo")
        return LongitudinalMedium{parse_real(f[3], "hk"), MediumMode::MonteCarlo,
                                  parse_int<std::size_t>(f[4], "particles"), parse_int<std::uint64_t>(f[5], "seed")};
    throw MalformedImageError("unrecognized medium description");
}

std::uint64_t elementary_ops(Gate g) { return is_composed(g) ? 2 : 1; }

}  // namespace

HeadType parse_head(std::string_view name) {
    if (name == "standard") return HeadType::Standard;
    if (name == "tandem") return HeadType::Tandem;
    throw InvalidArgument("unknown head type '" + std::string(name) + "'");
}

void DriveGeometry::validate() const {
    if (!(revolutions_per_second > 0.0)) throw InvalidArgument("revolutions per second must be positive");
    if (bits_per_track == 0) throw InvalidArgument("bits per track must be positive");
}

int rotations_for_op(HeadType head, bool composed) {
    const int per_op = head == HeadType::Standard ? 3 : 1;
    return composed ? 2 * per_op : per_op;
}

double throughput_bits_per_second(const DriveGeometry& geom) {
    geom.validate();
    return geom.revolutions_per_second * static_cast<double>(geom.bits_per_track) /
           static_cast<double>(rotations_for_op(geom.head, false));
}

void save_track(const Track& track, std::ostream& out) {
    out << "MAGTRACK " << track_image_version << '\n';
    out << "guard " << track.guard() << '\n';
    out << "cells " << track.cell_count() << '\n';
    out << "medium " << medium_line(track.medium()) << '\n';
    out << "passes " << track.pass_log().size() << '\n';
    for (const auto& p : track.pass_log()) out << "pass " << format_real(p.amplitude) << ' ' << p.signs << '\n';
    for (double m : track.magnetizations()) out << format_real(m) << '\n';
    if (!out) throw ImageError("failed writing track image");
}

void save_track(const Track& track, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ImageError("cannot open '" + path.string() + "' for writing");
    save_track(track, out);
}

Track load_track(std::istream& in) {
    LineReader reader(in);

    const auto magic = reader.fields("header");
    if (magic[0] != "MAGTRACK" || magic.size() != 2) throw MalformedImageError("missing MAGTRACK header");
    int version = 0;
    try {
        version = parse_int<int>(magic[1], "version");
    } catch (const MalformedImageError&) {
        throw ImageVersionError("unreadable image version '" + magic[1] + "'");
    }
    if (version != track_image_version)
        throw ImageVersionError("image version " + magic[1] + " is not supported (expected " +
                                std::to_string(track_image_version) + ")");

    const int guard = parse_int<int>(reader.keyed("guard"), "guard");
    const auto cells = parse_int<std::size_t>(reader.keyed("cells"), "cells");
    if (guard < 1) throw MalformedImageError("guard must be >= 1");
    const auto window = static_cast<std::size_t>(1 + guard);
    if (cells < 3 || (cells - 2) % window != 0)
        throw CellCountError(std::to_string(cells) + " cells do not fit guard " + std::to_string(guard));

    auto mline = reader.fields("medium");
    if (mline[0] != "medium") throw MalformedImageError("expected medium line");
    Medium medium = parse_medium(mline);
    try {
        validate(medium);
    } catch (const InvalidArgument& e) {
        throw MalformedImageError(e.what());
    }

    const auto passes = parse_int<std::size_t>(reader.keyed("passes"), "passes");
    std::vector<PassRecord> log;
    log.reserve(passes);
    for (std::size_t k = 0; k < passes; ++k) {
        auto f = reader.fields("pass record");
        if (f.size() != 3 || f[0] != "pass") throw MalformedImageError("bad pass record " + std::to_string(k));
        if (f[2].size() != cells || f[2].find_first_not_of("+-") != std::string::npos)
            throw MalformedImageError("pass record " + std::to_string(k) + " does not cover the track");
        log.push_back(PassRecord{parse_real(f[1], "amplitude"), f[2]});
    }

    std::vector<double> values;
    values.reserve(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        auto f = reader.fields("cell value");
        if (f.size() != 1) throw MalformedImageError("bad cell line " + std::to_string(i));
        values.push_back(parse_real(f[0], "magnetization"));
    }
    if (!reader.at_end()) throw CellCountError("image holds more than the declared " + std::to_string(cells) + " cells");

    return Track::from_recorded(std::move(medium), std::move(values), guard, std::move(log));
}

Track load_track(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ImageError("cannot open '" + path.string() + "'");
    return load_track(in);
}

ProgramStep ProgramStep::gate_step(Gate g, Word a, std::optional<Word> b) {
    return ProgramStep{g, std::move(a), std::move(b)};
}

ProgramStep ProgramStep::add_step(Word a, Word b) { return ProgramStep{std::nullopt, std::move(a), std::move(b)}; }

std::vector<ProgramStep> parse_program(std::istream& in) {
    std::vector<ProgramStep> steps;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        try {
            if (tok[0] == "add") {
                if (tok.size() != 3) throw InvalidArgument("add needs two operands");
                steps.push_back(ProgramStep::add_step(Word::parse(tok[1]), Word::parse(tok[2])));
                continue;
            }
            const Gate g = parse_gate(tok[0]);
            const std::size_t want = is_unary(g) ? 2 : 3;
            if (tok.size() != want) throw InvalidArgument(tok[0] + " takes " + std::to_string(want - 1) + " operand(s)");
            steps.push_back(ProgramStep::gate_step(
                g, Word::parse(tok[1]), want == 3 ? std::optional<Word>(Word::parse(tok[2])) : std::nullopt));
        } catch (const Error& e) {
            throw InvalidArgument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return steps;
}

ProgramResult run_program(const DriveGeometry& geom, const PipelineConfig& cfg, const std::vector<ProgramStep>& steps) {
    geom.validate();
    const auto per_op = static_cast<std::uint64_t>(rotations_for_op(geom.head, false));
    ProgramResult out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& step = steps[i];
        StepOutcome o;
        try {
            if (step.is_add()) {
                if (!step.b) throw InvalidArgument("add needs two operands");
                auto r = add(step.a, *step.b, cfg);
                o.result = r.sum;
                o.adder_iterations = r.iterations;
                o.operations = 2 * static_cast<std::uint64_t>(r.iterations);
                o.rotations = per_op * o.operations;
            } else {
                o.result = run_gate(*step.gate, step.a, step.b, cfg).result;
                o.operations = elementary_ops(*step.gate);
                o.rotations = static_cast<std::uint64_t>(rotations_for_op(geom.head, is_composed(*step.gate)));
            }
        } catch (const Error& e) {
            throw ProgramError(i, e.what());
        }
        out.ledger.rotations += o.rotations;
        out.ledger.operations += o.operations;
        out.results.push_back(o.result);
        out.steps.push_back(std::move(o));
    }
    return out;
}

VirtualDrive::VirtualDrive(DriveGeometry geom, PipelineConfig cfg) : geom_(geom), cfg_(std::move(cfg)) {
    geom_.validate();
    validate(cfg_.medium);
}

GateRun VirtualDrive::execute(const std::string& name, Gate gate, const Word& a, const std::optional<Word>& b) {
    GateRun run = run_gate(gate, a, b, cfg_);
    ledger_.operations += elementary_ops(gate);
    ledger_.rotations += static_cast<std::uint64_t>(rotations_for_op(geom_.head, is_composed(gate)));
    store(name, run.stages.back().run.track);
    return run;
}

ProgramResult VirtualDrive::run(const std::vector<ProgramStep>& steps) {
    auto result = run_program(geom_, cfg_, steps);
    ledger_.rotations += result.ledger.rotations;
    ledger_.operations += result.ledger.operations;
    return result;
}

void VirtualDrive::store(const std::string& name, Track track) { tracks_.insert_or_assign(name, std::move(track)); }

const Track& VirtualDrive::track(const std::string& name) const {
    auto it = tracks_.find(name);
    if (it == tracks_.end()) throw InvalidArgument("no track named '" + name + "'");
    return it->second;
}

std::vector<std::string> VirtualDrive::track_names() const {
    std::vector<std::string> names;
    for (const auto& [name, _] : tracks_) names.push_back(name);
    return names;
}

void VirtualDrive::save(const std::string& name, const std::filesystem::path& path) const {
    save_track(track(name), path);
}

void VirtualDrive::load(const std::string& name, const std::filesystem::path& path) { store(name, load_track(path)); }

}  // namespace hddlogic
