#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hddlogic/channel.hpp"
#include "hddlogic/detector.hpp"
#include "hddlogic/drive.hpp"
#include "hddlogic/errors.hpp"
#include "hddlogic/logic.hpp"
#include "hddlogic/medium.hpp"

namespace py = pybind11;
using namespace hddlogic;

namespace {

PipelineConfig make_config(const std::string& medium, int guard, double hk1, double hk2, bool monte_carlo,
                           std::size_t particles, std::uint64_t seed, double theta_low, double theta_high,
                           std::optional<double> pw50) {
    PipelineConfig cfg;
    if (medium == "longitudinal")
        cfg.medium = LongitudinalMedium{hk1, monte_carlo ? MediumMode::MonteCarlo : MediumMode::Analytic, particles, seed};
    else if (medium == "perpendicular")
        cfg.medium = PerpendicularMedium{hk1, hk2};
    else
        throw InvalidArgument("unknown medium '" + medium + "'");
    cfg.guard = guard;
    cfg.theta_low = theta_low;
    cfg.theta_high = theta_high;
    if (pw50) cfg.shaping = ShapingConfig{*pw50, 16};
    return cfg;
}

#define PIPELINE_ARGS                                                                                         \
    py::kw_only(), py::arg("medium") = "longitudinal", py::arg("guard") = 1, py::arg("hk1") = 1.0,             \
        py::arg("hk2") = 0.5, py::arg("monte_carlo") = false, py::arg("particles") = 10000, py::arg("seed") = 1, \
        py::arg("theta_low") = 0.5, py::arg("theta_high") = 1.5, py::arg("pw50") = py::none()

py::dict decode_all(const ReadbackSignal& signal, std::size_t bits, int guard) {
    py::dict out;
    const std::pair<const char*, DetectMode> modes[] = {
        {"any", DetectMode::Any}, {"large_only", DetectMode::LargeOnly}, {"medium_only", DetectMode::MediumOnly}};
    for (const auto& [name, mode] : modes) {
        const DetectorConfig det{0.5, 1.5, mode};
        out[name] = decode_word(window_flags(detect_peaks(signal, det), bits, guard, mode)).str();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_hddlogic, m) {
    m.doc() = "Bitwise logic by superimposed recording on a simulated magnetic track";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base);
    py::register_exception<OutOfRange>(m, "OutOfRange", base);
    py::register_exception<GeometryError>(m, "GeometryError", base);
    py::register_exception<WeakEraseError>(m, "WeakEraseError", base);
    py::register_exception<DesyncError>(m, "DesyncError", base);
    auto image = py::register_exception<ImageError>(m, "ImageError", base);
    py::register_exception<ImageVersionError>(m, "ImageVersionError", image);
    py::register_exception<MalformedImageError>(m, "MalformedImageError", image);
    py::register_exception<CellCountError>(m, "CellCountError", image);

    m.def("balanced_field", &balanced_field);
    m.def("remanence_after_opposed", &remanence_after_opposed, py::arg("h2"));
    m.def("threshold_angle", &threshold_angle, py::arg("h2"));
    m.def(
        "monte_carlo_remanence",
        [](double h2, std::size_t particles, std::uint64_t seed) {
            auto e = sample_ensemble(particles, seed);
            apply_field(e, h2, Direction::Negative);
            return net_magnetization(e);
        },
        py::arg("h2"), py::arg("particles") = 1'000'000, py::arg("seed") = 1);

    m.def(
        "gate",
        [](const std::string& name, const std::string& a, std::optional<std::string> b, const std::string& medium,
           int guard, double hk1, double hk2, bool mc, std::size_t particles, std::uint64_t seed, double tl,
           double th, std::optional<double> pw50) {
            const auto cfg = make_config(medium, guard, hk1, hk2, mc, particles, seed, tl, th, pw50);
            std::optional<Word> wb;
            if (b) wb = Word::parse(*b);
            return run_gate(parse_gate(name), Word::parse(a), wb, cfg).result.str();
        },
        py::arg("name"), py::arg("a"), py::arg("b") = py::none(), PIPELINE_ARGS);

    m.def(
        "oracle",
        [](const std::string& name, const std::string& a, std::optional<std::string> b) {
            std::optional<Word> wb;
            if (b) wb = Word::parse(*b);
            return boolean_oracle(parse_gate(name), Word::parse(a), wb).str();
        },
        py::arg("name"), py::arg("a"), py::arg("b") = py::none());

    m.def(
        "add",
        [](const std::string& a, const std::string& b, const std::string& medium, int guard, double hk1, double hk2,
           bool mc, std::size_t particles, std::uint64_t seed, double tl, double th, std::optional<double> pw50) {
            const auto cfg = make_config(medium, guard, hk1, hk2, mc, particles, seed, tl, th, pw50);
            const auto r = hddlogic::add(Word::parse(a), Word::parse(b), cfg);
            return py::make_tuple(r.sum.str(), r.iterations);
        },
        py::arg("a"), py::arg("b"), PIPELINE_ARGS);

    m.def(
        "superimpose",
        [](const std::string& a, const std::string& b, bool negative, int guard, std::optional<double> pw50) {
            const Word wa = Word::parse(a);
            std::optional<ShapingConfig> shaping;
            if (pw50) shaping = ShapingConfig{*pw50, 16};
            const auto r = run_superimposition(LongitudinalMedium{}, wa, {Polarity::Positive, guard}, Word::parse(b),
                                               {negative ? Polarity::Negative : Polarity::Positive, guard, std::nullopt},
                                               shaping);
            py::dict out;
            out["magnetization"] = r.track.magnetizations();
            out["transitions"] = r.signal.transitions;
            if (r.signal.waveform) {
                std::vector<std::pair<double, double>> wave;
                for (const auto& s : *r.signal.waveform) wave.emplace_back(s.position, s.voltage);
                out["waveform"] = wave;
            }
            out["decoded"] = decode_all(r.signal, wa.size(), guard);
            return out;
        },
        py::arg("a"), py::arg("b"), py::kw_only(), py::arg("negative") = false, py::arg("guard") = 1,
        py::arg("pw50") = py::none());

    m.def(
        "throughput",
        [](double rps, std::uint64_t bits, const std::string& head) {
            return throughput_bits_per_second({rps, bits, parse_head(head)});
        },
        py::arg("rps") = 100.0, py::arg("bits") = 1'000'000, py::arg("head") = "standard");

    m.def(
        "save_track",
        [](const std::string& path, const std::string& a, const std::string& b, bool negative, int guard) {
            const auto r = run_superimposition(LongitudinalMedium{}, Word::parse(a), {Polarity::Positive, guard},
                                               Word::parse(b),
                                               {negative ? Polarity::Negative : Polarity::Positive, guard, std::nullopt});
            save_track(r.track, std::filesystem::path(path));
        },
        py::arg("path"), py::arg("a"), py::arg("b"), py::kw_only(), py::arg("negative") = false,
        py::arg("guard") = 1);

    m.def(
        "load_track",
        [](const std::string& path) {
            const Track t = load_track(std::filesystem::path(path));
            py::dict out;
            out["guard"] = t.guard();
            out["bits"] = t.bit_count();
            out["magnetization"] = t.magnetizations();
            out["decoded"] = decode_all(read_ideal(t), t.bit_count(), t.guard());
            return out;
        },
        py::arg("path"));
}
