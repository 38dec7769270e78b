#include "cli.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "optics/em_optics.hpp"
#include "optics/errors.hpp"
#include "optics/gaussian_beam.hpp"
#include "optics/kernels.hpp"
#include "optics/quantum_mode.hpp"
#include "optics/ray_optics.hpp"
#include "optics/resonator.hpp"
#include "optics/sysdesc.hpp"

namespace optics::cli {

namespace {

// Raised inside a command to end it with the given exit code and message.
struct Abort {
    int code;
    std::string message;
};

std::string g(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    return fmt::format("{:.12g}", v);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

sysdesc::Document load(const std::string& path, sysdesc::DocumentKind want) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Abort{kUsage, fmt::format("error: cannot read '{}'", path)};
    std::stringstream buf;
    buf << in.rdbuf();
    sysdesc::Document doc;
    try {
        doc = sysdesc::parse(buf.str());
    } catch (const sysdesc::ParseError& e) {
        throw Abort{kUsage, fmt::format("{}:{}:{}: parse error: {}", path, e.line(), e.column(), e.message())};
    }
    if (doc.kind != want) {
        throw Abort{kUsage, fmt::format("error: '{}' is not a {} description", path,
                                        want == sysdesc::DocumentKind::system ? "[system]" : "[resonator]")};
    }
    return doc;
}

OpticalSystem load_system(const std::string& path) {
    OpticalSystem sys = sysdesc::to_system(load(path, sysdesc::DocumentKind::system));
    const ValidationReport report = validate_system(sys);
    if (!report.passed()) throw Abort{kDomainFailure, "invalid system:\n" + report.summary()};
    return sys;
}

Resonator load_resonator(const std::string& path) {
    Resonator res = sysdesc::to_resonator(load(path, sysdesc::DocumentKind::resonator));
    const ValidationReport report = validate_resonator(res);
    if (!report.passed()) throw Abort{kDomainFailure, "invalid resonator:\n" + report.summary()};
    return res;
}

std::string format_matrix_rows(const Mat2& m) {
    return fmt::format("{} {}\n{} {}\n", g(m.a11), g(m.a12), g(m.a21), g(m.a22));
}

// --- commands -------------------------------------------------------------

std::string cmd_matrix(const std::string& file) {
    const Mat2 m = system_composition(load_system(file));
    return format_matrix_rows(m) + "det " + g(m.det()) + "\n";
}

std::string cmd_trace(const std::string& file, double y0, double theta0, const std::string& format) {
    const OpticalSystem sys = load_system(file);
    const RayTrace trace = trace_ray(sys, {y0, theta0});

    // Step-wise tracing and the composed matrix must agree.
    const Vec2 expected = mat2_apply(system_composition(sys), {y0, theta0});
    const RayState& last = trace.last();
    const double scale = std::max({std::abs(expected[0]), std::abs(expected[1]), 1e-300});
    if (std::abs(last.y - expected[0]) > 1e-12 * scale || std::abs(last.theta - expected[1]) > 1e-12 * scale) {
        throw Abort{kDomainFailure, "internal error: traced ray disagrees with composed matrix"};
    }

    std::string out;
    if (format == "csv") {
        out = "index,y,theta\n";
        for (std::size_t i = 0; i < trace.states.size(); ++i) {
            out += fmt::format("{},{},{}\n", i, g(trace.states[i].y), g(trace.states[i].theta));
        }
    } else {
        out = fmt::format("{:>5}  {:>19}  {:>19}\n", "index", "y", "theta");
        for (std::size_t i = 0; i < trace.states.size(); ++i) {
            out += fmt::format("{:>5}  {:>19}  {:>19}\n", i, g(trace.states[i].y), g(trace.states[i].theta));
        }
    }
    return out;
}

std::string cmd_stability(const std::string& file, bool oracle, unsigned round_trips, double y0, double theta0) {
    const Resonator res = load_resonator(file);
    StabilityVerdict v;
    try {
        v = stability(res);
    } catch (const NonUnimodular& e) {
        throw Abort{kDomainFailure, std::string("error: ") + e.what()};
    }
    std::string out = fmt::format("det {}\nhalf_trace {}\nverdict {}\n", g(v.det), g(v.half_trace), v.label());
    if (oracle) {
        const RayBound b = ray_bound_oracle(res, {y0, theta0}, round_trips);
        std::string agreement = "n/a";
        if (!v.marginal) agreement = (v.stable != b.diverged) ? "agree" : "disagree";
        out += fmt::format("oracle_round_trips {}\noracle_max_y {}\noracle_max_theta {}\noracle_diverged {}\n"
                           "oracle_agreement {}\n",
                           b.round_trips, g(b.max_y), g(b.max_theta), yes_no(b.diverged), agreement);
    }
    return out;
}

std::string format_q(const char* label, Complex q) {
    return fmt::format("{} re={} im={}\n", label, g(q.real()), g(q.imag()));
}

std::string cmd_beam(const std::string& file, double lambda, std::optional<double> q_re, std::optional<double> q_im,
                     std::optional<std::string> radius_text, std::optional<double> w) {
    const bool has_q = q_re || q_im;
    const bool has_geom = radius_text || w;
    if (has_q == has_geom) throw Abort{kUsage, "error: give exactly one of (--q-re, --q-im) or (--R, --w)"};
    if (has_q && !(q_re && q_im)) throw Abort{kUsage, "error: --q-re and --q-im must be given together"};
    if (has_geom && !(radius_text && w)) throw Abort{kUsage, "error: --R and --w must be given together"};

    const OpticalSystem sys = load_system(file);
    QParameter in;
    if (has_q) {
        in = {Complex(*q_re, *q_im), lambda};
        if (!is_physical(in)) throw Abort{kDomainFailure, "error: unphysical beam (need Im q > 0, lambda > 0)"};
    } else {
        WavefrontRadius radius = WavefrontRadius::flat();
        if (*radius_text != "inf") {
            double r = 0.0;
            try {
                std::size_t used = 0;
                r = std::stod(*radius_text, &used);
                if (used != radius_text->size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw Abort{kUsage, "error: --R must be a real number or 'inf'"};
            }
            if (std::isinf(r)) {
                radius = WavefrontRadius::flat();
            } else {
                radius = WavefrontRadius::finite(r);
            }
        }
        try {
            in = q_from_geometry(radius, *w, lambda);
        } catch (const DomainError& e) {
            throw Abort{kDomainFailure, std::string("error: ") + e.what()};
        }
    }

    const Mat2 m = system_composition(sys);
    QParameter out_q;
    BeamSpot spot;
    try {
        out_q = propagate_q(in, m);
        spot = geometry_from_q(out_q);
    } catch (const SingularTransform& e) {
        throw Abort{kDomainFailure, std::string("error: singular transform: ") + e.what()};
    } catch (const UnphysicalBeam& e) {
        throw Abort{kDomainFailure, std::string("error: unphysical beam: ") + e.what()};
    }

    std::string out = format_q("q_in", in.q);
    out += fmt::format("matrix {} {} {} {}\n", g(m.a11), g(m.a12), g(m.a21), g(m.a22));
    out += format_q("q_out", out_q.q);
    out += spot.radius.is_flat() ? std::string("R=inf\n") : "R=" + g(spot.radius.value()) + "\n";
    out += "w=" + g(spot.w) + "\n";
    return out;
}

struct Verdict {
    std::string out;
    bool ok;
};

Verdict cmd_interface(double n1, double n2, double theta_deg, double a, std::size_t samples, std::uint64_t seed,
                      double lambda0) {
    const double theta = theta_deg * kPi / 180.0;
    const double k0 = 2.0 * kPi / lambda0;
    const double omega = kSpeedOfLight * k0;
    InterfaceSystem sys;
    ExampleAmplitudes amp;
    FresnelCoefficients s;
    FresnelCoefficients p;
    try {
        sys = example_interface_fields(theta, n1, n2, a, omega, k0);
        amp = example_amplitudes(theta, n1, n2, a);
        s = fresnel_standard(Polarization::s, n1, n2, theta);
        p = fresnel_standard(Polarization::p, n1, n2, theta);
    } catch (const TotalInternalReflection&) {
        throw Abort{kDomainFailure, "error: total internal reflection"};
    } catch (const DomainError& e) {
        throw Abort{kDomainFailure, std::string("error: ") + e.what()};
    }

    const auto points = kernels::boundary_samples(sys, samples, seed);
    const double residual = kernels::parallel::max_boundary_residual(sys, points);
    const ValidationReport report = validate_interface_system(sys, samples, seed);

    const RVec3 k_r = reflect_wavevector(sys.incident.k, sys.spec.normal);
    const bool reflection_law = norm(k_r - sys.reflected.k) <= 1e-12 * norm(sys.incident.k);
    bool h_matches = true;
    for (const auto& e : report.entries()) {
        if (e.clause.rfind("h_matches_k_cross_e", 0) == 0) h_matches = h_matches && e.ok;
    }

    std::string out;
    out += "theta_t_deg " + g(amp.theta_t * 180.0 / kPi) + "\n";
    out += "r_a " + g(amp.r_a) + "\n";
    out += "t_a " + g(amp.t_a) + "\n";
    out += fmt::format("fresnel_s r={} t={}\n", g(s.r), g(s.t));
    out += fmt::format("fresnel_p r={} t={}\n", g(p.r), g(p.t));
    out += fmt::format("max_residual {}\n", fmt::format("{:.3e}", residual));
    out += "plane_of_incidence " + yes_no(check_plane_of_incidence(sys)) + "\n";
    out += "reflection_law " + yes_no(reflection_law) + "\n";
    out += std::string("constraint ") + (report.passed() ? "pass" : "fail") + "\n";
    out += "h_matches_k_cross_e " + yes_no(h_matches) + "\n";
    return {out, residual < 1e-9};
}

Verdict cmd_quantum(double omega, std::size_t dim, double hbar) {
    const SingleMode sm = make_single_mode(omega, hbar, dim);
    const std::vector<double> levels = spectrum(sm.h);
    const double ground = levels.front();

    std::string out = "ground_energy " + g(ground) + "\neigenvalues";
    for (std::size_t i = 0; i < std::min<std::size_t>(8, levels.size()); ++i) out += " " + g(levels[i]);
    out += "\n";
    out += fmt::format("commutator_deviation {:.3e}\n", commutator_deviation(sm));
    out += fmt::format("self_adjoint_residual q={:.3e} p={:.3e} H={:.3e}\n", self_adjoint_residual(sm.q),
                       self_adjoint_residual(sm.p), self_adjoint_residual(sm.h));
    return {out, std::abs(ground - 0.5 * hbar * omega) <= 1e-10};
}

void require(bool cond, const std::string& message) {
    if (!cond) throw Abort{kUsage, "error: " + message};
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args) {
    CLI::App app{"Paraxial, electromagnetic and single-mode quantum optics toolkit", "optics-cli"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "table";
    double y0 = 0.0, theta0 = 0.0;
    bool oracle = false;
    unsigned round_trips = 1000;
    double lambda = 0.0;
    std::optional<double> q_re, q_im, w;
    std::optional<std::string> radius;
    double n1 = 1.0, n2 = 1.0, theta_deg = 0.0, amplitude = 1.0, lambda0 = 1e-6;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    double omega = 1.0, hbar = 1.0;
    std::size_t dim = 32;

    auto* matrix = app.add_subcommand("matrix", "Composed ray-transfer matrix of a [system] file");
    matrix->add_option("file", file, "system description")->required();

    auto* trace = app.add_subcommand("trace", "Trace a paraxial ray through a [system] file");
    trace->add_option("file", file, "system description")->required();
    trace->add_option("--y0", y0, "source distance from axis")->required();
    trace->add_option("--theta0", theta0, "source inclination (rad)")->required();
    trace->add_option("--format", format, "table or csv")->check(CLI::IsMember({"table", "csv"}));

    auto* stab = app.add_subcommand("stability", "Half-trace stability of a [resonator] file");
    stab->add_option("file", file, "resonator description")->required();
    stab->add_flag("--oracle", oracle, "also iterate a ray and report its bounds");
    stab->add_option("--round-trips", round_trips, "oracle iterations")->check(CLI::PositiveNumber);
    y0 = 1e-3;
    stab->add_option("--y0", y0, "oracle source distance from axis");
    stab->add_option("--theta0", theta0, "oracle source inclination (rad)");

    auto* beam = app.add_subcommand("beam", "Propagate a Gaussian beam through a [system] file");
    beam->add_option("file", file, "system description")->required();
    beam->add_option("--lambda", lambda, "wavelength in the medium (vacuum wavelength / n)")->required();
    beam->add_option("--q-re", q_re, "Re(q)");
    beam->add_option("--q-im", q_im, "Im(q)");
    beam->add_option("--R", radius, "wavefront radius, or inf");
    beam->add_option("--w", w, "spot radius");

    auto* iface = app.add_subcommand("interface", "Plane-wave boundary conditions at a plane interface");
    iface->add_option("--n1", n1, "incident-side index")->required();
    iface->add_option("--n2", n2, "transmitted-side index")->required();
    iface->add_option("--theta", theta_deg, "incidence angle in degrees, [0, 90)")->required();
    iface->add_option("--a", amplitude, "incident amplitude");
    iface->add_option("--samples", samples, "boundary sample count")->check(CLI::PositiveNumber);
    iface->add_option("--seed", seed, "sampling seed");
    iface->add_option("--lambda0", lambda0, "vacuum wavelength (m)");

    auto* quantum = app.add_subcommand("quantum", "Truncated single-mode field");
    quantum->add_option("--omega", omega, "angular frequency")->required();
    quantum->add_option("--dim", dim, "number of Fock levels (>= 2)");
    quantum->add_option("--hbar", hbar, "reduced Planck constant");

    CommandOutcome outcome;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        outcome.out = app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help();
        return outcome;
    } catch (const CLI::ParseError& e) {
        outcome.exit_code = kUsage;
        outcome.err = std::string("error: ") + e.what() + "\nRun with --help for usage.\n";
        return outcome;
    }

    try {
        if (matrix->parsed()) {
            outcome.out = cmd_matrix(file);
        } else if (trace->parsed()) {
            require(std::isfinite(y0) && std::isfinite(theta0), "--y0 and --theta0 must be finite");
            outcome.out = cmd_trace(file, y0, theta0, format);
        } else if (stab->parsed()) {
            require(std::isfinite(y0) && std::isfinite(theta0), "--y0 and --theta0 must be finite");
            outcome.out = cmd_stability(file, oracle, round_trips, y0, theta0);
        } else if (beam->parsed()) {
            outcome.out = cmd_beam(file, lambda, q_re, q_im, radius, w);
        } else if (iface->parsed()) {
            require(theta_deg >= 0.0 && theta_deg < 90.0, "--theta must lie in [0, 90)");
            require(std::isfinite(amplitude) && amplitude > 0.0, "--a must be > 0");
            require(std::isfinite(lambda0) && lambda0 > 0.0, "--lambda0 must be > 0");
            const Verdict v = cmd_interface(n1, n2, theta_deg, amplitude, samples, seed, lambda0);
            outcome.out = v.out;
            if (!v.ok) {
                outcome.exit_code = kDomainFailure;
                outcome.err = "boundary residual exceeds 1e-9\n";
            }
        } else if (quantum->parsed()) {
            require(std::isfinite(omega) && omega > 0.0, "--omega must be > 0");
            require(std::isfinite(hbar) && hbar > 0.0, "--hbar must be > 0");
            require(dim >= 2, "--dim must be >= 2");
            const Verdict v = cmd_quantum(omega, dim, hbar);
            outcome.out = v.out;
            if (!v.ok) {
                outcome.exit_code = kDomainFailure;
                outcome.err = "ground energy differs from hbar omega / 2\n";
            }
        }
    } catch (const Abort& abort) {
        outcome.exit_code = abort.code;
        outcome.out.clear();
        outcome.err = abort.message + "\n";
    } catch (const Error& e) {
        outcome.exit_code = kDomainFailure;
        outcome.out.clear();
        outcome.err = std::string("error: ") + e.what() + "\n";
    }
    return outcome;
}

}  // namespace optics::cli
