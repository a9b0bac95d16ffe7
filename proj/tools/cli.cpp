// Copyright 2026 The sgad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include "sgad/kraus.hpp"
#include "sgad/lindblad.hpp"
#include "sgad/serialization.hpp"
#include "sgad/version.hpp"

namespace sgad::cli {

namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<double, long long, std::string>;
using Row = std::vector<Cell>;

constexpr double kPi = std::numbers::pi;
constexpr double kPsdReportTol = 1e-10;
constexpr double kOracleTol = 1e-6;
constexpr double kChiTol = 1e-10;

std::string fmt(double x) {
    if (x == 0.0) x = 0.0;  // no "-0" in output
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return fmt(*d);
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

Json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        return std::isfinite(*d) ? Json(*d) : Json(fmt(*d));
    }
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    return std::get<std::string>(c);
}

// Free-text cells must not break the CSV layout.
std::string sanitize(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

struct Table {
    std::vector<std::pair<std::string, Cell>> meta;
    std::vector<std::string> columns;
    std::vector<Row> rows;
    bool failed = false;
};

void write_csv(const Table& t, std::ostream& out) {
    for (const auto& [key, value] : t.meta) out << "# " << key << " = " << cell_text(value) << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const Row& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
        out << '\n';
    }
}

void write_json(const Table& t, std::ostream& out) {
    Json doc;
    Json meta = Json::object();
    for (const auto& [key, value] : t.meta) meta[key] = cell_json(value);
    doc["metadata"] = meta;
    doc["columns"] = t.columns;
    Json rows = Json::array();
    for (const Row& row : t.rows) {
        Json r = Json::array();
        for (const Cell& c : row) r.push_back(cell_json(c));
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

void write_table(const Table& t, Format f, std::ostream& out) {
    if (f == Format::csv) {
        write_csv(t, out);
    } else {
        write_json(t, out);
    }
}

// Runs fn(0..n-1) on up to `threads` workers and returns the results in
// index order. The first exception by index is rethrown.
template <class F>
auto parallel_map(std::size_t n, std::size_t threads, F fn) -> std::vector<decltype(fn(0))> {
    using R = decltype(fn(0));
    std::vector<std::optional<R>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

std::string describe(const BathSpec& b) {
    return "T=" + fmt(b.temperature) + " r=" + fmt(b.squeezing) + " Phi=" + fmt(b.phase) +
           " gamma0=" + fmt(b.gamma0) + " omega=" + fmt(b.omega);
}

const char* to_string(CapacityMode m) {
    switch (m) {
        case CapacityMode::curve: return "curve";
        case CapacityMode::surface: return "surface";
        case CapacityMode::profile: return "profile";
    }
    return "?";
}

Table base_table(const RunConfig& cfg) {
    Table t;
    t.meta.emplace_back("generator", std::string("sgad ") + kVersion);
    t.meta.emplace_back("command", cfg.command);
    t.meta.emplace_back("figure", static_cast<long long>(cfg.figure));
    for (std::size_t i = 0; i < cfg.curves.size(); ++i) {
        std::string d = describe(cfg.curves[i].bath);
        if (cfg.curves[i].t) d += " t=" + fmt(*cfg.curves[i].t);
        t.meta.emplace_back("curve " + std::to_string(i), d);
    }
    return t;
}

void add_time_grid_meta(Table& t, const RunConfig& cfg) {
    t.meta.emplace_back("t0", cfg.t_start);
    t.meta.emplace_back("t1", cfg.t_end);
    t.meta.emplace_back("n", static_cast<long long>(cfg.n_points));
}

Row bath_cells(std::size_t curve, const BathSpec& b) {
    return {static_cast<long long>(curve), b.temperature, b.squeezing, b.phase};
}

const std::vector<std::string> kBathColumns = {"curve", "T", "r", "Phi"};

std::vector<std::string> with_bath_columns(std::initializer_list<std::string> rest) {
    std::vector<std::string> c = kBathColumns;
    c.insert(c.end(), rest);
    return c;
}

// ---------------------------------------------------------------- params

struct ParamsPoint {
    SgadParams params;
    std::string branch;
    double residual = 0.0;
    bool ok = true;
    std::string message;
};

ParamsPoint params_point(const BathSpec& bath, double t) {
    ParamsPoint pt;
    const DerivedBath d = derive_bath(bath);
    if (d.n_eff == 0.0) {
        // N = 0: the amplitude damping channel, written in SGAD form
        pt.params.alpha = -std::expm1(-bath.gamma0 * t);
        pt.params.one_minus_alpha = std::exp(-bath.gamma0 * t);
        pt.params.theta = bath.phase;
        pt.branch = "ad";
        pt.message = "N = 0: amplitude damping";
    } else {
        try {
            pt.params = sgad_params(bath, t);
            pt.branch = to_string(pt.params.branch);
        } catch (const CertificationError& e) {
            pt.params = sgad_candidate(bath, t, SgadBranch::plus);
            pt.branch = "none";
            pt.ok = false;
            pt.message = e.what();
        }
    }
    pt.residual = sgad_residuals(pt.params, bath, t).max_abs();
    if (!(pt.residual <= kResidualTol)) pt.ok = false;
    return pt;
}

Table cmd_params(const RunConfig& cfg) {
    Table table = base_table(cfg);
    add_time_grid_meta(table, cfg);
    table.columns = with_bath_columns({"t", "p1", "p2", "alpha", "mu", "nu", "theta", "branch",
                                       "max_residual", "status", "message"});
    const std::vector<double> times = cfg.time_grid();
    const std::size_t nt = times.size();
    const auto points = parallel_map(cfg.curves.size() * nt, cfg.threads, [&](std::size_t k) {
        return params_point(cfg.curves[k / nt].bath, times[k % nt]);
    });
    for (std::size_t c = 0; c < cfg.curves.size(); ++c) {
        std::string previous;
        for (std::size_t i = 0; i < nt; ++i) {
            ParamsPoint pt = points[c * nt + i];
            if (pt.ok && !previous.empty() && pt.branch != previous) {
                pt.ok = false;
                pt.message = "root changed from " + previous + " to " + pt.branch;
            }
            if (pt.ok) previous = pt.branch;
            const SgadParams& p = pt.params;
            Row row = bath_cells(c, cfg.curves[c].bath);
            row.insert(row.end(), {times[i], p.p1, p.p2, p.alpha, p.mu, p.nu, p.theta, pt.branch,
                                   pt.residual, std::string(pt.ok ? "ok" : "FAIL"),
                                   sanitize(pt.message)});
            table.rows.push_back(std::move(row));
            table.failed |= !pt.ok;
        }
    }
    return table;
}

// ---------------------------------------------------------------- evolve

Table cmd_evolve(const RunConfig& cfg) {
    Table table = base_table(cfg);
    add_time_grid_meta(table, cfg);
    table.meta.emplace_back("theta0", cfg.theta0);
    table.meta.emplace_back("phi0", cfg.phi0);
    table.meta.emplace_back("picture", std::string(cfg.picture == Picture::interaction
                                                       ? "interaction"
                                                       : "schroedinger"));
    table.meta.emplace_back("oracle", static_cast<long long>(cfg.oracle));
    table.columns = with_bath_columns(
        {"t", "x", "y", "z", "rho00", "rho01_re", "rho01_im", "rho11"});
    if (cfg.oracle) {
        table.columns.insert(table.columns.end(), {"oracle_max_delta", "oracle_trace_drift"});
    }
    table.columns.insert(table.columns.end(), {"status", "message"});

    const std::vector<double> times = cfg.time_grid();
    const DensityMatrix rho0 = pure_state(cfg.theta0, cfg.phi0);
    auto curve_rows = [&](std::size_t c) {
        const BathSpec& bath = cfg.curves[c].bath;
        std::vector<std::pair<Row, bool>> rows;
        std::optional<LindbladGenerator> gen;
        Matrix2 oracle_state = rho0.matrix();
        double oracle_time = 0.0;
        if (cfg.oracle) gen = build_generator(bath);
        for (double t : times) {
            const DensityMatrix inter = evolve_density(rho0, bath, t, Picture::interaction);
            const DensityMatrix shown =
                cfg.picture == Picture::interaction ? inter
                                                    : evolve_density(rho0, bath, t, cfg.picture);
            const BlochVector b = density_to_bloch(inter);
            const DensityReport rep = validate_density(shown.matrix());
            bool ok = rep.finite && rep.hermiticity_defect <= kHermiticityTol &&
                      rep.trace_defect <= kTraceTol && rep.min_eigenvalue >= -kPsdReportTol;
            std::string message = ok ? "" : "output is not a valid density matrix";
            const Matrix2& m = shown.matrix();
            Row row = bath_cells(c, bath);
            row.insert(row.end(), {t, b.x, b.y, b.z, m(0, 0).real(), m(0, 1).real(),
                                   m(0, 1).imag(), m(1, 1).real()});
            if (cfg.oracle) {
                const IntegrationResult r =
                    integrate(*gen, DensityMatrix::unchecked(oracle_state), t - oracle_time,
                              cfg.oracle_dt);
                oracle_state = r.state;
                oracle_time = t;
                const double delta = max_abs_diff(oracle_state, inter.matrix());
                const double drift = std::abs(oracle_state.trace() - 1.0);
                row.insert(row.end(), {delta, drift});
                if (!(delta <= kOracleTol) || drift > kTraceDriftLimit) {
                    ok = false;
                    message = "oracle disagreement";
                }
            }
            row.insert(row.end(), {std::string(ok ? "ok" : "FAIL"), message});
            rows.emplace_back(std::move(row), ok);
        }
        return rows;
    };
    for (auto& rows : parallel_map(cfg.curves.size(), cfg.threads, curve_rows)) {
        for (auto& [row, ok] : rows) {
            table.rows.push_back(std::move(row));
            table.failed |= !ok;
        }
    }
    return table;
}

// ---------------------------------------------------------------- channel

struct ChannelReport {
    ChannelSynthesis synthesis;
    double completeness = 0.0;
    double cp = 0.0;
    std::array<double, 4> choi_eigenvalues{};
    double residual = 0.0;
    bool ok = true;
};

ChannelReport certify_channel(const BathSpec& bath, double t) {
    ChannelReport r;
    r.synthesis = synthesize_channel(bath, t);
    r.completeness = completeness_defect(r.synthesis.kraus);
    const ChoiSpectrum spec = choi_spectrum(choi_matrix(r.synthesis.kraus));
    r.choi_eigenvalues = spec.eigenvalues;
    r.cp = std::max(0.0, -spec.eigenvalues[0]);
    SgadParams p;
    if (r.synthesis.params) {
        p = *r.synthesis.params;
    } else {
        p.alpha = -std::expm1(-bath.gamma0 * t);
        p.one_minus_alpha = std::exp(-bath.gamma0 * t);
        p.theta = bath.phase;
    }
    r.residual = sgad_residuals(p, bath, t).max_abs();
    r.ok = r.completeness <= kCompletenessTol && r.cp <= kCpTol && r.residual <= kResidualTol;
    return r;
}

int cmd_channel(const RunConfig& cfg, std::ostream& out) {
    const BathSpec& bath = cfg.curves.front().bath;
    ChannelReport r;
    try {
        r = certify_channel(bath, cfg.t);
    } catch (const CertificationError& e) {
        Json doc;
        doc["generator"] = std::string("sgad ") + kVersion;
        doc["error"] = e.what();
        out << doc.dump(2) << '\n';
        return kCertificationFailure;
    }
    const KrausSet& k = r.synthesis.kraus;

    if (cfg.format == Format::json) {
        Json doc;
        doc["generator"] = std::string("sgad ") + kVersion;
        doc["channel"] = Json::parse(nlohmann::json(k).dump());
        if (r.synthesis.params) {
            doc["params"] = Json::parse(nlohmann::json(*r.synthesis.params).dump());
        } else {
            doc["params"] = nullptr;
        }
        doc["validation"] = {{"completeness_defect", r.completeness},
                             {"cp_defect", r.cp},
                             {"choi_eigenvalues", r.choi_eigenvalues},
                             {"max_assoc_residual", r.residual},
                             {"certified", r.ok}};
        if (!r.synthesis.notice.empty()) doc["notice"] = r.synthesis.notice;
        out << doc.dump(2) << '\n';
    } else {
        Table table = base_table(cfg);
        table.meta.emplace_back("t", cfg.t);
        table.meta.emplace_back("label", k.label);
        if (!r.synthesis.notice.empty()) table.meta.emplace_back("notice", r.synthesis.notice);
        table.meta.emplace_back("completeness_defect", r.completeness);
        table.meta.emplace_back("cp_defect", r.cp);
        table.meta.emplace_back("max_assoc_residual", r.residual);
        table.meta.emplace_back("certified", std::string(r.ok ? "ok" : "FAIL"));
        table.columns = {"operator", "row", "col", "re", "im"};
        for (std::size_t j = 0; j < k.operators.size(); ++j) {
            for (int row = 0; row < 2; ++row) {
                for (int col = 0; col < 2; ++col) {
                    const Complex c = k.operators[j](row, col);
                    table.rows.push_back({static_cast<long long>(j), static_cast<long long>(row),
                                          static_cast<long long>(col), c.real(), c.imag()});
                }
            }
        }
        write_csv(table, out);
    }
    return r.ok ? kOk : kCertificationFailure;
}

// ---------------------------------------------------------------- capacity

bool chi_in_range(double chi) { return chi >= -kChiTol && chi <= 1.0 + kChiTol; }

Table cmd_capacity(const RunConfig& cfg) {
    Table table = base_table(cfg);
    table.meta.emplace_back("quantity", std::string("restricted_binary_capacity"));
    table.meta.emplace_back("ensemble", std::string("binary orthogonal pure states"));
    table.meta.emplace_back("mode", std::string(to_string(cfg.capacity_mode)));
    table.meta.emplace_back("f", cfg.capacity.f);
    table.meta.emplace_back("sweep_f", static_cast<long long>(cfg.capacity.sweep_f));
    table.meta.emplace_back("n_theta", static_cast<long long>(cfg.capacity.grid.n_theta));
    table.meta.emplace_back("n_phi", static_cast<long long>(cfg.capacity.grid.n_phi));
    table.meta.emplace_back("refine_rounds", static_cast<long long>(cfg.capacity.refine_rounds));
    table.meta.emplace_back("shrink", cfg.capacity.shrink);

    CapacityConfig inner = cfg.capacity;
    inner.threads = 1;  // parallelism lives at the sweep level

    switch (cfg.capacity_mode) {
        case CapacityMode::curve: {
            add_time_grid_meta(table, cfg);
            table.columns = with_bath_columns(
                {"t", "C", "theta0", "phi0", "f", "completeness_defect", "status"});
            const std::vector<double> times = cfg.time_grid();
            const std::size_t nt = times.size();
            const auto rows = parallel_map(cfg.curves.size() * nt, cfg.threads, [&](std::size_t k) {
                const std::size_t c = k / nt;
                const BathSpec& bath = cfg.curves[c].bath;
                const ChannelSynthesis ch = synthesize_channel(bath, times[k % nt]);
                const CapacityResult res = classical_capacity(ch.kraus, inner);
                const double defect = completeness_defect(ch.kraus);
                const bool ok = chi_in_range(res.c) && defect <= kCompletenessTol;
                Row row = bath_cells(c, bath);
                row.insert(row.end(), {times[k % nt], res.c, res.theta0, res.phi0, res.f, defect,
                                       std::string(ok ? "ok" : "FAIL")});
                return std::make_pair(row, ok);
            });
            for (const auto& [row, ok] : rows) {
                table.rows.push_back(row);
                table.failed |= !ok;
            }
            break;
        }
        case CapacityMode::surface: {
            table.meta.emplace_back("t", cfg.t);
            table.columns = with_bath_columns({"t", "theta0", "phi0", "chi", "status"});
            for (std::size_t c = 0; c < cfg.curves.size(); ++c) {
                const BathSpec& bath = cfg.curves[c].bath;
                const double t = cfg.curves[c].t.value_or(cfg.t);
                const ChannelSynthesis ch = synthesize_channel(bath, t);
                CapacityConfig with_surface = cfg.capacity;
                with_surface.keep_surface = true;
                const CapacityResult res = classical_capacity(ch.kraus, with_surface);
                const std::string tag = "curve " + std::to_string(c) + " ";
                table.meta.emplace_back(tag + "C", res.c);
                table.meta.emplace_back(tag + "argmax theta0", res.theta0);
                table.meta.emplace_back(tag + "argmax phi0", res.phi0);
                table.meta.emplace_back(tag + "argmax f", res.f);
                const ChiSurface& s = *res.surface;
                for (std::size_t i = 0; i < s.theta.size(); ++i) {
                    for (std::size_t j = 0; j < s.phi.size(); ++j) {
                        const double chi = s.at(i, j);
                        const bool ok = chi_in_range(chi);
                        Row row = bath_cells(c, bath);
                        row.insert(row.end(), {t, s.theta[i], s.phi[j], chi,
                                               std::string(ok ? "ok" : "FAIL")});
                        table.rows.push_back(std::move(row));
                        table.failed |= !ok;
                    }
                }
            }
            break;
        }
        case CapacityMode::profile: {
            table.meta.emplace_back("phi0", cfg.phi0);
            table.columns = with_bath_columns({"t", "theta0", "phi0", "chi", "status"});
            const std::size_t n = cfg.capacity.grid.n_theta;
            for (std::size_t c = 0; c < cfg.curves.size(); ++c) {
                const BathSpec& bath = cfg.curves[c].bath;
                const double t = cfg.curves[c].t.value_or(cfg.t);
                const ChannelSynthesis ch = synthesize_channel(bath, t);
                for (std::size_t i = 0; i < n; ++i) {
                    const double theta = kPi * static_cast<double>(i) / static_cast<double>(n - 1);
                    const double chi = holevo_chi(
                        binary_orthogonal_ensemble(theta, cfg.phi0, cfg.capacity.f), ch.kraus);
                    const bool ok = chi_in_range(chi);
                    Row row = bath_cells(c, bath);
                    row.insert(row.end(), {t, theta, cfg.phi0, chi, std::string(ok ? "ok" : "FAIL")});
                    table.rows.push_back(std::move(row));
                    table.failed |= !ok;
                }
            }
            break;
        }
    }
    return table;
}

// ---------------------------------------------------------------- presets

BathSpec bath(double T, double r) {
    BathSpec b;
    b.temperature = T;
    b.squeezing = r;
    return b;
}

void apply_figure(RunConfig& cfg, int figure) {
    const char* expected = nullptr;
    switch (figure) {
        case 1:
            expected = "params";
            cfg.curves = {{bath(1, 0), {}}, {bath(1, 1), {}}, {bath(3, 1), {}}};
            break;
        case 2:
            expected = "params";
            cfg.curves = {{bath(0, 0), {}}, {bath(0, 1), {}}, {bath(5, 0), {}}, {bath(5, 1), {}}};
            break;
        case 3:
            expected = "params";
            cfg.curves = {{bath(20, 1), {}}, {bath(5, 1), {}}, {bath(1, 1), {}}};
            break;
        case 4:
            expected = "params";
            cfg.curves = {{bath(0, 0.05), {}}, {bath(2, 0.1), {}}, {bath(2, 0.5), {}}};
            break;
        case 5:
            expected = "capacity";
            cfg.capacity_mode = CapacityMode::surface;
            cfg.curves = {{bath(5, 1), {}}};
            cfg.t = 5.0;
            break;
        case 6:
            expected = "capacity";
            cfg.capacity_mode = CapacityMode::curve;
            cfg.curves = {{bath(0, 0), {}}, {bath(5, 0), {}}, {bath(5, 2), {}}};
            cfg.t_start = 0.5;
            cfg.t_end = 10.0;
            cfg.n_points = 20;
            break;
        case 7:
            expected = "capacity";
            cfg.capacity_mode = CapacityMode::profile;
            cfg.curves = {{bath(0, 0), 1.0}, {bath(0, 0), 2.0}, {bath(5, 0), 2.0}, {bath(5, 2), 2.0}};
            break;
        default:
            throw ConfigError("unknown figure " + std::to_string(figure) + " (expected 1-7)");
    }
    if (cfg.command != expected) {
        throw ConfigError("figure " + std::to_string(figure) + " belongs to the '" + expected +
                          "' command");
    }
    cfg.figure = figure;
}

struct Flags {
    double T = 0, r = 0, Phi = 0, gamma0 = 0.05, omega = 1.0;
    double t0 = 0, t1 = 100, t = 1, theta0 = 0, phi0 = 0, f = 0.5, shrink = 10, oracle_dt = 1e-3;
    std::size_t n = 101, n_theta = 61, n_phi = 121, rounds = 3, f_points = 21;
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    int figure = 0;
    bool oracle = false, sweep_f = false;
    std::string format, out, picture = "interaction", mode = "curve";
};

void add_common(CLI::App* app, Flags& fl) {
    app->add_option("--figure", fl.figure, "figure preset");
    app->add_option("--T", fl.T, "bath temperature (hbar = k_B = 1)");
    app->add_option("--r", fl.r, "squeezing magnitude");
    app->add_option("--Phi", fl.Phi, "squeezing phase, radians");
    app->add_option("--gamma0", fl.gamma0, "spontaneous emission rate");
    app->add_option("--omega", fl.omega, "system transition frequency");
    app->add_option("--t0", fl.t0, "first time of the grid");
    app->add_option("--t1", fl.t1, "last time of the grid");
    app->add_option("--n", fl.n, "number of grid times");
    app->add_option("--t", fl.t, "single evaluation time");
    app->add_option("--format", fl.format, "csv or json (channel defaults to json)")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--out", fl.out, "output file (default stdout)");
    app->add_option("--threads", fl.threads, "worker threads");
}

}  // namespace

void RunConfig::validate() const {
    if (curves.empty()) throw ConfigError("no bath configuration");
    for (const Curve& c : curves) {
        try {
            c.bath.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        if (c.t && !(*c.t >= 0.0)) throw ConfigError("curve time must be >= 0");
    }
    if (!(t_start >= 0.0)) throw ConfigError("--t0 must be >= 0");
    if (!(t_end > t_start)) throw ConfigError("--t1 must exceed --t0");
    if (n_points < 2) throw ConfigError("--n must be >= 2");
    if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("--t must be >= 0");
    if (!std::isfinite(theta0) || !std::isfinite(phi0)) throw ConfigError("angles must be finite");
    if (oracle_dt && !(*oracle_dt > 0.0)) throw ConfigError("--dt must be > 0");
    if (threads < 1) throw ConfigError("--threads must be >= 1");
    try {
        capacity.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

std::vector<double> RunConfig::time_grid() const {
    std::vector<double> out(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        out[i] = t_start + (t_end - t_start) * static_cast<double>(i) /
                               static_cast<double>(n_points - 1);
    }
    out.back() = t_end;
    return out;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Squeezed generalized amplitude damping channel toolkit", "sgad"};
    app.set_version_flag("--version", std::string("sgad ") + kVersion);
    app.require_subcommand(1, 1);
    Flags fl;

    auto* params = app.add_subcommand("params", "SGAD channel parameters along a time grid");
    auto* evolve = app.add_subcommand("evolve", "closed-form state evolution along a time grid");
    auto* channel = app.add_subcommand("channel", "Kraus operators at a single time, certified");
    auto* capacity = app.add_subcommand("capacity", "Holevo surface or capacity curves");
    for (auto* sub : {params, evolve, channel, capacity}) add_common(sub, fl);

    evolve->add_option("--theta0", fl.theta0, "initial polar angle");
    evolve->add_option("--phi0", fl.phi0, "initial azimuth");
    evolve->add_flag("--oracle", fl.oracle, "compare against RK4 integration");
    evolve->add_option("--dt", fl.oracle_dt, "RK4 step (default: automatic)");
    evolve->add_option("--picture", fl.picture, "interaction or schroedinger")
        ->check(CLI::IsMember({"interaction", "schroedinger"}));

    capacity->add_option("--f", fl.f, "weight of the first input state");
    capacity->add_flag("--sweep-f", fl.sweep_f, "maximize over f as well");
    capacity->add_option("--f-points", fl.f_points, "f grid size for --sweep-f");
    capacity->add_option("--phi0", fl.phi0, "azimuth for the profile mode");
    capacity->add_option("--mode", fl.mode, "curve, surface or profile")
        ->check(CLI::IsMember({"curve", "surface", "profile"}));
    capacity->add_option("--n-theta", fl.n_theta, "coarse grid nodes in theta0");
    capacity->add_option("--n-phi", fl.n_phi, "coarse grid nodes in phi0");
    capacity->add_option("--refine-rounds", fl.rounds, "coordinate refinement rounds");
    capacity->add_option("--shrink", fl.shrink, "interval shrink per round");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::CallForVersion&) {
        out << "sgad " << kVersion << '\n';
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    CLI::App* sub = app.get_subcommands().front();
    auto given = [&](const char* name) { return sub->count(name) > 0; };

    RunConfig cfg;
    cfg.command = sub->get_name();
    cfg.curves = {Curve{}};
    if (given("--figure")) apply_figure(cfg, fl.figure);

    for (Curve& c : cfg.curves) {
        if (given("--T")) c.bath.temperature = fl.T;
        if (given("--r")) c.bath.squeezing = fl.r;
        if (given("--Phi")) c.bath.phase = fl.Phi;
        if (given("--gamma0")) c.bath.gamma0 = fl.gamma0;
        if (given("--omega")) c.bath.omega = fl.omega;
        if (given("--t")) c.t.reset();
    }
    if (given("--t0")) cfg.t_start = fl.t0;
    if (given("--t1")) cfg.t_end = fl.t1;
    if (given("--n")) cfg.n_points = fl.n;
    if (given("--t")) cfg.t = fl.t;
    const std::string format = fl.format.empty() ? (cfg.command == "channel" ? "json" : "csv")
                                                 : fl.format;
    cfg.format = format == "json" ? Format::json : Format::csv;
    cfg.out = fl.out;
    cfg.threads = fl.threads;

    if (cfg.command == "evolve") {
        cfg.theta0 = fl.theta0;
        cfg.phi0 = fl.phi0;
        cfg.oracle = fl.oracle;
        if (given("--dt")) cfg.oracle_dt = fl.oracle_dt;
        cfg.picture = fl.picture == "schroedinger" ? Picture::schroedinger : Picture::interaction;
    }
    if (cfg.command == "capacity") {
        cfg.phi0 = fl.phi0;
        if (given("--mode") || cfg.figure == 0) {
            cfg.capacity_mode = fl.mode == "surface"   ? CapacityMode::surface
                                : fl.mode == "profile" ? CapacityMode::profile
                                                       : CapacityMode::curve;
        }
        cfg.capacity.f = fl.f;
        cfg.capacity.sweep_f = fl.sweep_f;
        cfg.capacity.f_points = fl.f_points;
        cfg.capacity.grid = {fl.n_theta, fl.n_phi};
        cfg.capacity.refine_rounds = fl.rounds;
        cfg.capacity.shrink = fl.shrink;
    }
    cfg.validate();
    return cfg;
}

int execute(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "channel") return cmd_channel(cfg, out);
    Table table;
    if (cfg.command == "params") {
        table = cmd_params(cfg);
    } else if (cfg.command == "evolve") {
        table = cmd_evolve(cfg);
    } else if (cfg.command == "capacity") {
        table = cmd_capacity(cfg);
    } else {
        throw ConfigError("unknown command '" + cfg.command + "'");
    }
    write_table(table, cfg.format, out);
    return table.failed ? kCertificationFailure : kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        const std::optional<RunConfig> cfg = parse_args(argc, argv, out);
        if (!cfg) return kOk;
        if (cfg->out.empty()) return execute(*cfg, out);
        std::ofstream file(cfg->out, std::ios::binary);
        if (!file) throw ConfigError("cannot open output file " + cfg->out);
        const int code = execute(*cfg, file);
        file.close();
        if (!file) throw ConfigError("failed writing " + cfg->out);
        return code;
    } catch (const ConfigError& e) {
        err << "sgad: " << e.what() << '\n';
        return kConfigError;
    } catch (const CertificationError& e) {
        err << "sgad: certification failed: " << e.what() << '\n';
        return kCertificationFailure;
    } catch (const std::invalid_argument& e) {
        err << "sgad: " << e.what() << '\n';
        return kConfigError;
    }
}

}  // namespace sgad::cli
