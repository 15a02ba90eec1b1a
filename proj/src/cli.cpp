// Copyright 2026 The bgcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bgcs/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include "bgcs/error.hpp"
#include "bgcs/presets.hpp"
#include "bgcs/spnr.hpp"
#include "bgcs/stats.hpp"
#include "bgcs/unity.hpp"
#include "bgcs/verify.hpp"

namespace bgcs {

namespace {

using Cell = std::variant<std::monostate, double, std::string>;
using Row = std::vector<Cell>;

struct Column {
    std::string name;
    std::string unit;
};

struct Table {
    std::vector<Column> columns;
    std::vector<Row> rows;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    std::vector<std::string> notes;  // CSV side channel, written to stderr as '#' lines
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15e", v);
    return buf;
}

void write_csv(const Table &t, std::ostream &os) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        os << (c ? "," : "") << t.columns[c].name << '[' << t.columns[c].unit << ']';
    }
    os << '\n';
    for (const auto &row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            if (auto d = std::get_if<double>(&row[c])) {
                os << format_double(*d);
            } else if (auto s = std::get_if<std::string>(&row[c])) {
                os << *s;
            }
        }
        os << '\n';
    }
}

void write_json(const Table &t, std::ostream &os) {
    nlohmann::ordered_json doc;
    doc["meta"] = t.meta;
    nlohmann::ordered_json units = nlohmann::ordered_json::object();
    for (const auto &c : t.columns) units[c.name] = c.unit;
    doc["meta"]["units"] = units;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto &row : t.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string &key = t.columns[c].name;
            if (auto d = std::get_if<double>(&row[c])) {
                r[key] = *d;
            } else if (auto s = std::get_if<std::string>(&row[c])) {
                r[key] = *s;
            } else {
                r[key] = nullptr;
            }
        }
        doc["rows"].push_back(r);
    }
    os << doc.dump(2) << '\n';
}

struct Options {
    int modes = 0;
    int nmax = 0;
    std::string alpha;
    double phi = 0.0;
    double psi = 0.0;
    double varphi = 0.0;
    std::string angles;
    std::string scan;
    std::string preset;
    std::string format = "csv";
    double tol = 1e-6;
    std::uint64_t seed = 42;
    std::string out;
    double r_tilde = 0.5;
    double r_mode = -1.0;
    double theta = 0.0;
    std::string family = "cat_phi_psi";
    std::string which = "pq";
    int photon_n = -1;
    std::string suite = "all";
};

struct ScanSpec {
    std::string variable;
    double start;
    double stop;
    int steps;

    double at(int k) const { return start + (stop - start) * k / (steps - 1); }
};

ScanSpec parse_scan(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4) {
        throw Error(Errc::invalid_argument, "--scan expects var:start:stop:steps");
    }
    static const std::vector<std::string> vars{"phi", "psi", "varphi", "r_tilde", "theta"};
    if (std::find(vars.begin(), vars.end(), parts[0]) == vars.end()) {
        throw Error(Errc::invalid_argument, "--scan variable must be one of phi, psi, varphi, r_tilde, theta");
    }
    ScanSpec s;
    s.variable = parts[0];
    try {
        s.start = std::stod(parts[1]);
        s.stop = std::stod(parts[2]);
        s.steps = std::stoi(parts[3]);
    } catch (const std::exception &) {
        throw Error(Errc::invalid_argument, "--scan has a malformed number");
    }
    if (s.steps < 2) throw Error(Errc::invalid_argument, "--scan needs steps >= 2");
    if (!(s.start < s.stop)) throw Error(Errc::invalid_argument, "--scan needs start < stop");
    return s;
}

std::vector<double> parse_list(const std::string &text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stod(item));
        } catch (const std::exception &) {
            throw Error(Errc::invalid_argument, "malformed number '" + item + "'");
        }
    }
    return v;
}

CVec parse_alpha(const std::string &text) {
    CVec a;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        std::vector<double> re_im = parse_list(item);
        if (re_im.size() != 2) throw Error(Errc::invalid_argument, "--alpha expects re,im;re,im;...");
        a.emplace_back(re_im[0], re_im[1]);
    }
    if (a.empty()) throw Error(Errc::invalid_argument, "--alpha is empty");
    return a;
}

/// One parameter point of a cat-state family.
struct Point {
    std::string family;
    double r_tilde;
    double r_i;  // < 0: equal to r_tilde
    double theta;
    double phi;
    double psi;
    double varphi;
    int modes;   // 0: as few as the split needs
    CVec alpha;  // explicit amplitudes override (r_tilde, r_i, theta)
    std::vector<double> angles;

    void set(const std::string &var, double v) {
        if (var == "phi") phi = v;
        else if (var == "psi") psi = v;
        else if (var == "varphi") varphi = v;
        else if (var == "r_tilde") r_tilde = v;
        else theta = v;
    }

    double mode_amplitude() const { return r_i < 0.0 ? r_tilde : r_i; }

    /// Mode 0 carries r_i e^{i theta}; the rest of r_tilde is spread evenly over the other modes.
    CVec amplitudes() const {
        if (!alpha.empty()) return alpha;
        double ri = mode_amplitude();
        if (r_tilde < 0.0 || ri > r_tilde * (1.0 + 1e-14)) {
            throw Error(Errc::invalid_argument, "need 0 <= r_i <= r_tilde");
        }
        double rest2 = std::max(0.0, r_tilde * r_tilde - ri * ri);
        int n = modes > 0 ? modes : (rest2 > 0.0 ? 2 : 1);
        if (n == 1 && rest2 > 1e-28) throw Error(Errc::invalid_argument, "r_i < r_tilde needs two or more modes");
        CVec a(n, 0.0);
        a[0] = std::polar(ri, theta);
        for (int m = 1; m < n; ++m) a[m] = std::sqrt(rest2 / (n - 1));
        return a;
    }
};

Family family_of(const std::string &name) {
    return family_from_string(name);
}

Moments point_moments(const Point &pt, const CVec &a) {
    switch (family_of(pt.family)) {
        case Family::canonical: return coherent_moments(a, 0);
        case Family::phi_family: return phi_family_moments(a, pt.varphi, 0);
        case Family::cat_phi: return cat_phi_moments(a, pt.phi, 0);
        case Family::cat_phi_psi: return moments_closed_form(CatParams{a, {}, pt.phi, pt.psi}, 0);
        default: break;
    }
    throw Error(Errc::unknown_family, "no closed-form moments for family '" + pt.family + "'");
}

Distribution point_distribution(const Point &pt, int n_max) {
    const double rt = pt.alpha.empty() ? pt.r_tilde : amplitude(pt.alpha);
    switch (family_of(pt.family)) {
        case Family::canonical:
        case Family::phi_family:
            return poisson_distribution(rt * rt, n_max > 0 ? n_max : adaptive_cutoff(rt));
        case Family::cat_phi: return photon_distribution_cat_phi(rt, pt.phi, n_max > 0 ? n_max : -1);
        case Family::cat_phi_psi: return photon_distribution_cat_phi_psi(rt, pt.phi, pt.psi, n_max > 0 ? n_max : -1);
        case Family::n_angle: {
            int top = n_max > 0 ? n_max : adaptive_cutoff(rt);
            Distribution pois = poisson_distribution(rt * rt, top + 60);
            double norm = 0.0;
            std::vector<double> p(pois.p.size());
            for (std::size_t n = 0; n < p.size(); ++n) {
                p[n] = pois.p[n] * std::norm(multi_angle_factor(pt.angles, int(n)));
                norm += p[n];
            }
            Distribution d;
            d.p.assign(p.begin(), p.begin() + top + 1);
            double kept = 0.0;
            for (double &v : d.p) kept += (v /= norm);
            d.tail_mass = std::max(0.0, 1.0 - kept);
            return d;
        }
        default: break;
    }
    throw Error(Errc::unknown_family, "no photon distribution for family '" + pt.family + "'");
}

std::string status_of(const Error &e) {
    return to_string(e.code());
}

/// Adds the bound parameters as meta entries.
void describe(Table &t, const std::string &command, const Options &opt, const Point &pt) {
    t.meta["command"] = command;
    if (!opt.preset.empty()) t.meta["preset"] = opt.preset;
    nlohmann::ordered_json b;
    b["family"] = pt.family;
    b["r_tilde"] = pt.r_tilde;
    b["r_i"] = pt.mode_amplitude();
    b["theta"] = pt.theta;
    b["phi"] = pt.phi;
    b["psi"] = pt.psi;
    b["varphi"] = pt.varphi;
    t.meta["bindings"] = b;
}

Table scan_variance(const Options &opt, const Point &base, const std::optional<ScanSpec> &scan,
                    const std::string &curve) {
    const bool xy = opt.which == "XY";
    Table t;
    describe(t, "scan-variance", opt, base);
    t.meta["which"] = opt.which;
    if (!curve.empty()) t.meta["curve"] = curve;
    // The scanned variable leads; its binding column is not repeated.
    const std::string scanned = scan ? scan->variable : "";
    if (scan) t.columns.push_back({scanned, scanned == "r_tilde" ? "1" : "rad"});
    const std::vector<Column> bindings{{"r_tilde", "1"}, {"r_i", "1"}, {"theta", "rad"},
                                       {"phi", "rad"},   {"psi", "rad"}, {"varphi", "rad"}};
    for (const Column &c : bindings) {
        if (c.name != scanned) t.columns.push_back(c);
    }
    if (xy) {
        for (const char *c : {"d2X", "d2Y", "two_d2p"}) t.columns.push_back({c, "1"});
        t.columns.push_back({"joint", "bool"});
    } else {
        for (const char *c : {"d2p", "d2q"}) t.columns.push_back({c, "1"});
    }
    t.columns.push_back({"status", "text"});

    const int n = scan ? scan->steps : 1;
    t.rows.resize(n);
    std::vector<char> joint(n, 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (int k = 0; k < n; ++k) {
        Point pt = base;
        Row row;
        if (scan) {
            double v = scan->at(k);
            pt.set(scan->variable, v);
            row.push_back(v);
        }
        const double values[] = {pt.r_tilde, pt.mode_amplitude(), pt.theta, pt.phi, pt.psi, pt.varphi};
        for (std::size_t c = 0; c < bindings.size(); ++c) {
            if (bindings[c].name != scanned) row.push_back(values[c]);
        }
        try {
            Moments m = point_moments(pt, pt.amplitudes());
            PqVariance pq = variance_pq(m);
            if (xy) {
                XyVariance v = variance_XY(m);
                joint[k] = v.x < 1.0 && 2.0 * pq.p < 1.0;
                row.insert(row.end(), {v.x, v.y, 2.0 * pq.p, std::string(joint[k] ? "1" : "0")});
            } else {
                row.insert(row.end(), {pq.p, pq.q});
            }
            row.push_back(std::string("ok"));
        } catch (const Error &e) {
            row.resize(t.columns.size() - 1);
            row.push_back(status_of(e));
        }
        t.rows[k] = std::move(row);
    }
    if (xy && scan) {
        nlohmann::ordered_json windows = nlohmann::ordered_json::array();
        for (int k = 0; k < n;) {
            if (!joint[k]) {
                ++k;
                continue;
            }
            int j = k;
            while (j + 1 < n && joint[j + 1]) ++j;
            windows.push_back({scan->at(k), scan->at(j)});
            t.notes.push_back("joint_window " + scan->variable + " " + format_double(scan->at(k)) + " " +
                              format_double(scan->at(j)));
            k = j + 1;
        }
        t.meta["joint_windows"] = windows;
    }
    return t;
}

/// Minimum variances over theta in [0, pi) with the other bindings fixed.
std::array<double, 4> theta_minima(const Point &base) {
    std::array<double, 4> lo{1e300, 1e300, 1e300, 1e300};
    const int steps = 1440;
    for (int k = 0; k < steps; ++k) {
        Point pt = base;
        pt.theta = kPi * k / steps;
        if (!pt.alpha.empty()) {
            pt.alpha[0] = std::polar(std::abs(pt.alpha[0]), pt.theta);
        }
        Moments m = point_moments(pt, pt.amplitudes());
        PqVariance pq = variance_pq(m);
        XyVariance xy = variance_XY(m);
        lo = {std::min(lo[0], pq.p), std::min(lo[1], pq.q), std::min(lo[2], xy.x), std::min(lo[3], xy.y)};
    }
    return lo;
}

Table photon_dist(const Options &opt, Point base, const std::optional<ScanSpec> &scan, int photon_n,
                  bool poisson_match) {
    Table t;
    if (poisson_match) {
        // Poisson reference carrying the mean photon number of the bound cat state.
        Point cat = base;
        cat.family = "cat_phi_psi";
        double mean = photon_distribution_cat_phi_psi(cat.r_tilde, cat.phi, cat.psi).mean();
        base.family = "canonical";
        base.r_tilde = std::sqrt(mean);
        t.meta["poisson_mean"] = mean;
    }
    describe(t, "photon-dist", opt, base);
    if (scan) {
        if (photon_n < 0) throw Error(Errc::invalid_argument, "a photon-dist scan needs --photon-n");
        t.meta["photon_n"] = photon_n;
        const std::string &scanned = scan->variable;
        t.columns = {{scanned, scanned == "r_tilde" ? "1" : "rad"}};
        const std::vector<Column> bindings{{"r_tilde", "1"}, {"phi", "rad"}, {"psi", "rad"}};
        for (const Column &c : bindings) {
            if (c.name != scanned) t.columns.push_back(c);
        }
        for (const Column &c : std::vector<Column>{{"n", "1"}, {"p_n", "1"}, {"status", "text"}}) {
            t.columns.push_back(c);
        }
        t.rows.resize(scan->steps);
#pragma omp parallel for schedule(dynamic, 8)
        for (int k = 0; k < scan->steps; ++k) {
            Point pt = base;
            double v = scan->at(k);
            pt.set(scan->variable, v);
            Row row{v};
            const double values[] = {pt.r_tilde, pt.phi, pt.psi};
            for (std::size_t c = 0; c < bindings.size(); ++c) {
                if (bindings[c].name != scanned) row.push_back(values[c]);
            }
            row.push_back(double(photon_n));
            try {
                Distribution d = point_distribution(pt, std::max(opt.nmax, photon_n + 1));
                row.push_back(photon_n < int(d.p.size()) ? d.p[photon_n] : 0.0);
                row.push_back(std::string("ok"));
            } catch (const Error &e) {
                row.push_back(std::monostate{});
                row.push_back(status_of(e));
            }
            t.rows[k] = std::move(row);
        }
        return t;
    }

    Distribution d = point_distribution(base, opt.nmax);
    const double mean = d.mean();
    Distribution pois = poisson_distribution(mean, int(d.p.size()) - 1);
    std::vector<double> l = l_n_sequence(d);
    Cell q = std::monostate{};
    Cell q_flag = std::monostate{};
    std::string status = d.tail_mass > opt.tol ? "truncation" : "ok";
    try {
        double qv = mandel_q(d);
        q = qv;
        q_flag = std::string(std::abs(qv) < 1e-3 ? "1" : "0");
    } catch (const Error &e) {
        status = status_of(e);
    }
    std::array<double, 4> mins{};
    bool have_mins = true;
    try {
        mins = theta_minima(base);
    } catch (const Error &) {
        have_mins = false;
    }
    Family fam = family_of(base.family);
    CatParams cp{base.alpha.empty() ? CVec{base.r_tilde} : base.alpha, base.angles,
                 fam == Family::phi_family ? base.varphi : base.phi, base.psi};
    std::string cls = to_string(classify(fam, cp));
    const bool osc = is_oscillating(d);

    t.meta["mean_n"] = mean;
    t.meta["tail_mass"] = d.tail_mass;
    t.meta["oscillating"] = osc;
    t.meta["class"] = cls;
    t.columns = {{"n", "1"},          {"p_n", "1"},         {"poisson_n", "1"},  {"l_n", "1"},
                 {"r_tilde", "1"},    {"phi", "rad"},       {"psi", "rad"},      {"mean_n", "1"},
                 {"Q", "1"},          {"q_near_zero", "bool"}, {"oscillating", "bool"}, {"min_d2p", "1"},
                 {"min_d2q", "1"},    {"min_d2X", "1"},     {"min_d2Y", "1"},    {"tail_mass", "1"},
                 {"class", "text"},   {"status", "text"}};
    for (std::size_t n = 0; n < d.p.size(); ++n) {
        Row row{double(n), d.p[n], pois.p[n]};
        if (n >= 1 && n - 1 < l.size()) row.push_back(l[n - 1]);
        else row.push_back(std::monostate{});
        row.insert(row.end(), {base.alpha.empty() ? base.r_tilde : amplitude(base.alpha), base.phi, base.psi, mean});
        row.push_back(q);
        row.push_back(q_flag);
        row.push_back(std::string(osc ? "1" : "0"));
        for (double v : mins) row.push_back(have_mins ? Cell(v) : Cell(std::monostate{}));
        row.push_back(d.tail_mass);
        row.push_back(cls);
        row.push_back(status);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table verify(const Options &opt, bool *all_pass) {
    VerifyOptions vo;
    vo.tol = opt.tol;
    vo.seed = opt.seed;
    vo.n_max = opt.nmax;
    std::vector<Check> checks = run_suite(opt.suite, vo);
    if (!opt.angles.empty() && (opt.suite == "theorem-a2" || opt.suite == "all")) {
        std::vector<double> ang = parse_list(opt.angles);
        UnityOptions uo;
        uo.tol = opt.tol;
        std::string name = "n=" + std::to_string(ang.size()) + " angles=(" + opt.angles + ")";
        try {
            UnityReport r = theorem_a2_check(int(ang.size()), ang, opt.seed, 1, uo);
            checks.push_back({"theorem-a2", name, r.defect, opt.tol, r.defect < opt.tol});
        } catch (const Error &e) {
            checks.push_back({"theorem-a2", name + " [" + status_of(e) + "]", NAN, opt.tol, false});
        }
    }
    Table t;
    t.meta["command"] = "verify";
    t.meta["suite"] = opt.suite;
    t.meta["seed"] = opt.seed;
    t.columns = {{"suite", "text"}, {"check", "text"}, {"value", "1"}, {"threshold", "1"}, {"pass", "bool"}};
    *all_pass = true;
    int failed = 0;
    for (const auto &c : checks) {
        Cell v = std::isfinite(c.value) ? Cell(c.value) : Cell(std::monostate{});
        t.rows.push_back({c.suite, c.name, v, c.threshold, std::string(c.pass ? "1" : "0")});
        if (!c.pass) {
            *all_pass = false;
            ++failed;
        }
    }
    t.meta["checks"] = checks.size();
    t.meta["failed"] = failed;
    return t;
}

void add_state_options(CLI::App *sub, Options &o) {
    sub->add_option("--preset", o.preset, "named figure binding (fig1-f1 ... fig5-pn4)");
    sub->add_option("--family", o.family, "canonical | phi | cat_phi | cat_phi_psi | n_angle");
    sub->add_option("--modes", o.modes, "number of modes (0: as needed)")->check(CLI::NonNegativeNumber);
    sub->add_option("--alpha", o.alpha, "amplitudes re,im;re,im;...");
    sub->add_option("--r-tilde", o.r_tilde, "total amplitude |alpha|");
    sub->add_option("--r-mode", o.r_mode, "amplitude r_i of the analysed mode (default r_tilde)");
    sub->add_option("--theta", o.theta, "phase of the analysed mode [rad]");
    sub->add_option("--phi", o.phi, "cat phase phi [rad]");
    sub->add_option("--psi", o.psi, "cat phase psi [rad]");
    sub->add_option("--varphi", o.varphi, "phi-family mixing angle [rad]");
    sub->add_option("--angles", o.angles, "n-angle family angles a,b,c [rad]");
    sub->add_option("--scan", o.scan, "var:start:stop:steps with var in phi, psi, varphi, r_tilde, theta");
}

void add_output_options(CLI::App *sub, Options &o) {
    sub->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--nmax", o.nmax, "Fock cutoff (0: adaptive)")->check(CLI::NonNegativeNumber);
    sub->add_option("--tol", o.tol, "tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "random seed");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Barut-Girardello coherent states: figure data and verification suites"};
    app.name(args.empty() ? "bgcs" : args[0]);
    app.require_subcommand(1);
    auto *sv = app.add_subcommand("scan-variance", "quadrature variances along a parameter scan");
    auto *pd = app.add_subcommand("photon-dist", "photon number distributions and their diagnostics");
    auto *vf = app.add_subcommand("verify", "run verification suites");
    for (auto *sub : {sv, pd}) {
        add_state_options(sub, o);
        add_output_options(sub, o);
    }
    sv->add_option("--which", o.which, "pq | XY")->check(CLI::IsMember({"pq", "XY"}));
    pd->add_option("--photon-n", o.photon_n, "photon number followed by a scan")->check(CLI::NonNegativeNumber);
    add_output_options(vf, o);
    vf->add_option("--suite", o.suite, "special | eigen | unity | theorem-a2 | measures | robertson | all")
        ->check(CLI::IsMember(suite_names()));
    vf->add_option("--angles", o.angles, "extra theorem-a2 check with these angles [rad]");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, cli_out, cli_err);
        out << cli_out.str();
        err << cli_err.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    Table table;
    int status = kExitOk;
    try {
        if (vf->parsed()) {
            bool pass = false;
            table = verify(o, &pass);
            status = pass ? kExitOk : kExitVerifyFailed;
        } else {
            CLI::App *sub = sv->parsed() ? sv : pd;
            Point pt{o.family, o.r_tilde, o.r_mode, o.theta, o.phi, o.psi, o.varphi, o.modes, {}, {}};
            std::string scan_text = o.scan;
            std::string curve;
            int photon_n = o.photon_n;
            bool poisson_match = false;
            if (!o.preset.empty()) {
                const Preset *p = find_preset(o.preset);
                if (!p) throw Error(Errc::invalid_argument, "unknown preset '" + o.preset + "'");
                if (p->command != sub->get_name()) {
                    throw Error(Errc::invalid_argument, "preset " + p->name + " belongs to " + p->command);
                }
                auto keep = [&](const char *flag) { return sub->count(flag) > 0; };
                if (!keep("--family")) pt.family = p->family;
                if (!keep("--r-tilde")) pt.r_tilde = p->r_tilde;
                if (!keep("--r-mode")) pt.r_i = p->r_i;
                if (!keep("--theta")) pt.theta = p->theta;
                if (!keep("--phi")) pt.phi = p->phi;
                if (!keep("--psi")) pt.psi = p->psi;
                if (!keep("--varphi")) pt.varphi = p->varphi;
                if (!keep("--scan")) scan_text = p->scan;
                if (sub == sv && !keep("--which")) o.which = p->which;
                if (sub == pd && !keep("--photon-n")) photon_n = p->photon_n;
                curve = p->curve;
                poisson_match = p->poisson_match;
            }
            family_of(pt.family);
            if (!o.alpha.empty()) {
                pt.alpha = parse_alpha(o.alpha);
                pt.r_tilde = amplitude(pt.alpha);
                pt.r_i = std::abs(pt.alpha[0]);
                pt.theta = std::arg(pt.alpha[0]);
            }
            if (!o.angles.empty()) pt.angles = parse_list(o.angles);
            std::optional<ScanSpec> scan;
            if (!scan_text.empty()) {
                scan = parse_scan(scan_text);
                if (!pt.alpha.empty() && (scan->variable == "r_tilde" || scan->variable == "theta")) {
                    throw Error(Errc::invalid_argument, "--alpha fixes r_tilde and theta; scan another variable");
                }
            }
            if (!scan) pt.amplitudes();
            table = sub == sv ? scan_variance(o, pt, scan, curve) : photon_dist(o, pt, scan, photon_n, poisson_match);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream *os = &out;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            err << "error: cannot open " << o.out << '\n';
            return kExitUsage;
        }
        os = &file;
    }
    if (o.format == "json") {
        write_json(table, *os);
    } else {
        write_csv(table, *os);
        for (const auto &note : table.notes) err << "# " << note << '\n';
    }
    return status;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace bgcs
