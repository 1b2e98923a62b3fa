#include "cvpt/serialization.hpp"

#include "cvpt/errors.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <sstream>

namespace cvpt {

namespace fs = std::filesystem;

namespace {

constexpr const char* kCacheFormat = "cvpt-cache-1";

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw parse_error(std::string("missing field '") + key + "'", 0);
    }
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) {
        throw parse_error(std::string("field '") + key + "' is not an integer", 0);
    }
    return v.get<int>();
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) {
        throw parse_error(std::string("field '") + key + "' is not a string", 0);
    }
    return v.get<std::string>();
}

const json& array_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) {
        throw parse_error(std::string("field '") + key + "' is not an array", 0);
    }
    return v;
}

json gauss_fields(const GaussRational& z) {
    return {{"re_num", z.re().numerator_str()},
            {"re_den", z.re().denominator_str()},
            {"im_num", z.im().numerator_str()},
            {"im_den", z.im().denominator_str()}};
}

BigRational rational_fields(const json& j, const char* num, const char* den) {
    try {
        return {string_field(j, num), string_field(j, den)};
    } catch (const domain_error& e) {
        throw parse_error(e.what(), 0);
    }
}

GaussRational gauss_fields_from(const json& j) {
    return {rational_fields(j, "re_num", "re_den"), rational_fields(j, "im_num", "im_den")};
}

json wave_to_json(const WaveCorrectionTable& c) {
    json out = json::array();
    for (int k = 1; k <= c.order(); ++k) {
        for (int m = 1; m <= k + 2; ++m) {
            if (!c.at(k, m).is_zero()) {
                json e{{"k", k}, {"m", m}};
                e.update(gauss_fields(c.at(k, m)));
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

json wave_to_json(const BackgroundWaveTable& c) {
    json out = json::array();
    for (int k = 1; k <= c.order(); ++k) {
        for (int m = 1; m <= k + 2; ++m) {
            const auto& coeffs = c.at(k, m).coefficients();
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                if (!coeffs[j].is_zero()) {
                    json e{{"k", k}, {"m", m}, {"j", static_cast<int>(j)}};
                    e.update(gauss_fields(coeffs[j]));
                    out.push_back(std::move(e));
                }
            }
        }
    }
    return out;
}

void check_range(int k, int order, const char* what) {
    if (k < 1 || k > order) {
        throw parse_error(std::string(what) + " index " + std::to_string(k) + " outside 1.." + std::to_string(order),
                          0);
    }
}

std::optional<json> read_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    try {
        return json::parse(in);
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

template <class Series, class Load, class Compute, class Trim>
Series cached(int order, const std::optional<fs::path>& dir, const char* name, Load load, Compute compute,
              Trim trim) {
    if (!dir) {
        return compute(order);
    }
    const fs::path path = *dir / name;
    if (const auto j = read_json_file(path)) {
        try {
            if (j->value("format", "") == kCacheFormat) {
                Series s = load(*j);
                if (s.order() >= order) {
                    return trim(s, order);
                }
            }
        } catch (const std::exception&) {
            // A stale or damaged cache is rebuilt below.
        }
    }
    Series s = compute(order);
    fs::create_directories(*dir);
    json out = to_json(s.value);
    out["format"] = kCacheFormat;
    write_file_atomic(path, out.dump(1));
    return s;
}

} // namespace

json to_json(const BigRational& q) { return {{"numerator", q.numerator_str()}, {"denominator", q.denominator_str()}}; }

BigRational rational_from_json(const json& j) {
    return rational_fields(j, "numerator", "denominator");
}

json to_json(const GaussRational& z) { return gauss_fields(z); }

GaussRational gauss_from_json(const json& j) { return gauss_fields_from(j); }

json energy_to_json(const EnergyCoefficients& eps) {
    json out = json::array();
    for (int k = 1; k <= eps.order(); ++k) {
        const GaussRational& e = eps.values()[static_cast<std::size_t>(k - 1)];
        if (!e.is_real()) {
            throw domain_error("eps_" + std::to_string(k) + " is not real");
        }
        json row{{"k", k}};
        row.update(to_json(e.re()));
        out.push_back(std::move(row));
    }
    return out;
}

EnergyCoefficients energy_from_json(const json& j) {
    if (!j.is_array()) {
        throw parse_error("energy coefficients must be an array", 0);
    }
    std::vector<GaussRational> eps(j.size());
    std::vector<bool> seen(j.size(), false);
    for (const auto& row : j) {
        const int k = int_field(row, "k");
        check_range(k, static_cast<int>(j.size()), "eps");
        eps[static_cast<std::size_t>(k - 1)] = GaussRational(rational_from_json(row));
        seen[static_cast<std::size_t>(k - 1)] = true;
    }
    for (std::size_t k = 0; k < seen.size(); ++k) {
        if (!seen[k]) {
            throw parse_error("eps_" + std::to_string(k + 1) + " missing", 0);
        }
    }
    return EnergyCoefficients(std::move(eps));
}

json potential_to_json(const EffectivePotentialSeries& v) {
    json out = json::array();
    for (int k = 1; k <= v.order(); ++k) {
        const auto& coeffs = v.at(k).coefficients();
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (!coeffs[j].is_zero()) {
                json row{{"k", k}, {"j", static_cast<int>(j)}};
                row.update(gauss_fields(coeffs[j]));
                out.push_back(std::move(row));
            }
        }
    }
    return out;
}

EffectivePotentialSeries potential_from_json(const json& j) {
    if (!j.is_array()) {
        throw parse_error("potential coefficients must be an array", 0);
    }
    int order = 0;
    for (const auto& row : j) {
        order = std::max(order, int_field(row, "k"));
    }
    std::vector<std::vector<GaussRational>> c(static_cast<std::size_t>(order));
    for (const auto& row : j) {
        const int k = int_field(row, "k");
        const int p = int_field(row, "j");
        check_range(k, order, "potential");
        if (p < 0 || p > k + 2) {
            throw parse_error("power X^" + std::to_string(p) + " outside the range of V_" + std::to_string(k), 0);
        }
        auto& v = c[static_cast<std::size_t>(k - 1)];
        if (v.size() <= static_cast<std::size_t>(p)) {
            v.resize(static_cast<std::size_t>(p) + 1);
        }
        v[static_cast<std::size_t>(p)] = gauss_fields_from(row);
    }
    std::vector<BackgroundPoly> polys;
    for (auto& v : c) {
        polys.emplace_back(std::move(v));
    }
    return EffectivePotentialSeries(std::move(polys));
}

json loops_to_json(const LoopExpansion& loops) {
    json rows = json::array();
    for (int l = 1; l <= loops.loops(); ++l) {
        json row{{"l", l}};
        row.update(to_json(loops.at(l)));
        row["g_power"] = LoopExpansion::g_power(l);
        row["wtilde_power"] = LoopExpansion::wtilde_power(l);
        rows.push_back(std::move(row));
    }
    return {{"template", kLoopTemplate}, {"loops", std::move(rows)}};
}

LoopExpansion loops_from_json(const json& j) {
    const json& rows = array_field(j, "loops");
    std::vector<BigRational> r(rows.size());
    for (const auto& row : rows) {
        const int l = int_field(row, "l");
        check_range(l, static_cast<int>(rows.size()), "loop");
        r[static_cast<std::size_t>(l - 1)] = rational_from_json(row);
    }
    return LoopExpansion(std::move(r));
}

json to_json(const GroundStateSeries& s) {
    return {{"order", s.energy.order()}, {"eps", energy_to_json(s.energy)}, {"wave", wave_to_json(s.wave)}};
}

GroundStateSeries ground_state_from_json(const json& j) {
    const int order = int_field(j, "order");
    if (order < 1) {
        throw parse_error("series order must be positive", 0);
    }
    GroundStateSeries s{WaveCorrectionTable(order), energy_from_json(field(j, "eps"))};
    if (s.energy.order() != order) {
        throw parse_error("eps list does not match the series order", 0);
    }
    for (const auto& row : array_field(j, "wave")) {
        const int k = int_field(row, "k");
        check_range(k, order, "wave");
        const int m = int_field(row, "m");
        if (m < 1 || m > k + 2) {
            throw parse_error("wave index m = " + std::to_string(m) + " outside 1..k+2", 0);
        }
        s.wave.set(k, m, gauss_fields_from(row));
    }
    return s;
}

json to_json(const VeffSeries& s) {
    return {{"order", s.potential.order()},
            {"potential", potential_to_json(s.potential)},
            {"wave", wave_to_json(s.wave)}};
}

VeffSeries veff_from_json(const json& j) {
    const int order = int_field(j, "order");
    if (order < 1) {
        throw parse_error("series order must be positive", 0);
    }
    EffectivePotentialSeries v = potential_from_json(field(j, "potential"));
    if (v.order() > order) {
        throw parse_error("potential list exceeds the series order", 0);
    }
    std::vector<BackgroundPoly> polys = v.polys();
    polys.resize(static_cast<std::size_t>(order));
    std::vector<std::vector<std::vector<GaussRational>>> cells(static_cast<std::size_t>(order));
    for (int k = 1; k <= order; ++k) {
        cells[static_cast<std::size_t>(k - 1)].resize(static_cast<std::size_t>(k + 2));
    }
    for (const auto& row : array_field(j, "wave")) {
        const int k = int_field(row, "k");
        check_range(k, order, "wave");
        const int m = int_field(row, "m");
        const int p = int_field(row, "j");
        if (m < 1 || m > k + 2 || p < 0 || p > 2 * k + 2) {
            throw parse_error("wave index outside the structural range", 0);
        }
        auto& c = cells[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - 1)];
        if (c.size() <= static_cast<std::size_t>(p)) {
            c.resize(static_cast<std::size_t>(p) + 1);
        }
        c[static_cast<std::size_t>(p)] = gauss_fields_from(row);
    }
    BackgroundWaveTable wave(order);
    for (int k = 1; k <= order; ++k) {
        for (int m = 1; m <= k + 2; ++m) {
            wave.set(k, m, BackgroundPoly(std::move(cells[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - 1)])));
        }
    }
    return {std::move(wave), EffectivePotentialSeries(std::move(polys))};
}

json to_json(const VptSolution& s) {
    json cands = json::array();
    for (const auto& c : s.candidates) {
        json e{{"omega_var", c.omega}};
        e["y"] = c.y ? json(*c.y) : json(nullptr);
        e["b0"] = c.value;
        e["criticality"] = to_string(c.criticality);
        e["curvature"] = c.curvature;
        cands.push_back(std::move(e));
    }
    json out{{"variant", s.variant}, {"N", s.order}, {"omega_var", s.omega_var}};
    out["y"] = s.y ? json(*s.y) : json(nullptr);
    out["b0"] = s.b0;
    out["criticality"] = to_string(s.criticality);
    out["residuals"] = s.residuals;
    out["candidates"] = std::move(cands);
    return out;
}

json to_json(const ConvergenceFit& fit) {
    return {{"slope", fit.slope},
            {"slope_stderr", fit.slope_stderr},
            {"intercept", fit.intercept},
            {"intercept_stderr", fit.intercept_stderr},
            {"points", static_cast<int>(fit.points.size())}};
}

void write_file_atomic(const fs::path& path, const std::string& contents) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << contents;
        out.close();
        if (!out) {
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

namespace {

struct CachedGround {
    GroundStateSeries value;
    int order() const { return value.energy.order(); }
};

struct CachedVeff {
    VeffSeries value;
    int order() const { return value.potential.order(); }
};

} // namespace

GroundStateSeries cached_ground_state_series(int order, const std::optional<fs::path>& cache_dir) {
    if (order < 1) {
        throw argument_error("perturbation order must be at least 1, got " + std::to_string(order));
    }
    auto s = cached<CachedGround>(
        order, cache_dir, "ground_state.json", [](const json& j) { return CachedGround{ground_state_from_json(j)}; },
        [](int n) { return CachedGround{ground_state_series(n)}; },
        [](const CachedGround& full, int n) {
            GroundStateSeries out{WaveCorrectionTable(n), {}};
            std::vector<GaussRational> eps(full.value.energy.values().begin(),
                                           full.value.energy.values().begin() + n);
            out.energy = EnergyCoefficients(std::move(eps));
            for (int k = 1; k <= n; ++k) {
                for (int m = 1; m <= k + 2; ++m) {
                    out.wave.set(k, m, full.value.wave.at(k, m));
                }
            }
            return CachedGround{std::move(out)};
        });
    return std::move(s.value);
}

VeffSeries cached_veff_series(int order, const std::optional<fs::path>& cache_dir) {
    if (order < 1) {
        throw argument_error("perturbation order must be at least 1, got " + std::to_string(order));
    }
    auto s = cached<CachedVeff>(
        order, cache_dir, "effective_potential.json", [](const json& j) { return CachedVeff{veff_from_json(j)}; },
        [](int n) { return CachedVeff{veff_series(n)}; },
        [](const CachedVeff& full, int n) {
            VeffSeries out{BackgroundWaveTable(n), {}};
            std::vector<BackgroundPoly> v(full.value.potential.polys().begin(),
                                          full.value.potential.polys().begin() + n);
            out.potential = EffectivePotentialSeries(std::move(v));
            for (int k = 1; k <= n; ++k) {
                for (int m = 1; m <= k + 2; ++m) {
                    out.wave.set(k, m, full.value.wave.at(k, m));
                }
            }
            return CachedVeff{std::move(out)};
        });
    return std::move(s.value);
}

std::string format_double(double x, int digits) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(digits) << x;
    return os.str();
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

double parse_number(const std::string& s, int line, const std::string& column) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (s.empty() || end != begin + s.size()) {
        throw parse_error("column '" + column + "': '" + s + "' is not a number", line);
    }
    return v;
}

} // namespace

std::vector<ScanRow> read_scan_csv(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<std::string> header;
    while (header.empty() && std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos && line[0] != '#') {
            header = split_csv(line);
        }
    }
    if (header.empty()) {
        throw parse_error("empty CSV input", lineno);
    }
    auto column = [&](const char* name) -> int {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) {
                return static_cast<int>(i);
            }
        }
        return -1;
    };
    const int col_n = column("N");
    const int col_b0 = column("b0");
    const int col_dev = column("deviation");
    if (col_n < 0 || (col_b0 < 0 && col_dev < 0)) {
        throw parse_error("header needs columns N and b0 or deviation", lineno);
    }
    std::vector<ScanRow> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') {
            continue;
        }
        const auto cells = split_csv(line);
        if (cells.size() != header.size()) {
            throw parse_error("expected " + std::to_string(header.size()) + " fields, found " +
                                  std::to_string(cells.size()),
                              lineno);
        }
        ScanRow row;
        const std::string& n = cells[static_cast<std::size_t>(col_n)];
        const auto res = std::from_chars(n.data(), n.data() + n.size(), row.order);
        if (res.ec != std::errc() || res.ptr != n.data() + n.size() || row.order < 1) {
            throw parse_error("column 'N': '" + n + "' is not a positive integer", lineno);
        }
        if (col_b0 >= 0 && !cells[static_cast<std::size_t>(col_b0)].empty()) {
            row.b0 = parse_number(cells[static_cast<std::size_t>(col_b0)], lineno, "b0");
        }
        if (col_dev >= 0 && !cells[static_cast<std::size_t>(col_dev)].empty()) {
            row.deviation = parse_number(cells[static_cast<std::size_t>(col_dev)], lineno, "deviation");
        }
        if (row.b0 || row.deviation) {
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace cvpt
