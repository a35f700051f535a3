#include "dielfet/medium.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "dielfet/errors.hpp"

namespace dielfet {

Medium make_medium(std::string name, double n, double mu, double M,
                   double d1, double d2, double a, Warnings* warnings) {
    if (!std::isfinite(n) || !std::isfinite(mu) || !std::isfinite(M) ||
        !std::isfinite(d1) || !std::isfinite(d2) || !std::isfinite(a))
        throw validation_error("non-finite input");
    if (n < 1.0) throw validation_error("n < 1");
    if (mu <= 0.0) throw validation_error("mu <= 0");
    if (M <= 0.0) throw validation_error("M <= 0");

    if (warnings) {
        if (M < 1.0 || M > 100.0)
            warnings->push_back("M = " + std::to_string(M) +
                                " eV outside the typical atomic range [1, 100] eV");
        if (std::fabs(d1) > 10.0)
            warnings->push_back("|d1| > 10: far above the expected O(0.1-1) range");
        if (std::fabs(a) > 1.0)
            warnings->push_back("|a| > 1: far above the expected O(1e-6) range");
    }

    Medium m;
    m.name = std::move(name);
    m.n = n;
    m.mu = mu;
    m.epsilon = n * n / mu;
    m.M = M;
    m.d1 = d1;
    m.d2 = d2;
    m.a = a;
    return m;
}

Medium make_medium(double n, double mu, double M, double d1, double d2, double a,
                   Warnings* warnings) {
    return make_medium(std::string{}, n, mu, M, d1, d2, a, warnings);
}

FieldObservables field_observables(Vec3 e_field, Vec3 b_field, const Medium& medium) {
    if (!is_finite(e_field) || !is_finite(b_field))
        throw validation_error("non-finite field");

    const Vec3 h = (1.0 / medium.mu) * b_field;
    const Vec3 d = medium.epsilon * e_field;

    FieldObservables obs;
    obs.energy_density = (medium.n * medium.n * dot(e_field, e_field) +
                          dot(b_field, b_field)) /
                         (2.0 * medium.mu);
    obs.poynting = cross(e_field, h);
    obs.momentum_density = cross(d, b_field); // = n^2 * poynting
    return obs;
}

MaterialFourVector photon_four_momentum(Vec3 k, const Medium& medium) {
    if (!is_finite(k)) throw validation_error("non-finite wave vector");
    const double omega = norm(k) / medium.n;
    return MaterialFourVector{medium.n * omega, k};
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

double parse_number(const std::string& text, int line_no, const char* column) {
    const std::string t = trim(text);
    char* end = nullptr;
    const double value = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(value))
        throw parse_error("line " + std::to_string(line_no) + ": column '" +
                          column + "' is not a number: '" + t + "'");
    return value;
}

constexpr const char* kMaterialsHeader =
    "name,n,M_eV,cauchy_B_m2,kerr_K_m_per_V2,n2_m2_per_W,lambda_ref_m";

} // namespace

std::vector<MaterialRow> parse_materials(std::istream& in) {
    std::vector<MaterialRow> rows;
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (!header_seen) {
            if (t != kMaterialsHeader)
                throw parse_error("line " + std::to_string(line_no) +
                                  ": expected header '" + kMaterialsHeader + "'");
            header_seen = true;
            continue;
        }

        const auto fields = split_csv_row(t);
        if (fields.size() != 7)
            throw parse_error("line " + std::to_string(line_no) + ": expected 7 columns, got " +
                              std::to_string(fields.size()));
        if (fields[0].empty())
            throw parse_error("line " + std::to_string(line_no) + ": empty material name");
        if (!seen.insert(fields[0]).second)
            throw parse_error("line " + std::to_string(line_no) + ": duplicate material '" +
                              fields[0] + "'");

        MaterialRow row;
        const double n = parse_number(fields[1], line_no, "n");
        const double M = parse_number(fields[2], line_no, "M_eV");
        try {
            row.medium = make_medium(fields[0], n, 1.0, M, 0.0, 0.0, 0.0);
        } catch (const validation_error& e) {
            throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
        }
        row.cauchy_b_m2 = parse_number(fields[3], line_no, "cauchy_B_m2");
        if (!fields[4].empty())
            row.kerr_k_m_per_v2 = parse_number(fields[4], line_no, "kerr_K_m_per_V2");
        if (!fields[5].empty())
            row.n2_m2_per_w = parse_number(fields[5], line_no, "n2_m2_per_W");
        row.lambda_ref_m = parse_number(fields[6], line_no, "lambda_ref_m");
        if (row.lambda_ref_m <= 0.0)
            throw parse_error("line " + std::to_string(line_no) + ": lambda_ref_m <= 0");
        rows.push_back(std::move(row));
    }

    if (!header_seen)
        throw parse_error("materials file has no header row");
    return rows;
}

std::vector<MaterialRow> load_materials(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open materials file: " + path);
    return parse_materials(f);
}

} // namespace dielfet
