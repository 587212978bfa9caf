#include "degcenter/vectorfield.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "degcenter/errors.hpp"

namespace degcenter {

std::size_t monomial_slot(int i, int j) {
    if (i < 0 || j < 0 || i + j > 3) {
        throw DomainError("index out of range: x^" + std::to_string(i) + " y^" + std::to_string(j));
    }
    for (std::size_t k = 0; k < kMonomialCount; ++k) {
        if (kMonomials[k].i == i && kMonomials[k].j == j) return k;
    }
    throw DomainError("index out of range");  // unreachable
}

char family_letter(Family f) { return "abcd"[static_cast<int>(f)]; }

std::string CoefficientKey::name() const {
    std::string s(3, ' ');
    s[0] = family_letter(family);
    s[1] = static_cast<char>('0' + i());
    s[2] = static_cast<char>('0' + j());
    return s;
}

CoefficientKey CoefficientKey::parse(std::string_view name) {
    if (name.size() != 3 || name[0] < 'a' || name[0] > 'd' || !std::isdigit(static_cast<unsigned char>(name[1])) ||
        !std::isdigit(static_cast<unsigned char>(name[2]))) {
        throw DomainError("unknown key '" + std::string(name) + "'");
    }
    const auto family = static_cast<Family>(name[0] - 'a');
    return {family, monomial_slot(name[1] - '0', name[2] - '0')};
}

PerturbationCoefficients& PerturbationCoefficients::set(Family f, int i, int j, double value) {
    return set(CoefficientKey{f, monomial_slot(i, j)}, value);
}

PerturbationCoefficients& PerturbationCoefficients::set(const CoefficientKey& k, double value) {
    if (!std::isfinite(value)) throw DomainError("coefficient " + k.name() + " is not finite");
    values_[index(k.family)][k.slot] = value;
    return *this;
}

bool PerturbationCoefficients::is_zero() const { return max_abs() == 0.0; }

double PerturbationCoefficients::first_order_scale() const {
    double m = 0.0;
    for (Family f : {Family::a, Family::c}) {
        for (double v : values_[index(f)]) m = std::max(m, std::abs(v));
    }
    return m;
}

double PerturbationCoefficients::max_abs() const {
    double m = 0.0;
    for (const auto& fam : values_) {
        for (double v : fam) m = std::max(m, std::abs(v));
    }
    return m;
}

PerturbationCoefficients PerturbationCoefficients::scaled(double first, double second) const {
    PerturbationCoefficients out = *this;
    for (Family f : kFamilies) {
        const double s = (f == Family::a || f == Family::c) ? first : second;
        for (double& v : out.values_[index(f)]) v *= s;
    }
    return out;
}

double eval_polynomial(std::span<const double, kMonomialCount> k, double x, double y) {
    const double x2 = x * x;
    const double y2 = y * y;
    return k[0] + k[1] * x + k[2] * y + k[3] * x2 + k[4] * x * y + k[5] * y2 + k[6] * x2 * x + k[7] * x2 * y +
           k[8] * x * y2 + k[9] * y2 * y;
}

Velocity eval_unperturbed(PlanarPoint p) {
    const double x = p.x;
    const double y = p.y;
    return {-y * (3.0 * x * x + y * y), x * (x * x - y * y)};
}

Velocity eval_perturbed(const PerturbationCoefficients& coeffs, double epsilon, PlanarPoint p) {
    Velocity v = eval_unperturbed(p);
    if (epsilon == 0.0) return v;
    const double e2 = epsilon * epsilon;
    v.dx += epsilon * eval_polynomial(coeffs.family(Family::a), p.x, p.y) +
            e2 * eval_polynomial(coeffs.family(Family::b), p.x, p.y);
    v.dy += epsilon * eval_polynomial(coeffs.family(Family::c), p.x, p.y) +
            e2 * eval_polynomial(coeffs.family(Family::d), p.x, p.y);
    return v;
}

double first_integral(PlanarPoint p) {
    const double rho2 = p.x * p.x + p.y * p.y;
    if (rho2 == 0.0) throw DomainError("first integral is undefined at the origin");
    return rho2 * std::exp(-2.0 * p.x * p.x / rho2);
}

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view text, std::size_t line) {
    // from_chars rejects a leading '+', the grammar allows it.
    std::string_view body = text;
    if (!body.empty() && body.front() == '+') {
        body.remove_prefix(1);
        if (!body.empty() && (body.front() == '+' || body.front() == '-')) body = {};
    }
    double value = 0.0;
    const char* first = body.data();
    const char* last = body.data() + body.size();
    const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw ParseError(line, "malformed number '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

PerturbationCoefficients parse_coefficients(std::istream& in) {
    PerturbationCoefficients out;
    std::set<std::string> seen;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));

        const bool key_shape = key.size() == 3 && key[0] >= 'a' && key[0] <= 'd' && std::isdigit(static_cast<unsigned char>(key[1])) &&
                               std::isdigit(static_cast<unsigned char>(key[2]));
        if (!key_shape) throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
        if ((key[1] - '0') + (key[2] - '0') > 3) {
            throw ParseError(line_no, "index out of range in '" + std::string(key) + "'");
        }
        if (!seen.insert(std::string(key)).second) {
            throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
        }
        out.set(CoefficientKey::parse(key), parse_number(value, line_no));
    }
    return out;
}

PerturbationCoefficients parse_coefficients(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_coefficients(in);
}

std::string serialize_coefficients(const PerturbationCoefficients& coeffs) {
    std::string out;
    char buf[64];
    for (Family f : kFamilies) {
        for (std::size_t s = 0; s < kMonomialCount; ++s) {
            const CoefficientKey key{f, s};
            const double v = coeffs.get(key);
            if (v == 0.0) continue;
            std::snprintf(buf, sizeof buf, "%s = %.17g\n", key.name().c_str(), v);
            out += buf;
        }
    }
    return out;
}

}  // namespace degcenter
