#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>

namespace degcenter {

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

struct Velocity {
    double dx = 0.0;
    double dy = 0.0;
};

/// The four coefficient families of the cubic perturbation:
///   x' = -y(3x^2+y^2) + eps * sum a_ij x^i y^j + eps^2 * sum b_ij x^i y^j
///   y' =  x(x^2-y^2)  + eps * sum c_ij x^i y^j + eps^2 * sum d_ij x^i y^j
enum class Family : int { a = 0, b = 1, c = 2, d = 3 };

inline constexpr std::array<Family, 4> kFamilies = {Family::a, Family::b, Family::c, Family::d};

struct Monomial {
    int i;  ///< power of x
    int j;  ///< power of y
};

/// Canonical slot order for the ten monomials of total degree <= 3.
inline constexpr std::size_t kMonomialCount = 10;
inline constexpr std::array<Monomial, kMonomialCount> kMonomials = {{
    {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3},
}};

/// Slot of x^i y^j in `kMonomials`. Throws DomainError for i < 0, j < 0 or i + j > 3.
std::size_t monomial_slot(int i, int j);

char family_letter(Family f);

/// Identifies one of the 40 coefficients, e.g. "c02".
struct CoefficientKey {
    Family family;
    std::size_t slot;

    int i() const { return kMonomials[slot].i; }
    int j() const { return kMonomials[slot].j; }
    std::string name() const;

    /// Parses "a10"-style names; throws DomainError for anything else.
    static CoefficientKey parse(std::string_view name);

    friend bool operator==(const CoefficientKey&, const CoefficientKey&) = default;
};

/// Dense 4 x 10 table of perturbation coefficients. Unset entries are exactly 0.
class PerturbationCoefficients {
public:
    PerturbationCoefficients() = default;

    double get(Family f, int i, int j) const { return values_[index(f)][monomial_slot(i, j)]; }
    double get(const CoefficientKey& k) const { return values_[index(k.family)][k.slot]; }
    double get(std::string_view name) const { return get(CoefficientKey::parse(name)); }

    /// Throws DomainError if `value` is not finite.
    PerturbationCoefficients& set(Family f, int i, int j, double value);
    PerturbationCoefficients& set(const CoefficientKey& k, double value);
    PerturbationCoefficients& set(std::string_view name, double value) {
        return set(CoefficientKey::parse(name), value);
    }

    std::span<const double, kMonomialCount> family(Family f) const { return values_[index(f)]; }

    bool is_zero() const;
    /// Largest |value| over the first-order families a and c.
    double first_order_scale() const;
    double max_abs() const;

    /// Scales a, c by `first` and b, d by `second`.
    PerturbationCoefficients scaled(double first, double second) const;

    friend bool operator==(const PerturbationCoefficients&, const PerturbationCoefficients&) = default;

private:
    static std::size_t index(Family f) { return static_cast<std::size_t>(f); }
    std::array<std::array<double, kMonomialCount>, 4> values_{};
};

/// Sum of coeffs[k] * x^i * y^j over the ten monomials.
double eval_polynomial(std::span<const double, kMonomialCount> coeffs, double x, double y);

/// The degenerate center x' = -y(3x^2+y^2), y' = x(x^2-y^2).
Velocity eval_unperturbed(PlanarPoint p);

Velocity eval_perturbed(const PerturbationCoefficients& coeffs, double epsilon, PlanarPoint p);

/// H(x, y) = (x^2+y^2) exp(-2x^2/(x^2+y^2)), conserved by the unperturbed flow.
/// Throws DomainError at the origin.
double first_integral(PlanarPoint p);

/// Reads the `key = value` coefficient format. Throws ParseError naming the line.
PerturbationCoefficients parse_coefficients(std::istream& in);
PerturbationCoefficients parse_coefficients(std::string_view text);

/// Writes every nonzero entry in canonical order with 17 significant digits.
std::string serialize_coefficients(const PerturbationCoefficients& coeffs);

}  // namespace degcenter
