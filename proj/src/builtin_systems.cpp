#include "degcenter/builtin_systems.hpp"

#include <algorithm>
#include <string>

#include "degcenter/averaging.hpp"
#include "degcenter/errors.hpp"

namespace degcenter {

namespace {

std::vector<BuiltinSystem> make_systems() {
    std::vector<BuiltinSystem> out;

    BuiltinSystem s11;
    s11.id = 11;
    s11.coefficients.set("a00", 1.0).set("c00", 1.0).set("c02", -37.74385845);
    s11.coefficients.set("b10", 3570.576292).set("b30", -752.8823806);
    s11.v6 = -1182.624878;
    s11.v4 = 4139.187071;
    s11.v2 = -3621.788686;
    s11.v0 = 665.2264933;
    s11.expected_cycles = 3;
    s11.positive_roots = {0.5, 1.0, 1.5};
    s11.root_tolerance = 1e-3;
    s11.scan_min = 0.2;
    s11.scan_max = 2.5;
    s11.expanded = {{'x', 0, 0, 0.001},
                    {'x', 1, 0, 0.003570576292},
                    {'x', 3, 0, -0.0007528823806},
                    {'y', 0, 0, 0.001},
                    {'y', 0, 2, -0.03774385845}};
    out.push_back(s11);

    BuiltinSystem s12;
    s12.id = 12;
    s12.coefficients.set("a00", 1.0).set("a01", 1.0).set("a21", 1.0).set("b10", -856.6373973).set("b03", 1.0);
    s12.coefficients.set("c00", 1.0).set("c02", 1.0).set("d10", 1.0).set("d03", 73.80732101);
    s12.v6 = 231.8725375;
    s12.v4 = -993.0560642;
    s12.v2 = 95.95703341;
    s12.v0 = 665.2264933;
    s12.expected_cycles = 2;
    s12.positive_roots = {1.0, 2.0};
    s12.root_tolerance = 1e-3;
    s12.scan_min = 0.5;
    s12.scan_max = 3.0;
    s12.expanded = {{'x', 0, 0, 0.001},          {'x', 0, 1, 0.001},        {'x', 2, 1, 0.001},
                    {'x', 1, 0, -0.0008566373973}, {'x', 0, 3, 0.000001},     {'y', 0, 0, 0.001},
                    {'y', 0, 2, 0.001},            {'y', 1, 0, 0.000001},     {'y', 0, 3, 0.00007380732101}};
    out.push_back(s12);

    BuiltinSystem s13;
    s13.id = 13;
    s13.coefficients.set("a00", 1.0).set("b10", 1.0).set("b30", 1.0);
    s13.coefficients.set("c00", 10.0).set("c01", 10.0).set("c11", 5.0).set("d01", 1.0).set("d03", -1.0);
    s13.coefficients = solve_first_order_condition(s13.coefficients);  // a10 = -176.5322447...
    s13.v6 = -1.570796327;
    s13.v4 = 21.62373221;
    s13.v2 = -5545.821670;
    s13.v0 = 6652.264933;
    s13.expected_cycles = 1;
    s13.positive_roots = {1.097575824};
    s13.root_tolerance = 1e-5;
    s13.other_roots = {{-1.097575824, 0.0},
                       {-5.725902515, -5.148324797},
                       {5.725902515, 5.148324797},
                       {-5.725902515, 5.148324797},
                       {5.725902515, -5.148324797}};
    s13.scan_min = 0.5;
    s13.scan_max = 3.0;
    // The x coefficient combines eps * a10 and eps^2 * b10.
    s13.expanded = {{'x', 0, 0, 0.001},  {'x', 1, 0, -0.1765312447}, {'x', 3, 0, 0.000001}, {'y', 0, 0, 0.010},
                    {'y', 0, 1, 0.010001}, {'y', 1, 1, 0.005},         {'y', 0, 3, -0.000001}};
    out.push_back(s13);

    BuiltinSystem s14;
    s14.id = 14;
    s14.coefficients.set("a00", 1.0).set("b10", 1.0).set("c00", 1.0).set("c02", 1.0).set("d03", 1.0);
    s14.v6 = 3.141592654;
    s14.v4 = 1.159249021;
    s14.v2 = 95.95703341;
    s14.v0 = 665.2264933;
    s14.expected_cycles = 0;
    s14.root_tolerance = 1e-5;
    s14.other_roots = {{-2.116012294, -1.570359831}, {2.116012294, 1.570359831}, {0.0, -2.095699520},
                       {0.0, 2.095699520},           {-2.116012294, 1.570359831}, {2.116012294, -1.570359831}};
    s14.scan_min = 0.5;
    s14.scan_max = 3.0;
    s14.expanded = {{'x', 0, 0, 0.001}, {'x', 1, 0, 0.000001}, {'y', 0, 0, 0.001}, {'y', 0, 2, 0.001},
                    {'y', 0, 3, 0.000001}};
    out.push_back(s14);
    return out;
}

}  // namespace

const std::vector<BuiltinSystem>& builtin_systems() {
    static const std::vector<BuiltinSystem> systems = make_systems();
    return systems;
}

const BuiltinSystem& builtin_system(int id) {
    const auto& all = builtin_systems();
    const auto it = std::find_if(all.begin(), all.end(), [id](const BuiltinSystem& s) { return s.id == id; });
    if (it == all.end()) throw DomainError("no built-in system with id " + std::to_string(id));
    return *it;
}

const std::vector<ReferenceTableEntry>& reference_table() {
    static const std::vector<ReferenceTableEntry> table = {
        // r0^6 slot
        {"c21*c30", 6, -0.3926990800},
        {"a12*c30", 6, 0.1963495397},
        {"a03*c03", 6, 2.159844949},
        {"a03*a12", 6, -0.1963495365},
        {"c12*c21", 6, -0.7853981634},
        {"a03*c21", 6, 0.3926990817},
        {"c03*c12", 6, -1.178097245},
        {"a12*c12", 6, 0.3926990817},
        {"c03*c30", 6, 0.9817477042},
        {"d21", 6, 1.570796327},
        {"d03", 6, 3.141592654},
        {"b30", 6, 1.570796327},
        // r0^4 slot
        {"a21*c01", 4, -3.155691751},
        {"c03*c10", 4, 6.612510180},
        {"a12*c10", 4, 1.786201647},
        {"a01*c21", 4, 2.413154277},
        {"a03*c01", 4, 38.88726613},
        {"c10*c21", 4, -1.253905255},
        {"a01*a12", 4, -1.206577137},
        {"c01*c12", 4, -68.30745733},
        {"c01*c30", 4, -38.88726635},
        {"a01*c03", 4, 13.27234849},
        {"a11*c11", 4, 2.318498043},
        {"c02*c11", 4, -4.73165232},
        {"a20*c02", 4, 2.318498043},
        {"a02*c20", 4, 2.318498045},
        {"c11*c20", 4, -3.761715750},
        {"a02*c02", 4, 14.47892563},
        {"a02*a11", 4, -1.253905250},
        {"a20*c20", 4, 0.189312456},
        {"a11*a20", 4, 0.094656226},
        {"b10", 4, 1.159249021},
        {"d01", 4, 20.46448319},
        // r0^2 slot; the listed -0.000001 c01^2 is omitted (measured as zero)
        {"a00*c02", 2, 95.95703341},
        {"a02*c00", 2, 105.7377762},
        {"a01*c01", 2, 239.0000390},
        {"a00*a11", 2, -7.649140220},
        {"a00*c20", 2, 16.68739736},
        {"c00*c11", 2, -110.9164314},
        {"c01*c10", 2, -257.2692783},
        {"a20*c00", 2, -31.79348852},
        // r0^0 slot
        {"a00*c00", 0, 665.2264933},
    };
    return table;
}

}  // namespace degcenter
