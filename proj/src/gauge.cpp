#include "ablab/gauge.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ablab/errors.hpp"

namespace ablab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

double parse_num(const std::string& tok, const std::string& label) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ConfigurationError("bad number '" + tok + "' in chi label '" + label + "'");
    }
}

Vec3 parse_vec(const std::string& tok, const std::string& label) {
    const auto parts = split(tok, ',');
    if (parts.size() != 3)
        throw ConfigurationError("expected 'x,y,z' but got '" + tok + "' in chi label '" + label +
                                 "'");
    return {parse_num(parts[0], label), parse_num(parts[1], label), parse_num(parts[2], label)};
}

}  // namespace

ChiFunction chi_zero() {
    ChiFunction f;
    f.value = [](const Vec3&) { return 0.0; };
    f.gradient = [](const Vec3&) { return Vec3{}; };
    f.label = "zero";
    return f;
}

ChiFunction chi_linear(double c, const Vec3& axis) {
    ChiFunction f;
    f.value = [c, axis](const Vec3& r) { return c * dot(axis, r); };
    f.gradient = [c, axis](const Vec3&) { return axis * c; };
    std::ostringstream lab;
    lab << "linear:" << c << ":" << axis.x << "," << axis.y << "," << axis.z;
    f.label = lab.str();
    return f;
}

ChiFunction chi_quadratic(double c) {
    ChiFunction f;
    f.value = [c](const Vec3& r) { return c * r.x * r.x; };
    f.gradient = [c](const Vec3& r) { return Vec3{2.0 * c * r.x, 0.0, 0.0}; };
    std::ostringstream lab;
    lab << "quadratic:" << c;
    f.label = lab.str();
    return f;
}

ChiFunction chi_azimuthal(double c, const Vec3& axis_point) {
    ChiFunction f;
    f.value = [c, axis_point](const Vec3& r) {
        return c * std::atan2(r.y - axis_point.y, r.x - axis_point.x);
    };
    f.gradient = [c, axis_point](const Vec3& r) {
        const double dx = r.x - axis_point.x;
        const double dy = r.y - axis_point.y;
        const double rho2 = dx * dx + dy * dy;
        if (rho2 < 1e-24) throw SingularityError("azimuthal chi gradient on its axis");
        return Vec3{-c * dy / rho2, c * dx / rho2, 0.0};
    };
    std::ostringstream lab;
    lab << "azimuthal:" << c << ":" << axis_point.x << "," << axis_point.y << ","
        << axis_point.z;
    f.label = lab.str();
    f.multivalued = true;
    f.period = 2.0 * pi * c;
    return f;
}

ChiFunction chi_gaussian_bump(double amp, const Vec3& center, double width) {
    if (!(width > 0.0)) throw ConfigurationError("bump chi width must be positive");
    ChiFunction f;
    const double inv2w2 = 1.0 / (2.0 * width * width);
    f.value = [amp, center, inv2w2](const Vec3& r) {
        return amp * std::exp(-norm_sq(r - center) * inv2w2);
    };
    f.gradient = [amp, center, inv2w2](const Vec3& r) {
        const Vec3 d = r - center;
        return d * (-2.0 * inv2w2 * amp * std::exp(-norm_sq(d) * inv2w2));
    };
    std::ostringstream lab;
    lab << "bump:" << amp << ":" << center.x << "," << center.y << "," << center.z << ":" << width;
    f.label = lab.str();
    return f;
}

ChiFunction chi_from_label(const std::string& label) {
    const auto parts = split(label, ':');
    const std::string& kind = parts[0];
    if (kind == "zero") {
        if (parts.size() != 1) throw ConfigurationError("chi 'zero' takes no parameters");
        return chi_zero();
    }
    if (kind == "linear") {
        if (parts.size() != 3)
            throw ConfigurationError("chi 'linear' wants 'linear:<c>:<x,y,z>', got '" + label +
                                     "'");
        return chi_linear(parse_num(parts[1], label), parse_vec(parts[2], label));
    }
    if (kind == "quadratic") {
        if (parts.size() != 2)
            throw ConfigurationError("chi 'quadratic' wants 'quadratic:<c>', got '" + label + "'");
        return chi_quadratic(parse_num(parts[1], label));
    }
    if (kind == "azimuthal") {
        if (parts.size() == 2) return chi_azimuthal(parse_num(parts[1], label));
        if (parts.size() == 3)
            return chi_azimuthal(parse_num(parts[1], label), parse_vec(parts[2], label));
        throw ConfigurationError("chi 'azimuthal' wants 'azimuthal:<c>[:<x,y,z>]', got '" + label +
                                 "'");
    }
    if (kind == "bump") {
        if (parts.size() != 4)
            throw ConfigurationError("chi 'bump' wants 'bump:<amp>:<x,y,z>:<width>', got '" +
                                     label + "'");
        return chi_gaussian_bump(parse_num(parts[1], label), parse_vec(parts[2], label),
                                 parse_num(parts[3], label));
    }
    throw ConfigurationError("unknown chi kind '" + kind + "'");
}

GaugeField coulomb_solenoid_field(const Solenoid& s) {
    s.validate();
    GaugeField f;
    f.sampler = [s](const Vec3& r) { return solenoid_vector_potential(r, s); };
    f.gauge_tag = "coulomb";
    return f;
}

GaugeField charge_coulomb_field(const ChargeState& ch, const Constants& k) {
    GaugeField f;
    f.sampler = [ch, k](const Vec3& r) { return charge_vector_potential(r, ch, k); };
    f.gauge_tag = "coulomb";
    return f;
}

GaugeField element_sum_field(std::vector<CurrentElement> elements, const Constants& k) {
    auto shared = std::make_shared<std::vector<CurrentElement>>(std::move(elements));
    GaugeField f;
    f.sampler = [shared, k](const Vec3& r) {
        return biot_savart_vector_potential(r, *shared, k);
    };
    f.gauge_tag = "element-sum";
    return f;
}

GaugeField apply_gauge(const GaugeField& base, const ChiFunction& chi) {
    GaugeField f;
    auto base_sampler = base.sampler;
    auto grad = chi.gradient;
    f.sampler = [base_sampler, grad](const Vec3& r) { return base_sampler(r) + grad(r); };
    f.gauge_tag = base.gauge_tag + "+grad(" + chi.label + ")";
    f.chi_applied = chi;
    return f;
}

}  // namespace ablab
