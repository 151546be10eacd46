#include "ablab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ablab/constants.hpp"
#include "ablab/errors.hpp"

namespace ablab {

namespace {

// Gauss-7 / Kronrod-15 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct Panel {
    double value = 0.0;
    double error = 0.0;
};

struct Ctx {
    const std::function<double(double)>* f = nullptr;
    long evaluations = 0;
    int panels = 0;
    int max_panels = 0;
    bool budget_hit = false;
};

double sample(Ctx& ctx, double x) {
    const double v = (*ctx.f)(x);
    ++ctx.evaluations;
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "integrand returned non-finite value at x = " << x;
        throw QuadratureError(msg.str());
    }
    return v;
}

Panel g7k15(Ctx& ctx, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = sample(ctx, mid - half * kXgk[i]);
        fv[14 - i] = sample(ctx, mid + half * kXgk[i]);
    }
    fv[7] = sample(ctx, mid);

    double resk = 0.0;
    double resabs = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double pair = fv[i] + fv[14 - i];
        resk += kWgk[i] * pair;
        resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    }
    resk += kWgk[7] * fv[7];
    resabs += kWgk[7] * std::abs(fv[7]);

    // Gauss nodes sit at the odd Kronrod indices (1,3,5) plus the midpoint.
    double resg = kWg[3] * fv[7];
    resg += kWg[0] * (fv[1] + fv[13]);
    resg += kWg[1] * (fv[3] + fv[11]);
    resg += kWg[2] * (fv[5] + fv[9]);

    Panel p;
    p.value = resk * half;
    const double delta = std::abs(resk - resg) * std::abs(half);
    double err = delta;
    if (delta > 0.0) {
        const double scaled = 200.0 * delta;
        err = (scaled < 1.0) ? scaled * std::sqrt(scaled) : scaled;
        err = std::min(err, delta * 200.0);
    }
    // Round-off floor so the estimate never claims better than machine noise.
    err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * resabs * std::abs(half));
    p.error = err;
    ++ctx.panels;
    return p;
}

// Depth-first bisection. The accepted tolerance is split evenly between the
// halves and results are combined as (left + right) bottom-up, so reversing
// the orientation of the interval mirrors the tree and negates the sum
// bit-for-bit.
Panel adapt(Ctx& ctx, double a, double b, double tol, int depth, bool& converged) {
    const Panel p = g7k15(ctx, a, b);
    if (p.error <= tol || depth >= 48) {
        if (p.error > tol) converged = false;
        return p;
    }
    if (ctx.panels >= ctx.max_panels) {
        ctx.budget_hit = true;
        converged = false;
        return p;
    }
    const double m = 0.5 * (a + b);
    const Panel left = adapt(ctx, a, m, 0.5 * tol, depth + 1, converged);
    const Panel right = adapt(ctx, m, b, 0.5 * tol, depth + 1, converged);
    return {left.value + right.value, left.error + right.error};
}

}  // namespace

IntegralResult integrate_scalar(const std::function<double(double)>& f, double a, double b,
                                const QuadratureSpec& spec) {
    IntegralResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    Ctx ctx;
    ctx.f = &f;
    ctx.max_panels = std::max(1, spec.max_subdivisions);

    const Panel first = g7k15(ctx, a, b);
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(first.value));
    bool converged = true;
    Panel total;
    if (first.error <= tol) {
        total = first;
    } else {
        const double m = 0.5 * (a + b);
        const Panel left = adapt(ctx, a, m, 0.5 * tol, 1, converged);
        const Panel right = adapt(ctx, m, b, 0.5 * tol, 1, converged);
        total = {left.value + right.value, left.error + right.error};
    }
    res.value = total.value;
    res.error_estimate = total.error;
    res.evaluations = ctx.evaluations;
    const double final_tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total.value));
    res.converged = (converged && !ctx.budget_hit) || total.error <= final_tol;
    return res;
}

PathSpec PathSpec::reversed() const {
    PathSpec r;
    auto c = curve;
    auto d = derivative;
    r.curve = [c](double s) { return c(1.0 - s); };
    r.derivative = [d](double s) { return -d(1.0 - s); };
    r.closed = closed;
    r.winding = -winding;
    r.label = label + "-reversed";
    return r;
}

PathSpec PathSpec::circle(const Vec3& center, double radius, int winding,
                          const std::string& label, double theta0) {
    if (!(radius > 0.0)) throw ConfigurationError("circle path radius must be positive");
    if (winding == 0) throw ConfigurationError("circle path winding must be nonzero");
    PathSpec p;
    const double span = 2.0 * pi * winding;
    p.curve = [center, radius, theta0, span](double s) {
        const double th = theta0 + span * s;
        return Vec3{center.x + radius * std::cos(th), center.y + radius * std::sin(th), center.z};
    };
    p.derivative = [center, radius, theta0, span](double s) {
        const double th = theta0 + span * s;
        return Vec3{-radius * span * std::sin(th), radius * span * std::cos(th), 0.0};
    };
    p.closed = true;
    p.winding = winding;
    p.label = label;
    return p;
}

PathSpec PathSpec::segment(const Vec3& a, const Vec3& b, const std::string& label) {
    PathSpec p;
    const Vec3 d = b - a;
    p.curve = [a, d](double s) { return a + d * s; };
    p.derivative = [d](double) { return d; };
    p.closed = false;
    p.winding = 0;
    p.label = label;
    return p;
}

PathSpec PathSpec::arc(const Vec3& center, double radius, double th0, double th1,
                       const std::string& label) {
    if (!(radius > 0.0)) throw ConfigurationError("arc path radius must be positive");
    PathSpec p;
    const double span = th1 - th0;
    p.curve = [center, radius, th0, span](double s) {
        const double th = th0 + span * s;
        return Vec3{center.x + radius * std::cos(th), center.y + radius * std::sin(th), center.z};
    };
    p.derivative = [center, radius, th0, span](double s) {
        const double th = th0 + span * s;
        return Vec3{-radius * span * std::sin(th), radius * span * std::cos(th), 0.0};
    };
    p.closed = false;
    p.winding = 0;
    p.label = label;
    return p;
}

IntegralResult integrate_line(const std::function<Vec3(const Vec3&)>& field, const PathSpec& path,
                              const QuadratureSpec& spec) {
    if (!path.curve || !path.derivative)
        throw ConfigurationError("path has no curve/derivative functions");
    auto integrand = [&field, &path](double s) {
        return dot(field(path.curve(s)), path.derivative(s));
    };
    return integrate_scalar(integrand, 0.0, 1.0, spec);
}

IntegralResult integrate_volume(const std::function<double(const Vec3&)>& f,
                                const CylinderRegion& region, const QuadratureSpec& spec) {
    if (!(region.radius > 0.0)) throw ConfigurationError("cylinder radius must be positive");
    if (!(region.z_max > region.z_min))
        throw ConfigurationError("cylinder needs z_max > z_min");

    const double z_span = region.z_max - region.z_min;
    const double disc = 0.5 * region.radius * region.radius;  // integral of rho drho

    // Inner passes run at a tolerance budget an order under the outer one so
    // their errors do not dominate the outer estimate.
    QuadratureSpec theta_spec = spec;
    theta_spec.rel_tol = spec.rel_tol / 8.0;
    theta_spec.abs_tol = spec.abs_tol / std::max(1.0, 8.0 * z_span * disc);
    QuadratureSpec rho_spec = spec;
    rho_spec.rel_tol = spec.rel_tol / 4.0;
    rho_spec.abs_tol = spec.abs_tol / std::max(1.0, 4.0 * z_span);

    long inner_evals = 0;
    double max_theta_err = 0.0;
    double max_rho_err = 0.0;
    bool inner_converged = true;

    auto shell = [&](double rho, double z) {
        auto ring = [&](double theta) {
            const Vec3 r{region.axis_point.x + rho * std::cos(theta),
                         region.axis_point.y + rho * std::sin(theta), z};
            return f(r);
        };
        const IntegralResult g = integrate_scalar(ring, 0.0, 2.0 * pi, theta_spec);
        inner_evals += g.evaluations;
        max_theta_err = std::max(max_theta_err, g.error_estimate);
        if (!g.converged) inner_converged = false;
        return g.value;
    };

    auto slab = [&](double z) {
        auto radial = [&](double rho) { return rho * shell(rho, z); };
        const IntegralResult g = integrate_scalar(radial, 0.0, region.radius, rho_spec);
        max_rho_err = std::max(max_rho_err, g.error_estimate);
        if (!g.converged) inner_converged = false;
        return g.value;
    };

    const IntegralResult outer = integrate_scalar(slab, region.z_min, region.z_max, spec);

    IntegralResult res;
    res.value = outer.value;
    res.error_estimate =
        outer.error_estimate + max_rho_err * z_span + max_theta_err * disc * z_span;
    res.evaluations = inner_evals;
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value));
    res.converged = (outer.converged && inner_converged) || res.error_estimate <= tol;
    return res;
}

}  // namespace ablab
