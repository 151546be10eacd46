#include "ablab/scenario.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ablab/errors.hpp"
#include "json.hpp"

namespace ablab {

using nlohmann::json;

PathSpec PathConfig::build() const {
    if (kind == "circle") return PathSpec::circle(center, radius, winding, label, theta0);
    if (kind == "segment") return PathSpec::segment(from, to, label);
    if (kind == "arc") return PathSpec::arc(center, radius, theta0, theta1, label);
    throw ConfigurationError("unknown path kind '" + kind + "'");
}

std::vector<ChiFunction> Scenario::gauges() const {
    std::vector<ChiFunction> out;
    out.reserve(gauge_labels.size());
    for (const auto& label : gauge_labels) out.push_back(chi_from_label(label));
    return out;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw SchemaError(where, what);
}

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* k : allowed) {
            if (item.key() == k) {
                ok = true;
                break;
            }
        }
        if (!ok) fail(where + "/" + item.key(), "unknown key");
    }
}

const json* maybe(const json& j, const char* key) {
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

double as_number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

Vec3 as_vec3(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) fail(where, "expected an array of 3 numbers");
    return {as_number(j[0], where + "/0"), as_number(j[1], where + "/1"),
            as_number(j[2], where + "/2")};
}

void parse_solenoid(const json& j, const std::string& where, Solenoid& s) {
    check_keys(j, where, {"radius", "b0", "center", "model"});
    if (const json* v = maybe(j, "radius")) {
        s.radius = as_number(*v, where + "/radius");
        if (!(s.radius > 0.0)) fail(where + "/radius", "must be > 0");
    }
    if (const json* v = maybe(j, "b0")) s.b0 = as_number(*v, where + "/b0");
    if (const json* v = maybe(j, "center")) s.center = as_vec3(*v, where + "/center");
    if (const json* v = maybe(j, "model")) {
        const std::string mw = where + "/model";
        if (!v->is_object()) fail(mw, "expected an object");
        check_keys(*v, mw, {"length", "rings", "segments"});
        if (const json* x = maybe(*v, "length")) {
            s.finite_model.length = as_number(*x, mw + "/length");
            if (!(s.finite_model.length > 0.0)) fail(mw + "/length", "must be > 0");
        }
        if (const json* x = maybe(*v, "rings")) {
            s.finite_model.n_rings = as_int(*x, mw + "/rings");
            if (s.finite_model.n_rings < 1) fail(mw + "/rings", "must be >= 1");
        }
        if (const json* x = maybe(*v, "segments")) {
            s.finite_model.n_segments = as_int(*x, mw + "/segments");
            if (s.finite_model.n_segments < 3) fail(mw + "/segments", "must be >= 3");
        }
    }
}

void parse_charge(const json& j, const std::string& where, ChargeState& c) {
    check_keys(j, where, {"q", "mass", "position", "velocity"});
    if (const json* v = maybe(j, "q")) c.q = as_number(*v, where + "/q");
    if (const json* v = maybe(j, "mass")) {
        c.mass = as_number(*v, where + "/mass");
        if (!(c.mass > 0.0)) fail(where + "/mass", "must be > 0");
    }
    if (const json* v = maybe(j, "position")) c.position = as_vec3(*v, where + "/position");
    if (const json* v = maybe(j, "velocity")) c.velocity = as_vec3(*v, where + "/velocity");
}

void parse_quadrature(const json& j, const std::string& where, QuadratureSpec& q) {
    check_keys(j, where, {"rel_tol", "abs_tol", "max_subdivisions"});
    if (const json* v = maybe(j, "rel_tol")) {
        q.rel_tol = as_number(*v, where + "/rel_tol");
        if (!(q.rel_tol > 0.0)) fail(where + "/rel_tol", "must be > 0");
    }
    if (const json* v = maybe(j, "abs_tol")) {
        q.abs_tol = as_number(*v, where + "/abs_tol");
        if (q.abs_tol < 0.0) fail(where + "/abs_tol", "must be >= 0");
    }
    if (const json* v = maybe(j, "max_subdivisions")) {
        q.max_subdivisions = as_int(*v, where + "/max_subdivisions");
        if (q.max_subdivisions < 1) fail(where + "/max_subdivisions", "must be >= 1");
    }
}

void parse_path(const json& j, const std::string& where, PathConfig& p) {
    check_keys(j, where,
               {"label", "kind", "center", "radius", "winding", "theta0", "theta1", "from",
                "to"});
    if (const json* v = maybe(j, "label")) {
        p.label = as_string(*v, where + "/label");
        if (p.label.empty()) fail(where + "/label", "must not be empty");
    }
    if (const json* v = maybe(j, "kind")) {
        p.kind = as_string(*v, where + "/kind");
        if (p.kind != "circle" && p.kind != "segment" && p.kind != "arc")
            fail(where + "/kind", "expected 'circle', 'segment' or 'arc'");
    }
    if (const json* v = maybe(j, "center")) p.center = as_vec3(*v, where + "/center");
    if (const json* v = maybe(j, "radius")) {
        p.radius = as_number(*v, where + "/radius");
        if (!(p.radius > 0.0)) fail(where + "/radius", "must be > 0");
    }
    if (const json* v = maybe(j, "winding")) {
        p.winding = as_int(*v, where + "/winding");
        if (p.winding == 0) fail(where + "/winding", "must be nonzero");
    }
    if (const json* v = maybe(j, "theta0")) p.theta0 = as_number(*v, where + "/theta0");
    if (const json* v = maybe(j, "theta1")) p.theta1 = as_number(*v, where + "/theta1");
    if (const json* v = maybe(j, "from")) p.from = as_vec3(*v, where + "/from");
    if (const json* v = maybe(j, "to")) p.to = as_vec3(*v, where + "/to");
}

void parse_energy(const json& j, const std::string& where, EnergyConfig& e) {
    check_keys(j, where, {"z_cut", "tolerance_ladder"});
    if (const json* v = maybe(j, "z_cut")) {
        e.z_cut = as_number(*v, where + "/z_cut");
        if (!(e.z_cut > 0.0)) fail(where + "/z_cut", "must be > 0");
    }
    if (const json* v = maybe(j, "tolerance_ladder")) {
        if (!v->is_array()) fail(where + "/tolerance_ladder", "expected an array of numbers");
        e.tolerance_ladder.clear();
        for (std::size_t i = 0; i < v->size(); ++i) {
            const std::string iw = where + "/tolerance_ladder/" + std::to_string(i);
            const double m = as_number((*v)[i], iw);
            if (!(m > 0.0)) fail(iw, "must be > 0");
            e.tolerance_ladder.push_back(m);
        }
    }
}

void parse_qed(const json& j, const std::string& where, QedConfig& q) {
    check_keys(j, where,
               {"box_length", "index_range", "cutoff_omega", "coupling_scale", "tau",
                "n_pairs_active", "photon_cutoff", "dimension_cap", "e_charge", "e_source",
                "refinements", "exact_coupling_scales"});
    if (const json* v = maybe(j, "box_length")) {
        q.box_length = as_number(*v, where + "/box_length");
        if (!(q.box_length > 0.0)) fail(where + "/box_length", "must be > 0");
    }
    if (const json* v = maybe(j, "index_range")) {
        q.index_range = as_int(*v, where + "/index_range");
        if (q.index_range < 1) fail(where + "/index_range", "must be >= 1");
    }
    if (const json* v = maybe(j, "cutoff_omega")) {
        if (v->is_null()) {
            q.cutoff_omega.reset();
        } else {
            q.cutoff_omega = as_number(*v, where + "/cutoff_omega");
            if (!(*q.cutoff_omega > 0.0)) fail(where + "/cutoff_omega", "must be > 0 or null");
        }
    }
    if (const json* v = maybe(j, "coupling_scale")) {
        q.coupling_scale = as_number(*v, where + "/coupling_scale");
        if (q.coupling_scale < 0.0) fail(where + "/coupling_scale", "must be >= 0");
    }
    if (const json* v = maybe(j, "tau")) {
        q.tau = as_number(*v, where + "/tau");
        if (!(q.tau > 0.0)) fail(where + "/tau", "must be > 0");
    }
    if (const json* v = maybe(j, "n_pairs_active")) {
        q.n_pairs_active = as_int(*v, where + "/n_pairs_active");
        if (q.n_pairs_active < 0) fail(where + "/n_pairs_active", "must be >= 0");
    }
    if (const json* v = maybe(j, "photon_cutoff")) {
        q.photon_cutoff = as_int(*v, where + "/photon_cutoff");
        if (q.photon_cutoff < 0) fail(where + "/photon_cutoff", "must be >= 0");
    }
    if (const json* v = maybe(j, "dimension_cap")) {
        q.dimension_cap = as_int(*v, where + "/dimension_cap");
        if (q.dimension_cap < 4 || q.dimension_cap > 4096)
            fail(where + "/dimension_cap", "must be in [4, 4096]");
    }
    if (const json* v = maybe(j, "e_charge")) q.e_charge = as_number(*v, where + "/e_charge");
    if (const json* v = maybe(j, "e_source")) q.e_source = as_number(*v, where + "/e_source");
    if (const json* v = maybe(j, "refinements")) {
        if (!v->is_array()) fail(where + "/refinements", "expected an array");
        q.refinements.clear();
        for (std::size_t i = 0; i < v->size(); ++i) {
            const std::string iw = where + "/refinements/" + std::to_string(i);
            const json& step = (*v)[i];
            if (!step.is_object()) fail(iw, "expected an object");
            check_keys(step, iw, {"box_length", "index_range"});
            QedRefinementStep r;
            const json* bl = maybe(step, "box_length");
            const json* ir = maybe(step, "index_range");
            if (!bl || !ir) fail(iw, "needs both box_length and index_range");
            r.box_length = as_number(*bl, iw + "/box_length");
            if (!(r.box_length > 0.0)) fail(iw + "/box_length", "must be > 0");
            r.index_range = as_int(*ir, iw + "/index_range");
            if (r.index_range < 1) fail(iw + "/index_range", "must be >= 1");
            q.refinements.push_back(r);
        }
    }
    if (const json* v = maybe(j, "exact_coupling_scales")) {
        if (!v->is_array()) fail(where + "/exact_coupling_scales", "expected an array");
        q.exact_coupling_scales.clear();
        for (std::size_t i = 0; i < v->size(); ++i) {
            const std::string iw = where + "/exact_coupling_scales/" + std::to_string(i);
            const double s = as_number((*v)[i], iw);
            if (!(s > 0.0)) fail(iw, "must be > 0");
            q.exact_coupling_scales.push_back(s);
        }
        if (q.exact_coupling_scales.empty())
            fail(where + "/exact_coupling_scales", "must not be empty");
    }
}

void parse_branch(const json& j, const std::string& where, BranchConfig& b) {
    check_keys(j, where, {"left_position", "right_position", "tau", "coupling_scales"});
    if (const json* v = maybe(j, "left_position"))
        b.left_position = as_vec3(*v, where + "/left_position");
    if (const json* v = maybe(j, "right_position"))
        b.right_position = as_vec3(*v, where + "/right_position");
    if (const json* v = maybe(j, "tau")) {
        b.tau = as_number(*v, where + "/tau");
        if (!(b.tau > 0.0)) fail(where + "/tau", "must be > 0");
    }
    if (const json* v = maybe(j, "coupling_scales")) {
        if (!v->is_array()) fail(where + "/coupling_scales", "expected an array");
        b.coupling_scales.clear();
        for (std::size_t i = 0; i < v->size(); ++i) {
            const std::string iw = where + "/coupling_scales/" + std::to_string(i);
            const double s = as_number((*v)[i], iw);
            if (!(s > 0.0)) fail(iw, "must be > 0");
            b.coupling_scales.push_back(s);
        }
        if (b.coupling_scales.empty()) fail(where + "/coupling_scales", "must not be empty");
    }
}

json parse_override_value(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        // Bare comma lists become arrays of numbers; anything else is a string.
        if (text.find(',') != std::string::npos) {
            try {
                return json::parse("[" + text + "]");
            } catch (const json::parse_error&) {
            }
        }
        return json(text);
    }
}

void apply_override(json& doc, const std::string& entry) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigurationError("override '" + entry + "' is not of the form key=value");
    const std::string key = entry.substr(0, eq);
    const json value = parse_override_value(entry.substr(eq + 1));

    json* node = &doc;
    std::size_t start = 0;
    while (true) {
        const auto dotpos = key.find('.', start);
        const std::string part = key.substr(start, dotpos - start);
        if (part.empty())
            throw ConfigurationError("override key '" + key + "' has an empty segment");
        if (dotpos == std::string::npos) {
            (*node)[part] = value;
            break;
        }
        node = &(*node)[part];
        if (!node->is_object() && !node->is_null())
            throw ConfigurationError("override key '" + key + "' descends into a non-object");
        start = dotpos + 1;
    }
}

}  // namespace

Scenario load_scenario(const std::string& json_text, const std::vector<std::string>& overrides) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError("/", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("/", "top level must be an object");
    for (const auto& o : overrides) apply_override(doc, o);

    check_keys(doc, "", {"scenario", "units", "solenoid", "charge", "quadrature", "path",
                         "paths", "gauges", "energy", "qed", "branch"});

    Scenario sc;
    const json* name = maybe(doc, "scenario");
    if (!name) fail("/scenario", "missing required key");
    sc.name = as_string(*name, "/scenario");
    if (sc.name.empty()) fail("/scenario", "must not be empty");
    for (char c : sc.name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_'))
            fail("/scenario", "name may only contain [A-Za-z0-9_-]");
    }

    if (const json* v = maybe(doc, "units")) {
        sc.units = as_string(*v, "/units");
        if (sc.units != "natural" && sc.units != "si")
            fail("/units", "expected 'natural' or 'si'");
        sc.constants = Constants::from_name(sc.units);
    }
    if (const json* v = maybe(doc, "solenoid")) {
        if (!v->is_object()) fail("/solenoid", "expected an object");
        parse_solenoid(*v, "/solenoid", sc.solenoid);
    }
    if (const json* v = maybe(doc, "charge")) {
        if (!v->is_object()) fail("/charge", "expected an object");
        parse_charge(*v, "/charge", sc.charge);
    }
    if (const json* v = maybe(doc, "quadrature")) {
        if (!v->is_object()) fail("/quadrature", "expected an object");
        parse_quadrature(*v, "/quadrature", sc.quadrature);
    }
    const json* single = maybe(doc, "path");
    const json* many = maybe(doc, "paths");
    if (single && many) fail("/paths", "give either 'path' or 'paths', not both");
    if (single) {
        if (!single->is_object()) fail("/path", "expected an object");
        sc.paths.assign(1, PathConfig{});
        parse_path(*single, "/path", sc.paths[0]);
    } else if (many) {
        if (!many->is_array()) fail("/paths", "expected an array of path objects");
        if (many->empty()) fail("/paths", "must not be empty");
        sc.paths.clear();
        for (std::size_t i = 0; i < many->size(); ++i) {
            const std::string iw = "/paths/" + std::to_string(i);
            if (!(*many)[i].is_object()) fail(iw, "expected an object");
            PathConfig p;
            p.label = "loop" + std::to_string(i);
            parse_path((*many)[i], iw, p);
            sc.paths.push_back(p);
        }
        for (std::size_t i = 0; i < sc.paths.size(); ++i)
            for (std::size_t j = i + 1; j < sc.paths.size(); ++j)
                if (sc.paths[i].label == sc.paths[j].label)
                    fail("/paths/" + std::to_string(j) + "/label",
                         "duplicate label '" + sc.paths[j].label + "'");
    }
    if (const json* v = maybe(doc, "gauges")) {
        if (!v->is_array()) fail("/gauges", "expected an array of chi labels");
        sc.gauge_labels.clear();
        for (std::size_t i = 0; i < v->size(); ++i) {
            const std::string iw = "/gauges/" + std::to_string(i);
            const std::string label = as_string((*v)[i], iw);
            try {
                chi_from_label(label);
            } catch (const ConfigurationError& e) {
                fail(iw, e.what());
            }
            sc.gauge_labels.push_back(label);
        }
    }
    if (const json* v = maybe(doc, "energy")) {
        if (!v->is_object()) fail("/energy", "expected an object");
        parse_energy(*v, "/energy", sc.energy);
    }
    if (const json* v = maybe(doc, "qed")) {
        if (!v->is_object()) fail("/qed", "expected an object");
        parse_qed(*v, "/qed", sc.qed);
    }
    if (const json* v = maybe(doc, "branch")) {
        if (!v->is_object()) fail("/branch", "expected an object");
        parse_branch(*v, "/branch", sc.branch);
    }

    // Cross-field checks.
    if (rho_about(sc.charge.position, sc.solenoid.center) <= sc.solenoid.radius)
        fail("/charge/position", "charge must sit outside the solenoid cross-section");
    return sc;
}

Scenario load_scenario_file(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_scenario(buffer.str(), overrides);
}

std::string scenario_to_json(const Scenario& sc) {
    json doc;
    doc["scenario"] = sc.name;
    doc["units"] = sc.units;
    doc["solenoid"] = {{"radius", sc.solenoid.radius},
                       {"b0", sc.solenoid.b0},
                       {"center", {sc.solenoid.center.x, sc.solenoid.center.y,
                                   sc.solenoid.center.z}},
                       {"model",
                        {{"length", sc.solenoid.finite_model.length},
                         {"rings", sc.solenoid.finite_model.n_rings},
                         {"segments", sc.solenoid.finite_model.n_segments}}}};
    doc["charge"] = {
        {"q", sc.charge.q},
        {"mass", sc.charge.mass},
        {"position", {sc.charge.position.x, sc.charge.position.y, sc.charge.position.z}},
        {"velocity", {sc.charge.velocity.x, sc.charge.velocity.y, sc.charge.velocity.z}}};
    doc["quadrature"] = {{"rel_tol", sc.quadrature.rel_tol},
                         {"abs_tol", sc.quadrature.abs_tol},
                         {"max_subdivisions", sc.quadrature.max_subdivisions}};
    json paths = json::array();
    for (const auto& pc : sc.paths) {
        json path = {{"label", pc.label}, {"kind", pc.kind}};
        if (pc.kind == "circle" || pc.kind == "arc") {
            path["center"] = {pc.center.x, pc.center.y, pc.center.z};
            path["radius"] = pc.radius;
            path["theta0"] = pc.theta0;
            if (pc.kind == "circle") path["winding"] = pc.winding;
            if (pc.kind == "arc") path["theta1"] = pc.theta1;
        } else {
            path["from"] = {pc.from.x, pc.from.y, pc.from.z};
            path["to"] = {pc.to.x, pc.to.y, pc.to.z};
        }
        paths.push_back(path);
    }
    doc["paths"] = paths;
    doc["gauges"] = sc.gauge_labels;
    doc["energy"] = {{"z_cut", sc.energy.z_cut}};
    if (!sc.energy.tolerance_ladder.empty())
        doc["energy"]["tolerance_ladder"] = sc.energy.tolerance_ladder;
    json qed = {{"box_length", sc.qed.box_length},
                {"index_range", sc.qed.index_range},
                {"coupling_scale", sc.qed.coupling_scale},
                {"tau", sc.qed.tau},
                {"n_pairs_active", sc.qed.n_pairs_active},
                {"photon_cutoff", sc.qed.photon_cutoff},
                {"dimension_cap", sc.qed.dimension_cap},
                {"e_charge", sc.qed.e_charge},
                {"e_source", sc.qed.e_source},
                {"exact_coupling_scales", sc.qed.exact_coupling_scales}};
    if (sc.qed.cutoff_omega)
        qed["cutoff_omega"] = *sc.qed.cutoff_omega;
    else
        qed["cutoff_omega"] = nullptr;
    if (!sc.qed.refinements.empty()) {
        json refs = json::array();
        for (const auto& r : sc.qed.refinements)
            refs.push_back({{"box_length", r.box_length}, {"index_range", r.index_range}});
        qed["refinements"] = refs;
    }
    doc["qed"] = qed;
    doc["branch"] = {
        {"left_position",
         {sc.branch.left_position.x, sc.branch.left_position.y, sc.branch.left_position.z}},
        {"right_position",
         {sc.branch.right_position.x, sc.branch.right_position.y, sc.branch.right_position.z}},
        {"tau", sc.branch.tau},
        {"coupling_scales", sc.branch.coupling_scales}};
    return doc.dump(2) + "\n";
}

}  // namespace ablab
