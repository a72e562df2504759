#include "casimir/materials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

std::string to_string(DielectricModel m) {
    switch (m) {
        case DielectricModel::plasma: return "plasma";
        case DielectricModel::drude: return "drude";
        case DielectricModel::tabulated: return "tabulated";
    }
    return "?";
}

DielectricModel model_from_string(const std::string& s) {
    if (s == "plasma") return DielectricModel::plasma;
    if (s == "drude") return DielectricModel::drude;
    if (s == "tabulated") return DielectricModel::tabulated;
    throw ValidationError("unknown dielectric model '" + s + "'");
}

double ev_to_angular_frequency(double energy_ev) {
    if (energy_ev < 0.0)
        throw ValidationError("energy must be >= 0 eV, got " + std::to_string(energy_ev));
    return energy_ev * (phys::elementary_charge / phys::hbar);
}

MaterialRecord MaterialRecord::with_model(DielectricModel m) const {
    MaterialRecord out = *this;
    out.model = m;
    out.validate();
    return out;
}

void MaterialRecord::validate() const {
    const std::string who = "material '" + name + "': ";
    if (name.empty()) throw ValidationError("material record has empty name");
    switch (model) {
        case DielectricModel::plasma:
        case DielectricModel::drude:
            if (!(plasma_frequency > 0.0))
                throw ValidationError(who + "plasma_frequency_eV must be > 0");
            if (relaxation_frequency < 0.0)
                throw ValidationError(who + "relaxation_meV must be >= 0");
            break;
        case DielectricModel::tabulated:
            if (table.size() < 2)
                throw ValidationError(who + "table needs at least 2 points");
            for (std::size_t i = 0; i < table.size(); ++i) {
                if (!(table[i].xi > 0.0))
                    throw ValidationError(who + "table xi values must be > 0");
                if (!(table[i].eps > 1.0))
                    throw ValidationError(who + "table epsilon values must be > 1");
                if (i > 0 && !(table[i].xi > table[i - 1].xi))
                    throw ValidationError(who + "table must be strictly increasing in xi");
            }
            if (plasma_frequency < 0.0)
                throw ValidationError(who + "plasma_frequency_eV must be >= 0");
            break;
    }
}

double permittivity_iw(const MaterialRecord& mat, double xi) {
    if (!(xi > 0.0))
        throw ValidationError("permittivity_iw requires xi > 0, got " + std::to_string(xi));
    switch (mat.model) {
        case DielectricModel::plasma: {
            const double wp = mat.plasma_frequency;
            return 1.0 + wp * wp / (xi * xi);
        }
        case DielectricModel::drude: {
            const double wp = mat.plasma_frequency;
            return 1.0 + wp * wp / (xi * (xi + mat.relaxation_frequency));
        }
        case DielectricModel::tabulated: {
            const auto& t = mat.table;
            if (t.empty())
                throw ValidationError("material '" + mat.name + "': empty permittivity table");
            if (xi <= t.front().xi) return t.front().eps;
            if (xi >= t.back().xi) return t.back().eps;
            const auto it = std::upper_bound(
                t.begin(), t.end(), xi,
                [](double v, const TablePoint& p) { return v < p.xi; });
            const TablePoint& hi = *it;
            const TablePoint& lo = *(it - 1);
            // linear in (log xi, log(eps-1)); keeps eps > 1 and follows the
            // power-law tails of free-electron metals
            const double f = (std::log(xi) - std::log(lo.xi)) /
                             (std::log(hi.xi) - std::log(lo.xi));
            const double le = (1.0 - f) * std::log(lo.eps - 1.0) + f * std::log(hi.eps - 1.0);
            return 1.0 + std::exp(le);
        }
    }
    throw ValidationError("unreachable model");
}

namespace {

// meV -> rad/s
double mev_to_angular_frequency(double mev) {
    if (mev < 0.0)
        throw ValidationError("energy must be >= 0 meV, got " + std::to_string(mev));
    return ev_to_angular_frequency(mev * 1e-3);
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& origin, int line, const std::string& s) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size())
            throw MaterialParseError(origin, line, "trailing characters after number '" + s + "'");
        return v;
    } catch (const MaterialParseError&) {
        throw;
    } catch (const std::exception&) {
        throw MaterialParseError(origin, line, "expected a number, got '" + s + "'");
    }
}

struct PendingRecord {
    MaterialRecord rec;
    bool has_model = false;
    bool has_wp = false;
    bool has_nu = false;
    int start_line = 0;
};

void finish(std::vector<MaterialRecord>& out, PendingRecord& p, const std::string& origin) {
    if (!p.has_model)
        throw MaterialParseError(origin, p.start_line,
                                 "material '" + p.rec.name + "' is missing 'model ='");
    if (p.rec.model == DielectricModel::drude && !p.has_nu)
        throw MaterialParseError(origin, p.start_line,
                                 "drude material '" + p.rec.name + "' is missing 'relaxation_meV ='");
    try {
        p.rec.validate();
    } catch (const ValidationError& e) {
        throw MaterialDbError(origin + ": " + e.what());
    }
    for (const auto& r : out)
        if (r.name == p.rec.name)
            throw MaterialDbError(origin + ": duplicate material name '" + p.rec.name + "'");
    out.push_back(std::move(p.rec));
}

}  // namespace

std::vector<MaterialRecord> parse_material_db(std::istream& in, const std::string& origin) {
    std::vector<MaterialRecord> out;
    PendingRecord cur;
    bool in_record = false;
    bool in_table = false;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const bool indented = !raw.empty() && (raw[0] == ' ' || raw[0] == '\t');
        const std::string line = strip(raw);
        if (line.empty()) continue;

        if (!indented) {
            // only 'material <name>' may start at column 0
            std::istringstream ls(line);
            std::string kw, name, extra;
            ls >> kw >> name;
            if (kw != "material" || name.empty() || (ls >> extra))
                throw MaterialParseError(origin, lineno, "expected 'material <name>'");
            if (in_record) finish(out, cur, origin);
            cur = PendingRecord{};
            cur.rec.name = name;
            cur.start_line = lineno;
            in_record = true;
            in_table = false;
            continue;
        }

        if (!in_record)
            throw MaterialParseError(origin, lineno, "indented line outside a material record");

        const std::size_t eq = line.find('=');
        if (eq != std::string::npos) {
            in_table = false;
            const std::string key = strip(line.substr(0, eq));
            const std::string val = strip(line.substr(eq + 1));
            if (key == "model") {
                try {
                    cur.rec.model = model_from_string(val);
                } catch (const ValidationError& e) {
                    throw MaterialParseError(origin, lineno, e.what());
                }
                cur.has_model = true;
            } else if (key == "plasma_frequency_eV") {
                const double ev = parse_number(origin, lineno, val);
                if (ev < 0.0) {
                    throw MaterialDbError(origin + ": material '" + cur.rec.name +
                                          "': plasma_frequency_eV must be > 0");
                }
                cur.rec.plasma_frequency = ev_to_angular_frequency(ev);
                cur.has_wp = true;
            } else if (key == "relaxation_meV") {
                const double mev = parse_number(origin, lineno, val);
                if (mev < 0.0) {
                    throw MaterialDbError(origin + ": material '" + cur.rec.name +
                                          "': relaxation_meV must be >= 0");
                }
                cur.rec.relaxation_frequency = mev_to_angular_frequency(mev);
                cur.has_nu = true;
            } else {
                throw MaterialParseError(origin, lineno, "unknown key '" + key + "'");
            }
            continue;
        }

        if (line == "table:") {
            in_table = true;
            continue;
        }

        if (in_table) {
            std::istringstream ls(line);
            std::string sxi, seps, extra;
            ls >> sxi >> seps;
            if (seps.empty() || (ls >> extra))
                throw MaterialParseError(origin, lineno, "expected '<xi_rad_per_s> <epsilon>'");
            TablePoint pt{parse_number(origin, lineno, sxi), parse_number(origin, lineno, seps)};
            cur.rec.table.push_back(pt);
            continue;
        }

        throw MaterialParseError(origin, lineno, "expected 'key = value' or 'table:'");
    }
    if (in_record) finish(out, cur, origin);
    return out;
}

std::vector<MaterialRecord> load_material_db(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MaterialDbError("cannot open material database '" + path + "'");
    return parse_material_db(in, path);
}

const std::vector<MaterialRecord>& default_materials() {
    static const std::vector<MaterialRecord> db = [] {
        MaterialRecord au;
        au.name = "Au";
        au.model = DielectricModel::drude;
        au.plasma_frequency = ev_to_angular_frequency(9.0);
        au.relaxation_frequency = ev_to_angular_frequency(0.035);
        au.validate();
        return std::vector<MaterialRecord>{au};
    }();
    return db;
}

const MaterialRecord& find_material(const std::vector<MaterialRecord>& db,
                                    const std::string& name) {
    for (const auto& m : db)
        if (m.name == name) return m;
    throw MaterialDbError("material '" + name + "' not found in database");
}

}  // namespace casimir
